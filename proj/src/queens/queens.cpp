#include "fuzzopt/queens/queens.hpp"

namespace fuzzopt::queens {

QueensBoard::QueensBoard(int n) : n_(n) {
  if (n < 1) throw Error("board size must be positive");
  rows_.assign(static_cast<std::size_t>(n), 0);
  row_cnt_.assign(static_cast<std::size_t>(n), 0);
  diag_a_.assign(static_cast<std::size_t>(2 * n - 1), 0);
  diag_b_.assign(static_cast<std::size_t>(2 * n - 1), 0);
  for (int c = 0; c < n; ++c) {
    rows_[static_cast<std::size_t>(c)] = -1;
    add(c, 0);
  }
}

QueensBoard QueensBoard::random(int n, Rng& rng) {
  QueensBoard b(n);
  for (int c = 0; c < n; ++c) b.move(c, rng.below_int(n));
  return b;
}

void QueensBoard::add(int col, int row) {
  const auto r = static_cast<std::size_t>(row);
  const auto da = static_cast<std::size_t>(col - row + n_ - 1);
  const auto db = static_cast<std::size_t>(col + row);
  pairs_ += row_cnt_[r] + diag_a_[da] + diag_b_[db];
  ++row_cnt_[r];
  ++diag_a_[da];
  ++diag_b_[db];
  rows_[static_cast<std::size_t>(col)] = row;
}

void QueensBoard::remove(int col) {
  const int row = rows_[static_cast<std::size_t>(col)];
  const auto r = static_cast<std::size_t>(row);
  const auto da = static_cast<std::size_t>(col - row + n_ - 1);
  const auto db = static_cast<std::size_t>(col + row);
  --row_cnt_[r];
  --diag_a_[da];
  --diag_b_[db];
  pairs_ -= row_cnt_[r] + diag_a_[da] + diag_b_[db];
  rows_[static_cast<std::size_t>(col)] = -1;
}

void QueensBoard::move(int col, int row) {
  if (rows_[static_cast<std::size_t>(col)] == row) return;
  remove(col);
  add(col, row);
}

int QueensBoard::column_attacks(int col) const {
  const int row = rows_[static_cast<std::size_t>(col)];
  return row_cnt_[static_cast<std::size_t>(row)] - 1 +
         diag_a_[static_cast<std::size_t>(col - row + n_ - 1)] - 1 +
         diag_b_[static_cast<std::size_t>(col + row)] - 1;
}

int QueensBoard::attacks_if(int col, int candidate_row) const {
  const int cur = rows_[static_cast<std::size_t>(col)];
  int cnt = row_cnt_[static_cast<std::size_t>(candidate_row)] +
            diag_a_[static_cast<std::size_t>(col - candidate_row + n_ - 1)] +
            diag_b_[static_cast<std::size_t>(col + candidate_row)];
  if (candidate_row == cur) cnt -= 3;  // don't count the queen itself
  return cnt;
}

QueensBoard queens_repair(const QueensBoard& b, int col) {
  QueensBoard out = b;
  int best_row = 0;
  int best = out.attacks_if(col, 0);
  for (int r = 1; r < b.size(); ++r) {
    const int a = out.attacks_if(col, r);
    if (a < best) {
      best = a;
      best_row = r;
    }
  }
  out.move(col, best_row);
  return out;
}

}  // namespace fuzzopt::queens
