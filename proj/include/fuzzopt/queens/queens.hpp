#pragma once

#include <vector>

#include "fuzzopt/error.hpp"
#include "fuzzopt/util/rng.hpp"

namespace fuzzopt::queens {

/// n-queens board with one queen per column. Attack counters per row and
/// diagonal keep conflict queries O(1); boards are small value types.
class QueensBoard {
 public:
  explicit QueensBoard(int n);  // all queens on row 0
  static QueensBoard random(int n, Rng& rng);

  int size() const { return n_; }
  int row(int col) const { return rows_[static_cast<std::size_t>(col)]; }
  void move(int col, int row);

  /// Number of attacking pairs (same row or diagonal).
  long long conflicts() const { return pairs_; }

  /// Attacks involving the queen of `col`.
  int column_attacks(int col) const;

  /// Attacks the queen of `col` would suffer on `candidate_row`, ignoring
  /// its current placement.
  int attacks_if(int col, int candidate_row) const;

  friend bool operator==(const QueensBoard& a, const QueensBoard& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void add(int col, int row);
  void remove(int col);

  int n_ = 0;
  std::vector<int> rows_;
  std::vector<int> row_cnt_, diag_a_, diag_b_;
  long long pairs_ = 0;
};

inline long long queens_conflicts(const QueensBoard& b) { return b.conflicts(); }

/// Moves the queen of `col` to a row minimizing the resulting conflicts
/// (ties break toward the lowest row). May keep the current row.
QueensBoard queens_repair(const QueensBoard& b, int col);

}  // namespace fuzzopt::queens
