#include "fuzzopt/shift/repairs.hpp"

#include <algorithm>

namespace fuzzopt::shift {

std::string to_string(RepairOp op) {
  switch (op) {
    case RepairOp::MonWed: return "mon_wed";
    case RepairOp::MonWedThuFri: return "mon_wed_thu_fri";
    case RepairOp::WeekendTd: return "weekend_td";
    case RepairOp::WeekendSw: return "weekend_sw";
  }
  return "?";
}

RepairOp repair_op_from_string(const std::string& s) {
  if (s == "mon_wed") return RepairOp::MonWed;
  if (s == "mon_wed_thu_fri") return RepairOp::MonWedThuFri;
  if (s == "weekend_td") return RepairOp::WeekendTd;
  if (s == "weekend_sw") return RepairOp::WeekendSw;
  throw Error("unknown repair operator: '" + s + "'");
}

namespace {

std::vector<int> days_where(bool (*pred)(int)) {
  std::vector<int> out;
  for (int d = 0; d < kCycleDays; ++d) {
    if (pred(d)) out.push_back(d);
  }
  return out;
}

std::vector<int> rotated(std::vector<int> v, int offset) {
  if (v.empty()) return v;
  const int n = static_cast<int>(v.size());
  std::rotate(v.begin(), v.begin() + ((offset % n) + n) % n, v.end());
  return v;
}

bool has_code(const Schedule& s, int day, int sub, ShiftCode code) {
  const auto& a = s.at(day, sub);
  return a && a->shift == code;
}

/// Relocates one subgroup's assignment from day `from` to its own free day
/// `to`. The duration travels with the assignment, so subgroup hours are
/// untouched.
void relocate(Schedule& s, int sub, int from, int to) {
  Assignment a = *s.at(from, sub);
  s.clear(from, sub);
  s.set(to, sub, a);
}

std::string key_of(RepairOp op, std::initializer_list<int> parts) {
  std::string k = to_string(op);
  for (int p : parts) k += ":" + std::to_string(p);
  return k;
}

std::optional<RepairOutcome> repair_mon_wed(const Schedule& s, Position pos,
                                            const RepairStart& start) {
  const int g = pos.unit, a = pos.slot;
  if (!is_mon_wed(a) || !has_code(s, a, g, ShiftCode::TD)) return std::nullopt;
  std::vector<int> days = days_where(is_mon_wed);
  std::erase(days, a);
  for (int db : rotated(days, start.day_offset)) {
    if (s.at(db, g)) continue;  // own free slot needed at the destination
    std::vector<int> partners;
    for (int h = 0; h < kSubgroups; ++h) {
      if (h != g) partners.push_back(h);
    }
    for (int h : rotated(partners, start.unit_offset)) {
      if (s.at(a, h) || !has_code(s, db, h, ShiftCode::TD)) continue;
      Schedule next = s;
      relocate(next, g, a, db);
      relocate(next, h, db, a);
      return RepairOutcome{std::move(next),
                           {{g, a}, {g, db}, {h, a}, {h, db}},
                           key_of(RepairOp::MonWed, {g, a, db, h})};
    }
  }
  return std::nullopt;
}

/// Exchange between the Mon-Wed cluster and a Thu/Fri group day. The group
/// working the Thu/Fri day hands it over to the free group; to keep per-day
/// coverage and everyone's hours intact, each subgroup of the leaving group
/// picks up one Mon-Wed day shift of the arriving group, on the very days
/// the arriving subgroups drop them.
std::optional<RepairOutcome> repair_mon_wed_thu_fri(const Schedule& s, Position pos,
                                                    const RepairStart& start) {
  const int g = pos.unit, a = pos.slot;
  const std::vector<int> mw_days = days_where(is_mon_wed);

  if (is_mon_wed(a)) {
    // g's group takes over a Thu/Fri day; the group working it covers the
    // Mon-Wed shifts of g and its partner.
    if (!has_code(s, a, g, ShiftCode::TD)) return std::nullopt;
    const int g2 = Schedule::partner_of(g);
    for (int db : rotated(days_where(is_thu_fri), start.day_offset)) {
      if (s.at(db, g) || s.at(db, g2)) continue;
      std::vector<int> combos;  // working group index * 2 + pairing
      for (int grp = 0; grp < kGroups; ++grp) {
        if (has_code(s, db, 2 * grp, ShiftCode::TD) && has_code(s, db, 2 * grp + 1, ShiftCode::TD)) {
          combos.push_back(grp * 2);
          combos.push_back(grp * 2 + 1);
        }
      }
      for (int combo : rotated(combos, start.unit_offset)) {
        const int grp = combo / 2;
        const int h1 = 2 * grp + combo % 2;       // covers day a
        const int h2 = Schedule::partner_of(h1);  // covers g2's shed day
        if (s.at(a, h1)) continue;
        for (int x2 : rotated(mw_days, start.aux_offset)) {
          if (!has_code(s, x2, g2, ShiftCode::TD) || s.at(x2, h2)) continue;
          Schedule next = s;
          relocate(next, g, a, db);
          relocate(next, g2, x2, db);
          relocate(next, h1, db, a);
          relocate(next, h2, db, x2);
          return RepairOutcome{std::move(next),
                               {{g, a}, {g, db}, {g2, x2}, {g2, db}, {h1, db}, {h1, a},
                                {h2, db}, {h2, x2}},
                               key_of(RepairOp::MonWedThuFri, {g, a, db, h1, x2})};
        }
      }
    }
    return std::nullopt;
  }

  if (is_thu_fri(a)) {
    // g's group leaves the Thu/Fri day; the free group takes it over and g's
    // subgroups inherit one Mon-Wed shift each from the arriving subgroups.
    if (!has_code(s, a, g, ShiftCode::TD)) return std::nullopt;
    const int g2 = Schedule::partner_of(g);
    if (!has_code(s, a, g2, ShiftCode::TD)) return std::nullopt;
    int free_grp = -1;
    for (int grp = 0; grp < kGroups; ++grp) {
      if (!s.at(a, 2 * grp) && !s.at(a, 2 * grp + 1)) free_grp = grp;
    }
    if (free_grp < 0) return std::nullopt;
    for (int pairing : rotated({0, 1}, start.unit_offset)) {
      const int h1 = 2 * free_grp + pairing;     // takes over from g
      const int h2 = Schedule::partner_of(h1);   // takes over from g2
      for (int x1 : rotated(mw_days, start.day_offset)) {
        if (!has_code(s, x1, h1, ShiftCode::TD) || s.at(x1, g)) continue;
        for (int x2 : rotated(mw_days, start.aux_offset)) {
          if (!has_code(s, x2, h2, ShiftCode::TD) || s.at(x2, g2)) continue;
          Schedule next = s;
          relocate(next, h1, x1, a);
          relocate(next, h2, x2, a);
          relocate(next, g, a, x1);
          relocate(next, g2, a, x2);
          return RepairOutcome{std::move(next),
                               {{h1, x1}, {h1, a}, {h2, x2}, {h2, a}, {g, a}, {g, x1},
                                {g2, a}, {g2, x2}},
                               key_of(RepairOp::MonWedThuFri, {g, a, h1, x1, x2})};
        }
      }
    }
    return std::nullopt;
  }

  return std::nullopt;
}

std::optional<RepairOutcome> repair_weekend(const Schedule& s, const OperationPlan& p,
                                            Position pos, const RepairStart& start,
                                            ShiftCode code, RepairOp op) {
  const int g = pos.unit, a = pos.slot;
  if (!is_weekend(a) || !has_code(s, a, g, code)) return std::nullopt;
  std::vector<int> days;
  for (int d = 0; d < kCycleDays; ++d) {
    if (d != a && is_weekend(d) && p.allows(d, code)) days.push_back(d);
  }
  for (int db : rotated(days, start.day_offset)) {
    if (s.at(db, g)) continue;
    std::vector<int> partners;
    for (int h = 0; h < kSubgroups; ++h) {
      if (h != g) partners.push_back(h);
    }
    for (int h : rotated(partners, start.unit_offset)) {
      if (s.at(a, h) || !has_code(s, db, h, code)) continue;
      Schedule next = s;
      relocate(next, g, a, db);
      relocate(next, h, db, a);
      return RepairOutcome{std::move(next), {{g, a}, {g, db}, {h, a}, {h, db}},
                           key_of(op, {g, a, db, h})};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<RepairOutcome> apply_repair(const Schedule& s, const OperationPlan& p, RepairOp op,
                                          Position pos, const RepairStart& start) {
  if (pos.unit < 0 || pos.unit >= kSubgroups || pos.slot < 0 || pos.slot >= kCycleDays)
    throw Error("repair position out of range");
  switch (op) {
    case RepairOp::MonWed: return repair_mon_wed(s, pos, start);
    case RepairOp::MonWedThuFri: return repair_mon_wed_thu_fri(s, pos, start);
    case RepairOp::WeekendTd: return repair_weekend(s, p, pos, start, ShiftCode::TDWE, RepairOp::WeekendTd);
    case RepairOp::WeekendSw: return repair_weekend(s, p, pos, start, ShiftCode::SWWE, RepairOp::WeekendSw);
  }
  return std::nullopt;
}

std::vector<RepairOp> repair_ops_for(const Schedule& s, Position pos) {
  const auto& a = s.at(pos.slot, pos.unit);
  if (!a) return {};
  if (a->shift == ShiftCode::TD) {
    if (is_mon_wed(pos.slot)) return {RepairOp::MonWed, RepairOp::MonWedThuFri};
    if (is_thu_fri(pos.slot)) return {RepairOp::MonWedThuFri};
    return {};
  }
  if (a->shift == ShiftCode::TDWE) return {RepairOp::WeekendTd};
  if (a->shift == ShiftCode::SWWE) return {RepairOp::WeekendSw};
  return {};
}

}  // namespace fuzzopt::shift
