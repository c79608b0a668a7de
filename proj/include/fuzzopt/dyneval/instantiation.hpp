#pragma once

#include <map>
#include <string>
#include <vector>

#include "fuzzopt/position.hpp"

namespace fuzzopt::dyneval {

/// Attribute value of a unit or object, optionally carrying the positions a
/// repair should target to improve it (e.g. the days of the worst week
/// pair). Plain data attributes leave `targets` empty.
struct AttrValue {
  double value = 0.0;
  std::vector<Position> targets;
};

using Attrs = std::map<std::string, AttrValue>;

struct ObjectData {
  std::string name;
  Position pos;
  Attrs attrs;

  bool has(const std::string& attr) const { return attrs.count(attr) > 0; }
};

/// One node of the domain hierarchy (an aggregate, group, machine, ...)
/// holding a run of objects and its own derived attributes.
struct UnitData {
  std::string name;
  std::string kind;
  std::vector<Position> footprint;  // every position whose change can affect this unit
  Attrs attrs;
  std::vector<ObjectData> objects;
};

/// A complete problem instantiation: everything the evaluation tree needs to
/// score a solution, independent of how the domain stores it internally.
struct Instantiation {
  std::string name;
  std::vector<UnitData> units;
};

}  // namespace fuzzopt::dyneval
