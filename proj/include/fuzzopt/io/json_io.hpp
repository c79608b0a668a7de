#pragma once

#include <string>

#include "fuzzopt/consist/consistency.hpp"
#include "fuzzopt/kb.hpp"
#include "fuzzopt/shift/plan.hpp"

namespace fuzzopt::io {

struct ParseError : Error {
  using Error::Error;
};

// Knowledge base documents (see docs/formats.md for the schema).
std::string kb_to_json(const KnowledgeBase& kb);
KnowledgeBase kb_from_json(const std::string& text);

/// Canonical single-line serialization of the decision-relevant content,
/// used for configuration digests.
std::string kb_canonical(const KnowledgeBase& kb);

std::string plan_to_json(const shift::OperationPlan& p);
shift::OperationPlan plan_from_json(const std::string& text);

std::string instantiation_to_json(const dyneval::Instantiation& inst);
dyneval::Instantiation instantiation_from_json(const std::string& text);

std::string pair_store_to_json(const consist::PairStore& store);
consist::PairStore pair_store_from_json(const std::string& text);

consist::ConfigDelta config_delta_from_json(const std::string& text);

std::string consistency_report_to_json(const consist::ConsistencyReport& report);
std::string what_if_report_to_json(const consist::WhatIfReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace fuzzopt::io
