#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latstack/chain_count.hpp"
#include "latstack/poset.hpp"

namespace latstack {

inline constexpr const char* kDocumentVersion = "1";

struct PosetDocument {
  std::string version = kDocumentVersion;
  std::size_t size = 0;
  std::vector<std::string> labels;
  std::vector<std::pair<Id, Id>> covers;
  std::map<std::string, std::string> meta;
};

PosetDocument to_document(const Poset& p, std::map<std::string, std::string> meta = {});
/// Transitive closure of the covers. CycleError on cyclic covers, ParseError
/// on out-of-range ids or a label count that does not match.
Poset from_document(const PosetDocument& doc);

std::string document_to_json(const PosetDocument& doc);
/// ParseError names the offending field, or the line for malformed JSON.
PosetDocument document_from_json(std::string_view text);

std::string write_poset(const Poset& p, std::map<std::string, std::string> meta = {});
Poset read_poset(std::string_view text);

/// One `x -> y` edge per cover, ids ascending.
std::string export_dot(const Poset& p);

enum class GridFormat { table, bfile, csv, json };

GridFormat parse_grid_format(const std::string& s);  // ParseError
std::string render_grid(const SequenceGrid& g, GridFormat format);

inline constexpr const char* kOverBudget = "OVER_BUDGET";

}  // namespace latstack
