#include "latstack/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace latstack {

using json = nlohmann::ordered_json;

PosetDocument to_document(const Poset& p, std::map<std::string, std::string> meta) {
  PosetDocument doc;
  doc.size = p.size();
  doc.labels = p.labels();
  doc.covers = covers(p).edges();
  doc.meta = std::move(meta);
  return doc;
}

Poset from_document(const PosetDocument& doc) {
  if (!doc.labels.empty() && doc.labels.size() != doc.size) {
    throw ParseError("labels", "expected " + std::to_string(doc.size) + " labels, got " +
                                   std::to_string(doc.labels.size()));
  }
  for (std::size_t e = 0; e < doc.covers.size(); ++e) {
    const auto [x, y] = doc.covers[e];
    if (x >= doc.size || y >= doc.size) {
      throw ParseError("covers[" + std::to_string(e) + "]", "id out of range");
    }
  }
  if (doc.size > kMaxPosetElements) throw ParseError("size", "exceeds the dense-order limit");
  return Poset::from_relation(doc.size, doc.covers, doc.labels);
}

std::string document_to_json(const PosetDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["size"] = doc.size;
  j["labels"] = doc.labels;
  json covers = json::array();
  for (auto [x, y] : doc.covers) covers.push_back({x, y});
  j["covers"] = std::move(covers);
  json meta = json::object();
  for (const auto& [key, value] : doc.meta) meta[key] = value;
  j["meta"] = std::move(meta);
  return j.dump(2) + "\n";
}

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(name, "missing");
  return *it;
}

}  // namespace

PosetDocument document_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("line " + std::to_string(line_of(text, e.byte)), e.what());
  }
  if (!j.is_object()) throw ParseError("document", "expected an object");
  for (const auto& [key, _] : j.items()) {
    if (key != "version" && key != "size" && key != "labels" && key != "covers" && key != "meta") {
      throw ParseError(key, "unknown field");
    }
  }

  PosetDocument doc;
  const json& version = field(j, "version");
  if (!version.is_string()) throw ParseError("version", "expected a string");
  doc.version = version.get<std::string>();
  if (doc.version != kDocumentVersion) throw ParseError("version", "unsupported version " + doc.version);

  const json& size = field(j, "size");
  if (!size.is_number_unsigned()) throw ParseError("size", "expected a nonnegative integer");
  doc.size = size.get<std::size_t>();

  const json& labels = field(j, "labels");
  if (!labels.is_array()) throw ParseError("labels", "expected an array");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) throw ParseError("labels[" + std::to_string(i) + "]", "expected a string");
    doc.labels.push_back(labels[i].get<std::string>());
  }

  const json& covers = field(j, "covers");
  if (!covers.is_array()) throw ParseError("covers", "expected an array");
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const json& e = covers[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ParseError("covers[" + std::to_string(i) + "]", "expected a pair of nonnegative integers");
    }
    doc.covers.emplace_back(e[0].get<Id>(), e[1].get<Id>());
  }

  const json& meta = field(j, "meta");
  if (!meta.is_object()) throw ParseError("meta", "expected an object");
  for (const auto& [key, value] : meta.items()) {
    doc.meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
  }
  return doc;
}

std::string write_poset(const Poset& p, std::map<std::string, std::string> meta) {
  return document_to_json(to_document(p, std::move(meta)));
}

Poset read_poset(std::string_view text) { return from_document(document_from_json(text)); }

std::string export_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (Id x = 0; x < p.size(); ++x) out << "  " << x << " [label=" << json(p.name(x)).dump() << "];\n";
  for (auto [x, y] : covers(p).edges()) out << "  " << x << " -> " << y << ";\n";
  out << "}\n";
  return out.str();
}

GridFormat parse_grid_format(const std::string& s) {
  if (s == "table") return GridFormat::table;
  if (s == "bfile") return GridFormat::bfile;
  if (s == "csv") return GridFormat::csv;
  if (s == "json") return GridFormat::json;
  throw ParseError("format", "expected table, bfile, csv or json, got '" + s + "'");
}

namespace {

const char* block_name(Axis a) { return a == Axis::column ? "m" : "n"; }
const char* inner_name(Axis a) { return a == Axis::column ? "n" : "m"; }

std::string cell_text(const std::optional<ChainCount>& c) { return c ? c->get_str() : kOverBudget; }

std::string render_table(const SequenceGrid& g) {
  std::ostringstream out;
  const Range& inner = g.inner_range();
  out << "      " << inner_name(g.axis) << "=";
  for (std::size_t v = inner.lo; v <= inner.hi; ++v) out << (v == inner.lo ? "" : ",") << v;
  out << "\n";
  bool have_block = false;
  std::size_t block = 0;
  for (const GridRow& row : g.rows) {
    if (!have_block || row.block != block) {
      out << block_name(g.axis) << "=" << row.block << ":\n";
      block = row.block;
      have_block = true;
    }
    std::string k = "k=" + std::to_string(row.k);
    out << k << std::string(k.size() < 6 ? 6 - k.size() : 1, ' ');
    for (std::size_t c = 0; c < row.cells.size(); ++c) out << (c ? ", " : "") << cell_text(row.cells[c]);
    out << "\n";
  }
  return out.str();
}

std::string render_bfile(const SequenceGrid& g) {
  std::ostringstream out;
  const bool several = g.rows.size() > 1;
  for (const GridRow& row : g.rows) {
    if (several) out << "# " << block_name(g.axis) << "=" << row.block << " k=" << row.k << "\n";
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      if (!row.cells[c]) break;  // b-files have no gaps
      out << g.inner_range().lo + c << " " << row.cells[c]->get_str() << "\n";
    }
  }
  return out.str();
}

std::string render_csv(const SequenceGrid& g) {
  std::ostringstream out;
  out << "axis,k,n,m,count\n";
  for (const GridRow& row : g.rows) {
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      const std::size_t v = g.inner_range().lo + c;
      const std::size_t n = g.axis == Axis::column ? v : row.block;
      const std::size_t m = g.axis == Axis::column ? row.block : v;
      out << to_string(g.axis) << "," << row.k << "," << n << "," << m << "," << cell_text(row.cells[c])
          << "\n";
    }
  }
  return out.str();
}

std::string render_json(const SequenceGrid& g) {
  json j;
  j["axis"] = to_string(g.axis);
  j["k"] = {g.k.lo, g.k.hi};
  j["n"] = {g.n.lo, g.n.hi};
  j["m"] = {g.m.lo, g.m.hi};
  json rows = json::array();
  for (const GridRow& row : g.rows) {
    json r;
    r[block_name(g.axis)] = row.block;
    r["k"] = row.k;
    json values = json::array();
    for (const auto& c : row.cells) values.push_back(c ? json(c->get_str()) : json(nullptr));
    r["values"] = std::move(values);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace

std::string render_grid(const SequenceGrid& g, GridFormat format) {
  switch (format) {
    case GridFormat::table: return render_table(g);
    case GridFormat::bfile: return render_bfile(g);
    case GridFormat::csv: return render_csv(g);
    case GridFormat::json: return render_json(g);
  }
  return {};
}

}  // namespace latstack
