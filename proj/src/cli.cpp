#include "latstack/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "latstack/bijections.hpp"
#include "latstack/io.hpp"
#include "latstack/verify.hpp"

namespace latstack {

namespace {

std::size_t parse_size(std::string_view s, const std::string& field) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(field, "expected a nonnegative integer, got '" + std::string(s) + "'");
  }
  return v;
}

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string axis = "column";
  std::string k = "0", n = "0", m = "0";
  std::string format;
  std::string out;
  std::string input;
  std::string suite = "all";
  std::string family = "chains";
  std::string via = "sublattice";
  std::size_t budget = 0;
  std::size_t cap = 5000;
  unsigned threads = 1;
};

std::size_t single(const std::string& text, const std::string& field) {
  const Range r = parse_range(text, field);
  if (r.lo != r.hi) throw UsageError("--" + field + " takes a single value here");
  return r.lo;
}

struct Target {
  Axis axis;
  std::size_t k, n, m;
};

Target target_of(const Options& o) {
  return {parse_axis(o.axis), single(o.k, "k"), single(o.n, "n"), single(o.m, "m")};
}

std::map<std::string, std::string> meta_of(const Target& t) {
  return {{"axis", to_string(t.axis)},
          {"k", std::to_string(t.k)},
          {"n", std::to_string(t.n)},
          {"m", std::to_string(t.m)}};
}

PosetPtr build_target(const Target& t, const std::string& via, std::size_t budget) {
  if (via == "stacking") {
    return t.axis == Axis::column ? stacked_column(t.k, t.n, t.m, budget)
                                  : stacked_row(t.n, t.k, t.m, budget);
  }
  if (via != "sublattice") throw UsageError("--via must be sublattice or stacking");
  return t.axis == Axis::column ? star_sublattice(t.k, t.n, t.m, budget).poset
                                : row_star_sublattice(t.n, t.k, t.m, budget).poset;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string render_poset(const Poset& p, const std::string& format,
                         std::map<std::string, std::string> meta) {
  if (format == "json") return write_poset(p, std::move(meta));
  if (format == "dot") return export_dot(p);
  throw UsageError("poset output format must be json or dot");
}

std::string chain_text(const Poset& p, const Chain& c) {
  std::string s;
  for (Id x : c) s += (s.empty() ? "" : " < ") + p.name(x);
  return s;
}

std::string run_enumerate(const Options& o, std::size_t budget) {
  std::ostringstream out;
  if (o.family == "histories") {
    const std::size_t n = single(o.n, "n");
    const auto histories = enumerate_histories(n);
    if (histories.size() > o.cap) throw CapExceededError(std::to_string(histories.size()), o.cap);
    for (const auto& h : histories) {
      out << (h.path.empty() ? "-" : h.path) << " [";
      for (std::size_t i = 0; i < h.choices.size(); ++i) out << (i ? "," : "") << h.choices[i];
      out << "] " << to_string(history_to_involution(h)) << "\n";
    }
    return out.str();
  }

  const Target t = target_of(o);
  if (o.family == "chains") {
    const PosetPtr p = build_target(t, o.via, budget);
    for (const Chain& c : enumerate_maximal_chains(*p, o.cap)) out << chain_text(*p, c) << "\n";
    return out.str();
  }
  if (o.family == "words") {
    if (t.axis != Axis::column || t.m != 1) throw UsageError("words need --axis column --m 1");
    const auto l = star_sublattice(t.k, t.n, 1, budget);
    for (const Chain& c : enumerate_maximal_chains(*l.poset, o.cap)) {
      out << to_string(chain_to_word(tuples_of(l, c), t.k, t.n)) << "\n";
    }
    return out.str();
  }
  if (o.family == "partitions") {
    if (t.axis != Axis::column || t.k != 1) throw UsageError("partitions need --axis column --k 1");
    const auto l = star_sublattice(1, t.n, t.m, budget);
    for (const Chain& c : enumerate_maximal_chains(*l.poset, o.cap)) {
      out << to_string(chain_to_partition(tuples_of(l, c), t.n, t.m + 1)) << "\n";
    }
    return out.str();
  }
  if (o.family == "walks") {
    if (t.axis != Axis::row || t.k != 1) throw UsageError("walks need --axis row --k 1");
    const auto l = row_star_sublattice(t.n, 1, t.m, budget);
    for (const Chain& c : enumerate_maximal_chains(*l.poset, o.cap)) {
      out << to_string(chain_to_walk(tuples_of(l, c), t.n, t.m)) << "\n";
    }
    return out.str();
  }
  throw UsageError("--family must be chains, words, partitions, walks or histories");
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot write " + o.out);
  f << text;
}

}  // namespace

Range parse_range(const std::string& text, const std::string& field) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t v = parse_size(text, field);
    return {v, v};
  }
  Range r{parse_size(std::string_view(text).substr(0, dots), field),
          parse_size(std::string_view(text).substr(dots + 2), field)};
  if (r.lo > r.hi) throw ParseError(field, "empty range " + text);
  return r;
}

std::size_t budget_from_env() {
  if (const char* env = std::getenv("LATSTACK_BUDGET")) {
    try {
      const std::size_t v = parse_size(env, "LATSTACK_BUDGET");
      if (v > 0) return v;
    } catch (const ParseError&) {
    }
  }
  return kDefaultBudget;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stacked lattices of chains: construction, maximal-chain counts and checks", "latstack"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&](CLI::App* sub, bool ranges) {
    sub->add_option("--axis", o.axis, "column or row")->check(CLI::IsMember({"column", "row"}));
    const char* shape = ranges ? "value or a..b range" : "value";
    sub->add_option("--k", o.k, std::string("iteration depth, ") + shape);
    sub->add_option("--n", o.n, std::string("n, ") + shape);
    sub->add_option("--m", o.m, std::string("m, ") + shape);
    sub->add_option("--budget", o.budget, "ambient tuple budget");
    sub->add_option("--out", o.out, "write output to a file");
  };

  auto* build = app.add_subcommand("build", "construct a lattice and print it");
  add_params(build, false);
  build->add_option("--format", o.format, "json or dot");
  build->add_option("--via", o.via, "sublattice or stacking");

  auto* count = app.add_subcommand("count", "count maximal chains");
  add_params(count, false);
  count->add_option("--input", o.input, "poset document to count instead");
  count->add_option("--via", o.via, "sublattice or stacking");

  auto* grid_cmd = app.add_subcommand("grid", "table of maximal chain counts");
  add_params(grid_cmd, true);
  grid_cmd->add_option("--format", o.format, "table, bfile, csv or json");
  grid_cmd->add_option("--threads", o.threads, "worker threads, 0 for all cores");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite, "formulas, representation, structure, bijections, dyck, oracle or all");
  verify->add_option("--budget", o.budget, "ambient tuple budget");

  auto* enumerate = app.add_subcommand("enumerate", "list maximal chains or the objects they encode");
  add_params(enumerate, false);
  enumerate->add_option("--family", o.family, "chains, words, partitions, walks or histories");
  enumerate->add_option("--cap", o.cap, "refuse to list more than this many");
  enumerate->add_option("--via", o.via, "sublattice or stacking");
  enumerate->add_option("--format", o.format, "text");

  auto* export_cmd = app.add_subcommand("export", "convert a lattice or document to DOT or JSON");
  add_params(export_cmd, false);
  export_cmd->add_option("--input", o.input, "poset document");
  export_cmd->add_option("--format", o.format, "dot or json");
  export_cmd->add_option("--via", o.via, "sublattice or stacking");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const std::size_t budget = o.budget > 0 ? o.budget : budget_from_env();
  try {
    if (build->parsed()) {
      const Target t = target_of(o);
      const PosetPtr p = build_target(t, o.via, budget);
      auto meta = meta_of(t);
      meta["via"] = o.via;
      emit(render_poset(*p, o.format.empty() ? "json" : o.format, std::move(meta)), o, out);
    } else if (count->parsed()) {
      if (!o.input.empty()) {
        emit(count_maximal_chains(read_poset(read_file(o.input))).get_str() + "\n", o, out);
      } else {
        const Target t = target_of(o);
        const ChainCount c = o.via == "sublattice" ? count_cell(t.axis, t.k, t.n, t.m, budget)
                                                   : count_maximal_chains(*build_target(t, o.via, budget));
        emit(c.get_str() + "\n", o, out);
      }
    } else if (grid_cmd->parsed()) {
      const auto g = grid(parse_axis(o.axis), parse_range(o.k, "k"), parse_range(o.n, "n"),
                          parse_range(o.m, "m"), budget, o.threads);
      emit(render_grid(g, parse_grid_format(o.format.empty() ? "table" : o.format)), o, out);
    } else if (verify->parsed()) {
      std::ostringstream report;
      bool ok = true;
      for (const SuiteReport& s : run_suite(o.suite, budget)) {
        for (const CheckResult& c : s.checks) {
          report << (c.passed ? "PASS " : "FAIL ") << s.suite << ": " << c.name;
          if (!c.passed) report << " (" << c.detail << ")";
          report << "\n";
        }
        ok = ok && s.passed();
      }
      emit(report.str(), o, out);
      return ok ? 0 : 1;
    } else if (enumerate->parsed()) {
      if (!o.format.empty() && o.format != "text") throw UsageError("enumerate prints text only");
      emit(run_enumerate(o, budget), o, out);
    } else if (export_cmd->parsed()) {
      const std::string format = o.format.empty() ? "dot" : o.format;
      if (!o.input.empty()) {
        const PosetDocument doc = document_from_json(read_file(o.input));
        emit(render_poset(from_document(doc), format, doc.meta), o, out);
      } else {
        const Target t = target_of(o);
        emit(render_poset(*build_target(t, o.via, budget), format, meta_of(t)), o, out);
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    // Malformed flag values are usage errors; malformed documents are not.
    err << "error: " << e.what() << "\n";
    return o.input.empty() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace latstack
