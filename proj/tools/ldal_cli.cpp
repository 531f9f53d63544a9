#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ldal/certificate.hpp"
#include "ldal/constructive.hpp"
#include "ldal/error.hpp"
#include "ldal/families.hpp"
#include "ldal/graph_io.hpp"
#include "ldal/oracle.hpp"
#include "ldal/rectangles.hpp"
#include "ldal/tables.hpp"

using namespace ldal;
using ordered_json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct Common {
  std::string out;
  std::string format = "json";
};

struct Search {
  int cap = 10;
  unsigned threads = 0;
  std::uint64_t nodes = 0;
  long long millis = 0;
  bool no_symdiff = false;

  SearchBudget budget() const {
    SearchBudget b;
    b.max_order = cap;
    b.threads = threads;
    b.max_nodes = nodes;
    b.time_limit = std::chrono::milliseconds(millis);
    b.symdiff_bound = !no_symdiff;
    return b;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParameterError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw ParameterError("cannot write '" + c.out + "'");
  f << text;
}

std::string render(const Common& c, const Certificate& cert) { return c.format == "text" ? to_text(cert) : to_json(cert); }

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out,-o", c.out, "write to this file instead of stdout");
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

void add_search(CLI::App* app, Search& s) {
  app->add_option("--cap", s.cap, "largest order the oracle will search");
  app->add_option("--threads", s.threads, "worker threads (0: all cores)");
  app->add_option("--nodes", s.nodes, "node budget (0: unlimited)");
  app->add_option("--time", s.millis, "time budget in milliseconds (0: unlimited)");
  app->add_flag("--no-symdiff", s.no_symdiff, "disable the forced-pair lower bound");
}

std::string oracle_report(const Common& c, const OracleResult& r, bool stats) {
  if (c.format == "text") {
    std::ostringstream os;
    os << "status " << status_name(r.status) << "\n";
    if (r.exact()) os << "chi_ld " << r.upper << "\n";
    else os << "lower " << r.lower << "\nupper " << r.upper << "\n";
    if (r.witness) os << "witness\n" << serialize_labeling(*r.witness);
    if (stats) os << "nodes " << r.stats.nodes << "\nmillis " << r.stats.millis << "\nthreads " << r.stats.threads << "\n";
    return os.str();
  }
  ordered_json j;
  j["status"] = status_name(r.status);
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  if (r.exact()) j["chi_ld"] = r.upper;
  if (r.witness) j["witness"] = std::vector<Label>(r.witness->labels().begin(), r.witness->labels().end());
  if (stats) j["stats"] = {{"nodes", r.stats.nodes}, {"millis", r.stats.millis}, {"threads", r.stats.threads}};
  return j.dump(2) + "\n";
}

std::string rectangle_report(const Common& c, const std::string& kind, const RectangularArray& r) {
  if (c.format == "text") return dump_rectangle(r);
  ordered_json j;
  j["kind"] = kind;
  j["rows"] = r.rows();
  j["cols"] = r.cols();
  j["offset"] = r.offset();
  ordered_json entries = ordered_json::array();
  for (int i = 0; i < r.rows(); ++i) {
    std::vector<Weight> row;
    for (int k = 0; k < r.cols(); ++k) row.push_back(r.at(i, k));
    entries.push_back(row);
  }
  j["entries"] = entries;
  j["column_sums"] = column_sums(r);
  j["range_permutation"] = r.is_range_permutation();
  return j.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ldal: local distance antimagic labelings"};
  app.require_subcommand(1);

  Common common;
  Search search;

  auto* gen = app.add_subcommand("gen", "write a graph from a family expression");
  std::vector<std::string> gen_tokens;
  bool gen_tags = false;
  gen->add_option("family", gen_tokens, "family expression, e.g. 'lexi cycle 5 empty 3'")->required();
  gen->add_flag("--tags", gen_tags, "include vertex role tags");
  gen->add_option("--out,-o", common.out, "write to this file instead of stdout");

  auto* label = app.add_subcommand("label", "run a constructive labeler");
  std::string theorem;
  std::vector<std::string> params;
  label->add_option("--theorem", theorem, "construction identifier")->required();
  label->add_option("--params", params, "k=v pairs");
  add_common(label, common);
  add_search(label, search);

  auto* verify = app.add_subcommand("verify", "check a labeling of a graph");
  std::string graph_path, labeling_path;
  verify->add_option("graph", graph_path, "graph file")->required();
  verify->add_option("labeling", labeling_path, "labeling file")->required();
  add_common(verify, common);

  auto* chi = app.add_subcommand("chi-ld", "exact local distance antimagic chromatic number");
  bool stats = false;
  chi->add_option("graph", graph_path, "graph file")->required();
  chi->add_flag("--stats", stats, "include search statistics (not deterministic)");
  add_common(chi, common);
  add_search(chi, search);

  auto* rect = app.add_subcommand("rect", "print a matrix gadget");
  std::string kind;
  int rn = 0, rm = 0;
  Weight offset = 0;
  rect->add_option("kind", kind, "A, B, C or magic")->required()->check(CLI::IsMember({"A", "B", "C", "magic"}));
  rect->add_option("n", rn, "rows")->required();
  rect->add_option("m", rm, "columns")->required();
  rect->add_option("--offset", offset, "added to every entry");
  add_common(rect, common);

  auto* repro = app.add_subcommand("repro", "compare computed values with the reference tables");
  std::string table;
  ReproOptions ro;
  repro->add_option("table", table, "cycles, paths, cliques or constructions")
      ->required()
      ->check(CLI::IsMember(table_ids()));
  repro->add_flag("--extended", ro.extended, "also run rows the reference only brackets");
  repro->add_option("--row-time", ro.extended_ms, "time limit per extended row, milliseconds");
  repro->add_option("--sweep-m", ro.sweep_m, "constructions grid bound on m");
  repro->add_option("--sweep-n", ro.sweep_n, "constructions grid bound on n");
  add_common(repro, common);
  add_search(repro, search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      emit(common, serialize_graph(build_graph_expression(gen_tokens), gen_tags));
      return kOk;
    }
    if (label->parsed()) {
      ConstructionRequest req{theorem, {}};
      for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw ParameterError("expected k=v, got '" + kv + "'");
        req.params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      auto cert = construct(req, search.budget());
      emit(common, render(common, cert));
      return cert.valid() ? kOk : kNegative;
    }
    if (verify->parsed()) {
      Graph g = parse_graph(slurp(graph_path));
      Labeling f = parse_labeling(slurp(labeling_path), g.order());
      auto cert = make_certificate(g, f, "verify " + labeling_path);
      emit(common, render(common, cert));
      return cert.valid() ? kOk : kNegative;
    }
    if (chi->parsed()) {
      Graph g = parse_graph(slurp(graph_path));
      auto r = chi_ld_exact(g, search.budget());
      if (r.witness) min_colors_witness_check(r, g);
      emit(common, oracle_report(common, r, stats));
      if (r.status == OracleStatus::Bracket) return kBudget;
      return r.exact() ? kOk : kNegative;
    }
    if (rect->parsed()) {
      RectangularArray r = kind == "A"   ? build_matrix_A(rn, rm)
                           : kind == "B" ? build_matrix_B(rn, rm)
                           : kind == "C" ? build_matrix_C(rn, rm)
                                         : build_magic_rectangle(rn, rm);
      emit(common, rectangle_report(common, kind, offset ? r.shifted(offset) : r));
      return kOk;
    }
    if (repro->parsed()) {
      ro.budget = search.budget();
      auto rep = reproduce(table, ro);
      emit(common, common.format == "text" ? report_text(rep) : report_json(rep));
      if (!rep.ok()) return kNegative;
      return rep.count(RowVerdict::Inconclusive) ? kBudget : kOk;
    }
  } catch (const CapExceededError& e) {
    std::cerr << "ldal: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "ldal: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError& e) {
    std::cerr << "ldal: " << e.what() << "\n";
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "ldal: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // Hypothesis failures, non-bijections, self-check failures.
    std::cerr << "ldal: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}
