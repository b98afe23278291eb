#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "ncpq/bijection.hpp"
#include "ncpq/error.hpp"
#include "ncpq/serialize.hpp"

namespace ncpq::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string input;
  std::string coxeter_order;
  std::string format = "text";
  std::string out_path;
  std::size_t cap_group = 0;  // 0: take NCPQ_CAP_GROUP or the default
  std::size_t cap_orbit = 1'000'000;
  std::size_t cap_sequences = 1'000'000;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::int64_t height_bound = 10;
};

constexpr std::size_t kDefaultGroupCap = 1'000'000;

std::size_t group_cap(const RunConfig& cfg) {
  if (cfg.cap_group > 0) return cfg.cap_group;
  if (const char* env = std::getenv("NCPQ_CAP_GROUP")) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("NCPQ_CAP_GROUP must be a positive integer, got '") + env + "'");
  }
  return kDefaultGroupCap;
}

std::vector<int> parse_order(const std::string& text, const Quiver& q) {
  if (text.empty()) return q.topological_order();
  std::vector<int> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      order.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("--coxeter-order: not an integer: '" + item + "'");
    }
  }
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < static_cast<int>(sorted.size()); ++k)
    if (sorted[k] != k + 1 || static_cast<int>(sorted.size()) != q.size())
      throw InvalidArgument("--coxeter-order must be a permutation of 1.." + std::to_string(q.size()));
  if (!is_admissible_order(q, order))
    throw InvalidArgument("--coxeter-order " + text + " is not admissible: the simples do not form an exceptional sequence");
  return order;
}

void require_finite(const Quiver& q) {
  const TypeClass t = classify_type(cartan_matrix(q));
  if (!t.is_finite()) throw UnsupportedType("quiver is not of finite type (" + t.str() + ")");
}

std::string dot_escape(const std::string& s) {
  std::string r;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') r += '\\';
    r += ch;
  }
  return r;
}

std::string tuple_label(const ReflectionTuple& t) {
  if (t.size() == 0) return "e";
  std::string s;
  for (const auto& r : t.roots()) s += "s" + r.str();
  return s;
}

std::string sequence_label(const ExcSequence& seq) {
  std::string s = "[";
  for (std::size_t k = 0; k < seq.roots.size(); ++k) s += (k ? " " : "") + seq.roots[k].str();
  return s + "]";
}

// ---------------------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, const Quiver& q, std::ostream& out) {
  const CartanMatrix c = cartan_matrix(q);
  const TypeClass t = classify_type(c);
  const RootSystem roots = t.is_finite() ? finite_root_system(q) : generate_roots(q, cfg.height_bound);
  if (cfg.format == "json") {
    json cartan = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < c.size(); ++j) row.push_back(c(i, j));
      cartan.push_back(row);
    }
    json rs = json::array();
    for (const auto& r : roots.positive_roots()) rs.push_back(to_json(r));
    out << json{{"quiver", q.str()},
                {"type", t.str()},
                {"cartan", cartan},
                {"positive_roots", rs},
                {"root_count", roots.positive_roots().size()},
                {"truncated", !roots.complete()},
                {"height_bound", roots.complete() ? json(nullptr) : json(roots.height_bound())}}
               .dump(2)
        << "\n";
    return kOk;
  }
  if (cfg.format == "dot") throw InvalidArgument("analyze has no dot output");
  if (roots.complete())
    out << t.str() << ", " << roots.positive_roots().size() << " positive roots\n";
  else
    out << t.str() << ", truncated roots (" << roots.positive_roots().size() << " real roots up to height "
        << roots.height_bound() << ")\n";
  out << "Cartan matrix:\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < c.size(); ++j) out << " " << c(i, j);
    out << "\n";
  }
  return kOk;
}

int cmd_nc(const RunConfig& cfg, const Quiver& q, std::ostream& out) {
  require_finite(q);
  const auto order = parse_order(cfg.coxeter_order, q);
  const WeylElement c = coxeter_element(q, order);
  const RootSystem roots = finite_root_system(q);
  const auto nc = noncrossing_partitions(c, q, group_cap(cfg), cfg.jobs);
  const AbsoluteLengthCache length(roots);

  std::vector<int> lengths;
  std::vector<ReflectionTuple> labels;
  for (const auto& w : nc) {
    lengths.push_back(length(w));
    labels.push_back(factor_in_reflections(w, roots));
  }
  // Hasse diagram: covers in absolute order are exactly the comparable pairs
  // one length apart.
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  for (std::size_t a = 0; a < nc.size(); ++a)
    for (std::size_t b = 0; b < nc.size(); ++b)
      if (lengths[b] == lengths[a] + 1 && absolute_leq(nc[a], nc[b], length)) hasse.emplace_back(a, b);

  if (cfg.format == "json") {
    json elems = json::array();
    for (std::size_t k = 0; k < nc.size(); ++k)
      elems.push_back({{"matrix", to_json(nc[k])}, {"length", lengths[k]}, {"factorization", to_json(labels[k])}});
    json edges = json::array();
    for (auto [a, b] : hasse) edges.push_back({a, b});
    out << json{{"quiver", q.str()}, {"coxeter_order", order}, {"count", nc.size()}, {"elements", elems}, {"hasse", edges}}
               .dump(2)
        << "\n";
  } else if (cfg.format == "dot") {
    out << "digraph nc {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < nc.size(); ++k)
      out << "  n" << k << " [label=\"" << dot_escape(tuple_label(labels[k])) << "\"];\n";
    for (auto [a, b] : hasse) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
  } else {
    out << "Nc(W,c): " << nc.size() << " elements, " << hasse.size() << " Hasse edges\n";
    for (std::size_t k = 0; k < nc.size(); ++k) out << "  l=" << lengths[k] << "  " << tuple_label(labels[k]) << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const Quiver& q, std::ostream& out) {
  BijectionOptions opt;
  opt.coxeter_order = parse_order(cfg.coxeter_order, q);
  opt.group_cap = group_cap(cfg);
  opt.sequence_cap = cfg.cap_sequences;
  opt.seed = cfg.seed;
  opt.jobs = cfg.jobs;
  require_finite(q);
  const BijectionReport report = verify_bijection(q, opt);
  if (cfg.format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else if (cfg.format == "dot") {
    throw InvalidArgument("verify has no dot output");
  } else {
    out << "quiver: " << report.quiver << "\ntype: " << report.type << "\nsubcategories: " << report.subcategories
        << "\nnc: " << report.nc << "\nwell_defined: " << report.well_defined << "\ninjective: " << report.injective
        << "\nsurjective: " << report.surjective << "\norder_iso: " << report.order_iso
        << "\nfactorizations checked exceptional: " << report.factorizations_checked << "\nfailures: " << report.failures.size()
        << "\n";
    for (const auto& f : report.failures) out << "  " << f.dump() << "\n";
  }
  if (report.cap_exceeded) return kCapExceeded;
  return report.all_flags() ? kOk : kVerificationFailed;
}

int cmd_hurwitz(const RunConfig& cfg, const Quiver& q, std::ostream& out) {
  require_finite(q);
  const auto order = parse_order(cfg.coxeter_order, q);
  const WeylElement c = coxeter_element(q, order);
  const RootSystem roots = finite_root_system(q);
  const auto facts = reflection_factorizations(c, static_cast<std::size_t>(q.size()), roots, cfg.cap_orbit);
  const auto orbit = hurwitz_orbit(roots.cartan(), facts.front(), cfg.cap_orbit);
  const bool single = orbit == facts;

  if (cfg.format == "json") {
    json fs = json::array();
    for (const auto& f : facts) fs.push_back(to_json(f));
    out << json{{"quiver", q.str()},
                {"coxeter_order", order},
                {"factorizations", fs},
                {"factorization_count", facts.size()},
                {"orbit_size", orbit.size()},
                {"single_orbit", single}}
               .dump(2)
        << "\n";
  } else if (cfg.format == "dot") {
    out << "digraph hurwitz {\n";
    for (std::size_t k = 0; k < facts.size(); ++k)
      out << "  n" << k << " [label=\"" << dot_escape(tuple_label(facts[k])) << "\"];\n";
    for (std::size_t k = 0; k < facts.size(); ++k)
      for (std::size_t i = 0; i + 1 < facts[k].size(); ++i) {
        const auto moved = hurwitz_move(roots.cartan(), facts[k], i + 1, false);
        const auto it = std::lower_bound(facts.begin(), facts.end(), moved);
        out << "  n" << k << " -> n" << (it - facts.begin()) << " [label=\"" << (i + 1) << "\"];\n";
      }
    out << "}\n";
  } else {
    out << "minimal reflection factorizations of c: " << facts.size() << "\n"
        << "Hurwitz orbit size: " << orbit.size() << "\n"
        << (single ? "single orbit" : "multiple orbits") << "\n";
  }
  return kOk;
}

int cmd_sequences(const RunConfig& cfg, const Quiver& q, std::ostream& out) {
  require_finite(q);
  const IndecRegistry reg = build_registry(q);
  const auto seqs = enumerate_complete_sequences(reg, cfg.cap_sequences);
  const MutationGraph g = mutation_graph(seqs, reg);
  if (cfg.format == "json") {
    json j = to_json(g);
    j["quiver"] = q.str();
    j["count"] = g.nodes.size();
    out << j.dump(2) << "\n";
  } else if (cfg.format == "dot") {
    out << "digraph mutations {\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
      out << "  n" << k << " [label=\"" << dot_escape(sequence_label(g.nodes[k])) << "\"];\n";
    for (auto [a, b] : g.edges) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
  } else {
    out << "complete exceptional sequences: " << g.nodes.size() << ", " << (g.connected ? "connected" : "not connected")
        << "\n";
    for (const auto& s : g.nodes) out << "  " << sequence_label(s) << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Quiver root systems, exceptional sequences and non-crossing partitions", "ncpq"};
  app.set_help_flag("-h,--help");
  app.add_option("command", cfg.command, "analyze | nc | verify | hurwitz | sequences")
      ->required()
      ->check(CLI::IsMember({"analyze", "nc", "verify", "hurwitz", "sequences"}));
  app.add_option("quiver", cfg.input, "quiver file")->required();
  app.add_option("--coxeter-order", cfg.coxeter_order, "admissible vertex order, e.g. 1,3,2");
  app.add_option("--format", cfg.format, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--out", cfg.out_path, "write output to PATH");
  app.add_option("--cap-group", cfg.cap_group, "Weyl group enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--cap-orbit", cfg.cap_orbit, "Hurwitz orbit / factorization cap")->check(CLI::PositiveNumber);
  app.add_option("--cap-sequences", cfg.cap_sequences, "exceptional sequence cap")->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--height-bound", cfg.height_bound, "root height bound for non-finite quivers")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot write " << cfg.out_path << "\n";
      return kInputError;
    }
    sink = &file;
  }

  try {
    const Quiver q = load_quiver(cfg.input);
    if (cfg.command == "analyze") return cmd_analyze(cfg, q, *sink);
    if (cfg.command == "nc") return cmd_nc(cfg, q, *sink);
    if (cfg.command == "verify") return cmd_verify(cfg, q, *sink);
    if (cfg.command == "hurwitz") return cmd_hurwitz(cfg, q, *sink);
    return cmd_sequences(cfg, q, *sink);
  } catch (const ParseError& e) {
    err << "error: " << cfg.input << ": " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnsupportedType& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupportedType;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  }
}

}  // namespace ncpq::cli
