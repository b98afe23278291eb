#include "ncpq/serialize.hpp"

#include "ncpq/error.hpp"

namespace ncpq {

using nlohmann::json;

json to_json(const DimVector& v) { return json(std::vector<std::int64_t>(v.coords().begin(), v.coords().end())); }

DimVector dim_vector_from_json(const json& j) { return DimVector(j.get<std::vector<std::int64_t>>()); }

json to_json(const WeylElement& w) {
  json rows = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < w.size(); ++k) row.push_back(w(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

WeylElement weyl_element_from_json(const json& j) {
  const std::size_t n = j.size();
  std::vector<std::int64_t> e;
  for (const auto& row : j) {
    if (row.size() != n) throw InvalidArgument("weyl element json: matrix is not square");
    for (const auto& x : row) e.push_back(x.get<std::int64_t>());
  }
  return WeylElement(n, std::move(e));
}

json to_json(const Representation& r) {
  json maps = json::array();
  for (std::size_t a = 0; a < r.maps().size(); ++a) {
    const auto& arrow = r.quiver().arrows()[a];
    const auto& m = r.maps()[a];
    auto [denom, nums] = m.integer_form();
    json matrix = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(nums[i * m.cols() + k].get_si());
      matrix.push_back(std::move(row));
    }
    maps.push_back({{"arrow", {arrow.head, arrow.tail}}, {"denominator", denom.get_si()}, {"matrix", std::move(matrix)}});
  }
  return {{"dims", r.dims()}, {"maps", std::move(maps)}};
}

json to_json(const ExcSequence& s) {
  json out = json::array();
  for (const auto& r : s.roots) out.push_back(to_json(r));
  return out;
}

json to_json(const ReflectionTuple& t) {
  json out = json::array();
  for (const auto& r : t.roots()) out.push_back(to_json(r));
  return out;
}

json to_json(const Subcategory& s) {
  return {{"simples", to_json(ExcSequence{s.simples})}, {"indecomposables", to_json(ExcSequence{s.ind_roots})}};
}

json to_json(const MutationGraph& g) {
  json nodes = json::array();
  for (const auto& s : g.nodes) nodes.push_back(to_json(s));
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}, {"connected", g.connected}};
}

json to_json(const BijectionReport& r) {
  return {
      {"quiver", r.quiver},
      {"type", r.type},
      {"coxeter_order", r.coxeter_order},
      {"counts", {{"subcategories", r.subcategories}, {"nc", r.nc}}},
      {"witnesses", {{"well_defined_sequences", r.well_defined_witnesses}, {"coxeter_factorizations", r.factorizations_checked}}},
      {"flags",
       {{"well_defined", r.well_defined},
        {"injective", r.injective},
        {"surjective", r.surjective},
        {"order_iso", r.order_iso}}},
      {"cap_exceeded", r.cap_exceeded},
      {"failures", r.failures},
      {"elapsed_ms", r.elapsed_ms},
  };
}

BijectionReport report_from_json(const json& j) {
  BijectionReport r;
  r.quiver = j.at("quiver").get<std::string>();
  r.type = j.at("type").get<std::string>();
  r.coxeter_order = j.at("coxeter_order").get<std::vector<int>>();
  r.subcategories = j.at("counts").at("subcategories").get<std::size_t>();
  r.nc = j.at("counts").at("nc").get<std::size_t>();
  if (j.contains("witnesses")) {
    r.well_defined_witnesses = j["witnesses"].at("well_defined_sequences").get<std::size_t>();
    r.factorizations_checked = j["witnesses"].at("coxeter_factorizations").get<std::size_t>();
  }
  const auto& f = j.at("flags");
  r.well_defined = f.at("well_defined").get<bool>();
  r.injective = f.at("injective").get<bool>();
  r.surjective = f.at("surjective").get<bool>();
  r.order_iso = f.at("order_iso").get<bool>();
  r.cap_exceeded = j.value("cap_exceeded", false);
  r.failures = j.at("failures").get<std::vector<json>>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

}  // namespace ncpq
