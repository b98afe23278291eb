#include <doctest.h>

#include "fixtures.hpp"
#include "ncpq/bijection.hpp"
#include "ncpq/error.hpp"
#include "ncpq/serialize.hpp"

using namespace ncpq;

using Roots = std::vector<DimVector>;

TEST_CASE("cox on small subcategories") {
  const Quiver q = fx::a2();
  const IndecRegistry reg = build_registry(q);
  const CartanMatrix& c = reg.roots().cartan();
  CHECK(cox(thick_closure(ExcSequence{}, reg), reg).is_identity());
  CHECK(cox(thick_closure(ExcSequence{{{1, 0}}}, reg), reg) == WeylElement::simple_reflection(c, 0));
  CHECK(cox(thick_closure(ExcSequence{{{1, 0}, {0, 1}}}, reg), reg) == coxeter_element(q));
  for (const Quiver& p : {fx::a3(), fx::d4()}) {
    const IndecRegistry r = build_registry(p);
    const Subcategory all = thick_closure(enumerate_complete_sequences(r).front(), r);
    CHECK(cox(all, r) == coxeter_element(p));
  }
}

TEST_CASE("well-definedness") {
  std::size_t checked = 0;
  const IndecRegistry a2 = build_registry(fx::a2());
  CHECK(verify_well_defined(thick_closure(ExcSequence{{{1, 0}, {0, 1}}}, a2), a2, 1000, &checked));
  CHECK(checked == 3);
  CHECK(verify_well_defined(thick_closure(ExcSequence{{{1, 1}}}, a2), a2, 1000, &checked));
  CHECK(checked == 1);

  const IndecRegistry a3 = build_registry(fx::a3());
  CHECK(verify_well_defined(thick_closure(enumerate_complete_sequences(a3).front(), a3), a3, 1000, &checked));
  CHECK(checked == 16);
}

TEST_CASE("reflections and root modules") {
  const IndecRegistry reg = build_registry(fx::a2());
  const CartanMatrix& c = reg.roots().cartan();
  CHECK(reflection_to_root_module(Reflection(c, DimVector{1, 0}), reg) == DimVector{1, 0});
  CHECK(reflection_to_root_module(Reflection(c, DimVector{1, 1}), reg) == DimVector{1, 1});
  const CartanMatrix kc = cartan_matrix(fx::kronecker());
  const IndecRegistry a2b = build_registry(parse_quiver("vertices 2\narrow 1 2"));
  CHECK_THROWS_AS(reflection_to_root_module(Reflection(kc, DimVector{2, 1}), a2b), InvalidArgument);
}

TEST_CASE("factor_in_reflections") {
  const Quiver q = fx::a2();
  const RootSystem rs = finite_root_system(q);
  CHECK(factor_in_reflections(WeylElement::identity(2), rs).size() == 0);
  for (std::size_t k = 0; k < rs.reflections().size(); ++k)
    CHECK(factor_in_reflections(rs.reflections()[k], rs).roots() == Roots{rs.positive_roots()[k]});
  const ReflectionTuple f = factor_in_reflections(coxeter_element(q), rs);
  CHECK(f.size() == 2);
  CHECK(f.product() == coxeter_element(q));
  // Lexicographically least of the three factorizations.
  CHECK(f.roots() == reflection_factorizations(coxeter_element(q), 2, rs).front().roots());
  CHECK_THROWS_AS(factor_in_reflections(WeylElement::identity(2), generate_roots(fx::kronecker(), 4)),
                  UnsupportedType);
}

TEST_CASE("verify_bijection on finite types") {
  for (auto [q, count] : std::vector<std::pair<Quiver, std::size_t>>{
           {fx::a2(), 5}, {fx::a3(), 14}, {fx::a4(), 42}, {fx::d4(), 50}}) {
    const BijectionReport r = verify_bijection(q);
    CHECK(r.subcategories == count);
    CHECK(r.nc == count);
    CHECK(r.well_defined);
    CHECK(r.injective);
    CHECK(r.surjective);
    CHECK(r.order_iso);
    CHECK_FALSE(r.cap_exceeded);
    CHECK(r.failures.empty());
    CHECK(r.all_flags());
  }
}

TEST_CASE("verify_bijection with another admissible order") {
  const Quiver q(3, {{2, 1}, {2, 3}});
  BijectionOptions opt;
  opt.coxeter_order = {2, 3, 1};
  const BijectionReport r = verify_bijection(q, opt);
  CHECK(r.all_flags());
  CHECK(r.coxeter_order == std::vector<int>{2, 3, 1});
  opt.coxeter_order = {1, 2, 3};
  CHECK_THROWS_AS(verify_bijection(q, opt), InvalidArgument);
}

TEST_CASE("verify_bijection: cap overflow gives a partial report") {
  BijectionOptions opt;
  opt.group_cap = 5;
  const BijectionReport r = verify_bijection(fx::a3(), opt);
  CHECK(r.cap_exceeded);
  CHECK_FALSE(r.all_flags());
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures.back()["kind"] == "cap_exceeded");
}

TEST_CASE("verify_bijection: sampled factorization check") {
  BijectionOptions opt;
  opt.factorization_limit = 20;
  opt.seed = 99;
  const BijectionReport r = verify_bijection(fx::d4(), opt);
  CHECK(r.factorizations_checked == 20);
  CHECK(r.all_flags());
}

TEST_CASE("report JSON round-trip") {
  BijectionReport r = verify_bijection(fx::a3());
  CHECK(report_from_json(to_json(r)) == r);
  CHECK(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
  BijectionOptions opt;
  opt.group_cap = 3;
  r = verify_bijection(fx::a2(), opt);
  CHECK(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
}

TEST_CASE("JSON forms of values") {
  CHECK(to_json(DimVector{1, 0, 2}).dump() == "[1,0,2]");
  CHECK(dim_vector_from_json(to_json(DimVector{3, -1})) == DimVector{3, -1});
  const WeylElement c = coxeter_element(fx::a3());
  CHECK(weyl_element_from_json(to_json(c)) == c);
  const IndecRegistry reg = build_registry(fx::a2());
  const auto j = to_json(thick_closure(ExcSequence{{{1, 1}}}, reg));
  CHECK(j["simples"].dump() == "[[1,1]]");
  CHECK(j["indecomposables"].dump() == "[[1,1]]");
  const auto rep = to_json(reg.at(DimVector{1, 1}));
  CHECK(rep["dims"].dump() == "[1,1]");
  CHECK(rep["maps"].size() == 1);
}

TEST_CASE("minimal factorizations of each w in Nc form one Hurwitz orbit") {
  for (const Quiver& q : {fx::a3(), fx::d4()}) {
    const RootSystem rs = finite_root_system(q);
    const WeylElement c = coxeter_element(q);
    const AbsoluteLengthCache len(rs);
    for (const auto& w : noncrossing_partitions(c, q)) {
      const auto l = static_cast<std::size_t>(len(w));
      if (l == 0) continue;
      const auto facts = reflection_factorizations(w, l, rs);
      CHECK(hurwitz_orbit(rs.cartan(), facts.front(), 10'000) == facts);
      // Each one extends to a minimal factorization of c.
      const WeylElement rest = inverse(w) * c;
      const auto tail = factor_in_reflections(rest, rs);
      std::vector<DimVector> full = facts.front().roots();
      full.insert(full.end(), tail.roots().begin(), tail.roots().end());
      CHECK(full.size() == static_cast<std::size_t>(q.size()));
      CHECK(product(rs.cartan(), full) == c);
    }
  }
}
