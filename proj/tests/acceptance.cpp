// Acceptance suite: one PASS/FAIL line per criterion. Criterion 11 is a
// stretch goal and does not affect the exit status.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "ncpq/bijection.hpp"
#include "oracles.hpp"

using namespace ncpq;

namespace {

using Roots = std::vector<DimVector>;

struct Named {
  std::string name;
  Quiver q;
};

oracle::Mat as_mat(const WeylElement& w) { return {w.entries().begin(), w.entries().end()}; }

std::vector<oracle::Vec> as_vecs(const Roots& roots) {
  std::vector<oracle::Vec> out;
  for (const auto& r : roots) out.emplace_back(r.coords().begin(), r.coords().end());
  return out;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// 1. |antichains| = |Nc| with both sides from two independent enumerations.
void criterion1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  for (auto [name, q, expected] : std::vector<std::tuple<std::string, Quiver, std::size_t>>{
           {"A2", fx::a2(), 5}, {"A3", fx::a3(), 14}, {"A4", fx::a4(), 42}, {"D4", fx::d4(), 50}}) {
    const IndecRegistry reg = build_registry(q);
    const std::size_t antichains = enumerate_exceptional_antichains(reg).size();
    const std::size_t antichains_scan = oracle::antichain_count(reg);
    const WeylElement c = coxeter_element(q);
    const std::size_t nc = noncrossing_partitions(c, q).size();
    const std::size_t nc_oracle =
        oracle::noncrossing(oracle::from(q), as_mat(c), as_vecs(reg.positive_roots())).size();
    o.detail << " " << name << ":" << antichains << "=" << nc;
    o.require(antichains == expected && antichains_scan == expected, name + " antichains");
    o.require(nc == expected && nc_oracle == expected, name + " Nc");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail << " (" << secs << " s)";
  o.require(secs < 60, "runtime");
}

// 2. sub_A in sub_B <=> cox(A) <= cox(B), with lengths from the oracle table.
void criterion2(Outcome& o) {
  for (const auto& [name, q] : std::vector<Named>{{"A2", fx::a2()}, {"A3", fx::a3()}, {"D4", fx::d4()}}) {
    const IndecRegistry reg = build_registry(q);
    const auto len = oracle::reflection_lengths(oracle::reflections(oracle::from(q), as_vecs(reg.positive_roots())), q.size());
    const auto group = oracle::group(oracle::from(q));
    auto inv = [&](const oracle::Mat& w) {
      for (const auto& u : group)
        if (oracle::mul(w, u, q.size()) == oracle::identity(q.size())) return u;
      return oracle::Mat{};
    };
    std::vector<Subcategory> subs;
    std::vector<oracle::Mat> images;
    for (const auto& a : enumerate_exceptional_antichains(reg)) {
      subs.push_back(thick_closure(order_antichain(a, reg), reg));
      images.push_back(as_mat(cox(subs.back(), reg)));
    }
    std::size_t pairs = 0, agree = 0;
    for (std::size_t a = 0; a < subs.size(); ++a) {
      const oracle::Mat ia = inv(images[a]);
      for (std::size_t b = 0; b < subs.size(); ++b) {
        ++pairs;
        const bool leq = len.at(images[a]) + len.at(oracle::mul(ia, images[b], q.size())) == len.at(images[b]);
        agree += leq == subs[a].is_subcategory_of(subs[b]);
      }
    }
    o.detail << " " << name << ":" << agree << "/" << pairs;
    o.require(agree == pairs, name);
    o.require(verify_bijection(q).order_iso, name + " report");
  }
}

// 3. Every complete exceptional sequence of A2 / A3 gives the same product.
void criterion3(Outcome& o) {
  for (auto [name, q, expected] : std::vector<std::tuple<std::string, Quiver, std::size_t>>{
           {"A2", fx::a2(), 3}, {"A3", fx::a3(), 16}}) {
    const IndecRegistry reg = build_registry(q);
    const auto seqs = enumerate_complete_sequences(reg);
    std::set<oracle::Mat> products;
    for (const auto& s : seqs) products.insert(as_mat(product(reg.roots().cartan(), s.roots)));
    std::size_t checked = 0;
    const bool ok = verify_well_defined(thick_closure(seqs.front(), reg), reg, 1'000'000, &checked);
    o.detail << " " << name << ":" << seqs.size() << " seqs, " << products.size() << " product";
    o.require(seqs.size() == expected && checked == expected && products.size() == 1 && ok, name);
  }
}

std::size_t cayley(int n) {
  std::size_t r = 1;
  for (int k = 0; k < n - 1; ++k) r *= static_cast<std::size_t>(n + 1);
  return r;
}

// 4. Mutation graph connected; node count = (n+1)^(n-1) = brute-force factorization count.
void criterion4(Outcome& o) {
  for (const auto& [name, q] : std::vector<Named>{{"A2", fx::a2()}, {"A3", fx::a3()}, {"A4", fx::a4()}}) {
    const IndecRegistry reg = build_registry(q);
    const MutationGraph g = mutation_graph(enumerate_complete_sequences(reg), reg);
    const std::size_t brute = oracle::factorization_count(oracle::from(q), as_mat(coxeter_element(q)),
                                                          as_vecs(reg.positive_roots()), q.size());
    o.detail << " " << name << ":" << g.nodes.size() << (g.connected ? " connected" : " DISCONNECTED");
    o.require(g.connected && g.nodes.size() == brute && brute == cayley(q.size()), name);
  }
}

// 5. Minimal reflection factorizations of c form a single Hurwitz orbit.
void criterion5(Outcome& o) {
  for (const auto& [name, q] :
       std::vector<Named>{{"A2", fx::a2()}, {"A3", fx::a3()}, {"A4", fx::a4()}, {"D4", fx::d4()}}) {
    const RootSystem rs = finite_root_system(q);
    const WeylElement c = coxeter_element(q);
    const auto facts = reflection_factorizations(c, q.size(), rs);
    const ReflectionTuple start(rs.cartan(), [&] {
      Roots simples;
      for (int v : q.topological_order()) simples.push_back(DimVector::unit(q.size(), v - 1));
      return simples;
    }());
    const auto orbit = hurwitz_orbit(rs.cartan(), start, 1'000'000);
    const std::size_t brute =
        oracle::factorization_count(oracle::from(q), as_mat(c), as_vecs(rs.positive_roots()), q.size());
    o.detail << " " << name << ":" << orbit.size();
    o.require(orbit == facts && orbit.size() == brute, name);
  }
}

// 6. |c|_a = n; fast path = BFS on all of W(A2), W(A3), W(D4).
void criterion6(Outcome& o) {
  const Quiver e6 = load_quiver(fx::data_dir() + "/E6.quiver");
  for (const auto& [name, q] :
       std::vector<Named>{{"A2", fx::a2()}, {"A3", fx::a3()}, {"A4", fx::a4()}, {"D4", fx::d4()}, {"E6", e6}}) {
    const RootSystem rs = finite_root_system(q);
    o.require(absolute_length(coxeter_element(q), rs) == q.size(), name + " |c|");
  }
  std::size_t total = 0, agree = 0;
  for (const Quiver& q : {fx::a2(), fx::a3(), fx::d4()}) {
    const RootSystem rs = finite_root_system(q);
    const auto table = reflection_length_table(rs, 100'000);
    for (const auto& w : enumerate_group(q, 100'000)) {
      ++total;
      const int fast = absolute_length(w, rs);
      agree += table.at(w) == fast && absolute_length_search(w, rs, q.size()) == std::optional<int>(fast);
    }
  }
  o.detail << " fast=BFS on " << agree << "/" << total;
  o.require(agree == total && total == 6 + 24 + 192, "fast vs BFS");
}

// 7. Exchange identity on 1000 seeded random instances per type.
void criterion7(Outcome& o) {
  for (const auto& [name, q] : std::vector<Named>{{"A3", fx::a3()}, {"D4", fx::d4()}}) {
    const RootSystem rs = finite_root_system(q);
    const auto oc = oracle::cartan(oracle::from(q));
    const int n = q.size();
    auto simple_mat = [&](int i) { return oracle::reflection(oc, oracle::simple(n, i - 1), n); };
    std::mt19937_64 rng(1);
    int done = 0, ok = 0;
    while (done < 1000) {
      std::vector<int> word(1 + rng() % 10);
      for (auto& x : word) x = 1 + static_cast<int>(rng() % n);
      const DimVector& alpha = rs.positive_roots()[rng() % rs.positive_roots().size()];
      oracle::Mat w = oracle::identity(n);
      for (int i : word) w = oracle::mul(w, simple_mat(i), n);
      oracle::Vec img(n, 0);
      for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) img[r] += w[r * n + k] * alpha[k];
      if (!std::all_of(img.begin(), img.end(), [](long long x) { return x <= 0; })) continue;
      ++done;
      const ExchangeResult res = exchange_index(word, alpha, rs);
      oracle::Mat lhs = oracle::identity(n), rhs = oracle::identity(n);
      for (std::size_t k = res.t - 1; k < word.size(); ++k) lhs = oracle::mul(lhs, simple_mat(word[k]), n);
      for (std::size_t k = res.t; k < word.size(); ++k) rhs = oracle::mul(rhs, simple_mat(word[k]), n);
      rhs = oracle::mul(rhs, oracle::reflection(oc, {alpha.coords().begin(), alpha.coords().end()}, n), n);
      ok += res.verified && lhs == rhs && as_mat(res.lhs) == lhs && as_mat(res.rhs) == rhs;
    }
    o.detail << " " << name << ":" << ok << "/" << done;
    o.require(ok == done, name);
  }
}

// 8. Every projective sequence found by exhaustive scan is exceptional.
void criterion8(Outcome& o) {
  for (const auto& [name, q] : std::vector<Named>{{"A2", fx::a2()}, {"A3", fx::a3()}}) {
    const IndecRegistry reg = build_registry(q);
    std::size_t found = 0, exceptional = 0;
    Roots cur;
    std::function<void()> rec = [&] {
      if (!cur.empty() && is_projective_sequence(cur, reg)) {
        ++found;
        exceptional += is_exceptional_sequence(cur, reg);
      }
      if (cur.size() == static_cast<std::size_t>(q.size())) return;
      for (const auto& r : reg.positive_roots()) {
        cur.push_back(r);
        rec();
        cur.pop_back();
      }
    };
    rec();
    o.detail << " " << name << ":" << exceptional << "/" << found;
    o.require(found > 0 && exceptional == found, name);
  }
}

// 9. C(E) = everything for each complete sequence E.
void criterion9(Outcome& o) {
  for (const auto& [name, q] : std::vector<Named>{{"A2", fx::a2()}, {"A3", fx::a3()}}) {
    const IndecRegistry reg = build_registry(q);
    const auto seqs = enumerate_complete_sequences(reg);
    std::size_t full = 0;
    for (const auto& s : seqs) full += thick_closure(s, reg).ind_roots == [&] {
      Roots all = reg.positive_roots();
      std::sort(all.begin(), all.end());
      return all;
    }();
    o.detail << " " << name << ":" << full << "/" << seqs.size();
    o.require(full == seqs.size(), name);
  }
}

// 10. Registry sizes, rigidity, Euler identity against the extension-space oracle.
void criterion10(Outcome& o) {
  for (auto [name, q, expected] : std::vector<std::tuple<std::string, Quiver, std::size_t>>{
           {"A2", fx::a2(), 3}, {"A3", fx::a3(), 6}, {"A4", fx::a4(), 10}, {"D4", fx::d4(), 12}}) {
    const IndecRegistry reg = build_registry(q);
    bool rigid = true;
    for (std::size_t k = 0; k < reg.size(); ++k) {
      const auto he = oracle::hom_ext(reg.at(k), reg.at(k));
      rigid = rigid && reg.hom(k, k) == 1 && reg.ext(k, k) == 0 && he.hom == 1 && he.ext == 0;
    }
    o.detail << " " << name << ":" << reg.size();
    o.require(reg.size() == expected && rigid, name);
  }
  for (const auto& [name, q] : std::vector<Named>{{"A2", fx::a2()}, {"A3", fx::a3()}}) {
    const IndecRegistry reg = build_registry(q);
    std::size_t pairs = 0, ok = 0;
    for (std::size_t a = 0; a < reg.size(); ++a)
      for (std::size_t b = 0; b < reg.size(); ++b) {
        ++pairs;
        const auto he = oracle::hom_ext(reg.at(a), reg.at(b));
        ok += he.hom == reg.hom(a, b) && he.ext == reg.ext(a, b) &&
              static_cast<std::int64_t>(he.hom) - static_cast<std::int64_t>(he.ext) ==
                  euler_form(q, reg.positive_roots()[a], reg.positive_roots()[b]);
      }
    o.detail << " euler " << name << ":" << ok << "/" << pairs;
    o.require(ok == pairs, "euler " + name);
  }
}

// 11. For non-simple M on A3, a pair (X, Y) with 0 -> Y^b -> M -> X^a -> 0.
void criterion11(Outcome& o) {
  const Quiver q = fx::a3();
  const IndecRegistry reg = build_registry(q);
  std::size_t targets = 0, witnessed = 0;
  for (const auto& m : reg.positive_roots()) {
    if (m.height() == 1) continue;
    ++targets;
    bool found = false;
    for (const auto& x : reg.positive_roots()) {
      for (const auto& y : reg.positive_roots()) {
        if (found || x == y) continue;
        if (reg.hom(x, y) || reg.hom(y, x) || reg.ext(y, x)) continue;
        if (reg.ext(m, x) || reg.ext(m, y)) continue;
        const Subcategory c = thick_closure(ExcSequence{{x, y}}, reg);
        if (!c.contains(m)) continue;
        for (std::int64_t b = 1; b <= m.height() && !found; ++b) {
          const DimVector rest = m - b * y;
          if (std::any_of(rest.coords().begin(), rest.coords().end(), [](auto v) { return v < 0; })) break;
          // rest must be a * x with a >= 1
          std::int64_t a = 0;
          for (std::size_t i = 0; i < rest.size(); ++i)
            if (x[i] != 0) a = rest[i] / x[i];
          if (a < 1 || rest != a * x) continue;
          Representation yb = reg.at(y);
          for (std::int64_t k = 1; k < b; ++k) yb = Representation::direct_sum(yb, reg.at(y));
          found = has_injective_map(yb, reg.at(m));
        }
      }
    }
    witnessed += found;
  }
  o.detail << " A3:" << witnessed << "/" << targets;
  o.require(targets > 0 && witnessed == targets, "witness");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"bijection counts", criterion1},        {"poset isomorphism", criterion2},
      {"well-definedness", criterion3},        {"mutation graph connected", criterion4},
      {"single Hurwitz orbit", criterion5},    {"absolute length", criterion6},
      {"exchange property", criterion7},       {"projective sequences exceptional", criterion8},
      {"complete sequences generate", criterion9}, {"registry soundness", criterion10},
      {"exact-sequence witnesses", criterion11},
  };
  int blocking_failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const bool stretch = k + 1 == 11;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " --"
              << o.detail.str() << (stretch ? " (non-blocking)" : "") << "\n";
    if (!o.pass && !stretch) ++blocking_failures;
  }
  std::cout << (blocking_failures == 0 ? "acceptance: all blocking criteria pass\n" : "acceptance: FAILED\n");
  return blocking_failures == 0 ? 0 : 1;
}
