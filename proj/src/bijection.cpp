#include "ncpq/bijection.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "ncpq/error.hpp"
#include "ncpq/serialize.hpp"

namespace ncpq {

WeylElement cox(const Subcategory& sub, const IndecRegistry& reg) {
  const CartanMatrix& c = reg.roots().cartan();
  const ExcSequence seq = order_antichain(sub.simples, reg);
  if (!is_exceptional_sequence(seq.roots, reg))
    throw InternalError("cox: simples do not order into an exceptional sequence");
  return product(c, seq.roots);
}

bool verify_well_defined(const Subcategory& sub, const IndecRegistry& reg, std::size_t cap,
                         std::size_t* sequences_checked) {
  const WeylElement expected = cox(sub, reg);
  const CartanMatrix& c = reg.roots().cartan();
  const auto candidates = enumerate_exceptional_sequences(reg, sub.ind_roots, sub.simples.size(), cap);
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& seq : candidates) {
    // Only sequences generating exactly `sub` are complete in it.
    const auto closure = left_perp(right_perp(seq.roots, reg), reg);
    if (closure != sub.ind_roots) continue;
    ++checked;
    if (product(c, seq.roots) != expected) ok = false;
  }
  if (sequences_checked) *sequences_checked = checked;
  return ok && checked > 0;
}

DimVector reflection_to_root_module(const Reflection& r, const IndecRegistry& reg) {
  if (!reg.roots().contains(r.root()))
    throw InvalidArgument("reflection_to_root_module: no indecomposable with dimension vector " + r.root().str());
  return r.root();
}

ReflectionTuple factor_in_reflections(const WeylElement& w, const RootSystem& roots) {
  roots.require_complete("factor_in_reflections");
  const AbsoluteLengthCache len(roots);
  const auto target = static_cast<std::size_t>(len(w));

  std::vector<std::size_t> order(roots.positive_roots().size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return roots.positive_roots()[a] < roots.positive_roots()[b]; });

  std::vector<DimVector> prefix;
  auto dfs = [&](auto&& self, const WeylElement& remaining) -> bool {
    if (prefix.size() == target) return remaining.is_identity();
    for (auto k : order) {
      WeylElement rest = roots.reflections()[k] * remaining;
      if (static_cast<std::size_t>(len(rest)) + prefix.size() + 1 != target) continue;
      prefix.push_back(roots.positive_roots()[k]);
      if (self(self, rest)) return true;
      prefix.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, w)) throw InternalError("factor_in_reflections: no factorization found");
  return ReflectionTuple(roots.cartan(), prefix);
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxFailures = 25;

void add_failure(BijectionReport& report, nlohmann::json payload) {
  if (report.failures.size() < kMaxFailures) report.failures.push_back(std::move(payload));
}

}  // namespace

BijectionReport verify_bijection(const Quiver& q, const BijectionOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  BijectionReport report;
  report.quiver = q.str();
  report.type = classify_type(cartan_matrix(q)).str();
  report.coxeter_order = options.coxeter_order.empty() ? q.topological_order() : options.coxeter_order;
  const WeylElement c = coxeter_element(q, report.coxeter_order);

  try {
    const IndecRegistry reg = build_registry(q);
    const RootSystem& roots = reg.roots();
    const auto n = static_cast<std::size_t>(q.size());

    const auto nc = noncrossing_partitions(c, q, options.group_cap, options.jobs);
    report.nc = nc.size();

    // Subcategories from antichains; the antichain must come back as simples.
    std::vector<Subcategory> subs;
    for (const auto& antichain : enumerate_exceptional_antichains(reg)) {
      Subcategory sub = thick_closure(order_antichain(antichain, reg), reg);
      if (sub.simples != antichain)
        add_failure(report, {{"kind", "antichain_recovery"},
                             {"antichain", to_json(ExcSequence{antichain})},
                             {"subcategory", to_json(sub)}});
      subs.push_back(std::move(sub));
    }
    report.subcategories = subs.size();

    std::vector<WeylElement> images;
    images.reserve(subs.size());
    for (const auto& sub : subs) images.push_back(cox(sub, reg));

    report.well_defined = true;
    for (const auto& sub : subs) {
      std::size_t checked = 0;
      if (!verify_well_defined(sub, reg, options.sequence_cap, &checked)) {
        report.well_defined = false;
        add_failure(report, {{"kind", "well_defined"}, {"subcategory", to_json(sub)}});
      }
      report.well_defined_witnesses += checked;
    }

    // Endpoints: zero subcategory -> identity, whole category -> c.
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (subs[k].ind_roots.empty() && !images[k].is_identity()) {
        report.well_defined = false;
        add_failure(report, {{"kind", "zero_not_identity"}, {"image", to_json(images[k])}});
      }
      if (subs[k].ind_roots.size() == reg.size() && images[k] != c) {
        report.well_defined = false;
        add_failure(report, {{"kind", "full_not_coxeter"}, {"image", to_json(images[k])}, {"coxeter", to_json(c)}});
      }
    }

    std::unordered_set<WeylElement, WeylElementHash> nc_set(nc.begin(), nc.end());
    std::unordered_map<WeylElement, std::size_t, WeylElementHash> first_preimage;
    report.injective = true;
    bool in_nc = true;
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (!nc_set.contains(images[k])) {
        in_nc = false;
        add_failure(report, {{"kind", "image_outside_nc"}, {"subcategory", to_json(subs[k])}, {"image", to_json(images[k])}});
      }
      auto [it, fresh] = first_preimage.emplace(images[k], k);
      if (!fresh) {
        report.injective = false;
        add_failure(report, {{"kind", "not_injective"},
                             {"first", to_json(subs[it->second])},
                             {"second", to_json(subs[k])},
                             {"image", to_json(images[k])}});
      }
    }
    report.surjective = in_nc && first_preimage.size() == nc_set.size();
    if (!report.surjective) {
      for (const auto& w : nc)
        if (!first_preimage.contains(w)) add_failure(report, {{"kind", "not_surjective"}, {"missing", to_json(w)}});
    }

    const AbsoluteLengthCache length(roots);
    report.order_iso = true;
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t b = 0; b < subs.size(); ++b) {
        const bool included = subs[a].is_subcategory_of(subs[b]);
        const bool below = absolute_leq(images[a], images[b], length);
        if (included != below) {
          report.order_iso = false;
          add_failure(report, {{"kind", "order"},
                               {"a", to_json(subs[a])},
                               {"b", to_json(subs[b])},
                               {"a_in_b", included},
                               {"cox_a_leq_cox_b", below}});
        }
      }

    // Minimal reflection factorizations of c give complete exceptional sequences.
    auto factorizations = reflection_factorizations(c, n, roots, options.sequence_cap);
    if (factorizations.size() > options.factorization_limit) {
      std::mt19937_64 rng(options.seed);
      std::shuffle(factorizations.begin(), factorizations.end(), rng);
      factorizations.erase(factorizations.begin() + static_cast<std::ptrdiff_t>(options.factorization_limit), factorizations.end());
    }
    for (const auto& f : factorizations) {
      ++report.factorizations_checked;
      if (!is_exceptional_sequence(f.roots(), reg))
        add_failure(report, {{"kind", "factorization_not_exceptional"}, {"tuple", to_json(f)}});
    }
  } catch (const CapExceeded& e) {
    report.cap_exceeded = true;
    report.well_defined = report.injective = report.surjective = report.order_iso = false;
    report.failures.push_back({{"kind", "cap_exceeded"}, {"message", e.what()}});
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ncpq
