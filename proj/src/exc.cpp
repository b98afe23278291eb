#include "ncpq/exc.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "ncpq/error.hpp"

namespace ncpq {

std::size_t ExcSequenceHash::operator()(const ExcSequence& s) const noexcept {
  std::size_t h = s.size();
  DimVectorHash dh;
  for (const auto& r : s.roots) h ^= dh(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

bool Subcategory::contains(const DimVector& root) const {
  return std::binary_search(ind_roots.begin(), ind_roots.end(), root);
}

bool Subcategory::is_subcategory_of(const Subcategory& other) const {
  return std::includes(other.ind_roots.begin(), other.ind_roots.end(), ind_roots.begin(), ind_roots.end());
}

namespace {

std::vector<std::size_t> indices(std::span<const DimVector> roots, const IndecRegistry& reg) {
  std::vector<std::size_t> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(reg.index(r));
  return out;
}

bool orthogonal(std::size_t later, std::size_t earlier, const IndecRegistry& reg) {
  return reg.hom(later, earlier) == 0 && reg.ext(later, earlier) == 0;
}

}  // namespace

bool is_exceptional_sequence(std::span<const DimVector> roots, const IndecRegistry& reg) {
  const auto idx = indices(roots, reg);
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!orthogonal(idx[j], idx[i], reg)) return false;
  return true;
}

std::vector<DimVector> right_perp(std::span<const DimVector> roots, const IndecRegistry& reg) {
  const auto idx = indices(roots, reg);
  std::vector<DimVector> out;
  for (std::size_t m = 0; m < reg.size(); ++m)
    if (std::all_of(idx.begin(), idx.end(), [&](std::size_t n) { return orthogonal(n, m, reg); }))
      out.push_back(reg.positive_roots()[m]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DimVector> left_perp(std::span<const DimVector> roots, const IndecRegistry& reg) {
  const auto idx = indices(roots, reg);
  std::vector<DimVector> out;
  for (std::size_t m = 0; m < reg.size(); ++m)
    if (std::all_of(idx.begin(), idx.end(), [&](std::size_t n) { return orthogonal(m, n, reg); }))
      out.push_back(reg.positive_roots()[m]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DimVector> relative_simples(std::span<const DimVector> ind_roots, const IndecRegistry& reg) {
  std::vector<DimVector> out;
  for (const auto& m : ind_roots) {
    bool simple = true;
    for (const auto& n : ind_roots) {
      if (n == m || reg.hom(n, m) == 0) continue;
      if (has_injective_map(reg.at(n), reg.at(m))) {
        simple = false;
        break;
      }
    }
    if (simple) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subcategory thick_closure(const ExcSequence& seq, const IndecRegistry& reg) {
  if (!is_exceptional_sequence(seq.roots, reg)) throw InvalidArgument("thick_closure: input is not an exceptional sequence");
  Subcategory sub;
  const auto perp = right_perp(seq.roots, reg);
  sub.ind_roots = left_perp(perp, reg);
  if (right_perp(sub.ind_roots, reg) != perp || left_perp(right_perp(sub.ind_roots, reg), reg) != sub.ind_roots)
    throw InternalError("thick_closure: not a double-perp fixpoint");
  for (const auto& r : seq.roots)
    if (!sub.contains(r)) throw InternalError("thick_closure: closure misses a generator");
  sub.simples = relative_simples(sub.ind_roots, reg);
  // A length-r exceptional sequence generates a rank-r subcategory.
  if (sub.simples.size() != seq.size()) throw InternalError("thick_closure: rank of the closure differs from r");
  return sub;
}

ExcSequence braid_mutate(const ExcSequence& seq, std::size_t i, bool inverse, const IndecRegistry& reg) {
  const auto n = static_cast<std::size_t>(reg.quiver().size());
  if (seq.size() != n) throw InvalidArgument("braid_mutate: sequence is not complete");
  if (i < 1 || i >= seq.size()) throw InvalidArgument("braid_mutate: index out of range");
  const CartanMatrix& c = reg.roots().cartan();
  ExcSequence out = seq;
  const DimVector& x = seq.roots[i - 1];
  const DimVector& y = seq.roots[i];
  if (!inverse) {
    out.roots[i - 1] = y;
    out.roots[i] = reflect(c, y, x).abs();
  } else {
    out.roots[i - 1] = reflect(c, x, y).abs();
    out.roots[i] = x;
  }
  for (const auto& r : out.roots)
    if (!reg.roots().contains(r)) throw InternalError("braid_mutate: " + r.str() + " is not a root");
  if (!is_exceptional_sequence(out.roots, reg)) throw InternalError("braid_mutate: result is not exceptional");
  return out;
}

ExcSequence extend_to_complete(const ExcSequence& seq, const IndecRegistry& reg) {
  if (!is_exceptional_sequence(seq.roots, reg)) throw InvalidArgument("extend_to_complete: input is not exceptional");
  const auto n = static_cast<std::size_t>(reg.quiver().size());
  ExcSequence cur = seq;
  while (cur.size() < n) {
    // (X, E) is exceptional iff X lies in E^perp.
    const auto candidates = right_perp(cur.roots, reg);
    if (candidates.empty()) throw InternalError("extend_to_complete: no admissible root");
    cur.roots.insert(cur.roots.begin(), candidates.front());
  }
  return cur;
}

bool is_projective_sequence(std::span<const DimVector> roots, const IndecRegistry& reg) {
  const auto n = static_cast<std::size_t>(reg.quiver().size());
  std::vector<bool> support(n, false);
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const auto& e = roots[r];
    const std::vector<bool> previous = support;
    for (auto v : e.support()) support[v] = true;
    if (static_cast<std::size_t>(std::count(support.begin(), support.end(), true)) != r + 1) return false;
    // Projective in the Serre subcategory on the support: Ext into its simples vanishes.
    for (std::size_t v = 0; v < n; ++v)
      if (support[v] && reg.ext(e, DimVector::unit(n, v)) != 0) return false;
    for (int t : top_simples(reg.at(e)))
      if (previous[static_cast<std::size_t>(t - 1)]) return false;
  }
  return true;
}

std::vector<ExcSequence> enumerate_exceptional_sequences(const IndecRegistry& reg, std::span<const DimVector> pool,
                                                         std::size_t length, std::size_t cap) {
  const auto idx = indices(pool, reg);
  std::vector<ExcSequence> out;
  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self) -> void {
    if (chosen.size() == length) {
      if (out.size() >= cap) throw CapExceeded("exceptional sequence enumeration", cap);
      ExcSequence s;
      for (auto k : chosen) s.roots.push_back(reg.positive_roots()[k]);
      out.push_back(std::move(s));
      return;
    }
    for (auto k : idx) {
      bool ok = true;
      for (auto earlier : chosen)
        if (!orthogonal(k, earlier, reg)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(k);
      self(self);
      chosen.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExcSequence> enumerate_complete_sequences(const IndecRegistry& reg, std::size_t cap) {
  return enumerate_exceptional_sequences(reg, reg.positive_roots(), static_cast<std::size_t>(reg.quiver().size()), cap);
}

bool ext_quiver_acyclic(std::span<const DimVector> set, const IndecRegistry& reg) {
  try {
    order_antichain(set, reg);
    return true;
  } catch (const InvalidArgument&) {
    return false;
  }
}

ExcSequence order_antichain(std::span<const DimVector> antichain, const IndecRegistry& reg) {
  const auto idx = indices(antichain, reg);
  const std::size_t r = idx.size();
  std::vector<std::size_t> indeg(r, 0);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (a != b && reg.ext(idx[a], idx[b]) != 0) ++indeg[b];
  // Ext(A, B) != 0 forces A before B.
  std::set<std::pair<DimVector, std::size_t>> ready;
  for (std::size_t a = 0; a < r; ++a)
    if (indeg[a] == 0) ready.emplace(antichain[a], a);
  ExcSequence out;
  while (!ready.empty()) {
    auto [root, a] = *ready.begin();
    ready.erase(ready.begin());
    out.roots.push_back(root);
    for (std::size_t b = 0; b < r; ++b)
      if (b != a && reg.ext(idx[a], idx[b]) != 0 && --indeg[b] == 0) ready.emplace(antichain[b], b);
  }
  if (out.size() != r) throw InvalidArgument("order_antichain: Ext-quiver has a cycle");
  return out;
}

std::vector<std::vector<DimVector>> enumerate_exceptional_antichains(const IndecRegistry& reg) {
  const std::size_t total = reg.size();
  std::vector<std::vector<DimVector>> out;
  std::vector<std::size_t> chosen;
  auto emit = [&] {
    std::vector<DimVector> set;
    for (auto k : chosen) set.push_back(reg.positive_roots()[k]);
    std::sort(set.begin(), set.end());
    if (ext_quiver_acyclic(set, reg)) out.push_back(std::move(set));
  };
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    emit();
    for (std::size_t k = start; k < total; ++k) {
      if (reg.hom(k, k) != 1) continue;
      bool ok = true;
      for (auto j : chosen)
        if (reg.hom(k, j) != 0 || reg.hom(j, k) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DimVector> slot_fillers(const ExcSequence& seq, std::size_t i, const IndecRegistry& reg) {
  if (i >= seq.size()) throw InvalidArgument("slot_fillers: index out of range");
  std::vector<DimVector> out;
  ExcSequence trial = seq;
  for (const auto& r : reg.positive_roots()) {
    trial.roots[i] = r;
    if (is_exceptional_sequence(trial.roots, reg)) out.push_back(r);
  }
  return out;
}

MutationGraph mutation_graph(std::vector<ExcSequence> sequences, const IndecRegistry& reg) {
  MutationGraph g;
  std::sort(sequences.begin(), sequences.end());
  g.nodes = std::move(sequences);
  std::unordered_map<ExcSequence, std::size_t, ExcSequenceHash> index;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) index.emplace(g.nodes[k], k);

  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    for (std::size_t i = 1; i < g.nodes[k].size(); ++i) {
      const auto next = braid_mutate(g.nodes[k], i, false, reg);
      auto it = index.find(next);
      if (it == index.end()) throw InternalError("mutation_graph: braid move leaves the sequence set");
      g.edges.emplace_back(k, it->second);
      adj[k].push_back(it->second);
      adj[it->second].push_back(k);
    }

  if (g.nodes.empty()) return g;
  std::vector<bool> seen(g.nodes.size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto k = queue.front();
    queue.pop_front();
    for (auto j : adj[k])
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        queue.push_back(j);
      }
  }
  g.connected = reached == g.nodes.size();
  return g;
}

}  // namespace ncpq
