#include "ncpq/hurwitz.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "ncpq/error.hpp"

namespace ncpq {

namespace {

DimVector positive_real_root(const CartanMatrix& c, const DimVector& root) {
  if (root.size() != c.size()) throw InvalidArgument("reflection tuple: dimension mismatch");
  if (c.form(root, root) != 2) throw InvalidArgument("reflection tuple: " + root.str() + " is not a real root");
  if (root.is_positive()) return root;
  if (root.is_negative()) return -root;
  throw InvalidArgument("reflection tuple: " + root.str() + " has mixed signs");
}

}  // namespace

WeylElement product(const CartanMatrix& c, const std::vector<DimVector>& roots) {
  WeylElement w = WeylElement::identity(c.size());
  for (const auto& r : roots) w = w * WeylElement::reflection(c, r);
  return w;
}

ReflectionTuple::ReflectionTuple(const CartanMatrix& c, std::vector<DimVector> roots) {
  for (auto& r : roots) r = positive_real_root(c, r);
  roots_ = std::move(roots);
  product_ = ncpq::product(c, roots_);
}

std::size_t ReflectionTupleHash::operator()(const ReflectionTuple& t) const noexcept {
  std::size_t h = t.size();
  DimVectorHash dh;
  for (const auto& r : t.roots()) h ^= dh(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

ReflectionTuple hurwitz_move(const CartanMatrix& c, const ReflectionTuple& t, std::size_t i, bool inverse) {
  if (i < 1 || i >= t.size()) throw InvalidArgument("hurwitz_move: index " + std::to_string(i) + " out of range");
  auto roots = t.roots();
  const DimVector a = roots[i - 1];
  const DimVector b = roots[i];
  if (!inverse) {
    roots[i - 1] = b;
    roots[i] = reflect(c, b, a).abs();
  } else {
    roots[i - 1] = reflect(c, a, b).abs();
    roots[i] = a;
  }
  ReflectionTuple out(std::move(roots), t.product());
  if (ncpq::product(c, out.roots()) != out.product()) throw InternalError("hurwitz_move changed the product");
  return out;
}

ReflectionTuple apply_moves(const CartanMatrix& c, const ReflectionTuple& t, const MoveWord& word) {
  ReflectionTuple cur = t;
  for (int m : word) {
    if (m == 0) throw InvalidArgument("apply_moves: zero is not a move");
    cur = hurwitz_move(c, cur, static_cast<std::size_t>(m > 0 ? m : -m), m < 0);
  }
  return cur;
}

std::vector<ReflectionTuple> hurwitz_orbit(const CartanMatrix& c, const ReflectionTuple& t, std::size_t cap) {
  std::unordered_set<ReflectionTuple, ReflectionTupleHash> seen{t};
  std::deque<ReflectionTuple> queue{t};
  while (!queue.empty()) {
    ReflectionTuple cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 1; i < cur.size(); ++i)
      for (bool inv : {false, true}) {
        ReflectionTuple next = hurwitz_move(c, cur, i, inv);
        if (seen.contains(next)) continue;
        if (seen.size() >= cap) throw CapExceeded("Hurwitz orbit", cap);
        seen.insert(next);
        queue.push_back(std::move(next));
      }
  }
  std::vector<ReflectionTuple> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

OrbitDecision same_orbit(const CartanMatrix& c, const ReflectionTuple& a, const ReflectionTuple& b, std::size_t cap) {
  if (a.size() != b.size()) throw InvalidArgument("same_orbit: tuples differ in length");
  if (a == b) return {true, {}};
  if (a.product() != b.product()) return {false, {}};

  // parent[x] = (predecessor, move leading to x)
  std::unordered_map<ReflectionTuple, std::pair<ReflectionTuple, int>, ReflectionTupleHash> parent;
  std::unordered_set<ReflectionTuple, ReflectionTupleHash> seen{a};
  std::deque<ReflectionTuple> queue{a};
  while (!queue.empty()) {
    ReflectionTuple cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 1; i < cur.size(); ++i)
      for (bool inv : {false, true}) {
        ReflectionTuple next = hurwitz_move(c, cur, i, inv);
        if (seen.contains(next)) continue;
        if (seen.size() >= cap) throw CapExceeded("same_orbit search", cap);
        seen.insert(next);
        const int move = inv ? -static_cast<int>(i) : static_cast<int>(i);
        parent.emplace(next, std::make_pair(cur, move));
        if (next == b) {
          MoveWord word;
          ReflectionTuple x = next;
          while (!(x == a)) {
            const auto& [prev, m] = parent.at(x);
            word.push_back(m);
            x = prev;
          }
          std::reverse(word.begin(), word.end());
          return {true, std::move(word)};
        }
        queue.push_back(std::move(next));
      }
  }
  return {false, {}};
}

std::vector<ReflectionTuple> reflection_factorizations(const WeylElement& w, std::size_t length,
                                                       const RootSystem& roots, std::size_t cap) {
  roots.require_complete("reflection_factorizations");
  const AbsoluteLengthCache len(roots);
  const auto& cartan = roots.cartan();
  std::vector<ReflectionTuple> out;
  std::vector<DimVector> prefix;

  // remaining = (product of prefix)^{-1} w; each factor must cut its length by one
  // unless the requested length exceeds |w|, in which case no pruning is sound.
  const bool minimal = static_cast<std::size_t>(len(w)) == length;
  auto dfs = [&](auto&& self, const WeylElement& remaining) -> void {
    if (prefix.size() == length) {
      if (remaining.is_identity()) {
        if (out.size() >= cap) throw CapExceeded("reflection factorizations", cap);
        out.emplace_back(cartan, prefix);
      }
      return;
    }
    for (std::size_t k = 0; k < roots.positive_roots().size(); ++k) {
      const WeylElement& r = roots.reflections()[k];
      WeylElement rest = r * remaining;  // r is an involution
      if (minimal && static_cast<std::size_t>(len(rest)) != length - prefix.size() - 1) continue;
      prefix.push_back(roots.positive_roots()[k]);
      self(self, rest);
      prefix.pop_back();
    }
  };
  dfs(dfs, w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncpq
