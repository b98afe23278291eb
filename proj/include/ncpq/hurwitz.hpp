#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncpq/weyl.hpp"

namespace ncpq {

/// Ordered tuple of reflections with its cached left-to-right product.
/// Reflections are identified by positive roots.
class ReflectionTuple {
 public:
  ReflectionTuple(const CartanMatrix& c, std::vector<DimVector> roots);

  std::size_t size() const noexcept { return roots_.size(); }
  const std::vector<DimVector>& roots() const noexcept { return roots_; }
  const WeylElement& product() const noexcept { return product_; }

  /// Equality and ordering by the root tuple.
  bool operator==(const ReflectionTuple& rhs) const { return roots_ == rhs.roots_; }
  bool operator<(const ReflectionTuple& rhs) const { return roots_ < rhs.roots_; }

 private:
  friend ReflectionTuple hurwitz_move(const CartanMatrix&, const ReflectionTuple&, std::size_t, bool);
  ReflectionTuple(std::vector<DimVector> roots, WeylElement product)
      : roots_(std::move(roots)), product_(std::move(product)) {}

  std::vector<DimVector> roots_;
  WeylElement product_;
};

struct ReflectionTupleHash {
  std::size_t operator()(const ReflectionTuple& t) const noexcept;
};

/// Left-to-right product of the tuple's reflections, recomputed from scratch.
WeylElement product(const CartanMatrix& c, const std::vector<DimVector>& roots);
inline const WeylElement& product(const ReflectionTuple& t) { return t.product(); }

/// Braid generator rho_i (1-based, 1 <= i < size) or its inverse:
///   forward: (.., s_a, s_b, ..) -> (.., s_b, s_{s_b(a)}, ..)
///   inverse: (.., s_a, s_b, ..) -> (.., s_{s_a(b)}, s_a, ..)
/// The product is unchanged and rechecked.
ReflectionTuple hurwitz_move(const CartanMatrix& c, const ReflectionTuple& t, std::size_t i, bool inverse);

/// Signed move word: +i is rho_i, -i is rho_i^{-1}.
using MoveWord = std::vector<int>;

ReflectionTuple apply_moves(const CartanMatrix& c, const ReflectionTuple& t, const MoveWord& word);

/// Breadth-first closure under all moves, sorted. Throws CapExceeded.
std::vector<ReflectionTuple> hurwitz_orbit(const CartanMatrix& c, const ReflectionTuple& t, std::size_t cap);

struct OrbitDecision {
  bool same = false;
  /// Replaying the word on `a` yields `b` when same is true.
  MoveWord certificate;
};

/// Throws InvalidArgument on length mismatch and CapExceeded if the orbit of
/// `a` outgrows `cap` before `b` is found.
OrbitDecision same_orbit(const CartanMatrix& c, const ReflectionTuple& a, const ReflectionTuple& b, std::size_t cap);

/// Every tuple of `length` positive roots whose reflections multiply to `w`,
/// by depth-first search with absolute-length pruning. Finite type only.
std::vector<ReflectionTuple> reflection_factorizations(const WeylElement& w, std::size_t length,
                                                       const RootSystem& roots, std::size_t cap = 10'000'000);

}  // namespace ncpq
