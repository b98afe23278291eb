#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncpq/quiver.hpp"

namespace ncpq {

/// Element of the Weyl group as an integer matrix acting on K0 (column
/// vectors in the basis of simple roots). Row-major storage.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::size_t n, std::vector<std::int64_t> entries);

  static WeylElement identity(std::size_t n);
  /// Matrix of w -> w - (root, w) root.
  static WeylElement reflection(const CartanMatrix& c, const DimVector& root);
  /// Reflection at the 0-based simple root `i`.
  static WeylElement simple_reflection(const CartanMatrix& c, std::size_t i);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  DimVector apply(const DimVector& v) const;
  /// Composition: (a * b)(v) = a(b(v)).
  WeylElement operator*(const WeylElement& rhs) const;

  bool is_identity() const noexcept;
  /// M^T C M == C, i.e. (Mv, Mw) = (v, w) for all v, w.
  bool preserves_form(const CartanMatrix& c) const;

  bool operator==(const WeylElement&) const = default;
  /// Lexicographic on (size, entries); used for canonical ordering only.
  auto operator<=>(const WeylElement&) const = default;

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept;
};

WeylElement compose(const WeylElement& a, const WeylElement& b);
/// Exact inverse; throws InvalidArgument when the matrix is not invertible
/// over the integers.
WeylElement inverse(const WeylElement& a);

/// Reflection at a real root, stored with its positive representative.
class Reflection {
 public:
  /// Throws InvalidArgument unless (root, root) = 2 and the root is positive
  /// or negative; a negative root is replaced by its negation.
  Reflection(const CartanMatrix& c, const DimVector& root);

  const DimVector& root() const noexcept { return root_; }
  const WeylElement& element() const noexcept { return element_; }

  bool operator==(const Reflection& rhs) const { return root_ == rhs.root_; }

 private:
  DimVector root_;
  WeylElement element_;
};

/// w - (alpha, w) alpha.
DimVector reflect(const CartanMatrix& c, const DimVector& alpha, const DimVector& w);
DimVector reflect(const CartanMatrix& c, const Reflection& r, const DimVector& w);

/// Positive real roots reachable from the simple roots, possibly truncated by
/// height. `complete()` is true only for finite type with a closure that
/// stabilized under the bound.
class RootSystem {
 public:
  RootSystem(Quiver q, std::vector<DimVector> positive_roots, bool complete, std::int64_t height_bound);

  const Quiver& quiver() const noexcept { return quiver_; }
  const CartanMatrix& cartan() const noexcept { return cartan_; }
  const TypeClass& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return cartan_.size(); }

  /// Sorted by height, then lexicographically.
  const std::vector<DimVector>& positive_roots() const noexcept { return roots_; }
  /// Reflection matrices, parallel to positive_roots().
  const std::vector<WeylElement>& reflections() const noexcept { return reflections_; }
  bool complete() const noexcept { return complete_; }
  std::int64_t height_bound() const noexcept { return height_bound_; }

  std::optional<std::size_t> index_of(const DimVector& root) const;
  bool contains(const DimVector& root) const { return index_of(root).has_value(); }

  /// Throws UnsupportedType unless complete().
  void require_complete(const char* operation) const;

 private:
  Quiver quiver_;
  CartanMatrix cartan_;
  TypeClass type_;
  std::vector<DimVector> roots_;
  std::vector<WeylElement> reflections_;
  std::unordered_map<DimVector, std::size_t, DimVectorHash> index_;
  bool complete_;
  std::int64_t height_bound_;
};

/// Breadth-first closure of the simple roots under simple reflections,
/// keeping positive vectors of height <= height_bound.
RootSystem generate_roots(const Quiver& q, std::int64_t height_bound);

/// Full positive root system of a finite-type quiver; throws UnsupportedType
/// otherwise.
RootSystem finite_root_system(const Quiver& q);

/// True iff (S_{order[0]}, ..., S_{order[n-1]}) is an exceptional sequence of
/// simples: Hom and Ext from later simples to earlier ones vanish.
bool is_admissible_order(const Quiver& q, std::span<const int> order);

/// sigma_{order[0]} ... sigma_{order[n-1]} with 1-based vertex labels.
/// Throws InvalidArgument if `order` is not an admissible permutation.
WeylElement coxeter_element(const Quiver& q, std::span<const int> order);
/// Coxeter element for Quiver::topological_order().
WeylElement coxeter_element(const Quiver& q);

/// Minimal number of reflections multiplying to `w`.
///
/// Finite type: n - dim Fix(w), an exact rank computation. Otherwise a
/// breadth-first search over products of the root system's reflections up
/// to `max_depth` factors; throws Error when no certificate is found.
int absolute_length(const WeylElement& w, const RootSystem& roots, int max_depth = -1);

/// Breadth-first search for the shortest reflection factorization, ignoring
/// the fast path. Returns nullopt if none of length <= max_depth exists among
/// the available reflections.
std::optional<int> absolute_length_search(const WeylElement& w, const RootSystem& roots, int max_depth,
                                          std::size_t node_cap = 1'000'000);

/// Absolute length of every element reachable by products of reflections,
/// by breadth-first search from the identity. Throws CapExceeded.
std::unordered_map<WeylElement, int, WeylElementHash> reflection_length_table(const RootSystem& roots,
                                                                              std::size_t cap);

/// Thread-safe memo of absolute lengths.
class AbsoluteLengthCache {
 public:
  explicit AbsoluteLengthCache(const RootSystem& roots) : roots_(roots) {}
  int operator()(const WeylElement& w) const;
  std::size_t size() const;

 private:
  const RootSystem& roots_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<WeylElement, int, WeylElementHash> memo_;
};

/// |u| + |u^{-1} w| = |w|.
bool absolute_leq(const WeylElement& u, const WeylElement& w, const RootSystem& roots);
bool absolute_leq(const WeylElement& u, const WeylElement& w, const AbsoluteLengthCache& length);

/// Breadth-first closure of the identity under right multiplication by
/// simple reflections, in discovery order. Throws CapExceeded when the
/// group outgrows `cap`, unless `allow_truncation` is set, in which case the
/// first `cap` elements are returned.
std::vector<WeylElement> enumerate_group(const Quiver& q, std::size_t cap, bool allow_truncation = false);

/// Nc(W, c) = {w : w <= c}, sorted by absolute length then entries. Finite
/// type only. The filter runs on `jobs` threads; output is independent of
/// the job count.
std::vector<WeylElement> noncrossing_partitions(const WeylElement& c, const Quiver& q, std::size_t group_cap = 1'000'000,
                                                unsigned jobs = 1);

struct ExchangeResult {
  /// 1-based position in the word.
  std::size_t t = 0;
  /// sigma_{i_t} ... sigma_{i_k}
  WeylElement lhs;
  /// sigma_{i_{t+1}} ... sigma_{i_k} sigma_alpha
  WeylElement rhs;
  bool verified = false;
};

/// For a word (i_1..i_k) of 1-based simple indices and a positive root alpha
/// with sigma_{i_1}...sigma_{i_k}(alpha) < 0, returns the minimal t at which
/// the partial image changes sign, with the matrix identity checked.
ExchangeResult exchange_index(std::span<const int> word, const DimVector& alpha, const RootSystem& roots);

/// Minimal length of w1 with r = w1 s_j w1^{-1} for a simple reflection s_j.
/// Finite type only.
int conjugation_depth(const Reflection& r, const RootSystem& roots);
int conjugation_depth(const Reflection& r, const Quiver& q);

}  // namespace ncpq
