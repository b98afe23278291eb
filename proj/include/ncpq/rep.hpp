#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "ncpq/linalg.hpp"
#include "ncpq/quiver.hpp"
#include "ncpq/weyl.hpp"

namespace ncpq {

/// Finite-dimensional representation over Q. The map of arrow `a` is a
/// dims[tail-1] x dims[head-1] matrix (it sends the head space to the tail
/// space).
class Representation {
 public:
  /// Validates map shapes against the quiver's arrows.
  Representation(Quiver q, std::vector<std::size_t> dims, std::vector<QMatrix> maps);

  static Representation zero(const Quiver& q);
  /// One-dimensional at the 1-based `vertex`, zero elsewhere.
  static Representation simple(const Quiver& q, int vertex);
  static Representation direct_sum(const Representation& a, const Representation& b);

  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<QMatrix>& maps() const noexcept { return maps_; }
  DimVector dim() const;

  bool operator==(const Representation&) const = default;

 private:
  Quiver quiver_;
  std::vector<std::size_t> dims_;
  std::vector<QMatrix> maps_;
};

/// Intertwiners M -> N: a basis of solutions (f_i) of f_tail M_a = N_a f_head,
/// each solution given as one matrix per vertex (dims N_i x dims M_i).
std::vector<std::vector<QMatrix>> hom_basis(const Representation& m, const Representation& n);

std::size_t hom_dim(const Representation& m, const Representation& n);

/// hom_dim - <dim M, dim N>. Throws InternalError if negative.
std::size_t ext_dim(const Representation& m, const Representation& n);

/// Ext computed independently as the cokernel of
///   (+)_i Hom(M_i, N_i) -> (+)_a Hom(M_head(a), N_tail(a)),  (f) -> f_t M_a - N_a f_h,
/// which is Hom(-, N) applied to the standard projective resolution of M.
std::size_t ext_dim_by_resolution(const Representation& m, const Representation& n);

/// End(M) = k and Ext(M, M) = 0.
bool is_exceptional(const Representation& m);

/// 1-based vertices i where M_i is not covered by the images of incoming arrows.
std::vector<int> top_simples(const Representation& m);

/// An injective intertwiner N -> M if one exists. A generic combination of
/// the Hom basis is tried with seeded integer coefficients.
std::optional<std::vector<QMatrix>> injective_map(const Representation& n, const Representation& m);
bool has_injective_map(const Representation& n, const Representation& m);

/// Indecomposable with dimension vector `root`, built by reflection functors
/// from a simple along a sink-admissible word. Finite type only.
Representation indecomposable_for_root(const Quiver& q, const DimVector& root);

/// Complete table positive root -> indecomposable for a finite-type quiver,
/// with lazily memoized Hom dimensions. Safe for concurrent reads.
class IndecRegistry {
 public:
  const Quiver& quiver() const noexcept { return roots_->quiver(); }
  const RootSystem& roots() const noexcept { return *roots_; }
  std::size_t size() const noexcept { return reps_.size(); }

  /// Throws InvalidArgument if `root` is not a positive root.
  std::size_t index(const DimVector& root) const;
  const Representation& at(const DimVector& root) const { return reps_[index(root)]; }
  const Representation& at(std::size_t idx) const { return reps_.at(idx); }
  /// Same order as roots().positive_roots().
  const std::vector<DimVector>& positive_roots() const noexcept { return roots_->positive_roots(); }

  std::size_t hom(const DimVector& a, const DimVector& b) const { return hom(index(a), index(b)); }
  std::size_t ext(const DimVector& a, const DimVector& b) const { return ext(index(a), index(b)); }
  std::size_t hom(std::size_t a, std::size_t b) const;
  std::size_t ext(std::size_t a, std::size_t b) const;

 private:
  friend IndecRegistry build_registry(const Quiver& q);
  IndecRegistry(std::shared_ptr<const RootSystem> roots, std::vector<Representation> reps);

  std::shared_ptr<const RootSystem> roots_;
  std::vector<Representation> reps_;
  std::unique_ptr<std::atomic<int>[]> hom_memo_;
};

/// Throws UnsupportedType for non-finite quivers and InternalError when any
/// certificate (dimension, End = k, Ext self-vanishing) fails.
IndecRegistry build_registry(const Quiver& q);

}  // namespace ncpq
