#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ncpq/rep.hpp"

namespace ncpq {

/// Ordered list of positive roots, each naming the registry indecomposable
/// with that dimension vector.
struct ExcSequence {
  std::vector<DimVector> roots;

  std::size_t size() const noexcept { return roots.size(); }
  auto operator<=>(const ExcSequence&) const = default;
  bool operator==(const ExcSequence&) const = default;
};

struct ExcSequenceHash {
  std::size_t operator()(const ExcSequence& s) const noexcept;
};

/// Thick subcategory in canonical form: its indecomposables and its relative
/// simples, both sorted.
struct Subcategory {
  std::vector<DimVector> ind_roots;
  std::vector<DimVector> simples;

  bool contains(const DimVector& root) const;
  /// Inclusion of indecomposable sets.
  bool is_subcategory_of(const Subcategory& other) const;
  bool operator==(const Subcategory&) const = default;
};

/// Hom(E_j, E_i) = Ext(E_j, E_i) = 0 for j > i. Throws InvalidArgument on a
/// root missing from the registry.
bool is_exceptional_sequence(std::span<const DimVector> roots, const IndecRegistry& reg);

/// Registry roots M with Hom(N, M) = Ext(N, M) = 0 for every N in `roots`.
std::vector<DimVector> right_perp(std::span<const DimVector> roots, const IndecRegistry& reg);
/// Registry roots M with Hom(M, N) = Ext(M, N) = 0 for every N in `roots`.
std::vector<DimVector> left_perp(std::span<const DimVector> roots, const IndecRegistry& reg);

/// Relative simples of the thick subcategory with indecomposables `ind_roots`:
/// members admitting no injective intertwiner from another member.
std::vector<DimVector> relative_simples(std::span<const DimVector> ind_roots, const IndecRegistry& reg);

/// C(E) = left_perp(right_perp(E)), with its relative simples. Throws
/// InvalidArgument for a non-exceptional input and InternalError when the
/// closure is not a double-perp fixpoint or has the wrong rank.
Subcategory thick_closure(const ExcSequence& seq, const IndecRegistry& reg);

/// Braid generator on a complete sequence (1-based i):
///   forward: (.., X, Y, ..) -> (.., Y, |s_Y(X)|, ..)
///   inverse: (.., X, Y, ..) -> (.., |s_X(Y)|, X, ..)
ExcSequence braid_mutate(const ExcSequence& seq, std::size_t i, bool inverse, const IndecRegistry& reg);

/// Prepends registry roots (smallest admissible one first) until the
/// sequence is complete; the input becomes the tail of the result.
ExcSequence extend_to_complete(const ExcSequence& seq, const IndecRegistry& reg);

/// Support growth, relative projectivity, and the top condition against the
/// support of the preceding entries.
bool is_projective_sequence(std::span<const DimVector> roots, const IndecRegistry& reg);

/// Every exceptional sequence of `length` roots drawn from `pool`, by
/// backtracking with pairwise pruning. Sorted. Throws CapExceeded.
std::vector<ExcSequence> enumerate_exceptional_sequences(const IndecRegistry& reg, std::span<const DimVector> pool,
                                                         std::size_t length, std::size_t cap = 1'000'000);

/// Complete exceptional sequences of the whole module category.
std::vector<ExcSequence> enumerate_complete_sequences(const IndecRegistry& reg, std::size_t cap = 1'000'000);

/// Hom-orthogonal sets of registry roots with acyclic Ext-quiver, including
/// the empty set. Each set sorted; the list sorted.
std::vector<std::vector<DimVector>> enumerate_exceptional_antichains(const IndecRegistry& reg);

/// Is the Ext-quiver (arrow A -> B when Ext(A, B) != 0, A != B) acyclic?
bool ext_quiver_acyclic(std::span<const DimVector> set, const IndecRegistry& reg);

/// Topological order of the Ext-quiver, smallest root first among
/// incomparable members. Throws InvalidArgument if the quiver has a cycle.
ExcSequence order_antichain(std::span<const DimVector> antichain, const IndecRegistry& reg);

/// Registry roots that can fill slot `i` (0-based) of `seq` keeping it exceptional.
std::vector<DimVector> slot_fillers(const ExcSequence& seq, std::size_t i, const IndecRegistry& reg);

struct MutationGraph {
  std::vector<ExcSequence> nodes;
  /// (from, to) node indices for each forward move rho_i, i = 1..n-1.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool connected = false;
};

/// Graph of forward braid moves on a closed set of complete sequences.
/// Throws InternalError when a move leaves the set.
MutationGraph mutation_graph(std::vector<ExcSequence> sequences, const IndecRegistry& reg);

}  // namespace ncpq
