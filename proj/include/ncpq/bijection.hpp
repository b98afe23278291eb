#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncpq/exc.hpp"
#include "ncpq/hurwitz.hpp"

namespace ncpq {

/// Product of the reflections at the relative simples of `sub`, taken in the
/// Ext-quiver order of order_antichain().
WeylElement cox(const Subcategory& sub, const IndecRegistry& reg);

/// Every complete exceptional sequence of `sub` (roots from its
/// indecomposables, length = number of simples) multiplies to cox(sub).
/// `sequences_checked` receives the number of sequences compared.
bool verify_well_defined(const Subcategory& sub, const IndecRegistry& reg, std::size_t cap = 1'000'000,
                         std::size_t* sequences_checked = nullptr);

/// The registry root carrying the reflection. Throws InvalidArgument when the
/// root has no indecomposable (e.g. a reflection from a non-finite quiver).
DimVector reflection_to_root_module(const Reflection& r, const IndecRegistry& reg);

/// Shortest reflection factorization of `w`; among shortest ones, the
/// lexicographically smallest root tuple. Finite type only.
ReflectionTuple factor_in_reflections(const WeylElement& w, const RootSystem& roots);

struct BijectionOptions {
  /// 1-based admissible ordering; the quiver's topological order when empty.
  std::vector<int> coxeter_order;
  std::size_t group_cap = 1'000'000;
  std::size_t sequence_cap = 1'000'000;
  /// Minimal factorizations of c checked exhaustively up to this count;
  /// beyond it a seeded sample of this size is taken.
  std::size_t factorization_limit = 100'000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct BijectionReport {
  std::string quiver;
  std::string type;
  std::vector<int> coxeter_order;
  std::size_t subcategories = 0;
  std::size_t nc = 0;
  /// Complete sequences compared across all subcategories.
  std::size_t well_defined_witnesses = 0;
  std::size_t factorizations_checked = 0;
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  bool order_iso = false;
  bool cap_exceeded = false;
  std::vector<nlohmann::json> failures;
  double elapsed_ms = 0;

  bool all_flags() const { return well_defined && injective && surjective && order_iso && failures.empty(); }
  bool operator==(const BijectionReport&) const = default;
};

/// Exhaustive check that cox is a poset isomorphism from the exceptional
/// subcategories onto Nc(W, c). A cap overflow yields a partial report with
/// cap_exceeded set instead of an exception.
BijectionReport verify_bijection(const Quiver& q, const BijectionOptions& options = {});

}  // namespace ncpq
