#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncpq {

/// Element of the Grothendieck group K0 = Z^n in the basis of simple
/// modules. Doubles as a dimension vector and as a root.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  DimVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static DimVector zero(std::size_t n) { return DimVector(std::vector<std::int64_t>(n, 0)); }
  /// Simple root at 0-based position `i`.
  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }

  bool is_zero() const noexcept;
  /// Nonzero with every entry >= 0.
  bool is_positive() const noexcept;
  /// Nonzero with every entry <= 0.
  bool is_negative() const noexcept;
  std::int64_t height() const noexcept;
  /// 0-based indices of the nonzero entries.
  std::vector<std::size_t> support() const;

  /// Coordinate-wise absolute value; on a root this is the positive
  /// representative of {beta, -beta}.
  DimVector abs() const;

  DimVector operator-() const;
  DimVector& operator+=(const DimVector& rhs);
  DimVector& operator-=(const DimVector& rhs);
  friend DimVector operator+(DimVector lhs, const DimVector& rhs) { return lhs += rhs; }
  friend DimVector operator-(DimVector lhs, const DimVector& rhs) { return lhs -= rhs; }
  friend DimVector operator*(std::int64_t k, DimVector v);

  /// Lexicographic on coordinates.
  auto operator<=>(const DimVector&) const = default;
  bool operator==(const DimVector&) const = default;

  /// "(1,0,2)"
  std::string str() const;

 private:
  std::vector<std::int64_t> coords_;
};

struct DimVectorHash {
  std::size_t operator()(const DimVector& v) const noexcept;
};

/// Arrow carrying the linear map from the space at `head` to the space at
/// `tail`. Vertices are 1-based.
struct Arrow {
  int head;
  int tail;
  auto operator<=>(const Arrow&) const = default;
};

/// Acyclic, loop-free quiver on vertices 1..n; parallel arrows allowed.
class Quiver {
 public:
  Quiver() = default;
  /// Throws InvalidArgument on out-of-range vertices, loops or cycles.
  Quiver(int n, std::vector<Arrow> arrows);

  int size() const noexcept { return n_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  /// Kahn's algorithm, smallest available vertex first. Every arrow's head
  /// precedes its tail.
  std::vector<int> topological_order() const;

  /// Equality by vertex count and arrow multiset.
  bool operator==(const Quiver& rhs) const;

  /// Canonical text in the ingestion format.
  std::string str() const;

 private:
  int n_ = 0;
  std::vector<Arrow> arrows_;
};

/// Parses "vertices <n>" / "arrow <h> <t>" text. `#` starts a comment.
/// Throws ParseError carrying the offending line.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::string& path);

/// <v,w> = sum_i v_i w_i - sum_{arrows} v_head w_tail.
std::int64_t euler_form(const Quiver& q, const DimVector& v, const DimVector& w);
/// (v,w) = <v,w> + <w,v>.
std::int64_t symmetric_form(const Quiver& q, const DimVector& v, const DimVector& w);

/// Symmetric generalized Cartan matrix, diagonal 2, off-diagonal <= 0.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  /// Validates the invariants; throws InvalidArgument.
  CartanMatrix(std::size_t n, std::vector<std::int64_t> entries);

  std::size_t size() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  /// (v,w) computed from the matrix.
  std::int64_t form(const DimVector& v, const DimVector& w) const;
  /// (e_i, v) for 0-based i.
  std::int64_t form_with_simple(std::size_t i, const DimVector& v) const;

  bool operator==(const CartanMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

CartanMatrix cartan_matrix(const Quiver& q);

enum class TypeKind { Finite, Affine, Indefinite };

struct TypeClass {
  TypeKind kind = TypeKind::Indefinite;
  /// Finite: Dynkin label such as "A3", "D4" or "A1xA2" for disconnected
  /// quivers. Empty otherwise.
  std::string label;

  bool is_finite() const noexcept { return kind == TypeKind::Finite; }
  /// "Finite(A2)", "Affine", "Indefinite".
  std::string str() const;
  bool operator==(const TypeClass&) const = default;
};

TypeClass classify_type(const CartanMatrix& c);

}  // namespace ncpq
