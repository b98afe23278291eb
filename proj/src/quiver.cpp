#include "ncpq/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

#include "ncpq/error.hpp"
#include "ncpq/linalg.hpp"

namespace ncpq {

DimVector DimVector::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw InvalidArgument("DimVector::unit: index out of range");
  DimVector v = zero(n);
  v[i] = 1;
  return v;
}

bool DimVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](auto x) { return x == 0; });
}

bool DimVector::is_positive() const noexcept {
  return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](auto x) { return x >= 0; });
}

bool DimVector::is_negative() const noexcept {
  return !is_zero() && std::all_of(coords_.begin(), coords_.end(), [](auto x) { return x <= 0; });
}

std::int64_t DimVector::height() const noexcept {
  std::int64_t h = 0;
  for (auto x : coords_) h += x;
  return h;
}

std::vector<std::size_t> DimVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) s.push_back(i);
  return s;
}

DimVector DimVector::abs() const {
  DimVector out = *this;
  for (auto& x : out.coords_) x = x < 0 ? -x : x;
  return out;
}

DimVector DimVector::operator-() const {
  DimVector out = *this;
  for (auto& x : out.coords_) x = -x;
  return out;
}

DimVector& DimVector::operator+=(const DimVector& rhs) {
  if (rhs.size() != size()) throw InvalidArgument("DimVector: dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

DimVector& DimVector::operator-=(const DimVector& rhs) {
  if (rhs.size() != size()) throw InvalidArgument("DimVector: dimension mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

DimVector operator*(std::int64_t k, DimVector v) {
  for (auto& x : v.coords_) x *= k;
  return v;
}

std::string DimVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ')';
}

std::size_t DimVectorHash::operator()(const DimVector& v) const noexcept {
  std::size_t h = v.size();
  for (auto x : v.coords()) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------------------

namespace {

bool has_cycle(int n, const std::vector<Arrow>& arrows) {
  std::vector<int> indeg(n + 1, 0);
  std::vector<std::vector<int>> out(n + 1);
  for (const auto& a : arrows) {
    out[a.head].push_back(a.tail);
    ++indeg[a.tail];
  }
  std::vector<int> stack;
  for (int v = 1; v <= n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int t : out[v])
      if (--indeg[t] == 0) stack.push_back(t);
  }
  return seen != n;
}

}  // namespace

Quiver::Quiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
  if (n_ < 1) throw InvalidArgument("quiver needs at least one vertex");
  for (const auto& a : arrows_) {
    if (a.head < 1 || a.head > n_ || a.tail < 1 || a.tail > n_)
      throw InvalidArgument("arrow " + std::to_string(a.head) + " " + std::to_string(a.tail) +
                            ": vertex index out of range 1.." + std::to_string(n_));
    if (a.head == a.tail) throw InvalidArgument("loop arrow at vertex " + std::to_string(a.head));
  }
  if (has_cycle(n_, arrows_)) throw InvalidArgument("quiver has an oriented cycle");
}

std::vector<int> Quiver::topological_order() const {
  std::vector<int> indeg(n_ + 1, 0);
  for (const auto& a : arrows_) ++indeg[a.tail];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= n_; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const auto& a : arrows_)
      if (a.head == v && --indeg[a.tail] == 0) ready.push(a.tail);
  }
  return order;
}

bool Quiver::operator==(const Quiver& rhs) const {
  if (n_ != rhs.n_ || arrows_.size() != rhs.arrows_.size()) return false;
  auto a = arrows_;
  auto b = rhs.arrows_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string Quiver::str() const {
  std::string s = "vertices " + std::to_string(n_) + "\n";
  for (const auto& a : arrows_) s += "arrow " + std::to_string(a.head) + " " + std::to_string(a.tail) + "\n";
  return s;
}

Quiver parse_quiver(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Arrow> arrows;
  std::vector<int> arrow_lines;

  auto parse_int = [&](std::istringstream& ls, const char* what) {
    std::string tok;
    if (!(ls >> tok)) throw ParseError(lineno, std::string("missing ") + what);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError(lineno, std::string("expected integer ") + what + ", got '" + tok + "'");
    return static_cast<int>(value);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword == "vertices") {
      if (n != -1) throw ParseError(lineno, "duplicate 'vertices' line");
      n = parse_int(ls, "vertex count");
      if (n < 1) throw ParseError(lineno, "vertex count must be positive");
    } else if (keyword == "arrow") {
      if (n == -1) throw ParseError(lineno, "'arrow' before 'vertices'");
      int h = parse_int(ls, "arrow head");
      int t = parse_int(ls, "arrow tail");
      if (h < 1 || h > n || t < 1 || t > n) throw ParseError(lineno, "vertex index out of range 1.." + std::to_string(n));
      if (h == t) throw ParseError(lineno, "loop arrow at vertex " + std::to_string(h));
      arrows.push_back({h, t});
      arrow_lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown keyword '" + keyword + "'");
    }
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
  }
  if (n == -1) throw ParseError(lineno, "missing 'vertices' line");
  if (has_cycle(n, arrows)) throw ParseError(0, "quiver has an oriented cycle");
  return Quiver(n, std::move(arrows));
}

Quiver load_quiver(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open quiver file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_quiver(buf.str());
}

// ---------------------------------------------------------------------------

std::int64_t euler_form(const Quiver& q, const DimVector& v, const DimVector& w) {
  const auto n = static_cast<std::size_t>(q.size());
  if (v.size() != n || w.size() != n) throw InvalidArgument("euler_form: dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) s += v[i] * w[i];
  for (const auto& a : q.arrows()) s -= v[a.head - 1] * w[a.tail - 1];
  return s;
}

std::int64_t symmetric_form(const Quiver& q, const DimVector& v, const DimVector& w) {
  return euler_form(q, v, w) + euler_form(q, w, v);
}

CartanMatrix::CartanMatrix(std::size_t n, std::vector<std::int64_t> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw InvalidArgument("CartanMatrix: expected n*n entries");
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 2) throw InvalidArgument("CartanMatrix: diagonal entry is not 2");
    for (std::size_t j = 0; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) throw InvalidArgument("CartanMatrix: not symmetric");
      if (i != j && (*this)(i, j) > 0) throw InvalidArgument("CartanMatrix: positive off-diagonal entry");
    }
  }
}

std::int64_t CartanMatrix::form(const DimVector& v, const DimVector& w) const {
  if (v.size() != n_ || w.size() != n_) throw InvalidArgument("CartanMatrix::form: dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) s += v[i] * (*this)(i, j) * w[j];
  }
  return s;
}

std::int64_t CartanMatrix::form_with_simple(std::size_t i, const DimVector& v) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
  return s;
}

CartanMatrix cartan_matrix(const Quiver& q) {
  const auto n = static_cast<std::size_t>(q.size());
  std::vector<std::int64_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 2;
  for (const auto& a : q.arrows()) {
    e[(a.head - 1) * n + (a.tail - 1)] -= 1;
    e[(a.tail - 1) * n + (a.head - 1)] -= 1;
  }
  return CartanMatrix(n, std::move(e));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::int64_t> principal_submatrix(const CartanMatrix& c, const std::vector<std::size_t>& idx) {
  std::vector<std::int64_t> m;
  m.reserve(idx.size() * idx.size());
  for (auto i : idx)
    for (auto j : idx) m.push_back(c(i, j));
  return m;
}

// Sylvester's criterion with exact minors.
bool positive_definite(const CartanMatrix& c, const std::vector<std::size_t>& idx) {
  for (std::size_t k = 1; k <= idx.size(); ++k) {
    std::vector<std::size_t> lead(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
    if (determinant(k, principal_submatrix(c, lead)) <= 0) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> components(const CartanMatrix& c) {
  const std::size_t n = c.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size() - 1);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::size_t u = 0; u < n; ++u)
        if (u != v && c(v, u) != 0 && comp[u] == -1) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

// Positive definite connected simply-laced diagrams are trees of type A, D, E.
std::string dynkin_label(const CartanMatrix& c, const std::vector<std::size_t>& comp) {
  const std::size_t r = comp.size();
  std::vector<std::vector<std::size_t>> adj(r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      if (a != b && c(comp[a], comp[b]) != 0) adj[a].push_back(b);

  std::size_t branch = r;
  for (std::size_t a = 0; a < r; ++a)
    if (adj[a].size() >= 3) branch = a;
  if (branch == r) return "A" + std::to_string(r);

  std::vector<std::size_t> arms;
  for (auto start : adj[branch]) {
    std::size_t len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(r);
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2) return "E" + std::to_string(r);
  throw InternalError("positive definite diagram with unexpected shape");
}

}  // namespace

std::string TypeClass::str() const {
  switch (kind) {
    case TypeKind::Finite:
      return "Finite(" + label + ")";
    case TypeKind::Affine:
      return "Affine";
    case TypeKind::Indefinite:
      break;
  }
  return "Indefinite";
}

TypeClass classify_type(const CartanMatrix& c) {
  bool all_finite = true;
  bool all_semidefinite = true;
  std::string label;
  for (const auto& comp : components(c)) {
    if (positive_definite(c, comp)) {
      if (!label.empty()) label += 'x';
      label += dynkin_label(c, comp);
      continue;
    }
    all_finite = false;
    // Connected and singular with every one-vertex deletion positive definite
    // means positive semidefinite of corank exactly 1.
    bool affine = determinant(comp.size(), principal_submatrix(c, comp)) == 0;
    for (std::size_t drop = 0; affine && drop < comp.size(); ++drop) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < comp.size(); ++k)
        if (k != drop) rest.push_back(comp[k]);
      affine = positive_definite(c, rest);
    }
    if (!affine) all_semidefinite = false;
  }
  if (all_finite) return {TypeKind::Finite, label};
  if (all_semidefinite) return {TypeKind::Affine, {}};
  return {TypeKind::Indefinite, {}};
}

}  // namespace ncpq
