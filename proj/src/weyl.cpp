#include "ncpq/weyl.hpp"

#include <algorithm>
#include <deque>
#include <thread>
#include <unordered_set>

#include "ncpq/error.hpp"
#include "ncpq/linalg.hpp"

namespace ncpq {

WeylElement::WeylElement(std::size_t n, std::vector<std::int64_t> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw InvalidArgument("WeylElement: expected n*n entries");
}

WeylElement WeylElement::identity(std::size_t n) {
  std::vector<std::int64_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return WeylElement(n, std::move(e));
}

WeylElement WeylElement::reflection(const CartanMatrix& c, const DimVector& root) {
  const std::size_t n = c.size();
  if (root.size() != n) throw InvalidArgument("reflection: dimension mismatch");
  std::vector<std::int64_t> e(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t pairing = c.form_with_simple(j, root);
    for (std::size_t i = 0; i < n; ++i) e[i * n + j] = (i == j ? 1 : 0) - root[i] * pairing;
  }
  return WeylElement(n, std::move(e));
}

WeylElement WeylElement::simple_reflection(const CartanMatrix& c, std::size_t i) {
  return reflection(c, DimVector::unit(c.size(), i));
}

DimVector WeylElement::apply(const DimVector& v) const {
  if (v.size() != n_) throw InvalidArgument("WeylElement::apply: dimension mismatch");
  DimVector out = DimVector::zero(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += entries_[i * n_ + j] * v[j];
    out[i] = s;
  }
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  if (n_ != rhs.n_) throw InvalidArgument("WeylElement product: dimension mismatch");
  std::vector<std::int64_t> e(n_ * n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const std::int64_t a = entries_[i * n_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] += a * rhs.entries_[k * n_ + j];
    }
  return WeylElement(n_, std::move(e));
}

bool WeylElement::is_identity() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (entries_[i * n_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

bool WeylElement::preserves_form(const CartanMatrix& c) const {
  if (c.size() != n_) return false;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s += entries_[i * n_ + a] * c(i, j) * entries_[j * n_ + b];
      if (s != c(a, b)) return false;
    }
  return true;
}

std::string WeylElement::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) s += (j ? ", " : "") + std::to_string(entries_[i * n_ + j]);
    s += ']';
  }
  return s + ']';
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = w.size();
  for (auto x : w.entries()) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) { return a * b; }

WeylElement inverse(const WeylElement& a) {
  const std::size_t n = a.size();
  const QMatrix inv = ncpq::inverse(QMatrix::from_integers(n, n, a.entries()));
  std::vector<std::int64_t> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& x = inv(i, j);
      if (x.get_den() != 1) throw InvalidArgument("inverse: matrix is not unimodular");
      e[i * n + j] = x.get_num().get_si();
    }
  return WeylElement(n, std::move(e));
}

// ---------------------------------------------------------------------------

Reflection::Reflection(const CartanMatrix& c, const DimVector& root) {
  if (root.size() != c.size()) throw InvalidArgument("Reflection: dimension mismatch");
  if (c.form(root, root) != 2) throw InvalidArgument("Reflection: " + root.str() + " is not a real root");
  if (root.is_positive())
    root_ = root;
  else if (root.is_negative())
    root_ = -root;
  else
    throw InvalidArgument("Reflection: " + root.str() + " has mixed signs");
  element_ = WeylElement::reflection(c, root_);
}

DimVector reflect(const CartanMatrix& c, const DimVector& alpha, const DimVector& w) {
  if (alpha.size() != c.size() || w.size() != c.size()) throw InvalidArgument("reflect: dimension mismatch");
  return w - c.form(alpha, w) * alpha;
}

DimVector reflect(const CartanMatrix& c, const Reflection& r, const DimVector& w) { return reflect(c, r.root(), w); }

// ---------------------------------------------------------------------------

RootSystem::RootSystem(Quiver q, std::vector<DimVector> positive_roots, bool complete, std::int64_t height_bound)
    : quiver_(std::move(q)),
      cartan_(cartan_matrix(quiver_)),
      type_(classify_type(cartan_)),
      roots_(std::move(positive_roots)),
      complete_(complete),
      height_bound_(height_bound) {
  std::sort(roots_.begin(), roots_.end(), [](const DimVector& a, const DimVector& b) {
    return a.height() != b.height() ? a.height() < b.height() : a < b;
  });
  reflections_.reserve(roots_.size());
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    index_.emplace(roots_[i], i);
    reflections_.push_back(WeylElement::reflection(cartan_, roots_[i]));
  }
}

std::optional<std::size_t> RootSystem::index_of(const DimVector& root) const {
  auto it = index_.find(root);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void RootSystem::require_complete(const char* operation) const {
  if (!complete_)
    throw UnsupportedType(std::string(operation) + " requires a finite-type quiver (got " + type_.str() + ")");
}

RootSystem generate_roots(const Quiver& q, std::int64_t height_bound) {
  if (height_bound < 1) throw InvalidArgument("generate_roots: height bound must be positive");
  const CartanMatrix c = cartan_matrix(q);
  const std::size_t n = c.size();
  std::unordered_set<DimVector, DimVectorHash> seen;
  std::deque<DimVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    seen.insert(DimVector::unit(n, i));
    frontier.push_back(DimVector::unit(n, i));
  }
  bool truncated = false;
  while (!frontier.empty()) {
    DimVector v = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      DimVector w = v - c.form_with_simple(i, v) * DimVector::unit(n, i);
      if (!w.is_positive()) continue;
      if (w.height() > height_bound) {
        truncated = true;
        continue;
      }
      if (seen.insert(w).second) frontier.push_back(std::move(w));
    }
  }
  const bool complete = classify_type(c).is_finite() && !truncated;
  return RootSystem(q, std::vector<DimVector>(seen.begin(), seen.end()), complete, height_bound);
}

RootSystem finite_root_system(const Quiver& q) {
  const TypeClass t = classify_type(cartan_matrix(q));
  if (!t.is_finite()) throw UnsupportedType("quiver is not of finite type (" + t.str() + ")");
  // The highest root of a rank-n Dynkin diagram has height below 6n.
  return generate_roots(q, 6 * static_cast<std::int64_t>(q.size()) + 1);
}

// ---------------------------------------------------------------------------

bool is_admissible_order(const Quiver& q, std::span<const int> order) {
  const auto n = static_cast<std::size_t>(q.size());
  if (order.size() != n) return false;
  std::vector<bool> used(n + 1, false);
  for (int v : order) {
    if (v < 1 || v > q.size() || used[v]) return false;
    used[v] = true;
  }
  // Hom between distinct simples vanishes, so Ext(S_j, S_i) = -<e_j, e_i>.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto earlier = DimVector::unit(n, order[a] - 1);
      const auto later = DimVector::unit(n, order[b] - 1);
      if (euler_form(q, later, earlier) != 0) return false;
    }
  return true;
}

WeylElement coxeter_element(const Quiver& q, std::span<const int> order) {
  const auto n = static_cast<std::size_t>(q.size());
  std::vector<bool> used(n + 1, false);
  if (order.size() != n) throw InvalidArgument("coxeter order must list every vertex once");
  for (int v : order) {
    if (v < 1 || v > q.size() || used[v]) throw InvalidArgument("coxeter order is not a permutation of 1..n");
    used[v] = true;
  }
  if (!is_admissible_order(q, order))
    throw InvalidArgument("coxeter order does not give an exceptional sequence of simples");
  const CartanMatrix c = cartan_matrix(q);
  WeylElement w = WeylElement::identity(n);
  for (int v : order) w = w * WeylElement::simple_reflection(c, static_cast<std::size_t>(v - 1));
  return w;
}

WeylElement coxeter_element(const Quiver& q) {
  const auto order = q.topological_order();
  return coxeter_element(q, order);
}

// ---------------------------------------------------------------------------

namespace {

int fixed_space_codimension(const WeylElement& w) {
  const std::size_t n = w.size();
  QMatrix m = QMatrix::from_integers(n, n, w.entries()) - QMatrix::identity(n);
  return static_cast<int>(rank(std::move(m)));
}

}  // namespace

std::optional<int> absolute_length_search(const WeylElement& w, const RootSystem& roots, int max_depth,
                                          std::size_t node_cap) {
  if (w.size() != roots.rank()) throw InvalidArgument("absolute_length: dimension mismatch");
  if (w.is_identity()) return 0;
  std::unordered_set<WeylElement, WeylElementHash> seen{WeylElement::identity(w.size())};
  std::vector<WeylElement> layer{WeylElement::identity(w.size())};
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<WeylElement> next;
    for (const auto& u : layer)
      for (const auto& r : roots.reflections()) {
        WeylElement v = u * r;
        if (v == w) return depth;
        if (seen.insert(v).second) {
          if (seen.size() > node_cap) return std::nullopt;
          next.push_back(std::move(v));
        }
      }
    layer = std::move(next);
  }
  return std::nullopt;
}

int absolute_length(const WeylElement& w, const RootSystem& roots, int max_depth) {
  if (w.size() != roots.rank()) throw InvalidArgument("absolute_length: dimension mismatch");
  if (roots.complete()) return fixed_space_codimension(w);
  if (max_depth < 0) max_depth = 2 * static_cast<int>(roots.rank());
  if (auto found = absolute_length_search(w, roots, max_depth)) return *found;
  throw Error("absolute_length: no reflection factorization of length <= " + std::to_string(max_depth) +
              " among roots of height <= " + std::to_string(roots.height_bound()));
}

std::unordered_map<WeylElement, int, WeylElementHash> reflection_length_table(const RootSystem& roots,
                                                                              std::size_t cap) {
  std::unordered_map<WeylElement, int, WeylElementHash> table;
  const auto id = WeylElement::identity(roots.rank());
  table.emplace(id, 0);
  std::deque<WeylElement> queue{id};
  while (!queue.empty()) {
    WeylElement u = std::move(queue.front());
    queue.pop_front();
    const int d = table.at(u);
    for (const auto& r : roots.reflections()) {
      WeylElement v = u * r;
      if (table.emplace(v, d + 1).second) {
        if (table.size() > cap) throw CapExceeded("reflection_length_table", cap);
        queue.push_back(std::move(v));
      }
    }
  }
  return table;
}

int AbsoluteLengthCache::operator()(const WeylElement& w) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  }
  const int len = absolute_length(w, roots_);
  std::unique_lock lock(mutex_);
  return memo_.emplace(w, len).first->second;
}

std::size_t AbsoluteLengthCache::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

bool absolute_leq(const WeylElement& u, const WeylElement& w, const AbsoluteLengthCache& length) {
  return length(u) + length(inverse(u) * w) == length(w);
}

bool absolute_leq(const WeylElement& u, const WeylElement& w, const RootSystem& roots) {
  return absolute_length(u, roots) + absolute_length(inverse(u) * w, roots) == absolute_length(w, roots);
}

std::vector<WeylElement> enumerate_group(const Quiver& q, std::size_t cap, bool allow_truncation) {
  const CartanMatrix c = cartan_matrix(q);
  const std::size_t n = c.size();
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(WeylElement::simple_reflection(c, i));

  std::vector<WeylElement> out{WeylElement::identity(n)};
  std::unordered_set<WeylElement, WeylElementHash> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement v = out[head] * s;
      if (seen.contains(v)) continue;
      if (out.size() >= cap) {
        if (allow_truncation) return out;
        throw CapExceeded("Weyl group enumeration", cap);
      }
      seen.insert(v);
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<WeylElement> noncrossing_partitions(const WeylElement& c, const Quiver& q, std::size_t group_cap,
                                                unsigned jobs) {
  const RootSystem roots = generate_roots(q, 6 * static_cast<std::int64_t>(q.size()) + 1);
  roots.require_complete("noncrossing_partitions");
  const auto group = enumerate_group(q, group_cap);
  const AbsoluteLengthCache length(roots);
  const int target = length(c);

  jobs = std::max(1u, jobs);
  std::vector<char> keep(group.size(), 0);
  auto work = [&](std::size_t first) {
    for (std::size_t i = first; i < group.size(); i += jobs)
      keep[i] = length(group[i]) + length(inverse(group[i]) * c) == target;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
  }

  std::vector<std::pair<int, WeylElement>> picked;
  for (std::size_t i = 0; i < group.size(); ++i)
    if (keep[i]) picked.emplace_back(length(group[i]), group[i]);
  std::sort(picked.begin(), picked.end());
  std::vector<WeylElement> out;
  out.reserve(picked.size());
  for (auto& p : picked) out.push_back(std::move(p.second));
  return out;
}

// ---------------------------------------------------------------------------

ExchangeResult exchange_index(std::span<const int> word, const DimVector& alpha, const RootSystem& roots) {
  const CartanMatrix& c = roots.cartan();
  const std::size_t n = c.size();
  if (alpha.size() != n) throw InvalidArgument("exchange_index: dimension mismatch");
  if (!alpha.is_positive() || c.form(alpha, alpha) != 2)
    throw InvalidArgument("exchange_index: alpha must be a positive real root");
  for (int i : word)
    if (i < 1 || static_cast<std::size_t>(i) > n) throw InvalidArgument("exchange_index: letter out of range");

  const std::size_t k = word.size();
  // images[t] = sigma_{i_{t+1}} ... sigma_{i_k}(alpha) for t = 0..k (1-based letters).
  std::vector<DimVector> images(k + 1);
  images[k] = alpha;
  for (std::size_t t = k; t-- > 0;) images[t] = reflect(c, DimVector::unit(n, word[t] - 1), images[t + 1]);
  if (!images[0].is_negative())
    throw InvalidArgument("exchange_index: image of alpha under the word is not negative");

  std::size_t t = 0;
  for (std::size_t pos = 1; pos <= k; ++pos)
    if (images[pos].is_positive() && images[pos - 1].is_negative()) {
      t = pos;
      break;
    }
  if (t == 0) throw InternalError("exchange_index: no sign change found");

  ExchangeResult res;
  res.t = t;
  WeylElement suffix = WeylElement::identity(n);
  for (std::size_t pos = t + 1; pos <= k; ++pos)
    suffix = suffix * WeylElement::simple_reflection(c, static_cast<std::size_t>(word[pos - 1] - 1));
  res.lhs = WeylElement::simple_reflection(c, static_cast<std::size_t>(word[t - 1] - 1)) * suffix;
  res.rhs = suffix * WeylElement::reflection(c, alpha);
  res.verified = res.lhs == res.rhs;
  return res;
}

int conjugation_depth(const Reflection& r, const RootSystem& roots) {
  roots.require_complete("conjugation_depth");
  const CartanMatrix& c = roots.cartan();
  const std::size_t n = c.size();
  // s_i sigma_beta s_i = sigma_{s_i(beta)}, so conjugation acts on roots.
  std::unordered_map<DimVector, int, DimVectorHash> depth;
  std::deque<DimVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    depth.emplace(DimVector::unit(n, i), 0);
    queue.push_back(DimVector::unit(n, i));
  }
  while (!queue.empty()) {
    DimVector b = std::move(queue.front());
    queue.pop_front();
    if (b == r.root()) return depth.at(b);
    for (std::size_t i = 0; i < n; ++i) {
      DimVector nb = reflect(c, DimVector::unit(n, i), b).abs();
      if (depth.emplace(nb, depth.at(b) + 1).second) queue.push_back(std::move(nb));
    }
  }
  throw InvalidArgument("conjugation_depth: " + r.root().str() + " is not a real root of this quiver");
}

int conjugation_depth(const Reflection& r, const Quiver& q) {
  const RootSystem roots = generate_roots(q, 6 * static_cast<std::int64_t>(q.size()) + 1);
  return conjugation_depth(r, roots);
}

}  // namespace ncpq
