#include "ncpq/rep.hpp"

#include <algorithm>
#include <random>

#include "ncpq/error.hpp"

namespace ncpq {

Representation::Representation(Quiver q, std::vector<std::size_t> dims, std::vector<QMatrix> maps)
    : quiver_(std::move(q)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.size() != static_cast<std::size_t>(quiver_.size()))
    throw InvalidArgument("Representation: one dimension per vertex expected");
  if (maps_.size() != quiver_.arrows().size()) throw InvalidArgument("Representation: one map per arrow expected");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arrow = quiver_.arrows()[a];
    const std::size_t rows = dims_[arrow.tail - 1];
    const std::size_t cols = dims_[arrow.head - 1];
    if (maps_[a].rows() != rows || maps_[a].cols() != cols)
      throw InvalidArgument("Representation: map of arrow " + std::to_string(a + 1) + " has wrong shape");
  }
}

Representation Representation::zero(const Quiver& q) {
  std::vector<QMatrix> maps(q.arrows().size());
  return Representation(q, std::vector<std::size_t>(static_cast<std::size_t>(q.size()), 0), std::move(maps));
}

Representation Representation::simple(const Quiver& q, int vertex) {
  if (vertex < 1 || vertex > q.size()) throw InvalidArgument("Representation::simple: vertex out of range");
  std::vector<std::size_t> dims(static_cast<std::size_t>(q.size()), 0);
  dims[vertex - 1] = 1;
  std::vector<QMatrix> maps;
  for (const auto& a : q.arrows()) maps.emplace_back(dims[a.tail - 1], dims[a.head - 1]);
  return Representation(q, std::move(dims), std::move(maps));
}

Representation Representation::direct_sum(const Representation& a, const Representation& b) {
  if (!(a.quiver_ == b.quiver_)) throw InvalidArgument("direct_sum: quiver mismatch");
  std::vector<std::size_t> dims(a.dims_.size());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims_[i] + b.dims_[i];
  std::vector<QMatrix> maps;
  for (std::size_t k = 0; k < a.maps_.size(); ++k) {
    const QMatrix& x = a.maps_[k];
    const QMatrix& y = b.maps_[k];
    QMatrix m(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
    maps.push_back(std::move(m));
  }
  return Representation(a.quiver_, std::move(dims), std::move(maps));
}

DimVector Representation::dim() const {
  std::vector<std::int64_t> v(dims_.begin(), dims_.end());
  return DimVector(std::move(v));
}

// ---------------------------------------------------------------------------

namespace {

// Unknowns are the entries of f_i (dims N_i x dims M_i), vertex blocks in
// order, row-major inside a block. One block of equations per arrow.
struct IntertwinerSystem {
  QMatrix matrix;
  std::vector<std::size_t> offsets;
};

IntertwinerSystem intertwiner_system(const Representation& m, const Representation& n) {
  if (!(m.quiver() == n.quiver())) throw InvalidArgument("hom: representations live on different quivers");
  const auto& md = m.dims();
  const auto& nd = n.dims();
  const std::size_t verts = md.size();

  IntertwinerSystem sys;
  sys.offsets.resize(verts + 1, 0);
  for (std::size_t i = 0; i < verts; ++i) sys.offsets[i + 1] = sys.offsets[i] + nd[i] * md[i];

  std::size_t rows = 0;
  for (const auto& a : m.quiver().arrows()) rows += nd[a.tail - 1] * md[a.head - 1];
  sys.matrix = QMatrix(rows, sys.offsets[verts]);

  std::size_t row0 = 0;
  for (std::size_t k = 0; k < m.quiver().arrows().size(); ++k) {
    const auto& a = m.quiver().arrows()[k];
    const std::size_t h = a.head - 1, t = a.tail - 1;
    const QMatrix& ma = m.maps()[k];  // md[t] x md[h]
    const QMatrix& na = n.maps()[k];  // nd[t] x nd[h]
    // (f_t M_a - N_a f_h)[r][c]
    for (std::size_t r = 0; r < nd[t]; ++r)
      for (std::size_t c = 0; c < md[h]; ++c) {
        const std::size_t row = row0 + r * md[h] + c;
        for (std::size_t x = 0; x < md[t]; ++x) sys.matrix(row, sys.offsets[t] + r * md[t] + x) += ma(x, c);
        for (std::size_t x = 0; x < nd[h]; ++x) sys.matrix(row, sys.offsets[h] + x * md[h] + c) -= na(r, x);
      }
    row0 += nd[t] * md[h];
  }
  return sys;
}

std::vector<QMatrix> unpack(const IntertwinerSystem& sys, const Representation& m, const Representation& n,
                            const QMatrix& vectors, std::size_t column) {
  std::vector<QMatrix> f;
  for (std::size_t i = 0; i < m.dims().size(); ++i) {
    QMatrix block(n.dims()[i], m.dims()[i]);
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c)
        block(r, c) = vectors(sys.offsets[i] + r * block.cols() + c, column);
    f.push_back(std::move(block));
  }
  return f;
}

}  // namespace

std::vector<std::vector<QMatrix>> hom_basis(const Representation& m, const Representation& n) {
  const auto sys = intertwiner_system(m, n);
  const QMatrix basis = nullspace(sys.matrix);
  std::vector<std::vector<QMatrix>> out;
  for (std::size_t k = 0; k < basis.cols(); ++k) out.push_back(unpack(sys, m, n, basis, k));
  return out;
}

std::size_t hom_dim(const Representation& m, const Representation& n) {
  const auto sys = intertwiner_system(m, n);
  return sys.matrix.cols() - rank(sys.matrix);
}

std::size_t ext_dim(const Representation& m, const Representation& n) {
  const auto hom = static_cast<std::int64_t>(hom_dim(m, n));
  const std::int64_t e = hom - euler_form(m.quiver(), m.dim(), n.dim());
  if (e < 0) throw InternalError("ext_dim: negative value " + std::to_string(e));
  return static_cast<std::size_t>(e);
}

std::size_t ext_dim_by_resolution(const Representation& m, const Representation& n) {
  const auto sys = intertwiner_system(m, n);
  return sys.matrix.rows() - rank(sys.matrix);
}

bool is_exceptional(const Representation& m) { return hom_dim(m, m) == 1 && ext_dim(m, m) == 0; }

std::vector<int> top_simples(const Representation& m) {
  std::vector<int> top;
  const auto& arrows = m.quiver().arrows();
  for (std::size_t i = 0; i < m.dims().size(); ++i) {
    if (m.dims()[i] == 0) continue;
    std::vector<QMatrix> incoming;
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (static_cast<std::size_t>(arrows[k].tail - 1) == i) incoming.push_back(m.maps()[k]);
    const std::size_t covered = incoming.empty() ? 0 : rank(hstack(incoming, m.dims()[i]));
    if (covered < m.dims()[i]) top.push_back(static_cast<int>(i + 1));
  }
  return top;
}

std::optional<std::vector<QMatrix>> injective_map(const Representation& n, const Representation& m) {
  for (std::size_t i = 0; i < n.dims().size(); ++i)
    if (n.dims()[i] > m.dims()[i]) return std::nullopt;
  const auto sys = intertwiner_system(n, m);
  const QMatrix basis = nullspace(sys.matrix);

  auto injective = [&](const std::vector<QMatrix>& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (rank(f[i]) != n.dims()[i]) return false;
    return true;
  };
  if (n.dim().is_zero()) return unpack(sys, n, m, QMatrix(basis.rows(), 1), 0);
  if (basis.cols() == 0) return std::nullopt;

  // Injective maps form a Zariski-open subset of Hom; a nonempty one contains
  // almost every integer combination.
  std::mt19937_64 rng(0x5eedULL + basis.cols());
  std::uniform_int_distribution<long> coeff(-97, 97);
  for (int attempt = 0; attempt < 4; ++attempt) {
    QMatrix combo(basis.rows(), 1);
    for (std::size_t k = 0; k < basis.cols(); ++k) {
      const mpq_class a = attempt == 0 && basis.cols() == 1 ? mpq_class(1) : mpq_class(coeff(rng));
      for (std::size_t r = 0; r < basis.rows(); ++r) combo(r, 0) += a * basis(r, k);
    }
    auto f = unpack(sys, n, m, combo, 0);
    if (injective(f)) return f;
  }
  return std::nullopt;
}

bool has_injective_map(const Representation& n, const Representation& m) { return injective_map(n, m).has_value(); }

// ---------------------------------------------------------------------------

namespace {

// Working quiver for reflection-functor transport: arrow k keeps its index but
// may be reversed relative to the original.
std::vector<Arrow> reflect_quiver_at(std::vector<Arrow> arrows, int k) {
  for (auto& a : arrows)
    if (a.head == k || a.tail == k) std::swap(a.head, a.tail);
  return arrows;
}

// BGP functor S_k^- at a source k: the new space at k is the cokernel of
// M_k -> (+)_{a: k -> t} M_t, and every arrow at k is reversed.
void apply_source_reflection(std::vector<Arrow>& arrows, std::vector<std::size_t>& dims, std::vector<QMatrix>& maps,
                             int k) {
  const std::size_t dk = dims[k - 1];
  std::vector<std::size_t> out_arrows;
  std::vector<QMatrix> blocks;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    if (arrows[a].tail == k) throw InternalError("reflection transport: vertex is not a source");
    if (arrows[a].head == k) {
      out_arrows.push_back(a);
      blocks.push_back(maps[a]);
    }
  }
  const QMatrix phi = vstack(blocks, dk);
  QMatrix coker = left_nullspace(phi);  // rows annihilate the image of phi
  // Rescale rows to integers; a change of basis at k.
  for (std::size_t r = 0; r < coker.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < coker.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coker(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < coker.cols(); ++c) coker(r, c) *= l;
  }
  std::size_t offset = 0;
  for (auto a : out_arrows) {
    const std::size_t dt = dims[arrows[a].tail - 1];
    maps[a] = coker.column_block(offset, dt);
    offset += dt;
    std::swap(arrows[a].head, arrows[a].tail);
  }
  dims[k - 1] = coker.rows();
}

}  // namespace

Representation indecomposable_for_root(const Quiver& q, const DimVector& root) {
  const CartanMatrix c = cartan_matrix(q);
  if (!classify_type(c).is_finite())
    throw UnsupportedType("indecomposable_for_root requires a finite-type quiver");
  const auto n = static_cast<std::size_t>(q.size());
  if (root.size() != n || !root.is_positive() || c.form(root, root) != 2)
    throw InvalidArgument("indecomposable_for_root: " + root.str() + " is not a positive root");

  // Sinks first: reversing a topological order gives a sink-admissible word
  // that returns to Q after one pass.
  auto order = q.topological_order();
  std::reverse(order.begin(), order.end());

  std::vector<int> word;
  std::vector<Arrow> arrows = q.arrows();
  DimVector beta = root;
  const std::size_t guard = 4 * n * n * n + 16;
  for (std::size_t step = 0;; ++step) {
    if (step > guard) throw InternalError("reflection transport did not reach a simple root");
    const int k = order[step % n];
    if (beta == DimVector::unit(n, static_cast<std::size_t>(k - 1))) break;
    beta = reflect(c, DimVector::unit(n, static_cast<std::size_t>(k - 1)), beta);
    if (!beta.is_positive()) throw InternalError("reflection transport left the positive roots");
    word.push_back(k);
    arrows = reflect_quiver_at(std::move(arrows), k);
  }

  // Simple at the final vertex, over the reflected quiver.
  const int final_vertex = order[word.size() % n];
  std::vector<std::size_t> dims(n, 0);
  dims[final_vertex - 1] = 1;
  std::vector<QMatrix> maps;
  for (const auto& a : arrows) maps.emplace_back(dims[a.tail - 1], dims[a.head - 1]);

  for (auto it = word.rbegin(); it != word.rend(); ++it) apply_source_reflection(arrows, dims, maps, *it);

  for (std::size_t a = 0; a < arrows.size(); ++a)
    if (!(arrows[a] == q.arrows()[a])) throw InternalError("reflection transport did not return to the quiver");
  Representation rep(q, std::move(dims), std::move(maps));
  if (rep.dim() != root) throw InternalError("reflection transport produced " + rep.dim().str() + " for " + root.str());
  return rep;
}

// ---------------------------------------------------------------------------

IndecRegistry::IndecRegistry(std::shared_ptr<const RootSystem> roots, std::vector<Representation> reps)
    : roots_(std::move(roots)), reps_(std::move(reps)), hom_memo_(new std::atomic<int>[reps_.size() * reps_.size()]) {
  for (std::size_t i = 0; i < reps_.size() * reps_.size(); ++i) hom_memo_[i].store(-1, std::memory_order_relaxed);
}

std::size_t IndecRegistry::index(const DimVector& root) const {
  if (auto idx = roots_->index_of(root)) return *idx;
  throw InvalidArgument("registry: " + root.str() + " is not a positive root");
}

std::size_t IndecRegistry::hom(std::size_t a, std::size_t b) const {
  auto& slot = hom_memo_[a * reps_.size() + b];
  int v = slot.load(std::memory_order_acquire);
  if (v < 0) {
    v = static_cast<int>(hom_dim(reps_.at(a), reps_.at(b)));
    slot.store(v, std::memory_order_release);
  }
  return static_cast<std::size_t>(v);
}

std::size_t IndecRegistry::ext(std::size_t a, std::size_t b) const {
  const auto& ra = roots_->positive_roots()[a];
  const auto& rb = roots_->positive_roots()[b];
  const std::int64_t e = static_cast<std::int64_t>(hom(a, b)) - euler_form(quiver(), ra, rb);
  if (e < 0) throw InternalError("registry ext: negative value");
  return static_cast<std::size_t>(e);
}

IndecRegistry build_registry(const Quiver& q) {
  auto roots = std::make_shared<const RootSystem>(finite_root_system(q));
  std::vector<Representation> reps;
  reps.reserve(roots->positive_roots().size());
  for (const auto& r : roots->positive_roots()) reps.push_back(indecomposable_for_root(q, r));
  IndecRegistry reg(roots, std::move(reps));
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (reg.hom(i, i) != 1) throw InternalError("registry: End of " + reg.positive_roots()[i].str() + " is not k");
    if (reg.ext(i, i) != 0) throw InternalError("registry: " + reg.positive_roots()[i].str() + " has self-extensions");
  }
  return reg;
}

}  // namespace ncpq
