#include "stemlie/algebra.hpp"

#include <random>
#include <stdexcept>

namespace stemlie {

void Element::set(int idx, const KScalar& v) {
  if (v.is_zero())
    coeffs.erase(idx);
  else
    coeffs[idx] = v;
}

void Element::add(int idx, const KScalar& v) {
  if (v.is_zero()) return;
  auto it = coeffs.find(idx);
  if (it == coeffs.end()) {
    coeffs.emplace(idx, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) coeffs.erase(it);
}

KScalar Element::get(int idx) const {
  auto it = coeffs.find(idx);
  return it == coeffs.end() ? KScalar::zero() : it->second;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  for (const auto& [i, v] : o.coeffs) r.add(i, v);
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  for (const auto& [i, v] : o.coeffs) r.add(i, -v);
  return r;
}

Element Element::operator-() const {
  Element r(dim);
  for (const auto& [i, v] : coeffs) r.coeffs.emplace(i, -v);
  return r;
}

Element Element::scaled(const KScalar& f) const {
  Element r(dim);
  if (f.is_zero()) return r;
  for (const auto& [i, v] : coeffs) r.coeffs.emplace(i, f * v);
  return r;
}

std::vector<KScalar> Element::to_dense() const {
  std::vector<KScalar> v(dim);
  for (const auto& [i, x] : coeffs) v[i] = x;
  return v;
}

Element Element::from_dense(const std::vector<KScalar>& v) {
  Element e(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) e.coeffs.emplace(static_cast<int>(i), v[i]);
  return e;
}

ReductiveAlgebra::ReductiveAlgebra(RootSystem rs, StructureConstants sc)
    : rs_(std::move(rs)), sc_(std::move(sc)) {
  dim_ = rs_.n_roots() + rs_.rank() + rs_.center_rank();
}

Element ReductiveAlgebra::basis_element(int idx) const {
  Element e(dim_);
  e.set(idx, KScalar::one());
  return e;
}

Element ReductiveAlgebra::coroot_element(int root_idx) const {
  Element e(dim_);
  const auto& co = sc_.coroot(root_idx);
  for (int i = 0; i < rs_.rank(); ++i)
    if (co[i] != 0) e.set(h_index(i), KScalar(co[i]));
  return e;
}

std::string ReductiveAlgebra::label(int basis_idx) const {
  if (basis_idx < rs_.n_roots() + rs_.rank()) return basis_label(rs_, sc_, basis_idx);
  return "C" + std::to_string(basis_idx - rs_.n_roots() - rs_.rank() + 1);
}

int ReductiveAlgebra::parse_label(const std::string& s) const {
  if (!s.empty() && s[0] == 'C') {
    int k;
    try {
      k = std::stoi(s.substr(1));
    } catch (...) {
      throw std::invalid_argument("unknown basis label: " + s);
    }
    if (k < 1 || k > rs_.center_rank())
      throw std::invalid_argument("unknown basis label (bad center index): " + s);
    return c_index(k - 1);
  }
  return parse_basis_label(rs_, sc_, s);
}

Element ReductiveAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.dim != dim_ || y.dim != dim_)
    throw std::invalid_argument("bracket: elements of mismatched dimension");
  Element r(dim_);
  for (const auto& [i, xv] : x.coeffs) {
    if (is_center_index(i)) continue;
    for (const auto& [j, yv] : y.coeffs) {
      if (is_center_index(j)) continue;
      for (const auto& [b, c] : sc_.bracket_basis(i, j)) r.add(b, xv * yv * KScalar(c));
    }
  }
  return r;
}

Element ReductiveAlgebra::tau(const Element& x) const {
  Element r(dim_);
  const int np = rs_.n_positive();
  for (const auto& [i, v] : x.coeffs) {
    if (is_root_index(i)) {
      const int neg = i < np ? i + np : i - np;
      r.add(neg, -v.conj());
    } else {
      r.add(i, -v.conj());
    }
  }
  return r;
}

KScalar ReductiveAlgebra::eval_root(const Root& alpha, const Element& h) const {
  KScalar v;
  for (const auto& [i, c] : h.coeffs) {
    if (is_root_index(i)) throw std::invalid_argument("eval_root: element is not in the Cartan part");
    if (is_center_index(i)) continue; // roots vanish on the center
    v += c * KScalar(sc_.cartan_on_simple(rs_.index_of(alpha), i - rs_.n_roots()));
  }
  return v;
}

LinOp LinOp::identity(int dim) {
  LinOp op;
  op.dim = dim;
  op.mat = k_identity(dim);
  return op;
}

LinOp LinOp::zero(int dim) {
  LinOp op;
  op.dim = dim;
  op.mat.assign(dim, std::vector<KScalar>(dim));
  return op;
}

Element LinOp::apply(const ReductiveAlgebra& alg, const Element& x) const {
  (void)alg;
  Element r(dim);
  for (const auto& [j, v] : x.coeffs)
    for (int i = 0; i < dim; ++i) {
      if (mat[i][j].is_zero()) continue;
      r.add(i, mat[i][j] * v);
    }
  return r;
}

std::vector<KScalar> LinOp::column(int c) const {
  std::vector<KScalar> v(dim);
  for (int i = 0; i < dim; ++i) v[i] = mat[i][c];
  return v;
}

void LinOp::set_column(int c, const Element& image) {
  for (int i = 0; i < dim; ++i) mat[i][c] = KScalar::zero();
  for (const auto& [i, v] : image.coeffs) mat[i][c] = v;
}

LinOp LinOp::compose(const LinOp& other) const {
  LinOp r;
  r.dim = dim;
  r.mat = k_mul(mat, other.mat);
  return r;
}

bool LinOp::squares_to_minus_identity() const {
  KMatrix sq = k_mul(mat, mat);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const KScalar want = i == j ? KScalar(-1) : KScalar::zero();
      if (sq[i][j] != want) return false;
    }
  return true;
}

bool LinOp::commutes_with_tau(const ReductiveAlgebra& alg) const {
  for (int b = 0; b < dim; ++b) {
    Element basis(dim);
    basis.set(b, KScalar::one());
    Element lhs = apply(alg, alg.tau(basis));
    Element rhs = alg.tau(apply(alg, basis));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool LinOp::anticommutes_with(const LinOp& other) const {
  KMatrix ab = k_mul(mat, other.mat);
  KMatrix ba = k_mul(other.mat, mat);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (ab[i][j] != -ba[i][j]) return false;
  return true;
}

bool LinOp::preserves_brackets(const ReductiveAlgebra& alg) const {
  std::vector<Element> cols(dim);
  for (int c = 0; c < dim; ++c) cols[c] = Element::from_dense(column(c));
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      Element lhs = apply(alg, alg.bracket(alg.basis_element(a), alg.basis_element(b)));
      Element rhs = alg.bracket(cols[a], cols[b]);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool LinOp::preserves_brackets_sampled(const ReductiveAlgebra& alg, int samples, unsigned seed) const {
  std::vector<Element> cols(dim);
  for (int c = 0; c < dim; ++c) cols[c] = Element::from_dense(column(c));
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  for (int s = 0; s < samples; ++s) {
    const int a = pick(rng), b = pick(rng);
    Element lhs = apply(alg, alg.bracket(alg.basis_element(a), alg.basis_element(b)));
    Element rhs = alg.bracket(cols[a], cols[b]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

StemFrame stem_frame(const ReductiveAlgebra& alg, const Stem& stem,
                     const std::vector<KScalar>& rho) {
  const int d = stem.size();
  if (static_cast<int>(rho.size()) != d)
    throw std::invalid_argument("stem_frame: need one rho per stem root");
  for (const auto& r : rho) {
    const bool unit = r == KScalar::one() || r == -KScalar::one() || r == KScalar::i() || r == -KScalar::i();
    if (!unit) throw std::invalid_argument("stem_frame: rho must be a fourth root of unity");
  }

  StemFrame frame;
  frame.rho = rho;
  const KScalar half(Rational(1, 2));
  const KScalar ihalf(Rational(0), Rational(1, 2), Rational(0), Rational(0));
  const int np = alg.rs().n_positive();

  for (int k = 0; k < d; ++k) {
    const int g = stem.gammas[k];
    Element w = alg.coroot_element(g).scaled(ihalf);
    Element x(alg.dim()), y(alg.dim());
    x.add(g, rho[k] * half);
    x.add(g + np, -(rho[k].conj() * half));
    y.add(g, rho[k] * ihalf);
    y.add(g + np, rho[k].conj() * ihalf);
    frame.W.push_back(std::move(w));
    frame.X.push_back(std::move(x));
    frame.Y.push_back(std::move(y));
    std::vector<int> vp = stem.branches[k], vm;
    for (int b : stem.branches[k]) vm.push_back(b + np);
    frame.Vplus.push_back(std::move(vp));
    frame.Vminus.push_back(std::move(vm));
  }

  // o_u = { H in h_u : gamma(H) = 0 for all stem roots }, parametrized by
  // H = sum x_i (i H_i) + sum y_k (i C_k) with rational x, y. The defining
  // system only constrains the x block; the reduced-echelon kernel gives a
  // deterministic basis.
  const int l = alg.rs().rank();
  const int r_rank = alg.center_rank();
  QMatrix m(d, std::vector<Rational>(l + r_rank, Rational(0)));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < l; ++i)
      m[k][i] = alg.sc().cartan_on_simple(stem.gammas[k], i);
  for (const auto& vec : q_kernel_basis(m)) {
    Element h(alg.dim());
    for (int i = 0; i < l; ++i)
      if (vec[i] != 0) h.set(alg.h_index(i), KScalar(Rational(0), vec[i], Rational(0), Rational(0)));
    for (int k = 0; k < r_rank; ++k)
      if (vec[l + k] != 0) h.set(alg.c_index(k), KScalar(Rational(0), vec[l + k], Rational(0), Rational(0)));
    frame.o_basis.push_back(std::move(h));
  }
  return frame;
}

Report heisenberg_check(const ReductiveAlgebra& alg, const Stem& stem) {
  Report report;
  const RootSystem& rs = alg.rs();

  // Partition of Delta+ into the stem components (same as the stem axiom,
  // restated at the algebra level).
  {
    std::set<int> covered;
    bool ok = true;
    for (size_t k = 0; k < stem.gammas.size(); ++k) {
      if (!covered.insert(stem.gammas[k]).second) ok = false;
      for (int b : stem.branches[k])
        if (!covered.insert(b).second) ok = false;
    }
    ok = ok && static_cast<int>(covered.size()) == rs.n_positive();
    report.add("nplus_direct_sum", ok);
  }

  // Inside each component, the only nonzero brackets are the pairings onto
  // the one-dimensional center E_gamma.
  for (size_t k = 0; k < stem.gammas.size(); ++k) {
    const int g = stem.gammas[k];
    bool ok = true;
    std::string detail;
    std::vector<int> members = stem.branches[k];
    members.push_back(g);
    for (int a : members)
      for (int b : members) {
        Element br = alg.bracket(alg.E(a), alg.E(b));
        const bool is_pairing = a != g && b != g && stem.mu.at(a) == b;
        if (is_pairing) {
          Element want = alg.E(g).scaled(KScalar(alg.sc().N(a, b)));
          if (!(br == want) || alg.sc().N(a, b) == 0) {
            ok = false;
            detail = "pairing bracket mismatch at " + alg.label(a) + "," + alg.label(b);
          }
        } else if (!br.is_zero()) {
          ok = false;
          detail = "unexpected bracket at " + alg.label(a) + "," + alg.label(b);
        }
      }
    report.add("heis_" + std::to_string(k + 1), ok, detail);
  }
  return report;
}

} // namespace stemlie
