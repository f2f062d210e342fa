#include "stemlie/operators.hpp"

#include <stdexcept>

namespace stemlie {

namespace {

struct Turn {
  KScalar cos_t, sin_t;
};

Turn turn_values(int quarter) {
  switch (quarter) {
    case 1: return {KScalar::zero(), KScalar::one()};
    case 2: return {KScalar(-1), KScalar::zero()};
    case -1: return {KScalar::zero(), KScalar(-1)};
    default: throw std::invalid_argument("exp_ad_stem_factor: quarter must be 1, 2 or -1");
  }
}

// exp(tA) for the matrix of ad X_gamma on one root string of length len.
// The string spans an irreducible sl2 module, so the eigenvalues are
// i*(-j), i*(-j+1), ..., i*j with j = (len-1)/2; the exponentials at quarter
// turns are eighth roots of unity.
KMatrix string_exponential(const KMatrix& a, int quarter) {
  const int len = static_cast<int>(a.size());
  // Eigenvalue u-th: lambda_u = i*(2u - (len-1))/2, u = 0..len-1.
  KMatrix result(len, std::vector<KScalar>(len));
  for (int u = 0; u < len; ++u) {
    const int num_u = 2 * u - (len - 1); // 2*lambda_u / i
    // exp(t * lambda_u) = exp(i*pi*quarter*num_u/4).
    const KScalar value = KScalar::eighth_root(quarter * num_u);
    // Projector: prod_{v != u} (A - lambda_v) / (lambda_u - lambda_v).
    KMatrix proj = k_identity(len);
    KScalar denom = KScalar::one();
    for (int v = 0; v < len; ++v) {
      if (v == u) continue;
      const int num_v = 2 * v - (len - 1);
      const KScalar lambda_v = KScalar::i() * KScalar(make_rational(num_v, 2));
      KMatrix shifted = a;
      for (int i = 0; i < len; ++i) shifted[i][i] -= lambda_v;
      proj = k_mul(proj, shifted);
      denom *= KScalar::i() * KScalar(make_rational(num_u - num_v, 2));
    }
    const KScalar f = value * denom.inverse();
    for (int i = 0; i < len; ++i)
      for (int j = 0; j < len; ++j) result[i][j] += f * proj[i][j];
  }
  return result;
}

} // namespace

LinOp exp_ad_stem_factor(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame,
                         int k, int quarter) {
  const auto [cos_t, sin_t] = turn_values(quarter);
  const RootSystem& rs = alg.rs();
  const StructureConstants& sc = alg.sc();
  const int n = rs.n_roots();
  const int g = stem.gammas[k];
  const int gneg = rs.negative_of(g);
  const KScalar rho = frame.rho[k];
  const KScalar rho_bar = rho.conj();
  const KScalar i = KScalar::i();
  const KScalar half(Rational(1, 2));

  LinOp op = LinOp::identity(alg.dim());

  // Cartan columns: H -> H + i gamma(H) (sin t Y + (1 - cos t) W).
  const Element rot_y = frame.Y[k].scaled(sin_t) + frame.W[k].scaled(KScalar::one() - cos_t);
  for (int idx = n; idx < alg.dim(); ++idx) {
    const KScalar gamma_of =
        alg.is_center_index(idx) ? KScalar::zero()
                                 : KScalar(sc.cartan_on_simple(g, idx - n));
    if (gamma_of.is_zero()) continue;
    Element img = alg.basis_element(idx) + rot_y.scaled(i * gamma_of);
    op.set_column(idx, img);
  }

  // E_{+-gamma} columns.
  {
    const Element swing = frame.Y[k].scaled(cos_t - KScalar::one()) + frame.W[k].scaled(sin_t);
    Element img_plus = alg.E(g) - swing.scaled(i * rho_bar);
    Element img_minus = alg.E(gneg) - swing.scaled(i * rho);
    op.set_column(g, img_plus);
    op.set_column(gneg, img_minus);
  }

  // Root strings through the remaining roots.
  std::vector<char> done(n, 0);
  done[g] = done[gneg] = 1;
  const Root gamma_root = rs.root(g);
  for (int b = 0; b < n; ++b) {
    if (done[b]) continue;
    // Collect the gamma-string through b, bottom to top.
    Root bottom = rs.root(b);
    while (rs.is_root(bottom - gamma_root)) bottom = bottom - gamma_root;
    std::vector<int> string_idx;
    Root walk = bottom;
    while (rs.is_root(walk)) {
      string_idx.push_back(rs.index_of(walk));
      walk = walk + gamma_root;
    }
    for (int idx : string_idx) done[idx] = 1;
    const int len = static_cast<int>(string_idx.size());
    if (len == 1) continue; // ad X_gamma acts by zero

    // ad X_gamma on the block: E_beta -> (rho N_{gamma,beta} E_{beta+gamma}
    //                                    - rho_bar N_{-gamma,beta} E_{beta-gamma})/2.
    KMatrix a(len, std::vector<KScalar>(len));
    for (int j = 0; j < len; ++j) {
      const int beta = string_idx[j];
      if (j + 1 < len) a[j + 1][j] = rho * half * KScalar(sc.N(g, beta));
      if (j - 1 >= 0) a[j - 1][j] = -(rho_bar * half) * KScalar(sc.N(gneg, beta));
    }
    KMatrix e = string_exponential(a, quarter);
    for (int j = 0; j < len; ++j) {
      Element img(alg.dim());
      for (int r = 0; r < len; ++r) img.add(string_idx[r], e[r][j]);
      op.set_column(string_idx[j], img);
    }
  }
  return op;
}

namespace {

LinOp compose_factors(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame,
                      int quarter) {
  LinOp acc = LinOp::identity(alg.dim());
  for (int k = 0; k < stem.size(); ++k) acc = acc.compose(exp_ad_stem_factor(alg, stem, frame, k, quarter));
  return acc;
}

} // namespace

LinOp cayley_transform(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame) {
  return compose_factors(alg, stem, frame, 1);
}

LinOp cayley_transform_inverse(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame) {
  return compose_factors(alg, stem, frame, -1);
}

LinOp opposition_involution(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame) {
  return compose_factors(alg, stem, frame, 2);
}

} // namespace stemlie
