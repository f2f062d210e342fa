#include "stemlie/hypercomplex.hpp"

#include <stdexcept>

namespace stemlie {

namespace {

// Operator with prescribed images on an adapted basis of g.
LinOp operator_from_images(const ReductiveAlgebra& alg, const std::vector<Element>& basis,
                           const std::vector<Element>& images) {
  const int dim = alg.dim();
  if (static_cast<int>(basis.size()) != dim || static_cast<int>(images.size()) != dim)
    throw std::invalid_argument("operator_from_images: need a full basis");
  KMatrix p(dim, std::vector<KScalar>(dim)), img(dim, std::vector<KScalar>(dim));
  for (int c = 0; c < dim; ++c) {
    for (const auto& [r, v] : basis[c].coeffs) p[r][c] = v;
    for (const auto& [r, v] : images[c].coeffs) img[r][c] = v;
  }
  LinOp op;
  op.dim = dim;
  op.mat = k_mul(img, k_inverse(p));
  return op;
}

KMatrix conj_matrix(const KMatrix& m) {
  KMatrix r = m;
  for (auto& row : r)
    for (auto& x : row) x = x.conj();
  return r;
}

bool matrix_is(const KMatrix& m, const KScalar& diag) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) {
      const KScalar want = i == j ? diag : KScalar::zero();
      if (m[i][j] != want) return false;
    }
  return true;
}

KMatrix matrix_sub(const KMatrix& a, const KMatrix& b) {
  KMatrix r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

ComplexStructureI build_I_from_choice(const ReductiveAlgebra& alg, const Stem& stem,
                                      const StemFrame& frame, std::vector<Element> Z,
                                      std::vector<Element> s_vectors, bool assert_admissible_shape) {
  const int d = stem.size();
  const int p = static_cast<int>(s_vectors.size()) / 2;
  const KScalar i = KScalar::i();

  std::vector<Element> basis, images;
  for (int r = 0; r < alg.n_roots(); ++r) {
    basis.push_back(alg.E(r));
    images.push_back(alg.E(r).scaled(alg.rs().is_positive_index(r) ? i : -i));
  }
  for (int k = 0; k < d; ++k) {
    basis.push_back(frame.W[k]);
    images.push_back(Z[k]);
    basis.push_back(Z[k]);
    images.push_back(-frame.W[k]);
  }
  for (int t = 0; t < p; ++t) {
    basis.push_back(s_vectors[2 * t]);
    images.push_back(s_vectors[2 * t + 1]);
    basis.push_back(s_vectors[2 * t + 1]);
    images.push_back(-s_vectors[2 * t]);
  }

  ComplexStructureI I;
  I.op = operator_from_images(alg, basis, images);
  I.Z = std::move(Z);
  I.s_vectors = std::move(s_vectors);
  I.p = p;
  for (int t = 0; t < p; ++t)
    I.S_basis.push_back(I.s_vectors[2 * t] - I.s_vectors[2 * t + 1].scaled(i));
  for (int k = 0; k < d; ++k) I.hplus_basis.push_back(frame.W[k] - I.Z[k].scaled(i));
  for (const auto& s : I.S_basis) I.hplus_basis.push_back(s);

  if (!I.op.squares_to_minus_identity()) throw std::logic_error("I does not square to -identity");
  if (!I.op.commutes_with_tau(alg)) throw std::logic_error("I does not commute with tau");
  if (assert_admissible_shape) {
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const Element iw = I.op.apply(alg, frame.W[k]);
        if (!alg.eval_root(alg.rs().root(stem.gammas[j]), iw).is_zero())
          throw std::logic_error("canonical I violates gamma(I W) = 0");
      }
  }
  return I;
}

} // namespace

ComplexStructureI build_I_canonical(const ReductiveAlgebra& alg, const Stem& stem,
                                    const StemFrame& frame) {
  const int d = stem.size();
  const int rank = alg.rank();
  if (rank < 2 * d)
    throw std::domain_error("rank obstruction: rank(u) = " + std::to_string(rank) + " < 2d = " +
                            std::to_string(2 * d) + "; no hypercomplex structure exists");
  if ((rank - 2 * d) % 4 != 0)
    throw std::domain_error("rank obstruction: rank(u) - 2d = " + std::to_string(rank - 2 * d) +
                            " is not a multiple of 4; need rank(u) = 2d + 4k");
  const int p = (rank - 2 * d) / 2;
  if (static_cast<int>(frame.o_basis.size()) != d + 2 * p)
    throw std::logic_error("unexpected o_u dimension");

  std::vector<Element> Z(frame.o_basis.begin(), frame.o_basis.begin() + d);
  std::vector<Element> s(frame.o_basis.begin() + d, frame.o_basis.end());
  return build_I_from_choice(alg, stem, frame, std::move(Z), std::move(s), true);
}

ComplexStructureI build_I_custom(const ReductiveAlgebra& alg, const Stem& stem,
                                 const StemFrame& frame, std::vector<Element> Z,
                                 std::vector<Element> s_vectors) {
  return build_I_from_choice(alg, stem, frame, std::move(Z), std::move(s_vectors), false);
}

AdmissibilityResult check_admissible(const ReductiveAlgebra& alg, const Stem& stem,
                                     const StemFrame& frame, const ComplexStructureI& I) {
  AdmissibilityResult res;
  const int dim_u = alg.dim();
  if (dim_u % 4 != 0) {
    res.ok = false;
    res.reason = "dim(u) = " + std::to_string(dim_u) + " is not divisible by 4";
    return res;
  }
  for (int j = 0; j < stem.size(); ++j)
    for (int k = 0; k < stem.size(); ++k) {
      const Element iw = I.op.apply(alg, frame.W[k]);
      if (!alg.eval_root(alg.rs().root(stem.gammas[j]), iw).is_zero()) {
        res.ok = false;
        res.reason = "gamma_" + std::to_string(j + 1) + "(I W_" + std::to_string(k + 1) + ") != 0";
        res.witness = std::make_pair(j, k);
        return res;
      }
    }
  res.ok = true;
  return res;
}

KMatrix default_b_matrix(int p) {
  KMatrix b(p, std::vector<KScalar>(p));
  for (int t = 0; t + 1 < p; t += 2) {
    b[t + 1][t] = KScalar::one();
    b[t][t + 1] = KScalar(-1);
  }
  return b;
}

bool b_condition_holds(const KMatrix& b) {
  if (b.empty()) return true;
  return matrix_is(k_mul(conj_matrix(b), b), KScalar(-1));
}

namespace {

void require_buildable(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame,
                       const ComplexStructureI& I, const KMatrix& b) {
  auto adm = check_admissible(alg, stem, frame, I);
  if (!adm.ok) throw std::domain_error("not admissible: " + adm.reason);
  if (static_cast<int>(b.size()) != I.p)
    throw std::invalid_argument("b matrix must be p x p with p = " + std::to_string(I.p));
  for (const auto& row : b)
    if (static_cast<int>(row.size()) != I.p)
      throw std::invalid_argument("b matrix must be square of size p");
  if (!b_condition_holds(b))
    throw std::invalid_argument("b matrix must satisfy conj(b) * b = -identity");
}

HyperStructure finish_structure(const ReductiveAlgebra& alg, const Stem& stem,
                                const StemFrame& frame, const ComplexStructureI& I, LinOp J,
                                const KMatrix& b, std::vector<Element> S, std::vector<Element> T,
                                const std::string& provenance) {
  HyperStructure hs;
  hs.I = I.op;
  hs.J = std::move(J);
  hs.K = hs.I.compose(hs.J);
  hs.rho = frame.rho;
  hs.b = b;
  hs.S_basis = std::move(S);
  hs.T_basis = std::move(T);
  hs.provenance = provenance;
  hs.report = verify_hypercomplex(alg, stem, frame, hs);
  if (!hs.report.all_pass()) {
    std::string failed;
    for (const auto& c : hs.report.checks)
      if (!c.pass) failed += " " + c.name;
    throw std::logic_error("constructed structure failed verification:" + failed);
  }
  return hs;
}

} // namespace

HyperStructure build_J_direct(const ReductiveAlgebra& alg, const Stem& stem,
                              const StemFrame& frame, const ComplexStructureI& I,
                              const KMatrix& b_matrix) {
  require_buildable(alg, stem, frame, I, b_matrix);
  const RootSystem& rs = alg.rs();
  const StructureConstants& sc = alg.sc();
  const KScalar i = KScalar::i();
  const int np = rs.n_positive();

  std::vector<Element> T;
  for (const auto& s : I.S_basis) T.push_back(alg.tau(s));

  std::vector<Element> basis, images;
  for (int k = 0; k < stem.size(); ++k) {
    const int g = stem.gammas[k];
    const KScalar rho = frame.rho[k];
    const KScalar rho_bar = rho.conj();

    // J E_gamma = rho_bar (W + iZ);  J E_{-gamma} = -rho (W - iZ).
    basis.push_back(alg.E(g));
    images.push_back((frame.W[k] + I.Z[k].scaled(i)).scaled(rho_bar));
    basis.push_back(alg.E(g + np));
    images.push_back((frame.W[k] - I.Z[k].scaled(i)).scaled(-rho));

    // Branch roots: J E_alpha = i rho_bar N_{gamma,-alpha} E_{s_gamma(alpha)}
    // and the tau-conjugate rule on the negatives.
    for (int a : stem.branches[k]) {
      const int mu_a = stem.mu.at(a);
      const int n_coeff = sc.N(g, a + np); // N_{gamma, -alpha}
      basis.push_back(alg.E(a));
      images.push_back(alg.E(mu_a + np).scaled(i * rho_bar * KScalar(n_coeff)));
      basis.push_back(alg.E(a + np));
      images.push_back(alg.E(mu_a).scaled(-(i * rho) * KScalar(n_coeff)));
    }

    // J W = -X, J Z = Y.
    basis.push_back(frame.W[k]);
    images.push_back(-frame.X[k]);
    basis.push_back(I.Z[k]);
    images.push_back(frame.Y[k]);
  }
  for (int q = 0; q < I.p; ++q) {
    Element img_s(alg.dim()), img_t(alg.dim());
    for (int t = 0; t < I.p; ++t) {
      img_s = img_s + T[t].scaled(b_matrix[t][q]);
      img_t = img_t + I.S_basis[t].scaled(b_matrix[t][q].conj());
    }
    basis.push_back(I.S_basis[q]);
    images.push_back(img_s);
    basis.push_back(alg.tau(I.S_basis[q]));
    images.push_back(img_t);
  }

  LinOp J = operator_from_images(alg, basis, images);
  return finish_structure(alg, stem, frame, I, std::move(J), b_matrix, I.S_basis, std::move(T),
                          "direct");
}

HyperStructure build_J_cayley(const ReductiveAlgebra& alg, const Stem& stem,
                              const StemFrame& frame, const ComplexStructureI& I,
                              const KMatrix& b_matrix) {
  require_buildable(alg, stem, frame, I, b_matrix);
  const LinOp c = cayley_transform(alg, stem, frame);
  const LinOp c_inv = cayley_transform_inverse(alg, stem, frame);
  const LinOp conjugated = c.compose(I.op).compose(c_inv);

  std::vector<Element> T;
  for (const auto& s : I.S_basis) T.push_back(alg.tau(s));

  // J = c I c^{-1} on the branch spaces, the stem sl2's and z; J = B on j.
  std::vector<Element> basis, images;
  auto via_cayley = [&](const Element& e) {
    basis.push_back(e);
    images.push_back(conjugated.apply(alg, e));
  };
  for (int k = 0; k < stem.size(); ++k) {
    const int g = stem.gammas[k];
    via_cayley(alg.E(g));
    via_cayley(alg.E(alg.rs().negative_of(g)));
    for (int a : stem.branches[k]) {
      via_cayley(alg.E(a));
      via_cayley(alg.E(alg.rs().negative_of(a)));
    }
    via_cayley(frame.W[k]);
    via_cayley(I.Z[k]);
  }
  for (int q = 0; q < I.p; ++q) {
    Element img_s(alg.dim()), img_t(alg.dim());
    for (int t = 0; t < I.p; ++t) {
      img_s = img_s + T[t].scaled(b_matrix[t][q]);
      img_t = img_t + I.S_basis[t].scaled(b_matrix[t][q].conj());
    }
    basis.push_back(I.S_basis[q]);
    images.push_back(img_s);
    basis.push_back(T[q]);
    images.push_back(img_t);
  }

  LinOp J = operator_from_images(alg, basis, images);
  return finish_structure(alg, stem, frame, I, std::move(J), b_matrix, I.S_basis, std::move(T),
                          "cayley");
}

Element nijenhuis(const ReductiveAlgebra& alg, const LinOp& op, const Element& x, const Element& y) {
  const Element ox = op.apply(alg, x);
  const Element oy = op.apply(alg, y);
  return alg.bracket(ox, oy) - op.apply(alg, alg.bracket(ox, y)) -
         op.apply(alg, alg.bracket(x, oy)) - alg.bracket(x, y);
}

std::pair<bool, NijenhuisReport> is_integrable(const ReductiveAlgebra& alg, const LinOp& op,
                                               const std::string& operator_id) {
  if (!op.squares_to_minus_identity() || !op.commutes_with_tau(alg))
    throw std::invalid_argument("is_integrable: not a complex structure (square or tau failed)");

  NijenhuisReport report;
  report.operator_id = operator_id;
  report.residual = Element(alg.dim());

  // Route 1: the +i eigenspace must be a subalgebra.
  KMatrix shifted = op.mat;
  for (int i = 0; i < op.dim; ++i) shifted[i][i] -= KScalar::i();
  auto kernel = k_kernel_basis(shifted);
  if (static_cast<int>(kernel.size()) * 2 != op.dim)
    throw std::logic_error("is_integrable: eigenspace dimension mismatch");
  KSpan span(op.dim);
  std::vector<Element> basis;
  for (auto& v : kernel) {
    basis.push_back(Element::from_dense(v));
    span.add(std::move(v));
  }
  bool closed = true;
  for (size_t a = 0; a < basis.size() && closed; ++a)
    for (size_t b = a + 1; b < basis.size() && closed; ++b)
      if (!span.contains(alg.bracket(basis[a], basis[b]).to_dense())) closed = false;

  // Route 2: the Nijenhuis tensor over all basis pairs.
  bool vanish = true;
  for (int a = 0; a < alg.dim() && vanish; ++a)
    for (int b = a + 1; b < alg.dim() && vanish; ++b) {
      Element n = nijenhuis(alg, op, alg.basis_element(a), alg.basis_element(b));
      if (!n.is_zero()) {
        vanish = false;
        report.worst_pair = std::make_pair(a, b);
        report.residual = std::move(n);
      }
    }

  if (closed != vanish)
    throw std::logic_error("is_integrable: eigenspace closure and Nijenhuis sweep disagree");
  return {vanish, report};
}

std::pair<MatchingBlocks, Report> extract_matching_blocks(const ReductiveAlgebra& alg,
                                                          const Stem& stem,
                                                          const StemFrame& frame,
                                                          const ComplexStructureI& I,
                                                          const LinOp& J) {
  const RootSystem& rs = alg.rs();
  const int n = rs.n_positive();
  const int m = static_cast<int>(I.hplus_basis.size());
  const int d = stem.size();
  const KScalar i = KScalar::i();

  std::vector<Element> V;
  for (const auto& u : I.hplus_basis) V.push_back(alg.tau(u));
  std::vector<std::vector<KScalar>> v_cols;
  for (const auto& v : V) v_cols.push_back(v.to_dense());

  MatchingBlocks blocks;
  blocks.a.assign(n, std::vector<KScalar>(n));
  blocks.b.assign(m, std::vector<KScalar>(m));
  blocks.xi.assign(m, std::vector<KScalar>(n));
  blocks.eta.assign(n, std::vector<KScalar>(m));

  // Decompose an image over {E_{-beta}} u {V_t}; failure means J does not
  // match the block form.
  auto decompose = [&](const Element& y, std::vector<KScalar>& e_out, std::vector<KScalar>& v_out) {
    Element hpart(alg.dim());
    e_out.assign(n, KScalar::zero());
    for (const auto& [idx, coeff] : y.coeffs) {
      if (!alg.is_root_index(idx)) {
        hpart.set(idx, coeff);
        continue;
      }
      if (rs.is_positive_index(idx))
        throw std::domain_error("not matching: image has a positive root component");
      e_out[idx - n] = coeff;
    }
    auto coords = k_coordinates(v_cols, hpart.to_dense());
    if (!coords) throw std::domain_error("not matching: Cartan image outside h-minus");
    v_out = *coords;
  };

  for (int a = 0; a < n; ++a) {
    std::vector<KScalar> e_col, v_col;
    decompose(J.apply(alg, alg.E(a)), e_col, v_col);
    for (int b = 0; b < n; ++b) blocks.a[b][a] = e_col[b];
    for (int t = 0; t < m; ++t) blocks.xi[t][a] = v_col[t];
  }
  for (int q = 0; q < m; ++q) {
    std::vector<KScalar> e_col, v_col;
    decompose(J.apply(alg, I.hplus_basis[q]), e_col, v_col);
    for (int b = 0; b < n; ++b) blocks.eta[b][q] = e_col[b];
    for (int t = 0; t < m; ++t) blocks.b[t][q] = v_col[t];
  }

  Report report;
  const KMatrix abar = conj_matrix(blocks.a);
  const KMatrix xibar = conj_matrix(blocks.xi);
  const KMatrix etabar = conj_matrix(blocks.eta);
  const KMatrix bbar = conj_matrix(blocks.b);
  report.add("blocks_eta_xi_minus_aa", matrix_is(matrix_sub(k_mul(etabar, blocks.xi), k_mul(abar, blocks.a)), KScalar::one()));
  report.add("blocks_bxi_minus_xia", matrix_is(matrix_sub(k_mul(bbar, blocks.xi), k_mul(xibar, blocks.a)), KScalar::zero()));
  report.add("blocks_aeta_minus_etab", matrix_is(matrix_sub(k_mul(abar, blocks.eta), k_mul(etabar, blocks.b)), KScalar::zero()));
  report.add("blocks_xieta_minus_bb", matrix_is(matrix_sub(k_mul(xibar, blocks.eta), k_mul(bbar, blocks.b)), KScalar::one()));

  // a is antisymmetric and supported exactly on {(mu(alpha), alpha)}.
  {
    bool antisym = true, support = true;
    std::string detail;
    for (int r = 0; r < n && antisym; ++r)
      for (int c = 0; c < n; ++c)
        if (blocks.a[r][c] != -blocks.a[c][r]) {
          antisym = false;
          detail = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
          break;
        }
    report.add("a_antisymmetric", antisym, detail);
    detail.clear();
    for (int r = 0; r < n && support; ++r)
      for (int c = 0; c < n; ++c) {
        const bool expect = stem.stem_position(c) < 0 && stem.mu.at(c) == r;
        if (blocks.a[r][c].is_zero() == expect) {
          support = false;
          detail = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
          break;
        }
      }
    report.add("a_support_law", support, detail);
  }

  // J E_gamma lands in h^- for stem roots.
  {
    bool ok = true;
    for (int k = 0; k < d && ok; ++k) {
      const int g = stem.gammas[k];
      for (int b = 0; b < n; ++b)
        if (!blocks.a[b][g].is_zero()) ok = false;
    }
    report.add("stem_images_in_hminus", ok);
  }

  // |gamma(U_gamma)| = 1 and gamma(I H_gamma) = 0.
  {
    bool norm_ok = true, ih_ok = true;
    for (int k = 0; k < d; ++k) {
      const int g = stem.gammas[k];
      const Root gamma = rs.root(g);
      Element u_gamma = J.apply(alg, alg.E(rs.negative_of(g)));
      for (const auto& [idx, coeff] : u_gamma.coeffs)
        if (alg.is_root_index(idx)) norm_ok = false;
      if (norm_ok) {
        const KScalar v = alg.eval_root(gamma, u_gamma);
        if (v * v.conj() != KScalar::one()) norm_ok = false;
      }
      const Element ih = I.op.apply(alg, alg.coroot_element(g));
      if (!alg.eval_root(gamma, ih).is_zero()) ih_ok = false;
    }
    report.add("stem_unit_pairing", norm_ok);
    report.add("gamma_of_IH_gamma_zero", ih_ok);
  }

  // gamma_j(P_k) = i delta_jk on the first d vectors of the h+ basis.
  {
    bool ok = true;
    for (int j = 0; j < d && ok; ++j)
      for (int k = 0; k < d; ++k) {
        const KScalar want = j == k ? i : KScalar::zero();
        if (alg.eval_root(rs.root(stem.gammas[j]), I.hplus_basis[k]) != want) {
          ok = false;
          break;
        }
      }
    report.add("gamma_of_P_delta", ok);
  }

  // J(j+) = j-.
  {
    bool ok = true;
    std::vector<std::vector<KScalar>> t_cols;
    for (int t = 0; t < I.p; ++t) t_cols.push_back(alg.tau(I.S_basis[t]).to_dense());
    for (int q = 0; q < I.p && ok; ++q) {
      Element img = J.apply(alg, I.S_basis[q]);
      if (!k_coordinates(t_cols, img.to_dense())) ok = false;
    }
    report.add("J_maps_jplus_to_jminus", ok);
  }

  return {blocks, report};
}

Report verify_hypercomplex(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame,
                           const HyperStructure& hs) {
  Report report;
  report.add("I_square", hs.I.squares_to_minus_identity());
  report.add("J_square", hs.J.squares_to_minus_identity());
  report.add("K_square", hs.K.squares_to_minus_identity());
  report.add("anticommute_IJ", hs.I.anticommutes_with(hs.J));
  report.add("K_is_IJ", k_equal(hs.K.mat, k_mul(hs.I.mat, hs.J.mat)));
  report.add("JK_is_I", k_equal(k_mul(hs.J.mat, hs.K.mat), hs.I.mat));
  {
    KMatrix kj = k_mul(hs.K.mat, hs.J.mat);
    for (auto& row : kj)
      for (auto& x : row) x = -x;
    report.add("KJ_is_minus_I", k_equal(kj, hs.I.mat));
  }
  report.add("tau_equivariance_I", hs.I.commutes_with_tau(alg));
  report.add("tau_equivariance_J", hs.J.commutes_with_tau(alg));
  report.add("tau_equivariance_K", hs.K.commutes_with_tau(alg));
  report.add("b_condition", b_condition_holds(hs.b));

  for (const auto& [op, id] : {std::make_pair(&hs.I, "I"), std::make_pair(&hs.J, "J"),
                               std::make_pair(&hs.K, "K")}) {
    try {
      auto [ok, nrep] = is_integrable(alg, *op, id);
      report.add(std::string("integrability_") + id, ok,
                 ok ? "" : "first failing pair (" + std::to_string(nrep.worst_pair->first) + "," +
                               std::to_string(nrep.worst_pair->second) + ")");
      report.add(std::string("nijenhuis_") + id, ok);
    } catch (const std::invalid_argument& e) {
      report.add(std::string("integrability_") + id, false, e.what());
      report.add(std::string("nijenhuis_") + id, false, e.what());
    }
  }

  // Nearest-to-semisimple case: the equivalent admissibility forms with the
  // opposition involution.
  const int p = static_cast<int>(hs.b.size());
  if (p == 0 && stem.size() > 0) {
    const LinOp phi = opposition_involution(alg, stem, frame);
    report.add("phi_anticommutes_I", phi.anticommutes_with(hs.I));

    KMatrix shifted_plus = hs.I.mat, shifted_minus = hs.I.mat;
    for (int i = 0; i < hs.I.dim; ++i) {
      shifted_plus[i][i] -= KScalar::i();
      shifted_minus[i][i] += KScalar::i();
    }
    auto mplus = k_kernel_basis(shifted_plus);
    auto mminus = k_kernel_basis(shifted_minus);
    KSpan minus_span(alg.dim());
    for (auto& v : mminus) minus_span.add(std::move(v));
    bool maps = true;
    for (const auto& v : mplus)
      if (!minus_span.contains(k_apply(phi.mat, v))) maps = false;
    report.add("phi_maps_mplus_to_mminus", maps);

    // h+ = m+ intersect h: kernel vectors of (I - i) with vanishing root part.
    bool hmaps = true;
    KSpan hminus_span(alg.dim());
    for (auto& v : mminus) {
      bool cartan = true;
      for (int r = 0; r < alg.n_roots(); ++r)
        if (!v[r].is_zero()) cartan = false;
      if (cartan) hminus_span.add(std::move(v));
    }
    for (const auto& v : mplus) {
      bool cartan = true;
      for (int r = 0; r < alg.n_roots(); ++r)
        if (!v[r].is_zero()) cartan = false;
      if (cartan && !hminus_span.contains(k_apply(phi.mat, v))) hmaps = false;
    }
    report.add("phi_maps_hplus_to_hminus", hmaps);
  }
  return report;
}

ClassificationRecord classify_algebra(const AlgebraSpec& spec) {
  ClassificationRecord rec;
  rec.spec = spec.to_string();
  RootSystem rs = RootSystem::generate(spec);
  Stem stem = compute_stem(rs);
  rec.rank = rs.rank() + spec.center_rank;
  rec.dim = rs.n_roots() + rec.rank;
  rec.d = stem.size();
  rec.complex_ok = rec.rank % 2 == 0;
  if (rec.rank < 2 * rec.d) {
    rec.hyper_ok = false;
    rec.notes = "rank < 2d";
  } else if ((rec.rank - 2 * rec.d) % 4 != 0) {
    rec.hyper_ok = false;
    rec.notes = "rank - 2d not divisible by 4 (equivalently dim(u) not divisible by 4)";
  } else {
    rec.hyper_ok = true;
    rec.p = (rec.rank - 2 * rec.d) / 2;
  }

  // Known moduli descriptions, recorded as documentation only.
  if (spec.components.size() == 1 && spec.center_rank == 0 &&
      spec.components[0].family == Family::A && spec.components[0].rank % 2 == 0) {
    const int dd = spec.components[0].rank / 2;
    rec.moduli_note = "equivalence classes of hypercomplex structures: Z_2 \\ GL(" +
                      std::to_string(dd) + ",R)";
  }
  if (spec.components.size() == 1 && spec.components[0].family == Family::C &&
      spec.center_rank == spec.components[0].rank) {
    const int dd = spec.components[0].rank;
    rec.moduli_note = "equivalence classes of hypercomplex structures: GL_" + std::to_string(dd) +
                      "(Z) \\ GL_" + std::to_string(dd) + "(R)";
  }
  return rec;
}

} // namespace stemlie
