#pragma once

#include <map>
#include <string>
#include <vector>

#include "stemlie/chevalley.hpp"
#include "stemlie/linalg.hpp"
#include "stemlie/report.hpp"
#include "stemlie/root_system.hpp"
#include "stemlie/stem.hpp"

namespace stemlie {

// Sparse element of g over K. Basis order: E_alpha for alpha in canonical
// root order, then H_1..H_l, then the central C_1..C_r.
struct Element {
  int dim = 0;
  std::map<int, KScalar> coeffs; // no explicit zeros

  Element() = default;
  explicit Element(int d) : dim(d) {}

  void set(int idx, const KScalar& v);
  void add(int idx, const KScalar& v);
  KScalar get(int idx) const;
  bool is_zero() const { return coeffs.empty(); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element scaled(const KScalar& f) const;
  bool operator==(const Element& o) const { return dim == o.dim && coeffs == o.coeffs; }

  std::vector<KScalar> to_dense() const;
  static Element from_dense(const std::vector<KScalar>& v);
};

// g = g_s + c realized over the basis {E_alpha} u {H_i} u {C_k}.
class ReductiveAlgebra {
 public:
  ReductiveAlgebra(RootSystem rs, StructureConstants sc);

  const RootSystem& rs() const { return rs_; }
  const StructureConstants& sc() const { return sc_; }
  int dim() const { return dim_; }
  int rank() const { return rs_.rank() + rs_.center_rank(); } // rank of u
  int n_roots() const { return rs_.n_roots(); }
  int center_rank() const { return rs_.center_rank(); }

  int e_index(int root_idx) const { return root_idx; }
  int h_index(int i) const { return rs_.n_roots() + i; }
  int c_index(int k) const { return rs_.n_roots() + rs_.rank() + k; }
  bool is_root_index(int basis_idx) const { return basis_idx < rs_.n_roots(); }
  bool is_center_index(int basis_idx) const { return basis_idx >= rs_.n_roots() + rs_.rank(); }

  Element basis_element(int idx) const;
  Element E(int root_idx) const { return basis_element(e_index(root_idx)); }
  Element H(int i) const { return basis_element(h_index(i)); }
  Element C(int k) const { return basis_element(c_index(k)); }
  // Coroot H_alpha expanded over {H_i}.
  Element coroot_element(int root_idx) const;

  std::string label(int basis_idx) const;
  int parse_label(const std::string& s) const;

  Element bracket(const Element& x, const Element& y) const;
  // Antilinear conjugation fixing the compact form u.
  Element tau(const Element& x) const;
  // alpha(H) for H supported on the Cartan part (center included).
  KScalar eval_root(const Root& alpha, const Element& h) const;

 private:
  RootSystem rs_;
  StructureConstants sc_;
  int dim_ = 0;
};

// A linear operator on g, columns = images of basis elements.
struct LinOp {
  int dim = 0;
  KMatrix mat; // mat[row][col]

  static LinOp identity(int dim);
  static LinOp zero(int dim);
  Element apply(const ReductiveAlgebra& alg, const Element& x) const;
  std::vector<KScalar> column(int c) const;
  void set_column(int c, const Element& image);
  LinOp compose(const LinOp& other) const; // this after other
  bool operator==(const LinOp& o) const { return dim == o.dim && k_equal(mat, o.mat); }

  bool squares_to_minus_identity() const;
  bool commutes_with_tau(const ReductiveAlgebra& alg) const;
  bool anticommutes_with(const LinOp& other) const;
  // psi[x,y] = [psi x, psi y] over all basis pairs.
  bool preserves_brackets(const ReductiveAlgebra& alg) const;
  bool preserves_brackets_sampled(const ReductiveAlgebra& alg, int samples, unsigned seed) const;
};

// The stem-adapted frame: quarter-turn torus parameters rho, the su(2)
// triples (W, X, Y) per stem root, a basis of the centralizer o_u, and the
// branch index sets.
struct StemFrame {
  std::vector<KScalar> rho;          // per stem position, in {1, i, -1, -i}
  std::vector<Element> W, X, Y;      // per stem position
  std::vector<Element> o_basis;      // deterministic kernel basis of o_u
  std::vector<std::vector<int>> Vplus, Vminus; // E-basis indices per stem position
};

StemFrame stem_frame(const ReductiveAlgebra& alg, const Stem& stem,
                     const std::vector<KScalar>& rho);

// Verifies the two-step nilpotent decomposition of n+ along the stem.
Report heisenberg_check(const ReductiveAlgebra& alg, const Stem& stem);

} // namespace stemlie
