#pragma once

#include <string>
#include <utility>
#include <vector>

#include "stemlie/root_system.hpp"

namespace stemlie {

// A basis-indexed integer combination over {E_alpha} u {H_1..H_l}:
// indices 0..n_roots-1 are root vectors in canonical order, n_roots..n_roots+l-1
// the simple coroots H_{alpha_i}.
using BasisCombo = std::vector<std::pair<int, int>>;

// Integer structure constants N_{alpha,beta} of a Weyl-Chevalley basis,
// with N = 0 whenever alpha, beta or alpha+beta is not a root. Signs are
// fixed by the extraspecial-pair convention: positive roots are scanned in
// canonical order, each non-simple gamma gets N = +(p+1) on its minimal
// decomposition pair, and every other constant is propagated from those.
class StructureConstants {
 public:
  static StructureConstants compute(const RootSystem& rs);

  int n_roots() const { return n_roots_; }
  int n_positive() const { return n_roots_ / 2; }
  int rank() const { return l_; }
  int dim() const { return n_roots_ + l_; } // semisimple dimension

  // N_{alpha,beta} by root indices; 0 when the sum is not a root.
  int N(int i, int j) const { return n_table_[i * n_roots_ + j]; }
  // Index of alpha+beta, or -1.
  int sum_index(int i, int j) const { return sum_index_[i * n_roots_ + j]; }
  // Coordinates of the coroot H_alpha over {H_1..H_l} (integers).
  const std::vector<int>& coroot(int root_idx) const { return coroot_[root_idx]; }
  // C(alpha, alpha_i) = alpha(H_{alpha_i}).
  int cartan_on_simple(int root_idx, int i) const { return cartan_simple_[root_idx * l_ + i]; }

  // Bracket of two basis elements, expanded exactly over the basis.
  BasisCombo bracket_basis(int a, int b) const;

  // p+1 where p is the number of down-steps of the alpha-series of beta
  // (the independent magnitude oracle for |N|).
  int series_magnitude(const RootSystem& rs, int alpha_idx, int beta_idx) const;

 private:
  int n_roots_ = 0, l_ = 0;
  std::vector<int> n_table_;
  std::vector<int> sum_index_;
  std::vector<std::vector<int>> coroot_;
  std::vector<int> cartan_simple_;
};

// String labels "E[c1,c2,...]" and "H<i>" (1-based), used by bracket_pair and
// the JSON interfaces.
std::string basis_label(const RootSystem& rs, const StructureConstants& sc, int basis_idx);
int parse_basis_label(const RootSystem& rs, const StructureConstants& sc, const std::string& label);

// [x, y] for basis labels; throws on unknown labels.
std::vector<std::pair<std::string, int>> bracket_pair(const RootSystem& rs,
                                                      const StructureConstants& sc,
                                                      const std::string& x, const std::string& y);

// Contragredience: E_alpha -> -E_{-alpha}, H -> -H, as a basis combination.
BasisCombo contragredience_theta(const StructureConstants& sc, int basis_idx);

} // namespace stemlie
