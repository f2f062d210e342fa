#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stemlie/algebra.hpp"
#include "stemlie/operators.hpp"

namespace stemlie {

// A Borel-normalized complex structure: +i on n+ and on the chosen h+, -i on
// the conjugate half. Carries the data used downstream: the Z_gamma = I W_gamma
// vectors, the paired o_u-vectors spanning j_u and the basis U_1..U_m of h+.
struct ComplexStructureI {
  LinOp op;
  std::vector<Element> Z;           // per stem position, inside o_u
  std::vector<Element> s_vectors;   // the remaining 2p o_u vectors, I-paired
  std::vector<Element> S_basis;     // S_t = s_{2t-1} - i s_{2t}, basis of j+
  std::vector<Element> hplus_basis; // U_1..U_m = P_1..P_d, S_1..S_p
  int p = 0;
};

struct AdmissibilityResult {
  bool ok = false;
  std::string reason;                      // empty when ok
  std::optional<std::pair<int, int>> witness; // stem positions (j, k) with gamma_j(I W_k) != 0
};

struct NijenhuisReport {
  std::string operator_id;
  std::optional<std::pair<int, int>> worst_pair; // basis indices of a failing pair
  Element residual;                              // exact, zero iff pass
};

struct HyperStructure {
  LinOp I, J, K;
  std::vector<KScalar> rho;
  KMatrix b;                      // p x p, b_bar * b = -Id
  std::vector<Element> S_basis, T_basis;
  std::string provenance;         // "direct" or "cayley"
  Report report;
};

struct MatchingBlocks {
  KMatrix a;   // n x n over Delta+
  KMatrix b;   // m x m over the h+ basis
  KMatrix xi;  // m x n
  KMatrix eta; // n x m
};

struct ClassificationRecord {
  std::string spec;
  int rank = 0;
  int dim = 0;
  int d = 0;
  bool complex_ok = false;
  bool hyper_ok = false;
  int p = -1; // (rank - 2d)/2 when hyper_ok
  std::string notes;
  std::string moduli_note; // documentation string for the known moduli cases
};

// Canonical admissible structure: Z_gamma = leading kernel-basis vectors of
// o_u, remaining vectors paired s_{2t-1} -> s_{2t}. Throws when the rank
// obstruction rank != 2d + 4k (or rank < 2d) holds.
ComplexStructureI build_I_canonical(const ReductiveAlgebra& alg, const Stem& stem,
                                    const StemFrame& frame);

// Same construction with caller-chosen Z and paired vectors; the result is a
// genuine complex structure but need not be admissible.
ComplexStructureI build_I_custom(const ReductiveAlgebra& alg, const Stem& stem,
                                 const StemFrame& frame, std::vector<Element> Z,
                                 std::vector<Element> s_vectors);

AdmissibilityResult check_admissible(const ReductiveAlgebra& alg, const Stem& stem,
                                     const StemFrame& frame, const ComplexStructureI& I);

// The standard block matrix with b[2t][2t-1] = 1, b[2t-1][2t] = -1 (0-based
// pairs), the simplest solution of b_bar b = -Id.
KMatrix default_b_matrix(int p);
bool b_condition_holds(const KMatrix& b);

HyperStructure build_J_direct(const ReductiveAlgebra& alg, const Stem& stem,
                              const StemFrame& frame, const ComplexStructureI& I,
                              const KMatrix& b_matrix);

HyperStructure build_J_cayley(const ReductiveAlgebra& alg, const Stem& stem,
                              const StemFrame& frame, const ComplexStructureI& I,
                              const KMatrix& b_matrix);

// [op X, op Y] - op[op X, Y] - op[X, op Y] - [X, Y], exactly.
Element nijenhuis(const ReductiveAlgebra& alg, const LinOp& op, const Element& x, const Element& y);

// Integrability by two independent routes: closure of the +i eigenspace and
// the full Nijenhuis sweep; the verdicts must agree.
std::pair<bool, NijenhuisReport> is_integrable(const ReductiveAlgebra& alg, const LinOp& op,
                                               const std::string& operator_id = "");

// Decomposes J over the matched bases and checks the block relations, the
// antisymmetry and support law of a, and the Cartan-side identities.
std::pair<MatchingBlocks, Report> extract_matching_blocks(const ReductiveAlgebra& alg,
                                                          const Stem& stem,
                                                          const StemFrame& frame,
                                                          const ComplexStructureI& I,
                                                          const LinOp& J);

// The full identity suite for a candidate hypercomplex structure.
Report verify_hypercomplex(const ReductiveAlgebra& alg, const Stem& stem, const StemFrame& frame,
                           const HyperStructure& hs);

ClassificationRecord classify_algebra(const AlgebraSpec& spec);

} // namespace stemlie
