#pragma once

#include <map>
#include <set>
#include <vector>

#include "stemlie/report.hpp"
#include "stemlie/root_system.hpp"

namespace stemlie {

// The stem of Delta+: the ordered strongly orthogonal set produced by
// iterated extraction of maximal roots, together with its branches, the
// involution mu, the component subsystems Theta_gamma and the chain of
// nested subsystems Delta_1 > Delta_2 > ... > Delta_d.
struct Stem {
  std::vector<int> gammas;                 // root indices, order compatible with <
  std::vector<std::vector<int>> branches;  // branches[k] = Phi^+_{gamma_k}, canonical order
  std::map<int, int> mu;                   // involution on positive root indices
  std::vector<std::set<int>> theta_component; // Theta_{gamma_k} as root index sets
  std::vector<std::set<int>> chain;        // chain[k] = Delta_{k+1} (chain[0] = Delta_1)

  int size() const { return static_cast<int>(gammas.size()); }
  // Index of gamma within the stem, or -1.
  int stem_position(int root_idx) const;
  // Stem root whose branch contains the given positive root, or -1.
  int branch_of(int root_idx) const;
};

struct StarInvolution {
  std::vector<int> simple_perm; // image of each simple root index
  int orbit_count = 0;
};

// Iterated maximal-root extraction. Tie-break among the maximal roots of a
// reducible intermediate system: take the component containing the smallest
// simple-root index.
Stem compute_stem(const RootSystem& rs);

// mu(gamma) = gamma on the stem, mu(alpha) = gamma - alpha on the branch at
// gamma. Throws if alpha is not positive.
Root mu_involution(const RootSystem& rs, const Stem& stem, const Root& alpha);

// gamma precedes delta iff delta lies in Theta_gamma. Reflexive.
bool precedes(const RootSystem& rs, const Stem& stem, const Root& gamma, const Root& delta);

// The permutation alpha -> -(s_{gamma_d} ... s_{gamma_1})(alpha) of the
// simple roots, and the number of its orbits on the basis.
StarInvolution star_involution(const RootSystem& rs, const Stem& stem);

// Positive system determined by an ordered strongly orthogonal list:
// { alpha : C(alpha,gamma_1)=...=C(alpha,gamma_{k-1})=0, C(alpha,gamma_k)>0 }.
// Throws if the list is not strongly orthogonal.
std::set<int> reconstruct_positive(const RootSystem& rs, const std::vector<Root>& gammas);

// Checks the defining properties of a stem structure: disjoint decomposition,
// strong orthogonality, maximality, C(alpha,gamma)=1 on branches, and the
// closure laws of the chain. Failures are report entries with counterexamples.
Report verify_stem_axioms(const RootSystem& rs, const Stem& stem);

} // namespace stemlie
