#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stemlie/kscalar.hpp"

namespace stemlie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleComponentSpec {
  Family family;
  int rank;
};

// A compact reductive algebra: semisimple components plus a center of
// rank center_rank. Spec strings look like "A4", "A2+A2+D5", "C3#3".
struct AlgebraSpec {
  std::vector<SimpleComponentSpec> components;
  int center_rank = 0;

  std::string to_string() const;
  static AlgebraSpec parse(const std::string& text);
  int semisimple_rank() const;
};

// Root coordinates in the simple-root basis; all nonzero entries of a root
// share one sign, and entries outside its irreducible component vanish.
struct Root {
  std::vector<int> coords;

  bool operator==(const Root& o) const { return coords == o.coords; }
  bool operator<(const Root& o) const { return coords < o.coords; }
  Root operator-() const;
  Root operator+(const Root& o) const;
  Root operator-(const Root& o) const;
  int height() const;
  bool is_positive() const; // sign of any nonzero coordinate
};

class RootSystem {
 public:
  static RootSystem generate(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return spec_; }
  int rank() const { return rank_; }                 // semisimple rank l
  int center_rank() const { return spec_.center_rank; }
  int n_roots() const { return static_cast<int>(roots_.size()); }
  int n_positive() const { return n_roots() / 2; }

  // Canonical order: positive roots sorted by (height, lex coords), then the
  // negatives in the mirrored order, so index(-a) = index(a) +- n_positive.
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int idx) const { return roots_[idx]; }
  int index_of(const Root& r) const;                  // -1 if not a root
  bool is_root(const Root& r) const { return index_of(r) >= 0; }
  int negative_of(int idx) const;
  bool is_positive_index(int idx) const { return idx < n_positive(); }

  Root simple_root(int i) const;
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  int component_of(int root_idx) const { return component_of_[root_idx]; }
  int n_components() const { return n_components_; }

  Rational inner(const Root& x, const Root& y) const;
  Rational norm2(const Root& r) const { return inner(r, r); }

  // C(beta, alpha) = 2<beta,alpha>/<alpha,alpha>; alpha must be a root.
  int cartan_integer(const Root& beta, const Root& alpha) const;
  // s_alpha(beta) = beta - C(beta,alpha) alpha; alpha must be a root.
  Root reflect(const Root& alpha, const Root& beta) const;

  // Highest root of one irreducible component of a closed subsystem, given as
  // a set of root indices closed under negation. The result dominates every
  // root of the component: differences are nonnegative combinations of the
  // induced basis.
  Root highest_root(const std::set<int>& subsystem, const std::set<int>& component) const;
  Root highest_root() const; // of component 0 of the full system

  // Partition of a negation-closed subsystem into connected components of the
  // non-orthogonality graph.
  std::vector<std::set<int>> irreducible_components(const std::set<int>& subsystem) const;

  // Indecomposable positive roots of a closed subsystem (its induced basis).
  std::vector<int> induced_basis(const std::set<int>& subsystem) const;

  std::set<int> all_indices() const;
  std::set<int> positive_indices() const;

 private:
  AlgebraSpec spec_;
  int rank_ = 0;
  int n_components_ = 0;
  std::vector<std::vector<int>> cartan_;     // C(alpha_i, alpha_j)
  std::vector<std::vector<Rational>> gram_;  // <alpha_i, alpha_j>
  std::vector<Root> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> component_of_;
};

// e-model coordinates of the simple roots (one fixed linear map per family),
// used by golden-data fixtures and the CLI's table output.
std::vector<std::vector<Rational>> emodel_simple_roots(const SimpleComponentSpec& c);
// e-model vector of a root of an irreducible system (component coordinates).
std::vector<Rational> emodel_vector(const SimpleComponentSpec& c, const std::vector<int>& coords);
std::string emodel_to_string(const std::vector<Rational>& v);

} // namespace stemlie
