#pragma once

#include <optional>
#include <vector>

#include "stemlie/kscalar.hpp"

namespace stemlie {

// Dense exact matrices. KMatrix entries live in K = Q(i, sqrt2); QMatrix in Q.
using KMatrix = std::vector<std::vector<KScalar>>;
using QMatrix = std::vector<std::vector<Rational>>;

KMatrix k_identity(int n);
KMatrix k_mul(const KMatrix& a, const KMatrix& b);
std::vector<KScalar> k_apply(const KMatrix& a, const std::vector<KScalar>& x);
bool k_equal(const KMatrix& a, const KMatrix& b);

// Solve A x = b for a square invertible A. Throws on singular A.
std::vector<KScalar> k_solve(KMatrix a, std::vector<KScalar> b);
// Solve A X = B columnwise (A square invertible).
KMatrix k_solve_matrix(const KMatrix& a, const KMatrix& b);
KMatrix k_inverse(const KMatrix& a);

// Reduced-echelon kernel basis of an m x n matrix: one vector per free
// column, with entry 1 at its free column, in ascending column order.
std::vector<std::vector<KScalar>> k_kernel_basis(KMatrix a);
std::vector<std::vector<Rational>> q_kernel_basis(QMatrix a);

int k_rank(KMatrix a);

// Row-echelon reducer for span-membership tests.
class KSpan {
 public:
  explicit KSpan(int dim) : dim_(dim) {}
  // Add a vector to the span; returns false if it was already contained.
  bool add(std::vector<KScalar> v);
  // True iff v lies in the current span.
  bool contains(std::vector<KScalar> v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  // Reduce v against the stored echelon rows; returns the remainder.
  std::vector<KScalar> reduce(std::vector<KScalar> v) const;
  int dim_;
  std::vector<std::vector<KScalar>> rows_; // echelon rows, pivot normalized to 1
  std::vector<int> pivots_;
};

// Coefficients of target in the span of the given independent vectors, or
// nullopt if target is outside the span.
std::optional<std::vector<Rational>> q_coordinates(const std::vector<std::vector<Rational>>& basis,
                                                   const std::vector<Rational>& target);
std::optional<std::vector<KScalar>> k_coordinates(const std::vector<std::vector<KScalar>>& basis,
                                                  const std::vector<KScalar>& target);

} // namespace stemlie
