#include "stemlie/linalg.hpp"

#include <stdexcept>

namespace stemlie {

KMatrix k_identity(int n) {
  KMatrix m(n, std::vector<KScalar>(n));
  for (int i = 0; i < n; ++i) m[i][i] = KScalar::one();
  return m;
}

KMatrix k_mul(const KMatrix& a, const KMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int k = static_cast<int>(b.size());
  const int m = k ? static_cast<int>(b[0].size()) : 0;
  KMatrix r(n, std::vector<KScalar>(m));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        if (b[t][j].is_zero()) continue;
        r[i][j] += a[i][t] * b[t][j];
      }
    }
  return r;
}

std::vector<KScalar> k_apply(const KMatrix& a, const std::vector<KScalar>& x) {
  const int n = static_cast<int>(a.size());
  std::vector<KScalar> r(n);
  for (int j = 0; j < static_cast<int>(x.size()); ++j) {
    if (x[j].is_zero()) continue;
    for (int i = 0; i < n; ++i) {
      if (a[i][j].is_zero()) continue;
      r[i] += a[i][j] * x[j];
    }
  }
  return r;
}

bool k_equal(const KMatrix& a, const KMatrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

namespace {

// In-place Gauss-Jordan on [a | rhs]; returns pivot columns.
std::vector<int> gauss_jordan(KMatrix& a, KMatrix* rhs) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!a[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
    const KScalar inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    if (rhs)
      for (auto& x : (*rhs)[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const KScalar f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      if (rhs)
        for (size_t j = 0; j < (*rhs)[i].size(); ++j) (*rhs)[i][j] -= f * (*rhs)[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::vector<KScalar> k_solve(KMatrix a, std::vector<KScalar> b) {
  KMatrix rhs(b.size(), std::vector<KScalar>(1));
  for (size_t i = 0; i < b.size(); ++i) rhs[i][0] = b[i];
  auto pivots = gauss_jordan(a, &rhs);
  if (pivots.size() != a.size()) throw std::invalid_argument("k_solve: singular matrix");
  std::vector<KScalar> x(a.size());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs[r][0];
  return x;
}

KMatrix k_solve_matrix(const KMatrix& a, const KMatrix& b) {
  KMatrix acopy = a;
  KMatrix rhs = b;
  auto pivots = gauss_jordan(acopy, &rhs);
  if (pivots.size() != a.size()) throw std::invalid_argument("k_solve_matrix: singular matrix");
  KMatrix x(a.size(), std::vector<KScalar>(b[0].size()));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rhs[r];
  return x;
}

KMatrix k_inverse(const KMatrix& a) { return k_solve_matrix(a, k_identity(static_cast<int>(a.size()))); }

std::vector<std::vector<KScalar>> k_kernel_basis(KMatrix a) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  auto pivots = gauss_jordan(a, nullptr);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<KScalar>> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<KScalar> v(cols);
    v[c] = KScalar::one();
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

int k_rank(KMatrix a) { return static_cast<int>(gauss_jordan(a, nullptr).size()); }

std::vector<std::vector<Rational>> q_kernel_basis(QMatrix a) {
  KMatrix ka(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (const auto& q : a[i]) ka[i].emplace_back(q);
  auto kb = k_kernel_basis(std::move(ka));
  std::vector<std::vector<Rational>> out;
  for (auto& v : kb) {
    std::vector<Rational> row;
    for (auto& x : v) {
      if (x.b != 0 || x.c != 0 || x.d != 0) throw std::logic_error("q_kernel_basis: non-rational entry");
      row.push_back(x.a);
    }
    out.push_back(std::move(row));
  }
  return out;
}

bool KSpan::add(std::vector<KScalar> v) {
  v = reduce(std::move(v));
  int pivot = -1;
  for (int i = 0; i < dim_; ++i)
    if (!v[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot < 0) return false;
  const KScalar inv = v[pivot].inverse();
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool KSpan::contains(std::vector<KScalar> v) const {
  v = reduce(std::move(v));
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<KScalar> KSpan::reduce(std::vector<KScalar> v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (v[p].is_zero()) continue;
    const KScalar f = v[p];
    for (int i = 0; i < dim_; ++i) v[i] -= f * rows_[r][i];
  }
  return v;
}

std::optional<std::vector<KScalar>> k_coordinates(const std::vector<std::vector<KScalar>>& basis,
                                                  const std::vector<KScalar>& target) {
  const int dim = static_cast<int>(target.size());
  const int k = static_cast<int>(basis.size());
  if (k == 0) {
    for (const auto& t : target)
      if (!t.is_zero()) return std::nullopt;
    return std::vector<KScalar>{};
  }
  KMatrix a(dim, std::vector<KScalar>(k));
  KMatrix rhs(dim, std::vector<KScalar>(1));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = basis[j][i];
    rhs[i][0] = target[i];
  }
  auto pivots = gauss_jordan(a, &rhs);
  if (pivots.size() != static_cast<size_t>(k)) throw std::invalid_argument("k_coordinates: dependent basis");
  std::vector<KScalar> coords(k);
  for (size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = rhs[r][0];
  for (int r = static_cast<int>(pivots.size()); r < dim; ++r)
    if (!rhs[r][0].is_zero()) return std::nullopt;
  return coords;
}

std::optional<std::vector<Rational>> q_coordinates(const std::vector<std::vector<Rational>>& basis,
                                                   const std::vector<Rational>& target) {
  if (basis.empty()) {
    for (const auto& t : target)
      if (t != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  const int dim = static_cast<int>(target.size());
  const int k = static_cast<int>(basis.size());
  // Columns are the basis vectors; eliminate [A | target].
  KMatrix a(dim, std::vector<KScalar>(k));
  KMatrix rhs(dim, std::vector<KScalar>(1));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = KScalar(basis[j][i]);
    rhs[i][0] = KScalar(target[i]);
  }
  auto pivots = gauss_jordan(a, &rhs);
  if (pivots.size() != static_cast<size_t>(k)) throw std::invalid_argument("q_coordinates: dependent basis");
  std::vector<Rational> coords(k, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    const KScalar& v = rhs[r][0];
    if (v.b != 0 || v.c != 0 || v.d != 0) return std::nullopt;
    coords[pivots[r]] = v.a;
  }
  // Consistency: non-pivot rows of rhs must vanish.
  for (int r = static_cast<int>(pivots.size()); r < dim; ++r)
    if (!rhs[r][0].is_zero()) return std::nullopt;
  return coords;
}

} // namespace stemlie
