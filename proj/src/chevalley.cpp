#include "stemlie/chevalley.hpp"

#include <algorithm>
#include <stdexcept>

namespace stemlie {

namespace {

// Resolver for structure constants of arbitrary sign pairs during the
// positive-table induction. Mixed-sign values are reduced to positive pairs
// of smaller height through the ratio identity
//   N_{a,b}/<c,c> = N_{b,-c}/<a,a> = N_{-c,a}/<b,b>   (a + b = c),
// so the reduction only consults entries that are already filled.
struct Builder {
  const RootSystem& rs;
  int n, np;
  std::vector<int> sum_index;
  std::vector<int> table; // filled for positive pairs as induction proceeds
  std::vector<char> known;

  explicit Builder(const RootSystem& r) : rs(r), n(r.n_roots()), np(r.n_positive()) {
    sum_index.assign(n * n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sum_index[i * n + j] = rs.index_of(rs.root(i) + rs.root(j));
    table.assign(n * n, 0);
    known.assign(n * n, 0);
  }

  bool positive(int i) const { return i < np; }
  int neg(int i) const { return i < np ? i + np : i - np; }

  int get_pp(int a, int b) const {
    if (!known[a * n + b]) throw std::logic_error("structure constant requested out of order");
    return table[a * n + b];
  }

  void set_pp(int a, int b, int v) {
    table[a * n + b] = v;
    known[a * n + b] = 1;
  }

  Rational norm2(int i) const { return rs.norm2(rs.root(i)); }

  // N_{x,y} for arbitrary root indices, assuming all positive pairs of
  // height(x)+height(y) or less are known.
  int resolve(int x, int y) const {
    const int s = sum_index[x * n + y];
    if (s < 0) return 0;
    if (positive(x) && positive(y)) return get_pp(x, y);
    if (!positive(x) && !positive(y)) return -resolve(neg(x), neg(y));
    if (positive(x)) return -resolve(y, x); // antisymmetry to reach (-a, b)
    // x = -a with a, b positive.
    const int a = neg(x), b = y;
    Rational v;
    if (positive(s)) {
      // b - a positive: N_{-a,b} = <s,s>/<b,b> * N_{a,s} with a + s = b.
      v = norm2(s) / norm2(b) * get_pp(a, s);
    } else {
      // t = a - b positive: N_{-a,b} = <t,t>/<a,a> * N_{b,t} with b + t = a.
      const int t = neg(s);
      v = norm2(t) / norm2(a) * get_pp(b, t);
    }
    if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
    return static_cast<int>(v.get_num().get_si());
  }
};

} // namespace

StructureConstants StructureConstants::compute(const RootSystem& rs) {
  Builder bd(rs);
  const int n = rs.n_roots();
  const int np = rs.n_positive();

  // Positive pairs by induction on the height of the sum. Positive roots are
  // already listed in canonical (height, lex) order.
  for (int g = 0; g < np; ++g) {
    const Root gamma = rs.root(g);
    if (gamma.height() < 2) continue;
    std::vector<std::pair<int, int>> pairs; // (a, b), a < b, a + b = gamma
    for (int a = 0; a < np; ++a) {
      Root rest = gamma - rs.root(a);
      const int b = rs.index_of(rest);
      if (b >= 0 && b < np && a < b) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) throw std::logic_error("non-simple positive root with no decomposition");
    std::sort(pairs.begin(), pairs.end());
    const auto [a1, b1] = pairs.front(); // extraspecial pair: minimal first member

    // |N| = p + 1 where p counts the down-steps of the a1-series of b1.
    int p = 0;
    Root walk = rs.root(b1) - rs.root(a1);
    while (rs.is_root(walk)) {
      ++p;
      walk = walk - rs.root(a1);
    }
    bd.set_pp(a1, b1, p + 1);
    bd.set_pp(b1, a1, -(p + 1));

    // Remaining pairs from the Jacobi identity on (a, b, -a1), projected on
    // the root space of gamma - a1 = b1:
    //   N_{a,b} N_{gamma,-a1} + N_{b,-a1} N_{b-a1,a} + N_{-a1,a} N_{a-a1,b} = 0.
    for (size_t t = 1; t < pairs.size(); ++t) {
      const auto [a, b] = pairs[t];
      const int denom = bd.resolve(g, bd.neg(a1));
      if (denom == 0) throw std::logic_error("vanishing extraspecial propagation pivot");
      long acc = 0;
      const int nb = bd.resolve(b, bd.neg(a1));
      if (nb != 0) acc += static_cast<long>(nb) * bd.resolve(bd.sum_index[b * n + bd.neg(a1)], a);
      const int na = bd.resolve(bd.neg(a1), a);
      if (na != 0) acc += static_cast<long>(na) * bd.resolve(bd.sum_index[bd.neg(a1) * n + a], b);
      if (acc % denom != 0) throw std::logic_error("non-integral propagated constant");
      const int value = static_cast<int>(-acc / denom);
      bd.set_pp(a, b, value);
      bd.set_pp(b, a, -value);
    }
  }

  // Dense table over all sign combinations.
  StructureConstants sc;
  sc.n_roots_ = n;
  sc.l_ = rs.rank();
  sc.sum_index_ = bd.sum_index;
  sc.n_table_.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (bd.sum_index[i * n + j] >= 0) sc.n_table_[i * n + j] = bd.resolve(i, j);

  // Coroots: H_alpha = sum_i n_i(alpha) <alpha_i,alpha_i>/<alpha,alpha> H_i.
  sc.coroot_.resize(n);
  for (int r = 0; r < n; ++r) {
    const Root& alpha = rs.root(r);
    const Rational nn = rs.norm2(alpha);
    std::vector<int> co(sc.l_, 0);
    for (int i = 0; i < sc.l_; ++i) {
      if (alpha.coords[i] == 0) continue;
      Rational m = alpha.coords[i] * rs.norm2(rs.simple_root(i)) / nn;
      if (m.get_den() != 1) throw std::logic_error("non-integral coroot coordinate");
      co[i] = static_cast<int>(m.get_num().get_si());
    }
    sc.coroot_[r] = std::move(co);
  }

  sc.cartan_simple_.assign(n * sc.l_, 0);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i < sc.l_; ++i)
      sc.cartan_simple_[r * sc.l_ + i] = rs.cartan_integer(rs.root(r), rs.simple_root(i));

  return sc;
}

BasisCombo StructureConstants::bracket_basis(int a, int b) const {
  BasisCombo out;
  const bool a_root = a < n_roots_;
  const bool b_root = b < n_roots_;
  if (a_root && b_root) {
    const int neg_a = a < n_positive() ? a + n_positive() : a - n_positive();
    if (b == neg_a) {
      // [E_alpha, E_{-alpha}] = H_alpha.
      for (int i = 0; i < l_; ++i)
        if (coroot_[a][i] != 0) out.emplace_back(n_roots_ + i, coroot_[a][i]);
      return out;
    }
    const int s = sum_index(a, b);
    if (s >= 0 && N(a, b) != 0) out.emplace_back(s, N(a, b));
    return out;
  }
  if (!a_root && !b_root) return out; // Cartan is abelian
  if (a_root) {
    // [E_alpha, H_i] = -C(alpha, alpha_i) E_alpha.
    const int i = b - n_roots_;
    const int c = cartan_on_simple(a, i);
    if (c != 0) out.emplace_back(a, -c);
    return out;
  }
  const int i = a - n_roots_;
  const int c = cartan_on_simple(b, i);
  if (c != 0) out.emplace_back(b, c);
  return out;
}

int StructureConstants::series_magnitude(const RootSystem& rs, int alpha_idx, int beta_idx) const {
  int p = 0;
  Root walk = rs.root(beta_idx) - rs.root(alpha_idx);
  while (rs.is_root(walk)) {
    ++p;
    walk = walk - rs.root(alpha_idx);
  }
  return p + 1;
}

std::string basis_label(const RootSystem& rs, const StructureConstants& sc, int basis_idx) {
  if (basis_idx < sc.n_roots()) {
    std::string s = "E[";
    const auto& c = rs.root(basis_idx).coords;
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + "]";
  }
  return "H" + std::to_string(basis_idx - sc.n_roots() + 1);
}

int parse_basis_label(const RootSystem& rs, const StructureConstants& sc, const std::string& label) {
  if (label.size() >= 3 && label[0] == 'E' && label[1] == '[' && label.back() == ']') {
    std::vector<int> coords;
    std::string body = label.substr(2, label.size() - 3);
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t comma = body.find(',', pos);
      std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        coords.push_back(std::stoi(piece));
      } catch (...) {
        throw std::invalid_argument("unknown basis label: " + label);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    const int idx = rs.index_of(Root{coords});
    if (idx < 0) throw std::invalid_argument("unknown basis label (not a root): " + label);
    return idx;
  }
  if (label.size() >= 2 && label[0] == 'H') {
    int i;
    try {
      i = std::stoi(label.substr(1));
    } catch (...) {
      throw std::invalid_argument("unknown basis label: " + label);
    }
    if (i < 1 || i > rs.rank()) throw std::invalid_argument("unknown basis label (bad index): " + label);
    return sc.n_roots() + i - 1;
  }
  throw std::invalid_argument("unknown basis label: " + label);
}

std::vector<std::pair<std::string, int>> bracket_pair(const RootSystem& rs,
                                                      const StructureConstants& sc,
                                                      const std::string& x, const std::string& y) {
  const int a = parse_basis_label(rs, sc, x);
  const int b = parse_basis_label(rs, sc, y);
  std::vector<std::pair<std::string, int>> out;
  for (const auto& [idx, coeff] : sc.bracket_basis(a, b)) out.emplace_back(basis_label(rs, sc, idx), coeff);
  return out;
}

BasisCombo contragredience_theta(const StructureConstants& sc, int basis_idx) {
  if (basis_idx < sc.n_roots()) {
    const int np = sc.n_positive();
    const int neg = basis_idx < np ? basis_idx + np : basis_idx - np;
    return {{neg, -1}};
  }
  return {{basis_idx, -1}};
}

} // namespace stemlie
