#include "stemlie/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

#include "stemlie/linalg.hpp"

namespace stemlie {

namespace {

void check_rank(Family f, int rank) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument(std::string("invalid rank ") + std::to_string(rank) +
                                " for family " + static_cast<char>(f));
}

// Gram matrix <alpha_i, alpha_j> of one simple component, normalized to the
// usual orthonormal-basis models (long roots of squared length 2, except C
// where the long root 2e_n has squared length 4 and G2 where it has 6).
std::vector<std::vector<Rational>> component_gram(const SimpleComponentSpec& c) {
  const int n = c.rank;
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
  auto chain = [&](int upto) {
    for (int i = 0; i < upto; ++i) {
      g[i][i] = 2;
      if (i + 1 < upto) g[i][i + 1] = g[i + 1][i] = -1;
    }
  };
  switch (c.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n - 1);
      g[n - 1][n - 1] = 1;
      g[n - 2][n - 1] = g[n - 1][n - 2] = -1;
      break;
    case Family::C:
      chain(n - 1);
      g[n - 1][n - 1] = 4;
      g[n - 2][n - 1] = g[n - 1][n - 2] = -2;
      break;
    case Family::D:
      chain(n - 1);
      g[n - 1][n - 1] = 2;
      g[n - 3][n - 1] = g[n - 1][n - 3] = -1;
      break;
    case Family::E: {
      // Nodes: 1-3-4-5-6(-7-8), 2 attached to 4.
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      auto link = [&](int i, int j) { g[i - 1][j - 1] = g[j - 1][i - 1] = -1; };
      link(1, 3); link(3, 4); link(2, 4); link(4, 5); link(5, 6);
      if (n >= 7) link(6, 7);
      if (n >= 8) link(7, 8);
      break;
    }
    case Family::F:
      // alpha1,alpha2 long; alpha3,alpha4 short.
      g[0][0] = g[1][1] = 2;
      g[2][2] = g[3][3] = 1;
      g[0][1] = g[1][0] = -1;
      g[1][2] = g[2][1] = -1;
      g[2][3] = g[3][2] = Rational(-1, 2);
      break;
    case Family::G:
      // alpha1 short (length^2 = 2), alpha2 long (length^2 = 6).
      g[0][0] = 2;
      g[1][1] = 6;
      g[0][1] = g[1][0] = -3;
      break;
  }
  return g;
}

} // namespace

std::string AlgebraSpec::to_string() const {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += "+";
    s += static_cast<char>(components[i].family);
    s += std::to_string(components[i].rank);
  }
  if (center_rank > 0) s += "#" + std::to_string(center_rank);
  return s;
}

AlgebraSpec AlgebraSpec::parse(const std::string& text) {
  AlgebraSpec spec;
  std::string body = text;
  auto hash = body.find('#');
  if (hash != std::string::npos) {
    std::string r = body.substr(hash + 1);
    body = body.substr(0, hash);
    if (r.empty() || !std::all_of(r.begin(), r.end(), ::isdigit))
      throw std::invalid_argument("bad center rank in spec: " + text);
    spec.center_rank = std::stoi(r);
  }
  size_t pos = 0;
  while (pos < body.size()) {
    char f = static_cast<char>(std::toupper(body[pos]));
    if (f < 'A' || f > 'G') throw std::invalid_argument("bad family letter in spec: " + text);
    ++pos;
    size_t start = pos;
    while (pos < body.size() && std::isdigit(body[pos])) ++pos;
    if (start == pos) throw std::invalid_argument("missing rank in spec: " + text);
    SimpleComponentSpec c{static_cast<Family>(f), std::stoi(body.substr(start, pos - start))};
    check_rank(c.family, c.rank);
    spec.components.push_back(c);
    if (pos < body.size()) {
      if (body[pos] != '+') throw std::invalid_argument("expected '+' in spec: " + text);
      ++pos;
      if (pos == body.size()) throw std::invalid_argument("trailing '+' in spec: " + text);
    }
  }
  if (spec.components.empty() && spec.center_rank == 0)
    throw std::invalid_argument("empty spec: " + text);
  return spec;
}

int AlgebraSpec::semisimple_rank() const {
  int l = 0;
  for (const auto& c : components) l += c.rank;
  return l;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& x : r.coords) x = -x;
  return r;
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r = *this;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= o.coords[i];
  return r;
}

int Root::height() const {
  int h = 0;
  for (int x : coords) h += x;
  return h;
}

bool Root::is_positive() const {
  for (int x : coords)
    if (x != 0) return x > 0;
  return false;
}

RootSystem RootSystem::generate(const AlgebraSpec& spec) {
  for (const auto& c : spec.components) check_rank(c.family, c.rank);
  if (spec.components.empty() && spec.center_rank == 0)
    throw std::invalid_argument("empty algebra spec");

  RootSystem rs;
  rs.spec_ = spec;
  rs.rank_ = spec.semisimple_rank();
  rs.n_components_ = static_cast<int>(spec.components.size());
  const int l = rs.rank_;

  // Blockwise Gram and Cartan matrices.
  rs.gram_.assign(l, std::vector<Rational>(l, Rational(0)));
  rs.cartan_.assign(l, std::vector<int>(l, 0));
  std::vector<int> comp_of_simple(l, 0);
  int offset = 0;
  for (size_t ci = 0; ci < spec.components.size(); ++ci) {
    auto g = component_gram(spec.components[ci]);
    const int n = spec.components[ci].rank;
    for (int i = 0; i < n; ++i) {
      comp_of_simple[offset + i] = static_cast<int>(ci);
      for (int j = 0; j < n; ++j) rs.gram_[offset + i][offset + j] = g[i][j];
    }
    offset += n;
  }
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rational c = 2 * rs.gram_[i][j] / rs.gram_[j][j];
      if (c.get_den() != 1) throw std::logic_error("non-integral Cartan matrix entry");
      rs.cartan_[i][j] = static_cast<int>(c.get_num().get_si());
    }

  // Closure of the simple roots under simple reflections.
  std::set<std::vector<int>> seen;
  std::deque<Root> queue;
  for (int i = 0; i < l; ++i) {
    Root a{std::vector<int>(l, 0)};
    a.coords[i] = 1;
    seen.insert(a.coords);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < l; ++i) {
      // C(r, alpha_i) from the Cartan matrix, by linearity in the first slot.
      int c = 0;
      for (int j = 0; j < l; ++j) c += r.coords[j] * rs.cartan_[j][i];
      Root s = r;
      s.coords[i] -= c;
      if (seen.insert(s.coords).second) queue.push_back(s);
    }
  }

  std::vector<Root> positives;
  for (const auto& coords : seen) {
    Root r{coords};
    if (r.is_positive()) positives.push_back(r);
  }
  std::sort(positives.begin(), positives.end(), [](const Root& x, const Root& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coords < y.coords;
  });
  if (2 * positives.size() != seen.size()) throw std::logic_error("root closure is not symmetric");

  rs.roots_ = positives;
  for (const auto& r : positives) rs.roots_.push_back(-r);
  for (int i = 0; i < static_cast<int>(rs.roots_.size()); ++i) rs.index_[rs.roots_[i].coords] = i;

  rs.component_of_.resize(rs.roots_.size());
  for (size_t k = 0; k < rs.roots_.size(); ++k) {
    int comp = -1;
    for (int i = 0; i < l; ++i)
      if (rs.roots_[k].coords[i] != 0) {
        if (comp >= 0 && comp != comp_of_simple[i])
          throw std::logic_error("root crosses component boundary");
        comp = comp_of_simple[i];
      }
    rs.component_of_[k] = comp;
  }
  return rs;
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r.coords);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::negative_of(int idx) const {
  const int np = n_positive();
  return idx < np ? idx + np : idx - np;
}

Root RootSystem::simple_root(int i) const {
  Root r{std::vector<int>(rank_, 0)};
  r.coords[i] = 1;
  return r;
}

Rational RootSystem::inner(const Root& x, const Root& y) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (y.coords[j] == 0) continue;
      s += x.coords[i] * y.coords[j] * gram_[i][j];
    }
  }
  return s;
}

int RootSystem::cartan_integer(const Root& beta, const Root& alpha) const {
  if (!is_root(alpha)) throw std::invalid_argument("cartan_integer: alpha is not a root");
  Rational c = 2 * inner(beta, alpha) / inner(alpha, alpha);
  if (c.get_den() != 1) throw std::logic_error("non-integral Cartan integer");
  return static_cast<int>(c.get_num().get_si());
}

Root RootSystem::reflect(const Root& alpha, const Root& beta) const {
  if (!is_root(alpha)) throw std::invalid_argument("reflect: alpha is not a root");
  const int c = cartan_integer(beta, alpha);
  Root r = beta;
  for (int i = 0; i < rank_; ++i) r.coords[i] -= c * alpha.coords[i];
  return r;
}

std::vector<std::set<int>> RootSystem::irreducible_components(const std::set<int>& subsystem) const {
  std::vector<int> idx(subsystem.begin(), subsystem.end());
  std::map<int, int> pos;
  for (size_t i = 0; i < idx.size(); ++i) pos[idx[i]] = static_cast<int>(i);
  std::vector<int> label(idx.size(), -1);
  std::vector<std::set<int>> comps;
  for (size_t s = 0; s < idx.size(); ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::deque<int> q{static_cast<int>(s)};
    label[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      comps[id].insert(idx[u]);
      for (size_t v = 0; v < idx.size(); ++v) {
        if (label[v] >= 0) continue;
        if (inner(roots_[idx[u]], roots_[idx[v]]) != 0) {
          label[v] = id;
          q.push_back(static_cast<int>(v));
        }
      }
    }
  }
  return comps;
}

std::vector<int> RootSystem::induced_basis(const std::set<int>& subsystem) const {
  // Indecomposable positive elements of the subsystem.
  std::vector<int> pos;
  for (int i : subsystem)
    if (is_positive_index(i)) pos.push_back(i);
  std::vector<int> basis;
  for (int i : pos) {
    bool decomposable = false;
    for (int a : pos) {
      for (int b : pos) {
        if (roots_[a] + roots_[b] == roots_[i]) {
          decomposable = true;
          break;
        }
      }
      if (decomposable) break;
    }
    if (!decomposable) basis.push_back(i);
  }
  return basis;
}

Root RootSystem::highest_root(const std::set<int>& subsystem, const std::set<int>& component) const {
  if (component.empty()) throw std::invalid_argument("highest_root: empty component");
  // Maximal ambient height in the component; dominance is verified below.
  int best = -1;
  for (int i : component) {
    if (!is_positive_index(i)) continue;
    if (best < 0 || roots_[i].height() > roots_[best].height()) best = i;
  }
  if (best < 0) throw std::invalid_argument("highest_root: component has no positive root");

  // The candidate must dominate every root of the component: differences are
  // nonnegative combinations of the induced basis of the subsystem.
  std::vector<int> basis = induced_basis(subsystem);
  std::vector<std::vector<Rational>> basis_vecs;
  for (int b : basis) {
    std::vector<Rational> v;
    for (int x : roots_[b].coords) v.emplace_back(x);
    basis_vecs.push_back(std::move(v));
  }
  for (int i : component) {
    Root diff = roots_[best] - roots_[i];
    std::vector<Rational> target;
    for (int x : diff.coords) target.emplace_back(x);
    auto coords = q_coordinates(basis_vecs, target);
    if (!coords) throw std::logic_error("highest_root: difference outside the subsystem span");
    for (const auto& c : *coords)
      if (c < 0) throw std::logic_error("highest_root: dominance check failed");
  }
  return roots_[best];
}

Root RootSystem::highest_root() const {
  auto all = all_indices();
  auto comps = irreducible_components(all);
  return highest_root(all, comps.at(0));
}

std::set<int> RootSystem::all_indices() const {
  std::set<int> s;
  for (int i = 0; i < n_roots(); ++i) s.insert(i);
  return s;
}

std::set<int> RootSystem::positive_indices() const {
  std::set<int> s;
  for (int i = 0; i < n_positive(); ++i) s.insert(i);
  return s;
}

} // namespace stemlie
