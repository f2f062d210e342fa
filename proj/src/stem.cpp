#include "stemlie/stem.hpp"

#include <algorithm>
#include <stdexcept>

namespace stemlie {

namespace {

std::string root_str(const RootSystem& rs, int idx) {
  std::string s = "(";
  const auto& c = rs.root(idx).coords;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b) {
  return !rs.is_root(a + b) && !rs.is_root(a - b);
}

} // namespace

int Stem::stem_position(int root_idx) const {
  for (size_t k = 0; k < gammas.size(); ++k)
    if (gammas[k] == root_idx) return static_cast<int>(k);
  return -1;
}

int Stem::branch_of(int root_idx) const {
  for (size_t k = 0; k < branches.size(); ++k)
    for (int b : branches[k])
      if (b == root_idx) return static_cast<int>(k);
  return -1;
}

Stem compute_stem(const RootSystem& rs) {
  Stem stem;
  if (rs.rank() == 0) return stem;

  std::set<int> current = rs.all_indices();
  while (!current.empty()) {
    stem.chain.push_back(current);
    auto comps = rs.irreducible_components(current);
    // Deterministic choice: the component containing the smallest simple-root
    // index (every component of an intermediate system contains simple roots
    // of the ambient basis).
    int best_comp = -1, best_key = 1 << 30;
    for (size_t c = 0; c < comps.size(); ++c) {
      int key = 1 << 30;
      for (int idx : comps[c]) {
        const auto& coords = rs.root(idx).coords;
        int nonzero = 0, only = -1;
        for (int i = 0; i < rs.rank(); ++i)
          if (coords[i] != 0) {
            ++nonzero;
            only = i;
          }
        if (nonzero == 1 && coords[only] == 1) key = std::min(key, only);
      }
      if (key < best_key) {
        best_key = key;
        best_comp = static_cast<int>(c);
      }
    }
    if (best_comp < 0) best_comp = 0; // cannot happen for chain subsystems

    Root gamma = rs.highest_root(current, comps[best_comp]);
    const int gidx = rs.index_of(gamma);
    stem.gammas.push_back(gidx);
    stem.theta_component.push_back(comps[best_comp]);

    std::set<int> next;
    for (int idx : current)
      if (rs.inner(rs.root(idx), gamma) == 0) next.insert(idx);
    current = std::move(next);
  }

  // Branches and mu over the ambient positive system.
  stem.branches.resize(stem.gammas.size());
  for (size_t k = 0; k < stem.gammas.size(); ++k) {
    const Root gamma = rs.root(stem.gammas[k]);
    for (int a = 0; a < rs.n_positive(); ++a) {
      Root diff = gamma - rs.root(a);
      if (diff.is_positive() && rs.is_root(diff)) stem.branches[k].push_back(a);
    }
    stem.mu[stem.gammas[k]] = stem.gammas[k];
    for (int a : stem.branches[k]) stem.mu[a] = rs.index_of(gamma - rs.root(a));
  }
  return stem;
}

Root mu_involution(const RootSystem& rs, const Stem& stem, const Root& alpha) {
  const int idx = rs.index_of(alpha);
  if (idx < 0 || !rs.is_positive_index(idx))
    throw std::invalid_argument("mu_involution: alpha is not a positive root");
  return rs.root(stem.mu.at(idx));
}

bool precedes(const RootSystem& rs, const Stem& stem, const Root& gamma, const Root& delta) {
  const int g = stem.stem_position(rs.index_of(gamma));
  const int d = rs.index_of(delta);
  if (g < 0 || stem.stem_position(d) < 0)
    throw std::invalid_argument("precedes: arguments must be stem roots");
  return stem.theta_component[g].count(d) > 0;
}

StarInvolution star_involution(const RootSystem& rs, const Stem& stem) {
  StarInvolution star;
  const int l = rs.rank();
  star.simple_perm.resize(l);
  for (int i = 0; i < l; ++i) {
    Root image = rs.simple_root(i);
    for (int g : stem.gammas) image = rs.reflect(rs.root(g), image);
    image = -image;
    // The image must again be simple.
    int target = -1;
    for (int j = 0; j < l; ++j)
      if (image == rs.simple_root(j)) target = j;
    if (target < 0) throw std::logic_error("star involution does not permute the basis");
    star.simple_perm[i] = target;
  }
  for (int i = 0; i < l; ++i) star.orbit_count += (star.simple_perm[i] >= i) ? 1 : 0;
  return star;
}

std::set<int> reconstruct_positive(const RootSystem& rs, const std::vector<Root>& gammas) {
  for (size_t i = 0; i < gammas.size(); ++i)
    for (size_t j = i + 1; j < gammas.size(); ++j)
      if (!strongly_orthogonal(rs, gammas[i], gammas[j]))
        throw std::invalid_argument("reconstruct_positive: list is not strongly orthogonal");
  std::set<int> result;
  for (int idx = 0; idx < rs.n_roots(); ++idx) {
    const Root& alpha = rs.root(idx);
    for (const Root& gamma : gammas) {
      const int c = rs.cartan_integer(alpha, gamma);
      if (c > 0) {
        result.insert(idx);
        break;
      }
      if (c != 0) break;
    }
  }
  return result;
}

Report verify_stem_axioms(const RootSystem& rs, const Stem& stem) {
  Report report;

  // Disjoint decomposition of Delta+.
  {
    std::map<int, int> owner; // positive root -> how many parts claim it
    bool disjoint = true;
    std::string detail;
    auto claim = [&](int idx) {
      if (++owner[idx] > 1) {
        disjoint = false;
        if (detail.empty()) detail = "root " + root_str(rs, idx) + " claimed twice";
      }
    };
    for (size_t k = 0; k < stem.gammas.size(); ++k) {
      claim(stem.gammas[k]);
      if (k < stem.branches.size())
        for (int b : stem.branches[k]) claim(b);
    }
    for (int a = 0; a < rs.n_positive(); ++a)
      if (!owner.count(a)) {
        disjoint = false;
        if (detail.empty()) detail = "root " + root_str(rs, a) + " not covered";
      }
    report.add("disjoint_decomposition", disjoint, detail);
  }

  // Pairwise strong orthogonality of the stem.
  {
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < stem.gammas.size() && ok; ++i)
      for (size_t j = i + 1; j < stem.gammas.size() && ok; ++j)
        if (!strongly_orthogonal(rs, rs.root(stem.gammas[i]), rs.root(stem.gammas[j]))) {
          ok = false;
          detail = root_str(rs, stem.gammas[i]) + " vs " + root_str(rs, stem.gammas[j]);
        }
    report.add("strong_orthogonality", ok, detail);
  }

  // Maximality: no positive root is strongly orthogonal to the whole stem.
  {
    bool ok = true;
    std::string detail;
    for (int a = 0; a < rs.n_positive() && ok; ++a) {
      bool in_stem = stem.stem_position(a) >= 0;
      if (in_stem) continue;
      bool orthogonal_to_all = true;
      for (int g : stem.gammas)
        if (!strongly_orthogonal(rs, rs.root(a), rs.root(g))) {
          orthogonal_to_all = false;
          break;
        }
      if (orthogonal_to_all) {
        ok = false;
        detail = "root " + root_str(rs, a) + " strongly orthogonal to the stem";
      }
    }
    report.add("maximality", ok, detail);
  }

  // Branch characterization: C(alpha, gamma) = 1 on every branch.
  {
    bool ok = true;
    std::string detail;
    for (size_t k = 0; k < stem.branches.size() && k < stem.gammas.size() && ok; ++k)
      for (int a : stem.branches[k])
        if (rs.cartan_integer(rs.root(a), rs.root(stem.gammas[k])) != 1) {
          ok = false;
          detail = root_str(rs, a) + " against " + root_str(rs, stem.gammas[k]);
          break;
        }
    report.add("branch_pairing", ok, detail);
  }

  // Closure laws over the recomputed chain (independent of stem.chain).
  {
    bool law_a = true, law_b = true, law_c = true;
    std::string da, db, dc;
    std::set<int> delta_k = rs.all_indices();
    for (size_t k = 0; k < stem.gammas.size(); ++k) {
      const Root gamma = rs.root(stem.gammas[k]);
      const std::vector<int> branch = k < stem.branches.size() ? stem.branches[k] : std::vector<int>{};
      std::set<int> delta_next;
      for (int idx : delta_k)
        if (rs.inner(rs.root(idx), gamma) == 0) delta_next.insert(idx);

      for (int a : branch)
        for (int b : branch) {
          Root sum = rs.root(a) + rs.root(b);
          if (rs.is_root(sum) && !(sum == gamma)) {
            law_a = false;
            if (da.empty()) da = root_str(rs, a) + "+" + root_str(rs, b);
          }
        }
      for (int a : branch)
        for (int bidx : delta_next) {
          Root sum = rs.root(a) + rs.root(bidx);
          if (!rs.is_root(sum)) continue;
          const int sidx = rs.index_of(sum);
          bool in_branch = false;
          for (int x : branch)
            if (x == sidx) in_branch = true;
          if (!in_branch) {
            law_b = false;
            if (db.empty()) db = root_str(rs, a) + "+" + root_str(rs, bidx);
          }
        }
      for (int a : delta_k)
        for (int b : delta_k) {
          Root sum = rs.root(a) + rs.root(b);
          if (rs.is_root(sum) && !delta_k.count(rs.index_of(sum))) {
            law_c = false;
            if (dc.empty()) dc = root_str(rs, a) + "+" + root_str(rs, b);
          }
        }
      delta_k = std::move(delta_next);
    }
    report.add("closure_branch_sum", law_a, da);
    report.add("closure_branch_chain", law_b, db);
    report.add("closure_chain", law_c, dc);
  }

  return report;
}

} // namespace stemlie
