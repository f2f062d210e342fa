#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "stemlie/linalg.hpp"
#include "stemlie/stem.hpp"

using namespace stemlie;

namespace {

RootSystem make(const std::string& spec) { return RootSystem::generate(AlgebraSpec::parse(spec)); }

// Stem as a set of e-model vectors of the (single) component.
std::set<std::vector<Rational>> stem_emodel(const RootSystem& rs, const Stem& stem) {
  std::set<std::vector<Rational>> out;
  for (int g : stem.gammas) out.insert(emodel_vector(rs.spec().components[0], rs.root(g).coords));
  return out;
}

std::vector<Rational> vec(std::vector<int> halves) {
  // entries in half-integers: value = halves[i]/2
  std::vector<Rational> v;
  for (int h : halves) v.push_back(make_rational(h, 2));
  return v;
}

std::vector<Rational> unit_sum(int n, std::vector<std::pair<int, int>> entries) {
  std::vector<Rational> v(n, Rational(0));
  for (auto [i, c] : entries) v[i - 1] = c;
  return v;
}

int expected_d(Family f, int rank) {
  switch (f) {
    case Family::A: return (rank + 1) / 2;
    case Family::B: return rank;
    case Family::C: return rank;
    case Family::D: return 2 * (rank / 2);
    case Family::E: return rank == 6 ? 4 : rank;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return -1;
}

const std::vector<std::string> kGoldenTypes = {
    "A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4", "C2", "C3",
    "C4", "D3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"};

} // namespace

TEST_CASE("golden stems for the classical families") {
  // A_n: gamma_k = eps_{k-1} - eps_{n-k+1} over R^{n+1}.
  for (int n = 1; n <= 8; ++n) {
    auto rs = make("A" + std::to_string(n));
    auto stem = compute_stem(rs);
    std::set<std::vector<Rational>> expect;
    for (int k = 1; k <= (n + 1) / 2; ++k)
      expect.insert(unit_sum(n + 1, {{k, 1}, {n - k + 2, -1}}));
    CHECK(stem_emodel(rs, stem) == expect);
  }
  // B_p: e_{2k-1} +- e_{2k}, plus e_p for odd p.
  for (int p = 2; p <= 4; ++p) {
    auto rs = make("B" + std::to_string(p));
    auto stem = compute_stem(rs);
    std::set<std::vector<Rational>> expect;
    for (int k = 1; 2 * k <= p; ++k) {
      expect.insert(unit_sum(p, {{2 * k - 1, 1}, {2 * k, 1}}));
      expect.insert(unit_sum(p, {{2 * k - 1, 1}, {2 * k, -1}}));
    }
    if (p % 2 == 1) expect.insert(unit_sum(p, {{p, 1}}));
    CHECK(stem_emodel(rs, stem) == expect);
  }
  // C_n: all 2e_k.
  for (int n = 2; n <= 4; ++n) {
    auto rs = make("C" + std::to_string(n));
    auto stem = compute_stem(rs);
    std::set<std::vector<Rational>> expect;
    for (int k = 1; k <= n; ++k) expect.insert(unit_sum(n, {{k, 2}}));
    CHECK(stem_emodel(rs, stem) == expect);
  }
  // D_p: e_{2k-1} +- e_{2k}.
  for (int p = 3; p <= 5; ++p) {
    auto rs = make("D" + std::to_string(p));
    auto stem = compute_stem(rs);
    std::set<std::vector<Rational>> expect;
    for (int k = 1; 2 * k <= p; ++k) {
      expect.insert(unit_sum(p, {{2 * k - 1, 1}, {2 * k, 1}}));
      expect.insert(unit_sum(p, {{2 * k - 1, 1}, {2 * k, -1}}));
    }
    CHECK(stem_emodel(rs, stem) == expect);
  }
}

TEST_CASE("golden stems for the exceptional types") {
  {
    auto rs = make("G2");
    auto stem = compute_stem(rs);
    std::set<std::vector<Rational>> expect = {
        {Rational(-1), Rational(-1), Rational(2)}, // highest root 2e3 - e1 - e2
        {Rational(1), Rational(-1), Rational(0)},  // short simple root e1 - e2
    };
    CHECK(stem_emodel(rs, stem) == expect);
    CHECK(stem.gammas[0] == rs.index_of(rs.highest_root()));
    CHECK(rs.root(stem.gammas[1]) == rs.simple_root(0));
  }
  {
    auto rs = make("F4");
    auto stem = compute_stem(rs);
    std::set<std::vector<Rational>> expect = {
        unit_sum(4, {{1, 1}, {2, 1}}),
        unit_sum(4, {{1, 1}, {2, -1}}),
        unit_sum(4, {{3, 1}, {4, 1}}),
        unit_sum(4, {{3, 1}, {4, -1}}),
    };
    CHECK(stem_emodel(rs, stem) == expect);
  }
  {
    auto rs = make("E6");
    auto stem = compute_stem(rs);
    std::set<std::vector<Rational>> expect = {
        vec({1, 1, 1, 1, 1, -1, -1, 1}),
        vec({-1, -1, -1, -1, 1, -1, -1, 1}),
        unit_sum(8, {{4, 1}, {1, -1}}),
        unit_sum(8, {{3, 1}, {2, -1}}),
    };
    CHECK(stem_emodel(rs, stem) == expect);
  }
  {
    auto rs = make("E7");
    auto stem = compute_stem(rs);
    std::set<std::vector<Rational>> expect = {
        unit_sum(8, {{8, 1}, {7, -1}}), unit_sum(8, {{5, 1}, {6, 1}}),
        unit_sum(8, {{6, 1}, {5, -1}}), unit_sum(8, {{3, 1}, {4, 1}}),
        unit_sum(8, {{4, 1}, {3, -1}}), unit_sum(8, {{1, 1}, {2, 1}}),
        unit_sum(8, {{2, 1}, {1, -1}}),
    };
    CHECK(stem_emodel(rs, stem) == expect);
  }
  {
    auto rs = make("E8");
    auto stem = compute_stem(rs);
    std::set<std::vector<Rational>> expect = {
        unit_sum(8, {{7, 1}, {8, 1}}),  unit_sum(8, {{8, 1}, {7, -1}}),
        unit_sum(8, {{5, 1}, {6, 1}}),  unit_sum(8, {{6, 1}, {5, -1}}),
        unit_sum(8, {{3, 1}, {4, 1}}),  unit_sum(8, {{4, 1}, {3, -1}}),
        unit_sum(8, {{1, 1}, {2, 1}}),  unit_sum(8, {{2, 1}, {1, -1}}),
    };
    CHECK(stem_emodel(rs, stem) == expect);
  }
}

TEST_CASE("d-table and star orbit counts") {
  for (const auto& name : kGoldenTypes) {
    auto spec = AlgebraSpec::parse(name);
    auto rs = RootSystem::generate(spec);
    auto stem = compute_stem(rs);
    CHECK(stem.size() == expected_d(spec.components[0].family, spec.components[0].rank));
    auto star = star_involution(rs, stem);
    CHECK(star.orbit_count == stem.size());
    // Involutive and Cartan-matrix preserving.
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(star.simple_perm[star.simple_perm[i]] == i);
      for (int j = 0; j < rs.rank(); ++j)
        CHECK(rs.cartan_matrix()[i][j] ==
              rs.cartan_matrix()[star.simple_perm[i]][star.simple_perm[j]]);
    }
  }
}

TEST_CASE("star involution examples") {
  {
    auto rs = make("A4");
    auto star = star_involution(rs, compute_stem(rs));
    CHECK(star.simple_perm == std::vector<int>{3, 2, 1, 0}); // diagram reversal
  }
  {
    auto rs = make("B3");
    auto star = star_involution(rs, compute_stem(rs));
    CHECK(star.simple_perm == std::vector<int>{0, 1, 2}); // trivial
  }
  {
    auto rs = make("E6");
    auto star = star_involution(rs, compute_stem(rs));
    CHECK(star.simple_perm[0] == 5); // alpha1 <-> alpha6
    CHECK(star.simple_perm[2] == 4); // alpha3 <-> alpha5
    CHECK(star.simple_perm[1] == 1);
    CHECK(star.simple_perm[3] == 3);
  }
}

TEST_CASE("mu involution") {
  {
    auto rs = make("A2");
    auto stem = compute_stem(rs);
    const Root a1 = rs.simple_root(0), a2 = rs.simple_root(1);
    CHECK(mu_involution(rs, stem, a1) == a2);
    CHECK(mu_involution(rs, stem, rs.highest_root()) == rs.highest_root());
    CHECK_THROWS_AS(mu_involution(rs, stem, -a1), std::invalid_argument);
  }
  {
    // C2: mu(e1 - e2) = e1 + e2.
    auto rs = make("C2");
    auto stem = compute_stem(rs);
    const Root e1_minus_e2 = rs.simple_root(0);
    const Root e1_plus_e2 = Root{{1, 1}};
    CHECK(mu_involution(rs, stem, e1_minus_e2) == e1_plus_e2);
  }
  for (const auto& name : {"A4", "B3", "C3", "D4", "F4", "G2"}) {
    auto rs = make(name);
    auto stem = compute_stem(rs);
    for (int a = 0; a < rs.n_positive(); ++a) {
      const Root alpha = rs.root(a);
      const Root mu_alpha = mu_involution(rs, stem, alpha);
      CHECK(mu_involution(rs, stem, mu_alpha) == alpha);
      const int pos = stem.stem_position(a);
      if (pos < 0) {
        const int k = stem.branch_of(a);
        REQUIRE(k >= 0);
        CHECK(alpha + mu_alpha == rs.root(stem.gammas[k]));
        // alpha - gamma = s_gamma(alpha) lands in the negative branch.
        const Root refl = rs.reflect(rs.root(stem.gammas[k]), alpha);
        CHECK(refl == alpha - rs.root(stem.gammas[k]));
        CHECK(!refl.is_positive());
      } else {
        CHECK(mu_alpha == alpha);
      }
    }
  }
}

TEST_CASE("precedes") {
  {
    auto rs = make("C2");
    auto stem = compute_stem(rs);
    const Root g1 = rs.root(stem.gammas[0]), g2 = rs.root(stem.gammas[1]);
    CHECK(precedes(rs, stem, g1, g2));
    CHECK(precedes(rs, stem, g1, g1));
    CHECK(!precedes(rs, stem, g2, g1));
    CHECK_THROWS_AS(precedes(rs, stem, rs.simple_root(0), g1), std::invalid_argument);
  }
  {
    auto rs = make("D4");
    auto stem = compute_stem(rs);
    // The three late stem roots are mutually incomparable.
    CHECK(!precedes(rs, stem, rs.root(stem.gammas[1]), rs.root(stem.gammas[2])));
    CHECK(!precedes(rs, stem, rs.root(stem.gammas[2]), rs.root(stem.gammas[3])));
    CHECK(precedes(rs, stem, rs.root(stem.gammas[0]), rs.root(stem.gammas[3])));
  }
  // Index order is compatible with the partial order.
  for (const auto& name : kGoldenTypes) {
    auto rs = make(name);
    auto stem = compute_stem(rs);
    for (int k = 0; k < stem.size(); ++k)
      for (int j = 0; j < stem.size(); ++j)
        if (k != j && precedes(rs, stem, rs.root(stem.gammas[k]), rs.root(stem.gammas[j])))
          CHECK(k < j);
  }
}

TEST_CASE("branch combinatorics") {
  for (const auto& name : kGoldenTypes) {
    auto rs = make(name);
    auto stem = compute_stem(rs);
    int two_simple_branches = 0;
    for (int k = 0; k < stem.size(); ++k) {
      // Branches have even size.
      CHECK(stem.branches[k].size() % 2 == 0);
      // |branch ^ basis| in {0,1,2}, 0 iff gamma is simple.
      int simple_in_branch = 0;
      std::vector<int> simples;
      for (int b : stem.branches[k])
        if (rs.root(b).height() == 1) {
          ++simple_in_branch;
          simples.push_back(b);
        }
      CHECK(simple_in_branch <= 2);
      const bool gamma_simple = rs.root(stem.gammas[k]).height() == 1;
      CHECK((simple_in_branch == 0) == gamma_simple);
      if (simple_in_branch == 2) {
        // The two simple branch roots are swapped by star.
        auto star = star_involution(rs, stem);
        int i0 = -1, i1 = -1;
        for (int i = 0; i < rs.rank(); ++i) {
          if (rs.simple_root(i) == rs.root(simples[0])) i0 = i;
          if (rs.simple_root(i) == rs.root(simples[1])) i1 = i;
        }
        CHECK(star.simple_perm[i0] == i1);
      }
      if (simple_in_branch == 2) ++two_simple_branches;
    }
    CHECK(two_simple_branches + stem.size() == rs.rank());

    // The differences alpha_gamma - beta_gamma span an (l - d)-dimensional
    // space orthogonal to the whole stem.
    std::vector<std::vector<Rational>> diffs;
    for (int k = 0; k < stem.size(); ++k) {
      std::vector<int> simples;
      for (int b : stem.branches[k])
        if (rs.root(b).height() == 1) simples.push_back(b);
      if (simples.size() == 2) {
        Root diff = rs.root(simples[0]) - rs.root(simples[1]);
        for (int g : stem.gammas) CHECK(rs.inner(diff, rs.root(g)) == 0);
        std::vector<Rational> v;
        for (int x : diff.coords) v.emplace_back(x);
        diffs.push_back(std::move(v));
      }
    }
    CHECK(static_cast<int>(diffs.size()) == rs.rank() - stem.size());
    if (!diffs.empty()) {
      QMatrix m(diffs[0].size(), std::vector<Rational>(diffs.size()));
      for (size_t c = 0; c < diffs.size(); ++c)
        for (size_t r = 0; r < diffs[c].size(); ++r) m[r][c] = diffs[c][r];
      CHECK(q_kernel_basis(m).empty()); // linearly independent
    }
  }
}

TEST_CASE("reconstruction of the positive system") {
  {
    auto rs = make("A1");
    auto got = reconstruct_positive(rs, {rs.simple_root(0)});
    CHECK(got == std::set<int>{0});
  }
  for (const auto& name : kGoldenTypes) {
    auto rs = make(name);
    auto stem = compute_stem(rs);
    std::vector<Root> gammas;
    for (int g : stem.gammas) gammas.push_back(rs.root(g));
    CHECK(reconstruct_positive(rs, gammas) == rs.positive_indices());
  }
  {
    auto rs = make("A2");
    CHECK_THROWS_AS(reconstruct_positive(rs, {rs.simple_root(0), rs.simple_root(1)}),
                    std::invalid_argument);
  }
}

TEST_CASE("stem axioms pass for generated stems") {
  for (const auto& name : kGoldenTypes) {
    auto rs = make(name);
    auto stem = compute_stem(rs);
    auto report = verify_stem_axioms(rs, stem);
    CHECK(report.all_pass());
  }
}

TEST_CASE("constructed negatives are caught") {
  auto rs = make("C2");
  auto stem = compute_stem(rs);
  {
    // A branch root duplicated into the stem list breaks disjointness.
    Stem bad = stem;
    bad.gammas.push_back(bad.branches[0][0]);
    bad.theta_component.push_back(bad.theta_component[0]);
    auto report = verify_stem_axioms(rs, bad);
    bool disjoint_failed = false;
    for (const auto& c : report.checks)
      if (c.name == "disjoint_decomposition" && !c.pass) disjoint_failed = true;
    CHECK(disjoint_failed);
  }
  {
    // Dropping the last stem root breaks maximality.
    Stem bad = stem;
    bad.gammas.pop_back();
    bad.branches.pop_back();
    bad.theta_component.pop_back();
    auto report = verify_stem_axioms(rs, bad);
    bool maximality_failed = false;
    for (const auto& c : report.checks)
      if (c.name == "maximality" && !c.pass) maximality_failed = true;
    CHECK(maximality_failed);
  }
}

TEST_CASE("stems of orthogonal unions are unions of stems") {
  auto rs = make("A2+B2");
  auto stem = compute_stem(rs);
  auto a2 = make("A2");
  auto b2 = make("B2");
  auto sa = compute_stem(a2), sb = compute_stem(b2);
  std::set<std::vector<int>> got;
  for (int g : stem.gammas) got.insert(rs.root(g).coords);
  std::set<std::vector<int>> expect;
  for (int g : sa.gammas) {
    std::vector<int> c = a2.root(g).coords;
    c.push_back(0);
    c.push_back(0);
    expect.insert(c);
  }
  for (int g : sb.gammas) {
    std::vector<int> c = {0, 0};
    for (int x : b2.root(g).coords) c.push_back(x);
    expect.insert(c);
  }
  CHECK(got == expect);
}

TEST_CASE("stem is independent of the tie-break order") {
  // Explore every admissible choice of maximal root at every step and check
  // the resulting set of stem roots is always the same.
  for (const auto& name : {"A4", "B3", "B4", "C3", "D4", "D5", "F4", "G2", "A2+A2"}) {
    auto rs = make(name);
    const auto reference = [&] {
      auto s = compute_stem(rs);
      return std::set<int>(s.gammas.begin(), s.gammas.end());
    }();

    std::map<std::set<int>, std::set<std::set<int>>> memo;
    std::function<std::set<std::set<int>>(const std::set<int>&)> explore =
        [&](const std::set<int>& current) -> std::set<std::set<int>> {
      if (current.empty()) return {std::set<int>{}};
      auto it = memo.find(current);
      if (it != memo.end()) return it->second;
      std::set<std::set<int>> results;
      for (const auto& comp : rs.irreducible_components(current)) {
        Root gamma = rs.highest_root(current, comp);
        std::set<int> next;
        for (int idx : current)
          if (rs.inner(rs.root(idx), gamma) == 0) next.insert(idx);
        for (auto rest : explore(next)) {
          rest.insert(rs.index_of(gamma));
          results.insert(std::move(rest));
        }
      }
      memo[current] = results;
      return results;
    };
    auto all = explore(rs.all_indices());
    CHECK(all.size() == 1);
    CHECK(*all.begin() == reference);
  }
}

TEST_CASE("stem has maximal cardinality among strongly orthogonal subsets (rank <= 4)") {
  for (const auto& name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D3",
                           "D4", "F4", "G2"}) {
    auto rs = make(name);
    auto stem = compute_stem(rs);
    const int np = rs.n_positive();
    int best = 0;
    std::function<void(int, std::vector<int>&)> search = [&](int start, std::vector<int>& chosen) {
      best = std::max(best, static_cast<int>(chosen.size()));
      for (int a = start; a < np; ++a) {
        bool ok = true;
        for (int b : chosen) {
          if (rs.is_root(rs.root(a) + rs.root(b)) || rs.is_root(rs.root(a) - rs.root(b))) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        chosen.push_back(a);
        search(a + 1, chosen);
        chosen.pop_back();
      }
    };
    std::vector<int> chosen;
    search(0, chosen);
    CHECK(best == stem.size());
  }
}
