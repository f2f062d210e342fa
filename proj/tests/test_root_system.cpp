#include <doctest.h>

#include <cstdlib>

#include "stemlie/root_system.hpp"

using namespace stemlie;

namespace {

Root make_root(std::vector<int> c) { return Root{std::move(c)}; }

int positive_count(const std::string& spec) {
  return RootSystem::generate(AlgebraSpec::parse(spec)).n_positive();
}

} // namespace

TEST_CASE("spec parsing") {
  auto s = AlgebraSpec::parse("A2+A2+D5");
  CHECK(s.components.size() == 3);
  CHECK(s.components[2].family == Family::D);
  CHECK(s.components[2].rank == 5);
  CHECK(s.center_rank == 0);
  CHECK(s.to_string() == "A2+A2+D5");

  auto t = AlgebraSpec::parse("A2#4");
  CHECK(t.center_rank == 4);
  CHECK(t.to_string() == "A2#4");

  CHECK_THROWS_AS(AlgebraSpec::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraSpec::parse("D2"), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraSpec::parse("B1"), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraSpec::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraSpec::parse("X3"), std::invalid_argument);
}

TEST_CASE("cardinalities per type") {
  CHECK(positive_count("A1") == 1);
  CHECK(positive_count("A4") == 10); // n(n+1)/2
  CHECK(positive_count("G2") == 6);
  CHECK(positive_count("F4") == 24);
  CHECK(positive_count("B3") == 9);
  CHECK(positive_count("C4") == 16);
  CHECK(positive_count("D4") == 12);
  CHECK(positive_count("E6") == 36);
  CHECK(positive_count("E7") == 63);
}

TEST_CASE("E8 has 240 roots") {
  auto rs = RootSystem::generate(AlgebraSpec::parse("E8"));
  CHECK(rs.n_roots() == 240);
}

TEST_CASE("G2 positive roots match the rank-2 model") {
  // Delta+ = {a, b, b+a, b+2a, b+3a, 2b+3a} with a short, b long.
  auto rs = RootSystem::generate(AlgebraSpec::parse("G2"));
  std::vector<Root> expect = {make_root({1, 0}), make_root({0, 1}), make_root({1, 1}),
                              make_root({2, 1}), make_root({3, 1}), make_root({3, 2})};
  CHECK(rs.n_positive() == 6);
  for (const auto& r : expect) CHECK(rs.index_of(r) >= 0);
  CHECK(rs.highest_root() == make_root({3, 2}));
}

TEST_CASE("closure under negation and reflections") {
  for (const char* spec : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    auto rs = RootSystem::generate(AlgebraSpec::parse(spec));
    for (int i = 0; i < rs.n_roots(); ++i) {
      CHECK(rs.index_of(-rs.root(i)) == rs.negative_of(i));
      for (int s = 0; s < rs.rank(); ++s) {
        Root refl = rs.reflect(rs.simple_root(s), rs.root(i));
        CHECK(rs.is_root(refl));
      }
    }
    CHECK(2 * rs.n_positive() == rs.n_roots());
  }
}

TEST_CASE("cartan integers") {
  auto g2 = RootSystem::generate(AlgebraSpec::parse("G2"));
  const Root alpha = g2.simple_root(0); // short
  const Root beta = g2.simple_root(1);  // long
  CHECK(g2.cartan_integer(alpha, alpha) == 2);
  CHECK(g2.cartan_integer(beta, alpha) == -3);
  CHECK(g2.cartan_integer(alpha, beta) == -1);

  // Independent oracle: the orthonormal model vectors e1-e2, e2+e3-2e1.
  {
    std::vector<int> a = {1, -1, 0}, b = {-2, 1, 1};
    int dot_ab = 0, dot_aa = 0;
    for (int i = 0; i < 3; ++i) {
      dot_ab += a[i] * b[i];
      dot_aa += a[i] * a[i];
    }
    CHECK(2 * dot_ab / dot_aa == -3);
  }

  CHECK_THROWS_AS(g2.cartan_integer(alpha, make_root({1, -1})), std::invalid_argument);
}

TEST_CASE("reflection examples") {
  auto a2 = RootSystem::generate(AlgebraSpec::parse("A2"));
  const Root a1 = a2.simple_root(0), al2 = a2.simple_root(1);
  CHECK(a2.reflect(a1, a1) == -a1);
  CHECK(a2.reflect(a1, al2) == a1 + al2);
  // Involutive.
  for (int i = 0; i < a2.n_roots(); ++i)
    CHECK(a2.reflect(a1, a2.reflect(a1, a2.root(i))) == a2.root(i));
}

TEST_CASE("highest roots") {
  auto a2 = RootSystem::generate(AlgebraSpec::parse("A2"));
  CHECK(a2.highest_root() == make_root({1, 1}));

  auto e8 = RootSystem::generate(AlgebraSpec::parse("E8"));
  // e7 + e8 in the orthonormal model.
  auto v = emodel_vector({Family::E, 8}, e8.highest_root().coords);
  std::vector<Rational> expect(8, Rational(0));
  expect[6] = 1;
  expect[7] = 1;
  CHECK(v == expect);
}

TEST_CASE("irreducible components") {
  auto sum = RootSystem::generate(AlgebraSpec::parse("A1+A1"));
  auto comps = sum.irreducible_components(sum.all_indices());
  CHECK(comps.size() == 2);

  auto e6 = RootSystem::generate(AlgebraSpec::parse("E6"));
  CHECK(e6.irreducible_components(e6.all_indices()).size() == 1);

  // D4 minus everything non-orthogonal to the highest root: three A1's.
  auto d4 = RootSystem::generate(AlgebraSpec::parse("D4"));
  const Root top = d4.highest_root();
  std::set<int> ortho;
  for (int i = 0; i < d4.n_roots(); ++i)
    if (d4.inner(d4.root(i), top) == 0) ortho.insert(i);
  auto parts = d4.irreducible_components(ortho);
  CHECK(parts.size() == 3);
  for (const auto& p : parts) CHECK(p.size() == 2);
}

TEST_CASE("root sums stay in their component with consistent sign") {
  for (const char* spec : {"A2+A2", "B3", "G2"}) {
    auto rs = RootSystem::generate(AlgebraSpec::parse(spec));
    for (int i = 0; i < rs.n_roots(); ++i)
      for (int j = 0; j < rs.n_roots(); ++j) {
        Root sum = rs.root(i) + rs.root(j);
        const int s = rs.index_of(sum);
        if (s < 0) continue;
        CHECK(rs.component_of(s) == rs.component_of(i));
        CHECK(rs.component_of(s) == rs.component_of(j));
      }
  }
}

TEST_CASE("string property for long and maximal roots") {
  for (const char* spec : {"A3", "B3", "C3", "G2", "F4"}) {
    auto rs = RootSystem::generate(AlgebraSpec::parse(spec));
    // For a long root gamma and alpha != +-gamma in its component, |C| <= 1
    // and the gamma-series of alpha has 1 + |C| elements.
    for (int g = 0; g < rs.n_roots(); ++g) {
      const Root gamma = rs.root(g);
      bool is_long = true;
      for (int i = 0; i < rs.n_roots(); ++i)
        if (rs.component_of(i) == rs.component_of(g) && rs.norm2(rs.root(i)) > rs.norm2(gamma))
          is_long = false;
      if (!is_long) continue;
      for (int a = 0; a < rs.n_roots(); ++a) {
        if (rs.component_of(a) != rs.component_of(g)) continue;
        const Root alpha = rs.root(a);
        if (alpha == gamma || alpha == -gamma) continue;
        const int c = rs.cartan_integer(alpha, gamma);
        CHECK(std::abs(c) <= 1);
        int len = 1;
        Root up = alpha + gamma;
        while (rs.is_root(up)) {
          ++len;
          up = up + gamma;
        }
        Root down = alpha - gamma;
        while (rs.is_root(down)) {
          ++len;
          down = down - gamma;
        }
        CHECK(len == 1 + std::abs(c));
      }
    }
    // For the maximal root, 0 <= C(alpha, gamma) <= 1 on Delta+ \ {gamma}.
    const Root top = rs.highest_root();
    for (int a = 0; a < rs.n_positive(); ++a) {
      if (rs.component_of(a) != rs.component_of(rs.index_of(top))) continue;
      if (rs.root(a) == top) continue;
      const int c = rs.cartan_integer(rs.root(a), top);
      CHECK(c >= 0);
      CHECK(c <= 1);
    }
  }
}

TEST_CASE("emodel gram matrices agree with the generator") {
  for (const char* spec : {"A4", "B3", "C3", "D4", "E6", "E7", "E8", "F4", "G2"}) {
    auto as = AlgebraSpec::parse(spec);
    auto rs = RootSystem::generate(as);
    auto model = emodel_simple_roots(as.components[0]);
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        Rational dot(0);
        for (size_t t = 0; t < model[i].size(); ++t) dot += model[i][t] * model[j][t];
        CHECK(dot == rs.inner(rs.simple_root(i), rs.simple_root(j)));
      }
  }
}

TEST_CASE("reducible systems are blockwise") {
  auto rs = RootSystem::generate(AlgebraSpec::parse("A2+B2"));
  CHECK(rs.rank() == 4);
  CHECK(rs.n_positive() == 3 + 4);
  // Cross-component inner products vanish.
  for (int i = 0; i < rs.n_roots(); ++i)
    for (int j = 0; j < rs.n_roots(); ++j)
      if (rs.component_of(i) != rs.component_of(j)) CHECK(rs.inner(rs.root(i), rs.root(j)) == 0);
}
