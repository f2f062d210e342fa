#include <doctest.h>

#include "stemlie/algebra.hpp"

using namespace stemlie;

namespace {

ReductiveAlgebra make_alg(const std::string& spec) {
  RootSystem rs = RootSystem::generate(AlgebraSpec::parse(spec));
  StructureConstants sc = StructureConstants::compute(rs);
  return ReductiveAlgebra(std::move(rs), std::move(sc));
}

std::vector<KScalar> ones(int d) { return std::vector<KScalar>(d, KScalar::one()); }

} // namespace

TEST_CASE("bracket basics") {
  auto alg = make_alg("A2#1");
  const auto& rs = alg.rs();
  // [E_a, E_-a] = H_a expanded over the simple coroots.
  const int top = rs.index_of(rs.highest_root());
  Element h = alg.bracket(alg.E(top), alg.E(rs.negative_of(top)));
  Element expect = alg.coroot_element(top);
  CHECK(h == expect);
  CHECK(h.get(alg.h_index(0)) == KScalar::one());
  CHECK(h.get(alg.h_index(1)) == KScalar::one());
  // Central elements bracket to zero.
  CHECK(alg.bracket(alg.C(0), alg.E(0)).is_zero());
  CHECK(alg.bracket(alg.C(0), alg.H(1)).is_zero());
  // Dimension mismatch is refused.
  auto other = make_alg("A2");
  CHECK_THROWS_AS(alg.bracket(alg.E(0), other.E(0)), std::invalid_argument);
}

TEST_CASE("tau is an antilinear involutive automorphism") {
  auto alg = make_alg("B2#1");
  for (int i = 0; i < alg.dim(); ++i) {
    Element x = alg.basis_element(i);
    CHECK(alg.tau(alg.tau(x)) == x);
  }
  // tau(E_a) = -E_{-a}; tau(i H_a) = i H_a.
  CHECK(alg.tau(alg.E(0)) == -alg.E(alg.rs().negative_of(0)));
  Element ih = alg.H(0).scaled(KScalar::i());
  CHECK(alg.tau(ih) == ih);
  CHECK(alg.tau(alg.C(0)) == -alg.C(0));
  // tau[x,y] = [tau x, tau y] over all basis pairs.
  for (int a = 0; a < alg.dim(); ++a)
    for (int b = 0; b < alg.dim(); ++b) {
      Element lhs = alg.tau(alg.bracket(alg.basis_element(a), alg.basis_element(b)));
      Element rhs = alg.bracket(alg.tau(alg.basis_element(a)), alg.tau(alg.basis_element(b)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("root functional evaluation") {
  auto alg = make_alg("C2#2");
  const auto& rs = alg.rs();
  auto stem = compute_stem(rs);
  auto frame = stem_frame(alg, stem, ones(stem.size()));
  const Root gamma = rs.root(stem.gammas[0]);
  // gamma(H_gamma) = 2.
  CHECK(alg.eval_root(gamma, alg.coroot_element(stem.gammas[0])) == KScalar(2));
  // alpha(W_gamma) = (i/2) C(alpha, gamma), and the center is annihilated.
  const KScalar ihalf = KScalar::i() * KScalar(Rational(1, 2));
  for (int a = 0; a < rs.n_roots(); ++a) {
    const Root alpha = rs.root(a);
    CHECK(alg.eval_root(alpha, frame.W[0]) == ihalf * KScalar(rs.cartan_integer(alpha, gamma)));
    CHECK(alg.eval_root(alpha, alg.C(0)).is_zero());
  }
  // Distinct stem roots annihilate each other's coroots.
  CHECK(alg.eval_root(rs.root(stem.gammas[1]), alg.coroot_element(stem.gammas[0])).is_zero());
  CHECK_THROWS_AS(alg.eval_root(gamma, alg.E(0)), std::invalid_argument);
}

TEST_CASE("W bracket rule") {
  auto alg = make_alg("G2");
  const auto& rs = alg.rs();
  auto stem = compute_stem(rs);
  auto frame = stem_frame(alg, stem, ones(stem.size()));
  const KScalar ihalf = KScalar::i() * KScalar(Rational(1, 2));
  for (int k = 0; k < stem.size(); ++k)
    for (int a = 0; a < rs.n_roots(); ++a) {
      Element lhs = alg.bracket(frame.W[k], alg.E(a));
      const int c = rs.cartan_integer(rs.root(a), rs.root(stem.gammas[k]));
      CHECK(lhs == alg.E(a).scaled(ihalf * KScalar(c)));
    }
}

TEST_CASE("stem frame structure") {
  {
    // su(2): no o-vectors, W = (i/2) H.
    auto alg = make_alg("A1");
    auto stem = compute_stem(alg.rs());
    auto frame = stem_frame(alg, stem, ones(1));
    CHECK(frame.o_basis.empty());
    CHECK(frame.W[0] == alg.H(0).scaled(KScalar::i() * KScalar(Rational(1, 2))));
  }
  {
    // su(3): one o-vector proportional to i(H_1 - H_2).
    auto alg = make_alg("A2");
    auto stem = compute_stem(alg.rs());
    auto frame = stem_frame(alg, stem, ones(1));
    REQUIRE(frame.o_basis.size() == 1);
    Element v = frame.o_basis[0];
    Element candidate = (alg.H(0) - alg.H(1)).scaled(KScalar::i());
    bool proportional = false;
    for (const auto& f : {KScalar::one(), -KScalar::one()})
      if (v == candidate.scaled(f)) proportional = true;
    CHECK(proportional);
  }
  {
    // A2#4: dim o_u = 5 = d + 2p with p = 2.
    auto alg = make_alg("A2#4");
    auto stem = compute_stem(alg.rs());
    auto frame = stem_frame(alg, stem, ones(1));
    CHECK(frame.o_basis.size() == 5);
  }
  // Frame invariants across several algebras.
  for (const auto& name : {"A4", "C3#3", "G2#2", "B3"}) {
    auto alg = make_alg(name);
    auto stem = compute_stem(alg.rs());
    auto frame = stem_frame(alg, stem, ones(stem.size()));
    CHECK(static_cast<int>(frame.o_basis.size()) == alg.rank() - stem.size());
    for (const auto& h : frame.o_basis) {
      CHECK(alg.tau(h) == h);
      for (int g : stem.gammas) CHECK(alg.eval_root(alg.rs().root(g), h).is_zero());
    }
    for (int k = 0; k < stem.size(); ++k) {
      // tau fixes the su(2) frame.
      CHECK(alg.tau(frame.W[k]) == frame.W[k]);
      CHECK(alg.tau(frame.X[k]) == frame.X[k]);
      CHECK(alg.tau(frame.Y[k]) == frame.Y[k]);
      // [X,Y] = W, [Y,W] = X, [W,X] = Y.
      CHECK(alg.bracket(frame.X[k], frame.Y[k]) == frame.W[k]);
      CHECK(alg.bracket(frame.Y[k], frame.W[k]) == frame.X[k]);
      CHECK(alg.bracket(frame.W[k], frame.X[k]) == frame.Y[k]);
    }
  }
  // Non-unit rho is rejected.
  {
    auto alg = make_alg("A2");
    auto stem = compute_stem(alg.rs());
    CHECK_THROWS_AS(stem_frame(alg, stem, {KScalar(2)}), std::invalid_argument);
    CHECK_THROWS_AS(stem_frame(alg, stem, {}), std::invalid_argument);
  }
}

TEST_CASE("stem frame with nontrivial rho") {
  auto alg = make_alg("A2");
  auto stem = compute_stem(alg.rs());
  auto frame = stem_frame(alg, stem, {KScalar::i()});
  // tau still fixes X and Y, and the su(2) relations persist.
  CHECK(alg.tau(frame.X[0]) == frame.X[0]);
  CHECK(alg.bracket(frame.X[0], frame.Y[0]) == frame.W[0]);
  // Y(rho) = X(i rho).
  auto frame2 = stem_frame(alg, stem, {KScalar::i() * KScalar::i()});
  CHECK(frame.Y[0] == frame2.X[0]);
}

TEST_CASE("heisenberg decomposition") {
  for (const auto& name : {"A1", "C2", "G2", "A4", "F4"}) {
    auto alg = make_alg(name);
    auto stem = compute_stem(alg.rs());
    auto report = heisenberg_check(alg, stem);
    CHECK(report.all_pass());
  }
  {
    // C2: the top component has a two-dimensional branch space.
    auto alg = make_alg("C2");
    auto stem = compute_stem(alg.rs());
    CHECK(stem.branches[0].size() == 2);
    CHECK(stem.branches[1].empty());
  }
  {
    // G2: four-dimensional branch space.
    auto alg = make_alg("G2");
    auto stem = compute_stem(alg.rs());
    CHECK(stem.branches[0].size() == 4);
  }
}

TEST_CASE("element json labels") {
  auto alg = make_alg("A2#2");
  CHECK(alg.label(alg.h_index(0)) == "H1");
  CHECK(alg.label(alg.c_index(1)) == "C2");
  CHECK(alg.parse_label("C2") == alg.c_index(1));
  CHECK(alg.parse_label("E[1,1]") == alg.rs().index_of(Root{{1, 1}}));
  CHECK_THROWS_AS(alg.parse_label("C9"), std::invalid_argument);
  CHECK_THROWS_AS(alg.parse_label("E[5,5]"), std::invalid_argument);
}

TEST_CASE("ad-invariant branch pairs") {
  // span{E_alpha, E_{s_gamma(alpha)}} is invariant under the stem sl2, and
  // sl2's of incomparable stem roots annihilate the branch space.
  for (const auto& name : {"C3", "G2", "B4", "D4"}) {
    auto alg = make_alg(name);
    const auto& rs = alg.rs();
    auto stem = compute_stem(rs);
    for (int k = 0; k < stem.size(); ++k) {
      const int g = stem.gammas[k];
      for (int a : stem.branches[k]) {
        const int s_a = rs.negative_of(stem.mu.at(a));
        for (const Element& x :
             {alg.E(g), alg.E(rs.negative_of(g)), alg.coroot_element(g)}) {
          Element img_a = alg.bracket(x, alg.E(a));
          Element img_s = alg.bracket(x, alg.E(s_a));
          for (const Element* img : {&img_a, &img_s})
            for (const auto& [idx, coeff] : img->coeffs)
              CHECK((idx == a || idx == s_a));
        }
      }
      for (int j = 0; j < stem.size(); ++j) {
        if (j == k) continue;
        const bool comparable = stem.theta_component[k].count(stem.gammas[j]) > 0 ||
                                stem.theta_component[j].count(stem.gammas[k]) > 0;
        if (comparable) continue;
        for (int a : stem.branches[k]) {
          CHECK(alg.bracket(alg.E(stem.gammas[j]), alg.E(a)).is_zero());
          CHECK(alg.bracket(alg.E(rs.negative_of(stem.gammas[j])), alg.E(a)).is_zero());
        }
      }
    }
  }
}
