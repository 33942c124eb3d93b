#include "sopq/rootsys.hpp"

#include "sopq/algebra.hpp"

#include <doctest.h>

#include <set>

using namespace sopq;

TEST_SUITE_BEGIN("rootsys");

TEST_CASE("positive root counts for B and D") {
  // B_l has l^2 positive roots, D_l has l(l-1).
  CHECK(RootSystem::make(5).npos() == 4);
  CHECK(RootSystem::make(7).npos() == 9);
  CHECK(RootSystem::make(9).npos() == 16);
  CHECK(RootSystem::make(6).npos() == 6);
  CHECK(RootSystem::make(8).npos() == 12);
  CHECK(RootSystem::make(10).npos() == 20);
}

TEST_CASE("simple roots match the fixed enumeration") {
  RootSystem b3 = RootSystem::make(7);
  REQUIRE(b3.rank == 3);
  CHECK(b3.type_b);
  CHECK(b3.simple[0] == Root{{1, -1, 0}});
  CHECK(b3.simple[1] == Root{{0, 1, -1}});
  CHECK(b3.simple[2] == Root{{0, 0, 1}});

  RootSystem d3 = RootSystem::make(6);
  REQUIRE(d3.rank == 3);
  CHECK_FALSE(d3.type_b);
  CHECK(d3.simple[0] == Root{{1, -1, 0}});
  CHECK(d3.simple[1] == Root{{0, 1, -1}});
  CHECK(d3.simple[2] == Root{{0, 1, 1}});
}

TEST_CASE("positive roots are sorted by ascending height") {
  for (int N : {5, 6, 7, 8, 9, 10}) {
    CAPTURE(N);
    RootSystem rs = RootSystem::make(N);
    std::set<Root> seen;
    int prev_height = 0;
    for (const Root& beta : rs.positive) {
      int ht = rs.height(beta);
      CHECK(ht >= prev_height);
      prev_height = ht;
      CHECK(seen.insert(beta).second);  // no duplicates
    }
    // Heights start at 1 (the simple roots come first).
    CHECK(rs.height(rs.positive.front()) == 1);
  }
}

TEST_CASE("noncompact positive roots number p+q-2") {
  for (int n = 5; n <= 12; ++n) {
    CAPTURE(n);
    RootSystem rs = RootSystem::make(n);
    CHECK(static_cast<int>(rs.noncompact_positive().size()) == n - 2);
    for (const Root& beta : rs.noncompact_positive()) {
      CHECK(beta.e.at(0) == 1);
      CHECK_FALSE(rs.is_compact(beta));
    }
  }
}

TEST_CASE("rho is (N-2i)/2") {
  RootSystem b2 = RootSystem::make(5);
  CHECK(b2.rho() == Weight{frac(3, 2), frac(1, 2)});
  RootSystem d3 = RootSystem::make(6);
  CHECK(d3.rho() == Weight{Rat(2), Rat(1), Rat(0)});
  RootSystem b3 = RootSystem::make(7);
  CHECK(b3.rho() == Weight{frac(5, 2), frac(3, 2), frac(1, 2)});
  // rho is characterized by (rho, alpha_i^vee) = 1.
  for (int N : {5, 6, 7, 8, 9}) {
    RootSystem rs = RootSystem::make(N);
    for (const Root& alpha : rs.simple) CHECK(rs.pairing(rs.rho(), alpha) == 1);
  }
}

TEST_CASE("pairing reproduces the Cartan matrix") {
  // B_3 Cartan matrix rows (a_ij = (alpha_i, alpha_j^vee)).
  RootSystem b3 = RootSystem::make(7);
  int expected_b3[3][3] = {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Weight wi(b3.simple[i].e.begin(), b3.simple[i].e.end());
      CHECK(b3.pairing(wi, b3.simple[j]) == expected_b3[i][j]);
    }
  RootSystem d3 = RootSystem::make(6);
  int expected_d3[3][3] = {{2, -1, -1}, {-1, 2, 0}, {-1, 0, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Weight wi(d3.simple[i].e.begin(), d3.simple[i].e.end());
      CHECK(d3.pairing(wi, d3.simple[j]) == expected_d3[i][j]);
    }
}

TEST_CASE("coroot doubles short roots only") {
  RootSystem b2 = RootSystem::make(5);
  CHECK(b2.coroot(Root{{1, -1}}) == std::vector<Rat>{Rat(1), Rat(-1)});
  CHECK(b2.coroot(Root{{0, 1}}) == std::vector<Rat>{Rat(0), Rat(2)});
  CHECK(b2.coroot(Root{{1, 0}}) == std::vector<Rat>{Rat(2), Rat(0)});
  CHECK(b2.coroot(Root{{1, 1}}) == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("simple_coords expands each positive root exactly") {
  for (int N : {5, 6, 7, 8, 9, 10, 11}) {
    CAPTURE(N);
    RootSystem rs = RootSystem::make(N);
    for (const Root& beta : rs.positive) {
      std::vector<int> coords = rs.simple_coords(beta);
      REQUIRE(static_cast<int>(coords.size()) == rs.rank);
      std::vector<int> rebuilt(beta.e.size(), 0);
      int height = 0;
      for (int i = 0; i < rs.rank; ++i) {
        CHECK(coords[i] >= 0);
        height += coords[i];
        for (size_t c = 0; c < rebuilt.size(); ++c)
          rebuilt[c] += coords[i] * rs.simple[i].e[c];
      }
      CHECK(rebuilt == beta.e);
      CHECK(height == rs.height(beta));
    }
  }
  // Lattice vectors that are not roots still expand when the coefficients
  // are integers; only a genuinely non-integral expansion throws.
  RootSystem b2 = RootSystem::make(5);
  CHECK(b2.simple_coords(Root{{1, 2}}) == std::vector<int>{1, 3});
  RootSystem d3 = RootSystem::make(6);
  // e3 = (alpha_3 - alpha_2)/2 needs half-integer coefficients.
  CHECK_THROWS_AS(d3.simple_coords(Root{{0, 0, 1}}), verify_error);
}

TEST_CASE("root text round trip") {
  RootSystem b3 = RootSystem::make(7);
  for (const Root& beta : b3.positive) {
    CHECK(root_parse(root_str(beta), b3.rank) == beta);
    CHECK(root_parse(root_str(negated(beta)), b3.rank) == negated(beta));
  }
  CHECK(root_str(Root{{1, 0, -1}}) == "e1-e3");
  CHECK(root_str(Root{{1, 1, 0}}) == "e1+e2");
  CHECK(root_str(Root{{1, 0, 0}}) == "e1");
  CHECK(root_str(Root{{-1, 1, 0}}) == "-e1+e2");
  CHECK_THROWS_AS(root_parse("e9", 3), input_error);
  CHECK_THROWS_AS(root_parse("", 3), input_error);
  CHECK_THROWS_AS(root_parse("e1*e2", 3), input_error);
}

TEST_CASE("Weyl dimension of small representations") {
  RootSystem b2 = RootSystem::make(5);
  // Trivial representation: Lambda = 0, so Lambda+rho = rho.
  CHECK(b2.weyl_dimension(b2.rho()) == 1);
  // Vector (Lambda = e1) and adjoint (Lambda = e1+e2) of so(5).
  CHECK(b2.weyl_dimension(Weight{frac(5, 2), frac(1, 2)}) == 5);
  CHECK(b2.weyl_dimension(Weight{frac(5, 2), frac(3, 2)}) == 10);
  // Spinor of so(5): Lambda = (1/2,1/2).
  CHECK(b2.weyl_dimension(Weight{Rat(2), Rat(1)}) == 4);
  // Vector of so(6) and so(7); spinor of so(7).
  RootSystem d3 = RootSystem::make(6);
  CHECK(d3.weyl_dimension(Weight{Rat(3), Rat(1), Rat(0)}) == 6);
  RootSystem b3 = RootSystem::make(7);
  CHECK(b3.weyl_dimension(Weight{frac(7, 2), frac(3, 2), frac(1, 2)}) == 7);
  CHECK(b3.weyl_dimension(Weight{Rat(3), Rat(2), Rat(1)}) == 8);
  // Singular Lambda+rho (orthogonal to a root) is rejected.
  CHECK_THROWS_AS(b2.weyl_dimension(Weight{frac(3, 2), frac(3, 2)}), verify_error);
}

TEST_SUITE_END();
