#include "sopq/verma.hpp"

#include "sopq/algebra.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <vector>

using namespace sopq;

namespace {

using Combo = std::map<int, Int>;

Combo bracket_combo(const StructureConstants& sc, int a, const Combo& c) {
  Combo out;
  for (const auto& [b, coeff] : c)
    for (const auto& [k, v] : sc.bracket(a, b)) {
      out[k] += coeff * v;
      if (out[k] == 0) out.erase(k);
    }
  return out;
}

bool jacobi_holds(const StructureConstants& sc) {
  const int dim = sc.dim();
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c) {
        Combo bc(sc.bracket(b, c).begin(), sc.bracket(b, c).end());
        Combo ca(sc.bracket(c, a).begin(), sc.bracket(c, a).end());
        Combo ab(sc.bracket(a, b).begin(), sc.bracket(a, b).end());
        Combo total = bracket_combo(sc, a, bc);
        for (const auto& [k, v] : bracket_combo(sc, b, ca)) {
          total[k] += v;
          if (total[k] == 0) total.erase(k);
        }
        for (const auto& [k, v] : bracket_combo(sc, c, ab)) {
          total[k] += v;
          if (total[k] == 0) total.erase(k);
        }
        if (!total.empty()) return false;
      }
  return true;
}

// Independent count of PBW monomials: the number of ways to write the target
// (in simple-root coordinates) as a multiset of positive roots.
long kostant_count(const RootSystem& rs, const std::vector<int>& target) {
  std::vector<std::vector<int>> roots;
  for (const Root& beta : rs.positive) roots.push_back(rs.simple_coords(beta));
  std::function<long(size_t, std::vector<int>)> rec =
      [&](size_t idx, std::vector<int> rem) -> long {
    bool done = true;
    for (int r : rem)
      if (r != 0) done = false;
    if (done) return 1;
    if (idx == roots.size()) return 0;
    long total = 0;
    while (true) {
      total += rec(idx + 1, rem);
      bool ok = true;
      for (size_t i = 0; i < rem.size(); ++i) {
        rem[i] -= roots[idx][i];
        if (rem[i] < 0) ok = false;
      }
      if (!ok) break;
    }
    return total;
  };
  return rec(0, target);
}

using Mat = std::vector<std::vector<Rat>>;

Mat matmul(const Mat& a, const Mat& b, size_t rows, size_t mid, size_t cols) {
  Mat out(rows, std::vector<Rat>(cols, Rat(0)));
  if (a.empty() || b.empty()) return out;
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < mid; ++k)
      for (size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

std::vector<std::vector<int>> depth_vectors(int rank, int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(rank, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == rank) {
      out.push_back(v);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      v[pos] = k;
      rec(pos + 1, left - k);
    }
    v[pos] = 0;
  };
  rec(0, max_total);
  return out;
}

PBWElement scalar_element(const StructureConstants& sc, const Rat& value) {
  if (value == 0) return {};
  PBWElement el;
  el.terms.push_back({std::vector<int>(sc.npos(), 0), value});
  return el;
}

}  // namespace

TEST_SUITE_BEGIN("verma");

TEST_CASE("Jacobi identity on all basis triples") {
  CHECK(jacobi_holds(structure_constants(5)));
  CHECK(jacobi_holds(structure_constants(6)));
}

TEST_CASE("bracket table matches the defining matrices") {
  for (int N : {5, 6}) {
    CAPTURE(N);
    StructureConstants sc(N);
    const int dim = sc.dim();
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        // Matrix commutator of the defining representation.
        std::vector<std::vector<Int>> comm(N, std::vector<Int>(N, 0));
        const auto& ma = sc.matrix_of(a);
        const auto& mb = sc.matrix_of(b);
        for (int i = 0; i < N; ++i)
          for (int k = 0; k < N; ++k) {
            if (ma[i][k] != 0)
              for (int j = 0; j < N; ++j) comm[i][j] += ma[i][k] * mb[k][j];
            if (mb[i][k] != 0)
              for (int j = 0; j < N; ++j) comm[i][j] -= mb[i][k] * ma[k][j];
          }
        for (const auto& [k, v] : sc.bracket(a, b)) {
          const auto& mk = sc.matrix_of(k);
          for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) comm[i][j] -= v * mk[i][j];
        }
        bool zero = true;
        for (int i = 0; i < N && zero; ++i)
          for (int j = 0; j < N && zero; ++j) zero = comm[i][j] == 0;
        CHECK(zero);
      }
  }
}

TEST_CASE("Cartan pairing of root vectors") {
  for (int N : {5, 6, 7}) {
    CAPTURE(N);
    StructureConstants sc(N);
    const RootSystem& rs = sc.roots();
    for (int r = 0; r < rs.npos(); ++r) {
      const Root& beta = rs.positive[r];
      // [E_beta, F_beta] is the exact coroot.
      std::vector<Rat> cor = rs.coroot(beta);
      Combo hb;
      for (const auto& [k, v] : sc.bracket(sc.e_index(r), sc.f_index(r))) hb[k] = v;
      for (int i = 0; i < rs.rank; ++i) {
        Int expected(cor[i].get_num());
        REQUIRE(cor[i].get_den() == 1);
        auto it = hb.find(sc.h_index(i));
        Int got = it == hb.end() ? Int(0) : it->second;
        CHECK(got == expected);
        hb.erase(sc.h_index(i));
      }
      CHECK(hb.empty());
      // [H_i, E_beta] = beta_i E_beta (the e-coordinate grading).
      for (int i = 0; i < rs.rank; ++i) {
        const auto& br = sc.bracket(sc.h_index(i), sc.e_index(r));
        if (beta.e[i] == 0) {
          CHECK(br.empty());
        } else {
          REQUIRE(br.size() == 1);
          CHECK(br[0].first == sc.e_index(r));
          CHECK(br[0].second == beta.e[i]);
        }
      }
    }
  }
}

TEST_CASE("slice dimensions equal Kostant partition counts") {
  struct Case {
    int N;
    int max_depth;
  };
  for (Case cs : {Case{5, 4}, Case{6, 3}, Case{7, 3}}) {
    CAPTURE(cs.N);
    StructureConstants sc(cs.N);
    const RootSystem& rs = sc.roots();
    Weight lambda(rs.rank, frac(1, 3));  // generic; the basis ignores lambda
    VermaModule vm(sc, lambda);
    for (const auto& depth : depth_vectors(rs.rank, cs.max_depth)) {
      CAPTURE(depth[0]);
      CHECK(static_cast<long>(vm.slice(depth).basis.size()) ==
            kostant_count(rs, depth));
    }
  }
}

TEST_CASE("canonical commutation relations on slices") {
  StructureConstants sc(5);
  const RootSystem& rs = sc.roots();
  Weight lambda = {frac(7, 3), frac(4, 5)};
  VermaModule vm(sc, lambda);
  for (const auto& depth : depth_vectors(rs.rank, 3)) {
    const VermaSlice& sl = vm.slice(depth);
    const size_t dim = sl.basis.size();
    // Weight of the slice: lambda minus the depth in e-coordinates.
    Weight wt = lambda;
    for (int i = 0; i < rs.rank; ++i)
      for (int c = 0; c < rs.rank; ++c) wt[c] -= depth[i] * rs.simple[i].e[c];
    for (int i = 0; i < rs.rank; ++i) {
      CAPTURE(i);
      // e_i f_i - f_i e_i = (wt, alpha_i^vee) on the whole slice.
      std::vector<int> up = depth;
      up[i] += 1;
      const VermaSlice& upper = vm.slice(up);
      Mat ef = matmul(upper.raising[i], vm.lowering_matrix(i, depth), dim,
                      upper.basis.size(), dim);
      Mat fe(dim, std::vector<Rat>(dim, Rat(0)));
      if (depth[i] > 0) {
        std::vector<int> down = depth;
        down[i] -= 1;
        const VermaSlice& lower = vm.slice(down);
        fe = matmul(vm.lowering_matrix(i, down), sl.raising[i], dim,
                    lower.basis.size(), dim);
      }
      Rat scalar = rs.pairing(wt, rs.simple[i]);
      for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c)
          CHECK(ef[r][c] - fe[r][c] == (r == c ? scalar : Rat(0)));
    }
  }
}

TEST_CASE("straightening identities") {
  StructureConstants sc(5);
  const RootSystem& rs = sc.roots();
  Weight lambda = {frac(5, 7), frac(2, 3)};
  VermaModule vm(sc, lambda);
  for (int i = 0; i < rs.rank; ++i) {
    // e_i v_0 = 0 and h_i v_0 = lambda(h_i) v_0.
    CHECK(vm.straighten({GenRef::e(rs.index_of(rs.simple[i]))}).is_zero());
    // e_i f_i v_0 = (lambda, alpha_i^vee) v_0.
    int ri = rs.index_of(rs.simple[i]);
    PBWElement got = vm.straighten({GenRef::e(ri), GenRef::f(ri)});
    CHECK(got == scalar_element(sc, rs.pairing(lambda, rs.simple[i])));
    for (int j = 0; j < rs.rank; ++j) {
      if (i == j) continue;
      // Different simple raising/lowering generators commute past each other.
      int rj = rs.index_of(rs.simple[j]);
      CHECK(vm.straighten({GenRef::e(ri), GenRef::f(rj)}).is_zero());
    }
  }
  // Applying a lowering generator twice in either mixed order agrees with the
  // straightened words.
  int r1 = rs.index_of(rs.simple[0]);
  int r2 = rs.index_of(rs.simple[1]);
  PBWElement a = vm.straighten({GenRef::f(r1), GenRef::f(r2)});
  PBWElement b = vm.straighten({GenRef::f(r2), GenRef::f(r1)});
  CHECK_FALSE(a.is_zero());
  CHECK_FALSE(b.is_zero());
  // f_1 f_2 - f_2 f_1 = [f_1, f_2] is the (nonzero) composite lowering vector.
  PBWElement diff = a;
  PBWElement neg = b;
  neg *= Rat(-1);
  diff += neg;
  CHECK_FALSE(diff.is_zero());
  REQUIRE(diff.terms.size() == 1);
  // The composite sits at depth alpha_1 + alpha_2, a single PBW generator.
  int composite = rs.index_of(Root{{1, 0}});
  if (composite < 0) composite = rs.index_of(Root{{0, 1}});
  int nonzero_positions = 0;
  for (int e : diff.terms[0].powers) nonzero_positions += e != 0 ? 1 : 0;
  CHECK(nonzero_positions == 1);
}

TEST_CASE("singular vectors at simple reducibility points") {
  StructureConstants sc(5);
  const RootSystem& rs = sc.roots();
  Root alpha1{{1, -1}};
  Root alpha2{{0, 1}};

  SUBCASE("long simple root, m = 1") {
    // (lambda+rho, alpha_1^vee) = 1 with everything else generic.
    Weight lam_rho = {frac(1, 3), frac(-2, 3)};
    Weight lambda = {lam_rho[0] - frac(3, 2), lam_rho[1] - frac(1, 2)};
    VermaModule vm(sc, lambda);
    auto sv = vm.solve_singular(alpha1, 1);
    REQUIRE(sv.size() == 1);
    // The singular vector is f_{alpha_1} v_0 itself.
    REQUIRE(sv[0].terms.size() == 1);
    CHECK(sv[0].terms[0].powers[rs.index_of(alpha1)] == 1);
    for (int i = 0; i < rs.rank; ++i)
      CHECK(vm.apply(GenRef::e(rs.index_of(rs.simple[i])), sv[0]).is_zero());
  }

  SUBCASE("long simple root, m = 2") {
    Weight lam_rho = {frac(1, 3), frac(1, 3) - 2};
    Weight lambda = {lam_rho[0] - frac(3, 2), lam_rho[1] - frac(1, 2)};
    VermaModule vm(sc, lambda);
    auto sv = vm.solve_singular(alpha1, 2);
    REQUIRE(sv.size() == 1);
    REQUIRE(sv[0].terms.size() == 1);
    CHECK(sv[0].terms[0].powers[rs.index_of(alpha1)] == 2);
  }

  SUBCASE("short simple root, m = 1") {
    // (lambda+rho, alpha_2^vee) = 2 lam_rho_2 = 1.
    Weight lam_rho = {frac(22, 7), frac(1, 2)};
    Weight lambda = {lam_rho[0] - frac(3, 2), lam_rho[1] - frac(1, 2)};
    VermaModule vm(sc, lambda);
    auto sv = vm.solve_singular(alpha2, 1);
    REQUIRE(sv.size() == 1);
    for (int i = 0; i < rs.rank; ++i)
      CHECK(vm.apply(GenRef::e(rs.index_of(rs.simple[i])), sv[0]).is_zero());
  }

  SUBCASE("off the reducibility locus") {
    Weight lam_rho = {frac(22, 7), frac(1, 5)};
    Weight lambda = {lam_rho[0] - frac(3, 2), lam_rho[1] - frac(1, 2)};
    VermaModule vm(sc, lambda);
    CHECK_THROWS_AS(vm.solve_singular(alpha1, 1), input_error);
    CHECK(vm.singular_space(alpha1, 1).empty());
    CHECK(vm.singular_space(alpha2, 2).empty());
  }
}

TEST_CASE("rational kernel is exact and deterministic") {
  SUBCASE("one relation") {
    auto basis = rational_kernel({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, 2);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Rat>{Rat(-2), Rat(1)});
  }
  SUBCASE("full rank") {
    CHECK(rational_kernel({{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2).empty());
  }
  SUBCASE("zero matrix") {
    auto basis = rational_kernel({{Rat(0), Rat(0), Rat(0)}}, 3);
    REQUIRE(basis.size() == 3);
    CHECK(basis[0] == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
    CHECK(basis[1] == std::vector<Rat>{Rat(0), Rat(1), Rat(0)});
    CHECK(basis[2] == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
  }
  SUBCASE("fractional entries") {
    // x + y/2 - z/3 = 0, y + 6z = 0.
    auto basis = rational_kernel(
        {{Rat(1), frac(1, 2), frac(-1, 3)}, {Rat(0), Rat(1), Rat(6)}}, 3);
    REQUIRE(basis.size() == 1);
    // Free variable z = 1: y = -6, x = 1/3 - y/2 = 10/3.
    CHECK(basis[0] == std::vector<Rat>{frac(10, 3), Rat(-6), Rat(1)});
  }
  SUBCASE("no rows") {
    auto basis = rational_kernel({}, 2);
    REQUIRE(basis.size() == 2);
  }
}

TEST_SUITE_END();
