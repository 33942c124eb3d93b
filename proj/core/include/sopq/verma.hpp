#ifndef SOPQ_VERMA_HPP
#define SOPQ_VERMA_HPP

// Exact brute-force Verma-module engine for so(N,C): structure constants from
// the defining matrix realization (split form, antisymmetric with respect to
// the antidiagonal), PBW straightening over the highest-weight vector, weight
// slices with raising matrices, and an exact kernel solver for singular
// vectors.  This is the independent oracle against which the closed-form
// singular vectors are checked; everything is exact rational arithmetic.

#include "sopq/rational.hpp"
#include "sopq/rootsys.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace sopq {

// One basis generator: a root vector E_beta / F_beta (index into the positive
// roots of the root system, PBW order) or a Cartan element H_i (0-based).
struct GenRef {
  enum class Kind { raise, lower, cartan };
  Kind kind = Kind::lower;
  int index = 0;

  static GenRef e(int root_index) { return {Kind::raise, root_index}; }
  static GenRef f(int root_index) { return {Kind::lower, root_index}; }
  static GenRef h(int cartan_index) { return {Kind::cartan, cartan_index}; }
};

// Chevalley basis of so(N,C) built from G_ij = e_ij - e_{N+1-j,N+1-i}:
//   E_{e_a-e_b} = G_ab, E_{e_a+e_b} = G_{a,N+1-b}, and (odd N, with the
// quadratic form weighted by 2 on the center coordinate) the short-root
// vectors E_{e_a} = 2e_{a,c} - e_{c,a'}, F_{e_a} = e_{c,a} - 2e_{a',c}.
// [E_beta, F_beta] is the exact coroot of beta, and all brackets are
// precomputed with integer coefficients.
class StructureConstants {
 public:
  explicit StructureConstants(int N);

  const RootSystem& roots() const { return rs_; }
  int N() const { return n_; }
  int dim() const { return static_cast<int>(matrices_.size()); }
  int npos() const { return rs_.npos(); }
  int rank() const { return rs_.rank; }

  // Basis layout: [0, npos) = E_beta, [npos, 2 npos) = F_beta,
  // [2 npos, 2 npos + rank) = H_i.
  int e_index(int root_index) const { return root_index; }
  int f_index(int root_index) const { return npos() + root_index; }
  int h_index(int cartan_index) const { return 2 * npos() + cartan_index; }
  int basis_index(const GenRef& g) const;

  // [basis a, basis b] as a sparse integer combination of basis elements.
  const std::vector<std::pair<int, Int>>& bracket(int a, int b) const;

  // The defining N x N matrix of a basis element (integer entries).
  const std::vector<std::vector<Int>>& matrix_of(int basis_index) const {
    return matrices_.at(basis_index);
  }

 private:
  int n_ = 0;
  RootSystem rs_;
  std::vector<std::vector<std::vector<Int>>> matrices_;
  std::vector<std::vector<std::vector<std::pair<int, Int>>>> table_;
};

// A canonical-form element of U(g_-) v_0: each term is an exponent vector
// over the negative root vectors in PBW order (ascending root height,
// lexicographic tie-break) with an exact rational coefficient.
struct PBWTerm {
  std::vector<int> powers;
  Rat coeff;
};

struct PBWElement {
  std::vector<PBWTerm> terms;  // sorted by powers, zero coefficients pruned

  bool is_zero() const { return terms.empty(); }
  PBWElement& operator+=(const PBWElement& other);
  PBWElement& operator*=(const Rat& scalar);
  bool operator==(const PBWElement& other) const;
};

std::string pbw_text(const PBWElement& el, const RootSystem& rs);

// One weight slice of the Verma module: all PBW monomials of depth
// sum_i depth[i] * alpha_i below the highest weight, together with the
// matrices of the simple raising operators into the neighbouring slices.
struct VermaSlice {
  std::vector<int> depth;  // over the simple roots
  std::vector<std::vector<int>> basis;
  // raising[i]: matrix of e_{alpha_i}: this slice -> slice(depth - alpha_i),
  // rows indexed by the target slice basis (no rows when the target is empty
  // or out of the cone).
  std::vector<std::vector<std::vector<Rat>>> raising;
};

class VermaModule {
 public:
  // lambda is the highest weight in e-coordinates (not shifted by rho).
  VermaModule(const StructureConstants& sc, Weight lambda);

  const StructureConstants& constants() const { return sc_; }
  const Weight& highest_weight() const { return lambda_; }

  // word, read left to right, is a product applied to v_0 (the rightmost
  // factor acts first).  Raising generators annihilate v_0 after
  // normal-ordering; Cartan generators evaluate to weight scalars.
  PBWElement straighten(const std::vector<GenRef>& word) const;

  // Left-multiplication by a single generator, keeping canonical form.
  PBWElement apply(const GenRef& g, const PBWElement& el) const;

  // Memoized slice access; depth must be componentwise nonnegative.
  const VermaSlice& slice(const std::vector<int>& depth) const;

  // Matrix of f_{alpha_i}: slice(depth) -> slice(depth + alpha_i)
  // (for the canonical commutation-relation cross-checks).
  std::vector<std::vector<Rat>> lowering_matrix(int i, const std::vector<int>& depth) const;

  // Basis of the joint kernel of all simple raising operators on the slice
  // of depth m*beta.  solve_singular first checks the Verma reducibility
  // condition (lambda + rho, beta^vee) = m and throws input_error quoting the
  // offending pairing when it fails; singular_space runs the same kernel
  // computation unconditionally (negative controls).
  std::vector<PBWElement> solve_singular(const Root& beta, int m) const;
  std::vector<PBWElement> singular_space(const Root& beta, int m) const;

 private:
  PBWElement act_f(int root_index, const PBWElement& el) const;
  PBWElement act_e(int root_index, const PBWElement& el) const;
  PBWElement act_h(int cartan_index, const PBWElement& el) const;

  const StructureConstants& sc_;
  Weight lambda_;
  mutable std::map<std::vector<int>, VermaSlice> slices_;
  mutable std::mutex slices_mutex_;
};

// Exact null-space basis of a rational matrix (rows x cols), computed by
// fraction-free (Bareiss) elimination over the integers after clearing
// denominators.  Returns vectors of length cols; deterministic: free
// variables in ascending column order, unit at the free position.
std::vector<std::vector<Rat>> rational_kernel(const std::vector<std::vector<Rat>>& rows,
                                              int cols);

StructureConstants structure_constants(int Ncomplex);  // Ncomplex >= 5

}  // namespace sopq

#endif
