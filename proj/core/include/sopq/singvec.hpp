#ifndef SOPQ_SINGVEC_HPP
#define SOPQ_SINGVEC_HPP

// Closed-form singular vectors for the noncompact roots that decompose along
// a single Dynkin path: the A-chain formula (nested commutator pattern with
// binomial-times-Cartan-ratio coefficients) and its doubled-end variant for
// e_1+e_l in the odd algebras.  Every closed form is checked against the
// exact Verma engine by verify_singular.

#include "sopq/algebra.hpp"
#include "sopq/rational.hpp"
#include "sopq/rootsys.hpp"
#include "sopq/verma.hpp"

#include <string>
#include <vector>

namespace sopq {

// Raised when a closed-form coefficient has a vanishing denominator
// (lambda+rho)(H^s) - k = 0 at the given weight; the formula is declared
// inapplicable and the caller should fall back to the Verma kernel solver.
struct formula_inapplicable : input_error {
  using input_error::input_error;
};

enum class ChainKind { a_chain, doubled_end };

// A noncompact positive root written as an ordered path of simple roots
// (0-based indices).  For doubled_end the last index enters with
// multiplicity 2: root = alpha_{i_1} + ... + alpha_{i_{L-1}} + 2 alpha_{i_L}.
struct ChainDecomposition {
  Root root;
  ChainKind kind = ChainKind::a_chain;
  std::vector<int> indices;
};

// Decomposes a noncompact positive root along the simple-root path that
// supports a closed-form singular vector:
//   e_1 - e_j           -> A-chain alpha_1 .. alpha_{j-1}      (both parities)
//   e_1                 -> A-chain alpha_1 .. alpha_l, short end    (odd only)
//   e_1 + e_l   (odd)   -> doubled end alpha_1 .. alpha_{l-1} + 2 alpha_l
//   e_1 + e_l   (even)  -> A-chain alpha_1 .. alpha_{l-2}, alpha_l
// Other noncompact roots (e_1 + e_j, 1 < j < l) have no single-path
// decomposition; they raise input_error and are served by the Verma kernel
// solver only.
ChainDecomposition chain_decomposition(const AlgebraSpec& spec, const Root& beta);

// A noncommutative polynomial in the simple lowering generators: each term
// is an exact rational coefficient and a word of 0-based simple-root
// indices (leftmost factor first; the rightmost acts on v_0 first).
struct NCTerm {
  Rat coeff;
  std::vector<int> word;
};

struct NCPolynomial {
  std::vector<NCTerm> terms;

  bool is_zero() const { return terms.empty(); }
};

// Text form `c * f1.f2.f1^2 + ...`: exact rational coefficients, 1-based
// generator indices, caret powers for repeated factors.
std::string nc_text(const NCPolynomial& poly);

// The closed-form singular vector of weight lambda - m*chain.root in the
// Verma module of highest weight lambda (unshifted; rho is added
// internally).  A-chain: sum over k_1..k_{L-1} in [0,m] of
//   (-1)^{sum k} prod C(m,k_s) prod [(l+r)(H^s)]/[(l+r)(H^s)-k_s]
//     X_1^{m-k_1}..X_{L-1}^{m-k_{L-1}} X_L^m X_{L-1}^{k_{L-1}}..X_1^{k_1},
// H^s the sum of the coroots of the first s chain roots; the k=0 coefficient
// is normalized to 1.  Doubled end: the last sum runs to 2m with C(2m,k),
// the doubled generator wraps around X_{L-1}^m, and the last Cartan ratio
// uses the doubled root's own coroot.
// Throws input_error when (lambda+rho, root^vee) != m and
// formula_inapplicable when a coefficient denominator vanishes.
NCPolynomial singular_vector_closed_form(const RootSystem& rs,
                                         const ChainDecomposition& chain, int m,
                                         const Weight& lambda);

// Straightens poly in the given Verma module and applies every simple
// raising operator.  verified = all images vanish exactly; otherwise
// residual holds the first nonzero image.  vector is the straightened PBW
// form (for subspace comparison against the kernel solver).
struct SingularCheck {
  bool verified = false;
  PBWElement vector;
  PBWElement residual;
};

SingularCheck verify_singular(const VermaModule& vm, const NCPolynomial& poly);

}  // namespace sopq

#endif
