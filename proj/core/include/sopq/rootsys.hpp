#ifndef SOPQ_ROOTSYS_HPP
#define SOPQ_ROOTSYS_HPP

// Root system of the complexified algebra so(N,C), N = p+q, in orthogonal
// coordinates: type B_l (N = 2l+1) or D_l (N = 2l).  Simple roots are fixed
// once and for all as
//   alpha_i = e_i - e_{i+1}  (i < l),
//   alpha_l = e_l            (B)   or   alpha_l = e_{l-1} + e_l  (D).
// Roots orthogonal to e_1 are "compact" (they live in the subalgebra M of the
// maximal parabolic); positive roots with an e_1 component are "noncompact"
// and label the intertwining differential operators.

#include "sopq/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace sopq {

// A root in e-coordinates; entries are small integers (0, +-1, +-2 never occurs
// for so(N): roots are +-e_i +- e_j and, for odd N, +-e_i).
struct Root {
  std::vector<int> e;
  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;
};

// A weight in e-coordinates.
using Weight = std::vector<Rat>;

struct RootSystem {
  int N = 0;         // so(N,C)
  int rank = 0;      // l
  bool type_b = false;  // true for N odd
  std::vector<Root> simple;    // alpha_1 .. alpha_l
  std::vector<Root> positive;  // all positive roots in PBW order
                               // (ascending height, lexicographic tie-break)

  // N >= 3; so(3)=B_1 and so(4)=D_2 are allowed for testing purposes.
  static RootSystem make(int N);

  int npos() const { return static_cast<int>(positive.size()); }
  // Index of beta in `positive`, or -1.
  int index_of(const Root& beta) const;
  bool is_positive_root(const Root& beta) const { return index_of(beta) >= 0; }
  bool is_root(const Root& beta) const;
  bool is_compact(const Root& beta) const { return beta.e.at(0) == 0; }
  std::vector<Root> noncompact_positive() const;

  // Expansion of a root over the simple roots (exact; throws verify_error if
  // beta is not in the root lattice span with integer coefficients).
  std::vector<int> simple_coords(const Root& beta) const;
  int height(const Root& beta) const;

  Weight rho() const;  // half-sum of positive roots: rho_i = (N-2i)/2

  static Rat dot(const Weight& a, const Weight& b);
  static Rat dot(const Weight& a, const Root& b);
  static int dot(const Root& a, const Root& b);
  // (w, beta^vee) = 2 (w, beta) / (beta, beta)
  Rat pairing(const Weight& w, const Root& beta) const;
  // Coroot 2 beta/(beta,beta) as coefficients over the Cartan basis
  // h_i = E_ii - E_{N+1-i,N+1-i} (equivalently, e-coordinates of 2b/(b,b)).
  std::vector<Rat> coroot(const Root& beta) const;

  // Weyl dimension formula; `lam_rho` is Lambda+rho in e-coordinates.
  // Throws verify_error if the product is not a positive integer.
  Int weyl_dimension(const Weight& lam_rho) const;
};

Root negated(const Root& r);

// Text form: "e1", "e1-e3", "e1+e2"; negatives as "-e1+e2".
std::string root_str(const Root& r);
// Parses the text form; `rank` fixes the coordinate count.
// Throws input_error on malformed input.
Root root_parse(const std::string& s, int rank);

}  // namespace sopq

#endif
