#ifndef SOPQ_SIGNATURE_HPP
#define SOPQ_SIGNATURE_HPP

// Signatures of the induced representations: an irreducible representation of
// M = so(p-1,q-1) given by its weight labels, together with the rational
// conformal parameter c and (for even p+q) the mirror marker eps.  M-weights
// are kept internally in the "n-form" (partial-sum coordinates, ascending; for
// even p+q the first entry may be negative, which encodes the conjugated
// mirror of the underlying M-weight).  Displayed labels are the Dynkin-style
// "m-form".
//
// Conversions (l = number of labels):
//   odd:  n_1 = m_1/2,         n_j = n_{j-1} + m_j   (j >= 2)
//   even: n_1 = (m_1 - m_2)/2, n_2 = (m_1 + m_2)/2,  n_j = n_{j-1} + m_j  (j >= 3)
// and inversely
//   odd:  m_1 = 2 n_1,      m_j = n_j - n_{j-1}
//   even: m_1 = n_1 + n_2,  m_2 = n_2 - n_1,  m_j = n_j - n_{j-1}.
// The same maps serve the full so(p+q) weight (h+1 labels) and the M-weight
// (h labels), since p+q and p+q-2 have the same parity.

#include "sopq/algebra.hpp"
#include "sopq/rational.hpp"
#include "sopq/rootsys.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sopq {

std::vector<Rat> n_from_m(Parity par, const std::vector<Rat>& m);
std::vector<Rat> m_from_n(Parity par, const std::vector<Rat>& n);

struct Signature {
  Parity parity = Parity::odd;
  std::vector<Rat> nlab;  // M-weight in n-form (see above)
  int eps = 0;            // even parity: +1 / -1 branch marker; 0 = self-conjugate or odd
  Rat c = 0;

  bool operator==(const Signature&) const = default;

  std::vector<Rat> mlabels() const { return m_from_n(parity, nlab); }

  // True when the strict generic-position invariants hold:
  // odd:  0 < n_1 < n_2 < ... and eps = 0;
  // even: |n_1| < n_2 < ...   and eps = +-1;
  // plus: all n_i in Z/2 with n_i - n_1 in Z, and 2c in Z.
  bool strict() const;
};

// Mirror conjugation of the M-labels (even parity: negate the first n-label,
// i.e. swap the first two Dynkin labels; odd parity: identity).  Acts on the
// labels only; c and eps are untouched.  An involution.
Signature conjugated(const Signature& s);

// d = c + (p+q-2)/2, the conformal weight.
Rat conformal_weight(const Signature& s, const AlgebraSpec& spec);

// The pair (d^+, d^-) of extremal conformal weights attached to |c|:
// odd: h + 1/2 +- |c|; even: h +- |c|.  d^+ + d^- is 2h+1 resp. 2h.
std::pair<Rat, Rat> d_plus_minus(const Signature& s, const AlgebraSpec& spec);

// l_k = n_k - k + 1/2; non-decreasing for strict odd signatures.
std::vector<Rat> ell_labels(const Signature& s);

// Canonical text:
//   odd:              "[m1,m2 ; c]"
//   even, eps = +-1:  "[(m1,m2)^+ ; c]" / "[(m1,m2)^- ; c]"
//   even, eps = 0:    "[(m1,m2) ; c]"    (self-conjugate)
std::string signature_text(const Signature& s);

// Inverse of signature_text; throws input_error on malformed text.
Signature signature_parse(const std::string& text, Parity par);

// The shifted so(p+q,C) highest weight Lambda+rho in e-coordinates:
// (-c, n_h, ..., n_1).  This is the convention under which every arrow of
// every multiplet satisfies the Bernstein-Gelfand-Gelfand pairing condition.
Weight weight_from_signature(const Signature& s);

}  // namespace sopq

#endif
