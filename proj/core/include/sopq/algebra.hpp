#ifndef SOPQ_ALGEBRA_HPP
#define SOPQ_ALGEBRA_HPP

// The noncompact orthogonal algebra so(p,q) with its maximal parabolic
// P = M A N, M = so(p-1,q-1), dim A = 1, dim N = p+q-2.  Everything in the
// library is driven by the parity of p+q and the count h of M weight labels.

#include "sopq/rational.hpp"

#include <string>

namespace sopq {

enum class Parity { odd, even };  // parity of p+q

struct AlgebraSpec {
  int p = 0;
  int q = 0;
  Parity parity = Parity::odd;
  int h = 0;     // number of M = so(p-1,q-1) weight labels
  int rank = 0;  // rank of the complexification so(p+q,C); always h+1

  // Validates p >= q >= 1 and p+q > 4; throws input_error otherwise.
  static AlgebraSpec make(int p, int q);

  int n_total() const { return p + q; }
  int dim_n() const { return p + q - 2; }     // dimension of the abelian factor N
  Rat half_dim_n() const { return frac(p + q - 2, 2); }
  bool odd() const { return parity == Parity::odd; }
  std::string name() const;  // "so(3,2)"
};

}  // namespace sopq

#endif
