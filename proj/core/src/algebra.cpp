#include "sopq/algebra.hpp"

namespace sopq {

AlgebraSpec AlgebraSpec::make(int p, int q) {
  if (q < 1 || p < q) {
    throw input_error("so(p,q) requires p >= q >= 1 (got p=" + std::to_string(p) +
                      ", q=" + std::to_string(q) + ")");
  }
  if (p + q <= 4) {
    throw input_error("so(p,q) requires p+q > 4 (got p+q=" + std::to_string(p + q) + ")");
  }
  AlgebraSpec s;
  s.p = p;
  s.q = q;
  s.parity = ((p + q) % 2 != 0) ? Parity::odd : Parity::even;
  s.h = (s.parity == Parity::odd) ? (p + q - 3) / 2 : (p + q - 2) / 2;
  s.rank = s.h + 1;
  return s;
}

std::string AlgebraSpec::name() const {
  return "so(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

}  // namespace sopq
