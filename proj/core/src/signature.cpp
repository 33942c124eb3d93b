#include "sopq/signature.hpp"

#include <algorithm>

namespace sopq {

std::vector<Rat> n_from_m(Parity par, const std::vector<Rat>& m) {
  std::size_t l = m.size();
  if (l < 1 || (par == Parity::even && l < 2))
    throw input_error("n_from_m: too few labels");
  std::vector<Rat> n(l);
  if (par == Parity::odd) {
    n[0] = m[0] / 2;
    for (std::size_t j = 1; j < l; ++j) n[j] = n[j - 1] + m[j];
  } else {
    n[0] = (m[0] - m[1]) / 2;
    n[1] = (m[0] + m[1]) / 2;
    for (std::size_t j = 2; j < l; ++j) n[j] = n[j - 1] + m[j];
  }
  return n;
}

std::vector<Rat> m_from_n(Parity par, const std::vector<Rat>& n) {
  std::size_t l = n.size();
  if (l < 1 || (par == Parity::even && l < 2))
    throw input_error("m_from_n: too few labels");
  std::vector<Rat> m(l);
  if (par == Parity::odd) {
    m[0] = 2 * n[0];
    for (std::size_t j = 1; j < l; ++j) m[j] = n[j] - n[j - 1];
  } else {
    m[0] = n[0] + n[1];
    m[1] = n[1] - n[0];
    for (std::size_t j = 2; j < l; ++j) m[j] = n[j] - n[j - 1];
  }
  return m;
}

bool Signature::strict() const {
  if (nlab.empty()) return false;
  if (parity == Parity::odd) {
    if (eps != 0) return false;
    if (nlab[0] <= 0) return false;
  } else {
    if (eps == 0) return false;
    if (nlab.size() >= 2 && abs(nlab[0]) >= nlab[1]) return false;
  }
  for (std::size_t i = 1; i < nlab.size(); ++i) {
    if (nlab[i - 1] >= nlab[i]) return false;
    if (!is_integer(nlab[i] - nlab[0])) return false;
  }
  if (!is_integer(2 * nlab[0])) return false;
  if (!is_integer(2 * c)) return false;
  return true;
}

Signature conjugated(const Signature& s) {
  Signature t = s;
  if (t.parity == Parity::even && !t.nlab.empty()) t.nlab[0] = -t.nlab[0];
  return t;
}

Rat conformal_weight(const Signature& s, const AlgebraSpec& spec) {
  return s.c + spec.half_dim_n();
}

std::pair<Rat, Rat> d_plus_minus(const Signature& s, const AlgebraSpec& spec) {
  Rat absc = abs(s.c);
  Rat base = spec.odd() ? frac(2 * spec.h + 1, 2) : Rat(spec.h);
  return {base + absc, base - absc};
}

std::vector<Rat> ell_labels(const Signature& s) {
  std::vector<Rat> l(s.nlab.size());
  for (std::size_t k = 0; k < s.nlab.size(); ++k)
    l[k] = s.nlab[k] - Rat(static_cast<int>(k) + 1) + frac(1, 2);
  return l;
}

std::string signature_text(const Signature& s) {
  std::vector<Rat> m = s.mlabels();
  std::string out = "[";
  if (s.parity == Parity::even) {
    out += "(" + join_rat(m, ",") + ")";
    if (s.eps > 0)
      out += "^+";
    else if (s.eps < 0)
      out += "^-";
  } else {
    out += join_rat(m, ",");
  }
  out += " ; " + rat_str(s.c) + "]";
  return out;
}

Signature signature_parse(const std::string& text, Parity par) {
  auto fail = [&]() -> void {
    throw input_error("signature_parse: malformed signature '" + text + "'");
  };
  std::size_t i = 0, n = text.size();
  auto skip_ws = [&]() {
    while (i < n && text[i] == ' ') ++i;
  };
  skip_ws();
  if (i >= n || text[i] != '[') fail();
  ++i;
  skip_ws();
  int eps = 0;
  bool parens = false;
  if (par == Parity::even) {
    if (i >= n || text[i] != '(') fail();
    parens = true;
    ++i;
  }
  std::vector<Rat> m;
  std::string cur;
  auto parse_rat_or_fail = [&](const std::string& s) -> Rat {
    try {
      return rat_parse(s);
    } catch (const input_error&) {
      fail();
      return 0;  // unreachable
    }
  };
  auto flush = [&]() {
    if (cur.empty()) fail();
    m.push_back(parse_rat_or_fail(cur));
    cur.clear();
  };
  while (i < n) {
    char ch = text[i];
    if (ch == ',') {
      flush();
      ++i;
    } else if (ch == ')' && parens) {
      flush();
      ++i;
      parens = false;
      if (i + 1 < n && text[i] == '^' && (text[i + 1] == '+' || text[i + 1] == '-')) {
        eps = text[i + 1] == '+' ? 1 : -1;
        i += 2;
      }
      break;
    } else if ((ch == ';' || ch == ' ') && par == Parity::odd) {
      flush();
      break;
    } else if (ch == ' ') {
      fail();
    } else {
      cur += ch;
      ++i;
    }
  }
  if (parens) fail();
  skip_ws();
  if (i >= n || text[i] != ';') fail();
  ++i;
  skip_ws();
  std::string ctext;
  while (i < n && text[i] != ']' && text[i] != ' ') ctext += text[i++];
  skip_ws();
  if (i >= n || text[i] != ']') fail();
  ++i;
  skip_ws();
  if (i != n) fail();
  if (m.empty()) fail();

  Signature sig;
  sig.parity = par;
  sig.nlab = n_from_m(par, m);
  sig.eps = eps;
  sig.c = parse_rat_or_fail(ctext);
  return sig;
}

Weight weight_from_signature(const Signature& s) {
  Weight w;
  w.reserve(s.nlab.size() + 1);
  w.push_back(-s.c);
  for (auto it = s.nlab.rbegin(); it != s.nlab.rend(); ++it) w.push_back(*it);
  return w;
}

}  // namespace sopq
