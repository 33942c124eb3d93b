#include "sopq/singvec.hpp"

#include <algorithm>
#include <map>

namespace sopq {

ChainDecomposition chain_decomposition(const AlgebraSpec& spec, const Root& beta) {
  const RootSystem rs = RootSystem::make(spec.n_total());
  if (!rs.is_positive_root(beta))
    throw input_error("not a positive root: " + root_str(beta));
  if (rs.is_compact(beta))
    throw input_error("compact root has no noncompact chain: " + root_str(beta));
  const int l = rs.rank;

  ChainDecomposition chain;
  chain.root = beta;

  int second = 0;  // 1-based position of the second nonzero coordinate
  for (int i = 1; i < l; ++i)
    if (beta.e[i] != 0) second = i + 1;

  if (second == 0) {
    // e_1 (odd parity): alpha_1 + ... + alpha_l, short end.
    for (int i = 0; i < l; ++i) chain.indices.push_back(i);
  } else if (beta.e[second - 1] < 0) {
    // e_1 - e_j: alpha_1 + ... + alpha_{j-1}.
    for (int i = 0; i < second - 1; ++i) chain.indices.push_back(i);
  } else if (second == l && spec.odd()) {
    // e_1 + e_l, odd: alpha_1 + ... + alpha_{l-1} + 2 alpha_l.
    chain.kind = ChainKind::doubled_end;
    for (int i = 0; i < l; ++i) chain.indices.push_back(i);
  } else if (second == l) {
    // e_1 + e_l, even: alpha_1 + ... + alpha_{l-2} + alpha_l.
    for (int i = 0; i < l - 2; ++i) chain.indices.push_back(i);
    chain.indices.push_back(l - 1);
  } else {
    throw input_error("no single-path chain decomposition for " + root_str(beta) +
                      "; use the Verma kernel solver");
  }

  // Validate by coordinate expansion.
  std::vector<int> sum(l, 0);
  for (std::size_t s = 0; s < chain.indices.size(); ++s) {
    const int mult =
        (chain.kind == ChainKind::doubled_end && s + 1 == chain.indices.size()) ? 2 : 1;
    const Root& a = rs.simple[chain.indices[s]];
    for (int i = 0; i < l; ++i) sum[i] += mult * a.e[i];
  }
  if (sum != beta.e)
    throw verify_error("chain decomposition does not expand to the root");
  return chain;
}

std::string nc_text(const NCPolynomial& poly) {
  if (poly.terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < poly.terms.size(); ++t) {
    Rat c = poly.terms[t].coeff;
    if (t == 0) {
      if (c < 0) {
        out += "- ";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    out += rat_str(c) + " * ";
    const auto& word = poly.terms[t].word;
    std::size_t i = 0;
    bool first = true;
    while (i < word.size()) {
      std::size_t j = i;
      while (j < word.size() && word[j] == word[i]) ++j;
      if (!first) out += ".";
      out += "f" + std::to_string(word[i] + 1);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      first = false;
      i = j;
    }
  }
  return out;
}

NCPolynomial singular_vector_closed_form(const RootSystem& rs,
                                         const ChainDecomposition& chain, int m,
                                         const Weight& lambda) {
  if (m < 1) throw input_error("singular-vector degree must be >= 1");
  if (chain.indices.empty()) throw input_error("empty chain");
  if (static_cast<int>(lambda.size()) != rs.rank)
    throw input_error("highest weight needs " + std::to_string(rs.rank) +
                      " coordinates");

  Weight shifted = lambda;
  const Weight rho = rs.rho();
  for (int i = 0; i < rs.rank; ++i) shifted[i] += rho[i];
  const Rat bgg = rs.pairing(shifted, chain.root);
  if (bgg != m)
    throw input_error("reducibility condition fails: (lambda+rho, " +
                      root_str(chain.root) + "^vee) = " + rat_str(bgg) +
                      ", expected " + std::to_string(m));

  const int L = static_cast<int>(chain.indices.size());
  const bool doubled = chain.kind == ChainKind::doubled_end;
  // Number of chain positions carrying a summation index; position s (1-based)
  // has range [0, m], except the last one of a doubled end with range [0, 2m].
  const int ns = L - 1;

  // Cartan evaluations: cumulative (lambda+rho)(H^s) for s = 1..L-1, and, for
  // the doubled end, (lambda+rho)(H_last) of the doubled root alone.
  std::vector<Rat> value(ns);
  Rat cum = 0;
  for (int s = 0; s < ns; ++s) {
    if (doubled && s == ns - 1) {
      value[s] = rs.pairing(shifted, rs.simple[chain.indices[L - 1]]);
    } else {
      cum += rs.pairing(shifted, rs.simple[chain.indices[s]]);
      value[s] = cum;
    }
  }
  for (int s = 0; s < ns; ++s) {
    const int hi = (doubled && s == ns - 1) ? 2 * m : m;
    if (is_integer(value[s]) && value[s] >= 0 && value[s] <= hi)
      throw formula_inapplicable(
          "closed form inapplicable: (lambda+rho)(H^" + std::to_string(s + 1) +
          ") = " + rat_str(value[s]) + " makes a denominator vanish; use the "
          "Verma kernel solver");
  }

  std::map<std::vector<int>, Rat> acc;
  std::vector<int> k(ns, 0);
  for (;;) {
    Rat coeff = 1;
    int ksum = 0;
    for (int s = 0; s < ns; ++s) {
      const int hi = (doubled && s == ns - 1) ? 2 * m : m;
      ksum += k[s];
      coeff *= Rat(binomial(hi, k[s]));
      coeff *= value[s] / (value[s] - k[s]);
    }
    if (ksum % 2 != 0) coeff = -coeff;

    std::vector<int> word;
    auto rep = [&word](int index, int count) {
      for (int t = 0; t < count; ++t) word.push_back(index);
    };
    if (doubled) {
      for (int s = 0; s < L - 2; ++s) rep(chain.indices[s], m - k[s]);
      rep(chain.indices[L - 1], 2 * m - k[ns - 1]);
      rep(chain.indices[L - 2], m);
      rep(chain.indices[L - 1], k[ns - 1]);
      for (int s = L - 3; s >= 0; --s) rep(chain.indices[s], k[s]);
    } else {
      for (int s = 0; s < L - 1; ++s) rep(chain.indices[s], m - k[s]);
      rep(chain.indices[L - 1], m);
      for (int s = L - 2; s >= 0; --s) rep(chain.indices[s], k[s]);
    }
    auto [it, fresh] = acc.emplace(std::move(word), coeff);
    if (!fresh) it->second += coeff;

    int s = 0;
    for (; s < ns; ++s) {
      const int hi = (doubled && s == ns - 1) ? 2 * m : m;
      if (k[s] < hi) {
        ++k[s];
        break;
      }
      k[s] = 0;
    }
    if (s == ns) break;
  }

  NCPolynomial poly;
  poly.terms.reserve(acc.size());
  for (auto& [word, coeff] : acc)
    if (coeff != 0) poly.terms.push_back({std::move(coeff), word});
  return poly;
}

SingularCheck verify_singular(const VermaModule& vm, const NCPolynomial& poly) {
  const RootSystem& rs = vm.constants().roots();

  // Homogeneity check: every word must have the same simple-root content.
  std::vector<int> depth;
  for (const auto& term : poly.terms) {
    std::vector<int> d(rs.rank, 0);
    for (int i : term.word) {
      if (i < 0 || i >= rs.rank) throw input_error("word index out of range");
      ++d[i];
    }
    if (depth.empty())
      depth = d;
    else if (depth != d)
      throw input_error("polynomial is not weight-homogeneous");
  }

  SingularCheck check;
  for (const auto& term : poly.terms) {
    std::vector<GenRef> word;
    word.reserve(term.word.size());
    for (int i : term.word) word.push_back(GenRef::f(rs.index_of(rs.simple[i])));
    PBWElement el = vm.straighten(word);
    el *= term.coeff;
    check.vector += el;
  }

  for (int i = 0; i < rs.rank; ++i) {
    PBWElement image = vm.apply(GenRef::e(rs.index_of(rs.simple[i])), check.vector);
    if (!image.is_zero()) {
      check.verified = false;
      check.residual = std::move(image);
      return check;
    }
  }
  check.verified = true;
  return check;
}

}  // namespace sopq
