#include "sopq/rootsys.hpp"

#include "sopq/algebra.hpp"

#include <algorithm>
#include <cstdlib>

namespace sopq {

static Root unit(int rank, int i, int ci) {
  Root r;
  r.e.assign(rank, 0);
  r.e[i] = ci;
  return r;
}

static Root pair_root(int rank, int i, int ci, int j, int cj) {
  Root r;
  r.e.assign(rank, 0);
  r.e[i] = ci;
  r.e[j] = cj;
  return r;
}

RootSystem RootSystem::make(int N) {
  if (N < 3) throw input_error("RootSystem: so(N,C) requires N >= 3");
  RootSystem rs;
  rs.N = N;
  rs.type_b = (N % 2 != 0);
  rs.rank = rs.type_b ? (N - 1) / 2 : N / 2;
  const int l = rs.rank;

  for (int i = 0; i + 1 < l; ++i) rs.simple.push_back(pair_root(l, i, 1, i + 1, -1));
  if (rs.type_b) {
    rs.simple.push_back(unit(l, l - 1, 1));
  } else {
    if (l >= 2) rs.simple.push_back(pair_root(l, l - 2, 1, l - 1, 1));
  }
  if (static_cast<int>(rs.simple.size()) != l)
    throw verify_error("RootSystem: simple root count mismatch");

  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      rs.positive.push_back(pair_root(l, i, 1, j, -1));
      rs.positive.push_back(pair_root(l, i, 1, j, 1));
    }
    if (rs.type_b) rs.positive.push_back(unit(l, i, 1));
  }
  std::sort(rs.positive.begin(), rs.positive.end(), [&rs](const Root& a, const Root& b) {
    int ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return a.e < b.e;
  });
  return rs;
}

int RootSystem::index_of(const Root& beta) const {
  for (int i = 0; i < npos(); ++i)
    if (positive[i] == beta) return i;
  return -1;
}

bool RootSystem::is_root(const Root& beta) const {
  return is_positive_root(beta) || is_positive_root(negated(beta));
}

std::vector<Root> RootSystem::noncompact_positive() const {
  std::vector<Root> out;
  for (const Root& r : positive)
    if (!is_compact(r)) out.push_back(r);
  return out;
}

std::vector<int> RootSystem::simple_coords(const Root& beta) const {
  const int l = rank;
  if (static_cast<int>(beta.e.size()) != l)
    throw verify_error("simple_coords: rank mismatch");
  std::vector<int> c(l, 0);
  // Triangular solve against the fixed simple basis.  Partial sums
  // s_j = beta_1 + ... + beta_j give c_j directly for the A-chain part.
  std::vector<int> s(l + 1, 0);
  for (int j = 1; j <= l; ++j) s[j] = s[j - 1] + beta.e[j - 1];
  if (type_b) {
    for (int j = 1; j <= l; ++j) c[j - 1] = s[j];
  } else {
    for (int j = 1; j <= l - 2; ++j) c[j - 1] = s[j];
    // c_{l-1} - c_{l-2} + c_l = beta_{l-1},  c_l - c_{l-1} = beta_l
    int prev = (l >= 3) ? c[l - 3] : 0;
    int twice_cl = beta.e[l - 2] + beta.e[l - 1] + prev;
    if (twice_cl % 2 != 0) throw verify_error("simple_coords: not in the root lattice");
    c[l - 1] = twice_cl / 2;
    c[l - 2] = c[l - 1] - beta.e[l - 1];
  }
  // Exact reconstruction check.
  Root rec;
  rec.e.assign(l, 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rec.e[j] += c[i] * simple[i].e[j];
  if (!(rec == beta)) throw verify_error("simple_coords: reconstruction failed");
  return c;
}

int RootSystem::height(const Root& beta) const {
  std::vector<int> c = simple_coords(beta);
  int h = 0;
  for (int x : c) h += x;
  return h;
}

Weight RootSystem::rho() const {
  Weight w(rank);
  for (int i = 1; i <= rank; ++i) w[i - 1] = frac(N - 2 * i, 2);
  return w;
}

Rat RootSystem::dot(const Weight& a, const Weight& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat RootSystem::dot(const Weight& a, const Root& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b.e[i];
  return s;
}

int RootSystem::dot(const Root& a, const Root& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.e.size(); ++i) s += a.e[i] * b.e[i];
  return s;
}

Rat RootSystem::pairing(const Weight& w, const Root& beta) const {
  int bb = dot(beta, beta);
  if (bb == 0) throw verify_error("pairing: zero root");
  return 2 * dot(w, beta) / bb;
}

std::vector<Rat> RootSystem::coroot(const Root& beta) const {
  int bb = dot(beta, beta);
  if (bb == 0) throw verify_error("coroot: zero root");
  std::vector<Rat> c(beta.e.size());
  for (std::size_t i = 0; i < beta.e.size(); ++i) c[i] = frac(2 * beta.e[i], bb);
  return c;
}

Int RootSystem::weyl_dimension(const Weight& lam_rho) const {
  if (static_cast<int>(lam_rho.size()) != rank)
    throw input_error("weyl_dimension: weight has wrong rank");
  const Weight r = rho();
  Rat prod = 1;
  for (const Root& a : positive) {
    Rat num = dot(lam_rho, a);
    Rat den = dot(r, a);
    if (den == 0) throw verify_error("weyl_dimension: degenerate rho pairing");
    prod *= num / den;
  }
  if (!is_integer(prod) || prod <= 0)
    throw verify_error("weyl_dimension: product is not a positive integer (weight not dominant regular?)");
  return prod.get_num();
}

Root negated(const Root& r) {
  Root m = r;
  for (int& x : m.e) x = -x;
  return m;
}

std::string root_str(const Root& r) {
  std::string out;
  for (std::size_t i = 0; i < r.e.size(); ++i) {
    int c = r.e[i];
    if (c == 0) continue;
    if (std::abs(c) != 1) throw verify_error("root_str: unexpected coefficient");
    if (c > 0 && !out.empty())
      out += "+";
    else if (c < 0)
      out += "-";
    out += "e" + std::to_string(i + 1);
  }
  if (out.empty()) throw verify_error("root_str: zero root");
  return out;
}

Root root_parse(const std::string& s, int rank) {
  Root r;
  r.e.assign(rank, 0);
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+') {
      ++i;
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
    }
    if (i >= s.size() || s[i] != 'e')
      throw input_error("root_parse: malformed root '" + s + "'");
    ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw input_error("root_parse: malformed root '" + s + "'");
    int idx = std::atoi(s.substr(i, j - i).c_str());
    if (idx < 1 || idx > rank)
      throw input_error("root_parse: coordinate index out of range in '" + s + "'");
    if (r.e[idx - 1] != 0) throw input_error("root_parse: repeated coordinate in '" + s + "'");
    r.e[idx - 1] = sign;
    any = true;
    i = j;
  }
  if (!any) throw input_error("root_parse: empty root string");
  return r;
}

}  // namespace sopq
