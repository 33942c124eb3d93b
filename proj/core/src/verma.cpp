#include "sopq/verma.hpp"

#include "sopq/algebra.hpp"

#include <algorithm>
#include <utility>

namespace sopq {

namespace {

using Matrix = std::vector<std::vector<Int>>;

Matrix zero_matrix(int n) { return Matrix(n, std::vector<Int>(n, 0)); }

// G_ij = e_ij - e_{N+1-j,N+1-i} (1-based indices), the span of which is the
// split so(N): matrices antisymmetric w.r.t. the antidiagonal form.
Matrix gmat(int n, int i, int j) {
  Matrix m = zero_matrix(n);
  m[i - 1][j - 1] += 1;
  m[n - j][n - i] -= 1;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  Matrix c = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
      if (b[i][k] != 0)
        for (int j = 0; j < n; ++j) c[i][j] -= b[i][k] * a[k][j];
    }
  return c;
}

bool is_zero(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

// Accumulator for canonical PBW combinations.
using TermMap = std::map<std::vector<int>, Rat>;

void add_term(TermMap& out, const std::vector<int>& powers, const Rat& c) {
  if (c == 0) return;
  auto it = out.find(powers);
  if (it == out.end()) {
    out.emplace(powers, c);
  } else {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
}

PBWElement from_map(TermMap&& map) {
  PBWElement el;
  el.terms.reserve(map.size());
  for (auto& [powers, coeff] : map)
    if (coeff != 0) el.terms.push_back({powers, std::move(coeff)});
  return el;
}

TermMap to_map(const PBWElement& el) {
  TermMap map;
  for (const auto& t : el.terms) add_term(map, t.powers, t.coeff);
  return map;
}

int first_support(const std::vector<int>& powers) {
  for (std::size_t i = 0; i < powers.size(); ++i)
    if (powers[i] > 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

StructureConstants::StructureConstants(int N) : n_(N), rs_(RootSystem::make(N)) {
  if (N < 5)
    throw input_error("structure constants are provided for so(N,C) with N >= 5");
  const int P = rs_.npos();
  const int rank = rs_.rank;
  matrices_.resize(2 * P + rank);

  // Primary matrix position of every root vector, used to read coefficients
  // off a commutator; (row, col, value-at-position).
  struct Primary {
    int row = 0, col = 0;
    Int val = 1;
  };
  std::vector<Primary> primary(2 * P);

  for (int k = 0; k < P; ++k) {
    const Root& beta = rs_.positive[k];
    int a = 0, b = 0;  // 1-based coordinate positions
    int nonzeros = 0;
    for (std::size_t i = 0; i < beta.e.size(); ++i) {
      if (beta.e[i] == 0) continue;
      ++nonzeros;
      if (a == 0)
        a = static_cast<int>(i) + 1;
      else
        b = static_cast<int>(i) + 1;
    }
    if (nonzeros == 1) {
      // Short root e_a (odd N only).  With the quadratic form weighted by 2
      // on the center coordinate, the integral root vectors are
      //   E_{e_a} = 2 e_{a,c} - e_{c,a'},  F_{e_a} = e_{c,a} - 2 e_{a',c}
      // (c the center, a' = N+1-a), and [E, F] = 2 H_a, the exact coroot.
      const int c = (N + 1) / 2, ap = N + 1 - a;
      Matrix e = zero_matrix(N), f = zero_matrix(N);
      e[a - 1][c - 1] = 2;
      e[c - 1][ap - 1] = -1;
      f[c - 1][a - 1] = 1;
      f[ap - 1][c - 1] = -2;
      matrices_[e_index(k)] = std::move(e);
      matrices_[f_index(k)] = std::move(f);
      primary[e_index(k)] = {c - 1, ap - 1, -1};
      primary[f_index(k)] = {c - 1, a - 1, 1};
      continue;
    }
    int erow = a, ecol = 0;
    if (beta.e[b - 1] == -1)  // e_a - e_b
      ecol = b;
    else  // e_a + e_b
      ecol = N + 1 - b;
    matrices_[e_index(k)] = gmat(N, erow, ecol);
    matrices_[f_index(k)] = gmat(N, ecol, erow);
    primary[e_index(k)] = {erow - 1, ecol - 1, 1};
    primary[f_index(k)] = {ecol - 1, erow - 1, 1};
  }
  for (int i = 0; i < rank; ++i) matrices_[h_index(i)] = gmat(N, i + 1, i + 1);

  const int dim = 2 * P + rank;
  auto decompose = [&](const Matrix& c) {
    std::vector<std::pair<int, Int>> combo;
    for (int i = 0; i < rank; ++i)
      if (c[i][i] != 0) combo.emplace_back(h_index(i), c[i][i]);
    for (int k = 0; k < 2 * P; ++k) {
      const Primary& pos = primary[k];
      const Int& v = c[pos.row][pos.col];
      if (v == 0) continue;
      if (v % pos.val != 0)
        throw verify_error("commutator coefficient is not divisible by the basis scale");
      combo.emplace_back(k, v / pos.val);
    }
    Matrix check = c;
    for (const auto& [idx, coeff] : combo) {
      const Matrix& m = matrices_[idx];
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) check[i][j] -= coeff * m[i][j];
    }
    if (!is_zero(check))
      throw verify_error("commutator does not decompose over the root-vector basis");
    return combo;
  };

  table_.assign(dim, std::vector<std::vector<std::pair<int, Int>>>(dim));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      table_[a][b] = decompose(commutator(matrices_[a], matrices_[b]));

  // Root-space grading and Chevalley pairing sanity checks.
  for (int k = 0; k < P; ++k) {
    const Root& beta = rs_.positive[k];
    for (int i = 0; i < rank; ++i) {
      const auto& he = bracket(h_index(i), e_index(k));
      const bool want = beta.e[i] != 0;
      if (he.size() != static_cast<std::size_t>(want ? 1 : 0) ||
          (want && (he[0].first != e_index(k) || he[0].second != beta.e[i])))
        throw verify_error("[H_i, E_beta] is not beta(H_i) E_beta");
    }
    const auto& ef = bracket(e_index(k), f_index(k));
    const std::vector<Rat> coroot = rs_.coroot(beta);
    std::vector<Int> expect(rank, 0);
    for (int i = 0; i < rank; ++i) {
      if (!is_integer(coroot[i]))
        throw verify_error("coroot has a non-integer coordinate");
      expect[i] = Int(coroot[i].get_num());
    }
    std::vector<Int> got(rank, 0);
    for (const auto& [idx, coeff] : ef) {
      if (idx < 2 * P) throw verify_error("[E_beta, F_beta] is not Cartan");
      got[idx - 2 * P] = coeff;
    }
    if (got != expect)
      throw verify_error("[E_beta, F_beta] does not equal the coroot of beta");
  }
}

int StructureConstants::basis_index(const GenRef& g) const {
  switch (g.kind) {
    case GenRef::Kind::raise: return e_index(g.index);
    case GenRef::Kind::lower: return f_index(g.index);
    case GenRef::Kind::cartan: return h_index(g.index);
  }
  throw input_error("unknown generator kind");
}

const std::vector<std::pair<int, Int>>& StructureConstants::bracket(int a, int b) const {
  return table_.at(a).at(b);
}

PBWElement& PBWElement::operator+=(const PBWElement& other) {
  TermMap map = to_map(*this);
  for (const auto& t : other.terms) add_term(map, t.powers, t.coeff);
  *this = from_map(std::move(map));
  return *this;
}

PBWElement& PBWElement::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms.clear();
    return *this;
  }
  for (auto& t : terms) t.coeff *= scalar;
  return *this;
}

bool PBWElement::operator==(const PBWElement& other) const {
  if (terms.size() != other.terms.size()) return false;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].powers != other.terms[i].powers || terms[i].coeff != other.terms[i].coeff)
      return false;
  return true;
}

std::string pbw_text(const PBWElement& el, const RootSystem& rs) {
  if (el.terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < el.terms.size(); ++t) {
    const auto& term = el.terms[t];
    Rat c = term.coeff;
    if (t == 0) {
      if (c < 0) {
        out += "- ";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    out += rat_str(c);
    for (std::size_t k = 0; k < term.powers.size(); ++k) {
      if (term.powers[k] == 0) continue;
      out += " f[" + root_str(rs.positive[k]) + "]";
      if (term.powers[k] > 1) out += "^" + std::to_string(term.powers[k]);
    }
  }
  return out;
}

VermaModule::VermaModule(const StructureConstants& sc, Weight lambda)
    : sc_(sc), lambda_(std::move(lambda)) {
  if (static_cast<int>(lambda_.size()) != sc_.rank())
    throw input_error("highest weight needs " + std::to_string(sc_.rank()) +
                      " coordinates");
}

namespace {

struct Actor {
  const StructureConstants& sc;
  const Weight& lambda;

  Rat weight_scalar(int cartan_index, const std::vector<int>& powers) const {
    Rat w = lambda[cartan_index];
    for (std::size_t k = 0; k < powers.size(); ++k)
      if (powers[k] != 0) w -= powers[k] * sc.roots().positive[k].e[cartan_index];
    return w;
  }

  void add_f(int g, const std::vector<int>& powers, const Rat& c, TermMap& out) const {
    const int js = first_support(powers);
    if (js < 0 || g <= js) {
      std::vector<int> next = powers;
      ++next[g];
      add_term(out, next, c);
      return;
    }
    std::vector<int> rest = powers;
    --rest[js];
    TermMap shifted;
    add_f(g, rest, c, shifted);
    for (const auto& [m, cc] : shifted) add_f(js, m, cc, out);
    for (const auto& [idx, k] : sc.bracket(sc.f_index(g), sc.f_index(js)))
      add_basis(idx, rest, c * k, out);
  }

  void add_e(int b, const std::vector<int>& powers, const Rat& c, TermMap& out) const {
    const int js = first_support(powers);
    if (js < 0) return;  // raising operators annihilate v_0
    std::vector<int> rest = powers;
    --rest[js];
    TermMap inner;
    add_e(b, rest, c, inner);
    for (const auto& [m, cc] : inner) add_f(js, m, cc, out);
    for (const auto& [idx, k] : sc.bracket(sc.e_index(b), sc.f_index(js)))
      add_basis(idx, rest, c * k, out);
  }

  void add_basis(int idx, const std::vector<int>& powers, const Rat& c,
                 TermMap& out) const {
    if (c == 0) return;
    const int P = sc.npos();
    if (idx < P) {
      add_e(idx, powers, c, out);
    } else if (idx < 2 * P) {
      add_f(idx - P, powers, c, out);
    } else {
      add_term(out, powers, c * weight_scalar(idx - 2 * P, powers));
    }
  }
};

}  // namespace

PBWElement VermaModule::act_f(int root_index, const PBWElement& el) const {
  Actor actor{sc_, lambda_};
  TermMap out;
  for (const auto& t : el.terms) actor.add_f(root_index, t.powers, t.coeff, out);
  return from_map(std::move(out));
}

PBWElement VermaModule::act_e(int root_index, const PBWElement& el) const {
  Actor actor{sc_, lambda_};
  TermMap out;
  for (const auto& t : el.terms) actor.add_e(root_index, t.powers, t.coeff, out);
  return from_map(std::move(out));
}

PBWElement VermaModule::act_h(int cartan_index, const PBWElement& el) const {
  Actor actor{sc_, lambda_};
  TermMap out;
  for (const auto& t : el.terms)
    add_term(out, t.powers, t.coeff * actor.weight_scalar(cartan_index, t.powers));
  return from_map(std::move(out));
}

PBWElement VermaModule::apply(const GenRef& g, const PBWElement& el) const {
  switch (g.kind) {
    case GenRef::Kind::raise: return act_e(g.index, el);
    case GenRef::Kind::lower: return act_f(g.index, el);
    case GenRef::Kind::cartan: return act_h(g.index, el);
  }
  throw input_error("unknown generator kind");
}

PBWElement VermaModule::straighten(const std::vector<GenRef>& word) const {
  PBWElement el;
  el.terms.push_back({std::vector<int>(sc_.npos(), 0), Rat(1)});
  for (auto it = word.rbegin(); it != word.rend(); ++it) el = apply(*it, el);
  return el;
}

const VermaSlice& VermaModule::slice(const std::vector<int>& depth) const {
  if (static_cast<int>(depth.size()) != sc_.rank())
    throw input_error("slice depth needs " + std::to_string(sc_.rank()) +
                      " coordinates");
  for (int d : depth)
    if (d < 0) throw input_error("slice depth must be componentwise nonnegative");

  std::lock_guard<std::mutex> guard(slices_mutex_);

  // Build (without holding references across recursion) every slice from the
  // bottom of the cone up to `depth`, so the recursion below always finds its
  // targets ready.
  std::vector<std::vector<int>> stack = {depth};
  while (!stack.empty()) {
    std::vector<int> d = stack.back();
    if (slices_.count(d)) {
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (int i = 0; i < sc_.rank(); ++i) {
      if (d[i] == 0) continue;
      std::vector<int> down = d;
      --down[i];
      if (!slices_.count(down)) {
        stack.push_back(down);
        ready = false;
      }
    }
    if (!ready) continue;
    stack.pop_back();

    VermaSlice s;
    s.depth = d;

    // Enumerate exponent vectors over the positive roots whose simple-root
    // coordinates sum to d (lexicographic order).
    const RootSystem& rs = sc_.roots();
    const int P = rs.npos();
    std::vector<std::vector<int>> coords(P);
    for (int k = 0; k < P; ++k) coords[k] = rs.simple_coords(rs.positive[k]);
    std::vector<int> current(P, 0);
    std::vector<int> remaining = d;
    auto all_zero = [](const std::vector<int>& v) {
      return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
    };
    auto enumerate = [&](auto&& self, int k) -> void {
      if (k == P) {
        if (all_zero(remaining)) s.basis.push_back(current);
        return;
      }
      int bound = -1;  // max exponent of root k within `remaining`
      for (int i = 0; i < sc_.rank(); ++i) {
        if (coords[k][i] == 0) continue;
        const int cap = remaining[i] / coords[k][i];
        bound = bound < 0 ? cap : std::min(bound, cap);
      }
      for (int a = 0; a <= bound; ++a) {
        if (a > 0)
          for (int i = 0; i < sc_.rank(); ++i) remaining[i] -= coords[k][i];
        current[k] = a;
        self(self, k + 1);
      }
      for (int i = 0; i < sc_.rank(); ++i) remaining[i] += bound * coords[k][i];
      current[k] = 0;
    };
    enumerate(enumerate, 0);

    // Raising matrices into the neighbouring slices.
    Actor actor{sc_, lambda_};
    s.raising.resize(sc_.rank());
    for (int i = 0; i < sc_.rank(); ++i) {
      if (d[i] == 0) {
        // Out of the cone: images must vanish identically.
        for (const auto& mono : s.basis) {
          TermMap image;
          actor.add_e(rs.index_of(rs.simple[i]), mono, Rat(1), image);
          if (!image.empty())
            throw verify_error("raising image escaped the weight cone");
        }
        continue;
      }
      std::vector<int> down = d;
      --down[i];
      const VermaSlice& target = slices_.at(down);
      std::map<std::vector<int>, int> row_of;
      for (std::size_t r = 0; r < target.basis.size(); ++r)
        row_of[target.basis[r]] = static_cast<int>(r);
      std::vector<std::vector<Rat>> mat(
          target.basis.size(), std::vector<Rat>(s.basis.size(), Rat(0)));
      for (std::size_t col = 0; col < s.basis.size(); ++col) {
        TermMap image;
        actor.add_e(rs.index_of(rs.simple[i]), s.basis[col], Rat(1), image);
        for (const auto& [mono, coeff] : image) {
          auto it = row_of.find(mono);
          if (it == row_of.end())
            throw verify_error("raising image is not in the neighbouring slice");
          mat[it->second][col] = coeff;
        }
      }
      s.raising[i] = std::move(mat);
    }
    slices_.emplace(d, std::move(s));
  }
  return slices_.at(depth);
}

std::vector<std::vector<Rat>> VermaModule::lowering_matrix(
    int i, const std::vector<int>& depth) const {
  const RootSystem& rs = sc_.roots();
  const VermaSlice& src = slice(depth);
  std::vector<int> up = depth;
  ++up[i];
  const VermaSlice& dst = slice(up);
  std::map<std::vector<int>, int> row_of;
  for (std::size_t r = 0; r < dst.basis.size(); ++r)
    row_of[dst.basis[r]] = static_cast<int>(r);
  Actor actor{sc_, lambda_};
  std::vector<std::vector<Rat>> mat(dst.basis.size(),
                                    std::vector<Rat>(src.basis.size(), Rat(0)));
  for (std::size_t col = 0; col < src.basis.size(); ++col) {
    TermMap image;
    actor.add_f(rs.index_of(rs.simple[i]), src.basis[col], Rat(1), image);
    for (const auto& [mono, coeff] : image) {
      auto it = row_of.find(mono);
      if (it == row_of.end())
        throw verify_error("lowering image is not in the neighbouring slice");
      mat[it->second][col] = coeff;
    }
  }
  return mat;
}

std::vector<PBWElement> VermaModule::solve_singular(const Root& beta, int m) const {
  if (m < 1) throw input_error("singular-vector degree must be >= 1");
  const RootSystem& rs = sc_.roots();
  if (!rs.is_positive_root(beta))
    throw input_error("not a positive root: " + root_str(beta));
  Weight shifted = lambda_;
  const Weight rho = rs.rho();
  for (int i = 0; i < rs.rank; ++i) shifted[i] += rho[i];
  const Rat pair = rs.pairing(shifted, beta);
  if (pair != m)
    throw input_error("reducibility condition fails: (lambda+rho, " +
                      root_str(beta) + "^vee) = " + rat_str(pair) + ", expected " +
                      std::to_string(m));
  return singular_space(beta, m);
}

std::vector<PBWElement> VermaModule::singular_space(const Root& beta, int m) const {
  const RootSystem& rs = sc_.roots();
  std::vector<int> depth = rs.simple_coords(beta);
  for (int& d : depth) d *= m;
  const VermaSlice& s = slice(depth);
  if (s.basis.empty()) return {};
  std::vector<std::vector<Rat>> stacked;
  for (const auto& mat : s.raising)
    for (const auto& row : mat) stacked.push_back(row);
  const auto kernel = rational_kernel(stacked, static_cast<int>(s.basis.size()));
  std::vector<PBWElement> out;
  out.reserve(kernel.size());
  for (const auto& vec : kernel) {
    TermMap map;
    for (std::size_t i = 0; i < vec.size(); ++i) add_term(map, s.basis[i], vec[i]);
    out.push_back(from_map(std::move(map)));
  }
  return out;
}

std::vector<std::vector<Rat>> rational_kernel(const std::vector<std::vector<Rat>>& rows,
                                              int cols) {
  // Clear denominators row by row, then run fraction-free (Bareiss)
  // elimination over the integers.
  std::vector<std::vector<Int>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols)
      throw input_error("kernel: ragged matrix");
    Int lcm = 1;
    for (const auto& v : row) {
      Int den = v.get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Int> scaled(cols);
    bool nonzero = false;
    for (int c = 0; c < cols; ++c) {
      Rat v = row[c] * lcm;
      scaled[c] = Int(v.get_num());
      nonzero = nonzero || scaled[c] != 0;
    }
    if (nonzero) m.push_back(std::move(scaled));
  }

  const int nrows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < nrows; ++c) {
    int pr = -1;
    for (int rr = r; rr < nrows; ++rr)
      if (m[rr][c] != 0) {
        pr = rr;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    for (int rr = r + 1; rr < nrows; ++rr) {
      for (int cc = c + 1; cc < cols; ++cc) {
        Int num = m[r][c] * m[rr][cc] - m[rr][c] * m[r][cc];
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        m[rr][cc] = std::move(num);
      }
      m[rr][c] = 0;
    }
    prev = m[r][c];
    pivot_col.push_back(c);
    ++r;
  }
  const int nr = static_cast<int>(pivot_col.size());

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rat>> kernel;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> x(cols, Rat(0));
    x[fc] = 1;
    for (int rr = nr - 1; rr >= 0; --rr) {
      const int pc = pivot_col[rr];
      Rat sum = 0;
      for (int c = pc + 1; c < cols; ++c)
        if (x[c] != 0 && m[rr][c] != 0) sum += Rat(m[rr][c]) * x[c];
      x[pc] = -sum / Rat(m[rr][pc]);
    }
    kernel.push_back(std::move(x));
  }
  return kernel;
}

StructureConstants structure_constants(int Ncomplex) {
  return StructureConstants(Ncomplex);
}

}  // namespace sopq
