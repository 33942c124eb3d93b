#ifndef SOPQ_MULTIPLET_HPP
#define SOPQ_MULTIPLET_HPP

// Multiplet graphs: the sets of induced representations sharing all Casimir
// values, with the invariant differential operators and Knapp-Stein integral
// operators as arrows.
//
// Everything is produced by one generative "slot rule": from the h+1 Dynkin
// labels build the partial sums n_1 <= ... <= n_{h+1}; the k-th shadow pair
// chi^-+_k has c = -+ n_{h+2-k} and M n-labels the remaining h values
// (ascending); for even p+q the plus branch additionally conjugates the
// M-labels (first n-label negated).  Degenerate labels (one m_j = 0, or
// half-odd replacements) make some signatures coincide; coinciding nodes are
// merged and become the physically relevant ones.  Arrows with nonpositive
// degree are dropped; every surviving differential arrow is re-derived from
// the weight difference of its endpoints and checked against the
// Bernstein-Gelfand-Gelfand pairing condition.

#include "sopq/algebra.hpp"
#include "sopq/signature.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace sopq {

enum class Branch { minus = 0, zero = 1, plus = 2 };

struct NodePos {
  int k = 0;  // 1..h+1
  Branch branch = Branch::minus;
  bool operator==(const NodePos&) const = default;
  auto operator<=>(const NodePos&) const = default;
};

std::string node_id(const NodePos& pos);  // "chi^-_1", "chi^0_2", "chi^+_3"

struct MultipletNode {
  NodePos pos;  // canonical position (smallest of the merged aliases)
  Signature sig;
  bool relevant = false;           // merged ("starred") or otherwise distinguished
  std::vector<NodePos> aliases;    // every original position mapped here (incl. pos)
  std::vector<std::string> tags;   // "physically-relevant", "singleton", ...
};

enum class ArrowKind { differential, knapp_stein };

struct MultipletArrow {
  NodePos src, dst;
  ArrowKind kind = ArrowKind::differential;
  std::string name;           // "d_1", "d'_h", "G^+_2"
  std::optional<Root> root;   // differential arrows; degenerate KS arrows
  std::optional<Rat> degree;  // positive integer when present
  bool degenerate = false;    // KS arrow that degenerates to a differential operator
};

enum class MultipletKind { main, reduced, special, singlet };

struct Multiplet {
  AlgebraSpec spec;
  MultipletKind kind = MultipletKind::main;
  std::vector<Rat> labels;  // defining Dynkin labels (h+1 entries, after replacements)
  int j = 0;                // reduced/special: the distinguished index
  Rat mu = 0, mu2 = 0;      // special: the half-odd replacement parameters
  std::vector<MultipletNode> nodes;
  std::vector<MultipletArrow> arrows;

  const MultipletNode& node_at(const NodePos& pos) const;  // by canonical position
  std::string kind_text() const;  // "main", "reduced(2)", "special(3,1,5)", "singlet"
};

// The 2(h+1)-node multiplet for strictly positive integer labels.
Multiplet main_multiplet(const AlgebraSpec& spec, const std::vector<Rat>& m);

// Labels with exactly m_j = 0 (all others >= 1): nodes coincide in the
// paper's patterns and the coinciding ones are marked physically relevant.
Multiplet reduced_multiplet(const AlgebraSpec& spec, int j, const std::vector<Rat>& m);

// Half-odd replacements (odd p+q only; even parity is rejected):
//   j = 1:        m_{h+1} -> mu/2
//   2 <= j <= h:  m_{h-j+2} -> mu/2, m_{h-j+3} -> mu2/2
//   j = h+1:      m_2 -> mu/2
// The replaced slots of `m` must be 0; mu (and mu2 where applicable) must be
// odd positive.  Emits only the physically relevant pair chi^-+_j with the
// single differential arrow of degree 2|c_j| along e1, G^+_j degenerate.
// With j = h+1 and m_1 = 0 emits the doubly-reduced singlet instead.
Multiplet special_reduced(const AlgebraSpec& spec, int j, const Rat& mu,
                          const std::optional<Rat>& mu2, const std::vector<Rat>& m);

// The self-conjugate irreducible singlets.
//   odd:  [mu, tail...; c=0], mu odd positive, tail = h-1 positive integers
//         (the doubly-reduced case of special_reduced at j = h+1, m_1 = 0);
//   even: [mu, mu, tail...; c=0], mu a positive integer, tail = h-2 positive
//         integers (the m=0 collapse of the last two summary pairs; its
//         `labels` field holds the h M-labels, there is no defining tuple).
Multiplet singlet(const AlgebraSpec& spec, const Rat& mu, const std::vector<Rat>& tail);

// Re-checks every invariant of a generated multiplet: differential arrows
// satisfy the BGG pairing exactly with degree >= 1 and dst-weight =
// src-weight - degree*root; KS arrows connect shadow partners with opposite
// c.  Returns human-readable violations (empty on success).
std::vector<std::string> validate_multiplet(const Multiplet& mult);

// One row of the physically-relevant summary of the reduced multiplets.
struct RelevantRow {
  int j = 0;                 // row index 1..h+1 (see below)
  Signature sig;             // one member of the pair (eps/c signed)
  Rat d;                     // conformal weight of this member
  Rat d_plus_bound;          // the pair's d^+ lower bound
  Rat d_minus_bound;         // the pair's d^- upper bound
  bool singlet = false;
  int source_reduced_j = 0;  // which reduced multiplet (value of the zeroed slot index)
};

// The table of physically relevant reduced pairs for given M-labels
// (h entries, all >= 1): rows j = 1..h (pairs; two entries each, - then +)
// and the closing singlet row.  Even parity additionally distinguishes the
// j = h and j = h+1 rows (conjugated twins) and ends with the self-conjugate
// singlet.
std::vector<RelevantRow> relevant_summary(const AlgebraSpec& spec, const std::vector<Rat>& mlab);

// Exhaustive self-check: generates every multiplet family (main, reduced,
// special, singlet) for every so(p,q) of rank <= max_rank over the integer
// label grid 1..max_label (special replacement parameters run over the odd
// values <= 2*max_label - 1) and runs validate_multiplet on each.
struct SweepStats {
  int algebras = 0;
  long multiplets = 0;
  long violations = 0;
  std::vector<std::string> messages;  // first violations, human-readable
};

SweepStats sweep_validate(int max_rank, int max_label);

}  // namespace sopq

#endif
