#include "sopq/multiplet.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace sopq {

namespace {

const char* branch_mark(Branch b) {
  switch (b) {
    case Branch::minus: return "-";
    case Branch::zero: return "0";
    case Branch::plus: return "+";
  }
  return "?";
}

bool positive_integer(const Rat& r) { return is_integer(r) && r > 0; }

bool odd_positive_integer(const Rat& r) {
  return is_integer(r) && r > 0 && mpz_odd_p(Int(r.get_num()).get_mpz_t());
}

// The k-th shadow signature of the (possibly degenerate) n-multiset
// n_1 <= ... <= n_{h+1}: remove n_{h+2-k}, keep the rest in order, set
// c = -+ n_{h+2-k}; even parity marks the branch and conjugates the plus
// side (first remaining n-label negated).
Signature slot_signature(const AlgebraSpec& spec, const std::vector<Rat>& n,
                         int k, Branch br) {
  const int idx = spec.h + 1 - k;  // 0-based position of the removed value
  Signature s;
  s.parity = spec.parity;
  s.c = (br == Branch::minus) ? Rat(-n[idx]) : n[idx];
  s.nlab.reserve(spec.h);
  for (int i = 0; i <= spec.h; ++i)
    if (i != idx) s.nlab.push_back(n[i]);
  if (!spec.odd()) {
    s.eps = (br == Branch::minus) ? -1 : +1;
    if (br == Branch::plus) s.nlab.front() = -s.nlab.front();
  }
  return s;
}

// Shared node-generation state: nodes in first-appearance order plus the
// map from every original shadow position to the index of its node.
struct NodeTable {
  std::vector<MultipletNode> nodes;
  std::map<NodePos, int> where;

  void insert(const NodePos& pos, const Signature& sig) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      // Coinciding signatures are identified by labels and c only: the
      // branch marker may disagree between the two aliases of a merged node
      // (the cross-branch identifications of the degenerate even cases).
      if (nodes[i].sig.nlab == sig.nlab && nodes[i].sig.c == sig.c) {
        nodes[i].relevant = true;
        nodes[i].aliases.push_back(pos);
        where[pos] = static_cast<int>(i);
        return;
      }
    }
    MultipletNode node;
    node.pos = pos;
    node.sig = sig;
    node.aliases = {pos};
    where[pos] = static_cast<int>(nodes.size());
    nodes.push_back(std::move(node));
  }

  // A node whose aliases cover both branches at c = 0 is self-conjugate: it
  // sits on the mirror axis and loses its branch marker.
  void settle_zero_branch() {
    for (auto& node : nodes) {
      if (node.sig.c != 0) continue;
      bool has_minus = false, has_plus = false;
      for (const auto& a : node.aliases) {
        has_minus = has_minus || a.branch == Branch::minus;
        has_plus = has_plus || a.branch == Branch::plus;
      }
      if (has_minus && has_plus) {
        node.pos.branch = Branch::zero;
        node.sig.eps = 0;
      }
    }
  }

  const NodePos& canon(const NodePos& orig) const {
    return nodes[where.at(orig)].pos;
  }
};

NodeTable generate_nodes(const AlgebraSpec& spec, const std::vector<Rat>& n) {
  NodeTable table;
  for (int k = 1; k <= spec.h + 1; ++k)
    for (Branch br : {Branch::minus, Branch::plus})
      table.insert(NodePos{k, br}, slot_signature(spec, n, k, br));
  table.settle_zero_branch();
  return table;
}

// An arrow of the generic (non-degenerate) multiplet: shadow positions and
// the label value that becomes its degree.  Non-positive degrees mean the
// operator does not exist for these labels and the template is dropped.
struct ArrowTemplate {
  NodePos src, dst;
  std::string name;
  Rat degree;
};

std::vector<ArrowTemplate> structural_arrows(const AlgebraSpec& spec,
                                             const std::vector<Rat>& m) {
  const int h = spec.h;
  auto label = [&](int one_based) { return m[one_based - 1]; };
  std::vector<ArrowTemplate> out;
  for (int i = 1; i <= h; ++i)
    out.push_back({{i, Branch::minus},
                   {i + 1, Branch::minus},
                   "d_" + std::to_string(i),
                   label(h + 2 - i)});
  const int dprime_top = spec.odd() ? h : h - 1;
  for (int i = 1; i <= dprime_top; ++i)
    out.push_back({{i + 1, Branch::plus},
                   {i, Branch::plus},
                   "d'_" + std::to_string(i),
                   label(h + 2 - i)});
  if (spec.odd()) {
    out.push_back({{h + 1, Branch::minus},
                   {h + 1, Branch::plus},
                   "d_" + std::to_string(h + 1),
                   label(1)});
  } else {
    out.push_back(
        {{h + 1, Branch::plus}, {h, Branch::plus}, "d_" + std::to_string(h), label(2)});
    out.push_back(
        {{h, Branch::minus}, {h + 1, Branch::plus}, "d'_" + std::to_string(h), label(1)});
    out.push_back(
        {{h + 1, Branch::minus}, {h, Branch::plus}, "d'_" + std::to_string(h), label(1)});
  }
  return out;
}

// Realize a template arrow between merged nodes: re-derive the root from the
// weight difference of the endpoints and check the BGG condition.  Returns
// false when the arrow was a duplicate of an already materialized one.
void materialize_arrows(const AlgebraSpec& spec, const NodeTable& table,
                        const std::vector<ArrowTemplate>& templates,
                        std::vector<MultipletArrow>& arrows) {
  const RootSystem rs = RootSystem::make(spec.n_total());
  std::set<std::tuple<NodePos, NodePos, Root, Rat>> seen;
  for (const auto& t : templates) {
    if (t.degree <= 0) continue;
    if (!positive_integer(t.degree))
      throw verify_error("arrow " + t.name + ": degree " + rat_str(t.degree) +
                         " is not a positive integer");
    const MultipletNode& src = table.nodes[table.where.at(t.src)];
    const MultipletNode& dst = table.nodes[table.where.at(t.dst)];
    if (&src == &dst)
      throw verify_error("arrow " + t.name + " of degree " + rat_str(t.degree) +
                         " degenerated to a self-loop at " + node_id(src.pos));
    const Weight ws = weight_from_signature(src.sig);
    const Weight wd = weight_from_signature(dst.sig);
    Root beta;
    beta.e.reserve(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const Rat coord = (ws[i] - wd[i]) / t.degree;
      if (!is_integer(coord))
        throw verify_error("arrow " + t.name + ": weight difference is not " +
                           rat_str(t.degree) + " times an integral root");
      beta.e.push_back(static_cast<int>(coord.get_num().get_si()));
    }
    if (!rs.is_positive_root(beta) || rs.is_compact(beta))
      throw verify_error("arrow " + t.name + ": " + root_str(beta) +
                         " is not a noncompact positive root");
    if (rs.pairing(ws, beta) != t.degree)
      throw verify_error("arrow " + t.name + ": BGG pairing " +
                         rat_str(rs.pairing(ws, beta)) + " differs from degree " +
                         rat_str(t.degree));
    if (!seen.insert({src.pos, dst.pos, beta, t.degree}).second) continue;
    MultipletArrow arrow;
    arrow.src = src.pos;
    arrow.dst = dst.pos;
    arrow.kind = ArrowKind::differential;
    arrow.name = t.name;
    arrow.root = beta;
    arrow.degree = t.degree;
    arrows.push_back(std::move(arrow));
  }
}

// One Knapp-Stein pair per shadow index whose two members stayed distinct;
// a KS arrow parallel to a differential arrow is its degeneration and
// inherits the root and degree.
void attach_knapp_stein(const AlgebraSpec& spec, const NodeTable& table,
                        std::vector<MultipletArrow>& arrows) {
  std::set<std::pair<NodePos, NodePos>> seen;
  std::vector<MultipletArrow> ks;
  for (int k = 1; k <= spec.h + 1; ++k) {
    const NodePos minus = table.canon({k, Branch::minus});
    const NodePos plus = table.canon({k, Branch::plus});
    if (minus == plus) continue;
    if (seen.insert({minus, plus}).second) {
      MultipletArrow g;
      g.src = minus;
      g.dst = plus;
      g.kind = ArrowKind::knapp_stein;
      g.name = "G^+_" + std::to_string(k);
      ks.push_back(std::move(g));
    }
    if (seen.insert({plus, minus}).second) {
      MultipletArrow g;
      g.src = plus;
      g.dst = minus;
      g.kind = ArrowKind::knapp_stein;
      g.name = "G^-_" + std::to_string(k);
      ks.push_back(std::move(g));
    }
  }
  for (auto& g : ks) {
    for (const auto& a : arrows) {
      if (a.kind == ArrowKind::differential && a.src == g.src && a.dst == g.dst) {
        g.degenerate = true;
        g.root = a.root;
        g.degree = a.degree;
        break;
      }
    }
  }
  arrows.insert(arrows.end(), ks.begin(), ks.end());
}

void tag_node(MultipletNode& node, const std::string& tag) {
  if (std::find(node.tags.begin(), node.tags.end(), tag) == node.tags.end())
    node.tags.push_back(tag);
}

void finish_tags(Multiplet& mult) {
  for (auto& node : mult.nodes) {
    if (node.relevant) tag_node(node, "physically-relevant");
    if (node.pos.k == 1 && node.pos.branch == Branch::minus)
      tag_node(node, "finite-dim-content");
  }
}

std::vector<Rat> full_n(const AlgebraSpec& spec, const std::vector<Rat>& m) {
  return n_from_m(spec.parity, m);
}

void check_label_count(const AlgebraSpec& spec, const std::vector<Rat>& m) {
  if (static_cast<int>(m.size()) != spec.h + 1)
    throw input_error(spec.name() + " needs " + std::to_string(spec.h + 1) +
                      " labels, got " + std::to_string(m.size()));
}

}  // namespace

std::string node_id(const NodePos& pos) {
  return std::string("chi^") + branch_mark(pos.branch) + "_" + std::to_string(pos.k);
}

const MultipletNode& Multiplet::node_at(const NodePos& pos) const {
  for (const auto& node : nodes)
    if (node.pos == pos) return node;
  throw verify_error("no node at position " + node_id(pos));
}

std::string Multiplet::kind_text() const {
  switch (kind) {
    case MultipletKind::main: return "main";
    case MultipletKind::reduced: return "reduced(" + std::to_string(j) + ")";
    case MultipletKind::special: {
      std::string out = "special(" + std::to_string(j) + "," + rat_str(mu);
      if (mu2 != 0) out += "," + rat_str(mu2);
      return out + ")";
    }
    case MultipletKind::singlet: return "singlet";
  }
  return "?";
}

Multiplet main_multiplet(const AlgebraSpec& spec, const std::vector<Rat>& m) {
  check_label_count(spec, m);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!positive_integer(m[i]))
      throw input_error("main multiplets need positive integer labels; label " +
                        std::to_string(i + 1) + " is " + rat_str(m[i]));
  Multiplet mult;
  mult.spec = spec;
  mult.kind = MultipletKind::main;
  mult.labels = m;
  NodeTable table = generate_nodes(spec, full_n(spec, m));
  if (static_cast<int>(table.nodes.size()) != 2 * (spec.h + 1))
    throw verify_error("main multiplet of " + spec.name() +
                       " generated coinciding signatures");
  materialize_arrows(spec, table, structural_arrows(spec, m), mult.arrows);
  attach_knapp_stein(spec, table, mult.arrows);
  mult.nodes = std::move(table.nodes);
  finish_tags(mult);
  return mult;
}

Multiplet reduced_multiplet(const AlgebraSpec& spec, int j, const std::vector<Rat>& m) {
  check_label_count(spec, m);
  if (j < 1 || j > spec.h + 1)
    throw input_error("reduced index j must be in 1.." + std::to_string(spec.h + 1) +
                      ", got " + std::to_string(j));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (static_cast<int>(i) == j - 1) {
      if (m[i] != 0)
        throw input_error("reduced multiplet at j=" + std::to_string(j) +
                          " needs label " + std::to_string(j) + " = 0, got " +
                          rat_str(m[i]));
    } else if (!positive_integer(m[i])) {
      throw input_error("reduced multiplet labels other than m_" + std::to_string(j) +
                        " must be positive integers; label " + std::to_string(i + 1) +
                        " is " + rat_str(m[i]));
    }
  }
  Multiplet mult;
  mult.spec = spec;
  mult.kind = MultipletKind::reduced;
  mult.labels = m;
  mult.j = j;
  NodeTable table = generate_nodes(spec, full_n(spec, m));
  materialize_arrows(spec, table, structural_arrows(spec, m), mult.arrows);
  attach_knapp_stein(spec, table, mult.arrows);
  mult.nodes = std::move(table.nodes);
  finish_tags(mult);
  return mult;
}

Multiplet special_reduced(const AlgebraSpec& spec, int j, const Rat& mu,
                          const std::optional<Rat>& mu2, const std::vector<Rat>& m) {
  if (!spec.odd())
    throw input_error("special reduced multiplets exist only for odd p+q");
  check_label_count(spec, m);
  const int h = spec.h;
  if (j < 1 || j > h + 1)
    throw input_error("special index j must be in 1.." + std::to_string(h + 1) +
                      ", got " + std::to_string(j));
  if (!odd_positive_integer(mu))
    throw input_error("mu must be an odd positive integer, got " + rat_str(mu));
  const bool needs_mu2 = (2 <= j && j <= h);
  if (needs_mu2 && !mu2)
    throw input_error("special index j=" + std::to_string(j) + " needs mu2");
  if (!needs_mu2 && mu2)
    throw input_error("special index j=" + std::to_string(j) + " takes no mu2");
  if (needs_mu2 && !odd_positive_integer(*mu2))
    throw input_error("mu2 must be an odd positive integer, got " + rat_str(*mu2));

  // 1-based slots replaced by half-odd values.
  std::vector<int> replaced;
  if (j == 1)
    replaced = {h + 1};
  else if (j <= h)
    replaced = {h - j + 2, h - j + 3};
  else
    replaced = {2};
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int slot = static_cast<int>(i) + 1;
    const bool is_replaced =
        std::find(replaced.begin(), replaced.end(), slot) != replaced.end();
    if (is_replaced) {
      if (m[i] != 0)
        throw input_error("replaced label m_" + std::to_string(slot) +
                          " must be given as 0, got " + rat_str(m[i]));
    } else if (slot == 1 && j == h + 1) {
      if (m[i] != 0 && !positive_integer(m[i]))
        throw input_error("label m_1 must be a nonnegative integer, got " +
                          rat_str(m[i]));
    } else if (!positive_integer(m[i])) {
      throw input_error("label m_" + std::to_string(slot) +
                        " must be a positive integer, got " + rat_str(m[i]));
    }
  }

  std::vector<Rat> mm = m;
  mm[replaced[0] - 1] = mu / 2;
  if (replaced.size() == 2) mm[replaced[1] - 1] = *mu2 / 2;

  Multiplet mult;
  mult.spec = spec;
  mult.labels = mm;
  mult.j = j;
  mult.mu = mu;
  if (mu2) mult.mu2 = *mu2;

  const std::vector<Rat> n = full_n(spec, mm);
  const Signature lo = slot_signature(spec, n, j, Branch::minus);
  const Signature hi = slot_signature(spec, n, j, Branch::plus);

  if (lo.nlab == hi.nlab && lo.c == hi.c) {
    // Doubly reduced: the pair collapses onto the mirror axis and the single
    // compactly restricted ER is irreducible.
    mult.kind = MultipletKind::singlet;
    MultipletNode node;
    node.pos = {j, Branch::zero};
    node.sig = lo;
    node.sig.eps = 0;
    node.relevant = true;
    node.aliases = {{j, Branch::minus}, {j, Branch::plus}};
    node.tags = {"physically-relevant", "singleton", "irreducible"};
    mult.nodes.push_back(std::move(node));
    return mult;
  }

  mult.kind = MultipletKind::special;
  MultipletNode lo_node, hi_node;
  lo_node.pos = {j, Branch::minus};
  lo_node.sig = lo;
  lo_node.relevant = true;
  lo_node.aliases = {lo_node.pos};
  lo_node.tags = {"physically-relevant"};
  hi_node.pos = {j, Branch::plus};
  hi_node.sig = hi;
  hi_node.relevant = true;
  hi_node.aliases = {hi_node.pos};
  hi_node.tags = {"physically-relevant"};
  if (j == 1) tag_node(lo_node, "finite-dim-content");
  mult.nodes.push_back(std::move(lo_node));
  mult.nodes.push_back(std::move(hi_node));

  // The one invariant differential operator of the pair: degree 2|c_j|
  // along e1 (the shortest noncompact root), which is also the degeneration
  // of the Knapp-Stein operator G^+_j.
  const RootSystem rs = RootSystem::make(spec.n_total());
  Root e1;
  e1.e.assign(spec.rank, 0);
  e1.e[0] = 1;
  const Rat degree = 2 * abs(lo.c);
  if (!positive_integer(degree))
    throw verify_error("special pair degree " + rat_str(degree) +
                       " is not a positive integer");
  const Weight ws = weight_from_signature(lo);
  const Weight wd = weight_from_signature(hi);
  for (std::size_t i = 0; i < ws.size(); ++i)
    if (ws[i] - wd[i] != degree * Rat(e1.e[i]))
      throw verify_error("special pair weights do not differ by " +
                         rat_str(degree) + "*e1");
  if (rs.pairing(ws, e1) != degree)
    throw verify_error("special pair: BGG pairing " + rat_str(rs.pairing(ws, e1)) +
                       " differs from degree " + rat_str(degree));

  MultipletArrow diff;
  diff.src = {j, Branch::minus};
  diff.dst = {j, Branch::plus};
  diff.kind = ArrowKind::differential;
  diff.name = "d_" + std::to_string(j);
  diff.root = e1;
  diff.degree = degree;
  mult.arrows.push_back(diff);

  MultipletArrow gp;
  gp.src = {j, Branch::minus};
  gp.dst = {j, Branch::plus};
  gp.kind = ArrowKind::knapp_stein;
  gp.name = "G^+_" + std::to_string(j);
  gp.degenerate = true;
  gp.root = e1;
  gp.degree = degree;
  mult.arrows.push_back(gp);

  MultipletArrow gm;
  gm.src = {j, Branch::plus};
  gm.dst = {j, Branch::minus};
  gm.kind = ArrowKind::knapp_stein;
  gm.name = "G^-_" + std::to_string(j);
  mult.arrows.push_back(gm);
  return mult;
}

Multiplet singlet(const AlgebraSpec& spec, const Rat& mu, const std::vector<Rat>& tail) {
  const int h = spec.h;
  if (spec.odd()) {
    if (static_cast<int>(tail.size()) != h - 1)
      throw input_error("odd singlet tail needs " + std::to_string(h - 1) +
                        " labels, got " + std::to_string(tail.size()));
    std::vector<Rat> m(h + 1, Rat(0));
    for (int i = 0; i < h - 1; ++i) m[i + 2] = tail[i];
    return special_reduced(spec, h + 1, mu, std::nullopt, m);
  }
  if (!positive_integer(mu))
    throw input_error("even singlet label must be a positive integer, got " +
                      rat_str(mu));
  if (static_cast<int>(tail.size()) != h - 2)
    throw input_error("even singlet tail needs " + std::to_string(h - 2) +
                      " labels, got " + std::to_string(tail.size()));
  for (std::size_t i = 0; i < tail.size(); ++i)
    if (!positive_integer(tail[i]))
      throw input_error("even singlet tail labels must be positive integers; entry " +
                        std::to_string(i + 1) + " is " + rat_str(tail[i]));
  Multiplet mult;
  mult.spec = spec;
  mult.kind = MultipletKind::singlet;
  std::vector<Rat> mlab;
  mlab.push_back(mu);
  mlab.push_back(mu);
  mlab.insert(mlab.end(), tail.begin(), tail.end());
  MultipletNode node;
  node.pos = {h, Branch::zero};
  node.sig.parity = spec.parity;
  node.sig.nlab = n_from_m(spec.parity, mlab);
  node.sig.eps = 0;
  node.sig.c = 0;
  node.relevant = true;
  node.aliases = {{h, Branch::minus},
                  {h, Branch::plus},
                  {h + 1, Branch::minus},
                  {h + 1, Branch::plus}};
  node.tags = {"physically-relevant", "singleton", "irreducible"};
  mult.labels = mlab;  // the h M-labels; there is no h+1 defining tuple here
  mult.nodes.push_back(std::move(node));
  return mult;
}

std::vector<std::string> validate_multiplet(const Multiplet& mult) {
  std::vector<std::string> violations;
  const RootSystem rs = RootSystem::make(mult.spec.n_total());
  for (const auto& arrow : mult.arrows) {
    const std::string label = arrow.name + " (" + node_id(arrow.src) + " -> " +
                              node_id(arrow.dst) + ")";
    const MultipletNode* src = nullptr;
    const MultipletNode* dst = nullptr;
    for (const auto& node : mult.nodes) {
      if (node.pos == arrow.src) src = &node;
      if (node.pos == arrow.dst) dst = &node;
    }
    if (!src || !dst) {
      violations.push_back(label + ": dangling endpoint");
      continue;
    }
    if (arrow.kind == ArrowKind::differential || arrow.degenerate) {
      if (!arrow.root || !arrow.degree) {
        violations.push_back(label + ": missing root or degree");
        continue;
      }
      if (!positive_integer(*arrow.degree)) {
        violations.push_back(label + ": degree " + rat_str(*arrow.degree) +
                             " is not a positive integer");
        continue;
      }
      if (!rs.is_positive_root(*arrow.root) || rs.is_compact(*arrow.root)) {
        violations.push_back(label + ": root " + root_str(*arrow.root) +
                             " is not noncompact positive");
        continue;
      }
      const Weight ws = weight_from_signature(src->sig);
      const Weight wd = weight_from_signature(dst->sig);
      if (rs.pairing(ws, *arrow.root) != *arrow.degree)
        violations.push_back(label + ": BGG pairing " +
                             rat_str(rs.pairing(ws, *arrow.root)) +
                             " differs from degree " + rat_str(*arrow.degree));
      for (std::size_t i = 0; i < ws.size(); ++i)
        if (ws[i] - wd[i] != *arrow.degree * Rat(arrow.root->e[i])) {
          violations.push_back(label + ": endpoint weights do not differ by degree*root");
          break;
        }
    }
    if (arrow.kind == ArrowKind::knapp_stein && src->sig.c != -dst->sig.c)
      violations.push_back(label + ": Knapp-Stein endpoints have c " +
                           rat_str(src->sig.c) + " and " + rat_str(dst->sig.c) +
                           ", expected opposite values");
  }
  // The differential part must be acyclic: arrows always lower the weight.
  for (const auto& arrow : mult.arrows) {
    if (arrow.kind != ArrowKind::differential) continue;
    const Rat cs = mult.node_at(arrow.src).sig.c;
    const Rat cd = mult.node_at(arrow.dst).sig.c;
    if (cs >= cd)
      violations.push_back(arrow.name + ": differential arrow does not increase c (" +
                           rat_str(cs) + " -> " + rat_str(cd) + ")");
  }
  return violations;
}

std::vector<RelevantRow> relevant_summary(const AlgebraSpec& spec,
                                          const std::vector<Rat>& mlab) {
  if (static_cast<int>(mlab.size()) != spec.h)
    throw input_error("relevant summary needs the " + std::to_string(spec.h) +
                      " labels of so(p-1,q-1), got " + std::to_string(mlab.size()));
  for (std::size_t i = 0; i < mlab.size(); ++i)
    if (!positive_integer(mlab[i]))
      throw input_error("summary labels must be positive integers; label " +
                        std::to_string(i + 1) + " is " + rat_str(mlab[i]));
  const int h = spec.h;
  std::vector<RelevantRow> rows;
  for (int j = 1; j <= h + 1; ++j) {
    const int slot = h + 2 - j;  // 1-based zeroed position of the defining tuple
    std::vector<Rat> m;
    m.reserve(h + 1);
    for (int s = 1; s <= h + 1; ++s) {
      if (s < slot)
        m.push_back(mlab[s - 1]);
      else if (s == slot)
        m.push_back(0);
      else
        m.push_back(mlab[s - 2]);
    }
    const Multiplet red = reduced_multiplet(spec, slot, m);
    std::vector<const MultipletNode*> starred;
    for (const auto& node : red.nodes)
      if (node.relevant) starred.push_back(&node);
    std::sort(starred.begin(), starred.end(),
              [](const MultipletNode* a, const MultipletNode* b) {
                return a->sig.c < b->sig.c;
              });
    for (const auto* node : starred) {
      RelevantRow row;
      row.j = j;
      row.sig = node->sig;
      row.d = conformal_weight(node->sig, spec);
      const auto [dp, dm] = d_plus_minus(node->sig, spec);
      row.d_plus_bound = dp;
      row.d_minus_bound = dm;
      row.singlet = node->pos.branch == Branch::zero;
      row.source_reduced_j = slot;
      rows.push_back(std::move(row));
    }
  }
  if (!spec.odd()) {
    // The last reduction: zeroing the first summary label collapses the two
    // half-odd rows into the self-conjugate singlet [m_2, m_2, m_3, ...; 0].
    RelevantRow row;
    row.j = 0;
    row.sig.parity = spec.parity;
    std::vector<Rat> labels;
    labels.push_back(mlab[1]);
    labels.push_back(mlab[1]);
    for (int i = 2; i < h; ++i) labels.push_back(mlab[i]);
    row.sig.nlab = n_from_m(spec.parity, labels);
    row.sig.eps = 0;
    row.sig.c = 0;
    row.d = conformal_weight(row.sig, spec);
    row.d_plus_bound = row.d;
    row.d_minus_bound = row.d;
    row.singlet = true;
    row.source_reduced_j = 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

// Calls fn for every tuple in {1..top}^slots (once with the empty tuple when
// slots = 0).
void for_each_grid(int slots, int top,
                   const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> tuple(slots, 1);
  while (true) {
    fn(tuple);
    int i = slots - 1;
    while (i >= 0 && tuple[i] == top) tuple[i--] = 1;
    if (i < 0) return;
    ++tuple[i];
  }
}

}  // namespace

SweepStats sweep_validate(int max_rank, int max_label) {
  if (max_rank < 2 || max_label < 1)
    throw input_error("sweep needs max_rank >= 2 and max_label >= 1");
  SweepStats stats;
  auto check = [&](const Multiplet& mult) {
    ++stats.multiplets;
    std::vector<std::string> v = validate_multiplet(mult);
    if (!v.empty()) {
      stats.violations += static_cast<long>(v.size());
      if (stats.messages.size() < 20)
        stats.messages.push_back(mult.spec.name() + " " + mult.kind_text() +
                                 " [" + join_rat(mult.labels, ",") + "]: " +
                                 v.front());
    }
  };
  std::vector<int> odd_mu;
  for (int v = 1; v <= 2 * max_label - 1; v += 2) odd_mu.push_back(v);

  for (int N = 5; N <= 2 * max_rank + 1; ++N) {
    if ((N % 2 ? (N - 1) / 2 : N / 2) > max_rank) continue;
    for (int q = 1; 2 * q <= N; ++q) {
      AlgebraSpec spec = AlgebraSpec::make(N - q, q);
      ++stats.algebras;
      const int l = spec.h + 1;
      const int h = spec.h;
      for_each_grid(l, max_label, [&](const std::vector<int>& g) {
        check(main_multiplet(spec, std::vector<Rat>(g.begin(), g.end())));
      });
      for (int j = 1; j <= l; ++j)
        for_each_grid(l - 1, max_label, [&](const std::vector<int>& g) {
          std::vector<Rat> m(g.begin(), g.end());
          m.insert(m.begin() + (j - 1), Rat(0));
          check(reduced_multiplet(spec, j, m));
        });
      if (spec.odd()) {
        for (int mu : odd_mu)
          for_each_grid(h, max_label, [&](const std::vector<int>& g) {
            std::vector<Rat> m(g.begin(), g.end());
            m.push_back(Rat(0));  // slot h+1 replaced by mu/2
            check(special_reduced(spec, 1, Rat(mu), std::nullopt, m));
          });
        for (int j = 2; j <= h; ++j)
          for (int mu : odd_mu)
            for (int mu2 : odd_mu)
              for_each_grid(l - 2, max_label, [&](const std::vector<int>& g) {
                std::vector<Rat> m(g.begin(), g.end());
                // slots h-j+2 and h-j+3 replaced by mu/2, mu2/2
                m.insert(m.begin() + (h - j + 1), {Rat(0), Rat(0)});
                check(special_reduced(spec, j, Rat(mu), Rat(mu2), m));
              });
        for (int mu : odd_mu)
          for (int first = 0; first <= max_label; ++first)
            for_each_grid(l - 2, max_label, [&](const std::vector<int>& g) {
              std::vector<Rat> m;
              m.push_back(Rat(first));  // 0 collapses to the singlet
              m.push_back(Rat(0));      // slot 2 replaced by mu/2
              m.insert(m.end(), g.begin(), g.end());
              check(special_reduced(spec, h + 1, Rat(mu), std::nullopt, m));
            });
        for (int mu : odd_mu)
          for_each_grid(h - 1, max_label, [&](const std::vector<int>& g) {
            check(singlet(spec, Rat(mu), std::vector<Rat>(g.begin(), g.end())));
          });
      } else {
        for (int mu = 1; mu <= max_label; ++mu)
          for_each_grid(h - 2, max_label, [&](const std::vector<int>& g) {
            check(singlet(spec, Rat(mu), std::vector<Rat>(g.begin(), g.end())));
          });
      }
    }
  }
  return stats;
}

}  // namespace sopq
