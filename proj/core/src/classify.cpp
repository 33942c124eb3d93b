#include "sopq/classify.hpp"

#include <utility>

namespace sopq {

namespace {

bool positive_integer(const Rat& r) { return is_integer(r) && r >= 1; }

// Signature from displayed M-labels (the bracket form) and c.  For even
// parity the plus branch stores the conjugated tuple (first n-label
// negated); c = 0 lands on the self-conjugate zero branch.
Signature from_display(const AlgebraSpec& spec, const std::vector<Rat>& display,
                       const Rat& c, Branch branch) {
  Signature s;
  s.parity = spec.parity;
  s.c = c;
  s.nlab = n_from_m(spec.parity, display);
  if (spec.odd()) {
    s.eps = 0;
  } else if (c == 0) {
    s.eps = 0;
  } else {
    s.eps = branch == Branch::plus ? +1 : -1;
    if (s.eps > 0) s.nlab.front() = -s.nlab.front();
  }
  return s;
}

Branch branch_for(const Rat& c, Branch nominal) {
  return c == 0 ? Branch::zero : nominal;
}

ClassNode make_node(const AlgebraSpec& spec, MultipletKind family, int k,
                    Branch nominal, const std::vector<Rat>& display, const Rat& d,
                    std::vector<std::string> tags, std::optional<int> nu = {}) {
  const Rat c = d - spec.half_dim_n();
  const Branch br = branch_for(c, nominal);
  ClassNode node;
  node.family = family;
  node.pos = {k, br};
  node.sig = from_display(spec, display, c, br);
  node.d = d;
  node.nu = nu;
  node.tags = std::move(tags);
  return node;
}

Root eps_first_minus(int rank, int j) {  // e_1 - e_j (1 < j <= rank)
  Root r;
  r.e.assign(rank, 0);
  r.e[0] = 1;
  r.e[j - 1] = -1;
  return r;
}

Root eps_first_plus(int rank, int j) {  // e_1 + e_j
  Root r;
  r.e.assign(rank, 0);
  r.e[0] = 1;
  r.e[j - 1] = 1;
  return r;
}

Root eps_first(int rank) {  // e_1
  Root r;
  r.e.assign(rank, 0);
  r.e[0] = 1;
  return r;
}

}  // namespace

std::string class_node_id(MultipletKind family, const NodePos& pos) {
  std::string prefix;
  switch (family) {
    case MultipletKind::main: prefix = ""; break;
    case MultipletKind::reduced: prefix = "r"; break;
    case MultipletKind::special: prefix = "s"; break;
    case MultipletKind::singlet: prefix = "sg"; break;
  }
  return prefix + node_id(pos);
}

Int weyl_dimension_labels(const AlgebraSpec& spec, const std::vector<Rat>& labels) {
  if (static_cast<int>(labels.size()) != spec.h + 1)
    throw input_error("need " + std::to_string(spec.h + 1) + " Dynkin labels");
  for (const Rat& m : labels)
    if (!positive_integer(m))
      throw input_error("finite-dimensional labels must be positive integers");
  const std::vector<Rat> n = n_from_m(spec.parity, labels);
  Weight lam_rho(n.rbegin(), n.rend());
  const RootSystem rs = RootSystem::make(spec.n_total());
  return rs.weyl_dimension(lam_rho);
}

ClassificationReport classify(const AlgebraSpec& spec, const std::vector<Rat>& labels,
                              int nu_range) {
  const int h = spec.h;
  if (static_cast<int>(labels.size()) != h + 1)
    throw input_error("need " + std::to_string(h + 1) + " Dynkin labels");
  for (const Rat& m : labels)
    if (!positive_integer(m))
      throw input_error("classification needs main-regime labels (positive integers)");
  if (nu_range < 1) throw input_error("nu_range must be >= 1");

  ClassificationReport rep;
  rep.spec = spec;
  rep.labels = labels;
  rep.nu_range = nu_range;
  rep.discrete_series_allowed = (spec.p * spec.q) % 2 == 0;
  rep.holomorphic_split = spec.q == 2 && spec.p > 2;

  const int rank = spec.rank;
  const bool odd = spec.odd();

  // Heads of the series formulas, all in the displayed labels:
  // odd  d = h + (m_1+1)/2 + m_{2,h} + nu;  even  d = h + m_12/2 + m_{3,h} + nu.
  std::vector<Rat> head(labels.begin(), labels.end() - 1);  // m_1 .. m_h
  Rat d_limit = Rat(h);
  if (odd) {
    d_limit += (head[0] + 1) / 2;
    for (int i = 1; i < h; ++i) d_limit += head[i];
  } else {
    d_limit += (head[0] + head[1]) / 2;
    for (int i = 2; i < h; ++i) d_limit += head[i];
  }

  // Finite-dimensional content: chi^-_1 of the main multiplet.
  {
    Multiplet mm = main_multiplet(spec, labels);
    const MultipletNode& n1 = mm.node_at({1, Branch::minus});
    ClassNode node;
    node.family = MultipletKind::main;
    node.pos = n1.pos;
    node.sig = n1.sig;
    node.d = conformal_weight(n1.sig, spec);
    node.tags = {"finite-dim-content"};
    rep.finite_dim.node = std::move(node);
    rep.finite_dim.signature = labels;
    rep.finite_dim.dimension = weyl_dimension_labels(spec, labels);

    // Non-holomorphic discrete series containers chi^+_k, nodes only.
    const int kmax = rep.discrete_series_allowed ? (odd ? h : h + 1) : 1;
    for (int k = 2; k <= kmax; ++k) {
      const MultipletNode& nk = mm.node_at({k, Branch::plus});
      ClassNode cont;
      cont.family = MultipletKind::main;
      cont.pos = nk.pos;
      cont.sig = nk.sig;
      cont.d = conformal_weight(nk.sig, spec);
      cont.tags = {"discrete-series", "non-holomorphic-container"};
      rep.nonholomorphic.push_back(std::move(cont));
    }
  }

  // (Limits of) holomorphic discrete series in chi^+_1.
  if (rep.discrete_series_allowed) {
    for (int nu = 1; nu <= nu_range; ++nu)
      rep.discrete_series.push_back(make_node(spec, MultipletKind::main, 1,
                                              Branch::plus, head, d_limit + nu,
                                              {"discrete-series"}, nu));
    rep.limits.push_back(make_node(spec, MultipletKind::reduced, 1, Branch::plus,
                                   head, d_limit, {"limit"}, 0));
  }

  // First reduction points.
  auto ones = [&](int count) { return std::vector<Rat>(count, Rat(1)); };
  const Rat half = frac(1, 2);
  if (odd) {
    if (labels[0] >= 3)
      rep.frp.push_back(make_node(spec, MultipletKind::main, h + 1, Branch::plus,
                                  head, Rat(h) + labels[0] / 2 - half, {"FRP"}));
    std::vector<Rat> one_head = head, two_head = head;
    if (!one_head.empty()) one_head[0] = 1;
    if (!two_head.empty()) two_head[0] = 2;
    rep.frp.push_back(make_node(spec, MultipletKind::reduced, h, Branch::minus,
                                one_head, Rat(h), {"FRP"}));
    rep.frp.push_back(make_node(spec, MultipletKind::reduced, h + 1, Branch::zero,
                                two_head, Rat(h) + frac(1, 2), {"FRP"}));
  } else {
    if (labels[0] >= 2 && labels[1] >= 2)
      rep.frp.push_back(make_node(spec, MultipletKind::main, h, Branch::plus, head,
                                  Rat(h) + (labels[0] + labels[1]) / 2 - 1,
                                  {"FRP"}));
    if (labels[0] >= 3) {
      std::vector<Rat> disp = head;
      disp[1] = 1;
      rep.frp.push_back(make_node(spec, MultipletKind::main, h + 1, Branch::minus,
                                  disp, Rat(h) + (labels[0] - 3) / 2, {"FRP"}));
    }
    if (labels[1] >= 3) {
      std::vector<Rat> disp = head;
      disp[0] = 1;
      rep.frp.push_back(make_node(spec, MultipletKind::main, h + 1, Branch::plus,
                                  disp, Rat(h) + (labels[1] - 3) / 2, {"FRP"}));
    }
    std::vector<Rat> t11 = head, t21 = head, t12 = head;
    t11[0] = 1; t11[1] = 1;
    t21[0] = 2; t21[1] = 1;
    t12[0] = 1; t12[1] = 2;
    rep.frp.push_back(make_node(spec, MultipletKind::reduced, h - 1, Branch::minus,
                                t11, Rat(h - 1), {"FRP"}));
    rep.frp.push_back(make_node(spec, MultipletKind::reduced, h, Branch::minus, t21,
                                Rat(h) - half, {"FRP"}));
    rep.frp.push_back(make_node(spec, MultipletKind::reduced, h + 1, Branch::minus,
                                t12, Rat(h) - half, {"FRP"}));
  }

  // Discrete points below the FRPs.
  if (odd) {
    for (int j = 1; j <= h - 1; ++j)
      rep.below_frp.push_back(make_node(spec, MultipletKind::reduced, j,
                                        Branch::minus, ones(h), Rat(j),
                                        {"below-FRP", "minimal"}));
    std::vector<Rat> disp = head;
    disp[0] = 1;
    rep.below_frp.push_back(make_node(spec, MultipletKind::special, h,
                                      Branch::minus, disp, Rat(h) - half,
                                      {"below-FRP"}));
    for (int k = 1; k <= nu_range; ++k) {
      disp[0] = 2 * k + 1;
      rep.below_frp.push_back(make_node(spec, MultipletKind::special, h + 1,
                                        Branch::minus, disp, Rat(h) - half,
                                        {"below-FRP"}, k));
      disp[0] = 2 * k;
      rep.below_frp.push_back(make_node(spec, MultipletKind::special, h + 1,
                                        Branch::minus, disp, Rat(h),
                                        {"below-FRP"}, k));
    }
  } else {
    for (int j = 1; j <= h - 2; ++j)
      rep.below_frp.push_back(make_node(spec, MultipletKind::reduced, j,
                                        Branch::minus, ones(h), Rat(j),
                                        {"below-FRP", "minimal"}));
  }

  // Minimal irreps with their cutting operators.
  auto push_minimal = [&](ClassNode node, std::vector<CuttingOp> ops, bool ks,
                          std::string ks_name, std::optional<CuttingOp> degen) {
    MinimalEntry entry;
    entry.node = std::move(node);
    entry.node.tags.push_back("minimal");
    entry.node.tags.push_back("physically-relevant");
    entry.cutting_ops = std::move(ops);
    entry.ks_condition = ks;
    entry.ks_name = std::move(ks_name);
    entry.ks_degeneration = std::move(degen);
    rep.minimal.push_back(std::move(entry));
  };

  if (odd) {
    for (int j = 1; j <= h - 1; ++j)
      push_minimal(make_node(spec, MultipletKind::reduced, j, Branch::minus,
                             ones(h), Rat(j), {}),
                   {{eps_first_minus(rank, j + 2), Rat(1)}}, true,
                   "G^+_" + std::to_string(j), {});
    push_minimal(
        make_node(spec, MultipletKind::reduced, h, Branch::minus, ones(h), Rat(h),
                  {"FRP"}),
        {{eps_first(rank), Rat(1)}}, false, "G^+_" + std::to_string(h),
        CuttingOp{eps_first(rank), Rat(1)});
    std::vector<Rat> two_ones = ones(h);
    two_ones[0] = 2;
    push_minimal(make_node(spec, MultipletKind::reduced, h + 1, Branch::zero,
                           two_ones, Rat(h) + half, {"FRP"}),
                 {{eps_first_plus(rank, h + 1), Rat(1)}}, false, "", {});

    for (int j = 1; j <= h; ++j)
      push_minimal(make_node(spec, MultipletKind::special, j, Branch::minus,
                             ones(h), Rat(j) - half, {}),
                   {{eps_first(rank), Rat(2 * (h + 1 - j))}}, false,
                   "G^+_" + std::to_string(j),
                   CuttingOp{eps_first(rank), Rat(2 * (h + 1 - j))});
    push_minimal(make_node(spec, MultipletKind::special, h + 1, Branch::minus,
                           two_ones, Rat(h), {}),
                 {{eps_first(rank), Rat(1)}}, false,
                 "G^+_" + std::to_string(h + 1),
                 CuttingOp{eps_first(rank), Rat(1)});
  } else {
    for (int j = 1; j <= h - 2; ++j)
      push_minimal(make_node(spec, MultipletKind::reduced, j, Branch::minus,
                             ones(h), Rat(j), {}),
                   {{eps_first_minus(rank, j + 2), Rat(1)}}, true,
                   "G^+_" + std::to_string(j), {});
    push_minimal(make_node(spec, MultipletKind::reduced, h - 1, Branch::minus,
                           ones(h), Rat(h - 1), {"FRP"}),
                 {{eps_first_minus(rank, h + 1), Rat(1)},
                  {eps_first_plus(rank, h + 1), Rat(1)}},
                 true, "G^+_" + std::to_string(h - 1), {});
    std::vector<Rat> t21 = ones(h), t12 = ones(h);
    t21[0] = 2;
    t12[0] = 1;
    if (h >= 2) t12[1] = 2;
    push_minimal(make_node(spec, MultipletKind::reduced, h, Branch::minus, t21,
                           Rat(h) - half, {"FRP"}),
                 {{eps_first_plus(rank, h + 1), Rat(2)}}, false,
                 "G^+_" + std::to_string(h),
                 CuttingOp{eps_first_plus(rank, h + 1), Rat(1)});
    push_minimal(make_node(spec, MultipletKind::reduced, h + 1, Branch::minus, t12,
                           Rat(h) - half, {"FRP"}),
                 {{eps_first_minus(rank, h + 1), Rat(2)}}, false,
                 "G^+_" + std::to_string(h + 1),
                 CuttingOp{eps_first_minus(rank, h + 1), Rat(1)});
  }

  // Singletons: the last two special-reduced minimal cases at h = 1.
  if (odd && h == 1) {
    ClassNode a = make_node(spec, MultipletKind::special, 1, Branch::minus, ones(1),
                            half, {"singleton"});
    std::vector<Rat> two = {Rat(2)};
    ClassNode b = make_node(spec, MultipletKind::special, 2, Branch::minus, two,
                            Rat(1), {"singleton"});
    rep.singletons.push_back(std::move(a));
    rep.singletons.push_back(std::move(b));
  }

  return rep;
}

}  // namespace sopq
