#ifndef SOPQ_CLASSIFY_HPP
#define SOPQ_CLASSIFY_HPP

// Classification of the distinguished elementary representations of so(p,q):
// finite-dimensional content, (limits of) holomorphic discrete series, first
// reduction points, discrete points below them, minimal irreps with their
// cutting operators, and the h=1 singletons.  Each entry instantiates a
// closed-form signature family at the given Dynkin labels; every d satisfies
// d = c + (p+q-2)/2 exactly.

#include "sopq/algebra.hpp"
#include "sopq/multiplet.hpp"
#include "sopq/rational.hpp"
#include "sopq/rootsys.hpp"
#include "sopq/signature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sopq {

// A classified representation: which multiplet family it sits in (main,
// reduced or special), its position chi^branch_k, signature and conformal
// weight.  nu is the series parameter for enumerated families.
struct ClassNode {
  MultipletKind family = MultipletKind::main;
  NodePos pos;
  Signature sig;
  Rat d;
  std::optional<int> nu;
  std::vector<std::string> tags;
};

// "rchi^-_2", "schi^0_3", "chi^+_1" — family-prefixed node name.
std::string class_node_id(MultipletKind family, const NodePos& pos);

struct CuttingOp {
  Root root;
  Rat degree;
};

// A minimal irrep: the kernel of the listed differential operators,
// intersected with ker G^+ when ks_condition is set.  ks_degeneration
// records a Knapp-Stein operator that degenerates to (a multiple of) a
// differential operator; ks_name names the KS operator involved.
struct MinimalEntry {
  ClassNode node;
  std::vector<CuttingOp> cutting_ops;
  bool ks_condition = false;
  std::string ks_name;
  std::optional<CuttingOp> ks_degeneration;
};

struct FiniteDimEntry {
  ClassNode node;                // chi^-_1 of the main multiplet
  std::vector<Rat> signature;    // (m_1 .. m_{h+1})
  Int dimension;                 // Weyl dimension of that irrep
};

struct ClassificationReport {
  AlgebraSpec spec;
  std::vector<Rat> labels;
  int nu_range = 5;
  bool discrete_series_allowed = true;  // pq even (automatic when p+q is odd)
  bool holomorphic_split = false;       // p > q = 2: holomorphic + antiholomorphic pair
  FiniteDimEntry finite_dim;
  std::vector<ClassNode> discrete_series;  // nu = 1 .. nu_range
  std::vector<ClassNode> nonholomorphic;   // containers chi^+_k, nodes only
  std::vector<ClassNode> limits;           // nu = 0 limit rows
  std::vector<ClassNode> frp;              // first reduction points
  std::vector<ClassNode> below_frp;        // discrete points below the FRPs
  std::vector<MinimalEntry> minimal;
  std::vector<ClassNode> singletons;       // nonempty exactly when h = 1, odd
};

// Classify the representations attached to main-regime labels (h+1 positive
// integers).  nu_range >= 1 truncates the enumerated series.
ClassificationReport classify(const AlgebraSpec& spec, const std::vector<Rat>& labels,
                              int nu_range = 5);

// Dimension of the finite-dimensional so(p+q,C) irrep whose h+1 Dynkin
// labels (in the multiplet normalization, all >= 1) are given; exact Weyl
// product.  All labels 1 gives the trivial representation.
Int weyl_dimension_labels(const AlgebraSpec& spec, const std::vector<Rat>& labels);

}  // namespace sopq

#endif
