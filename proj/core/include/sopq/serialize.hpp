#ifndef SOPQ_SERIALIZE_HPP
#define SOPQ_SERIALIZE_HPP

// External views of the computed objects.  All emitters are deterministic:
// fixed field order, exact rationals in canonical text form, no locale
// dependence.  multiplet_from_json inverts multiplet_json exactly, so
// parse-then-reemit is byte-identical.

#include "sopq/classify.hpp"
#include "sopq/multiplet.hpp"

#include <string>
#include <vector>

namespace sopq {

// { "spec": {"p","q"}, "kind", "labels", "nodes": [...], "arrows": [...] }
// Node fields: id, mlabels (canonical rational strings), c, d, eps, tags.
// Arrow fields: src, dst, kind ("differential"/"knapp_stein"), name, and,
// when the operator is differential or a degenerate Knapp-Stein operator,
// root ("e1-e3" form) and degree (positive integer).
std::string multiplet_json(const Multiplet& mult);

// Inverse of multiplet_json.  Throws input_error on malformed or
// inconsistent input (every node is re-checked against d = c + (p+q-2)/2 and
// the whole graph against the BGG arrow conditions).
Multiplet multiplet_from_json(const std::string& text);

// Graphviz digraph, mirror layout: the k-th shadow pair is forced into one
// rank so the minus and plus branches face each other.  Differential arrows
// are solid and labelled "name: root, degree"; Knapp-Stein arrows are dotted
// (dashed when degenerate, with the differential operator they reduce to).
std::string multiplet_dot(const Multiplet& mult);

// Aligned-column node and arrow listing.
std::string multiplet_text(const Multiplet& mult);

// The physically-relevant reduced-pair summary for M-labels mlab.
std::string summary_json(const AlgebraSpec& spec, const std::vector<Rat>& mlab,
                         const std::vector<RelevantRow>& rows);
std::string summary_text(const AlgebraSpec& spec, const std::vector<Rat>& mlab,
                         const std::vector<RelevantRow>& rows);

// The classification report: one JSON object with one array per section, and
// an aligned-column text table with one row per classified representation.
std::string classification_json(const ClassificationReport& rep);
std::string classification_text(const ClassificationReport& rep);

}  // namespace sopq

#endif
