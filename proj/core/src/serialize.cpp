#include "sopq/serialize.hpp"

#include "sopq/signature.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace sopq {

namespace {

using Json = nlohmann::ordered_json;

Json rat_array(const std::vector<Rat>& v) {
  Json arr = Json::array();
  for (const Rat& r : v) arr.push_back(rat_str(r));
  return arr;
}

std::vector<Rat> rat_array_parse(const Json& arr) {
  if (!arr.is_array()) throw input_error("expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& item : arr) {
    if (!item.is_string()) throw input_error("expected a rational string");
    out.push_back(rat_parse(item.get<std::string>()));
  }
  return out;
}

Rat rat_field(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_string())
    throw input_error(std::string("missing rational field '") + key + "'");
  return rat_parse(obj[key].get<std::string>());
}

NodePos pos_parse(const std::string& id) {
  // "chi^-_1", "chi^0_2", "chi^+_3"
  if (id.size() < 7 || id.compare(0, 4, "chi^") != 0 || id[5] != '_')
    throw input_error("malformed node id '" + id + "'");
  NodePos pos;
  switch (id[4]) {
    case '-': pos.branch = Branch::minus; break;
    case '0': pos.branch = Branch::zero; break;
    case '+': pos.branch = Branch::plus; break;
    default: throw input_error("malformed node id '" + id + "'");
  }
  try {
    pos.k = std::stoi(id.substr(6));
  } catch (const std::exception&) {
    throw input_error("malformed node id '" + id + "'");
  }
  if (pos.k < 1) throw input_error("malformed node id '" + id + "'");
  return pos;
}

long integer_degree(const Rat& degree) {
  if (!is_integer(degree) || degree < 1)
    throw verify_error("arrow degree " + rat_str(degree) +
                       " is not a positive integer");
  return degree.get_num().get_si();
}

// "main" | "reduced(j)" | "special(j,mu[,mu2])" | "singlet"
void kind_parse(const std::string& text, Multiplet& mult) {
  auto args_of = [&](const std::string& prefix) -> std::vector<std::string> {
    std::string inner = text.substr(prefix.size() + 1,
                                    text.size() - prefix.size() - 2);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = inner.find(',', start);
      parts.push_back(inner.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return parts;
  };
  try {
    if (text == "main") {
      mult.kind = MultipletKind::main;
    } else if (text == "singlet") {
      mult.kind = MultipletKind::singlet;
    } else if (text.starts_with("reduced(") && text.ends_with(")")) {
      mult.kind = MultipletKind::reduced;
      mult.j = std::stoi(args_of("reduced")[0]);
    } else if (text.starts_with("special(") && text.ends_with(")")) {
      mult.kind = MultipletKind::special;
      auto args = args_of("special");
      if (args.size() < 2 || args.size() > 3)
        throw input_error("malformed kind '" + text + "'");
      mult.j = std::stoi(args[0]);
      mult.mu = rat_parse(args[1]);
      if (args.size() == 3) mult.mu2 = rat_parse(args[2]);
    } else {
      throw input_error("unknown multiplet kind '" + text + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw input_error(e.what());
  }
}

const char* arrow_kind_text(ArrowKind kind) {
  return kind == ArrowKind::differential ? "differential" : "knapp_stein";
}

std::string cutting_op_text(const CuttingOp& op) {
  return "D^" + rat_str(op.degree) + "(" + root_str(op.root) + ")";
}

Json class_node_json(const ClassNode& node) {
  Json obj;
  obj["id"] = class_node_id(node.family, node.pos);
  obj["signature"] = signature_text(node.sig);
  obj["c"] = rat_str(node.sig.c);
  obj["d"] = rat_str(node.d);
  if (node.nu) obj["nu"] = *node.nu;
  obj["tags"] = node.tags;
  return obj;
}

Json cutting_op_json(const CuttingOp& op) {
  Json obj;
  obj["root"] = root_str(op.root);
  obj["degree"] = integer_degree(op.degree);
  return obj;
}

// Column-aligned table: rows of cells, left-justified except where a cell
// starts with a digit or sign (numeric columns read better right-aligned in
// mixed tables, but rationals of different widths do not, so everything is
// left-justified for determinism).
std::string align_table(const std::vector<std::vector<std::string>>& rows,
                        const std::string& indent) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.resize(i + 1, 0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line = indent;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size())
        line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace

std::string multiplet_json(const Multiplet& mult) {
  Json doc;
  doc["spec"] = Json{{"p", mult.spec.p}, {"q", mult.spec.q}};
  doc["kind"] = mult.kind_text();
  doc["labels"] = rat_array(mult.labels);
  Json nodes = Json::array();
  for (const MultipletNode& node : mult.nodes) {
    Json obj;
    obj["id"] = node_id(node.pos);
    obj["mlabels"] = rat_array(node.sig.mlabels());
    obj["c"] = rat_str(node.sig.c);
    obj["d"] = rat_str(conformal_weight(node.sig, mult.spec));
    obj["eps"] = node.sig.eps;
    obj["tags"] = node.tags;
    nodes.push_back(std::move(obj));
  }
  doc["nodes"] = std::move(nodes);
  Json arrows = Json::array();
  for (const MultipletArrow& arrow : mult.arrows) {
    Json obj;
    obj["src"] = node_id(arrow.src);
    obj["dst"] = node_id(arrow.dst);
    obj["kind"] = arrow_kind_text(arrow.kind);
    obj["name"] = arrow.name;
    if (arrow.root) obj["root"] = root_str(*arrow.root);
    if (arrow.degree) obj["degree"] = integer_degree(*arrow.degree);
    arrows.push_back(std::move(obj));
  }
  doc["arrows"] = std::move(arrows);
  return doc.dump(2) + "\n";
}

Multiplet multiplet_from_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("invalid JSON: ") + e.what());
  }
  try {
    Multiplet mult;
    mult.spec = AlgebraSpec::make(doc.at("spec").at("p").get<int>(),
                                  doc.at("spec").at("q").get<int>());
    kind_parse(doc.at("kind").get<std::string>(), mult);
    mult.labels = rat_array_parse(doc.at("labels"));
    for (const Json& obj : doc.at("nodes")) {
      MultipletNode node;
      node.pos = pos_parse(obj.at("id").get<std::string>());
      node.sig.parity = mult.spec.parity;
      node.sig.nlab = n_from_m(mult.spec.parity, rat_array_parse(obj.at("mlabels")));
      node.sig.eps = obj.at("eps").get<int>();
      node.sig.c = rat_field(obj, "c");
      if (rat_field(obj, "d") != conformal_weight(node.sig, mult.spec))
        throw input_error("node " + node_id(node.pos) +
                          ": d does not equal c + (p+q-2)/2");
      node.tags = obj.at("tags").get<std::vector<std::string>>();
      node.relevant = std::find(node.tags.begin(), node.tags.end(),
                                "physically-relevant") != node.tags.end();
      node.aliases = {node.pos};
      mult.nodes.push_back(std::move(node));
    }
    for (const Json& obj : doc.at("arrows")) {
      MultipletArrow arrow;
      arrow.src = pos_parse(obj.at("src").get<std::string>());
      arrow.dst = pos_parse(obj.at("dst").get<std::string>());
      const std::string kind = obj.at("kind").get<std::string>();
      if (kind == "differential")
        arrow.kind = ArrowKind::differential;
      else if (kind == "knapp_stein")
        arrow.kind = ArrowKind::knapp_stein;
      else
        throw input_error("unknown arrow kind '" + kind + "'");
      arrow.name = obj.at("name").get<std::string>();
      if (obj.contains("root"))
        arrow.root = root_parse(obj.at("root").get<std::string>(), mult.spec.rank);
      if (obj.contains("degree")) arrow.degree = Rat(obj.at("degree").get<long>());
      if (arrow.kind == ArrowKind::differential && (!arrow.root || !arrow.degree))
        throw input_error("differential arrow " + arrow.name +
                          " needs both root and degree");
      arrow.degenerate = arrow.kind == ArrowKind::knapp_stein && arrow.root.has_value();
      mult.arrows.push_back(std::move(arrow));
    }
    std::vector<std::string> violations = validate_multiplet(mult);
    if (!violations.empty())
      throw input_error("inconsistent multiplet: " + violations.front());
    return mult;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("invalid multiplet JSON: ") + e.what());
  }
}

std::string multiplet_dot(const Multiplet& mult) {
  std::string out;
  out += "digraph multiplet {\n";
  out += "  rankdir=LR;\n";
  out += "  labelloc=t;\n";
  out += "  label=\"" + mult.spec.name() + " " + mult.kind_text() + " [" +
         join_rat(mult.labels, ",") + "]\";\n";
  out += "  node [shape=box];\n";
  for (const MultipletNode& node : mult.nodes) {
    std::string title = node_id(node.pos);
    if (node.relevant) title += "*";
    out += "  \"" + node_id(node.pos) + "\" [label=\"" + title + "\\n" +
           signature_text(node.sig) + "\"];\n";
  }
  // Mirror layout: the two members of each shadow pair share a rank.
  int kmax = 0;
  for (const MultipletNode& node : mult.nodes) kmax = std::max(kmax, node.pos.k);
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::string> ids;
    for (const MultipletNode& node : mult.nodes)
      if (node.pos.k == k) ids.push_back(node_id(node.pos));
    if (ids.size() > 1) {
      out += "  { rank=same;";
      for (const std::string& id : ids) out += " \"" + id + "\";";
      out += " }\n";
    }
  }
  for (const MultipletArrow& arrow : mult.arrows) {
    std::string label = arrow.name;
    if (arrow.root && arrow.degree)
      label += ": " + root_str(*arrow.root) + ", " + rat_str(*arrow.degree);
    std::string style;
    if (arrow.kind == ArrowKind::knapp_stein)
      style = arrow.degenerate ? ", style=dashed" : ", style=dotted";
    out += "  \"" + node_id(arrow.src) + "\" -> \"" + node_id(arrow.dst) +
           "\" [label=\"" + label + "\"" + style + "];\n";
  }
  out += "}\n";
  return out;
}

std::string multiplet_text(const Multiplet& mult) {
  std::string out = mult.spec.name() + " " + mult.kind_text() + " [" +
                    join_rat(mult.labels, ",") + "]: " +
                    std::to_string(mult.nodes.size()) + " nodes, " +
                    std::to_string(mult.arrows.size()) + " arrows\n";
  std::vector<std::vector<std::string>> nodes;
  for (const MultipletNode& node : mult.nodes) {
    std::string tags;
    for (const std::string& tag : node.tags)
      tags += (tags.empty() ? "" : ", ") + tag;
    nodes.push_back({node_id(node.pos) + (node.relevant ? "*" : ""),
                     signature_text(node.sig),
                     "d=" + rat_str(conformal_weight(node.sig, mult.spec)), tags});
  }
  out += align_table(nodes, "  ");
  std::vector<std::vector<std::string>> arrows;
  for (const MultipletArrow& arrow : mult.arrows) {
    std::string op;
    if (arrow.root && arrow.degree)
      op = root_str(*arrow.root) + ", " + rat_str(*arrow.degree);
    if (arrow.kind == ArrowKind::knapp_stein)
      op = op.empty() ? "integral" : "degenerate: " + op;
    arrows.push_back({arrow.name, node_id(arrow.src) + " -> " + node_id(arrow.dst), op});
  }
  out += align_table(arrows, "  ");
  return out;
}

std::string summary_json(const AlgebraSpec& spec, const std::vector<Rat>& mlab,
                         const std::vector<RelevantRow>& rows) {
  Json doc;
  doc["spec"] = Json{{"p", spec.p}, {"q", spec.q}};
  doc["mlabels"] = rat_array(mlab);
  Json arr = Json::array();
  for (const RelevantRow& row : rows) {
    Json obj;
    obj["j"] = row.j;
    obj["signature"] = signature_text(row.sig);
    obj["c"] = rat_str(row.sig.c);
    obj["d"] = rat_str(row.d);
    obj["d_plus"] = rat_str(row.d_plus_bound);
    obj["d_minus"] = rat_str(row.d_minus_bound);
    obj["singlet"] = row.singlet;
    obj["source_reduced"] = row.source_reduced_j;
    arr.push_back(std::move(obj));
  }
  doc["rows"] = std::move(arr);
  return doc.dump(2) + "\n";
}

std::string summary_text(const AlgebraSpec& spec, const std::vector<Rat>& mlab,
                         const std::vector<RelevantRow>& rows) {
  std::string out = spec.name() + " physically relevant reduced pairs, M-labels (" +
                    join_rat(mlab, ",") + ")\n";
  std::vector<std::vector<std::string>> table;
  table.push_back({"j", "signature", "d", "d^+", "d^-", "from"});
  for (const RelevantRow& row : rows)
    table.push_back({std::to_string(row.j), signature_text(row.sig), rat_str(row.d),
                     rat_str(row.d_plus_bound), rat_str(row.d_minus_bound),
                     row.singlet ? "singlet"
                                 : "reduced(" + std::to_string(row.source_reduced_j) + ")"});
  return out + align_table(table, "  ");
}

std::string classification_json(const ClassificationReport& rep) {
  Json doc;
  doc["spec"] = Json{{"p", rep.spec.p}, {"q", rep.spec.q}};
  doc["labels"] = rat_array(rep.labels);
  doc["nu_range"] = rep.nu_range;
  doc["discrete_series_allowed"] = rep.discrete_series_allowed;
  doc["holomorphic_split"] = rep.holomorphic_split;

  Json fd = class_node_json(rep.finite_dim.node);
  fd["dynkin_labels"] = rat_array(rep.finite_dim.signature);
  fd["dimension"] = rep.finite_dim.dimension.get_str();
  doc["finite_dim"] = std::move(fd);

  auto section = [&](const std::vector<ClassNode>& nodes) {
    Json arr = Json::array();
    for (const ClassNode& node : nodes) arr.push_back(class_node_json(node));
    return arr;
  };
  doc["discrete_series"] = section(rep.discrete_series);
  doc["nonholomorphic_containers"] = section(rep.nonholomorphic);
  doc["limits"] = section(rep.limits);
  doc["first_reduction_points"] = section(rep.frp);
  doc["below_first_reduction"] = section(rep.below_frp);

  Json minimal = Json::array();
  for (const MinimalEntry& entry : rep.minimal) {
    Json obj = class_node_json(entry.node);
    Json ops = Json::array();
    for (const CuttingOp& op : entry.cutting_ops) ops.push_back(cutting_op_json(op));
    obj["cutting_ops"] = std::move(ops);
    obj["ks_condition"] = entry.ks_condition;
    if (!entry.ks_name.empty()) obj["ks_name"] = entry.ks_name;
    if (entry.ks_degeneration)
      obj["ks_degeneration"] = cutting_op_json(*entry.ks_degeneration);
    minimal.push_back(std::move(obj));
  }
  doc["minimal"] = std::move(minimal);
  doc["singletons"] = section(rep.singletons);
  return doc.dump(2) + "\n";
}

std::string classification_text(const ClassificationReport& rep) {
  std::string out = rep.spec.name() + " classification at labels (" +
                    join_rat(rep.labels, ",") + ")\n";
  out += std::string("  discrete series: ") +
         (rep.discrete_series_allowed ? "allowed (pq even)" : "none (pq odd)") +
         (rep.holomorphic_split ? "; holomorphic/antiholomorphic split (q = 2)" : "") +
         "\n";
  std::vector<std::vector<std::string>> table;
  table.push_back({"section", "node", "signature", "d", "nu", "operators"});
  auto nu_text = [](const ClassNode& node) {
    return node.nu ? std::to_string(*node.nu) : std::string();
  };
  auto add_row = [&](const char* section, const ClassNode& node,
                     const std::string& ops) {
    table.push_back({section, class_node_id(node.family, node.pos),
                     signature_text(node.sig), rat_str(node.d), nu_text(node), ops});
  };
  add_row("finite-dim", rep.finite_dim.node,
          "dim = " + rep.finite_dim.dimension.get_str());
  for (const ClassNode& node : rep.discrete_series)
    add_row("discrete-series", node, "");
  for (const ClassNode& node : rep.nonholomorphic)
    add_row("ds-container", node, "");
  for (const ClassNode& node : rep.limits) add_row("limit", node, "");
  for (const ClassNode& node : rep.frp) add_row("FRP", node, "");
  for (const ClassNode& node : rep.below_frp) add_row("below-FRP", node, "");
  for (const MinimalEntry& entry : rep.minimal) {
    std::string ops;
    for (const CuttingOp& op : entry.cutting_ops) {
      if (!ops.empty()) ops += " & ";
      ops += "ker " + cutting_op_text(op);
    }
    if (entry.ks_condition) ops += " & ker " + entry.ks_name;
    if (entry.ks_degeneration)
      ops += "; " + entry.ks_name + " ~ " + cutting_op_text(*entry.ks_degeneration);
    add_row("minimal", entry.node, ops);
  }
  for (const ClassNode& node : rep.singletons) add_row("singleton", node, "");
  return out + align_table(table, "  ");
}

}  // namespace sopq
