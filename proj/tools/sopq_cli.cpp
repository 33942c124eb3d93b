// Command-line front end: multiplet generation (JSON / DOT / text), the
// reduced-pair summary, the classification report, closed-form singular
// vectors with exact verification, structural re-validation, and the
// exhaustive generator sweep.
//
// Exit codes: 0 success, 2 bad input (input_error), 1 failed mathematical
// consistency check (verify_error).

#include "sopq/classify.hpp"
#include "sopq/multiplet.hpp"
#include "sopq/serialize.hpp"
#include "sopq/signature.hpp"
#include "sopq/singvec.hpp"
#include "sopq/verma.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace sopq;

std::vector<Rat> parse_labels(const std::string& text) {
  std::vector<Rat> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string piece = text.substr(start, comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
    while (!piece.empty() && piece.back() == ' ') piece.pop_back();
    try {
      out.push_back(rat_parse(piece));
    } catch (const input_error& e) {
      throw input_error("bad label '" + piece + "': " + e.what());
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::fputs(content.c_str(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw input_error("failed writing output file '" + path + "'");
}

void emit_multiplet(const Multiplet& mult, const std::string& format,
                    const std::string& path) {
  if (format == "json")
    write_output(path, multiplet_json(mult));
  else if (format == "dot")
    write_output(path, multiplet_dot(mult));
  else if (format == "text")
    write_output(path, multiplet_text(mult));
  else
    throw input_error("unknown format '" + format + "' (json, dot, text)");
}

// lambda+rho of the so(p+q,C) Verma module determined by the h+1 weight
// labels: the reversed partial-sum form (rational labels allowed).
Weight lam_rho_from_labels(const AlgebraSpec& spec, const std::vector<Rat>& labels) {
  if (static_cast<int>(labels.size()) != spec.rank)
    throw input_error("need " + std::to_string(spec.rank) + " weight labels");
  std::vector<Rat> n = n_from_m(spec.parity, labels);
  return Weight(n.rbegin(), n.rend());
}

struct SingvecArgs {
  int p = 0, q = 0;
  std::string labels, beta, format = "text", output;
  int m = 0;  // 0 = derive from the weight
  bool no_verify = false;
};

void run_singvec(const SingvecArgs& args) {
  AlgebraSpec spec = AlgebraSpec::make(args.p, args.q);
  std::vector<Rat> labels = parse_labels(args.labels);
  Weight lam_rho = lam_rho_from_labels(spec, labels);
  RootSystem rs = RootSystem::make(spec.n_total());
  Root beta = root_parse(args.beta, spec.rank);
  Rat pairing = rs.pairing(lam_rho, beta);
  int m = args.m;
  if (m == 0) {
    if (!is_integer(pairing) || pairing < 1)
      throw input_error("(lambda+rho, beta^vee) = " + rat_str(pairing) +
                        " is not a positive integer; no singular vector here");
    m = static_cast<int>(pairing.get_num().get_si());
  }
  Weight lambda = lam_rho;
  Weight rho = rs.rho();
  for (int i = 0; i < rs.rank; ++i) lambda[i] -= rho[i];

  ChainDecomposition chain = chain_decomposition(spec, beta);
  NCPolynomial poly = singular_vector_closed_form(rs, chain, m, lambda);

  bool verified = false;
  std::string residual_text;
  if (!args.no_verify) {
    StructureConstants sc = structure_constants(spec.n_total());
    VermaModule vm(sc, lambda);
    SingularCheck check = verify_singular(vm, poly);
    verified = check.verified;
    if (!verified) residual_text = pbw_text(check.residual, sc.roots());
  }

  if (args.format == "json") {
    nlohmann::ordered_json doc;
    doc["spec"] = nlohmann::ordered_json{{"p", spec.p}, {"q", spec.q}};
    doc["beta"] = root_str(beta);
    doc["m"] = m;
    doc["labels"] = [&] {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const Rat& r : labels) arr.push_back(rat_str(r));
      return arr;
    }();
    doc["lambda_rho"] = [&] {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const Rat& r : lam_rho) arr.push_back(rat_str(r));
      return arr;
    }();
    doc["chain_kind"] = chain.kind == ChainKind::a_chain ? "a_chain" : "doubled_end";
    doc["chain"] = [&] {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (int i : chain.indices) arr.push_back(i + 1);
      return arr;
    }();
    doc["terms"] = poly.terms.size();
    doc["closed_form"] = nc_text(poly);
    if (!args.no_verify) doc["verified"] = verified;
    write_output(args.output, doc.dump(2) + "\n");
  } else if (args.format == "text") {
    std::string out = spec.name() + " singular vector: beta = " + root_str(beta) +
                      ", m = " + std::to_string(m) + "\n";
    out += "  lambda+rho = (" + join_rat(lam_rho, ",") + ")";
    out += "  pairing (lambda+rho, beta^vee) = " + rat_str(pairing) + "\n";
    out += "  chain: " + std::string(chain.kind == ChainKind::a_chain
                                         ? "single path"
                                         : "doubled end");
    out += " [";
    for (std::size_t i = 0; i < chain.indices.size(); ++i)
      out += (i ? " " : "") + std::string("a") + std::to_string(chain.indices[i] + 1);
    out += "]\n";
    out += "  closed form (" + std::to_string(poly.terms.size()) + " terms):\n";
    out += "    " + nc_text(poly) + "\n";
    if (!args.no_verify)
      out += std::string("  verification: ") +
             (verified ? "exact (all simple raising operators annihilate it)"
                       : "FAILED, residual " + residual_text) +
             "\n";
    write_output(args.output, out);
  } else {
    throw input_error("unknown format '" + args.format + "' (text, json)");
  }
  if (!args.no_verify && !verified)
    throw verify_error("closed-form vector is not singular; residual " +
                       residual_text);
}

struct VerifyArgs {
  int p = 0, q = 0;
  std::string labels;
  bool oracle = false;
  int max_depth = 12;
};

void run_verify(const VerifyArgs& args) {
  AlgebraSpec spec = AlgebraSpec::make(args.p, args.q);
  std::vector<Rat> labels = parse_labels(args.labels);
  std::string out = spec.name() + " verify at labels (" + join_rat(labels, ",") + ")\n";
  long failures = 0;

  auto report = [&](const Multiplet& mult) {
    std::vector<std::string> v = validate_multiplet(mult);
    out += "  " + mult.kind_text() + " [" + join_rat(mult.labels, ",") + "]: " +
           std::to_string(mult.nodes.size()) + " nodes, " +
           std::to_string(mult.arrows.size()) + " arrows: ";
    if (v.empty()) {
      out += "ok\n";
    } else {
      failures += static_cast<long>(v.size());
      out += v.front() + "\n";
    }
  };

  Multiplet mm = main_multiplet(spec, labels);
  report(mm);
  for (int j = 1; j <= spec.h + 1; ++j) {
    std::vector<Rat> reduced_labels = labels;
    reduced_labels[j - 1] = 0;
    report(reduced_multiplet(spec, j, reduced_labels));
  }

  if (args.oracle) {
    StructureConstants sc = structure_constants(spec.n_total());
    RootSystem const& rs = sc.roots();
    for (const MultipletArrow& arrow : mm.arrows) {
      if (arrow.kind != ArrowKind::differential) continue;
      const std::string head = "  oracle " + arrow.name + " " +
                               node_id(arrow.src) + " -> " + node_id(arrow.dst) +
                               " (" + root_str(*arrow.root) + ", " +
                               rat_str(*arrow.degree) + "): ";
      ChainDecomposition chain;
      try {
        chain = chain_decomposition(spec, *arrow.root);
      } catch (const input_error&) {
        out += head + "no closed form for this root (skipped)\n";
        continue;
      }
      int m = static_cast<int>(arrow.degree->get_num().get_si());
      if (m * rs.height(*arrow.root) > args.max_depth) {
        out += head + "depth " + std::to_string(m * rs.height(*arrow.root)) +
               " over --max-depth (skipped)\n";
        continue;
      }
      Weight lam_rho = weight_from_signature(mm.node_at(arrow.src).sig);
      Weight lambda = lam_rho;
      Weight rho = rs.rho();
      for (int i = 0; i < rs.rank; ++i) lambda[i] -= rho[i];
      try {
        NCPolynomial poly = singular_vector_closed_form(rs, chain, m, lambda);
        VermaModule vm(sc, lambda);
        SingularCheck check = verify_singular(vm, poly);
        if (check.verified) {
          out += head + std::to_string(poly.terms.size()) + " terms, verified\n";
        } else {
          ++failures;
          out += head + "NOT SINGULAR\n";
        }
      } catch (const formula_inapplicable& e) {
        out += head + std::string("formula inapplicable (") + e.what() + ")\n";
      }
    }
  }

  out += failures == 0 ? "  all checks passed\n"
                       : "  " + std::to_string(failures) + " failure(s)\n";
  std::fputs(out.c_str(), stdout);
  if (failures) throw verify_error(std::to_string(failures) + " check(s) failed");
}

void run_sweep(int max_rank, int max_label) {
  SweepStats stats = sweep_validate(max_rank, max_label);
  std::printf("sweep rank <= %d, labels 1..%d: %d algebras, %ld multiplets, "
              "%ld violations\n",
              max_rank, max_label, stats.algebras, stats.multiplets,
              stats.violations);
  for (const std::string& msg : stats.messages)
    std::printf("  %s\n", msg.c_str());
  if (stats.violations) throw verify_error("sweep found violations");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multiplet and classification machinery for so(p,q)"};
  app.require_subcommand(1);

  // Shared option storage; every subcommand binds the subset it needs.
  int p = 0, q = 0, j = 0, m = 0, nu_range = 5, max_rank = 5, max_label = 3,
      max_depth = 12;
  std::string labels, tail, beta, mu_text, mu2_text, output;
  std::string fmt_main = "json", fmt_reduced = "json", fmt_special = "json",
              fmt_singlet = "json", fmt_classify = "text", fmt_singvec = "text";
  bool summary = false, no_verify = false, oracle = false;

  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("-p", p, "first signature parameter (p >= q)")->required();
    sub->add_option("-q", q, "second signature parameter")->required();
  };
  auto add_out = [&](CLI::App* sub, const char* formats, std::string& fvar) {
    sub->add_option("--format,-f", fvar, std::string("output format: ") + formats);
    sub->add_option("--output,-o", output, "write to file instead of stdout");
  };

  CLI::App* cmd_main = app.add_subcommand("main", "main multiplet for positive integer labels");
  add_pq(cmd_main);
  cmd_main->add_option("--labels,-l", labels, "h+1 comma-separated labels")->required();
  add_out(cmd_main, "json|dot|text", fmt_main);
  cmd_main->callback([&] {
    emit_multiplet(main_multiplet(AlgebraSpec::make(p, q), parse_labels(labels)),
                   fmt_main, output);
  });

  CLI::App* cmd_reduced = app.add_subcommand(
      "reduced", "reduced multiplet (one zero label), or --summary table");
  add_pq(cmd_reduced);
  cmd_reduced->add_option("--labels,-l", labels,
                          "h+1 labels with a zero at slot j (with --summary: "
                          "the h M-labels)")
      ->required();
  cmd_reduced->add_option("-j", j, "index of the zeroed label (1..h+1)");
  cmd_reduced->add_flag("--summary", summary,
                        "physically-relevant pair summary over all reductions");
  add_out(cmd_reduced, "json|dot|text", fmt_reduced);
  cmd_reduced->callback([&] {
    AlgebraSpec spec = AlgebraSpec::make(p, q);
    std::vector<Rat> lab = parse_labels(labels);
    if (summary) {
      auto rows = relevant_summary(spec, lab);
      if (fmt_reduced == "json")
        write_output(output, summary_json(spec, lab, rows));
      else if (fmt_reduced == "text")
        write_output(output, summary_text(spec, lab, rows));
      else
        throw input_error("unknown format '" + fmt_reduced + "' (json, text)");
      return;
    }
    if (j == 0)
      throw input_error("reduced multiplet needs -j (or use --summary)");
    emit_multiplet(reduced_multiplet(spec, j, lab), fmt_reduced, output);
  });

  CLI::App* cmd_special = app.add_subcommand(
      "special", "special reduced multiplet with half-odd replacements (odd p+q)");
  add_pq(cmd_special);
  cmd_special->add_option("-j", j, "distinguished index (1..h+1)")->required();
  cmd_special->add_option("--mu", mu_text, "odd positive replacement (slot value mu/2)")
      ->required();
  cmd_special->add_option("--mu2", mu2_text, "second replacement for 2 <= j <= h");
  cmd_special->add_option("--labels,-l", labels,
                          "h+1 labels, zeros at the replaced slots")
      ->required();
  add_out(cmd_special, "json|dot|text", fmt_special);
  cmd_special->callback([&] {
    std::optional<Rat> mu2;
    if (!mu2_text.empty()) mu2 = rat_parse(mu2_text);
    emit_multiplet(special_reduced(AlgebraSpec::make(p, q), j, rat_parse(mu_text),
                                   mu2, parse_labels(labels)),
                   fmt_special, output);
  });

  CLI::App* cmd_singlet = app.add_subcommand("singlet", "self-conjugate singlet");
  add_pq(cmd_singlet);
  cmd_singlet->add_option("--mu", mu_text, "leading label (odd p+q: odd positive)")
      ->required();
  cmd_singlet->add_option("--tail", tail,
                          "remaining positive integer labels (h-1 odd, h-2 even)");
  add_out(cmd_singlet, "json|dot|text", fmt_singlet);
  cmd_singlet->callback([&] {
    emit_multiplet(singlet(AlgebraSpec::make(p, q), rat_parse(mu_text),
                           parse_labels(tail)),
                   fmt_singlet, output);
  });

  CLI::App* cmd_classify =
      app.add_subcommand("classify", "distinguished representations report");
  add_pq(cmd_classify);
  cmd_classify->add_option("--labels,-l", labels, "h+1 positive integer labels")
      ->required();
  cmd_classify->add_option("--nu-range", nu_range, "series truncation (default 5)");
  add_out(cmd_classify, "text|json", fmt_classify);
  cmd_classify->callback([&] {
    ClassificationReport rep =
        classify(AlgebraSpec::make(p, q), parse_labels(labels), nu_range);
    if (fmt_classify == "json")
      write_output(output, classification_json(rep));
    else if (fmt_classify == "text")
      write_output(output, classification_text(rep));
    else
      throw input_error("unknown format '" + fmt_classify + "' (text, json)");
  });

  CLI::App* cmd_singvec = app.add_subcommand(
      "singvec", "closed-form singular vector for a noncompact root");
  add_pq(cmd_singvec);
  cmd_singvec->add_option("--labels,-l", labels,
                          "h+1 weight labels of the Verma highest weight "
                          "(rationals allowed)")
      ->required();
  cmd_singvec->add_option("--beta,-b", beta, "noncompact positive root, e.g. e1-e3")
      ->required();
  cmd_singvec->add_option("-m", m, "degree (default: the BGG pairing value)");
  cmd_singvec->add_flag("--no-verify", no_verify, "skip the exact Verma check");
  add_out(cmd_singvec, "text|json", fmt_singvec);
  cmd_singvec->callback([&] {
    run_singvec({p, q, labels, beta, fmt_singvec, output, m, no_verify});
  });

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "re-validate every multiplet derived from the given labels");
  add_pq(cmd_verify);
  cmd_verify->add_option("--labels,-l", labels, "h+1 positive integer labels")
      ->required();
  cmd_verify->add_flag("--oracle", oracle,
                       "also check closed-form singular vectors in the exact "
                       "Verma module");
  cmd_verify->add_option("--max-depth", max_depth,
                         "skip oracle checks beyond this weight depth");
  cmd_verify->callback([&] { run_verify({p, q, labels, oracle, max_depth}); });

  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "generate and validate every family over a label grid");
  cmd_sweep->add_option("--max-rank", max_rank, "largest so(p+q,C) rank (default 5)");
  cmd_sweep->add_option("--max-label", max_label, "largest label value (default 3)");
  cmd_sweep->callback([&] { run_sweep(max_rank, max_label); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const sopq::input_error& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const sopq::verify_error& e) {
    std::fprintf(stderr, "verification failure: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
