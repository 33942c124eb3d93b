#include "sopq/classify.hpp"

#include "sopq/multiplet.hpp"

#include <doctest.h>

#include <algorithm>

using namespace sopq;

namespace {

std::vector<Rat> rats(std::vector<long> v) {
  return std::vector<Rat>(v.begin(), v.end());
}

bool has_tag(const std::vector<std::string>& tags, const std::string& tag) {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

const ClassNode* find_row(const std::vector<ClassNode>& rows, const std::string& id,
                          const Rat& d) {
  for (const ClassNode& row : rows)
    if (class_node_id(row.family, row.pos) == id && row.d == d) return &row;
  return nullptr;
}

std::vector<ClassNode> all_rows(const ClassificationReport& rep) {
  std::vector<ClassNode> rows;
  rows.push_back(rep.finite_dim.node);
  for (const auto& v : {rep.discrete_series, rep.nonholomorphic, rep.limits,
                        rep.frp, rep.below_frp, rep.singletons})
    rows.insert(rows.end(), v.begin(), v.end());
  for (const auto& entry : rep.minimal) rows.push_back(entry.node);
  return rows;
}

}  // namespace

TEST_SUITE_BEGIN("classify");

TEST_CASE("so(3,2) singletons are the two lowest special pairs") {
  ClassificationReport rep = classify(AlgebraSpec::make(3, 2), rats({1, 1}));
  REQUIRE(rep.singletons.size() == 2);
  const ClassNode& rac = rep.singletons[0];
  CHECK(class_node_id(rac.family, rac.pos) == "schi^-_1");
  CHECK(rac.sig.mlabels() == std::vector<Rat>{Rat(1)});
  CHECK(rac.d == frac(1, 2));
  CHECK(has_tag(rac.tags, "singleton"));
  const ClassNode& di = rep.singletons[1];
  CHECK(class_node_id(di.family, di.pos) == "schi^-_2");
  CHECK(di.sig.mlabels() == std::vector<Rat>{Rat(2)});
  CHECK(di.d == Rat(1));
  CHECK(has_tag(di.tags, "singleton"));
  // No other algebra emits singletons.
  CHECK(classify(AlgebraSpec::make(5, 2), rats({1, 1, 1})).singletons.empty());
  CHECK(classify(AlgebraSpec::make(4, 2), rats({1, 1, 1})).singletons.empty());
  CHECK(classify(AlgebraSpec::make(4, 3), rats({1, 1, 1})).singletons.empty());
}

TEST_CASE("so(4,2) first reduction points") {
  AlgebraSpec spec = AlgebraSpec::make(4, 2);

  // Generic labels: chi^+_2 becomes reducible first at d = 1 + (m_1+m_2)/2.
  ClassificationReport rep = classify(spec, rats({3, 2, 1}));
  const ClassNode* generic = find_row(rep.frp, "chi^+_2", Rat(1) + frac(3 + 2, 2));
  REQUIRE(generic != nullptr);
  CHECK(has_tag(generic->tags, "FRP"));

  // The three terminal cases are always present, at d = 1, 3/2, 3/2.
  for (const auto& labels : {rats({3, 2, 1}), rats({1, 1, 1}), rats({2, 2, 2})}) {
    ClassificationReport r = classify(spec, labels);
    const ClassNode* t11 = find_row(r.frp, "rchi^-_1", Rat(1));
    REQUIRE(t11 != nullptr);
    CHECK(t11->sig.mlabels() == rats({1, 1}));
    const ClassNode* t21 = find_row(r.frp, "rchi^-_2", frac(3, 2));
    REQUIRE(t21 != nullptr);
    CHECK(t21->sig.mlabels() == rats({2, 1}));
    const ClassNode* t12 = find_row(r.frp, "rchi^-_3", frac(3, 2));
    REQUIRE(t12 != nullptr);
    CHECK(t12->sig.mlabels() == rats({1, 2}));
  }

  // All-ones labels fail every genericity gate: only the terminals remain.
  CHECK(classify(spec, rats({1, 1, 1})).frp.size() == 3);
  // m_1 >= 3 opens the conjugate corner chi^-_3; m_2 >= 3 opens chi^+_3,
  // which sits at c = 0 (self-conjugate) when m_2 = 3 exactly.
  ClassificationReport corners = classify(spec, rats({5, 3, 1}));
  CHECK(find_row(corners.frp, "chi^+_2", Rat(5)) != nullptr);
  CHECK(find_row(corners.frp, "chi^-_3", Rat(3)) != nullptr);
  CHECK(find_row(corners.frp, "chi^0_3", Rat(2)) != nullptr);
  CHECK(corners.frp.size() == 6);
}

TEST_CASE("odd-parity first reduction points") {
  AlgebraSpec spec = AlgebraSpec::make(5, 2);
  ClassificationReport rep = classify(spec, rats({3, 1, 1}));
  // chi^+_3 at d = h + m_1/2 - 1/2 needs m_1 >= 3.
  const ClassNode* generic = find_row(rep.frp, "chi^+_3", Rat(3));
  REQUIRE(generic != nullptr);
  CHECK(classify(spec, rats({2, 1, 1})).frp.size() == 2);
  // The reduced terminals: [1,m_2,... ; h] and the self-conjugate [2,... ; h+1/2].
  const ClassNode* th = find_row(rep.frp, "rchi^-_2", Rat(2));
  REQUIRE(th != nullptr);
  CHECK(th->sig.mlabels() == rats({1, 1}));
  const ClassNode* tz = find_row(rep.frp, "rchi^0_3", frac(5, 2));
  REQUIRE(tz != nullptr);
  CHECK(tz->sig.mlabels() == rats({2, 1}));
  CHECK(tz->sig.c == 0);
}

TEST_CASE("so(3,2) minimal irreps and their cutting operators") {
  ClassificationReport rep = classify(AlgebraSpec::make(3, 2), rats({1, 1}));
  REQUIRE(rep.minimal.size() == 4);

  const MinimalEntry& r1 = rep.minimal[0];
  CHECK(class_node_id(r1.node.family, r1.node.pos) == "rchi^-_1");
  CHECK(r1.node.d == Rat(1));
  REQUIRE(r1.cutting_ops.size() == 1);
  CHECK(root_str(r1.cutting_ops[0].root) == "e1");
  CHECK(r1.cutting_ops[0].degree == 1);
  CHECK_FALSE(r1.ks_condition);
  REQUIRE(r1.ks_degeneration.has_value());
  CHECK(r1.ks_name == "G^+_1");
  CHECK(root_str(r1.ks_degeneration->root) == "e1");

  const MinimalEntry& r2 = rep.minimal[1];
  CHECK(class_node_id(r2.node.family, r2.node.pos) == "rchi^0_2");
  CHECK(r2.node.d == frac(3, 2));
  REQUIRE(r2.cutting_ops.size() == 1);
  CHECK(root_str(r2.cutting_ops[0].root) == "e1+e2");
  CHECK(r2.cutting_ops[0].degree == 1);
  CHECK_FALSE(r2.ks_degeneration.has_value());

  const MinimalEntry& s1 = rep.minimal[2];
  CHECK(class_node_id(s1.node.family, s1.node.pos) == "schi^-_1");
  CHECK(s1.node.d == frac(1, 2));
  REQUIRE(s1.cutting_ops.size() == 1);
  CHECK(root_str(s1.cutting_ops[0].root) == "e1");
  CHECK(s1.cutting_ops[0].degree == 2);

  const MinimalEntry& s2 = rep.minimal[3];
  CHECK(class_node_id(s2.node.family, s2.node.pos) == "schi^-_2");
  CHECK(s2.node.d == Rat(1));
  REQUIRE(s2.cutting_ops.size() == 1);
  CHECK(root_str(s2.cutting_ops[0].root) == "e1");
  CHECK(s2.cutting_ops[0].degree == 1);

  // The singleton rows coincide with the two special minimal entries.
  CHECK(rep.singletons[0].sig == s1.node.sig);
  CHECK(rep.singletons[1].sig == s2.node.sig);
  for (const auto& entry : rep.minimal) {
    CHECK(has_tag(entry.node.tags, "minimal"));
    CHECK(has_tag(entry.node.tags, "physically-relevant"));
  }
}

TEST_CASE("so(4,2) minimal irreps") {
  ClassificationReport rep = classify(AlgebraSpec::make(4, 2), rats({1, 1, 1}));
  REQUIRE(rep.minimal.size() == 3);

  const MinimalEntry& a = rep.minimal[0];
  CHECK(class_node_id(a.node.family, a.node.pos) == "rchi^-_1");
  CHECK(a.node.d == Rat(1));
  REQUIRE(a.cutting_ops.size() == 2);
  CHECK(root_str(a.cutting_ops[0].root) == "e1-e3");
  CHECK(root_str(a.cutting_ops[1].root) == "e1+e3");
  CHECK(a.cutting_ops[0].degree == 1);
  CHECK(a.cutting_ops[1].degree == 1);
  CHECK(a.ks_condition);
  CHECK(a.ks_name == "G^+_1");

  const MinimalEntry& b = rep.minimal[1];
  CHECK(class_node_id(b.node.family, b.node.pos) == "rchi^-_2");
  CHECK(b.node.d == frac(3, 2));
  CHECK(b.node.sig.mlabels() == rats({2, 1}));
  REQUIRE(b.cutting_ops.size() == 1);
  CHECK(root_str(b.cutting_ops[0].root) == "e1+e3");
  CHECK(b.cutting_ops[0].degree == 2);
  REQUIRE(b.ks_degeneration.has_value());
  CHECK(root_str(b.ks_degeneration->root) == "e1+e3");
  CHECK(b.ks_degeneration->degree == 1);

  const MinimalEntry& c = rep.minimal[2];
  CHECK(class_node_id(c.node.family, c.node.pos) == "rchi^-_3");
  CHECK(c.node.d == frac(3, 2));
  CHECK(c.node.sig.mlabels() == rats({1, 2}));
  REQUIRE(c.cutting_ops.size() == 1);
  CHECK(root_str(c.cutting_ops[0].root) == "e1-e3");
  CHECK(c.cutting_ops[0].degree == 2);
}

TEST_CASE("discrete series rows equal chi^+_1 of the shifted main multiplets") {
  for (auto [p, q] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{6, 2}}) {
    CAPTURE(p);
    AlgebraSpec spec = AlgebraSpec::make(p, q);
    std::vector<Rat> labels(spec.h + 1, Rat(1));
    labels[0] = 2;
    ClassificationReport rep = classify(spec, labels, 3);
    REQUIRE(rep.discrete_series.size() == 3);
    for (int nu = 1; nu <= 3; ++nu) {
      const ClassNode& row = rep.discrete_series[nu - 1];
      CHECK(row.nu == nu);
      std::vector<Rat> shifted(labels.begin(), labels.end() - 1);
      shifted.push_back(Rat(nu));
      Multiplet mm = main_multiplet(spec, shifted);
      CHECK(row.sig == mm.node_at({1, Branch::plus}).sig);
      CHECK(row.d == conformal_weight(row.sig, spec));
    }
  }
}

TEST_CASE("limits equal the relevant pair of the top reduced multiplet") {
  for (auto [p, q] : {std::pair{4, 2}, std::pair{5, 2}}) {
    CAPTURE(p);
    AlgebraSpec spec = AlgebraSpec::make(p, q);
    std::vector<Rat> labels(spec.h + 1, Rat(1));
    ClassificationReport rep = classify(spec, labels);
    REQUIRE(rep.limits.size() == 1);
    std::vector<Rat> zeroed = labels;
    zeroed[spec.h] = 0;
    Multiplet red = reduced_multiplet(spec, spec.h + 1, zeroed);
    CHECK(rep.limits[0].sig == red.node_at({1, Branch::plus}).sig);
    CHECK(red.node_at({1, Branch::plus}).relevant);
  }
}

TEST_CASE("discrete series exist only when pq is even") {
  ClassificationReport none = classify(AlgebraSpec::make(5, 3), rats({1, 1, 1, 1}));
  CHECK_FALSE(none.discrete_series_allowed);
  CHECK(none.discrete_series.empty());
  CHECK(none.limits.empty());
  CHECK(none.nonholomorphic.empty());
  CHECK_FALSE(none.frp.empty());
  CHECK_FALSE(none.minimal.empty());

  CHECK(classify(AlgebraSpec::make(4, 3), rats({1, 1, 1})).discrete_series_allowed);
  CHECK(classify(AlgebraSpec::make(4, 2), rats({1, 1, 1})).discrete_series_allowed);
  CHECK(classify(AlgebraSpec::make(3, 2), rats({1, 1})).discrete_series_allowed);

  CHECK(classify(AlgebraSpec::make(4, 2), rats({1, 1, 1})).holomorphic_split);
  CHECK(classify(AlgebraSpec::make(6, 2), rats({1, 1, 1, 1})).holomorphic_split);
  CHECK_FALSE(classify(AlgebraSpec::make(4, 3), rats({1, 1, 1})).holomorphic_split);
  CHECK_FALSE(classify(AlgebraSpec::make(5, 3), rats({1, 1, 1, 1})).holomorphic_split);
}

TEST_CASE("nonholomorphic containers") {
  ClassificationReport even = classify(AlgebraSpec::make(4, 2), rats({1, 1, 1}));
  REQUIRE(even.nonholomorphic.size() == 2);  // chi^+_2, chi^+_3
  CHECK(class_node_id(even.nonholomorphic[0].family, even.nonholomorphic[0].pos) ==
        "chi^+_2");
  CHECK(even.nonholomorphic[0].d == Rat(3));
  CHECK(even.nonholomorphic[1].d == Rat(2));
  ClassificationReport odd = classify(AlgebraSpec::make(5, 2), rats({1, 1, 1}));
  REQUIRE(odd.nonholomorphic.size() == 1);  // chi^+_2 only
  CHECK(odd.nonholomorphic[0].d == Rat(4));
}

TEST_CASE("points below the first reduction") {
  ClassificationReport rep = classify(AlgebraSpec::make(5, 2), rats({1, 1, 1}), 2);
  REQUIRE(rep.below_frp.size() == 6);
  CHECK(class_node_id(rep.below_frp[0].family, rep.below_frp[0].pos) == "rchi^-_1");
  CHECK(rep.below_frp[0].d == Rat(1));
  CHECK(rep.below_frp[1].d == frac(3, 2));
  CHECK(rep.below_frp[1].sig.mlabels() == rats({1, 1}));
  // The nu-indexed special points alternate between d = h - 1/2 and d = h.
  CHECK(rep.below_frp[2].sig.mlabels() == rats({3, 1}));
  CHECK(rep.below_frp[2].d == frac(3, 2));
  CHECK(rep.below_frp[3].sig.mlabels() == rats({2, 1}));
  CHECK(rep.below_frp[3].d == Rat(2));
  CHECK(rep.below_frp[4].sig.mlabels() == rats({5, 1}));
  CHECK(rep.below_frp[5].sig.mlabels() == rats({4, 1}));

  ClassificationReport even = classify(AlgebraSpec::make(6, 2), rats({1, 1, 1, 1}));
  REQUIRE(even.below_frp.size() == 1);
  CHECK(even.below_frp[0].d == Rat(1));
  CHECK(even.below_frp[0].sig.mlabels() == rats({1, 1, 1}));
}

TEST_CASE("finite dimensional content") {
  ClassificationReport rep = classify(AlgebraSpec::make(3, 2), rats({1, 2}));
  CHECK(rep.finite_dim.dimension == 5);
  CHECK(rep.finite_dim.signature == rats({1, 2}));
  CHECK(class_node_id(rep.finite_dim.node.family, rep.finite_dim.node.pos) ==
        "chi^-_1");
  CHECK(classify(AlgebraSpec::make(3, 2), rats({3, 1})).finite_dim.dimension == 10);
  CHECK(classify(AlgebraSpec::make(4, 2), rats({1, 1, 2})).finite_dim.dimension == 6);
  CHECK(classify(AlgebraSpec::make(5, 2), rats({1, 1, 2})).finite_dim.dimension == 7);
}

TEST_CASE("weyl_dimension_labels") {
  // All-ones labels give the trivial representation at every rank <= 5.
  for (auto [p, q] : {std::pair{3, 2}, std::pair{4, 3}, std::pair{5, 4},
                      std::pair{6, 5}, std::pair{4, 2}, std::pair{5, 3},
                      std::pair{6, 4}, std::pair{7, 5}}) {
    CAPTURE(p);
    AlgebraSpec spec = AlgebraSpec::make(p, q);
    CHECK(weyl_dimension_labels(spec, std::vector<Rat>(spec.h + 1, Rat(1))) == 1);
  }
  AlgebraSpec so32 = AlgebraSpec::make(3, 2);
  CHECK(weyl_dimension_labels(so32, rats({1, 2})) == 5);
  CHECK(weyl_dimension_labels(so32, rats({3, 1})) == 10);
  CHECK(weyl_dimension_labels(so32, rats({2, 2})) == 16);
  CHECK_THROWS_AS(weyl_dimension_labels(so32, rats({0, 1})), input_error);
  CHECK_THROWS_AS(weyl_dimension_labels(so32, rats({1, 1, 1})), input_error);
}

TEST_CASE("every classified row has consistent c and d") {
  for (auto [p, q] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{5, 2},
                      std::pair{4, 3}, std::pair{5, 3}, std::pair{5, 4}}) {
    CAPTURE(p);
    CAPTURE(q);
    AlgebraSpec spec = AlgebraSpec::make(p, q);
    std::vector<Rat> labels(spec.h + 1, Rat(2));
    ClassificationReport rep = classify(spec, labels, 2);
    for (const ClassNode& row : all_rows(rep)) {
      CAPTURE(class_node_id(row.family, row.pos));
      CHECK(row.d == row.sig.c + spec.half_dim_n());
      CHECK(row.sig.parity == spec.parity);
    }
    // Minimal cutting operators act along noncompact positive roots.
    RootSystem rs = RootSystem::make(spec.n_total());
    for (const MinimalEntry& entry : rep.minimal)
      for (const CuttingOp& op : entry.cutting_ops) {
        CHECK(rs.is_positive_root(op.root));
        CHECK_FALSE(rs.is_compact(op.root));
        CHECK(op.degree >= 1);
        CHECK(is_integer(op.degree));
      }
  }
}

TEST_CASE("input validation") {
  AlgebraSpec spec = AlgebraSpec::make(5, 2);
  CHECK_THROWS_AS(classify(spec, rats({1, 1})), input_error);
  CHECK_THROWS_AS(classify(spec, rats({1, 0, 1})), input_error);
  CHECK_THROWS_AS(classify(spec, {Rat(1), frac(1, 2), Rat(1)}), input_error);
  CHECK_THROWS_AS(classify(spec, rats({1, 1, 1}), 0), input_error);
}

TEST_SUITE_END();
