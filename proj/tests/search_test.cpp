#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "turan/canonical.hpp"
#include "turan/enumerate.hpp"
#include "turan/errors.hpp"
#include "turan/freeness.hpp"
#include "turan/graph6.hpp"
#include "turan/search.hpp"

using namespace turan;

namespace {

ConstraintSpec spec(std::optional<int> q, std::optional<int> m, std::optional<int> l) { return {q, m, l}; }

const ExecutionPolicy kSerial{Execution::kSerial, 0};

}  // namespace

TEST(Constraints, Validation) {
  EXPECT_THROW(ConstraintSpec{}.validate(), ParameterError);
  EXPECT_THROW(spec(1, {}, {}).validate(), ParameterError);
  EXPECT_THROW(spec({}, 0, {}).validate(), ParameterError);
  EXPECT_THROW(spec({}, {}, 0).validate(), ParameterError);
  EXPECT_NO_THROW(spec(2, 1, 1).validate());
  EXPECT_EQ(spec(3, {}, 2).describe(), "no K_3, no L_{n,2}");
}

TEST(Objective, Parse) {
  EXPECT_EQ(parse_objective("edges").name(), "edges");
  EXPECT_EQ(parse_objective("cliques(3)").clique_size, 3);
  EXPECT_EQ(parse_objective("cliques:4").name(), "cliques(4)");
  EXPECT_THROW(parse_objective("cliques(x)"), ParameterError);
  EXPECT_THROW(parse_objective("cliques(3"), ParameterError);
  EXPECT_THROW(parse_objective("triangles"), ParameterError);
  EXPECT_THROW(parse_objective("cliques(0)"), ParameterError);
}

TEST(Range, Parse) {
  EXPECT_EQ(parse_range("2..5").lo, 2);
  EXPECT_EQ(parse_range("2..5").hi, 5);
  EXPECT_EQ(parse_range("7").lo, 7);
  EXPECT_EQ(parse_range("7").hi, 7);
  EXPECT_THROW(parse_range("5..2"), ParameterError);
  EXPECT_THROW(parse_range("a..2"), ParameterError);
  EXPECT_THROW(parse_range("1..2x"), ParameterError);
}

TEST(ExtremalSearch, Examples) {
  const auto a = extremal_search(5, Objective::edges(), spec(3, {}, 2));
  EXPECT_EQ(a.value, 1);

  const auto b = extremal_search(7, Objective::edges(), spec(3, {}, 3));
  EXPECT_EQ(b.value, 6);
  EXPECT_EQ(b.witnesses, std::vector<std::string>{encode_graph6(canonical_form(star_graph(6)))});

  const auto c = extremal_search(9, Objective::cliques(3), spec(4, 2, {}));
  EXPECT_EQ(c.value, 7);
  EXPECT_EQ(c.witnesses, std::vector<std::string>{encode_graph6(canonical_form(join(complete_graph(2), empty_graph(7))))});
  EXPECT_EQ(c.method, Method::kExhaustive);
}

TEST(ExtremalSearch, Errors) {
  EXPECT_THROW(extremal_search(11, Objective::edges(), spec(3, {}, {})), ParameterError);
  EXPECT_THROW(extremal_search(0, Objective::edges(), spec(3, {}, {})), ParameterError);
  EXPECT_THROW(extremal_search(5, Objective::edges(), ConstraintSpec{}), ParameterError);
}

// Labeled brute force on n <= 6 with the test oracles.
TEST(ExtremalSearch, MatchesLabeledBruteForce) {
  const std::vector<ConstraintSpec> specs = {spec(3, {}, {}), spec({}, 2, {}), spec({}, {}, 3), spec(4, 1, {}),
                                             spec(3, {}, 4), spec(4, 2, 3)};
  for (int n = 1; n <= 6; ++n) {
    for (const auto& c : specs) {
      for (const Objective& obj : {Objective::edges(), Objective::cliques(3)}) {
        std::int64_t best = -1;
        std::set<std::string> classes;
        oracle::for_each_labeled_graph(n, [&](const Graph& g) {
          if (c.clique_bound && oracle::clique_count(g, *c.clique_bound) != 0) return;
          if (c.matching_bound && oracle::matching_number(g) > *c.matching_bound) return;
          if (c.linforest_bound && oracle::linear_forest_number(g) >= *c.linforest_bound) return;
          const auto v = static_cast<std::int64_t>(oracle::clique_count(g, obj.clique_size));
          if (v > best) {
            best = v;
            classes.clear();
          }
          if (v == best) classes.insert(encode_graph6(canonical_form(g)));
        });
        const auto rec = extremal_search(n, obj, c, kSerial);
        EXPECT_EQ(rec.value, best) << n << " " << c.describe() << " " << obj.name();
        EXPECT_EQ(rec.witnesses, std::vector<std::string>(classes.begin(), classes.end()));
      }
    }
  }
}

TEST(ExtremalSearch, WitnessesRecheckAndRescan) {
  const std::vector<ConstraintSpec> specs = {spec(3, {}, 3), spec(4, 2, {}), spec({}, {}, 4), spec(3, 2, 3)};
  for (const auto& c : specs) {
    for (const Objective& obj : {Objective::edges(), Objective::cliques(3)}) {
      const auto records = extremal_search_orders(7, obj, c);
      for (const auto& rec : records) {
        for (const auto& w : rec.witnesses) {
          const Graph g = decode_graph6(w);
          EXPECT_EQ(g.order(), rec.params.n);
          EXPECT_TRUE(c.admits(g));
          EXPECT_EQ(obj.evaluate(g), rec.value);
          EXPECT_EQ(canonical_form(g), g);
        }
        EXPECT_TRUE(std::is_sorted(rec.witnesses.begin(), rec.witnesses.end()));
      }
      // Unfiltered re-scan: nothing admissible beats the recorded value.
      enumerate_serial(7, {}, [&](const Graph& g, const CanonicalLabeling&) {
        if (c.admits(g)) { ASSERT_LE(obj.evaluate(g), records[static_cast<std::size_t>(g.order() - 1)].value); }
      });
    }
  }
}

TEST(ExtremalSearch, ParallelMatchesSerial) {
  const std::vector<ConstraintSpec> specs = {spec(3, {}, 4), spec(4, 2, {}), spec({}, {}, 4)};
  for (const auto& c : specs) {
    for (const Objective& obj : {Objective::edges(), Objective::cliques(3)}) {
      const auto serial = extremal_search_orders(9, obj, c, kSerial);
      for (int threads : {0, 1, 4}) {
        const auto parallel = extremal_search_orders(9, obj, c, {Execution::kParallel, threads});
        ASSERT_EQ(parallel.size(), serial.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
          EXPECT_EQ(parallel[i].value, serial[i].value);
          EXPECT_EQ(parallel[i].witnesses, serial[i].witnesses);
        }
      }
    }
  }
}

TEST(Theorems, KeysAndWindows) {
  for (Theorem t : kAllTheorems) EXPECT_EQ(parse_theorem(theorem_key(t)), t);
  EXPECT_FALSE(parse_theorem("thm2.1").has_value());
  EXPECT_TRUE(in_window(Theorem::kLinearForestCliques, {4, 2, 3, 0}));
  EXPECT_FALSE(in_window(Theorem::kLinearForestCliques, {3, 2, 3, 0}));
  EXPECT_TRUE(in_window(Theorem::kCliqueLinearForestEdges, {9, 2, 4, 0}));
  EXPECT_FALSE(in_window(Theorem::kCliqueLinearForestEdges, {8, 2, 4, 0}));
  EXPECT_FALSE(in_window(Theorem::kCliqueMatchingCliques, {9, 3, 2, 2}));
}

TEST(Verify, LinearForestCliquesSmallR) {
  VerifyRanges ranges;
  ranges.s = {3, 3};
  ranges.r = {2, 2};
  const auto report = verify_theorem(Theorem::kLinearForestCliques, ranges);
  ASSERT_EQ(report.rows.size(), 6U);
  EXPECT_EQ(report.rows.front().params.n, 4);
  EXPECT_EQ(report.rows.back().params.n, 9);
  EXPECT_TRUE(report.passed());
}

TEST(Verify, MainFormulaSmallS) {
  VerifyRanges ranges;
  ranges.s = {1, 2};
  ranges.r = {2, 3};
  const auto report = verify_theorem(Theorem::kCliqueLinearForestEdges, ranges);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.rows.size(), 2U * 7U + 2U * 5U);
}

TEST(Verify, ProbeRowsNeverFail) {
  VerifyRanges ranges;
  ranges.s = {1, 3};
  ranges.r = {2, 3};
  ranges.probe_low_n = true;
  const auto report = verify_theorem(Theorem::kCliqueLinearForestEdges, ranges);
  int probes = 0;
  for (const auto& row : report.rows) {
    if (!row.probe) continue;
    ++probes;
    EXPECT_GE(row.params.n, row.params.s + 1);
    EXPECT_LE(row.params.n, 2 * row.params.s);
  }
  EXPECT_EQ(probes, 2 * (1 + 2 + 3));
  EXPECT_TRUE(report.passed());
}

TEST(Verify, CapAndRange) {
  VerifyRanges ranges;
  ranges.cap = 11;
  EXPECT_THROW(verify_theorem(Theorem::kCliqueMatchingEdges, ranges), ParameterError);
  ranges.cap = 7;
  ranges.n = IntRange{5, 8};
  EXPECT_THROW(verify_theorem(Theorem::kCliqueMatchingEdges, ranges), ParameterError);
  ranges.n = IntRange{5, 6};
  ranges.s = {2, 2};
  ranges.r = {2, 2};
  const auto report = verify_theorem(Theorem::kCliqueMatchingEdges, ranges);
  ASSERT_EQ(report.rows.size(), 2U);
  EXPECT_EQ(report.rows[0].params.n, 5);
}

TEST(Verify, DisagreementIsReported) {
  VerifyRanges ranges;
  ranges.s = {4, 4};
  ranges.r = {3, 3};
  const auto report = verify_theorem(Theorem::kCliqueLinearForestEdges, ranges);
  ASSERT_EQ(report.rows.size(), 1U);
  const auto& row = report.rows[0];
  EXPECT_EQ(row.formula, 8);
  EXPECT_EQ(row.exhaustive, 9);
  EXPECT_FALSE(report.passed());
  // The witness is an apex over one edge and six isolated vertices.
  const Graph apex = join(complete_graph(1), disjoint_union(complete_graph(2), empty_graph(6)));
  EXPECT_EQ(row.witnesses, std::vector<std::string>{encode_graph6(canonical_form(apex))});
  EXPECT_TRUE(is_clique_free(apex, 4));
  EXPECT_TRUE(is_linear_forest_free(apex, 4));
  EXPECT_EQ(apex.edge_count(), 9);
}
