#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "turan/errors.hpp"
#include "turan/formulas.hpp"
#include "turan/freeness.hpp"
#include "turan/graph.hpp"

using namespace turan;

namespace {

FormulaParams P(int n, int r, int s, int k = 0) { return {n, r, s, k}; }

}  // namespace

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(62, 31), 465428353255261088LL);
  EXPECT_THROW(binomial(70, 35), std::overflow_error);
}

TEST(TuranNumber, Examples) {
  EXPECT_EQ(turan_number(5, 2), 6);
  EXPECT_EQ(turan_number(10, 3), 33);
  for (int s = 0; s <= 8; ++s)
    for (int r = s; r <= 10; ++r)
      if (r >= 1) { EXPECT_EQ(turan_number(s, r), binomial(s, 2)); }
  EXPECT_THROW(turan_number(5, 0), ParameterError);
}

TEST(TuranCliqueCount, Examples) {
  EXPECT_EQ(turan_clique_count(5, 3, 3), 4);
  EXPECT_EQ(turan_clique_count(5, 2, 2), 6);
  EXPECT_EQ(turan_clique_count(9, 2, 3), 0);
  EXPECT_THROW(turan_clique_count(5, 0, 2), ParameterError);
  EXPECT_THROW(turan_clique_count(5, 2, 0), ParameterError);
}

TEST(TuranCliqueCount, MatchesCounting) {
  for (int t = 0; t <= 25; ++t)
    for (int k = 1; k <= 6; ++k)
      for (int r = 1; r <= 6; ++r)
        ASSERT_EQ(turan_clique_count(t, k, r), static_cast<Count>(count_cliques(turan_graph(t, k), r)))
            << t << " " << k << " " << r;
}

TEST(CliqueMatching, Examples) {
  EXPECT_EQ(ex_clique_matching(P(9, 2, 2)), 14);
  EXPECT_EQ(ex_clique_matching(P(7, 3, 1)), 6);
  EXPECT_EQ(ex_clique_matching(P(5, 3, 2)), std::max(turan_number(5, 3), turan_number(2, 2) + 3 * 2));
  EXPECT_THROW(ex_clique_matching(P(4, 2, 2)), ParameterError);
  EXPECT_THROW(ex_clique_matching(P(9, 1, 2)), ParameterError);
}

TEST(Matching, CliqueExamples) {
  EXPECT_EQ(gex_matching(P(9, 2, 2)), 15);
  EXPECT_EQ(gex_matching(P(7, 3, 1)), 1);
  EXPECT_EQ(gex_matching(P(9, 6, 2)), 0);
  EXPECT_THROW(gex_matching(P(4, 2, 2)), ParameterError);
}

TEST(LinearForestCliques, Examples) {
  EXPECT_EQ(gex_linear_forest(P(7, 2, 3)), 6);
  EXPECT_EQ(gex_linear_forest(P(9, 3, 5)), 10);
  EXPECT_EQ(gex_linear_forest(P(4, 5, 3)), 0);
  EXPECT_EQ(gex_linear_forest(P(4, 2, 3)), 3);
  EXPECT_THROW(gex_linear_forest(P(3, 2, 3)), ParameterError);
  EXPECT_EQ(gex_linear_forest(P(3, 2, 3), Window::kUnchecked), 3);
}

TEST(CliqueMatchingCliques, Examples) {
  EXPECT_EQ(gex_clique_matching(P(9, 3, 2, 3)), 7);
  const Count a = turan_clique_count(5, 4, 3);
  const Count b = turan_clique_count(2, 3, 3) + 9 * turan_clique_count(2, 3, 2);
  EXPECT_EQ(a, 7);
  EXPECT_EQ(b, 9);
  EXPECT_EQ(gex_clique_matching(P(11, 3, 2, 4)), std::max(a, b));
  EXPECT_EQ(std::max(a, b), static_cast<Count>(std::max(count_cliques(turan_graph(5, 4), 3),
                                                         count_cliques(join(turan_graph(2, 3), empty_graph(9)), 3))));
  EXPECT_THROW(gex_clique_matching(P(9, 4, 2, 3)), ParameterError);
  EXPECT_THROW(gex_clique_matching(P(9, 2, 2, 3)), ParameterError);
}

TEST(CliqueLinearForest, Examples) {
  EXPECT_EQ(ex_clique_linear_forest(P(5, 2, 2)), 1);
  EXPECT_EQ(ex_clique_linear_forest(P(9, 2, 4)), 8);
  EXPECT_EQ(ex_clique_linear_forest(P(11, 3, 5)), 19);
  EXPECT_THROW(ex_clique_linear_forest(P(8, 2, 4)), ParameterError);
  EXPECT_THROW(ex_clique_linear_forest(P(9, 2, 0)), ParameterError);
  EXPECT_EQ(ex_clique_linear_forest(P(8, 2, 4), Window::kUnchecked), 7);
}

TEST(CliqueLinearForest, MonotoneInNAndS) {
  for (int r = 2; r <= 12; ++r) {
    for (int s = 1; s <= 10; ++s) {
      for (int n = 2 * s + 1; n <= 40; ++n) {
        const Count here = ex_clique_linear_forest(P(n, r, s));
        if (n > 2 * s + 1) { EXPECT_GE(here, ex_clique_linear_forest(P(n - 1, r, s))); }
        if (s > 1) { EXPECT_GE(here, ex_clique_linear_forest(P(n, r, s - 1))); }
      }
    }
  }
}

TEST(Windows, UncheckedStillRejectsNegativeTerms) {
  EXPECT_THROW(ex_clique_matching(P(1, 2, 3), Window::kUnchecked), ParameterError);
  EXPECT_THROW(ex_clique_linear_forest(P(3, 2, 0), Window::kUnchecked), ParameterError);
}

// Ground truth over all labeled graphs for the small in-window cases.
TEST(Formulas, BruteForceSmall) {
  for (int n = 3; n <= 6; ++n) {
    // best[s][r] for each of the three problems.
    std::int64_t edges_matching[3][4], edges_forest[3][4], cliques_matching[3][4];
    for (int s = 0; s < 3; ++s)
      for (int r = 0; r < 4; ++r) edges_matching[s][r] = edges_forest[s][r] = cliques_matching[s][r] = -1;
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      const int nu = oracle::matching_number(g);
      const int lf = oracle::linear_forest_number(g);
      for (int r = 2; r <= 3; ++r) {
        const bool no_big_clique = oracle::clique_count(g, r + 1) == 0;
        const auto kr = static_cast<std::int64_t>(oracle::clique_count(g, r));
        for (int s = 1; s <= 2; ++s) {
          if (no_big_clique && nu <= s) edges_matching[s][r] = std::max<std::int64_t>(edges_matching[s][r], g.edge_count());
          if (no_big_clique && lf < s) edges_forest[s][r] = std::max<std::int64_t>(edges_forest[s][r], g.edge_count());
          if (nu <= s) cliques_matching[s][r] = std::max(cliques_matching[s][r], kr);
        }
      }
    });
    for (int s = 1; 2 * s + 1 <= n; ++s) {
      for (int r = 2; r <= 3; ++r) {
        EXPECT_EQ(ex_clique_matching(P(n, r, s)), edges_matching[s][r]) << n << r << s;
        EXPECT_EQ(ex_clique_linear_forest(P(n, r, s)), edges_forest[s][r]) << n << r << s;
        EXPECT_EQ(gex_matching(P(n, r, s)), cliques_matching[s][r]) << n << r << s;
      }
    }
  }
}
