#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "turan/errors.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"

using namespace turan;

TEST(Graph, EmptyGraphs) {
  EXPECT_EQ(empty_graph(0).order(), 0);
  EXPECT_EQ(empty_graph(0).edge_count(), 0);
  EXPECT_EQ(empty_graph(3).order(), 3);
  EXPECT_EQ(empty_graph(3).edge_count(), 0);
  EXPECT_EQ(empty_graph(7).order(), 7);
  EXPECT_EQ(empty_graph(7).edge_count(), 0);
}

TEST(Graph, MutationKeepsSymmetry) {
  Graph g(5);
  g.add_edge(3, 1);
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_TRUE(g.has_edge(3, 1));
  g.add_edge(1, 3);
  EXPECT_EQ(g.edge_count(), 1);
  g.remove_edge(1, 3);
  g.remove_edge(1, 3);
  EXPECT_EQ(g.edge_count(), 0);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 5), std::invalid_argument);
  EXPECT_THROW(g.add_edge(-1, 2), std::invalid_argument);
  EXPECT_TRUE(g.is_consistent());
}

TEST(Graph, EdgeCountBounds) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    EXPECT_TRUE(g.is_consistent());
    EXPECT_LE(g.edge_count(), n * (n - 1) / 2);
    EXPECT_EQ(static_cast<std::size_t>(g.edge_count()), oracle::edge_list(g).size());
  }
}

TEST(Graph, EdgesAreLexicographic) {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{3, 2}, {0, 3}, {1, 0}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}}));
}

TEST(Graph, CompleteMultipartite) {
  const auto k3 = complete_multipartite(std::vector<int>{1, 1, 1});
  EXPECT_EQ(k3.graph, complete_graph(3));
  EXPECT_EQ(k3.graph.edge_count(), 3);
  EXPECT_EQ(complete_multipartite(std::vector<int>{3, 2}).graph.edge_count(), 6);
  const auto t53 = complete_multipartite(std::vector<int>{2, 2, 1});
  EXPECT_EQ(t53.graph.edge_count(), 8);
  EXPECT_TRUE(t53.parts.is_proper_for(t53.graph));
  EXPECT_EQ(t53.parts.color, (std::vector<int>{0, 0, 1, 1, 2}));
  EXPECT_EQ(complete_multipartite(std::vector<int>{0, 2, 0}).graph.edge_count(), 0);
}

TEST(Graph, TuranGraph) {
  EXPECT_EQ(turan_graph(5, 2), complete_multipartite(std::vector<int>{3, 2}).graph);
  EXPECT_EQ(turan_graph(5, 2).edge_count(), 6);
  EXPECT_EQ(turan_graph(2, 3), complete_graph(2));
  EXPECT_EQ(turan_part_sizes(10, 3), (std::vector<int>{4, 3, 3}));
  EXPECT_EQ(turan_graph(10, 3).edge_count(), 33);
  EXPECT_THROW(turan_graph(4, 0), std::invalid_argument);
}

TEST(Graph, TuranPartsBalancedLargestFirst) {
  for (int n = 0; n <= 40; ++n) {
    for (int r = 1; r <= 10; ++r) {
      const auto sizes = turan_part_sizes(n, r);
      int total = 0;
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        total += sizes[i];
        EXPECT_LE(sizes.front() - sizes[i], 1);
        if (i > 0) { EXPECT_LE(sizes[i], sizes[i - 1]); }
      }
      EXPECT_EQ(total, n);
      EXPECT_EQ(turan_graph(n, r).edge_count(), turan_number(n, r)) << n << " " << r;
    }
  }
}

TEST(Graph, JoinExamples) {
  const Graph p4 = path_graph(4);
  EXPECT_EQ(join(empty_graph(0), p4), p4);
  EXPECT_EQ(join(complete_graph(1), empty_graph(6)), star_graph(6));
  EXPECT_EQ(star_graph(6).edge_count(), 6);
  EXPECT_EQ(join(turan_graph(2, 2), empty_graph(9)).edge_count(), 19);
}

TEST(Graph, JoinEdgeIdentity) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> order(0, 12);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = oracle::random_graph(rng, order(rng), prob(rng));
    const Graph h = oracle::random_graph(rng, order(rng), prob(rng));
    const Graph j = join(g, h);
    ASSERT_TRUE(j.is_consistent());
    EXPECT_EQ(j.edge_count(), g.edge_count() + h.edge_count() + g.order() * h.order());
    EXPECT_EQ(disjoint_union(g, h).edge_count(), g.edge_count() + h.edge_count());
  }
}

TEST(Graph, ExtremalConstructionExamples) {
  const auto a = extremal_construction(9, 2, 4);
  EXPECT_EQ(a[0].order(), 9);
  EXPECT_EQ(a[0].edge_count(), 4);
  EXPECT_EQ(a[1], star_graph(8));

  const auto b = extremal_construction(11, 3, 5);
  EXPECT_EQ(b[1], join(turan_graph(2, 2), empty_graph(9)));
  EXPECT_EQ(b[1].edge_count(), 19);

  const auto c = extremal_construction(5, 2, 2);
  EXPECT_EQ(c[0].edge_count(), 1);
  EXPECT_EQ(c[1], empty_graph(5));

  EXPECT_THROW(extremal_construction(8, 2, 4), ParameterError);
  EXPECT_THROW(extremal_construction(9, 1, 4), ParameterError);
  EXPECT_THROW(extremal_construction(9, 2, 0), ParameterError);
}

TEST(Graph, Relabel) {
  const Graph g = path_graph(3);
  const std::vector<int> perm{2, 0, 1};
  const Graph h = g.relabeled(perm);
  EXPECT_TRUE(h.has_edge(2, 0));
  EXPECT_TRUE(h.has_edge(0, 1));
  EXPECT_FALSE(h.has_edge(2, 1));
}

TEST(Graph, Coloring) {
  const Graph g = cycle_graph(5);
  const Coloring c = greedy_coloring(g);
  EXPECT_TRUE(c.is_proper_for(g));
  EXPECT_EQ(c.num_colors(), 3);
  EXPECT_THROW((Coloring{{0, 1}}).check_total_for(g), std::invalid_argument);
  EXPECT_THROW((Coloring{{0, 1, 0, 1, -1}}).check_total_for(g), std::invalid_argument);
  EXPECT_FALSE((Coloring{{0, 0, 1, 0, 1}}).is_proper_for(g));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph r = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.5);
    EXPECT_TRUE(greedy_coloring(r).is_proper_for(r));
  }
}

TEST(Graph6, Examples) {
  EXPECT_EQ(encode_graph6(empty_graph(0)), "?");
  EXPECT_EQ(decode_graph6("?"), empty_graph(0));
  EXPECT_EQ(decode_graph6(encode_graph6(complete_graph(3))), complete_graph(3));
  EXPECT_EQ(encode_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(decode_graph6(encode_graph6(turan_graph(10, 3))).edge_count(), 33);
  EXPECT_EQ(decode_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, LongHeader) {
  const Graph g = path_graph(63);
  const std::string text = encode_graph6(g);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(decode_graph6(text), g);
}

TEST(Graph6, RoundTrip) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> order(0, 20);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const Graph g = oracle::random_graph(rng, order(rng), prob(rng));
    ASSERT_EQ(decode_graph6(encode_graph6(g)), g);
  }
}

TEST(Graph6, Malformed) {
  EXPECT_THROW(decode_graph6(""), Graph6Error);
  EXPECT_THROW(decode_graph6("C"), Graph6Error);        // body too short
  EXPECT_THROW(decode_graph6("C~~"), Graph6Error);      // trailing data
  EXPECT_THROW(decode_graph6("C\x7f"), Graph6Error);    // byte out of range
  EXPECT_THROW(decode_graph6("C "), Graph6Error);       // byte out of range
  EXPECT_THROW(decode_graph6("Bx"), Graph6Error);       // non-zero padding
  EXPECT_THROW(decode_graph6("~?@"), Graph6Error);      // truncated long header
  EXPECT_THROW(decode_graph6("~??C"), Graph6Error);     // short n in long form
}

TEST(Graph6, StreamReportsLine) {
  std::istringstream in("C~\n\nBw\nBx\n");
  try {
    read_graph6_stream(in);
    FAIL() << "expected Graph6Error";
  } catch (const Graph6Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
  std::istringstream ok("C~\n\nBw\n");
  const auto lines = read_graph6_stream(ok);
  ASSERT_EQ(lines.size(), 2U);
  EXPECT_EQ(lines[1].line_number, 3);
  EXPECT_EQ(lines[1].graph, complete_graph(3));
}
