#include <doctest.h>

#include "strata/graph.hpp"
#include "strata/graphs.hpp"
#include "strata/trees.hpp"

using namespace strata;

namespace {

Graph make(std::vector<int> genus, std::vector<Leg> legs, std::vector<Edge> edges) {
  Graph g;
  g.genus = std::move(genus);
  g.legs = std::move(legs);
  g.edges = std::move(edges);
  return g;
}

}  // namespace

TEST_CASE("automorphism counts") {
  CHECK(canonical_graph(make({1, 1}, {}, {{0, 1}})).aut == 2);
  CHECK(canonical_graph(make({0, 0}, {}, {{0, 1}, {0, 1}, {0, 1}})).aut == 12);
  CHECK(canonical_graph(make({2}, {{0, 1}}, {})).aut == 1);
  // self loop on a genus-1 vertex: the two half-edges swap
  CHECK(canonical_graph(make({1}, {}, {{0, 0}})).aut == 2);
}

TEST_CASE("canonical key ignores vertex order") {
  Graph a = make({0, 2}, {{0, 1}, {0, 2}}, {{0, 1}});
  Graph b = make({2, 0}, {{1, 1}, {1, 2}}, {{1, 0}});
  CHECK(canonical_key(a) == canonical_key(b));
  Graph c = make({2, 0}, {{1, 1}, {0, 2}}, {{1, 0}});
  CHECK_THROWS(validate(c));  // unstable genus-0 vertex with one leg and one edge
}

TEST_CASE("stable graph counts") {
  CHECK(stable_graphs(0, 3).size() == 1);
  CHECK(stable_graphs(0, 4).size() == 4);
  CHECK(stable_graphs(0, 5).size() == 26);
  CHECK(stable_graphs(1, 1).size() == 2);
  CHECK(stable_graphs(2, 0).size() == 7);
  CHECK(graphs_with_edges(0, 5, 2).size() == 15);
}

TEST_CASE("filters are nested") {
  for (int n = 1; n <= 3; ++n) {
    auto all = enumerate_stable_graphs(2, n, GraphFilter::All).size();
    auto tilde = enumerate_stable_graphs(2, n, GraphFilter::Tilde).size();
    auto ct = enumerate_stable_graphs(2, n, GraphFilter::CompactType).size();
    auto rt = enumerate_stable_graphs(2, n, GraphFilter::RationalTails).size();
    CHECK(rt <= ct);
    CHECK(ct <= tilde);
    CHECK(tilde <= all);
  }
  for (const auto& e : enumerate_stable_graphs(2, 3, GraphFilter::CompactType)) CHECK(is_in_G_tilde(e.graph));
}

TEST_CASE("record round trip") {
  for (const auto& e : stable_graphs(2, 1)) {
    std::string rec = graph_record(e.graph, e.aut);
    CHECK(canonical_key(parse_graph_record(rec)) == e.key);
  }
}

TEST_CASE("edge classification") {
  auto c = classify_edges(make({1, 1}, {}, {{0, 1}}));
  CHECK(c.kind[0] == EdgeKind::E1);

  Graph g = make({2, 0}, {{1, 1}, {1, 2}}, {{0, 1}});
  auto k = classify_edges(g);
  CHECK(k.kind[0] == EdgeKind::E2);
  CHECK(g.flag_vertex(k.h[0]) == 1);
  CHECK(k.hprime[0] == g.other_flag(k.h[0]));

  Graph banana = make({1, 0}, {{1, 1}, {1, 2}}, {{0, 1}, {0, 1}});
  auto b = classify_edges(banana);
  CHECK(b.kind[0] == EdgeKind::NonDisconnecting);
  CHECK(b.kind[1] == EdgeKind::NonDisconnecting);
  CHECK(disconnecting_edges(banana) == std::vector<bool>{false, false});
}

TEST_CASE("core and outward flags") {
  Graph single = make({2}, {}, {});
  auto s = core_and_outward(single);
  CHECK(s.core_vertex[0]);
  CHECK(s.outward.empty());

  Graph g = make({2, 0}, {{1, 1}, {1, 2}}, {{0, 1}});
  auto d = core_and_outward(g);
  CHECK(d.core_vertex[0]);
  CHECK(!d.core_vertex[1]);
  // the legs and the half-edge at the core all map to that half-edge
  int h = g.edge_flag(0, 0);
  CHECK(d.outward[0]);
  CHECK(d.outward[1]);
  CHECK(d.outward[h]);
  CHECK(!d.outward[g.edge_flag(0, 1)]);
  CHECK(d.w[0] == h);
  CHECK(d.w[1] == h);

  // a genus-2 vertex with an external tree of three vertices and four legs:
  // four legs and three half-edges point outward
  Graph t = make({2, 0, 0, 0}, {{2, 1}, {2, 2}, {3, 3}, {3, 4}}, {{0, 1}, {1, 2}, {1, 3}});
  auto o = core_and_outward(t);
  int count = 0;
  int hcore = t.edge_flag(0, 0);
  for (int f = 0; f < t.num_flags(); ++f) {
    if (!o.outward[f]) continue;
    ++count;
    CHECK(o.w[f] == hcore);
  }
  CHECK(count == 7);
}

TEST_CASE("enlarged graph set") {
  Graph banana = make({1, 0}, {{1, 1}, {1, 2}}, {{0, 1}, {0, 1}});
  CHECK(is_in_G_tilde(banana));
  // two genus-0 vertices joined by three edges: no genus-positive core vertex
  Graph theta = make({0, 0}, {{0, 1}, {1, 2}}, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(!is_in_G_tilde(theta));
  // genus-0 vertex with two self loops
  Graph loops = make({0}, {{0, 1}}, {{0, 0}, {0, 0}});
  CHECK(!is_in_G_tilde(loops));
  for (const auto& e : stable_graphs(2, 2))
    if (e.graph.h1() == 0) CHECK(is_in_G_tilde(e.graph));
}

TEST_CASE("rooted trees") {
  CHECK(rooted_trees(2).size() == 1);
  CHECK(rooted_trees(3).size() == 4);
  CHECK(rooted_trees(4).size() == 26);
  CHECK(rooted_trees_ne(3).size() == 2);
  for (const auto& t : rooted_trees(4)) {
    TreeGraph tg = tree_graph(t);
    int root = tg.graph.leg_with_marking(5);
    CHECK(tg.h[tg.graph.legs[root].vertex] == root);
  }
}

TEST_CASE("partial labels") {
  // elliptic vertex on a square of rational vertices, marking 4 fixed, three open legs
  Graph sq = make({1, 0, 0, 0}, {{1, 4}, {2, 0}, {3, 0}, {3, 0}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(expand_partial_labels(sq, {1, 2, 3}).size() == 3);

  Graph fixed = make({2, 0}, {{1, 1}, {1, 2}}, {{0, 1}});
  CHECK(expand_partial_labels(fixed, {}).size() == 1);

  Graph many = make({1, 0}, {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}, {{0, 1}, {0, 1}});
  CHECK(expand_partial_labels(many, {1, 2, 3, 4}).empty());
}
