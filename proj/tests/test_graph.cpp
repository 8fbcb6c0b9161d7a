#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "generators.hpp"
#include "neralign/graph.hpp"

using namespace neralign;

namespace {

LabelledGraph two_gon(const Label& a, const Label& b,
                      std::set<std::string> generators) {
  return LabelledGraph({"v0", "v1"},
                       {{"e0", "v0", "v1", a}, {"e1", "v0", "v1", b}},
                       std::move(generators));
}

LabelledGraph c1_graph() {
  return two_gon(Label({{"t", 1}}), Label({{"t", 1}}), {"s", "t"});
}

LabelledGraph c2_graph() {
  return two_gon(Label({{"s", 1}}), Label({{"t", 1}}), {"s", "t"});
}

// Oracle for block structure: the maximal 2-vertex-connected subgraph through
// an edge is the union of all 2-vertex-connected edge subsets containing it,
// found by enumerating every subset. Loops are their own blocks by fiat.
bool subset_two_connected(const LabelledGraph& graph,
                          const std::vector<std::size_t>& subset) {
  std::set<std::string> vertices;
  for (std::size_t e : subset) {
    vertices.insert(graph.edges()[e].u);
    vertices.insert(graph.edges()[e].v);
  }
  if (vertices.empty()) return false;
  auto connected_without = [&](const std::string& removed) {
    std::set<std::string> remaining = vertices;
    remaining.erase(removed);
    if (remaining.empty()) return false;
    std::map<std::string, std::string> parent;
    for (const auto& v : remaining) parent[v] = v;
    std::function<std::string(const std::string&)> find =
        [&](const std::string& v) -> std::string {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (std::size_t e : subset) {
      const Edge& edge = graph.edges()[e];
      if (edge.u == removed || edge.v == removed) continue;
      parent[find(edge.u)] = find(edge.v);
    }
    std::string root = find(*remaining.begin());
    for (const auto& v : remaining) {
      if (find(v) != root) return false;
    }
    return true;
  };
  for (const auto& v : vertices) {
    if (!connected_without(v)) return false;
  }
  // Also require plain connectivity (deleting nothing).
  std::map<std::string, std::string> parent;
  for (const auto& v : vertices) parent[v] = v;
  std::function<std::string(const std::string&)> find =
      [&](const std::string& v) -> std::string {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  for (std::size_t e : subset) {
    parent[find(graph.edges()[e].u)] = find(graph.edges()[e].v);
  }
  std::string root = find(*vertices.begin());
  for (const auto& v : vertices) {
    if (find(v) != root) return false;
  }
  return true;
}

std::vector<std::vector<std::string>> brute_blocks(const LabelledGraph& graph) {
  std::size_t m = graph.edges().size();
  std::vector<std::set<std::string>> maximal(m);
  for (std::size_t e = 0; e < m; ++e) {
    maximal[e].insert(graph.edges()[e].id);
  }
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    std::vector<std::size_t> subset;
    bool has_loop = false;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask & (std::size_t(1) << e)) {
        subset.push_back(e);
        has_loop = has_loop || graph.edges()[e].is_loop();
      }
    }
    if (has_loop && subset.size() > 1) continue;
    if (subset.size() > 1 && !subset_two_connected(graph, subset)) continue;
    if (subset.size() == 1 && graph.edges()[subset[0]].is_loop()) {
      continue;  // loop alone: own block, already seeded
    }
    if (subset.size() == 1) continue;  // single non-loop edge: seeded
    for (std::size_t e : subset) {
      for (std::size_t f : subset) {
        maximal[e].insert(graph.edges()[f].id);
      }
    }
  }
  std::set<std::vector<std::string>> unique;
  for (std::size_t e = 0; e < m; ++e) {
    std::vector<std::string> block(maximal[e].begin(), maximal[e].end());
    unique.insert(block);
  }
  return {unique.begin(), unique.end()};
}

}  // namespace

TEST_CASE("blocks on small graphs") {
  auto gon = blocks(c1_graph());
  REQUIRE(gon.size() == 1);
  CHECK(gon[0] == std::vector<std::string>{"e0", "e1"});

  LabelledGraph path({"v0", "v1", "v2"},
                     {{"e0", "v0", "v1", Label({{"s", 1}})},
                      {"e1", "v1", "v2", Label({{"t", 1}})}},
                     {"s", "t"});
  auto path_blocks = blocks(path);
  REQUIRE(path_blocks.size() == 2);
  CHECK(path_blocks[0] == std::vector<std::string>{"e0"});
  CHECK(path_blocks[1] == std::vector<std::string>{"e1"});

  LabelledGraph bowtie({"a", "b", "c", "d", "e"},
                       {{"e0", "a", "b", Label({{"s", 1}})},
                        {"e1", "b", "c", Label({{"s", 1}})},
                        {"e2", "c", "a", Label({{"s", 1}})},
                        {"e3", "c", "d", Label({{"t", 1}})},
                        {"e4", "d", "e", Label({{"t", 1}})},
                        {"e5", "e", "c", Label({{"t", 1}})}},
                       {"s", "t"});
  auto bowtie_blocks = blocks(bowtie);
  REQUIRE(bowtie_blocks.size() == 2);
  CHECK(bowtie_blocks[0] == std::vector<std::string>{"e0", "e1", "e2"});
  CHECK(bowtie_blocks[1] == std::vector<std::string>{"e3", "e4", "e5"});
  CHECK(brute_blocks(bowtie) == bowtie_blocks);
}

TEST_CASE("blocks match the exhaustive definition on random graphs") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    LabelledGraph graph = testing::random_graph(rng, 5, 7);
    CHECK(blocks(graph) == brute_blocks(graph));
  }
}

TEST_CASE("alignment of the gallery graphs") {
  CHECK(is_aligned(c1_graph()).aligned);

  auto c2 = is_aligned(c2_graph());
  CHECK_FALSE(c2.aligned);
  REQUIRE(c2.witness.has_value());
  CHECK(c2.witness->edge_a == "e0");
  CHECK(c2.witness->edge_b == "e1");

  LabelledGraph loop({"v0"}, {{"e0", "v0", "v0", Label({{"s", 1}})}}, {"s"});
  CHECK(is_aligned(loop).aligned);
}

TEST_CASE("aligned iff every circuit aligned, by enumeration") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    LabelledGraph graph = testing::random_graph(rng, 5, 8);
    bool circuits_fine = true;
    for (const Circuit& circuit : all_circuits(graph)) {
      for (std::size_t a = 0; a < circuit.edges.size() && circuits_fine; ++a) {
        for (std::size_t b = a + 1; b < circuit.edges.size(); ++b) {
          if (!proportional(graph.edge(circuit.edges[a]).label,
                            graph.edge(circuit.edges[b]).label)) {
            circuits_fine = false;
            break;
          }
        }
      }
      if (!circuits_fine) break;
    }
    CHECK(is_aligned(graph).aligned == circuits_fine);
  }
}

TEST_CASE("two edges of a non-bridge block share a circuit") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    LabelledGraph graph = testing::random_graph(rng, 5, 7);
    auto circuits = all_circuits(graph);
    for (const auto& block : blocks(graph)) {
      if (block.size() < 2) continue;
      for (std::size_t a = 0; a < block.size(); ++a) {
        for (std::size_t b = a + 1; b < block.size(); ++b) {
          bool shared = false;
          for (const Circuit& circuit : circuits) {
            bool has_a = std::count(circuit.edges.begin(), circuit.edges.end(),
                                    block[a]) > 0;
            bool has_b = std::count(circuit.edges.begin(), circuit.edges.end(),
                                    block[b]) > 0;
            if (has_a && has_b) {
              shared = true;
              break;
            }
          }
          CHECK(shared);
        }
      }
    }
  }
}

TEST_CASE("canonical regularisation") {
  Label uv({{"u", 1}, {"v", 1}});
  LabelledGraph gon = two_gon(uv, uv, {"u", "v"});
  LabelledGraph regular = regularise(gon);
  CHECK(regular.vertices().size() == 4);
  REQUIRE(regular.edges().size() == 4);
  int u_count = 0;
  int v_count = 0;
  for (const Edge& edge : regular.edges()) {
    CHECK(edge.label.total_degree() == 1);
    if (edge.label == Label({{"u", 1}})) ++u_count;
    if (edge.label == Label({{"v", 1}})) ++v_count;
  }
  CHECK(u_count == 2);
  CHECK(v_count == 2);
  // A 4-gon: every vertex has degree exactly 2.
  std::map<std::string, int> degree;
  for (const Edge& edge : regular.edges()) {
    ++degree[edge.u];
    ++degree[edge.v];
  }
  for (const auto& [vertex, d] : degree) CHECK(d == 2);

  LabelledGraph already = regularise(c2_graph());
  CHECK(already.edges().size() == c2_graph().edges().size());
  CHECK(already.vertices() == c2_graph().vertices());

  LabelledGraph power({"v0", "v1"}, {{"e0", "v0", "v1", Label({{"s", 3}})}},
                      {"s"});
  LabelledGraph chain = regularise(power);
  CHECK(chain.edges().size() == 3);
  CHECK(chain.vertices().size() == 4);
  for (const Edge& edge : chain.edges()) {
    CHECK(edge.label == Label({{"s", 1}}));
  }
}

TEST_CASE("strict alignment examples") {
  Label uv({{"u", 1}, {"v", 1}});
  LabelledGraph mixed = two_gon(uv, uv, {"u", "v"});
  CHECK(is_aligned(mixed).aligned);
  CHECK_FALSE(is_strictly_aligned(mixed).aligned);

  CHECK(is_strictly_aligned(c1_graph()).aligned);

  LabelledGraph powers = two_gon(Label({{"t", 2}}), Label({{"t", 3}}),
                                 {"t"});
  LabelledGraph five_gon = regularise(powers);
  CHECK(five_gon.edges().size() == 5);
  CHECK(is_aligned(five_gon).aligned);
  CHECK(is_strictly_aligned(powers).aligned);
}

TEST_CASE("strictly aligned implies aligned") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 150; ++i) {
    LabelledGraph graph = testing::random_graph(rng, 6, 9);
    if (is_strictly_aligned(graph).aligned) {
      CHECK(is_aligned(graph).aligned);
    }
  }
}

TEST_CASE("regular graphs: aligned equals strictly aligned") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    LabelledGraph graph = testing::random_graph(rng, 6, 9, 1);
    bool regular = true;
    for (const Edge& edge : graph.edges()) {
      regular = regular && edge.label.total_degree() == 1;
    }
    if (!regular) continue;
    CHECK(is_aligned(graph).aligned == is_strictly_aligned(graph).aligned);
  }
}

TEST_CASE("regularisation order does not change the verdict") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 100; ++i) {
    LabelledGraph graph = testing::random_graph(rng, 6, 8);
    bool canonical = is_strictly_aligned(graph).aligned;
    for (int trial = 0; trial < 5; ++trial) {
      auto shuffled = regularise(graph, [&](const Edge& edge) {
        std::vector<Label> singles;
        for (const auto& [name, exponent] : edge.label.exponents()) {
          for (int k = 0; k < exponent; ++k) {
            singles.push_back(Label::generator(name));
          }
        }
        std::shuffle(singles.begin(), singles.end(), rng);
        return singles;
      });
      CHECK(is_aligned(shuffled).aligned == canonical);
    }
  }
}

TEST_CASE("pullback examples") {
  GeneratorMap diagonal({{"s", Label({{"x", 1}, {"y", 1}})},
                         {"t", Label({{"x", 1}, {"y", 1}})}});
  LabelledGraph pulled = pullback(c2_graph(), diagonal);
  CHECK(is_aligned(pulled).aligned);
  CHECK(pulled.edge("e0").label == Label({{"x", 1}, {"y", 1}}));

  GeneratorMap identity({{"s", Label({{"s", 1}})}, {"t", Label({{"t", 1}})}});
  LabelledGraph same = pullback(c1_graph(), identity);
  CHECK(same.edges().size() == 2);
  CHECK(same.edge("e0").label == Label({{"t", 1}}));
  CHECK(same.edge("e1").label == Label({{"t", 1}}));

  GeneratorMap doubling({{"t", Label({{"u", 2}})}, {"s", Label({{"u", 1}})}});
  LabelledGraph doubled = pullback(c1_graph(), doubling);
  CHECK(doubled.edge("e0").label == Label({{"u", 2}}));
  CHECK(is_aligned(doubled).aligned);

  GeneratorMap partial({{"s", Label({{"x", 1}})}});
  CHECK_THROWS_AS(pullback(c1_graph(), partial), DomainError);
  CHECK_THROWS_AS(GeneratorMap({{"s", Label()}}), DomainError);
}

TEST_CASE("pullback preserves alignment") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    LabelledGraph graph = testing::random_aligned_graph(rng, 6, 9);
    REQUIRE(is_aligned(graph).aligned);
    GeneratorMap map = testing::random_generator_map(rng);
    CHECK(is_aligned(pullback(graph, map)).aligned);
  }
}

TEST_CASE("specialise examples") {
  LabelledGraph closed = two_gon(Label({{"x", 1}}), Label({{"y", 1}}),
                                 {"x", "y"});
  LabelledGraph over_y = specialise(closed, {"y"});
  CHECK(over_y.vertices().size() == 1);
  REQUIRE(over_y.edges().size() == 1);
  CHECK(over_y.edges()[0].is_loop());
  CHECK(over_y.edges()[0].label == Label({{"x", 1}}));

  LabelledGraph untouched = specialise(closed, {});
  CHECK(untouched.edges().size() == 2);
  CHECK(untouched.vertices().size() == 2);

  LabelledGraph collapsed = specialise(closed, {"x", "y"});
  CHECK(collapsed.edges().empty());
  CHECK(collapsed.vertices().size() == 1);
}

TEST_CASE("circuit enumeration") {
  LabelledGraph gon = c1_graph();
  std::vector<Circuit> circuits = all_circuits(gon);
  REQUIRE(circuits.size() == 1);
  CHECK(circuits[0].edges.size() == 2);

  LabelledGraph loop({"v0"}, {{"e0", "v0", "v0", Label({{"s", 1}})}}, {"s"});
  auto loop_circuits = all_circuits(loop);
  REQUIRE(loop_circuits.size() == 1);
  CHECK(loop_circuits[0].edges == std::vector<std::string>{"e0"});

  // Theta graph: three parallel 2-paths between a and b; circuits = 3.
  LabelledGraph theta({"a", "m1", "m2", "m3", "b"},
                      {{"e0", "a", "m1", Label({{"s", 1}})},
                       {"e1", "m1", "b", Label({{"s", 1}})},
                       {"e2", "a", "m2", Label({{"s", 1}})},
                       {"e3", "m2", "b", Label({{"s", 1}})},
                       {"e4", "a", "m3", Label({{"s", 1}})},
                       {"e5", "m3", "b", Label({{"s", 1}})}},
                      {"s"});
  CHECK(all_circuits(theta).size() == 3);

  int through = 0;
  for_each_circuit_through(theta, "e0", [&](const Circuit& circuit) {
    ++through;
    CHECK(std::count(circuit.edges.begin(), circuit.edges.end(), "e0") == 1);
    // Consecutive circuit edges share the listed vertex.
    for (std::size_t i = 0; i < circuit.edges.size(); ++i) {
      const Edge& edge = theta.edge(circuit.edges[i]);
      const std::string& shared = circuit.vertices[i];
      CHECK((edge.u == shared || edge.v == shared));
    }
    return false;
  });
  CHECK(through == 2);
}
