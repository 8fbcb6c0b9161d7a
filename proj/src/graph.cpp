#include "neralign/graph.hpp"

#include <algorithm>
#include <cstddef>
#include <queue>
#include <stack>

namespace neralign {

namespace {

// Incidence list entry: (edge index, other endpoint index).
struct Incidence {
  std::size_t edge;
  std::size_t other;
};

std::vector<std::vector<Incidence>> incidence_lists(
    const LabelledGraph& graph) {
  std::vector<std::vector<Incidence>> incident(graph.vertices().size());
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const Edge& edge = graph.edges()[e];
    std::size_t u = graph.vertex_index(edge.u);
    std::size_t v = graph.vertex_index(edge.v);
    incident[u].push_back({e, v});
    if (u != v) incident[v].push_back({e, u});
  }
  return incident;
}

}  // namespace

LabelledGraph::LabelledGraph(std::vector<std::string> vertices,
                             std::vector<Edge> edges,
                             std::set<std::string> generators)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      generators_(std::move(generators)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second) {
      throw DomainError(ErrorCode::kBadInput,
                        "duplicate vertex id '" + vertices_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& edge = edges_[i];
    if (!edge_index_.emplace(edge.id, i).second) {
      throw DomainError(ErrorCode::kBadInput,
                        "duplicate edge id '" + edge.id + "'");
    }
    if (!vertex_index_.count(edge.u) || !vertex_index_.count(edge.v)) {
      throw DomainError(ErrorCode::kUnknownVertex,
                        "edge '" + edge.id + "' references unknown vertex");
    }
    if (edge.label.is_identity()) {
      throw DomainError(ErrorCode::kUnitLabel,
                        "edge '" + edge.id + "' has a unit label");
    }
    for (const auto& [name, exponent] : edge.label.exponents()) {
      if (!generators_.count(name)) {
        throw DomainError(ErrorCode::kUnknownGenerator,
                          "edge '" + edge.id + "' uses undeclared generator '" +
                              name + "'");
      }
    }
  }
}

bool LabelledGraph::has_vertex(const std::string& id) const {
  return vertex_index_.count(id) > 0;
}

std::size_t LabelledGraph::vertex_index(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) {
    throw DomainError(ErrorCode::kUnknownVertex, "unknown vertex '" + id + "'");
  }
  return it->second;
}

const Edge& LabelledGraph::edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) {
    throw DomainError(ErrorCode::kBadInput, "unknown edge '" + id + "'");
  }
  return edges_[it->second];
}

bool LabelledGraph::is_connected() const {
  if (vertices_.empty()) return true;
  auto incident = incidence_lists(*this);
  std::vector<bool> seen(vertices_.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    std::size_t at = frontier.front();
    frontier.pop();
    for (const Incidence& inc : incident[at]) {
      if (!seen[inc.other]) {
        seen[inc.other] = true;
        ++reached;
        frontier.push(inc.other);
      }
    }
  }
  return reached == vertices_.size();
}

std::vector<std::vector<std::string>> blocks(const LabelledGraph& graph) {
  const auto& edges = graph.edges();
  std::vector<std::vector<std::string>> result;

  // Loops first: each is its own maximal 2-vertex-connected subgraph.
  for (const Edge& edge : edges) {
    if (edge.is_loop()) result.push_back({edge.id});
  }

  auto incident = incidence_lists(graph);
  std::size_t n = graph.vertices().size();
  std::vector<int> disc(n, 0);
  std::vector<int> low(n, 0);
  int timer = 0;
  std::vector<std::size_t> edge_stack;

  // Tarjan lowpoint search; parallel edges to the parent count as back edges,
  // only the exact tree edge is skipped.
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t at,
                                                          std::size_t via) {
    disc[at] = low[at] = ++timer;
    for (const Incidence& inc : incident[at]) {
      if (inc.edge == via) continue;
      if (graph.edges()[inc.edge].is_loop()) continue;
      if (disc[inc.other] == 0) {
        edge_stack.push_back(inc.edge);
        dfs(inc.other, inc.edge);
        low[at] = std::min(low[at], low[inc.other]);
        if (low[inc.other] >= disc[at]) {
          std::vector<std::string> block;
          while (true) {
            std::size_t top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(graph.edges()[top].id);
            if (top == inc.edge) break;
          }
          result.push_back(std::move(block));
        }
      } else if (disc[inc.other] < disc[at]) {
        edge_stack.push_back(inc.edge);
        low[at] = std::min(low[at], disc[inc.other]);
      }
    }
  };

  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] == 0) dfs(v, static_cast<std::size_t>(-1));
  }

  for (auto& block : result) std::sort(block.begin(), block.end());
  std::sort(result.begin(), result.end());
  return result;
}

AlignmentVerdict is_aligned(const LabelledGraph& graph) {
  auto block_list = blocks(graph);
  for (std::size_t b = 0; b < block_list.size(); ++b) {
    const auto& block = block_list[b];
    if (block.size() < 2) continue;
    const Edge& reference = graph.edge(block.front());
    Label direction = reference.label.primitive_decomposition().first;
    for (std::size_t i = 1; i < block.size(); ++i) {
      const Edge& other = graph.edge(block[i]);
      if (other.label.primitive_decomposition().first != direction) {
        AlignmentVerdict verdict;
        verdict.aligned = false;
        verdict.witness =
            AlignmentWitness{b, block, reference.id, other.id};
        return verdict;
      }
    }
  }
  return AlignmentVerdict{};
}

namespace {

std::vector<Label> canonical_chain(const Edge& edge) {
  std::vector<Label> singles;
  for (const auto& [name, exponent] : edge.label.exponents()) {
    for (int i = 0; i < exponent; ++i) singles.push_back(Label::generator(name));
  }
  return singles;
}

std::string fresh_id(const std::string& base, std::set<std::string>& used) {
  std::string candidate = base;
  while (!used.insert(candidate).second) candidate += "~";
  return candidate;
}

}  // namespace

LabelledGraph regularise(
    const LabelledGraph& graph,
    const std::function<std::vector<Label>(const Edge&)>& chain_order) {
  std::vector<std::string> vertices = graph.vertices();
  std::set<std::string> used_vertices(vertices.begin(), vertices.end());
  std::set<std::string> used_edges;
  std::vector<Edge> edges;

  for (const Edge& edge : graph.edges()) {
    int degree = edge.label.total_degree();
    if (degree <= 1) {
      used_edges.insert(edge.id);
      edges.push_back(edge);
      continue;
    }
    std::vector<Label> chain = chain_order(edge);
    {
      auto expected = canonical_chain(edge);
      auto sorted = chain;
      std::sort(sorted.begin(), sorted.end());
      std::sort(expected.begin(), expected.end());
      if (sorted != expected) {
        throw DomainError(ErrorCode::kBadInput,
                          "chain order for edge '" + edge.id +
                              "' is not a permutation of its label");
      }
    }
    std::string previous = edge.u;
    for (std::size_t k = 0; k < chain.size(); ++k) {
      std::string next;
      if (k + 1 == chain.size()) {
        next = edge.v;
      } else {
        next = fresh_id(edge.id + "." + std::to_string(k + 1), used_vertices);
        vertices.push_back(next);
      }
      Edge piece;
      piece.id = fresh_id(edge.id + "." + std::to_string(k), used_edges);
      piece.u = previous;
      piece.v = next;
      piece.label = chain[k];
      edges.push_back(std::move(piece));
      previous = next;
    }
  }
  return LabelledGraph(std::move(vertices), std::move(edges),
                       graph.generators());
}

LabelledGraph regularise(const LabelledGraph& graph) {
  return regularise(graph,
                    [](const Edge& edge) { return canonical_chain(edge); });
}

AlignmentVerdict is_strictly_aligned(const LabelledGraph& graph) {
  return is_aligned(regularise(graph));
}

GeneratorMap::GeneratorMap(std::map<std::string, Label> images)
    : images_(std::move(images)) {
  for (const auto& [name, image] : images_) {
    if (image.is_identity()) {
      throw DomainError(ErrorCode::kUnitLabel,
                        "generator map sends '" + name +
                            "' to a unit; use specialise to contract edges");
    }
  }
}

Label GeneratorMap::apply(const Label& label) const {
  Label result;
  for (const auto& [name, exponent] : label.exponents()) {
    auto it = images_.find(name);
    if (it == images_.end()) {
      throw DomainError(ErrorCode::kUnknownGenerator,
                        "generator '" + name + "' not in the map's domain");
    }
    result = result.times(it->second.pow(exponent));
  }
  return result;
}

LabelledGraph pullback(const LabelledGraph& graph, const GeneratorMap& map) {
  std::set<std::string> generators;
  for (const auto& [name, image] : map.images()) {
    for (const auto& [target, exponent] : image.exponents()) {
      generators.insert(target);
    }
  }
  std::vector<Edge> edges = graph.edges();
  for (Edge& edge : edges) edge.label = map.apply(edge.label);
  return LabelledGraph(graph.vertices(), std::move(edges),
                       std::move(generators));
}

LabelledGraph specialise(const LabelledGraph& graph,
                         const std::set<std::string>& invert) {
  // Union-find keyed by vertex id; the class representative is the least id.
  std::map<std::string, std::string> parent;
  for (const auto& v : graph.vertices()) parent[v] = v;
  std::function<std::string(const std::string&)> find =
      [&](const std::string& v) -> std::string {
    if (parent[v] == v) return v;
    return parent[v] = find(parent[v]);
  };
  auto unite = [&](const std::string& a, const std::string& b) {
    std::string ra = find(a);
    std::string rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  };

  auto reduce = [&](const Label& label) {
    std::map<std::string, int> kept = label.exponents();
    for (const auto& name : invert) kept.erase(name);
    return Label(std::move(kept));
  };

  for (const Edge& edge : graph.edges()) {
    if (reduce(edge.label).is_identity() && !edge.is_loop()) {
      unite(edge.u, edge.v);
    }
  }

  std::vector<std::string> vertices;
  std::set<std::string> seen_representatives;
  for (const auto& v : graph.vertices()) {
    std::string representative = find(v);
    if (seen_representatives.insert(representative).second) {
      vertices.push_back(representative);
    }
  }

  std::vector<Edge> edges;
  for (const Edge& edge : graph.edges()) {
    Label label = reduce(edge.label);
    if (label.is_identity()) continue;
    Edge mapped;
    mapped.id = edge.id;
    mapped.u = find(edge.u);
    mapped.v = find(edge.v);
    mapped.label = std::move(label);
    edges.push_back(std::move(mapped));
  }

  std::set<std::string> generators;
  for (const auto& name : graph.generators()) {
    if (!invert.count(name)) generators.insert(name);
  }
  return LabelledGraph(std::move(vertices), std::move(edges),
                       std::move(generators));
}

namespace {

// Depth-first enumeration of simple paths target-wards; every completed path
// closes into a circuit through `seed`. Circuits are deduplicated on their
// edge sets, which determine simple circuits uniquely.
struct CircuitSearch {
  const LabelledGraph& graph;
  std::vector<std::vector<Incidence>> incident;
  std::set<std::vector<std::string>> seen;
  const std::function<bool(const Circuit&)>& visit;
  bool stopped = false;

  CircuitSearch(const LabelledGraph& g,
                const std::function<bool(const Circuit&)>& v)
      : graph(g), incident(incidence_lists(g)), visit(v) {}

  bool emit(const Circuit& circuit) {
    std::vector<std::string> key = circuit.edges;
    std::sort(key.begin(), key.end());
    if (!seen.insert(std::move(key)).second) return false;
    if (visit(circuit)) {
      stopped = true;
      return true;
    }
    return false;
  }

  void paths(std::size_t at, std::size_t target, std::size_t seed_edge,
             std::vector<bool>& on_path, std::vector<std::size_t>& path_edges,
             std::vector<std::size_t>& path_vertices,
             std::size_t min_edge_index) {
    if (stopped) return;
    for (const Incidence& inc : incident[at]) {
      if (stopped) return;
      if (inc.edge == seed_edge || inc.edge < min_edge_index) continue;
      if (graph.edges()[inc.edge].is_loop()) continue;
      if (inc.other == target) {
        // vertices: u, v, interior...; edges: seed, path..., closing edge.
        Circuit circuit;
        const Edge& seed = graph.edges()[seed_edge];
        circuit.vertices.push_back(seed.u);
        for (std::size_t vertex : path_vertices) {
          circuit.vertices.push_back(graph.vertices()[vertex]);
        }
        circuit.edges.push_back(seed.id);
        for (std::size_t path_edge : path_edges) {
          circuit.edges.push_back(graph.edges()[path_edge].id);
        }
        circuit.edges.push_back(graph.edges()[inc.edge].id);
        if (emit(circuit)) return;
        continue;
      }
      if (on_path[inc.other]) continue;
      on_path[inc.other] = true;
      path_vertices.push_back(inc.other);
      path_edges.push_back(inc.edge);
      paths(inc.other, target, seed_edge, on_path, path_edges, path_vertices,
            min_edge_index);
      path_edges.pop_back();
      path_vertices.pop_back();
      on_path[inc.other] = false;
    }
  }

  void through(std::size_t seed_edge, std::size_t min_edge_index) {
    const Edge& seed = graph.edges()[seed_edge];
    if (seed.is_loop()) {
      Circuit circuit;
      circuit.vertices.push_back(seed.u);
      circuit.edges.push_back(seed.id);
      emit(circuit);
      return;
    }
    std::size_t u = graph.vertex_index(seed.u);
    std::size_t v = graph.vertex_index(seed.v);
    std::vector<bool> on_path(graph.vertices().size(), false);
    on_path[u] = true;
    on_path[v] = true;
    std::vector<std::size_t> path_edges;
    std::vector<std::size_t> path_vertices{v};
    paths(v, u, seed_edge, on_path, path_edges, path_vertices, min_edge_index);
  }
};

}  // namespace

void for_each_circuit_through(
    const LabelledGraph& graph, const std::string& edge_id,
    const std::function<bool(const Circuit&)>& visit) {
  const Edge& seed = graph.edge(edge_id);
  std::size_t seed_index = 0;
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    if (graph.edges()[i].id == seed.id) seed_index = i;
  }
  CircuitSearch search(graph, visit);
  search.through(seed_index, 0);
}

std::vector<Circuit> all_circuits(const LabelledGraph& graph) {
  std::vector<Circuit> circuits;
  auto collect = [&](const Circuit& circuit) {
    circuits.push_back(circuit);
    return false;
  };
  std::function<bool(const Circuit&)> visit = collect;
  CircuitSearch search(graph, visit);
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    // Each circuit is reported from its least edge index only.
    search.through(e, e);
  }
  return circuits;
}

}  // namespace neralign
