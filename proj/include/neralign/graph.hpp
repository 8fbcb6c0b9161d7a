#ifndef NERALIGN_GRAPH_HPP
#define NERALIGN_GRAPH_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "neralign/monoid.hpp"

namespace neralign {

struct Edge {
  std::string id;
  std::string u;
  std::string v;
  Label label;

  bool is_loop() const { return u == v; }
};

/// Finite multigraph (loops allowed) with non-unit monomial labels on edges.
/// Models the dual graph of a degenerate fibre, an edge per singular point
/// labelled by its singular ideal. Immutable after construction.
class LabelledGraph {
 public:
  LabelledGraph() = default;
  LabelledGraph(std::vector<std::string> vertices, std::vector<Edge> edges,
                std::set<std::string> generators);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::set<std::string>& generators() const { return generators_; }

  bool has_vertex(const std::string& id) const;
  std::size_t vertex_index(const std::string& id) const;
  const Edge& edge(const std::string& id) const;
  bool is_connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::set<std::string> generators_;
  std::map<std::string, std::size_t> vertex_index_;
  std::map<std::string, std::size_t> edge_index_;
};

/// Partition of the edge set into maximal 2-vertex-connected components.
/// A bridge is its own block and a loop is its own block. Blocks are returned
/// with their edge ids sorted, and the list itself sorted lexicographically.
std::vector<std::vector<std::string>> blocks(const LabelledGraph& graph);

struct AlignmentWitness {
  std::size_t block_index = 0;
  std::vector<std::string> block_edges;
  std::string edge_a;
  std::string edge_b;
};

struct AlignmentVerdict {
  bool aligned = true;
  std::optional<AlignmentWitness> witness;
};

/// A graph is aligned when within every block of two or more edges all labels
/// are pairwise proportional. Loops and bridges impose no condition: a loop
/// is a one-edge circuit and trivially satisfies its own relation.
AlignmentVerdict is_aligned(const LabelledGraph& graph);

/// Replaces every edge of total label degree d >= 2 by a chain of d edges,
/// each labelled by a single generator. The canonical chain order lists the
/// label's generators sorted by name, each repeated by its exponent.
LabelledGraph regularise(const LabelledGraph& graph);

/// Regularisation with caller-chosen chain orders. `chain_order` receives an
/// edge needing refinement and must return a permutation of the canonical
/// single-generator label multiset for that edge.
LabelledGraph regularise(
    const LabelledGraph& graph,
    const std::function<std::vector<Label>(const Edge&)>& chain_order);

/// Alignment of the canonical regularisation. The verdict is independent of
/// the chain order chosen, which the property tests assert.
AlignmentVerdict is_strictly_aligned(const LabelledGraph& graph);

/// Monoid homomorphism between free label monoids, given on generators.
/// Images must be non-unit: a map killing a generator would contract edges,
/// which is the job of specialise, not pullback.
class GeneratorMap {
 public:
  GeneratorMap() = default;
  explicit GeneratorMap(std::map<std::string, Label> images);

  const std::map<std::string, Label>& images() const { return images_; }
  Label apply(const Label& label) const;

 private:
  std::map<std::string, Label> images_;
};

/// Same underlying graph, labels pushed through the homomorphism. The
/// declared generator set becomes the union of the image supports.
LabelledGraph pullback(const LabelledGraph& graph, const GeneratorMap& map);

/// Deletes the chosen generators from every label, contracts every non-loop
/// edge whose label becomes a unit and drops unit-labelled loops. Merged
/// vertices keep the smallest id in their class.
LabelledGraph specialise(const LabelledGraph& graph,
                         const std::set<std::string>& invert);

/// Simple circuit: vertices[i] -- edges[i] -- vertices[i+1 mod n]. A loop is
/// the one-edge circuit on its vertex.
struct Circuit {
  std::vector<std::string> vertices;
  std::vector<std::string> edges;
};

/// Enumerates the simple circuits containing the given edge. `visit` returns
/// true to stop early. Enumeration order is deterministic.
void for_each_circuit_through(
    const LabelledGraph& graph, const std::string& edge_id,
    const std::function<bool(const Circuit&)>& visit);

/// Enumerates every simple circuit of the graph once (up to rotation and
/// reflection). Intended for desk-scale oracle checks.
std::vector<Circuit> all_circuits(const LabelledGraph& graph);

}  // namespace neralign

#endif  // NERALIGN_GRAPH_HPP
