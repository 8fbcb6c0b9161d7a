#ifndef NERALIGN_DIVISORS_HPP
#define NERALIGN_DIVISORS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "neralign/graph.hpp"
#include "neralign/monoid.hpp"

namespace neralign {

/// Integer weighting of the vertices; the combinatorial shadow of a fibral
/// divisor (the multiplicity along the component at each vertex).
using VertexLabelling = std::map<std::string, long long>;

/// Labelled graph with a positive integer thickness per edge: the width of
/// each singular point after pulling back along a test trait.
class ThicknessGraph {
 public:
  ThicknessGraph(LabelledGraph graph, std::map<std::string, long long> thickness);

  /// Thicknesses taken as the trait order of each edge label. Every order
  /// must be positive; contract zero-order edges with specialise first.
  static ThicknessGraph from_trait(const LabelledGraph& graph,
                                   const TraitSpec& trait);

  const LabelledGraph& graph() const { return graph_; }
  long long thickness_of(const std::string& edge_id) const;

 private:
  LabelledGraph graph_;
  std::map<std::string, long long> thickness_;
};

struct TCartierVerdict {
  bool cartier = true;
  std::optional<std::string> violating_edge;
};

/// True when every edge difference m(v1) - m(v2) is divisible by the edge's
/// thickness; otherwise reports the first violating edge in edge order.
TCartierVerdict is_T_cartier(const ThicknessGraph& graph,
                             const VertexLabelling& labelling);

/// Connected components of the graph after deleting E(a), the edges whose
/// label b satisfies b^k = a for some k >= 1 (a = b counts with k = 1). The
/// vertex set is unchanged; components are sorted vertex-id lists.
std::vector<std::vector<std::string>> components_after_deleting(
    const LabelledGraph& graph, const Label& a);

struct CartierPart {
  VertexLabelling values;
  /// Witness edge set: the labels agree up to proportionality and the part
  /// is locally constant away from these edges.
  std::vector<std::string> witness_edges;
};

/// Splits a T-Cartier labelling into Cartier pre-achievable parts along the
/// block-cut tree, breadth-first from the lexicographically least block.
/// Every returned part is itself T-Cartier, carries its witness edge set and
/// the parts sum to the input. Requires a connected graph whose non-bridge
/// blocks have pairwise proportional labels.
std::vector<CartierPart> decompose_cartier(const ThicknessGraph& graph,
                                           const VertexLabelling& labelling);

/// Checks the pre-achievability witness directly: all edges in `witness`
/// carry pairwise proportional labels and the labelling is constant on every
/// connected component left after deleting them.
bool is_pre_achievable_with(const LabelledGraph& graph,
                            const VertexLabelling& labelling,
                            const std::vector<std::string>& witness);

/// Combinatorial descriptor of a primitive fibral divisor: the base label a,
/// one connected component H of the graph with E(a) deleted, and an integer
/// coefficient. Its induced vertex labelling is
/// coefficient * ord_T(a) on H and zero elsewhere.
struct PrimitiveDivisorDescriptor {
  Label base;
  std::vector<std::string> component;
  long long coefficient = 0;
};

VertexLabelling induced_labelling(const LabelledGraph& graph,
                                  const TraitSpec& trait,
                                  const PrimitiveDivisorDescriptor& descriptor);

/// Writes a T-Cartier labelling with a zero vertex as an integer combination
/// of primitive fibral divisors. The graph must be aligned; the combined
/// induced labelling of the result reconstructs the input exactly.
std::vector<PrimitiveDivisorDescriptor> extend_vertex_labelling(
    const LabelledGraph& graph, const TraitSpec& trait,
    const VertexLabelling& labelling);

/// Certificate that no fibral Cartier divisor extension can exist: a circuit
/// carrying two adjacent unrelated labels, the divisor coefficient
/// d = ord_T(a0) * ord_T(a1), and the monomial identity
/// a1^ord_T(a2) = a0^ord_T(a1) that an extension would force. The identity
/// fails in the free monoid because a0 and a1 are not proportional.
struct ObstructionCertificate {
  Circuit circuit;
  std::string edge_a;
  std::string edge_b;
  Label label_a;
  Label label_b;
  Label label_next;
  long long coefficient_d = 0;
  Label forced_lhs;
  Label forced_rhs;
};

/// Returns a checked certificate when the graph is not aligned, nothing when
/// it is. The trait must give positive order to every generator appearing on
/// the chosen circuit.
std::optional<ObstructionCertificate> obstruction_witness(
    const LabelledGraph& graph, const TraitSpec& trait);

}  // namespace neralign

#endif  // NERALIGN_DIVISORS_HPP
