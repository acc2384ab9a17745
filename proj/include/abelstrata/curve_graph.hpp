// Dual-graph model of nodal curves.
//
// A curve X is a multigraph: one vertex per irreducible component C_i, weighted
// by its geometric genus g_i, and one edge per node. Loops are self-nodes of a
// component. Vertex and edge declaration order is canonical: every output of
// this library refers to components and nodes by that order.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace abelstrata {

/// Maximum number of components a subcurve bitmask can address.
inline constexpr std::size_t kMaxComponents = 63;

/// Default cap on the number of components for 2^gamma subcurve sweeps.
inline constexpr std::size_t kDefaultGammaCap = 20;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive sweep would exceed a configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  bool is_loop() const { return u == v; }
  bool touches(std::size_t w) const { return u == w || v == w; }
  bool operator==(const Edge&) const = default;
};

/// A set of components, stored as a bitmask over vertex indices.
class Subcurve {
 public:
  Subcurve() = default;
  explicit Subcurve(std::uint64_t mask) : mask_(mask) {}

  static Subcurve single(std::size_t v) { return Subcurve(std::uint64_t{1} << v); }
  static Subcurve all(std::size_t gamma) {
    return Subcurve(gamma >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << gamma) - 1);
  }

  std::uint64_t mask() const { return mask_; }
  bool contains(std::size_t v) const { return (mask_ >> v) & 1U; }
  bool empty() const { return mask_ == 0; }
  std::size_t size() const;
  Subcurve complement(std::size_t gamma) const { return Subcurve(all(gamma).mask_ & ~mask_); }
  std::vector<std::size_t> vertices() const;

  bool operator==(const Subcurve&) const = default;
  auto operator<=>(const Subcurve&) const = default;

 private:
  std::uint64_t mask_ = 0;
};

/// A set of nodes S, kept as sorted unique edge indices. Delta_S = size().
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::vector<std::size_t> edges);

  static NodeSet from_mask(std::uint64_t mask);

  const std::vector<std::size_t>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(std::size_t e) const;
  std::uint64_t mask() const;

  bool operator==(const NodeSet&) const = default;
  /// Order by size, then lexicographically.
  std::strong_ordering operator<=>(const NodeSet& other) const;

 private:
  std::vector<std::size_t> edges_;
};

class DualGraph {
 public:
  DualGraph() = default;
  /// Throws GraphError on a negative genus, a dangling endpoint, or an empty vertex list.
  DualGraph(std::vector<int> genera, std::vector<Edge> edges, std::string name = {});

  const std::string& name() const { return name_; }
  std::size_t num_components() const { return genera_.size(); }
  std::size_t num_nodes() const { return edges_.size(); }
  const std::vector<int>& genera() const { return genera_; }
  int component_genus(std::size_t v) const { return genera_.at(v); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  /// Labels from the curve file; default to "C<i>" / "n<i>".
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::string>& edge_ids() const { return edge_ids_; }
  void set_ids(std::vector<std::string> vertex_ids, std::vector<std::string> edge_ids);

  /// Number of branches at v: loops count twice.
  int valence(std::size_t v) const;
  bool has_loop_at(std::size_t v) const;

 private:
  std::vector<int> genera_;
  std::vector<Edge> edges_;
  std::string name_;
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
};

struct SubcurveInvariants {
  int delta = 0;  // #(Z n Z^c)
  int genus = 0;  // arithmetic genus of the induced subgraph
  int w = 0;      // deg of the dualizing sheaf on Z: 2 g_Z - 2 + delta_Z
};

struct Classification {
  bool connected = false;
  bool stable = false;
  bool quasistable = false;
  bool semistable = false;
  bool binary = false;
  bool compact_type = false;
  std::vector<std::size_t> separating_nodes;
  std::vector<std::size_t> exceptional_components;
};

/// Result of blowing up X at S: the quasistable curve X^_S with one exceptional
/// genus-0 component appended per node of S, in S order.
struct BlowUp {
  DualGraph curve;
  NodeSet nodes;
  std::size_t base_components = 0;

  bool is_exceptional(std::size_t v) const { return v >= base_components; }
  std::size_t num_exceptional() const { return curve.num_components() - base_components; }
};

/// Vertex sets of the connected components.
std::vector<Subcurve> connected_components(const DualGraph& x);
bool is_connected(const DualGraph& x);

/// Arithmetic genus sum g_i + delta - gamma + 1. Throws GraphError when disconnected.
int genus(const DualGraph& x);

/// Arithmetic genus of each connected component, in order of first vertex.
std::vector<int> component_genera(const DualGraph& x);

/// Throws GraphError on an empty Z.
SubcurveInvariants subcurve_invariants(const DualGraph& x, Subcurve z);

/// Connected subcurve test on the subgraph induced by Z.
bool is_connected_subcurve(const DualGraph& x, Subcurve z);

/// Bridges of the multigraph (Tarjan lowlink keyed on edge index).
std::vector<std::size_t> separating_nodes(const DualGraph& x);

/// Genus-0 vertices of valence 2 without a loop.
std::vector<std::size_t> exceptional_components(const DualGraph& x);

Classification classify(const DualGraph& x);

BlowUp blow_up(const DualGraph& x, const NodeSet& s);

/// Partial normalization X_S: the edges of S are deleted.
DualGraph normalize(const DualGraph& x, const NodeSet& s);

/// Every non-empty connected vertex subset, in increasing mask order.
/// Throws CapExceeded when gamma > gamma_cap.
std::vector<Subcurve> enumerate_connected_subcurves(const DualGraph& x,
                                                    std::size_t gamma_cap = kDefaultGammaCap);

}  // namespace abelstrata
