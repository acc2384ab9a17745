#include "abelstrata/curve_graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace abelstrata {

std::size_t Subcurve::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> Subcurve::vertices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

NodeSet::NodeSet(std::vector<std::size_t> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

NodeSet NodeSet::from_mask(std::uint64_t mask) { return NodeSet(Subcurve(mask).vertices()); }

bool NodeSet::contains(std::size_t e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::uint64_t NodeSet::mask() const {
  std::uint64_t m = 0;
  for (auto e : edges_) m |= std::uint64_t{1} << e;
  return m;
}

std::strong_ordering NodeSet::operator<=>(const NodeSet& other) const {
  if (auto c = edges_.size() <=> other.edges_.size(); c != 0) return c;
  return edges_ <=> other.edges_;
}

DualGraph::DualGraph(std::vector<int> genera, std::vector<Edge> edges, std::string name)
    : genera_(std::move(genera)), edges_(std::move(edges)), name_(std::move(name)) {
  if (genera_.empty()) throw GraphError("curve has no components");
  if (genera_.size() > kMaxComponents) {
    throw GraphError("curve has more than " + std::to_string(kMaxComponents) + " components");
  }
  for (std::size_t i = 0; i < genera_.size(); ++i) {
    if (genera_[i] < 0) throw GraphError("negative genus on component " + std::to_string(i));
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].u >= genera_.size() || edges_[e].v >= genera_.size()) {
      throw GraphError("dangling vertex in edge " + std::to_string(e));
    }
  }
  vertex_ids_.resize(genera_.size());
  for (std::size_t i = 0; i < genera_.size(); ++i) vertex_ids_[i] = "C" + std::to_string(i + 1);
  edge_ids_.resize(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) edge_ids_[e] = "n" + std::to_string(e + 1);
}

void DualGraph::set_ids(std::vector<std::string> vertex_ids, std::vector<std::string> edge_ids) {
  if (vertex_ids.size() != genera_.size() || edge_ids.size() != edges_.size()) {
    throw GraphError("id list size mismatch");
  }
  vertex_ids_ = std::move(vertex_ids);
  edge_ids_ = std::move(edge_ids);
}

int DualGraph::valence(std::size_t v) const {
  int n = 0;
  for (const auto& e : edges_) {
    if (e.u == v) ++n;
    if (e.v == v) ++n;
  }
  return n;
}

bool DualGraph::has_loop_at(std::size_t v) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [v](const Edge& e) { return e.is_loop() && e.u == v; });
}

namespace {

// Union-find restricted to the vertices of `within`, ignoring edges in `skip`.
std::vector<Subcurve> components_of(const DualGraph& x, Subcurve within, std::uint64_t skip) {
  const std::size_t n = x.num_components();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t e = 0; e < x.num_nodes(); ++e) {
    if ((skip >> e) & 1U) continue;
    const auto& ed = x.edge(e);
    if (!within.contains(ed.u) || !within.contains(ed.v)) continue;
    parent[find(ed.u)] = find(ed.v);
  }
  std::vector<std::uint64_t> masks(n, 0);
  for (auto v : within.vertices()) masks[find(v)] |= std::uint64_t{1} << v;
  std::vector<Subcurve> out;
  for (auto v : within.vertices()) {
    if (find(v) == v) out.emplace_back(masks[v]);
  }
  std::sort(out.begin(), out.end(), [](Subcurve a, Subcurve b) {
    return std::countr_zero(a.mask()) < std::countr_zero(b.mask());
  });
  return out;
}

int internal_edges(const DualGraph& x, Subcurve z) {
  int n = 0;
  for (const auto& e : x.edges()) {
    if (z.contains(e.u) && z.contains(e.v)) ++n;
  }
  return n;
}

int genus_of(const DualGraph& x, Subcurve z) {
  int sum = 0;
  for (auto v : z.vertices()) sum += x.component_genus(v);
  return sum + internal_edges(x, z) - static_cast<int>(z.size()) + 1;
}

}  // namespace

std::vector<Subcurve> connected_components(const DualGraph& x) {
  return components_of(x, Subcurve::all(x.num_components()), 0);
}

bool is_connected(const DualGraph& x) { return connected_components(x).size() == 1; }

int genus(const DualGraph& x) {
  if (!is_connected(x)) throw GraphError("genus requested for a disconnected curve");
  return genus_of(x, Subcurve::all(x.num_components()));
}

std::vector<int> component_genera(const DualGraph& x) {
  std::vector<int> out;
  for (auto c : connected_components(x)) out.push_back(genus_of(x, c));
  return out;
}

SubcurveInvariants subcurve_invariants(const DualGraph& x, Subcurve z) {
  if (z.empty()) throw GraphError("empty subcurve");
  SubcurveInvariants inv;
  for (const auto& e : x.edges()) {
    if (z.contains(e.u) != z.contains(e.v)) ++inv.delta;
  }
  inv.genus = genus_of(x, z);
  inv.w = 2 * inv.genus - 2 + inv.delta;
  return inv;
}

namespace {

std::vector<std::uint64_t> adjacency_masks(const DualGraph& x) {
  std::vector<std::uint64_t> adj(x.num_components(), 0);
  for (const auto& e : x.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

bool connected_within(const std::vector<std::uint64_t>& adj, std::uint64_t z) {
  if (z == 0) return false;
  std::uint64_t seen = z & (~z + 1);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= z & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == z;
}

}  // namespace

bool is_connected_subcurve(const DualGraph& x, Subcurve z) {
  return connected_within(adjacency_masks(x), z.mask());
}

std::vector<std::size_t> separating_nodes(const DualGraph& x) {
  const std::size_t n = x.num_components();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbor, edge)
  for (std::size_t e = 0; e < x.num_nodes(); ++e) {
    const auto& ed = x.edge(e);
    if (ed.is_loop()) continue;
    adj[ed.u].emplace_back(ed.v, e);
    adj[ed.v].emplace_back(ed.u, e);
  }
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<std::size_t> bridges;
  int timer = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t via) {
    disc[v] = low[v] = timer++;
    for (auto [w, e] : adj[v]) {
      if (e == via) continue;
      if (disc[w] < 0) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridges.push_back(e);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  constexpr auto kNone = static_cast<std::size_t>(-1);
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] < 0) dfs(v, kNone);
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

std::vector<std::size_t> exceptional_components(const DualGraph& x) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < x.num_components(); ++v) {
    if (x.component_genus(v) == 0 && x.valence(v) == 2 && !x.has_loop_at(v)) out.push_back(v);
  }
  return out;
}

Classification classify(const DualGraph& x) {
  Classification c;
  c.connected = is_connected(x);
  c.separating_nodes = separating_nodes(x);
  c.exceptional_components = exceptional_components(x);

  bool rational_ge2 = true;
  bool rational_ge3 = true;
  for (std::size_t v = 0; v < x.num_components(); ++v) {
    if (x.component_genus(v) != 0) continue;
    rational_ge2 = rational_ge2 && x.valence(v) >= 2;
    rational_ge3 = rational_ge3 && x.valence(v) >= 3;
  }
  bool exceptional_adjacent = false;
  for (const auto& e : x.edges()) {
    const auto& ex = c.exceptional_components;
    if (!e.is_loop() && std::binary_search(ex.begin(), ex.end(), e.u) &&
        std::binary_search(ex.begin(), ex.end(), e.v)) {
      exceptional_adjacent = true;
    }
  }
  const bool any_loop =
      std::any_of(x.edges().begin(), x.edges().end(), [](const Edge& e) { return e.is_loop(); });

  if (c.connected) {
    const int g = genus(x);
    c.stable = g >= 2 && rational_ge3;
    c.semistable = rational_ge2;
    c.quasistable = rational_ge2 && !exceptional_adjacent;
    c.compact_type = !any_loop && x.num_nodes() + 1 == x.num_components();
  }
  c.binary = x.num_components() == 2 && x.component_genus(0) == 0 && x.component_genus(1) == 0 &&
             !any_loop && x.num_nodes() >= 1;
  return c;
}

BlowUp blow_up(const DualGraph& x, const NodeSet& s) {
  const std::size_t base = x.num_components();
  std::vector<int> genera = x.genera();
  std::vector<Edge> edges;
  std::vector<std::string> vids = x.vertex_ids();
  std::vector<std::string> eids;
  for (std::size_t e = 0; e < x.num_nodes(); ++e) {
    if (s.contains(e)) continue;
    edges.push_back(x.edge(e));
    eids.push_back(x.edge_ids()[e]);
  }
  for (auto e : s.edges()) {
    if (e >= x.num_nodes()) throw GraphError("node set refers to a missing edge");
    const std::size_t ex = genera.size();
    genera.push_back(0);
    vids.push_back("E_" + x.edge_ids()[e]);
    edges.push_back({x.edge(e).u, ex});
    edges.push_back({ex, x.edge(e).v});
    eids.push_back(x.edge_ids()[e] + "a");
    eids.push_back(x.edge_ids()[e] + "b");
  }
  DualGraph curve(std::move(genera), std::move(edges), x.name());
  curve.set_ids(std::move(vids), std::move(eids));
  return BlowUp{std::move(curve), s, base};
}

DualGraph normalize(const DualGraph& x, const NodeSet& s) {
  std::vector<Edge> edges;
  std::vector<std::string> eids;
  for (std::size_t e = 0; e < x.num_nodes(); ++e) {
    if (s.contains(e)) continue;
    edges.push_back(x.edge(e));
    eids.push_back(x.edge_ids()[e]);
  }
  DualGraph out(x.genera(), std::move(edges), x.name());
  out.set_ids(x.vertex_ids(), std::move(eids));
  return out;
}

std::vector<Subcurve> enumerate_connected_subcurves(const DualGraph& x, std::size_t gamma_cap) {
  const std::size_t n = x.num_components();
  if (n > gamma_cap) {
    throw CapExceeded("subcurve enumeration needs 2^" + std::to_string(n) +
                      " subsets; component cap is " + std::to_string(gamma_cap));
  }
  const auto adj = adjacency_masks(x);
  std::vector<Subcurve> out;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < end; ++m) {
    if (connected_within(adj, m)) out.emplace_back(m);
  }
  return out;
}

}  // namespace abelstrata
