#include "abelstrata/bn_linear.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace abelstrata {

namespace {

enum class Stream : std::uint32_t { branch_points = 1, gluing = 2, points = 3 };

std::mt19937_64 make_rng(std::uint64_t seed, Stream stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32U)};
  return std::mt19937_64(seq);
}

}  // namespace

RationalCurveModel::RationalCurveModel(DualGraph graph, PrimeField field,
                                       std::vector<BranchPair> branches)
    : graph_(std::move(graph)), field_(field), branches_(std::move(branches)) {
  for (std::size_t v = 0; v < graph_.num_components(); ++v) {
    if (graph_.component_genus(v) != 0) {
      throw GraphError("h0 model needs rational components; component " + graph_.vertex_ids()[v] +
                       " has genus " + std::to_string(graph_.component_genus(v)));
    }
  }
  if (branches_.size() != graph_.num_nodes()) throw GraphError("one branch pair per node expected");
  std::vector<std::set<Fp>> seen(graph_.num_components());
  for (std::size_t e = 0; e < branches_.size(); ++e) {
    const auto& ed = graph_.edge(e);
    for (auto [comp, x] : {std::pair{ed.u, branches_[e].on_u}, std::pair{ed.v, branches_[e].on_v}}) {
      if (x > field_.modulus()) throw FieldError("branch point outside P^1(F_p)");
      if (!seen[comp].insert(x).second) {
        throw FieldError("branch-point collision on component " + graph_.vertex_ids()[comp]);
      }
    }
  }
  connected_ = is_connected(graph_);
  if (connected_) genus_ = abelstrata::genus(graph_);
}

RationalCurveModel RationalCurveModel::random(DualGraph graph, PrimeField field, std::uint64_t seed) {
  for (std::size_t v = 0; v < graph.num_components(); ++v) {
    if (static_cast<std::uint64_t>(graph.valence(v)) > field.modulus() + 1) {
      throw FieldError("prime " + std::to_string(field.modulus()) +
                       " too small for distinct branch points on component " + graph.vertex_ids()[v]);
    }
  }
  // Affine branch points when F_p has room; otherwise the point at infinity joins the pool.
  bool need_infinity = false;
  for (std::size_t v = 0; v < graph.num_components(); ++v) {
    need_infinity = need_infinity || static_cast<std::uint64_t>(graph.valence(v)) > field.modulus();
  }
  auto rng = make_rng(seed, Stream::branch_points, 0);
  std::uniform_int_distribution<Fp> dist(0, need_infinity ? field.modulus() : field.modulus() - 1);
  std::vector<std::set<Fp>> used(graph.num_components());
  auto draw = [&](std::size_t comp) {
    while (true) {
      const Fp x = dist(rng);
      if (used[comp].insert(x).second) return x;
    }
  };
  std::vector<BranchPair> branches;
  for (const auto& e : graph.edges()) {
    BranchPair b;
    b.on_u = draw(e.u);
    b.on_v = draw(e.v);
    branches.push_back(b);
  }
  return RationalCurveModel(std::move(graph), field, std::move(branches));
}

bool RationalCurveModel::is_branch_point(std::size_t component, Fp x) const {
  for (std::size_t e = 0; e < branches_.size(); ++e) {
    const auto& ed = graph_.edge(e);
    if (ed.u == component && branches_[e].on_u == x) return true;
    if (ed.v == component && branches_[e].on_v == x) return true;
  }
  return false;
}

void validate_bundle(const RationalCurveModel& model, const LineBundleModel& bundle) {
  if (bundle.degrees.size() != model.graph().num_components()) {
    throw DegreeError("multidegree length does not match the curve");
  }
  if (bundle.gluing.size() != model.graph().num_nodes()) {
    throw DegreeError("gluing vector needs one entry per node");
  }
  for (auto c : bundle.gluing) {
    if (c % model.field().modulus() == 0) throw FieldError("gluing entries must be units");
  }
}

int h0_on(const RationalCurveModel& model, const LineBundleModel& bundle, Subcurve z) {
  validate_bundle(model, bundle);
  const auto& f = model.field();
  const auto& g = model.graph();
  // Column offset of each component's coefficient block; -1 when it has no sections.
  std::vector<long long> offset(g.num_components(), -1);
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < g.num_components(); ++v) {
    if (!z.contains(v) || bundle.degrees[v] < 0) continue;
    offset[v] = static_cast<long long>(unknowns);
    unknowns += static_cast<std::size_t>(bundle.degrees[v]) + 1;
  }
  std::vector<std::size_t> rows;
  for (std::size_t e = 0; e < g.num_nodes(); ++e) {
    if (z.contains(g.edge(e).u) && z.contains(g.edge(e).v)) rows.push_back(e);
  }
  if (unknowns == 0) return 0;

  FpMatrix m(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto e = rows[r];
    const auto& ed = g.edge(e);
    // s_u(x_u) - c_e s_v(x_v)
    auto put = [&](std::size_t comp, Fp x, Fp scale) {
      if (offset[comp] < 0) return;
      if (model.at_infinity(x)) {
        auto& cell = m.at(r, static_cast<std::size_t>(offset[comp]) + static_cast<std::size_t>(bundle.degrees[comp]));
        cell = f.add(cell, scale);
        return;
      }
      Fp power = 1;
      for (int k = 0; k <= bundle.degrees[comp]; ++k) {
        auto& cell = m.at(r, static_cast<std::size_t>(offset[comp]) + static_cast<std::size_t>(k));
        cell = f.add(cell, f.mul(scale, power));
        power = f.mul(power, x);
      }
    };
    put(ed.u, model.branches()[e].on_u, 1);
    put(ed.v, model.branches()[e].on_v, f.neg(bundle.gluing[e] % f.modulus()));
  }
  return static_cast<int>(nullity(f, m));
}

int h0(const RationalCurveModel& model, const LineBundleModel& bundle) {
  const int h = h0_on(model, bundle, Subcurve::all(model.graph().num_components()));
  if (model.connected() && h < bundle.degrees.total() - model.genus() + 1) {
    throw std::logic_error("h0 below the Riemann-Roch bound");
  }
  return h;
}

bool in_W(const RationalCurveModel& model, const LineBundleModel& bundle) {
  return h0(model, bundle) > 0;
}

bool in_W_plus(const RationalCurveModel& model, const LineBundleModel& bundle, std::size_t gamma_cap) {
  const std::size_t n = model.graph().num_components();
  if (n > gamma_cap) {
    throw CapExceeded("subcurve sweep over 2^" + std::to_string(n) + " subsets exceeds component cap " +
                      std::to_string(gamma_cap));
  }
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    if (h0_on(model, bundle, Subcurve(mask)) == 0) return false;
  }
  return true;
}

LineBundleModel effective_model(const RationalCurveModel& model, std::span<const CurvePoint> points) {
  const auto& f = model.field();
  const auto& g = model.graph();
  std::vector<int> degrees(g.num_components(), 0);
  for (const auto& p : points) {
    if (p.component >= g.num_components()) throw GraphError("point on a missing component");
    if (p.coord >= f.modulus()) throw FieldError("point coordinate outside F_p");
    if (model.is_branch_point(p.component, p.coord)) {
      throw FieldError("point collides with a branch point on component " +
                       g.vertex_ids()[p.component]);
    }
    ++degrees[p.component];
  }
  auto section = [&](std::size_t comp, Fp x) {
    Fp value = 1;
    if (model.at_infinity(x)) return value;
    for (const auto& p : points) {
      if (p.component == comp) value = f.mul(value, f.sub(x, p.coord));
    }
    return value;
  };
  LineBundleModel out{Multidegree(std::move(degrees)), {}};
  for (std::size_t e = 0; e < g.num_nodes(); ++e) {
    const auto& ed = g.edge(e);
    out.gluing.push_back(
        f.div(section(ed.u, model.branches()[e].on_u), section(ed.v, model.branches()[e].on_v)));
  }
  return out;
}

LineBundleModel twist(const RationalCurveModel& model, const LineBundleModel& bundle, CurvePoint q) {
  validate_bundle(model, bundle);
  const auto& f = model.field();
  const auto& g = model.graph();
  if (q.component >= g.num_components()) throw GraphError("point on a missing component");
  if (q.coord >= f.modulus()) throw FieldError("twist point must be affine");
  if (model.is_branch_point(q.component, q.coord)) throw FieldError("twist point is a branch point");
  auto factor = [&](Fp x) { return model.at_infinity(x) ? Fp{1} : f.sub(x, q.coord); };
  std::vector<int> degrees = bundle.degrees.entries();
  ++degrees[q.component];
  LineBundleModel out{Multidegree(std::move(degrees)), bundle.gluing};
  for (std::size_t e = 0; e < g.num_nodes(); ++e) {
    const auto& ed = g.edge(e);
    if (ed.u == q.component) out.gluing[e] = f.mul(out.gluing[e], factor(model.branches()[e].on_u));
    if (ed.v == q.component) out.gluing[e] = f.div(out.gluing[e], factor(model.branches()[e].on_v));
  }
  return out;
}

LineBundleModel random_bundle(const RationalCurveModel& model, const Multidegree& degrees,
                              std::uint64_t seed, std::uint64_t index) {
  auto rng = make_rng(seed, Stream::gluing, index);
  std::uniform_int_distribution<Fp> dist(1, model.field().modulus() - 1);
  LineBundleModel out{degrees, {}};
  out.gluing.reserve(model.graph().num_nodes());
  for (std::size_t e = 0; e < model.graph().num_nodes(); ++e) out.gluing.push_back(dist(rng));
  return out;
}

CurvePoint random_smooth_point(const RationalCurveModel& model, std::size_t component,
                               std::uint64_t seed, std::uint64_t index) {
  std::uint64_t free_points = 0;
  for (Fp x = 0; x < model.field().modulus() && free_points < 1; ++x) {
    if (!model.is_branch_point(component, x)) ++free_points;
  }
  if (free_points == 0) throw FieldError("no smooth affine point on component " + model.graph().vertex_ids()[component]);
  auto rng = make_rng(seed, Stream::points, index);
  std::uniform_int_distribution<Fp> dist(0, model.field().modulus() - 1);
  while (true) {
    const Fp x = dist(rng);
    if (!model.is_branch_point(component, x)) return {component, x};
  }
}

std::uint64_t H0Histogram::count(int h) const {
  const auto it = counts.find(h);
  return it == counts.end() ? 0 : it->second;
}

double H0Histogram::fraction(int h) const {
  return trials == 0 ? 0.0 : static_cast<double>(count(h)) / static_cast<double>(trials);
}

namespace {

std::uint64_t gluing_space_size(const RationalCurveModel& model, std::uint64_t cap) {
  const std::uint64_t units = model.field().modulus() - 1;
  std::uint64_t total = 1;
  for (std::size_t e = 0; e < model.graph().num_nodes(); ++e) {
    if (total > cap / units) {
      throw CapExceeded("exhaustive probe needs " + std::to_string(units) + "^" +
                        std::to_string(model.graph().num_nodes()) + " gluings; cap is " +
                        std::to_string(cap));
    }
    total *= units;
  }
  return total;
}

}  // namespace

ProbeResult exhaustive_W_probe(const RationalCurveModel& model, const Multidegree& degrees,
                               std::uint64_t cap) {
  const std::uint64_t total = gluing_space_size(model, cap);
  const std::uint64_t units = model.field().modulus() - 1;
  const std::size_t nodes = model.graph().num_nodes();
  validate_bundle(model, LineBundleModel{degrees, std::vector<Fp>(nodes, 1)});
  std::uint64_t effective = 0;
  const auto n = static_cast<long long>(total);
#pragma omp parallel for schedule(static) reduction(+ : effective)
  for (long long i = 0; i < n; ++i) {
    LineBundleModel bundle{degrees, std::vector<Fp>(nodes)};
    auto rest = static_cast<std::uint64_t>(i);
    for (std::size_t e = 0; e < nodes; ++e) {
      bundle.gluing[e] = rest % units + 1;
      rest /= units;
    }
    if (h0(model, bundle) > 0) ++effective;
  }
  return {total, effective};
}

H0Histogram generic_h0_estimate(const RationalCurveModel& model, const Multidegree& degrees,
                                std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  std::vector<int> values(trials);
  const auto n = static_cast<long long>(trials);
#pragma omp parallel for schedule(dynamic)
  for (long long t = 0; t < n; ++t) {
    const auto idx = static_cast<std::uint64_t>(t);
    values[idx] = h0(model, random_bundle(model, degrees, seed, idx));
  }
  H0Histogram hist;
  hist.trials = trials;
  for (int h : values) ++hist.counts[h];
  return hist;
}

namespace reference {

ProbeResult exhaustive_W_probe(const RationalCurveModel& model, const Multidegree& degrees,
                               std::uint64_t cap) {
  ProbeResult out;
  out.total = gluing_space_size(model, cap);
  const Fp top = model.field().modulus() - 1;
  LineBundleModel bundle{degrees, std::vector<Fp>(model.graph().num_nodes(), 1)};
  while (true) {
    if (h0(model, bundle) > 0) ++out.effective;
    std::size_t e = 0;
    while (e < bundle.gluing.size() && bundle.gluing[e] == top) bundle.gluing[e++] = 1;
    if (e == bundle.gluing.size()) break;
    ++bundle.gluing[e];
  }
  return out;
}

H0Histogram generic_h0_estimate(const RationalCurveModel& model, const Multidegree& degrees,
                                std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  H0Histogram hist;
  hist.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) ++hist.counts[h0(model, random_bundle(model, degrees, seed, t))];
  return hist;
}

}  // namespace reference

}  // namespace abelstrata
