// h^0 of line bundles on nodal curves with rational components, over F_p.
//
// Each component C_i is a P^1 with affine coordinate x. A line bundle of
// multidegree (d_i) is described by one gluing unit c_e per node e = (u, v):
// global sections are tuples of polynomials s_i of degree <= d_i with
//
//   s_u(x_{e,u}) = c_e * s_v(x_{e,v})      for every node e,
//
// where x_{e,u}, x_{e,v} are the branch points of e on its two components.
// A branch point may be the point at infinity, encoded as the value p; there
// "evaluating" a section of degree <= d_i means taking its x^{d_i} coefficient.
// Components of negative degree carry no sections. h^0 is the dimension of the
// solution space, computed exactly by Gaussian elimination mod p.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "abelstrata/curve_graph.hpp"
#include "abelstrata/multidegree.hpp"
#include "abelstrata/prime_field.hpp"

namespace abelstrata {

using Fp = PrimeField::Element;

inline constexpr std::uint64_t kDefaultGluingCap = 10'000'000;

/// Branch points of one node: the preimage on the first and on the second endpoint.
struct BranchPair {
  Fp on_u = 0;
  Fp on_v = 0;
};

struct CurvePoint {
  std::size_t component = 0;
  Fp coord = 0;
};

class RationalCurveModel {
 public:
  /// Throws GraphError if some component has positive genus, FieldError on a
  /// branch-point collision on one component.
  RationalCurveModel(DualGraph graph, PrimeField field, std::vector<BranchPair> branches);

  /// Distinct uniformly random affine branch points per component; P^1(F_p) is
  /// used instead when some component has more than p branch points. Throws
  /// FieldError when p is too small to make them distinct.
  static RationalCurveModel random(DualGraph graph, PrimeField field, std::uint64_t seed);

  const DualGraph& graph() const { return graph_; }
  const PrimeField& field() const { return field_; }
  const std::vector<BranchPair>& branches() const { return branches_; }
  bool is_branch_point(std::size_t component, Fp x) const;
  bool at_infinity(Fp x) const { return x == field_.modulus(); }
  bool connected() const { return connected_; }
  int genus() const { return genus_; }

 private:
  DualGraph graph_;
  PrimeField field_;
  std::vector<BranchPair> branches_;
  bool connected_ = false;
  int genus_ = 0;
};

struct LineBundleModel {
  Multidegree degrees;
  std::vector<Fp> gluing;  // one unit per node, edge order
};

/// Throws DegreeError / FieldError when L does not fit the model or has a zero gluing entry.
void validate_bundle(const RationalCurveModel& model, const LineBundleModel& bundle);

/// Dimension of the space of global sections.
int h0(const RationalCurveModel& model, const LineBundleModel& bundle);

/// h^0 of the restriction to Z: components of Z and the nodes internal to Z.
int h0_on(const RationalCurveModel& model, const LineBundleModel& bundle, Subcurve z);

bool in_W(const RationalCurveModel& model, const LineBundleModel& bundle);

/// h^0 > 0 on every non-empty subcurve. Throws CapExceeded past the component cap.
bool in_W_plus(const RationalCurveModel& model, const LineBundleModel& bundle,
               std::size_t gamma_cap = kDefaultGammaCap);

/// O_X(sum of points): gluing chosen so that prod (x - a) over the points on
/// each component is a global section. Throws FieldError if a point is a branch point.
LineBundleModel effective_model(const RationalCurveModel& model, std::span<const CurvePoint> points);

/// L(q) for a smooth point q. Sections of L map into L(q) by multiplying the
/// section on q's component by (x - q); the gluing absorbs that factor:
/// c_e *= (x_{e,u} - q) when q lies on the u side, c_e /= (x_{e,v} - q) on the v side.
LineBundleModel twist(const RationalCurveModel& model, const LineBundleModel& bundle, CurvePoint q);

/// Uniform gluing in (F_p^*)^delta for the given multidegree; stream `index` of `seed`.
LineBundleModel random_bundle(const RationalCurveModel& model, const Multidegree& degrees,
                              std::uint64_t seed, std::uint64_t index);

/// Uniform smooth point on a component; stream `index` of `seed`.
CurvePoint random_smooth_point(const RationalCurveModel& model, std::size_t component,
                               std::uint64_t seed, std::uint64_t index);

struct ProbeResult {
  std::uint64_t total = 0;
  std::uint64_t effective = 0;  // gluings with h^0 > 0
};

/// Every gluing vector in (F_p^*)^delta, counting h^0 > 0. OpenMP over the
/// gluing index. Throws CapExceeded when (p-1)^delta > cap.
ProbeResult exhaustive_W_probe(const RationalCurveModel& model, const Multidegree& degrees,
                               std::uint64_t cap = kDefaultGluingCap);

struct H0Histogram {
  std::uint64_t trials = 0;
  std::map<int, std::uint64_t> counts;

  std::uint64_t count(int h) const;
  double fraction(int h) const;
};

/// h^0 over `trials` uniform gluings drawn from `seed`. OpenMP over trials;
/// trial t uses random stream t, so the result does not depend on threading.
H0Histogram generic_h0_estimate(const RationalCurveModel& model, const Multidegree& degrees,
                                std::uint64_t trials, std::uint64_t seed);

namespace reference {

ProbeResult exhaustive_W_probe(const RationalCurveModel& model, const Multidegree& degrees,
                               std::uint64_t cap = kDefaultGluingCap);

H0Histogram generic_h0_estimate(const RationalCurveModel& model, const Multidegree& degrees,
                                std::uint64_t trials, std::uint64_t seed);

}  // namespace reference

}  // namespace abelstrata
