#include "abelstrata/stratification.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace abelstrata {

bool stratum_less(const Stratum& a, const Stratum& b) {
  if (a.nodes != b.nodes) return a.nodes < b.nodes;
  return a.deghat < b.deghat;
}

int stratum_dimension(const DualGraph& x, const NodeSet& s) {
  const auto genera = component_genera(normalize(x, s));
  return std::accumulate(genera.begin(), genera.end(), 0);
}

namespace {

constexpr std::size_t kMaxNodesForSubsets = 30;

std::vector<NodeSet> all_node_sets(const DualGraph& x) {
  if (x.num_nodes() > kMaxNodesForSubsets) {
    throw CapExceeded("stratum enumeration needs 2^" + std::to_string(x.num_nodes()) +
                      " node sets; cap is 2^" + std::to_string(kMaxNodesForSubsets));
  }
  std::vector<NodeSet> out;
  const std::uint64_t end = std::uint64_t{1} << x.num_nodes();
  out.reserve(end);
  for (std::uint64_t m = 0; m < end; ++m) out.push_back(NodeSet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

void require_stable(const DualGraph& x) {
  if (!classify(x).stable) throw DegreeError("strata are enumerated on stable curves only");
}

Stratum make_stratum(const BlowUp& b, Multidegree deghat, int dim) {
  Stratum st;
  st.nodes = b.nodes;
  st.restricted = restrict_to_base(b, deghat);
  st.nonneg = deghat.nonnegative();
  st.deghat = std::move(deghat);
  st.dim = dim;
  return st;
}

std::vector<Stratum> strata_for(const DualGraph& x, const NodeSet& s, int d, const StrataOptions& opts) {
  // Exceptional entries are 1, so a non-negative deghat needs |S| <= d.
  if (opts.nonneg_only && static_cast<long long>(s.size()) > d) return {};
  const auto b = blow_up(x, s);
  const auto filter = opts.nonneg_only ? DegreeFilter::strict_nonneg : DegreeFilter::strict;
  if (!box_admits_total(component_ranges(b.curve, d), d, filter)) return {};
  const int dim = stratum_dimension(x, s);
  std::vector<Stratum> out;
  for (auto& deg : enumerate_multidegrees(BalanceChecker(b.curve, opts.gamma_cap), d, filter)) {
    out.push_back(make_stratum(b, std::move(deg), dim));
  }
  return out;
}

}  // namespace

std::vector<Stratum> enumerate_strata(const DualGraph& x, int d, const StrataOptions& opts) {
  require_stable(x);
  const auto sets = all_node_sets(x);
  std::vector<std::vector<Stratum>> parts(sets.size());
  const auto n = static_cast<long long>(sets.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    parts[static_cast<std::size_t>(i)] = strata_for(x, sets[static_cast<std::size_t>(i)], d, opts);
  }
  std::vector<Stratum> out;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  return out;
}

std::vector<Stratum> wtilde_census(const DualGraph& x, int d, std::size_t gamma_cap) {
  return enumerate_strata(x, d, StrataOptions{true, gamma_cap});
}

bool refines_binary(const DualGraph& x, const Multidegree& deg, const Stratum& stratum) {
  if (!classify(x).binary) throw DegreeError("refinement is implemented for binary curves only");
  if (deg.size() != 2 || stratum.restricted.size() != 2) {
    throw DegreeError("binary refinement needs two-component multidegrees");
  }
  if (deg.total() != stratum.deghat.total()) return false;
  const int gap1 = deg[0] - stratum.restricted[0];
  const int gap2 = deg[1] - stratum.restricted[1];
  return gap1 >= 0 && gap2 >= 0 && gap1 + gap2 == static_cast<int>(stratum.nodes.size());
}

std::vector<Stratum> closure_census(const DualGraph& x, const Multidegree& deg) {
  if (!classify(x).binary) throw DegreeError("closure census is implemented for binary curves only");
  const BalanceChecker checker(x);
  if (!deg.nonnegative() || !checker.is_strictly_balanced(deg)) {
    throw DegreeError("closure census needs a strictly balanced multidegree >= 0, got " +
                      deg.to_string());
  }
  std::vector<Stratum> out;
  for (auto& st : wtilde_census(x, deg.total())) {
    if (refines_binary(x, deg, st)) out.push_back(std::move(st));
  }
  return out;
}

DegreeOneReport degree_one_report(const DualGraph& x, std::size_t gamma_cap) {
  require_stable(x);
  DegreeOneReport r;
  const BalanceChecker checker(x, gamma_cap);
  r.b1_nonneg = enumerate_multidegrees(checker, 1, DegreeFilter::strict_nonneg);
  r.one_general = !enumerate_multidegrees(checker, 1, DegreeFilter::strict).empty();
  // Full census, then filter: the |S| bound is checked, not assumed.
  for (auto& st : enumerate_strata(x, 1, StrataOptions{false, gamma_cap})) {
    if (!st.nonneg) continue;
    r.max_nodes = std::max(r.max_nodes, st.nodes.size());
    r.strata.push_back(std::move(st));
  }
  return r;
}

namespace reference {

std::vector<Stratum> enumerate_strata(const DualGraph& x, int d, const StrataOptions& opts) {
  require_stable(x);
  std::vector<Stratum> out;
  // Base entries satisfy |d_v| <= |d| + delta on a quasistable blow-up, since 0 <= w_v <= 2g - 2.
  const int bound = std::abs(d) + static_cast<int>(x.num_nodes());
  for (const auto& s : all_node_sets(x)) {
    const auto b = blow_up(x, s);
    const std::size_t n = b.curve.num_components();
    std::vector<int> cur(n, 1);
    const int lo = opts.nonneg_only ? 0 : -bound;
    for (std::size_t v = 0; v < b.base_components; ++v) cur[v] = lo;
    const int dim = stratum_dimension(x, s);
    while (true) {
      Multidegree deg(cur);
      if (deg.total() == d && (!opts.nonneg_only || deg.nonnegative()) &&
          blowup_balanced(b, deg).strictly_balanced()) {
        out.push_back(make_stratum(b, std::move(deg), dim));
      }
      std::size_t i = b.base_components;
      bool done = true;
      while (i > 0) {
        --i;
        if (cur[i] < bound) {
          ++cur[i];
          done = false;
          break;
        }
        cur[i] = lo;
      }
      if (done) break;
    }
  }
  return out;
}

}  // namespace reference

}  // namespace abelstrata
