// Strata of the compactified Picard variety of a stable curve.
//
// A stratum is a pair (S, deghat) with S a set of nodes and deghat a strictly
// balanced multidegree on the blow-up X^_S. It is isomorphic to Pic^{deg_S} X_S,
// whose dimension is the total arithmetic genus of the partial normalization.
// The limit-effective locus keeps the strata with deghat >= 0.

#pragma once

#include <cstddef>
#include <vector>

#include "abelstrata/curve_graph.hpp"
#include "abelstrata/multidegree.hpp"

namespace abelstrata {

struct Stratum {
  NodeSet nodes;
  Multidegree deghat;      // on the blow-up X^_S
  Multidegree restricted;  // on X_S
  int dim = 0;
  bool nonneg = false;

  bool operator==(const Stratum&) const = default;
};

/// Canonical order: |S|, then S lexicographically, then deghat lexicographically.
bool stratum_less(const Stratum& a, const Stratum& b);

struct StrataOptions {
  bool nonneg_only = false;
  std::size_t gamma_cap = kDefaultGammaCap;
};

/// Sum over connected components Y of X_S of genus(Y).
int stratum_dimension(const DualGraph& x, const NodeSet& s);

/// Every stratum of total degree d. Requires X stable. Node sets are
/// distributed over OpenMP threads; output is in canonical order.
std::vector<Stratum> enumerate_strata(const DualGraph& x, int d, const StrataOptions& opts = {});

/// The non-negative strata: the census of the limit-effective locus.
std::vector<Stratum> wtilde_census(const DualGraph& x, int d,
                                   std::size_t gamma_cap = kDefaultGammaCap);

/// Refinement of a multidegree on a binary curve by a stratum: the gaps
/// d_i - d_i^S are non-negative and add up to |S|, so each exceptional
/// component can be assigned to one side. Throws DegreeError on non-binary X.
bool refines_binary(const DualGraph& x, const Multidegree& deg, const Stratum& stratum);

/// Non-negative strata refining deg, for deg in B_d^{>=0}(X) on a binary X.
std::vector<Stratum> closure_census(const DualGraph& x, const Multidegree& deg);

struct DegreeOneReport {
  std::vector<Multidegree> b1_nonneg;
  std::vector<Stratum> strata;
  /// Largest |S| seen among the non-negative strata; 1 or less is expected.
  std::size_t max_nodes = 0;
  bool one_general = false;
};

DegreeOneReport degree_one_report(const DualGraph& x, std::size_t gamma_cap = kDefaultGammaCap);

namespace reference {

/// Single-threaded stratum enumeration with multidegrees found by brute force
/// over the box, kept as a test oracle.
std::vector<Stratum> enumerate_strata(const DualGraph& x, int d, const StrataOptions& opts = {});

}  // namespace reference

}  // namespace abelstrata
