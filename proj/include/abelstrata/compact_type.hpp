// Census of the irreducible components of W_deg(X) for curves of compact type.
//
// Components are indexed by sign patterns I in {+,-}^gamma (I_j = + when the
// restriction to C_j has sections). The all-plus pattern contributes the single
// component W^+; every other admissible pattern contributes |I^+| components.
// A pattern is inadmissible when I_k = - on a component with d_k >= g_k.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelstrata/curve_graph.hpp"
#include "abelstrata/multidegree.hpp"

namespace abelstrata {

class SignPattern {
 public:
  SignPattern(std::uint64_t plus_mask, std::size_t gamma) : plus_(plus_mask), gamma_(gamma) {}

  std::size_t size() const { return gamma_; }
  bool plus(std::size_t j) const { return (plus_ >> j) & 1U; }
  std::vector<std::size_t> plus_set() const;
  std::vector<std::size_t> minus_set() const;
  std::size_t plus_count() const;
  bool all_plus() const { return plus_count() == gamma_; }
  bool all_minus() const { return plus_ == 0; }
  /// "+-+" style, component order.
  std::string to_string() const;

  bool operator==(const SignPattern&) const = default;

 private:
  std::uint64_t plus_;
  std::size_t gamma_;
};

struct PatternContribution {
  SignPattern pattern;
  std::size_t contribution = 0;
};

struct ComponentCount {
  std::size_t n = 0;
  /// Admissible patterns other than all-plus, in increasing plus-mask order.
  std::vector<PatternContribution> patterns;
};

/// True when I passes the feasibility filter for deg: I_k = + wherever d_k >= g_k.
bool pattern_admissible(const DualGraph& x, const Multidegree& deg, const SignPattern& pattern);

/// Throws GraphError for non-compact-type X, DegreeError unless deg >= 0 and |deg| >= 1.
ComponentCount component_count(const DualGraph& x, const Multidegree& deg,
                               std::size_t gamma_cap = kDefaultGammaCap);

enum class TwoComponentRegime { both_below, first_at_least, second_at_least, both_at_least };

struct LabelledDimension {
  std::string label;
  int dim = 0;
};

struct TwoComponentReport {
  TwoComponentRegime regime = TwoComponentRegime::both_below;
  std::vector<LabelledDimension> components;
  /// Dimension of the pairwise intersection of the components; absent with one component.
  std::optional<int> intersection_dim;
};

/// Components of W_deg for two smooth components of genera g1, g2 meeting once.
/// Requires d1, d2 >= 0, d >= 1, and d <= g - 1 unless d1 >= g1 and d2 >= g2.
TwoComponentReport two_component_report(int g1, int g2, int d1, int d2);

}  // namespace abelstrata
