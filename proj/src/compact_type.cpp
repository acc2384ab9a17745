#include "abelstrata/compact_type.hpp"

#include <bit>

namespace abelstrata {

std::vector<std::size_t> SignPattern::plus_set() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < gamma_; ++j) {
    if (plus(j)) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> SignPattern::minus_set() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < gamma_; ++j) {
    if (!plus(j)) out.push_back(j);
  }
  return out;
}

std::size_t SignPattern::plus_count() const { return static_cast<std::size_t>(std::popcount(plus_)); }

std::string SignPattern::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < gamma_; ++j) out += plus(j) ? '+' : '-';
  return out;
}

bool pattern_admissible(const DualGraph& x, const Multidegree& deg, const SignPattern& pattern) {
  for (std::size_t k = 0; k < x.num_components(); ++k) {
    if (!pattern.plus(k) && deg[k] >= x.component_genus(k)) return false;
  }
  return true;
}

ComponentCount component_count(const DualGraph& x, const Multidegree& deg, std::size_t gamma_cap) {
  if (!classify(x).compact_type) throw GraphError("component count needs a curve of compact type");
  if (deg.size() != x.num_components()) throw DegreeError("multidegree length does not match the curve");
  if (!deg.nonnegative() || deg.total() < 1) {
    throw DegreeError("component count needs deg >= 0 with |deg| >= 1");
  }
  const std::size_t gamma = x.num_components();
  if (gamma > gamma_cap) {
    throw CapExceeded("sign-pattern census over 2^" + std::to_string(gamma) +
                      " patterns exceeds component cap " + std::to_string(gamma_cap));
  }
  ComponentCount out;
  out.n = 1;
  const std::uint64_t all = (std::uint64_t{1} << gamma) - 1;
  for (std::uint64_t mask = 1; mask < all; ++mask) {
    SignPattern pattern(mask, gamma);
    if (!pattern_admissible(x, deg, pattern)) continue;
    out.n += pattern.plus_count();
    out.patterns.push_back({pattern, pattern.plus_count()});
  }
  return out;
}

TwoComponentReport two_component_report(int g1, int g2, int d1, int d2) {
  if (g1 < 0 || g2 < 0) throw DegreeError("component genera must be non-negative");
  if (d1 < 0 || d2 < 0) throw DegreeError("two-component report needs d1, d2 >= 0");
  const int d = d1 + d2;
  const int g = g1 + g2;
  if (d < 1) throw DegreeError("two-component report needs d >= 1");
  const bool first = d1 >= g1;
  const bool second = d2 >= g2;
  if (!(first && second) && d > g - 1) {
    throw DegreeError("two-component report needs d <= g - 1 (d=" + std::to_string(d) +
                      ", g=" + std::to_string(g) + ")");
  }

  TwoComponentReport r;
  if (!first && !second) {
    r.regime = TwoComponentRegime::both_below;
    r.components = {{"W+", d}, {"W+-", d1 + g2 - 1}, {"W-+", d2 + g1 - 1}};
    r.intersection_dim = d - 2;
  } else if (first && !second) {
    r.regime = TwoComponentRegime::first_at_least;
    r.components = {{"W+", g1 + d2}, {"W+-", d1 + g2 - 1}};
    r.intersection_dim = d1 - 1;
  } else if (!first && second) {
    r.regime = TwoComponentRegime::second_at_least;
    r.components = {{"W+", g2 + d1}, {"W-+", d2 + g1 - 1}};
    r.intersection_dim = d2 - 1;
  } else {
    // Every restriction has sections: W_deg is all of Pic^deg.
    r.regime = TwoComponentRegime::both_at_least;
    r.components = {{"W+", g}};
  }
  return r;
}

}  // namespace abelstrata
