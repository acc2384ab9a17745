// Multidegrees on nodal curves and the basic (balancing) inequality.
//
// For a connected subcurve Z of a genus g >= 2 curve with total degree d,
//
//   d * w_Z / (2g - 2) - delta_Z / 2  <=  d_Z  <=  d * w_Z / (2g - 2) + delta_Z / 2,
//
// where d_Z is the degree on Z. All comparisons are done on integers after
// multiplying through by 2(2g - 2); rationals only appear in reports.

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "abelstrata/curve_graph.hpp"

namespace abelstrata {

using Rational = boost::rational<long long>;

class DegreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> entries) : entries_(std::move(entries)) {}

  /// Parses a comma-separated literal such as "1,0,2".
  static Multidegree parse(std::string_view literal);
  std::string to_string() const;

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  int total() const;
  bool nonnegative() const;
  /// d_Z: sum of the entries over the components of Z.
  int on(Subcurve z) const;

  bool operator==(const Multidegree&) const = default;
  auto operator<=>(const Multidegree&) const = default;

 private:
  std::vector<int> entries_;
};

enum class DegreeFilter { balanced, strict, strict_nonneg };

enum class BoundSide { lower, upper, exceptional };

struct BalanceViolation {
  Subcurve z;
  BoundSide side = BoundSide::lower;
  Rational bound;
  /// True when the bound is attained with equality where strictness is required;
  /// such a violation breaks strict balance only.
  bool equality = false;
};

struct BalanceReport {
  bool balanced = false;
  bool strictly_balanced = false;
  std::vector<BalanceViolation> violations;
};

/// Precomputes the connected subcurves of X together with (delta_Z, w_Z) so that
/// many multidegrees can be tested against the same curve.
class BalanceChecker {
 public:
  /// Throws DegreeError when X is disconnected or g < 2; CapExceeded past the cap.
  explicit BalanceChecker(const DualGraph& x, std::size_t gamma_cap = kDefaultGammaCap);

  int genus() const { return genus_; }
  std::size_t num_components() const { return gamma_; }
  const std::vector<std::size_t>& exceptional() const { return exceptional_; }
  bool is_exceptional(std::size_t v) const;

  BalanceReport check(const Multidegree& deg) const;
  bool is_balanced(const Multidegree& deg) const { return test(deg, false); }
  bool is_strictly_balanced(const Multidegree& deg) const { return test(deg, true); }

  /// Integer range for d_v allowed by the single-component inequality; exceptional
  /// components are pinned to [1, 1].
  std::pair<int, int> component_range(std::size_t v, int d) const;

 private:
  struct Constraint {
    Subcurve z;
    std::vector<std::size_t> vertices;
    long long w = 0;
    long long delta = 0;
    bool strict_required = false;
  };

  bool test(const Multidegree& deg, bool strict) const;
  void require_length(const Multidegree& deg) const;

  std::size_t gamma_ = 0;
  int genus_ = 0;
  std::vector<std::size_t> exceptional_;
  std::vector<Constraint> constraints_;
};

BalanceReport check_balanced(const DualGraph& x, const Multidegree& deg);

/// Per-component ranges from the single-component inequalities alone, with
/// exceptional components pinned to [1, 1]. No subcurve sweep; same
/// preconditions as BalanceChecker.
std::vector<std::pair<int, int>> component_ranges(const DualGraph& x, int d);

/// False when no multidegree of total d can pass the filter because the
/// single-component box already excludes it.
bool box_admits_total(const std::vector<std::pair<int, int>>& ranges, int d, DegreeFilter filter);

/// Balance bounds m(d,g) = (d - g - 1)/2 and M(d,g) = (d + g + 1)/2 on a binary curve.
/// Throws DegreeError for g < -1.
std::pair<Rational, Rational> binary_bounds(int d, int g);

/// All multidegrees of total d passing the filter, in lexicographic order.
/// Partitions the first coordinate across OpenMP threads.
std::vector<Multidegree> enumerate_multidegrees(const DualGraph& x, int d, DegreeFilter filter,
                                                std::size_t gamma_cap = kDefaultGammaCap);
std::vector<Multidegree> enumerate_multidegrees(const BalanceChecker& checker, int d,
                                                DegreeFilter filter);

/// Balance verdicts for a multidegree on a blow-up X^_S.
struct BlowupBalance {
  /// Basic inequality applied to X^_S itself.
  BalanceReport general;
  /// Binary-curve definition: exceptional degrees 1 and the restriction to X_S
  /// within m/M of X_S. Present only when X is binary.
  std::optional<BalanceReport> binary;

  bool balanced() const { return binary ? binary->balanced : general.balanced; }
  bool strictly_balanced() const {
    return binary ? binary->strictly_balanced : general.strictly_balanced;
  }
};

BlowupBalance blowup_balanced(const BlowUp& blowup, const Multidegree& deghat);

/// Restriction of a blow-up multidegree to X_S (exceptional entries dropped).
Multidegree restrict_to_base(const BlowUp& blowup, const Multidegree& deghat);

namespace reference {

/// Single-threaded enumeration over the full box, kept as a test oracle.
std::vector<Multidegree> enumerate_multidegrees(const BalanceChecker& checker, int d,
                                                DegreeFilter filter);

}  // namespace reference

}  // namespace abelstrata
