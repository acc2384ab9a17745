// Desk-scale verification suites: exhaustive and statistical checks of the
// structural statements the library encodes, reported case by case.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelstrata/bn_linear.hpp"
#include "abelstrata/curve_graph.hpp"

namespace abelstrata {

inline constexpr std::uint64_t kDefaultSeed = 24301;
inline constexpr std::uint64_t kStatisticalPrime = 1'000'003;
inline constexpr std::uint64_t kExhaustivePrime = 5;

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Verdict { pass, fail, skipped };

const char* to_string(Verdict v);

struct CaseResult {
  std::string suite;
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string detail;
};

struct SuiteParams {
  std::optional<int> gmax;             // suite default when unset
  std::optional<std::uint64_t> prime;  // suite default when unset
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 200;
  std::uint64_t effective_samples = 1000;
  std::size_t gamma_cap = kDefaultGammaCap;
  std::uint64_t gluing_cap = kDefaultGluingCap;
  bool two_component_only = false;
};

std::vector<std::string> suite_names();

/// Throws UnknownSuite for an unrecognized name.
std::vector<CaseResult> run_suite(const std::string& name, const SuiteParams& params);

/// Binary curve of genus g: two rational components meeting in g + 1 nodes.
DualGraph binary_curve(int g);

/// One rational component with `loops` self-nodes (genus = loops).
DualGraph irreducible_rational_curve(int loops);

/// Chain C_1 - C_2 - ... with the given genera.
DualGraph chain_curve(const std::vector<int>& genera);

/// Stable multigraphs with gamma <= max_gamma components of genus <= max_vertex_genus
/// and at most max_delta nodes, one representative per isomorphism class.
std::vector<DualGraph> stable_graph_corpus(std::size_t max_gamma, std::size_t max_delta,
                                           int max_vertex_genus);

}  // namespace abelstrata
