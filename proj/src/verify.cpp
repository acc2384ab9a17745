#include "abelstrata/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "abelstrata/compact_type.hpp"
#include "abelstrata/multidegree.hpp"
#include "abelstrata/stratification.hpp"

namespace abelstrata {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "?";
}

DualGraph binary_curve(int g) {
  if (g < -1) throw GraphError("binary curve needs g >= -1");
  std::vector<Edge> edges(static_cast<std::size_t>(g + 1), Edge{0, 1});
  return DualGraph({0, 0}, std::move(edges), "binary_g" + std::to_string(g));
}

DualGraph irreducible_rational_curve(int loops) {
  std::vector<Edge> edges(static_cast<std::size_t>(loops), Edge{0, 0});
  return DualGraph({0}, std::move(edges), "irreducible_" + std::to_string(loops));
}

DualGraph chain_curve(const std::vector<int>& genera) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < genera.size(); ++i) edges.push_back({i, i + 1});
  return DualGraph(genera, std::move(edges), "chain");
}

std::vector<DualGraph> stable_graph_corpus(std::size_t max_gamma, std::size_t max_delta,
                                           int max_vertex_genus) {
  using Key = std::pair<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>>;
  std::set<Key> seen;
  std::vector<DualGraph> out;

  for (std::size_t gamma = 1; gamma <= max_gamma; ++gamma) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < gamma; ++i) {
      for (std::size_t j = i; j < gamma; ++j) slots.emplace_back(i, j);
    }
    std::vector<std::size_t> perm(gamma);
    std::vector<int> genera(gamma, 0);
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    auto canonical = [&]() {
      Key best;
      bool first = true;
      std::iota(perm.begin(), perm.end(), 0);
      do {
        Key k;
        k.first.resize(gamma);
        for (std::size_t i = 0; i < gamma; ++i) k.first[perm[i]] = genera[i];
        for (auto [a, b] : edges) k.second.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
        std::sort(k.second.begin(), k.second.end());
        if (first || k < best) best = std::move(k);
        first = false;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    };

    auto consider = [&]() {
      std::vector<Edge> es;
      for (auto [a, b] : edges) es.push_back({a, b});
      DualGraph x(genera, es);
      const auto c = classify(x);
      if (!c.stable) return;
      if (!seen.insert(canonical()).second) return;
      std::ostringstream name;
      name << "g" << genus(x) << "_v" << gamma << "_e" << edges.size() << "_" << out.size();
      out.emplace_back(genera, std::move(es), name.str());
    };

    std::function<void(std::size_t)> grow = [&](std::size_t slot) {
      consider();
      if (edges.size() == max_delta) return;
      for (std::size_t s = slot; s < slots.size(); ++s) {
        edges.push_back(slots[s]);
        grow(s);
        edges.pop_back();
      }
    };

    std::function<void(std::size_t)> assign = [&](std::size_t v) {
      if (v == gamma) {
        grow(0);
        return;
      }
      for (int g = 0; g <= max_vertex_genus; ++g) {
        genera[v] = g;
        assign(v + 1);
      }
    };
    assign(0);
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ' ';
    out += parts[i];
  }
  return out;
}

std::string describe(const Stratum& st) {
  std::string s = "S={";
  for (std::size_t i = 0; i < st.nodes.edges().size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(st.nodes.edges()[i]);
  }
  return s + "} deghat=(" + st.deghat.to_string() + ")";
}

struct SuiteContext {
  const SuiteParams& params;
  std::vector<CaseResult> results;
  std::string suite;

  void add(std::string name, bool ok, std::string detail) {
    results.push_back({suite, std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail)});
  }
  void skip(std::string name, std::string detail) {
    results.push_back({suite, std::move(name), Verdict::skipped, std::move(detail)});
  }
};

// Every balanced deg with min < 0 and d <= g - 1 has no effective gluing over F_p.
void negdeg_cases(SuiteContext& ctx, int gmax, std::uint64_t prime) {
  const PrimeField field(prime);
  for (int g = 2; g <= gmax; ++g) {
    const auto x = binary_curve(g);
    std::optional<RationalCurveModel> model;
    try {
      model.emplace(RationalCurveModel::random(x, field, ctx.params.seed));
    } catch (const FieldError& e) {
      ctx.skip("g=" + std::to_string(g), e.what());
      continue;
    }
    for (int d = -g; d <= g - 1; ++d) {
      for (const auto& deg : enumerate_multidegrees(x, d, DegreeFilter::balanced)) {
        if (deg.nonnegative()) continue;
        const std::string name = "g=" + std::to_string(g) + " deg=" + deg.to_string();
        try {
          const auto probe = exhaustive_W_probe(*model, deg, ctx.params.gluing_cap);
          ctx.add(name, probe.effective == 0,
                  "effective=" + std::to_string(probe.effective) + "/" + std::to_string(probe.total));
        } catch (const CapExceeded& e) {
          ctx.skip(name, e.what());
        }
      }
    }
  }
}

// Every balanced deg >= 0 with d <= g - 1 is strictly balanced.
void balanced_nonneg_cases(SuiteContext& ctx, int gmax) {
  for (int g = 2; g <= gmax; ++g) {
    const auto x = binary_curve(g);
    const BalanceChecker checker(x);
    std::vector<std::string> bad;
    std::size_t checked = 0;
    for (int d = 0; d <= g - 1; ++d) {
      for (const auto& deg : enumerate_multidegrees(checker, d, DegreeFilter::balanced)) {
        if (!deg.nonnegative()) continue;
        ++checked;
        if (!checker.is_strictly_balanced(deg)) bad.push_back("(" + deg.to_string() + ")");
      }
    }
    ctx.add("g=" + std::to_string(g) + " nonneg-balanced-is-strict", bad.empty(),
            bad.empty() ? "checked=" + std::to_string(checked) : "counterexamples: " + join(bad));
  }
}

void closure_coverage(SuiteContext& ctx, int gmax) {
  for (int g = 2; g <= gmax; ++g) {
    const auto x = binary_curve(g);
    for (int d = 1; d <= g - 1; ++d) {
      const auto census = wtilde_census(x, d, ctx.params.gamma_cap);
      std::vector<Stratum> unioned;
      for (const auto& deg : enumerate_multidegrees(x, d, DegreeFilter::strict_nonneg)) {
        auto part = closure_census(x, deg);
        unioned.insert(unioned.end(), part.begin(), part.end());
      }
      std::sort(unioned.begin(), unioned.end(), stratum_less);
      unioned.erase(std::unique(unioned.begin(), unioned.end()), unioned.end());
      std::vector<Stratum> sorted_census = census;
      std::sort(sorted_census.begin(), sorted_census.end(), stratum_less);

      std::vector<Stratum> missing;
      std::vector<Stratum> extra;
      std::set_difference(sorted_census.begin(), sorted_census.end(), unioned.begin(), unioned.end(),
                          std::back_inserter(missing), stratum_less);
      std::set_difference(unioned.begin(), unioned.end(), sorted_census.begin(), sorted_census.end(),
                          std::back_inserter(extra), stratum_less);
      std::string detail = "strata=" + std::to_string(census.size()) +
                           " missing=" + std::to_string(missing.size()) +
                           " extra=" + std::to_string(extra.size());
      for (const auto& st : missing) detail += " missing:" + describe(st);
      for (const auto& st : extra) detail += " extra:" + describe(st);
      ctx.add("g=" + std::to_string(g) + " d=" + std::to_string(d), missing.empty() && extra.empty(),
              detail);
    }
  }
}

void degree_one(SuiteContext& ctx) {
  const auto corpus = stable_graph_corpus(4, 6, 1);
  std::size_t graphs = 0;
  std::vector<std::string> bad;
  for (const auto& x : corpus) {
    if (x.num_components() + x.num_nodes() > ctx.params.gamma_cap) {
      ctx.skip(x.name(), "blow-ups exceed the component cap");
      continue;
    }
    ++graphs;
    const auto r = degree_one_report(x, ctx.params.gamma_cap);
    if (r.max_nodes > 1) bad.push_back(x.name() + ":max|S|=" + std::to_string(r.max_nodes));
    // B_1^{>=0} must be exactly the strictly balanced unit vectors.
    const BalanceChecker checker(x, ctx.params.gamma_cap);
    std::vector<Multidegree> units;
    for (std::size_t i = 0; i < x.num_components(); ++i) {
      std::vector<int> e(x.num_components(), 0);
      e[i] = 1;
      Multidegree deg(std::move(e));
      if (checker.check(deg).strictly_balanced) units.push_back(std::move(deg));
    }
    std::sort(units.begin(), units.end());
    if (units != r.b1_nonneg) bad.push_back(x.name() + ":B1 mismatch");
  }
  ctx.add("corpus gamma<=4 delta<=6", bad.empty(),
          "graphs=" + std::to_string(graphs) + (bad.empty() ? "" : " counterexamples: " + join(bad)));

  const DualGraph two_elliptic({1, 1}, {Edge{0, 1}}, "two_elliptic");
  const auto r = degree_one_report(two_elliptic);
  ctx.add("two genus-1 components", !r.one_general && r.b1_nonneg.empty(),
          std::string("one_general=") + (r.one_general ? "true" : "false"));
}

void numcomp_two_component(SuiteContext& ctx) {
  std::size_t cases = 0;
  std::vector<std::string> bad;
  for (int g1 = 0; g1 <= 5; ++g1) {
    for (int g2 = 0; g2 <= 5; ++g2) {
      for (int d1 = 0; d1 <= 5; ++d1) {
        for (int d2 = 0; d2 <= 5; ++d2) {
          const int d = d1 + d2;
          const int g = g1 + g2;
          const bool first = d1 >= g1;
          const bool second = d2 >= g2;
          if (d < 1 || (!(first && second) && d > g - 1)) continue;
          ++cases;
          const auto rep = two_component_report(g1, g2, d1, d2);
          std::vector<int> dims;
          for (const auto& c : rep.components) dims.push_back(c.dim);
          std::vector<int> expect;
          if (!first && !second) {
            expect = {d, d1 + g2 - 1, d2 + g1 - 1};
          } else if (first && !second) {
            expect = {g1 + d2, d1 + g2 - 1};
          } else if (!first && second) {
            expect = {g2 + d1, d2 + g1 - 1};
          } else {
            expect = {g};
          }
          const DualGraph x({g1, g2}, {Edge{0, 1}});
          const auto count = component_count(x, Multidegree({d1, d2}));
          const std::string tag = "(" + std::to_string(g1) + "," + std::to_string(g2) + "," +
                                  std::to_string(d1) + "," + std::to_string(d2) + ")";
          if (dims != expect) bad.push_back(tag + ":dims");
          if (count.n != rep.components.size()) {
            bad.push_back(tag + ":N=" + std::to_string(count.n) + " vs " +
                          std::to_string(rep.components.size()));
          }
        }
      }
    }
  }
  ctx.add("two-component grid g_i<=5 d_i<=5", bad.empty(),
          "cases=" + std::to_string(cases) + (bad.empty() ? "" : " counterexamples: " + join(bad)));
}

void numcomp_trees(SuiteContext& ctx) {
  // Chain of three with every d_k <= g_k - 1.
  const auto chain = chain_curve({2, 2, 2});
  const auto c3 = component_count(chain, Multidegree({1, 1, 1}));
  ctx.add("chain(2,2,2) deg=(1,1,1)", c3.n == 10, "N=" + std::to_string(c3.n));

  // All trees on <= 4 vertices given by parent arrays; genera in [0,2], deg in [0,3].
  std::size_t cases = 0;
  std::vector<std::string> bad;
  for (std::size_t gamma = 1; gamma <= 4; ++gamma) {
    std::vector<std::size_t> parent(gamma, 0);
    std::function<void(std::size_t)> trees = [&](std::size_t v) {
      if (v == gamma) {
        std::vector<Edge> edges;
        for (std::size_t i = 1; i < gamma; ++i) edges.push_back({parent[i], i});
        std::vector<int> genera(gamma, 0);
        std::vector<int> deg(gamma, 0);
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
          if (i == gamma) {
            const Multidegree m(deg);
            if (m.total() < 1) return;
            const DualGraph x(genera, edges);
            ++cases;
            const auto base = component_count(x, m);
            bool all_at_least = true;
            for (std::size_t k = 0; k < gamma; ++k) all_at_least = all_at_least && deg[k] >= genera[k];
            if (all_at_least && base.n != 1) bad.push_back("N!=1");
            // Raising one d_k from g_k - 1 to g_k cannot increase N.
            for (std::size_t k = 0; k < gamma; ++k) {
              if (deg[k] != genera[k] - 1) continue;
              auto up = deg;
              ++up[k];
              if (component_count(x, Multidegree(up)).n > base.n) bad.push_back("non-monotone");
            }
            return;
          }
          for (int g = 0; g <= 2; ++g) {
            for (int d = 0; d <= 3; ++d) {
              genera[i] = g;
              deg[i] = d;
              fill(i + 1);
            }
          }
        };
        fill(0);
        return;
      }
      for (std::size_t p = 0; p < v; ++p) {
        parent[v] = p;
        trees(v + 1);
      }
    };
    trees(1);
  }
  ctx.add("trees gamma<=4 monotone, all d_k>=g_k gives 1", bad.empty(),
          "cases=" + std::to_string(cases) + (bad.empty() ? "" : " counterexamples: " + join(bad)));
}

void generic_h0(SuiteContext& ctx, int gmax, std::uint64_t prime) {
  const PrimeField field(prime);
  const auto& p = ctx.params;
  for (int g = 2; g <= gmax; ++g) {
    const auto x = binary_curve(g);
    std::optional<RationalCurveModel> model;
    try {
      model.emplace(RationalCurveModel::random(x, field, p.seed + static_cast<std::uint64_t>(g)));
    } catch (const FieldError& e) {
      ctx.skip("g=" + std::to_string(g), e.what());
      continue;
    }
    for (int d = 0; d <= g - 1; ++d) {
      for (const auto& deg : enumerate_multidegrees(x, d, DegreeFilter::strict_nonneg)) {
        const int expected = std::max(0, d - g + 1);
        const auto hist = generic_h0_estimate(*model, deg, p.trials, p.seed + 1000 * g + d);
        std::ostringstream detail;
        detail << "h0=" << expected << " in " << hist.count(expected) << "/" << hist.trials;
        ctx.add("g=" + std::to_string(g) + " deg=" + deg.to_string(), hist.fraction(expected) >= 0.99,
                detail.str());
      }
    }
  }
  // Effective bundles always have sections.
  std::uint64_t failures = 0;
  const std::uint64_t samples = p.effective_samples;
  try {
    for (std::uint64_t s = 0; s < samples; ++s) {
      const int g = 2 + static_cast<int>(s % static_cast<std::uint64_t>(std::max(1, gmax - 1)));
      const auto model = RationalCurveModel::random(binary_curve(g), field, p.seed + 7 * s + 3);
      const int npoints = 1 + static_cast<int>(s % static_cast<std::uint64_t>(g));
      std::vector<CurvePoint> pts;
      for (int i = 0; i < npoints; ++i) {
        pts.push_back(random_smooth_point(model, static_cast<std::size_t>((s + i) % 2), p.seed,
                                          s * 64 + static_cast<std::uint64_t>(i)));
      }
      if (h0(model, effective_model(model, pts)) < 1) ++failures;
    }
  } catch (const FieldError& e) {
    ctx.skip("effective_model samples", e.what());
    return;
  }
  ctx.add("effective_model samples", failures == 0,
          "failures=" + std::to_string(failures) + "/" + std::to_string(samples));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void irreducible_census(SuiteContext& ctx, int max_loops, std::uint64_t prime) {
  const PrimeField field(prime);
  // Balance needs genus >= 2, so the census starts at two loops; h0 starts at one.
  for (int loops = 2; loops <= max_loops; ++loops) {
    const auto x = irreducible_rational_curve(loops);
    for (int d = 0; d <= loops + 2; ++d) {
      std::uint64_t expected = 0;
      for (int k = 0; k <= std::min(d, loops); ++k) expected += binomial(loops, k);
      const auto census = wtilde_census(x, d, ctx.params.gamma_cap);
      ctx.add("loops=" + std::to_string(loops) + " d=" + std::to_string(d) + " census",
              census.size() == expected,
              "strata=" + std::to_string(census.size()) + " expected=" + std::to_string(expected));
    }
  }
  for (int loops = 1; loops <= max_loops; ++loops) {
    std::optional<RationalCurveModel> model;
    try {
      model.emplace(RationalCurveModel::random(irreducible_rational_curve(loops), field,
                                               ctx.params.seed + static_cast<std::uint64_t>(loops)));
    } catch (const FieldError& e) {
      ctx.skip("loops=" + std::to_string(loops) + " generic h0", e.what());
      continue;
    }
    for (int d = 0; d <= 2 * loops; ++d) {
      const int expected = std::max(0, d - loops + 1);
      const auto hist = generic_h0_estimate(*model, Multidegree({d}), ctx.params.trials,
                                            ctx.params.seed + 100 * loops + d);
      ctx.add("loops=" + std::to_string(loops) + " d=" + std::to_string(d) + " generic h0",
              hist.fraction(expected) >= 0.99,
              "h0=" + std::to_string(expected) + " in " + std::to_string(hist.count(expected)) + "/" +
                  std::to_string(hist.trials));
    }
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"balanced-plus-one", "negdeg-empty",    "closure-coverage", "degree-one",
          "numcomp",           "generic-h0",      "irreducible-census"};
}

std::vector<CaseResult> run_suite(const std::string& name, const SuiteParams& params) {
  SuiteContext ctx{params, {}, name};
  if (name == "balanced-plus-one") {
    balanced_nonneg_cases(ctx, params.gmax.value_or(6));
    negdeg_cases(ctx, params.gmax.value_or(6), params.prime.value_or(kExhaustivePrime));
  } else if (name == "negdeg-empty") {
    negdeg_cases(ctx, params.gmax.value_or(5), params.prime.value_or(kExhaustivePrime));
  } else if (name == "closure-coverage") {
    closure_coverage(ctx, params.gmax.value_or(8));
  } else if (name == "degree-one") {
    degree_one(ctx);
  } else if (name == "numcomp") {
    numcomp_two_component(ctx);
    if (!params.two_component_only) numcomp_trees(ctx);
  } else if (name == "generic-h0") {
    generic_h0(ctx, params.gmax.value_or(6), params.prime.value_or(kStatisticalPrime));
  } else if (name == "irreducible-census") {
    irreducible_census(ctx, params.gmax.value_or(8), params.prime.value_or(kStatisticalPrime));
  } else {
    throw UnknownSuite("unknown verification suite '" + name + "'");
  }
  return std::move(ctx.results);
}

}  // namespace abelstrata
