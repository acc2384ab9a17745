#include "abelstrata/multidegree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace abelstrata {

Multidegree Multidegree::parse(std::string_view literal) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (true) {
    const auto comma = literal.find(',', pos);
    auto tok = literal.substr(pos, comma == std::string_view::npos ? literal.size() - pos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw DegreeError("malformed multidegree literal '" + std::string(literal) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Multidegree(std::move(entries));
}

std::string Multidegree::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

int Multidegree::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

bool Multidegree::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int d) { return d >= 0; });
}

int Multidegree::on(Subcurve z) const {
  int sum = 0;
  for (auto v : z.vertices()) sum += entries_.at(v);
  return sum;
}

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

std::pair<int, int> range_from(long long d, long long w, long long delta, long long g) {
  const long long den = 2 * (2 * g - 2);
  const long long lo = 2 * d * w - delta * (2 * g - 2);
  const long long hi = 2 * d * w + delta * (2 * g - 2);
  return {static_cast<int>(ceil_div(lo, den)), static_cast<int>(floor_div(hi, den))};
}


}  // namespace

BalanceChecker::BalanceChecker(const DualGraph& x, std::size_t gamma_cap)
    : gamma_(x.num_components()) {
  if (!is_connected(x)) throw DegreeError("balance is defined on connected curves only");
  genus_ = abelstrata::genus(x);
  if (genus_ < 2) {
    throw DegreeError("balance needs genus >= 2 (got " + std::to_string(genus_) + ")");
  }
  exceptional_ = exceptional_components(x);
  const Subcurve full = Subcurve::all(gamma_);
  for (auto z : enumerate_connected_subcurves(x, gamma_cap)) {
    const auto inv = subcurve_invariants(x, z);
    Constraint c;
    c.z = z;
    c.vertices = z.vertices();
    c.w = inv.w;
    c.delta = inv.delta;
    // Strictness applies to proper Z whose boundary has a node off X_exc.
    if (z != full) {
      for (const auto& e : x.edges()) {
        if (z.contains(e.u) == z.contains(e.v)) continue;
        if (!is_exceptional(e.u) && !is_exceptional(e.v)) {
          c.strict_required = true;
          break;
        }
      }
    }
    constraints_.push_back(std::move(c));
  }
}

bool BalanceChecker::is_exceptional(std::size_t v) const {
  return std::binary_search(exceptional_.begin(), exceptional_.end(), v);
}

void BalanceChecker::require_length(const Multidegree& deg) const {
  if (deg.size() != gamma_) {
    throw DegreeError("multidegree has " + std::to_string(deg.size()) + " entries, curve has " +
                      std::to_string(gamma_) + " components");
  }
}

bool BalanceChecker::test(const Multidegree& deg, bool strict) const {
  require_length(deg);
  for (auto v : exceptional_) {
    if (deg[v] != 1) return false;
  }
  const long long d = deg.total();
  const long long den = 2LL * (2LL * genus_ - 2);
  for (const auto& c : constraints_) {
    long long dz = 0;
    for (auto v : c.vertices) dz += deg[v];
    const long long scaled = den * dz;
    const long long centre = 2 * d * c.w;
    const long long half = c.delta * (2LL * genus_ - 2);
    if (strict && c.strict_required) {
      if (scaled <= centre - half || scaled >= centre + half) return false;
    } else {
      if (scaled < centre - half || scaled > centre + half) return false;
    }
  }
  return true;
}

BalanceReport BalanceChecker::check(const Multidegree& deg) const {
  require_length(deg);
  BalanceReport report;
  report.balanced = true;
  report.strictly_balanced = true;
  for (auto v : exceptional_) {
    if (deg[v] != 1) {
      report.balanced = report.strictly_balanced = false;
      report.violations.push_back({Subcurve::single(v), BoundSide::exceptional, Rational(1), false});
    }
  }
  const long long d = deg.total();
  const long long den = 2LL * (2LL * genus_ - 2);
  for (const auto& c : constraints_) {
    long long dz = 0;
    for (auto v : c.vertices) dz += deg[v];
    const long long scaled = den * dz;
    const long long lo = 2 * d * c.w - c.delta * (2LL * genus_ - 2);
    const long long hi = 2 * d * c.w + c.delta * (2LL * genus_ - 2);
    if (scaled < lo || scaled > hi) {
      report.balanced = report.strictly_balanced = false;
      const bool low = scaled < lo;
      report.violations.push_back(
          {c.z, low ? BoundSide::lower : BoundSide::upper, Rational(low ? lo : hi, den), false});
    } else if (c.strict_required && (scaled == lo || scaled == hi)) {
      report.strictly_balanced = false;
      const bool low = scaled == lo;
      report.violations.push_back(
          {c.z, low ? BoundSide::lower : BoundSide::upper, Rational(low ? lo : hi, den), true});
    }
  }
  return report;
}

std::pair<int, int> BalanceChecker::component_range(std::size_t v, int d) const {
  if (is_exceptional(v)) return {1, 1};
  const Subcurve z = Subcurve::single(v);
  const auto it = std::find_if(constraints_.begin(), constraints_.end(),
                               [z](const Constraint& c) { return c.z == z; });
  return range_from(d, it->w, it->delta, genus_);
}

BalanceReport check_balanced(const DualGraph& x, const Multidegree& deg) {
  return BalanceChecker(x).check(deg);
}


std::vector<std::pair<int, int>> component_ranges(const DualGraph& x, int d) {
  if (!is_connected(x)) throw DegreeError("balance is defined on connected curves only");
  const int g = genus(x);
  if (g < 2) throw DegreeError("balance needs genus >= 2 (got " + std::to_string(g) + ")");
  const auto ex = exceptional_components(x);
  std::vector<std::pair<int, int>> out;
  for (std::size_t v = 0; v < x.num_components(); ++v) {
    if (std::binary_search(ex.begin(), ex.end(), v)) {
      out.emplace_back(1, 1);
      continue;
    }
    const auto inv = subcurve_invariants(x, Subcurve::single(v));
    out.push_back(range_from(d, inv.w, inv.delta, g));
  }
  return out;
}

bool box_admits_total(const std::vector<std::pair<int, int>>& ranges, int d, DegreeFilter filter) {
  long long lo_sum = 0;
  long long hi_sum = 0;
  for (auto [lo, hi] : ranges) {
    if (filter == DegreeFilter::strict_nonneg) lo = std::max(lo, 0);
    if (lo > hi) return false;
    lo_sum += lo;
    hi_sum += hi;
  }
  return lo_sum <= d && d <= hi_sum;
}

std::pair<Rational, Rational> binary_bounds(int d, int g) {
  if (g < -1) throw DegreeError("binary bounds need g >= -1");
  return {Rational(d - g - 1, 2), Rational(d + g + 1, 2)};
}

namespace {

bool passes(const BalanceChecker& checker, const Multidegree& deg, DegreeFilter filter) {
  switch (filter) {
    case DegreeFilter::balanced:
      return checker.is_balanced(deg);
    case DegreeFilter::strict:
      return checker.is_strictly_balanced(deg);
    case DegreeFilter::strict_nonneg:
      return deg.nonnegative() && checker.is_strictly_balanced(deg);
  }
  return false;
}

struct Box {
  std::vector<int> lo;
  std::vector<int> hi;
  bool empty = false;
};

Box degree_box(const BalanceChecker& checker, int d, DegreeFilter filter) {
  Box box;
  const std::size_t n = checker.num_components();
  box.lo.resize(n);
  box.hi.resize(n);
  long long lo_sum = 0;
  long long hi_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto [lo, hi] = checker.component_range(v, d);
    if (filter == DegreeFilter::strict_nonneg) lo = std::max(lo, 0);
    box.lo[v] = lo;
    box.hi[v] = hi;
    if (lo > hi) box.empty = true;
    lo_sum += lo;
    hi_sum += hi;
  }
  if (d < lo_sum || d > hi_sum) box.empty = true;
  return box;
}

// Depth-first fill of coordinates [from, n) with the prefix fixed in `cur`.
void fill(const BalanceChecker& checker, const Box& box, const std::vector<long long>& rest_lo,
          const std::vector<long long>& rest_hi, std::vector<int>& cur, std::size_t i, int remaining,
          DegreeFilter filter, std::vector<Multidegree>& out) {
  const std::size_t n = cur.size();
  if (i + 1 == n) {
    if (remaining < box.lo[i] || remaining > box.hi[i]) return;
    cur[i] = remaining;
    Multidegree deg(cur);
    if (passes(checker, deg, filter)) out.push_back(std::move(deg));
    return;
  }
  for (int v = box.lo[i]; v <= box.hi[i]; ++v) {
    const long long left = static_cast<long long>(remaining) - v;
    if (left < rest_lo[i + 1] || left > rest_hi[i + 1]) continue;
    cur[i] = v;
    fill(checker, box, rest_lo, rest_hi, cur, i + 1, static_cast<int>(left), filter, out);
  }
}

}  // namespace

std::vector<Multidegree> enumerate_multidegrees(const BalanceChecker& checker, int d,
                                                DegreeFilter filter) {
  const Box box = degree_box(checker, d, filter);
  if (box.empty) return {};
  const std::size_t n = checker.num_components();
  std::vector<long long> rest_lo(n + 1, 0);
  std::vector<long long> rest_hi(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    rest_lo[i] = rest_lo[i + 1] + box.lo[i];
    rest_hi[i] = rest_hi[i + 1] + box.hi[i];
  }
  if (n == 1) {
    std::vector<int> cur(1);
    std::vector<Multidegree> out;
    fill(checker, box, rest_lo, rest_hi, cur, 0, d, filter, out);
    return out;
  }

  const int first_lo = box.lo[0];
  const int width = box.hi[0] - box.lo[0] + 1;
  std::vector<std::vector<Multidegree>> parts(static_cast<std::size_t>(width));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < width; ++k) {
    const int v = first_lo + k;
    const long long left = static_cast<long long>(d) - v;
    if (left < rest_lo[1] || left > rest_hi[1]) continue;
    std::vector<int> cur(n);
    cur[0] = v;
    fill(checker, box, rest_lo, rest_hi, cur, 1, static_cast<int>(left), filter,
         parts[static_cast<std::size_t>(k)]);
  }
  std::vector<Multidegree> out;
  for (auto& p : parts) {
    std::move(p.begin(), p.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Multidegree> enumerate_multidegrees(const DualGraph& x, int d, DegreeFilter filter,
                                                std::size_t gamma_cap) {
  return enumerate_multidegrees(BalanceChecker(x, gamma_cap), d, filter);
}

namespace reference {

std::vector<Multidegree> enumerate_multidegrees(const BalanceChecker& checker, int d,
                                                DegreeFilter filter) {
  const Box box = degree_box(checker, d, filter);
  std::vector<Multidegree> out;
  const std::size_t n = checker.num_components();
  for (std::size_t v = 0; v < n; ++v) {
    if (box.lo[v] > box.hi[v]) return out;
  }
  // Odometer over the whole box; lexicographic because the last digit spins fastest.
  std::vector<int> cur = box.lo;
  while (true) {
    if (std::accumulate(cur.begin(), cur.end(), 0LL) == d) {
      Multidegree deg(cur);
      if (passes(checker, deg, filter)) out.push_back(std::move(deg));
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < box.hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = box.lo[i];
      if (i == 0) return out;
    }
  }
}

}  // namespace reference

namespace {

bool base_is_binary(const BlowUp& b) {
  if (b.base_components != 2) return false;
  const auto& c = b.curve;
  if (c.component_genus(0) != 0 || c.component_genus(1) != 0) return false;
  std::size_t base_edges = 0;
  for (const auto& e : c.edges()) {
    if (e.is_loop()) return false;
    if (!b.is_exceptional(e.u) && !b.is_exceptional(e.v)) ++base_edges;
  }
  return base_edges + b.nodes.size() >= 1;
}

BalanceReport binary_blowup_report(const BlowUp& b, const Multidegree& deghat) {
  BalanceReport r;
  r.balanced = r.strictly_balanced = true;
  for (std::size_t v = b.base_components; v < deghat.size(); ++v) {
    if (deghat[v] != 1) {
      r.balanced = r.strictly_balanced = false;
      r.violations.push_back({Subcurve::single(v), BoundSide::exceptional, Rational(1), false});
    }
  }
  // X_S is binary of genus (#remaining nodes) - 1, possibly -1. At -1 every
  // node is blown up, m = M and no node is left to force strictness.
  const int g_s = static_cast<int>(b.curve.num_nodes() - 2 * b.nodes.size()) - 1;
  const int d_s = deghat[0] + deghat[1];
  const auto [m, big_m] = binary_bounds(d_s, g_s);
  for (std::size_t i = 0; i < 2; ++i) {
    const Rational di(deghat[i]);
    const Subcurve z = Subcurve::single(i);
    if (di < m || di > big_m) {
      r.balanced = r.strictly_balanced = false;
      r.violations.push_back({z, di < m ? BoundSide::lower : BoundSide::upper, di < m ? m : big_m, false});
    } else if (g_s >= 0 && (di == m || di == big_m)) {
      r.strictly_balanced = false;
      r.violations.push_back({z, di == m ? BoundSide::lower : BoundSide::upper, di == m ? m : big_m, true});
    }
  }
  return r;
}

}  // namespace

BlowupBalance blowup_balanced(const BlowUp& blowup, const Multidegree& deghat) {
  if (deghat.size() != blowup.curve.num_components()) {
    throw DegreeError("multidegree length does not match the blow-up");
  }
  BlowupBalance out;
  out.general = BalanceChecker(blowup.curve).check(deghat);
  if (base_is_binary(blowup)) out.binary = binary_blowup_report(blowup, deghat);
  return out;
}

Multidegree restrict_to_base(const BlowUp& blowup, const Multidegree& deghat) {
  if (deghat.size() != blowup.curve.num_components()) {
    throw DegreeError("multidegree length does not match the blow-up");
  }
  std::vector<int> entries(deghat.entries().begin(),
                           deghat.entries().begin() + static_cast<std::ptrdiff_t>(blowup.base_components));
  return Multidegree(std::move(entries));
}

}  // namespace abelstrata
