#include "abelstrata/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "abelstrata/bn_linear.hpp"
#include "abelstrata/compact_type.hpp"
#include "abelstrata/curve_io.hpp"
#include "abelstrata/multidegree.hpp"
#include "abelstrata/stratification.hpp"
#include "abelstrata/verify.hpp"

namespace abelstrata {

namespace {

using Row = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string curve_path;
  std::string suite;
  std::optional<int> d;
  std::string deg;
  std::optional<std::uint64_t> prime;
  std::optional<std::uint64_t> seed;
  std::uint64_t trials = 200;
  bool nonneg = false;
  bool strict = false;
  bool json = false;
  std::size_t cap_gamma = kDefaultGammaCap;
  std::uint64_t cap_gluings = kDefaultGluingCap;
  std::string gluing;
  std::string points;
  std::optional<int> gmax;
  bool two_component = false;
  bool exhaustive = false;
};

std::string list_or_dash(const std::vector<std::string>& items) {
  if (items.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) s += ',';
    s += items[i];
  }
  return s;
}

std::string tsv_cell(const Row& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

class Table {
 public:
  Table(std::vector<std::string> columns, bool json) : columns_(std::move(columns)), json_(json) {}

  void add(Row row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    if (!json_) {
      for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "\t" : "") << columns_[i];
      out << '\n';
    }
    for (const auto& row : rows_) {
      if (json_) {
        out << row.dump() << '\n';
        continue;
      }
      for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "\t" : "") << tsv_cell(row.at(columns_[i]));
      out << '\n';
    }
  }

 private:
  std::vector<std::string> columns_;
  bool json_;
  std::vector<Row> rows_;
};

std::uint64_t resolve_seed(const Config& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("ABELSTRATA_SEED"); env != nullptr && *env != '\0') {
    std::uint64_t v = 0;
    std::istringstream in(env);
    if (!(in >> v) || !in.eof()) throw InputError(std::string("ABELSTRATA_SEED is not an integer: ") + env);
    return v;
  }
  return kDefaultSeed;
}

DualGraph load(const Config& c) {
  if (c.curve_path.empty()) throw InputError("a curve file is required");
  try {
    return load_curve(c.curve_path);
  } catch (const ParseError& e) {
    throw InputError(c.curve_path + ": " + e.what());
  } catch (const GraphError& e) {
    throw InputError(c.curve_path + ": " + e.what());
  }
}

int require_d(const Config& c) {
  if (!c.d) throw InputError("--d is required");
  return *c.d;
}

Multidegree require_deg(const Config& c, const DualGraph& x) {
  if (c.deg.empty()) throw InputError("--deg is required");
  auto deg = Multidegree::parse(c.deg);
  if (deg.size() != x.num_components()) {
    throw InputError("--deg has " + std::to_string(deg.size()) + " entries, curve has " +
                     std::to_string(x.num_components()) + " components");
  }
  return deg;
}

PrimeField field_for(const Config& c, std::uint64_t fallback) {
  const std::uint64_t p = c.prime.value_or(fallback);
  if (!is_prime(p)) throw InputError("--prime " + std::to_string(p) + " is not prime");
  return PrimeField(p);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw InputError(what + ": not an integer: '" + s + "'");
  }
  if (pos != s.size() || (!s.empty() && s[0] == '-')) throw InputError(what + ": not an integer: '" + s + "'");
  return v;
}

std::string node_list(const DualGraph& x, const NodeSet& s) {
  std::vector<std::string> ids;
  for (auto e : s.edges()) ids.push_back(x.edge_ids()[e]);
  return list_or_dash(ids);
}

std::string index_list(const std::vector<std::size_t>& idx, const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(ids[i]);
  return list_or_dash(out);
}

int cmd_info(const Config& c, std::ostream& out) {
  const auto x = load(c);
  const auto cl = classify(x);
  Table t({"name", "genus", "gamma", "delta", "connected", "stable", "quasistable", "semistable", "binary",
           "compact_type", "separating_nodes", "exceptional_components"},
          c.json);
  Row r;
  r["name"] = x.name().empty() ? "-" : x.name();
  r["genus"] = cl.connected ? Row(genus(x)) : Row("-");
  r["gamma"] = x.num_components();
  r["delta"] = x.num_nodes();
  r["connected"] = cl.connected;
  r["stable"] = cl.stable;
  r["quasistable"] = cl.quasistable;
  r["semistable"] = cl.semistable;
  r["binary"] = cl.binary;
  r["compact_type"] = cl.compact_type;
  r["separating_nodes"] = index_list(cl.separating_nodes, x.edge_ids());
  r["exceptional_components"] = index_list(cl.exceptional_components, x.vertex_ids());
  t.add(std::move(r));
  t.print(out);
  return kExitOk;
}

int cmd_multidegrees(const Config& c, std::ostream& out) {
  const auto x = load(c);
  const int d = require_d(c);
  const auto filter = !c.strict ? DegreeFilter::balanced
                                : (c.nonneg ? DegreeFilter::strict_nonneg : DegreeFilter::strict);
  Table t({"deg", "total", "nonneg"}, c.json);
  for (const auto& deg : enumerate_multidegrees(x, d, filter, c.cap_gamma)) {
    if (c.nonneg && !deg.nonnegative()) continue;
    Row r;
    r["deg"] = deg.to_string();
    r["total"] = deg.total();
    r["nonneg"] = deg.nonnegative();
    t.add(std::move(r));
  }
  t.print(out);
  return kExitOk;
}

void print_strata(const DualGraph& x, const std::vector<Stratum>& strata, bool json, std::ostream& out) {
  Table t({"S", "deghat", "degrestr", "dim", "nonneg"}, json);
  for (const auto& st : strata) {
    Row r;
    r["S"] = node_list(x, st.nodes);
    r["deghat"] = st.deghat.to_string();
    r["degrestr"] = st.restricted.to_string();
    r["dim"] = st.dim;
    r["nonneg"] = st.nonneg;
    t.add(std::move(r));
  }
  t.print(out);
}

int cmd_strata(const Config& c, std::ostream& out, bool wtilde) {
  const auto x = load(c);
  const int d = require_d(c);
  const StrataOptions opts{wtilde || c.nonneg, c.cap_gamma};
  print_strata(x, enumerate_strata(x, d, opts), c.json, out);
  return kExitOk;
}

int cmd_closure(const Config& c, std::ostream& out) {
  const auto x = load(c);
  if (!classify(x).binary) throw InputError("closure: binary only");
  print_strata(x, closure_census(x, require_deg(c, x)), c.json, out);
  return kExitOk;
}

std::vector<CurvePoint> parse_points(const std::string& spec, const DualGraph& x, const PrimeField& f) {
  std::vector<CurvePoint> pts;
  for (const auto& item : split(spec, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("--points expects comp:coord, got '" + item + "'");
    const std::string comp = item.substr(0, colon);
    std::size_t idx = x.num_components();
    for (std::size_t v = 0; v < x.num_components(); ++v) {
      if (x.vertex_ids()[v] == comp) idx = v;
    }
    if (idx == x.num_components()) idx = parse_u64(comp, "--points component");
    if (idx >= x.num_components()) throw InputError("--points: no component '" + comp + "'");
    pts.push_back({idx, f.reduce(static_cast<long long>(parse_u64(item.substr(colon + 1), "--points coord") %
                                                        f.modulus()))});
  }
  return pts;
}

int cmd_h0(const Config& c, std::ostream& out) {
  const auto x = load(c);
  const std::uint64_t seed = resolve_seed(c);
  const auto field = field_for(c, c.exhaustive ? kExhaustivePrime : kStatisticalPrime);
  const auto model = RationalCurveModel::random(x, field, seed);

  if (!c.points.empty()) {
    const auto pts = parse_points(c.points, x, field);
    const auto bundle = effective_model(model, pts);
    Table t({"deg", "h0"}, c.json);
    Row r;
    r["deg"] = bundle.degrees.to_string();
    r["h0"] = h0(model, bundle);
    t.add(std::move(r));
    t.print(out);
    return kExitOk;
  }

  const auto deg = require_deg(c, x);
  if (!c.gluing.empty()) {
    LineBundleModel bundle{deg, {}};
    for (const auto& s : split(c.gluing, ',')) {
      bundle.gluing.push_back(field.reduce(static_cast<long long>(parse_u64(s, "--gluing") % field.modulus())));
    }
    validate_bundle(model, bundle);
    Table t({"deg", "gluing", "h0"}, c.json);
    Row r;
    r["deg"] = deg.to_string();
    r["gluing"] = c.gluing;
    r["h0"] = h0(model, bundle);
    t.add(std::move(r));
    t.print(out);
    return kExitOk;
  }

  if (c.exhaustive) {
    const auto probe = exhaustive_W_probe(model, deg, c.cap_gluings);
    Table t({"deg", "prime", "gluings", "effective"}, c.json);
    Row r;
    r["deg"] = deg.to_string();
    r["prime"] = field.modulus();
    r["gluings"] = probe.total;
    r["effective"] = probe.effective;
    t.add(std::move(r));
    t.print(out);
    return kExitOk;
  }

  const auto hist = generic_h0_estimate(model, deg, c.trials, seed);
  Table t({"deg", "h0", "count", "trials"}, c.json);
  for (const auto& [h, n] : hist.counts) {
    Row r;
    r["deg"] = deg.to_string();
    r["h0"] = h;
    r["count"] = n;
    r["trials"] = hist.trials;
    t.add(std::move(r));
  }
  t.print(out);
  return kExitOk;
}

int cmd_numcomp(const Config& c, std::ostream& out) {
  const auto x = load(c);
  const auto count = component_count(x, require_deg(c, x), c.cap_gamma);
  Table t({"pattern", "contribution"}, c.json);
  for (const auto& pc : count.patterns) {
    Row r;
    r["pattern"] = pc.pattern.to_string();
    r["contribution"] = pc.contribution;
    t.add(std::move(r));
  }
  t.print(out);
  if (c.json) {
    out << Row{{"N", count.n}}.dump() << '\n';
  } else {
    out << "N=" << count.n << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  SuiteParams p;
  p.gmax = c.gmax;
  if (c.prime) p.prime = field_for(c, 0).modulus();
  p.seed = resolve_seed(c);
  p.trials = c.trials;
  p.gamma_cap = c.cap_gamma;
  p.gluing_cap = c.cap_gluings;
  p.two_component_only = c.two_component;
  const auto results = run_suite(c.suite, p);
  Table t({"suite", "case", "verdict", "detail"}, c.json);
  bool failed = false;
  for (const auto& r : results) {
    failed = failed || r.verdict == Verdict::fail;
    Row row;
    row["suite"] = r.suite;
    row["case"] = r.name;
    row["verdict"] = to_string(r.verdict);
    row["detail"] = r.detail.empty() ? "-" : r.detail;
    t.add(std::move(row));
  }
  t.print(out);
  return failed ? kExitVerification : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced multidegrees, strata and Brill-Noether ranks on nodal curves", "abelstrata"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;

  app.add_option("--d", c.d, "Total degree");
  app.add_option("--deg", c.deg, "Multidegree literal, e.g. 1,0,2");
  app.add_option("--prime", c.prime, "Field characteristic");
  app.add_option("--seed", c.seed, "Random seed (default 24301, or ABELSTRATA_SEED)");
  app.add_option("--trials", c.trials, "Samples for statistical estimates");
  app.add_flag("--nonneg", c.nonneg, "Keep non-negative multidegrees only");
  app.add_flag("--strict", c.strict, "Strictly balanced multidegrees only");
  app.add_flag("--json", c.json, "Emit JSON lines instead of TSV");
  app.add_option("--cap-gamma", c.cap_gamma, "Component cap for subcurve enumeration");
  app.add_option("--cap-gluings", c.cap_gluings, "Cap on exhaustive gluing enumeration");

  const std::vector<std::pair<const char*, const char*>> curve_commands = {
      {"info", "Genus, classification and separating nodes"},
      {"multidegrees", "Balanced multidegrees of total degree --d"},
      {"strata", "Strata (S, deghat) of the compactified Picard variety in degree --d"},
      {"wtilde", "Strata with non-negative deghat in degree --d"},
      {"closure", "Strata refining --deg (binary curves)"},
      {"h0", "h0 of line bundles on a rational-component curve"},
      {"numcomp", "Component census for compact-type curves at --deg"},
  };
  for (const auto& [name, help] : curve_commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("curve", c.curve_path, "Curve file")->required();
    if (std::string(name) == "h0") {
      sub->add_option("--gluing", c.gluing, "Gluing units c1,c2,... in edge order");
      sub->add_option("--points", c.points, "Effective divisor comp:coord,...");
      sub->add_flag("--exhaustive", c.exhaustive, "Count effective gluings over all of (F_p^*)^delta");
    }
  }
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", c.suite, "Suite name")->required();
  verify->add_option("--gmax", c.gmax, "Largest genus (or loop count) in the suite");
  verify->add_flag("--two-component", c.two_component, "numcomp: two-component grid only");
  std::string suites;
  for (const auto& s : suite_names()) suites += (suites.empty() ? "" : ", ") + s;
  verify->footer("Suites: " + suites);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "info") return cmd_info(c, out);
    if (cmd == "multidegrees") return cmd_multidegrees(c, out);
    if (cmd == "strata") return cmd_strata(c, out, false);
    if (cmd == "wtilde") return cmd_strata(c, out, true);
    if (cmd == "closure") return cmd_closure(c, out);
    if (cmd == "h0") return cmd_h0(c, out);
    if (cmd == "numcomp") return cmd_numcomp(c, out);
    if (cmd == "verify") return cmd_verify(c, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {  // DegreeError, FieldError, UnknownSuite
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {  // GraphError, CapExceeded, I/O
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  err << "error: unknown command " << cmd << '\n';
  return kExitInput;
}

}  // namespace abelstrata
