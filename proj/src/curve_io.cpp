#include "abelstrata/curve_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace abelstrata {

namespace {

bool valid_id(std::string_view id) {
  return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '-';
  });
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

DualGraph parse_curve(std::string_view text) {
  std::string name;
  bool have_name = false;
  std::vector<int> genera;
  std::vector<std::string> vertex_ids;
  std::map<std::string, std::size_t, std::less<>> vertex_index;
  std::vector<Edge> edges;
  std::vector<std::string> edge_ids;
  std::map<std::string, std::size_t, std::less<>> edge_index;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokenize(line);
    if (tok.empty()) continue;

    if (tok[0] == "curve") {
      if (tok.size() != 2) throw ParseError(lineno, "expected 'curve <name>'");
      if (have_name) throw ParseError(lineno, "duplicate 'curve' declaration");
      name = tok[1];
      have_name = true;
    } else if (tok[0] == "vertex") {
      if (tok.size() != 4 || tok[2] != "genus") {
        throw ParseError(lineno, "expected 'vertex <id> genus <int>'");
      }
      if (!valid_id(tok[1])) throw ParseError(lineno, "invalid vertex id '" + tok[1] + "'");
      if (vertex_index.count(tok[1]) != 0) {
        throw ParseError(lineno, "duplicate vertex id '" + tok[1] + "'");
      }
      int g = 0;
      const auto& s = tok[3];
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), g);
      if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(lineno, "genus is not an integer: '" + s + "'");
      }
      if (g < 0) throw ParseError(lineno, "negative genus on vertex '" + tok[1] + "'");
      vertex_index.emplace(tok[1], genera.size());
      genera.push_back(g);
      vertex_ids.push_back(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(lineno, "expected 'edge <id> <vertex> <vertex>'");
      if (!valid_id(tok[1])) throw ParseError(lineno, "invalid edge id '" + tok[1] + "'");
      if (edge_index.count(tok[1]) != 0) {
        throw ParseError(lineno, "duplicate edge id '" + tok[1] + "'");
      }
      auto u = vertex_index.find(tok[2]);
      auto v = vertex_index.find(tok[3]);
      if (u == vertex_index.end() || v == vertex_index.end()) {
        const auto& missing = u == vertex_index.end() ? tok[2] : tok[3];
        throw ParseError(lineno, "dangling vertex '" + missing + "' in edge '" + tok[1] + "'");
      }
      edge_index.emplace(tok[1], edges.size());
      edges.push_back({u->second, v->second});
      edge_ids.push_back(tok[1]);
    } else {
      throw ParseError(lineno, "unknown keyword '" + tok[0] + "'");
    }
  }
  if (genera.empty()) throw ParseError(lineno, "no vertices declared");
  if (genera.size() > kMaxComponents) {
    throw ParseError(lineno, "too many vertices (max " + std::to_string(kMaxComponents) + ")");
  }

  DualGraph x(std::move(genera), std::move(edges), std::move(name));
  x.set_ids(std::move(vertex_ids), std::move(edge_ids));
  return x;
}

DualGraph load_curve(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open curve file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve(buf.str());
}

std::string format_curve(const DualGraph& x) {
  std::ostringstream out;
  if (!x.name().empty()) out << "curve " << x.name() << '\n';
  for (std::size_t v = 0; v < x.num_components(); ++v) {
    out << "vertex " << x.vertex_ids()[v] << " genus " << x.component_genus(v) << '\n';
  }
  for (std::size_t e = 0; e < x.num_nodes(); ++e) {
    out << "edge " << x.edge_ids()[e] << ' ' << x.vertex_ids()[x.edge(e).u] << ' '
        << x.vertex_ids()[x.edge(e).v] << '\n';
  }
  return out.str();
}

}  // namespace abelstrata
