// Line-oriented curve description files.
//
//   # comment
//   curve <name>                      (optional, at most once)
//   vertex <id> genus <int >= 0>
//   edge <id> <vertex-id> <vertex-id>
//
// Ids are alphanumeric tokens ('_' and '-' allowed). Declaration order is the
// canonical component / node order.

#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "abelstrata/curve_graph.hpp"

namespace abelstrata {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

DualGraph parse_curve(std::string_view text);
DualGraph load_curve(const std::filesystem::path& path);

/// Inverse of parse_curve, using the graph's vertex and edge ids.
std::string format_curve(const DualGraph& x);

}  // namespace abelstrata
