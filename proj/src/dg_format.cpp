#include "covset/dg_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "covset/error.hpp"

namespace covset {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

DominanceGraph parse_graph(std::string_view text, const GraphLimits& limits) {
  std::size_t expected = 0;
  bool have_header = false;
  std::vector<std::string> names;
  std::vector<NamePair> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "dg") throw SyntaxError(line_no, "expected header 'dg <n>'");
      auto [p, ec] = std::from_chars(tokens[1].data(), tokens[1].data() + tokens[1].size(), expected);
      if (ec != std::errc() || p != tokens[1].data() + tokens[1].size()) {
        throw SyntaxError(line_no, "alternative count is not a non-negative integer");
      }
      const std::size_t cap = std::min(limits.max_alternatives, kMaxAlternatives);
      if (expected > cap) {
        throw ResourceError(BudgetDimension::Alternatives, "graph declares " + std::to_string(expected) +
                                                               " alternatives; the limit is " + std::to_string(cap));
      }
      have_header = true;
    } else if (names.size() < expected) {
      if (tokens.size() != 1) throw SyntaxError(line_no, "expected a single alternative name");
      if (!is_valid_alternative_name(tokens[0])) {
        throw SyntaxError(line_no, "invalid alternative name '" + std::string(tokens[0]) + "'");
      }
      names.emplace_back(tokens[0]);
    } else {
      if (tokens.size() != 2) throw SyntaxError(line_no, "expected an edge '<u> <v>'");
      edges.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
    }
    if (eol == text.size()) break;
  }
  if (!have_header) throw SyntaxError(line_no == 0 ? 1 : line_no, "missing header 'dg <n>'");
  if (names.size() != expected) {
    throw SyntaxError(line_no, "expected " + std::to_string(expected) + " alternatives, found " +
                                   std::to_string(names.size()));
  }
  return DominanceGraph::build(std::move(names), edges, limits);
}

std::string serialize_graph(const DominanceGraph& g) {
  std::string out = "dg " + std::to_string(g.size()) + "\n";
  for (const auto& n : g.names()) out += n + "\n";
  for (auto [x, y] : g.edges()) out += g.name(x) + " " + g.name(y) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorKind::InvalidArgument, "write to '" + path + "' failed");
}

DominanceGraph read_graph_file(const std::string& path, const GraphLimits& limits) {
  return parse_graph(read_text_file(path), limits);
}

}  // namespace covset
