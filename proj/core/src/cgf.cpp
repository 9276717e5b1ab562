#include "coltri/cgf.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace coltri {

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long to_integer(const std::string& tok, std::size_t line) {
  long long value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ParseError(line, tok, "expected an integer");
  return value;
}

}  // namespace

ColourfulGraph parse_cgf(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  int d = 0;
  std::size_t n = 0;
  std::vector<Permutation> matchings;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tokens = split_tokens(line);

    if (!have_header) {
      if (tokens[0] != "cgf") throw ParseError(line_no, tokens[0], "expected header 'cgf <d> <n>'");
      if (tokens.size() != 3) {
        throw ParseError(line_no, tokens.size() > 3 ? tokens[3] : tokens.back(),
                         "header must be 'cgf <d> <n>'");
      }
      const auto dv = to_integer(tokens[1], line_no);
      const auto nv = to_integer(tokens[2], line_no);
      if (dv < 1 || dv + 1 > ColourSet::kMaxColours) {
        throw ParseError(line_no, tokens[1], "dimension out of range");
      }
      if (nv < 2 || nv % 2 != 0) throw ParseError(line_no, tokens[2], "n must be even and >= 2");
      d = static_cast<int>(dv);
      n = static_cast<std::size_t>(nv);
      have_header = true;
      continue;
    }

    if (matchings.size() == static_cast<std::size_t>(d + 1)) {
      throw ParseError(line_no, tokens[0], "more than d+1 matching lines");
    }
    const std::size_t half = n / 2;
    if (tokens.size() != half) {
      throw ParseError(line_no, tokens.size() > half ? tokens[half] : tokens.back(),
                       "expected " + std::to_string(half) + " entries, got " +
                           std::to_string(tokens.size()));
    }
    Permutation p(half);
    std::vector<bool> seen(half, false);
    for (std::size_t w = 0; w < half; ++w) {
      const auto value = to_integer(tokens[w], line_no);
      if (value <= static_cast<long long>(half) || value > static_cast<long long>(n)) {
        throw ParseError(line_no, tokens[w],
                         "black vertex must lie in " + std::to_string(half + 1) + ".." +
                             std::to_string(n));
      }
      const auto b = static_cast<std::uint32_t>(value - static_cast<long long>(half) - 1);
      if (seen[b]) throw ParseError(line_no, tokens[w], "black vertex repeated (not a bijection)");
      seen[b] = true;
      p[w] = b;
    }
    matchings.push_back(std::move(p));
  }

  if (!have_header) throw ParseError(line_no, "", "missing 'cgf' header");
  if (matchings.size() != static_cast<std::size_t>(d + 1)) {
    throw ParseError(line_no, "", "expected " + std::to_string(d + 1) + " matching lines, got " +
                                      std::to_string(matchings.size()));
  }
  return ColourfulGraph::from_matchings(d, std::move(matchings));
}

ColourfulGraph parse_cgf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_cgf(in);
}

ColourfulGraph read_cgf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_cgf(in);
}

void write_cgf(std::ostream& out, const ColourfulGraph& g) {
  out << "cgf " << g.dim() << ' ' << g.order() << '\n';
  for (int c = 1; c <= g.colour_count(); ++c) {
    const auto m = g.matching(c);
    for (std::size_t w = 0; w < m.size(); ++w) {
      if (w != 0) out << ' ';
      out << g.half() + m[w] + 1;
    }
    out << '\n';
  }
}

std::string to_cgf(const ColourfulGraph& g) {
  std::ostringstream out;
  write_cgf(out, g);
  return out.str();
}

void write_dot(std::ostream& out, const ColourfulGraph& g) {
  out << "graph G {\n";
  for (std::size_t w = 1; w <= g.half(); ++w) out << "  w" << w << " [shape=circle];\n";
  for (std::size_t b = 1; b <= g.half(); ++b) {
    out << "  b" << b << " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
  }
  for (int c = 1; c <= g.colour_count(); ++c) {
    const auto m = g.matching(c);
    const auto colour = dot_palette[static_cast<std::size_t>(c - 1) % dot_palette.size()];
    for (std::size_t w = 0; w < m.size(); ++w) {
      out << "  w" << w + 1 << " -- b" << m[w] + 1 << " [color=" << colour << ", label=" << c
          << "];\n";
    }
  }
  out << "}\n";
}

std::string to_dot(const ColourfulGraph& g) {
  std::ostringstream out;
  write_dot(out, g);
  return out.str();
}

}  // namespace coltri
