#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "coltri/colourful_graph.hpp"

namespace coltri {

/// Parses one graph in CGF text format:
///
///     cgf <d> <n>
///     <d+1 lines, one per colour: for w = 1..n/2 the black vertex (n/2+1..n) matched to w>
///
/// `#` starts a comment line; blank lines are ignored. Throws ParseError citing line/token.
ColourfulGraph parse_cgf(std::istream& in);
ColourfulGraph parse_cgf(std::string_view text);
ColourfulGraph read_cgf_file(const std::string& path);

void write_cgf(std::ostream& out, const ColourfulGraph& g);
std::string to_cgf(const ColourfulGraph& g);

/// Colour c is drawn with dot_palette[(c-1) % 8].
inline constexpr std::array<std::string_view, 8> dot_palette = {
    "red", "blue", "green", "orange", "purple", "brown", "magenta", "cyan"};

/// Graphviz export. Vertices are named w1..w{n/2} and b1..b{n/2}.
void write_dot(std::ostream& out, const ColourfulGraph& g);
std::string to_dot(const ColourfulGraph& g);

}  // namespace coltri
