#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "linkroots/multigraph.hpp"

namespace linkroots {

// Multigraph text format:
//   mg 1
//   n <vertex_count>
//   e <u> <v>        (zero or more; edge ids follow file order)
// '#' starts a comment; blank lines are ignored. Errors throw ParseError with the line number.
Multigraph read_multigraph(std::istream& in);
Multigraph read_multigraph_file(const std::filesystem::path& path);
Multigraph parse_multigraph(const std::string& text);

void write_multigraph(std::ostream& out, const Multigraph& g);
void write_multigraph_file(const std::filesystem::path& path, const Multigraph& g);
std::string format_multigraph(const Multigraph& g);

// Graphviz DOT; one `--` line per edge so parallel edges stay distinct.
// `vertex_labels` may be empty or hold one label per vertex.
void write_dot(std::ostream& out, const Multigraph& g,
               const std::vector<std::string>& vertex_labels = {});

// Splits a content line into tokens after stripping a '#' comment.
std::vector<std::string> tokenize_line(const std::string& line);

// Parses a non-negative integer token; throws ParseError on failure.
long long parse_count(const std::string& token, std::size_t line);

}  // namespace linkroots
