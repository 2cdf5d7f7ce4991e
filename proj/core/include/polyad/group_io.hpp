#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyad/group.hpp"

namespace polyad {

// Cayley text format: first non-comment line is the order m, then m lines of
// m space-separated indices. '#' starts a comment that runs to end of line.
// Map format: one line of space-separated target indices.

FiniteGroup read_group(std::istream& in);
void write_group(std::ostream& out, const FiniteGroup& g, const std::vector<std::string>& header_comments = {});

std::vector<Element> read_map_table(std::istream& in);
void write_map_table(std::ostream& out, const std::vector<Element>& table);

FiniteGroup read_group_file(const std::string& path);
void write_group_file(const std::string& path, const FiniteGroup& g,
                      const std::vector<std::string>& header_comments = {});

/// Reads all integers from a stream, skipping '#' comments. Throws
/// parse_error on any non-integer token.
std::vector<long long> read_integers(std::istream& in);

}  // namespace polyad
