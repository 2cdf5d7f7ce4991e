#pragma once

#include <iosfwd>
#include <string>

#include "polyad/limits.hpp"
#include "polyad/nary_group.hpp"

namespace polyad {

// N-ary group text format ('#' comments allowed anywhere):
//
//   nary <n> <m>
//   derived
//   <m lines of m indices: base Cayley table>
//   <one line of m indices: theta>
//   <b>
//
// or
//
//   nary <n> <m>
//   table
//   <m^n indices, row-major, first argument most significant>
//
// Derived files are re-validated by derive(); table files are verified
// before being returned.

NaryGroup read_nary(std::istream& in, const Limits& limits = default_limits());
void write_nary(std::ostream& out, const NaryGroup& g);

NaryGroup read_nary_file(const std::string& path, const Limits& limits = default_limits());
void write_nary_file(const std::string& path, const NaryGroup& g);

}  // namespace polyad
