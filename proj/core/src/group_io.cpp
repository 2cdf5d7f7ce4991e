#include "polyad/group_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "polyad/error.hpp"

namespace polyad {

std::vector<long long> read_integers(std::istream& in) {
  std::vector<long long> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size())
        throw Error(Errc::parse_error, "not-an-integer", {static_cast<std::int64_t>(line_no)}, token);
      values.push_back(v);
    }
  }
  return values;
}

namespace {

std::vector<Element> to_elements(const std::vector<long long>& values, std::size_t from) {
  std::vector<Element> out;
  out.reserve(values.size() - from);
  for (std::size_t i = from; i < values.size(); ++i) {
    if (values[i] < 0) throw Error(Errc::parse_error, "negative-index", {values[i]});
    out.push_back(static_cast<Element>(values[i]));
  }
  return out;
}

}  // namespace

FiniteGroup read_group(std::istream& in) {
  const auto values = read_integers(in);
  if (values.empty()) throw Error(Errc::parse_error, "empty");
  if (values[0] <= 0) throw Error(Errc::parse_error, "order", {values[0]});
  const auto m = static_cast<std::size_t>(values[0]);
  if (values.size() != 1 + m * m)
    throw Error(Errc::parse_error, "entry-count",
                {static_cast<std::int64_t>(values.size() - 1), static_cast<std::int64_t>(m * m)});
  return build_group_from_table(m, to_elements(values, 1));
}

void write_group(std::ostream& out, const FiniteGroup& g, const std::vector<std::string>& header_comments) {
  for (const auto& c : header_comments) out << "# " << c << '\n';
  const auto m = g.order();
  out << m << '\n';
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (y) out << ' ';
      out << g.table()[x * m + y];
    }
    out << '\n';
  }
}

std::vector<Element> read_map_table(std::istream& in) { return to_elements(read_integers(in), 0); }

void write_map_table(std::ostream& out, const std::vector<Element>& table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) out << ' ';
    out << table[i];
  }
  out << '\n';
}

FiniteGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "open", {}, path);
  return read_group(in);
}

void write_group_file(const std::string& path, const FiniteGroup& g, const std::vector<std::string>& header_comments) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "open", {}, path);
  write_group(out, g, header_comments);
}

}  // namespace polyad
