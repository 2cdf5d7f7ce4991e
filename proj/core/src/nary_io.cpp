#include "polyad/nary_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "polyad/error.hpp"

namespace polyad {

namespace {

class Tokens {
 public:
  explicit Tokens(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        if (tokens_.empty() && label_.empty()) label_ = trim(line.substr(hash + 1));
        line.erase(hash);
      }
      std::istringstream ss(line);
      std::string t;
      while (ss >> t) tokens_.push_back(t);
    }
  }

  const std::string& word() {
    if (pos_ >= tokens_.size()) throw Error(Errc::parse_error, "unexpected-end");
    return tokens_[pos_++];
  }

  long long integer() {
    const auto& t = word();
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size()) throw Error(Errc::parse_error, "not-an-integer", {static_cast<std::int64_t>(pos_)}, t);
    return v;
  }

  Element element(std::size_t m) {
    const auto v = integer();
    if (v < 0 || static_cast<std::uint64_t>(v) >= m) throw Error(Errc::parse_error, "bad-index", {v});
    return static_cast<Element>(v);
  }

  bool done() const { return pos_ == tokens_.size(); }

  /// Text of the first comment preceding the header, if any.
  const std::string& label() const { return label_; }

 private:
  static std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
  }

  std::vector<std::string> tokens_;
  std::string label_;
  std::size_t pos_ = 0;
};

}  // namespace

NaryGroup read_nary(std::istream& in, const Limits& limits) {
  Tokens t(in);
  if (t.word() != "nary") throw Error(Errc::parse_error, "header", {}, "expected 'nary n m'");
  const auto n = t.integer();
  const auto m = t.integer();
  if (n < 2 || m < 1) throw Error(Errc::parse_error, "header", {n, m});
  const auto kind = t.word();
  const auto size = static_cast<std::size_t>(m);
  if (kind == "derived") {
    std::vector<Element> table(size * size);
    for (auto& v : table) v = t.element(size);
    std::vector<Element> theta(size);
    for (auto& v : theta) v = t.element(size);
    const auto b = t.element(size);
    if (!t.done()) throw Error(Errc::parse_error, "trailing-data");
    const auto base = build_group_from_table(size, std::move(table));
    auto g = derive(base, GroupMap(base, base, std::move(theta), MapKind::automorphism), b, static_cast<unsigned>(n));
    return t.label().empty() ? g : g.with_label(t.label());
  }
  if (kind == "table") {
    std::uint64_t count = 1;
    for (long long k = 0; k < n; ++k) {
      count *= size;
      if (count > limits.table_max)
        throw Error(Errc::budget_exceeded, "table-size", {static_cast<std::int64_t>(limits.table_max)});
    }
    std::vector<Element> values(count);
    for (auto& v : values) v = t.element(size);
    if (!t.done()) throw Error(Errc::parse_error, "trailing-data");
    auto g = verified(NaryGroup::from_table(static_cast<unsigned>(n), size, std::move(values), limits), limits);
    return t.label().empty() ? g : g.with_label(t.label());
  }
  throw Error(Errc::parse_error, "presentation", {}, kind);
}

void write_nary(std::ostream& out, const NaryGroup& g) {
  const auto m = g.size();
  if (!g.label().empty()) out << "# " << g.label() << '\n';
  out << "nary " << g.arity() << ' ' << m << '\n';
  if (g.is_derived()) {
    const auto& d = g.derived();
    out << "derived\n";
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) out << (y ? " " : "") << d.base.table()[x * m + y];
      out << '\n';
    }
    for (std::size_t x = 0; x < m; ++x) out << (x ? " " : "") << d.theta.table()[x];
    out << '\n' << d.b << '\n';
    return;
  }
  out << "table\n";
  const auto values = g.table_values();
  for (std::size_t i = 0; i < values.size(); ++i) out << values[i] << ((i + 1) % m == 0 ? '\n' : ' ');
}

NaryGroup read_nary_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "open", {}, path);
  return read_nary(in, limits);
}

void write_nary_file(const std::string& path, const NaryGroup& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "open", {}, path);
  write_nary(out, g);
}

}  // namespace polyad
