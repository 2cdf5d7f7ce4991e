#include "polyad/catalog.hpp"

#include <charconv>
#include <numeric>

#include "polyad/error.hpp"
#include "polyad/semidirect.hpp"

namespace polyad {

namespace {

std::size_t parse_size(std::string_view text, std::string_view context) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || value == 0)
    throw Error(Errc::invalid_argument, std::string(context), {}, std::string(text));
  return value;
}

bool is_abelian(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < x; ++y)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

std::size_t map_order(const GroupMap& f) {
  std::size_t k = 1;
  for (auto p = f; !p.is_identity(); p = compose(f, p)) ++k;
  return k;
}

FiniteGroup parse_group(std::string_view spec) {
  if (spec.starts_with("cyclic:")) return cyclic_group(parse_size(spec.substr(7), "cyclic"));
  if (spec.starts_with("dihedral:")) return dihedral_group(parse_size(spec.substr(9), "dihedral"));
  if (spec == "symmetric3" || spec == "S3") return symmetric_group_3();
  if (spec.starts_with("direct:")) {
    auto rest = spec.substr(7);
    std::optional<FiniteGroup> acc;
    while (!rest.empty()) {
      const auto cut = rest.find_first_of(",*");
      const auto part = rest.substr(0, cut);
      auto factor = parse_group(part);
      acc = acc ? direct_product(*acc, factor) : factor;
      rest = cut == std::string_view::npos ? std::string_view{} : rest.substr(cut + 1);
    }
    if (!acc) throw Error(Errc::invalid_argument, "direct", {}, std::string(spec));
    return *acc;
  }
  throw Error(Errc::invalid_argument, "group-spec", {}, std::string(spec));
}

}  // namespace

FiniteGroup dihedral_group(std::size_t k) {
  const auto base = cyclic_group(k);
  const auto inversion = theta_preset(base, "inv");
  auto sd = semidirect_product(2, base, CyclicAction(2, inversion));
  return sd.group.with_label("D" + std::to_string(k));
}

GroupMap theta_preset(const FiniteGroup& g, std::string_view name) {
  std::vector<Element> table(g.order());
  if (name == "id") return GroupMap::identity(g);
  if (name == "neg" || name == "inv") {
    for (Element x = 0; x < g.order(); ++x) table[x] = g.inv(x);
    return GroupMap(g, g, std::move(table), MapKind::automorphism);
  }
  if (name.starts_with("mul")) {
    const auto k = parse_size(name.substr(3), "theta-preset");
    for (Element x = 0; x < g.order(); ++x) table[x] = g.pow(x, k);
    return GroupMap(g, g, std::move(table), MapKind::automorphism);
  }
  if (name.starts_with("inner:")) {
    std::size_t u = 0;
    const auto text = name.substr(6);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), u);
    if (ec != std::errc{} || ptr != text.data() + text.size() || u >= g.order())
      throw Error(Errc::invalid_argument, "theta-preset", {}, std::string(name));
    return inner_automorphism(g, static_cast<Element>(u));
  }
  throw Error(Errc::invalid_argument, "theta-preset", {}, std::string(name));
}

Preset catalog_preset(std::string_view spec) {
  Preset preset{std::string(spec), parse_group(spec), {}};
  const auto& g = preset.group;
  auto suggest = [&](std::string name) {
    auto theta = theta_preset(g, name);
    const auto arity = static_cast<unsigned>(map_order(theta) + 1);
    preset.suggestions.push_back(SuggestedAction{std::move(name), std::move(theta), arity});
  };
  preset.suggestions.push_back(SuggestedAction{"id", GroupMap::identity(g), 2});
  preset.suggestions.push_back(SuggestedAction{"id", GroupMap::identity(g), 3});
  if (is_abelian(g)) {
    if (g.order() > 2) suggest("inv");
    if (spec.starts_with("cyclic:")) {
      const auto m = g.order();
      for (std::size_t k = 2; k + 1 < m; ++k)
        if (std::gcd(k, m) == 1) suggest("mul" + std::to_string(k));
    }
  } else {
    for (Element u = 0; u < g.order(); ++u)
      if (u != g.identity() && !inner_automorphism(g, u).is_identity()) suggest("inner:" + std::to_string(u));
  }
  return preset;
}

NaryGroup CatalogEntry::nary() const { return derive(base, theta, base.identity(), arity).with_label(name); }

std::vector<CatalogEntry> catalog_all() {
  const auto z3 = cyclic_group(3);
  const auto z4 = cyclic_group(4);
  const auto z5 = cyclic_group(5);
  const auto s3 = symmetric_group_3();
  const auto z2z4 = direct_product(cyclic_group(2), z4);
  return {
      {"der_neg(Z3) n=3", z3, theta_preset(z3, "neg"), 3},
      {"der_neg(Z4) n=3", z4, theta_preset(z4, "neg"), 3},
      {"der_mul2(Z5) n=5", z5, theta_preset(z5, "mul2"), 5},
      {"der_id(Z3) n=3", z3, GroupMap::identity(z3), 3},
      // Element 1 of S3 is the transposition (0)(1 2).
      {"der_inner(S3) n=3", s3, inner_automorphism(s3, 1), 3},
      {"der_inv(Z2xZ4) n=3", z2z4, theta_preset(z2z4, "inv"), 3},
  };
}

}  // namespace polyad
