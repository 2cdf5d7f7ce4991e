#include "polyad/search.hpp"

#include <algorithm>
#include <functional>

#include "polyad/error.hpp"
#include "polyad/subgroup.hpp"

namespace polyad {

namespace {

constexpr Element unset = static_cast<Element>(-1);

void check_bound(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.search_bound)
    throw Error(Errc::search_bound_exceeded, "order",
                {static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(limits.search_bound)});
}

// Backtracking over generator images. A partial assignment of the first k
// generators is kept only if it extends (along the Cayley graph of the
// generated subgroup) to an injective homomorphism.
class GeneratorSearch {
 public:
  GeneratorSearch(const FiniteGroup& source, const FiniteGroup& target)
      : source_(source), target_(target), gens_(generating_set(source)) {
    std::vector<std::size_t> target_orders(target.order());
    for (Element y = 0; y < target.order(); ++y) target_orders[y] = target.element_order(y);
    for (auto s : gens_) {
      const auto order = source.element_order(s);
      std::vector<Element> c;
      for (Element y = 0; y < target.order(); ++y)
        if (target_orders[y] == order) c.push_back(y);
      candidates_.push_back(std::move(c));
    }
    images_.resize(gens_.size());
  }

  /// Calls `visit(table)` for every isomorphism in generator-image order;
  /// stops when visit returns false.
  void run(const std::function<bool(const std::vector<Element>&)>& visit) {
    stop_ = false;
    recurse(0, visit);
  }

 private:
  void recurse(std::size_t k, const std::function<bool(const std::vector<Element>&)>& visit) {
    if (stop_) return;
    if (k == gens_.size()) {
      if (!extend(k)) return;
      if (!visit(map_)) stop_ = true;
      return;
    }
    for (auto candidate : candidates_[k]) {
      images_[k] = candidate;
      if (extend(k + 1)) recurse(k + 1, visit);
      if (stop_) return;
    }
  }

  bool extend(std::size_t k) {
    map_.assign(source_.order(), unset);
    used_.assign(target_.order(), 0);
    map_[source_.identity()] = target_.identity();
    used_[target_.identity()] = 1;
    queue_.assign(1, source_.identity());
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto x = queue_[head];
      for (std::size_t j = 0; j < k; ++j) {
        const auto y = source_.mul(x, gens_[j]);
        const auto want = target_.mul(map_[x], images_[j]);
        if (map_[y] == unset) {
          if (used_[want]) return false;
          map_[y] = want;
          used_[want] = 1;
          queue_.push_back(y);
        } else if (map_[y] != want) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& source_;
  const FiniteGroup& target_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<Element> map_;
  std::vector<char> used_;
  std::vector<Element> queue_;
  bool stop_ = false;
};

std::vector<std::size_t> order_profile(const FiniteGroup& g) {
  std::vector<std::size_t> orders(g.order());
  for (Element x = 0; x < g.order(); ++x) orders[x] = g.element_order(x);
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

std::vector<GroupMap> automorphism_group(const FiniteGroup& g, const Limits& limits) {
  check_bound(g, limits);
  std::vector<std::vector<Element>> tables;
  GeneratorSearch search(g, g);
  search.run([&](const std::vector<Element>& table) {
    tables.push_back(table);
    return true;
  });
  std::sort(tables.begin(), tables.end());
  tables.erase(std::unique(tables.begin(), tables.end()), tables.end());
  std::vector<GroupMap> result;
  result.reserve(tables.size());
  for (auto& t : tables) result.emplace_back(g, g, std::move(t), MapKind::automorphism);
  return result;
}

std::optional<GroupMap> isomorphism_search(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  check_bound(g, limits);
  check_bound(h, limits);
  if (g.order() != h.order()) return std::nullopt;
  if (order_profile(g) != order_profile(h)) return std::nullopt;
  std::optional<std::vector<Element>> found;
  GeneratorSearch search(g, h);
  search.run([&](const std::vector<Element>& table) {
    found = table;
    return false;
  });
  if (!found) return std::nullopt;
  const auto kind = g == h ? MapKind::automorphism : MapKind::isomorphism;
  return GroupMap(g, h, std::move(*found), kind);
}

}  // namespace polyad
