#include "polyad/nary_group.hpp"

#include <algorithm>
#include <limits>

#include "polyad/error.hpp"
#include "polyad/parallel.hpp"

namespace polyad {

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > saturated / base) return saturated;
    r *= base;
  }
  return r;
}

std::vector<std::int64_t> as_witness(std::span<const Element> xs) {
  return {xs.begin(), xs.end()};
}

// Odometer over row-major tuples, digit 0 most significant.
struct Odometer {
  std::vector<Element> digits;
  std::size_t base;

  Odometer(std::size_t length, std::size_t base_, std::uint64_t start) : digits(length), base(base_) {
    decode_tuple(start, base, digits);
  }
  void next() noexcept {
    for (std::size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < base) return;
      digits[k] = 0;
    }
  }
};

template <typename Check>
std::optional<std::uint64_t> scan_tuples(std::size_t length, std::size_t base, std::uint64_t total, Check check) {
  return parallel_find_first(total, [&] {
    return [&, length, base](std::uint64_t begin, std::uint64_t end,
                             const std::atomic<std::uint64_t>& best) -> std::optional<std::uint64_t> {
      Odometer odo(length, base, begin);
      std::vector<Element> scratch(length);
      for (std::uint64_t i = begin; i < end; ++i, odo.next()) {
        if ((i & 0xfff) == 0 && best.load(std::memory_order_relaxed) < begin) return std::nullopt;
        if (!check(odo.digits, scratch)) return i;
      }
      return std::nullopt;
    };
  });
}

void require_index(const NaryGroup& g, Element x) {
  if (x >= g.size()) throw Error(Errc::invalid_argument, "bad-index", {x});
}

}  // namespace

void decode_tuple(std::uint64_t index, std::size_t base, std::span<Element> out) noexcept {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = static_cast<Element>(index % base);
    index /= base;
  }
}

std::uint64_t NaryGroup::tuple_count() const noexcept { return checked_pow(size(), arity()); }

const NaryGroup::Derived& NaryGroup::derived() const {
  if (!impl_->derived) throw Error(Errc::invalid_argument, "not-derived", {}, "table presentation has no base group");
  return *impl_->derived;
}

bool NaryGroup::derived_at_identity() const noexcept {
  return impl_->derived && impl_->derived->b == impl_->derived->base.identity();
}

NaryGroup NaryGroup::with_label(std::string label) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->label = std::move(label);
  return NaryGroup(std::move(impl));
}

Element NaryGroup::eval_raw(const Element* args) const noexcept {
  const auto& I = *impl_;
  if (I.derived) {
    const auto& base = I.derived->base;
    Element acc = args[0];
    for (unsigned k = 1; k < I.arity; ++k) acc = base.mul(acc, I.theta_powers[k * I.size + args[k]]);
    return base.mul(acc, I.derived->b);
  }
  std::uint64_t index = 0;
  for (unsigned k = 0; k < I.arity; ++k) index = index * I.size + args[k];
  return I.table[index];
}

NaryGroup NaryGroup::from_table(unsigned arity, std::size_t size, std::vector<Element> values, const Limits& limits) {
  if (arity < 2) throw Error(Errc::invalid_argument, "arity", {arity});
  if (size == 0) throw Error(Errc::invalid_argument, "size", {0});
  const auto count = checked_pow(size, arity);
  if (count > limits.table_max)
    throw Error(Errc::budget_exceeded, "table-size",
                {static_cast<std::int64_t>(std::min<std::uint64_t>(count, std::numeric_limits<std::int64_t>::max())),
                 static_cast<std::int64_t>(limits.table_max)});
  if (values.size() != count)
    throw Error(Errc::invalid_argument, "entry-count", {static_cast<std::int64_t>(values.size()),
                                                        static_cast<std::int64_t>(count)});
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] >= size) throw Error(Errc::invalid_argument, "bad-index", {static_cast<std::int64_t>(i), values[i]});
  auto impl = std::make_shared<Impl>();
  impl->arity = arity;
  impl->size = size;
  impl->table = std::move(values);
  return NaryGroup(std::move(impl));
}

NaryGroup derive(const FiniteGroup& base, const GroupMap& theta, Element b, unsigned n) {
  if (n < 2) throw Error(Errc::invalid_argument, "arity", {n});
  if (theta.kind() != MapKind::automorphism || !(theta.source() == base))
    throw Error(Errc::invalid_argument, "theta-not-automorphism", {}, "theta must be an automorphism of the base");
  if (!base.contains(b)) throw Error(Errc::invalid_argument, "bad-index", {b});
  if (theta(b) != b) throw Error(Errc::derivation_condition_failed, "theta-b-fixed", {b, theta(b)});

  const auto m = base.order();
  auto impl = std::make_shared<NaryGroup::Impl>();
  impl->arity = n;
  impl->size = m;
  impl->theta_powers.resize(static_cast<std::size_t>(n) * m);
  for (Element x = 0; x < m; ++x) impl->theta_powers[x] = x;
  for (unsigned k = 1; k < n; ++k)
    for (Element x = 0; x < m; ++x) impl->theta_powers[k * m + x] = theta(impl->theta_powers[(k - 1) * m + x]);
  for (Element x = 0; x < m; ++x) {
    const auto top = impl->theta_powers[(n - 1) * m + x];
    const auto conj = base.mul(base.mul(b, x), base.inv(b));
    if (top != conj) throw Error(Errc::derivation_condition_failed, "theta-power", {x, top, conj});
  }
  impl->derived = NaryGroup::Derived{base, theta, b};
  impl->verified = true;
  impl->label = base.label();
  return NaryGroup(std::move(impl));
}

Element eval_f(const NaryGroup& g, std::span<const Element> args) {
  if (args.size() != g.arity())
    throw Error(Errc::arity_mismatch, "argument-count", {static_cast<std::int64_t>(args.size()), g.arity()});
  for (auto x : args) require_index(g, x);
  return g.eval_raw(args.data());
}

Element eval_long(const NaryGroup& g, std::span<const Element> args) {
  const std::size_t n = g.arity();
  const std::size_t len = args.size();
  if (len == 1) {
    require_index(g, args[0]);
    return args[0];
  }
  if (len < n || (len - 1) % (n - 1) != 0)
    throw Error(Errc::bad_length, "length", {static_cast<std::int64_t>(len), static_cast<std::int64_t>(n - 1)});
  for (auto x : args) require_index(g, x);
  std::vector<Element> buf(args.begin(), args.begin() + n);
  Element acc = g.eval_raw(buf.data());
  for (std::size_t pos = n; pos < len; pos += n - 1) {
    buf[0] = acc;
    std::copy(args.begin() + pos, args.begin() + pos + (n - 1), buf.begin() + 1);
    acc = g.eval_raw(buf.data());
  }
  return acc;
}

AxiomReport verify_nary_axioms(const NaryGroup& g, const Limits& limits) {
  const unsigned n = g.arity();
  const std::size_t m = g.size();
  const auto per_shift = checked_pow(m, 2 * n - 1);
  const auto total = per_shift == saturated || per_shift > saturated / (n - 1) ? saturated : per_shift * (n - 1);
  if (total > limits.axiom_budget)
    throw Error(Errc::budget_exceeded, "associativity-instances",
                {static_cast<std::int64_t>(std::min<std::uint64_t>(total, std::numeric_limits<std::int64_t>::max())),
                 static_cast<std::int64_t>(limits.axiom_budget)});

  AxiomReport report;
  report.associativity_instances = total;
  const std::size_t len = 2 * n - 1;

  auto outer = [&](std::span<const Element> x, unsigned shift, std::vector<Element>& buf) {
    // buf has length n; inner product of x[shift .. shift+n-1] replaces them.
    const Element inner = g.eval_raw(x.data() + shift);
    for (unsigned k = 0; k < shift; ++k) buf[k] = x[k];
    buf[shift] = inner;
    for (unsigned k = shift + 1; k < n; ++k) buf[k] = x[k + n - 1];
    return g.eval_raw(buf.data());
  };

  for (unsigned shift = 1; shift < n; ++shift) {
    auto hit = scan_tuples(len, m, per_shift, [&, shift](const std::vector<Element>& x, std::vector<Element>& scratch) {
      std::vector<Element>& buf = scratch;  // length 2n-1 >= n
      const auto left = outer(x, 0, buf);
      const auto right = outer(x, shift, buf);
      return left == right;
    });
    if (hit) {
      AssociativityFailure failure;
      failure.shift = shift;
      failure.arguments.resize(len);
      decode_tuple(*hit, m, failure.arguments);
      std::vector<Element> buf(len);
      failure.left = outer(failure.arguments, 0, buf);
      failure.right = outer(failure.arguments, shift, buf);
      report.associativity_failures.push_back(std::move(failure));
    }
  }

  const auto others = checked_pow(m, n - 1);
  report.solvability_instances = others * n;
  for (unsigned position = 0; position < n; ++position) {
    std::optional<SolvabilityFailure> failure;
    std::vector<Element> args(n);
    std::vector<Element> rest(n - 1);
    std::vector<char> hit(m);
    for (std::uint64_t i = 0; i < others && !failure; ++i) {
      decode_tuple(i, m, rest);
      for (unsigned k = 0, r = 0; k < n; ++k) args[k] = k == position ? 0 : rest[r++];
      std::fill(hit.begin(), hit.end(), 0);
      for (Element z = 0; z < m; ++z) {
        args[position] = z;
        const auto v = g.eval_raw(args.data());
        if (hit[v]) {
          args[position] = 0;
          failure = SolvabilityFailure{position, args, v};
          break;
        }
        hit[v] = 1;
      }
    }
    if (failure) report.solvability_failures.push_back(std::move(*failure));
  }
  return report;
}

NaryGroup verified(const NaryGroup& g, const Limits& limits) {
  if (g.verified()) return g;
  const auto report = verify_nary_axioms(g, limits);
  if (!report.associativity_failures.empty()) {
    const auto& f = report.associativity_failures.front();
    auto w = as_witness(f.arguments);
    w.insert(w.begin(), f.shift);
    throw Error(Errc::not_nary_group, "not-associative", std::move(w));
  }
  if (!report.solvability_failures.empty()) {
    const auto& f = report.solvability_failures.front();
    auto w = as_witness(f.arguments);
    w.insert(w.begin(), f.position);
    w.push_back(f.value);
    throw Error(Errc::not_nary_group, "not-solvable", std::move(w));
  }
  auto impl = std::make_shared<NaryGroup::Impl>(*g.impl_);
  impl->verified = true;
  return NaryGroup(std::move(impl));
}

SkewTable skew_table(const NaryGroup& g) {
  if (!g.verified()) throw Error(Errc::not_verified, "skew");
  const unsigned n = g.arity();
  const auto m = g.size();
  SkewTable result;
  result.skew.resize(m);
  std::vector<Element> args(n);
  for (Element x = 0; x < m; ++x) {
    std::optional<Element> found;
    for (Element z = 0; z < m; ++z) {
      args[0] = z;
      std::fill(args.begin() + 1, args.end(), x);
      if (g.eval_raw(args.data()) != x) continue;
      if (found) throw Error(Errc::skew_not_unique, "left", {x, *found, z});
      found = z;
    }
    if (!found) throw Error(Errc::skew_no_solution, "left", {x});
    result.skew[x] = *found;
    std::fill(args.begin(), args.end() - 1, x);
    args.back() = *found;
    if (g.eval_raw(args.data()) != x) result.placement_mismatches.push_back(x);
  }
  return result;
}

std::vector<Element> idempotents(const NaryGroup& g) {
  std::vector<Element> result;
  std::vector<Element> args(g.arity());
  for (Element u = 0; u < g.size(); ++u) {
    std::fill(args.begin(), args.end(), u);
    if (g.eval_raw(args.data()) == u) result.push_back(u);
  }
  return result;
}

HomomorphismCheck is_nary_homomorphism(const NaryGroup& g, const NaryGroup& h, std::span<const Element> map) {
  if (g.arity() != h.arity()) throw Error(Errc::arity_mismatch, "arity", {g.arity(), h.arity()});
  if (map.size() != g.size()) throw Error(Errc::invalid_argument, "map-size", {static_cast<std::int64_t>(map.size())});
  for (auto v : map)
    if (v >= h.size()) throw Error(Errc::invalid_argument, "bad-index", {v});
  const unsigned n = g.arity();
  auto hit = scan_tuples(n, g.size(), g.tuple_count(), [&](const std::vector<Element>& x, std::vector<Element>& img) {
    for (unsigned k = 0; k < n; ++k) img[k] = map[x[k]];
    return map[g.eval_raw(x.data())] == h.eval_raw(img.data());
  });
  HomomorphismCheck result;
  if (hit) {
    result.holds = false;
    result.witness.resize(n);
    decode_tuple(*hit, g.size(), result.witness);
  }
  return result;
}

std::optional<std::vector<Element>> first_difference(const NaryGroup& a, const NaryGroup& b) {
  if (a.arity() != b.arity()) throw Error(Errc::arity_mismatch, "arity", {a.arity(), b.arity()});
  if (a.size() != b.size())
    throw Error(Errc::invalid_argument, "size", {static_cast<std::int64_t>(a.size()), static_cast<std::int64_t>(b.size())});
  auto hit = scan_tuples(a.arity(), a.size(), a.tuple_count(), [&](const std::vector<Element>& x, std::vector<Element>&) {
    return a.eval_raw(x.data()) == b.eval_raw(x.data());
  });
  if (!hit) return std::nullopt;
  std::vector<Element> tuple(a.arity());
  decode_tuple(*hit, a.size(), tuple);
  return tuple;
}

NaryGroup materialize(const NaryGroup& g, const Limits& limits) {
  const auto count = g.tuple_count();
  if (count > limits.table_max)
    throw Error(Errc::budget_exceeded, "table-size", {static_cast<std::int64_t>(count), static_cast<std::int64_t>(limits.table_max)});
  std::vector<Element> values(count);
  Odometer odo(g.arity(), g.size(), 0);
  for (std::uint64_t i = 0; i < count; ++i, odo.next()) values[i] = g.eval_raw(odo.digits.data());
  auto impl = std::make_shared<NaryGroup::Impl>();
  impl->arity = g.arity();
  impl->size = g.size();
  impl->table = std::move(values);
  impl->verified = g.verified();
  impl->label = g.label();
  return NaryGroup(std::move(impl));
}

NaryGroup relabel(const NaryGroup& g, std::span<const Element> perm, const Limits& limits) {
  const auto m = g.size();
  if (perm.size() != m) throw Error(Errc::invalid_argument, "perm-size", {static_cast<std::int64_t>(perm.size())});
  std::vector<char> seen(m, 0);
  for (auto p : perm) {
    if (p >= m || seen[p]) throw Error(Errc::invalid_argument, "not-a-permutation", {p});
    seen[p] = 1;
  }
  const auto count = g.tuple_count();
  if (count > limits.table_max)
    throw Error(Errc::budget_exceeded, "table-size", {static_cast<std::int64_t>(count), static_cast<std::int64_t>(limits.table_max)});
  std::vector<Element> values(count);
  Odometer odo(g.arity(), m, 0);
  for (std::uint64_t i = 0; i < count; ++i, odo.next()) {
    std::uint64_t index = 0;
    for (auto x : odo.digits) index = index * m + perm[x];
    values[index] = perm[g.eval_raw(odo.digits.data())];
  }
  auto impl = std::make_shared<NaryGroup::Impl>();
  impl->arity = g.arity();
  impl->size = m;
  impl->table = std::move(values);
  impl->verified = g.verified();
  impl->label = g.label();
  return NaryGroup(std::move(impl));
}

}  // namespace polyad
