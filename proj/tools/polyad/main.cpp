#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "polyad/catalog.hpp"
#include "polyad/error.hpp"
#include "polyad/group_io.hpp"
#include "polyad/nary_aut.hpp"
#include "polyad/nary_io.hpp"
#include "polyad/post_cover.hpp"
#include "polyad/semidirect.hpp"
#include "polyad/verify.hpp"

namespace {

using nlohmann::json;
using namespace polyad;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

/// Writes through `write` to a file, or to stdout when path is empty or "-".
template <typename Write>
void emit(const std::string& path, Write&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::invalid_argument, "open", {}, path);
  write(out);
}

void emit_json(const std::string& path, const json& value) {
  emit(path, [&](std::ostream& out) { out << value.dump(2) << '\n'; });
}

GroupMap load_theta(const FiniteGroup& g, const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    return GroupMap(g, g, read_map_table(in), MapKind::automorphism);
  }
  return theta_preset(g, spec);
}

json group_summary(const FiniteGroup& g) {
  return {{"order", g.order()}, {"identity", g.identity()}};
}

void print_suggestions(const Preset& preset) {
  for (const auto& s : preset.suggestions)
    std::cerr << "suggested: theta=" << s.theta_name << " n=" << s.arity << '\n';
}

// gen ------------------------------------------------------------------------

struct GenOptions {
  std::string kind;
  std::vector<std::string> params;
  std::string output;
};

int run_gen(const GenOptions& o) {
  FiniteGroup g = cyclic_group(1);
  std::optional<Preset> preset;
  auto need = [&](std::size_t count) {
    if (o.params.size() != count)
      throw CLI::ValidationError("gen " + o.kind, "expects " + std::to_string(count) + " parameter(s)");
  };
  if (o.kind == "cyclic" || o.kind == "dihedral") {
    need(1);
    preset = catalog_preset(o.kind + ":" + o.params[0]);
  } else if (o.kind == "symmetric3") {
    need(0);
    preset = catalog_preset("symmetric3");
  } else if (o.kind == "direct") {
    if (o.params.size() < 2) throw CLI::ValidationError("gen direct", "expects at least two group specs");
    std::string spec = "direct:";
    for (std::size_t k = 0; k < o.params.size(); ++k) spec += (k ? "*" : "") + o.params[k];
    preset = catalog_preset(spec);
  } else if (o.kind == "semidirect") {
    need(3);
    const auto modulus = std::stoul(o.params[0]);
    const auto base = catalog_preset(o.params[1]).group;
    const auto theta = theta_preset(base, o.params[2]);
    g = semidirect_product(modulus, base, CyclicAction(modulus, theta)).group;
  } else {
    throw CLI::ValidationError("gen", "unknown kind '" + o.kind + "'");
  }
  if (preset) {
    g = preset->group;
    print_suggestions(*preset);
  }
  emit(o.output, [&](std::ostream& out) { write_group(out, g); });
  return exit_pass;
}

// derive ---------------------------------------------------------------------

struct DeriveOptions {
  std::string group_file;
  std::string theta;
  std::optional<long long> b;
  unsigned n = 0;
  std::string output;
};

int run_derive(const DeriveOptions& o) {
  const auto g = read_group_file(o.group_file);
  const auto theta = load_theta(g, o.theta);
  if (o.b && !g.contains(*o.b)) throw Error(Errc::invalid_argument, "bad-index", {*o.b});
  const Element b = o.b ? static_cast<Element>(*o.b) : g.identity();
  const auto nary = derive(g, theta, b, o.n);
  emit(o.output, [&](std::ostream& out) { write_nary(out, nary); });
  return exit_pass;
}

// cover ----------------------------------------------------------------------

struct CoverOptions {
  std::string nary_file;
  std::optional<long long> anchor;
  std::string output;
  std::string report;
};

int run_cover(const CoverOptions& o) {
  const auto g = read_nary_file(o.nary_file);
  Element anchor = g.derived_at_identity() ? g.derived().base.identity() : 0;
  if (o.anchor) {
    if (*o.anchor < 0 || static_cast<std::uint64_t>(*o.anchor) >= g.size())
      throw Error(Errc::invalid_argument, "bad-index", {*o.anchor});
    anchor = static_cast<Element>(*o.anchor);
  }
  const auto cover = post_cover(g, anchor);
  emit(o.output, [&](std::ostream& out) { write_group(out, cover.group(), cover.header_comments()); });

  const auto embedding = base_embedding_check(cover);
  const auto r = r_subgroup_report(cover);
  json report = {{"schema", report_schema},
                 {"arity", g.arity()},
                 {"size", g.size()},
                 {"anchor", anchor},
                 {"cover", group_summary(cover.group())},
                 {"base_embedding", {{"tuples_checked", embedding.tuples_checked}, {"passed", embedding.ok()}}},
                 {"r_subgroup",
                  {{"elements", r.r_elements},
                   {"is_subgroup", r.is_subgroup},
                   {"is_normal", r.is_normal},
                   {"quotient_order", r.quotient_order},
                   {"quotient_cyclic", r.quotient_cyclic},
                   {"base_is_coset", r.base_is_coset},
                   {"base_generates", r.base_generates},
                   {"passed", r.ok()}}}};
  if (embedding.failure) report["base_embedding"]["witness"] = *embedding.failure;
  if (r.normality_witness) report["r_subgroup"]["normality_witness"] = *r.normality_witness;
  const bool ok = embedding.ok() && r.ok();
  report["passed"] = ok;
  if (!o.report.empty()) emit_json(o.report, report);

  std::cerr << "cover: order " << cover.group().order() << ", anchor " << anchor << ", base embedding "
            << (embedding.ok() ? "ok" : "FAILED") << ", R normal with cyclic quotient "
            << (r.ok() ? "ok" : "FAILED") << '\n';
  return ok ? exit_pass : exit_fail;
}

// aut ------------------------------------------------------------------------

struct AutOptions {
  std::string nary_file;
  bool brute = false;
};

json automorphism_json(const NaryAutomorphism& a) {
  return {{"u", a.u()}, {"phi", a.phi().table()}, {"table", a.table()}};
}

int run_aut(const AutOptions& o) {
  const auto g = read_nary_file(o.nary_file);
  json list = json::array();
  if (o.brute) {
    for (auto& table : brute_force_nary_automorphisms(g)) {
      if (g.derived_at_identity())
        list.push_back(automorphism_json(NaryAutomorphism::factor(g, table)));
      else
        list.push_back({{"table", table}});
    }
  } else {
    for (const auto& a : nary_automorphisms(g)) list.push_back(automorphism_json(a));
  }
  emit_json("", {{"schema", report_schema},
                 {"method", o.brute ? "brute-force" : "structured"},
                 {"count", list.size()},
                 {"automorphisms", list}});
  std::cerr << "automorphisms: " << list.size() << '\n';
  return exit_pass;
}

// verify ---------------------------------------------------------------------

struct VerifyCliOptions {
  std::string nary_file;
  bool catalog_all = false;
  unsigned relabel_trials = 5;
  std::uint64_t seed = VerifyOptions{}.seed;
  bool timing = false;
  std::string inject_fault;
};

void print_summary(const VerificationReport& report, bool timing) {
  std::size_t skipped = 0;
  for (const auto& c : report.checks) skipped += c.skipped;
  std::cerr << (report.passed() ? "PASS " : "FAIL ") << (report.subject.empty() ? "input" : report.subject)
            << " (n=" << report.arity << ", m=" << report.size << ", " << report.checks.size() << " checks, "
            << skipped << " skipped)\n";
  for (const auto& c : report.checks) {
    std::cerr << "  " << (c.skipped ? "skip" : (c.passed ? "pass" : "FAIL")) << ' ' << c.name;
    if (timing && !c.skipped) std::cerr << " [" << c.elapsed_ms << " ms]";
    if (!c.passed && !c.detail.empty()) std::cerr << ": " << c.detail;
    if (!c.passed && c.data.contains("witness")) std::cerr << " witness " << c.data["witness"].dump();
    std::cerr << '\n';
  }
}

int run_verify(const VerifyCliOptions& o) {
  if (o.catalog_all == !o.nary_file.empty())
    throw CLI::ValidationError("verify", "give exactly one of <nary-file> or --catalog-all");
  if (!o.inject_fault.empty() && o.inject_fault != "cover")
    throw CLI::ValidationError("--inject-fault", "only 'cover' is supported");
  VerifyOptions options;
  options.relabel_trials = o.relabel_trials;
  options.seed = o.seed;
  options.corrupt_cover = o.inject_fault == "cover";

  std::vector<VerificationReport> reports;
  if (o.catalog_all) {
    for (const auto& entry : catalog_all()) reports.push_back(verify_nary(entry.nary(), options));
  } else {
    auto g = read_nary_file(o.nary_file);
    if (g.label().empty()) g = g.with_label(std::filesystem::path(o.nary_file).filename().string());
    reports.push_back(verify_nary(g, options));
  }

  bool passed = true;
  json out;
  for (const auto& r : reports) {
    passed = passed && r.passed();
    print_summary(r, o.timing);
  }
  if (o.catalog_all) {
    json list = json::array();
    for (const auto& r : reports) list.push_back(to_json(r, o.timing));
    out = {{"schema", report_schema}, {"passed", passed}, {"reports", list}};
  } else {
    out = to_json(reports.front(), o.timing);
  }
  emit_json("", out);
  return passed ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite polyadic groups: derived groups, Post covers, automorphisms and verification"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for parallel loops (0 = all cores)");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write the Cayley table of a preset group");
  gen_cmd->add_option("kind", gen.kind, "cyclic <m> | dihedral <k> | symmetric3 | direct <spec>... | "
                                        "semidirect <modulus> <spec> <theta>")
      ->required();
  gen_cmd->add_option("params", gen.params, "Parameters for the kind");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default: stdout)");

  DeriveOptions der;
  auto* derive_cmd = app.add_subcommand("derive", "Build der_{theta,b}(G) from a group file");
  derive_cmd->add_option("group", der.group_file, "Cayley table file")->required()->check(CLI::ExistingFile);
  derive_cmd->add_option("--theta", der.theta, "Map file or preset (id, neg, inv, mul<k>, inner:<u>)")
      ->required();
  derive_cmd->add_option("--b", der.b, "Index of b (default: identity)");
  derive_cmd->add_option("--n", der.n, "Arity")->required()->check(CLI::Range(2u, 64u));
  derive_cmd->add_option("-o,--output", der.output, "Output file (default: stdout)");

  CoverOptions cov;
  auto* cover_cmd = app.add_subcommand("cover", "Build the Post cover of an n-ary group");
  cover_cmd->add_option("nary", cov.nary_file, "N-ary group file")->required()->check(CLI::ExistingFile);
  cover_cmd->add_option("--anchor", cov.anchor, "Anchor element (default: base identity or 0)");
  cover_cmd->add_option("-o,--output", cov.output, "Cover table file (default: stdout)");
  cover_cmd->add_option("--report", cov.report, "Structure report JSON file ('-' for stdout)");

  AutOptions aut;
  auto* aut_cmd = app.add_subcommand("aut", "List the automorphisms of an n-ary group as JSON");
  aut_cmd->add_option("nary", aut.nary_file, "N-ary group file")->required()->check(CLI::ExistingFile);
  aut_cmd->add_flag("--brute", aut.brute, "Enumerate all carrier bijections instead");

  VerifyCliOptions ver;
  auto* verify_cmd = app.add_subcommand("verify", "Run every structural check and print a JSON report");
  verify_cmd->add_option("nary", ver.nary_file, "N-ary group file")->check(CLI::ExistingFile);
  verify_cmd->add_flag("--catalog-all", ver.catalog_all, "Verify the built-in catalog");
  verify_cmd->add_option("--relabel-trials", ver.relabel_trials, "Random relabelings for the decomposition check")
      ->capture_default_str();
  verify_cmd->add_option("--seed", ver.seed, "Seed for the relabelings")->capture_default_str();
  verify_cmd->add_flag("--timing", ver.timing, "Include timings in the report and summary");
  verify_cmd->add_option("--inject-fault", ver.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    set_thread_count(threads);
    if (*gen_cmd) return run_gen(gen);
    if (*derive_cmd) return run_derive(der);
    if (*cover_cmd) return run_cover(cov);
    if (*aut_cmd) return run_aut(aut);
    if (*verify_cmd) return run_verify(ver);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::invalid_argument || e.code() == Errc::parse_error ? exit_usage : exit_fail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
