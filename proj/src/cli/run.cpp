#include "hhodge/cli/run.hpp"

#include "hhodge/cli/render.hpp"
#include "hhodge/cli/table_cache.hpp"
#include "hhodge/cli/verify.hpp"
#include "hhodge/errors.hpp"
#include "hhodge/hodge.hpp"
#include "hhodge/hurwitz.hpp"
#include "hhodge/wreath.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <sstream>

namespace hhodge::cli {

namespace {

struct Options {
  int genus = 0;
  int a = 1;
  int order = 4;
  std::string nu, mu, gamma, group = "1", level = "quick", cache_dir;
  bool disconnected = false, json = false, timings = false;
};

MonodromyVector parse_gamma(int a, const std::string& text) {
  const Partition p = Partition::parse(text);
  return MonodromyVector(a, std::vector<int>(p.parts().begin(), p.parts().end()));
}

void prime(const Options& o, int d) {
  if (!o.cache_dir.empty()) prime_from_cache(o.cache_dir, d);
}

void print_value(std::ostream& out, const Options& o, nlohmann::json fields, const Rational& value) {
  if (!o.json) {
    out << render_rational(value, Format::Plain) << '\n';
    return;
  }
  fields["value"] = rational_json(value);
  out << fields.dump() << '\n';
}

int do_hurwitz(const Options& o, std::ostream& out) {
  const Partition nu = Partition::parse(o.nu), mu = Partition::parse(o.mu);
  prime(o, nu.size());
  const Rational v = o.disconnected ? disconnected_double_hurwitz(o.genus, nu, mu) : connected_double_hurwitz(o.genus, nu, mu);
  print_value(out, o,
              {{"command", "hurwitz"}, {"genus", o.genus}, {"nu", nu.to_string()}, {"mu", mu.to_string()},
               {"connected", !o.disconnected}},
              v);
  return kExitOk;
}

int do_wreath(const Options& o, std::ostream& out) {
  const auto K = FiniteAbelianGroup::parse(o.group);
  const auto nu = K.normalize(WeightedPartition::parse(o.nu, K.factor_count()));
  const auto mu = K.normalize(WeightedPartition::parse(o.mu, K.factor_count()));
  prime(o, nu.size());
  const Rational v = wreath_double_hurwitz(o.genus, K, nu, mu, !o.disconnected);
  print_value(out, o,
              {{"command", "wreath"}, {"genus", o.genus}, {"group", K.to_string()}, {"nu", nu.to_string()},
               {"mu", mu.to_string()}, {"connected", !o.disconnected}},
              v);
  return kExitOk;
}

int do_integral(const Options& o, std::ostream& out) {
  IntegralQuery q{o.genus, o.a, parse_gamma(o.a, o.gamma), Partition::parse(o.mu), o.disconnected};
  prime(o, q.mu.size());
  const IntegralResult r = combined_integral_Za(q);
  if (!o.json) {
    out << render_rational(r.value, Format::Plain) << '\n';
    return kExitOk;
  }
  nlohmann::json j = {{"command", "integral"}, {"genus", o.genus},         {"a", o.a},
                      {"gamma", q.gamma.to_string()}, {"mu", q.mu.to_string()}, {"connected", !o.disconnected},
                      {"branch", to_string(r.branch)}, {"value", rational_json(r.value)}};
  out << j.dump() << '\n';
  return kExitOk;
}

int do_series(const Options& o, std::ostream& out) {
  const MonodromyVector gamma = parse_gamma(o.a, o.gamma);
  const BivariateSeries s = one_part_F_series(o.a, gamma, o.order);
  if (!o.json) {
    out << render_terms(s) << '\n';
    return kExitOk;
  }
  nlohmann::json j = {{"command", "series"}, {"a", o.a}, {"gamma", gamma.to_string()}, {"order", o.order},
                      {"terms", series_json(s)}};
  out << j.dump() << '\n';
  return kExitOk;
}

std::string seconds_text(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s << "s";
  return os.str();
}

int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const VerifyLevel level = o.level == "full" ? VerifyLevel::Full : VerifyLevel::Quick;
  std::optional<std::filesystem::path> dir;
  if (!o.cache_dir.empty()) dir = o.cache_dir;
  const VerifyReport report = verify_suite(level, dir);
  // cache notes depend on disk state, so they stay off stdout
  for (const auto& note : report.notes) err << "# " << note << '\n';
  if (o.json) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
      nlohmann::json j = {{"id", c.id},       {"name", c.name},     {"expected", c.expected},
                          {"got", c.got},     {"equal", c.equal},   {"passed", c.passed()}};
      if (o.timings) j["seconds"] = seconds_text(c.seconds);
      checks.push_back(std::move(j));
    }
    out << nlohmann::json{{"level", o.level}, {"passed", report.all_passed()}, {"checks", checks}}
               .dump()
        << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << (c.passed() ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << ": expected " << c.expected
          << ", got " << c.got;
      if (o.timings) out << " (" << seconds_text(c.seconds) << ", limit " << seconds_text(c.limit_seconds) << ")";
      else if (c.equal && !c.passed()) out << " (over time limit)";
      out << '\n';
    }
    out << (report.all_passed() ? "all checks passed" : "some checks FAILED") << '\n';
  }
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact double Hurwitz numbers and Hurwitz-Hodge integrals", "hhodge"};
  app.require_subcommand(1);

  auto* hurwitz = app.add_subcommand("hurwitz", "double Hurwitz number H_g(nu, mu)");
  hurwitz->add_option("--genus", o.genus, "genus (may be negative with --disconnected)")->required();
  hurwitz->add_option("--nu", o.nu, "partition, e.g. 3,1")->required();
  hurwitz->add_option("--mu", o.mu, "partition")->required();
  hurwitz->add_flag("--disconnected", o.disconnected);
  hurwitz->add_flag("--json", o.json);
  hurwitz->add_option("--cache-dir", o.cache_dir, "character-table cache directory");

  auto* wreath = app.add_subcommand("wreath", "wreath-product Hurwitz number H_{g,K}(nu, mu)");
  wreath->add_option("--genus", o.genus)->required();
  wreath->add_option("--group", o.group, "K as cyclic orders, e.g. 2 or 2x2")->required();
  wreath->add_option("--nu", o.nu, "weighted partition, e.g. 2:1,1:0")->required();
  wreath->add_option("--mu", o.mu, "weighted partition")->required();
  wreath->add_flag("--disconnected", o.disconnected);
  wreath->add_flag("--json", o.json);
  wreath->add_option("--cache-dir", o.cache_dir);

  auto* integral = app.add_subcommand("integral", "linear Hurwitz-Hodge integral over Z_a covers");
  integral->add_option("--genus", o.genus)->required();
  integral->add_option("--a", o.a, "modulus")->required();
  integral->add_option("--gamma", o.gamma, "nontrivial monodromies, e.g. 1,1");
  integral->add_option("--mu", o.mu, "psi weights")->required();
  integral->add_flag("--disconnected", o.disconnected);
  integral->add_flag("--json", o.json);
  integral->add_option("--cache-dir", o.cache_dir);

  auto* series = app.add_subcommand("series", "one-part generating series F_gamma(t, z)");
  series->add_option("--a", o.a)->required();
  series->add_option("--gamma", o.gamma);
  series->add_option("--order", o.order, "highest power of t (even)");
  series->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify", "run the built-in checks");
  verify->add_option("level", o.level)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--cache-dir", o.cache_dir);
  verify->add_flag("--json", o.json);
  verify->add_flag("--timings", o.timings, "report run times");

  // CLI11 consumes arguments back to front.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitInvalid;
  }

  try {
    if (hurwitz->parsed()) return do_hurwitz(o, out);
    if (wreath->parsed()) return do_wreath(o, out);
    if (integral->parsed()) return do_integral(o, out);
    if (series->parsed()) return do_series(o, out);
    return do_verify(o, out, err);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const NotComputable& e) {
    err << "not computable: " << e.what() << '\n';
    return kExitNotComputable;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ConditionViolation& e) {
    err << "condition fails: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace hhodge::cli
