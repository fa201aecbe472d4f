#include "obtuse/cli.hpp"

#include <array>
#include <cmath>
#include <map>

#include "CLI11.hpp"
#include "obtuse/errors.hpp"
#include "obtuse/geometry.hpp"
#include "obtuse/jacobsthal.hpp"
#include "obtuse/record.hpp"

namespace obtuse::cli {

namespace {

using json = nlohmann::ordered_json;

std::string rational_string(const search::Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string u128_string(unsigned __int128 v) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  } while (v > 0);
  return s;
}

// Consecutive bad indices folded into half-open [lo, hi) ranges.
json compress_ranges(const std::vector<std::uint64_t>& indices) {
  json out = json::array();
  for (std::size_t i = 0; i < indices.size();) {
    std::size_t k = i;
    while (k + 1 < indices.size() && indices[k + 1] == indices[k] + 1) ++k;
    out.push_back({indices[i], indices[k] + 1});
    i = k + 1;
  }
  return out;
}

class Summary {
 public:
  void add(const EnumeratedTriple& e) {
    ++total_;
    (e.verdict.satisfied ? satisfied_ : unsatisfied_) += 1;
    if (e.oracle_agrees && !*e.oracle_agrees) ++oracle_disagreements_;
    if (e.hints_agree && !*e.hints_agree) ++hint_disagreements_;
    const auto labels = e.families.labels();
    if (labels.empty()) {
      auto& g = per_family_["generic"];
      (e.verdict.satisfied ? g[0] : g[1]) += 1;
    }
    for (Family f : labels) {
      auto& g = per_family_[std::string(to_string(f))];
      (e.verdict.satisfied ? g[0] : g[1]) += 1;
    }
  }

  json to_json() const {
    json j;
    j["records"] = total_;
    j["satisfied"] = satisfied_;
    j["unsatisfied"] = unsatisfied_;
    json fams;
    for (const auto& [name, counts] : per_family_) fams[name] = {{"satisfied", counts[0]}, {"unsatisfied", counts[1]}};
    j["families"] = fams;
    j["oracle_disagreements"] = oracle_disagreements_;
    j["hint_disagreements"] = hint_disagreements_;
    return j;
  }

  std::uint64_t oracle_disagreements() const { return oracle_disagreements_; }
  std::uint64_t hint_disagreements() const { return hint_disagreements_; }

 private:
  std::uint64_t total_ = 0, satisfied_ = 0, unsatisfied_ = 0;
  std::uint64_t oracle_disagreements_ = 0, hint_disagreements_ = 0;
  std::map<std::string, std::array<std::uint64_t, 2>> per_family_;
};

std::string_view to_string(HintMode h) {
  switch (h) {
    case HintMode::off: return "off";
    case HintMode::on: return "on";
    case HintMode::validate: return "validate";
  }
  return "?";
}

int verify_beta(const VerifyConfig& cfg, std::ostream& out) {
  const auto exceptions = search::beta_search(4, cfg.beta_max, cfg.workers);
  const auto& published = search::published_beta_exceptions();
  json list = json::array();
  std::vector<std::uint64_t> found, extra, missing;
  bool all_fallback = true;
  for (const auto& e : exceptions) {
    found.push_back(e.beta);
    all_fallback = all_fallback && e.fallback_ok;
    list.push_back({{"beta", e.beta},
                    {"fallback_ok", e.fallback_ok},
                    {"single_window_ok", e.single_window_ok},
                    {"upward_allowance", rational_string(e.upward_allowance)},
                    {"downward_allowance", rational_string(e.downward_allowance)}});
  }
  for (auto b : found) {
    if (std::find(published.begin(), published.end(), b) == published.end()) extra.push_back(b);
  }
  for (auto b : published) {
    if (b <= cfg.beta_max && std::find(found.begin(), found.end(), b) == found.end()) missing.push_back(b);
  }
  json report;
  report["check"] = "beta";
  report["range"] = {4, cfg.beta_max};
  report["window"] = "[beta/9, 2beta/9], closed";
  report["exceptions"] = list;
  report["published_exceptions"] = published;
  report["not_in_published"] = extra;
  report["published_not_found"] = missing;
  report["all_fallback_ok"] = all_fallback;
  out << report.dump(2) << '\n';
  if (!all_fallback) return kUnexpected;
  return extra.empty() && missing.empty() ? kOk : kDiscrepancy;
}

int verify_coverage(const VerifyConfig& cfg, std::ostream& out) {
  std::vector<search::Regime> regimes;
  if (cfg.regime) {
    regimes.push_back(*cfg.regime);
  } else {
    regimes = {search::Regime::A, search::Regime::B};
  }
  json reports = json::array();
  bool discrepancy = false;
  for (search::Regime regime : regimes) {
    search::CoverageConfig c = search::default_config(regime);
    if (cfg.boundary) c.boundary = *cfg.boundary;
    c.counting = cfg.counting;
    const auto rep = search::coverage_check(c, cfg.workers);
    const auto& ranges = search::published_bad_ranges(regime);
    const auto outside = search::outside_ranges(rep.bad_indices, ranges);
    json pub = json::array();
    for (const auto& r : ranges) pub.push_back({r.lo, r.hi});
    json j;
    j["regime"] = std::string(search::to_string(regime));
    j["boundary"] = std::string(search::to_string(c.boundary));
    j["counting"] = std::string(search::to_string(c.counting));
    j["subintervals"] = rep.subinterval_count;
    j["prime_power_limit"] = rep.prime_power_limit;
    j["target"] = {rational_string(rep.target_lower), rational_string(rep.target_upper)};
    j["required_witnesses"] = search::kRequiredWitnesses;
    j["bad_count"] = rep.bad_indices.size();
    j["bad_ranges"] = compress_ranges(rep.bad_indices);
    j["published_bad_ranges"] = pub;
    j["outside_published"] = compress_ranges(outside);
    j["matches_published"] = outside.empty();
    discrepancy = discrepancy || !outside.empty();
    reports.push_back(j);
  }
  json report;
  report["check"] = "coverage";
  report["reports"] = reports;
  out << report.dump(2) << '\n';
  return discrepancy ? kDiscrepancy : kOk;
}

int verify_jacobsthal(const VerifyConfig& cfg, std::ostream& out) {
  const std::uint64_t limit = cfg.jacobsthal_limit;
  const auto table = jacobsthal_table(limit, cfg.workers);
  std::uint64_t kanold_fail = 0, robin_fail = 0, bound_fail = 0, prime_fail = 0, radical_fail = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    const unsigned w = omega(n);
    if (table[n] > (std::uint64_t{1} << w)) ++kanold_fail;
    if (n >= 3 && !robin_check(n)) ++robin_fail;
    if (bound_j(n) < table[n]) ++bound_fail;
    if (table[n] != table[radical(n)]) ++radical_fail;
    if (n <= 1000 && is_prime(n) && table[n] != 2) ++prime_fail;
  }
  const std::uint64_t ref_limit = std::min<std::uint64_t>(limit, 10'000);
  const auto ref = reference::jacobsthal_table(ref_limit);
  std::uint64_t ref_mismatch = 0;
  for (std::uint64_t n = 1; n <= ref_limit; ++n) ref_mismatch += ref[n] != table[n];

  json report;
  report["check"] = "jacobsthal";
  report["limit"] = limit;
  report["kanold_failures"] = kanold_fail;
  report["robin_failures"] = robin_fail;
  report["bound_j_failures"] = bound_fail;
  report["radical_mismatches"] = radical_fail;
  report["prime_value_failures"] = prime_fail;
  report["reference_limit"] = ref_limit;
  report["reference_mismatches"] = ref_mismatch;
  report["max_j"] = *std::max_element(table.begin() + 1, table.end());
  out << report.dump(2) << '\n';
  const bool ok = kanold_fail + robin_fail + bound_fail + radical_fail + prime_fail + ref_mismatch == 0;
  return ok ? kOk : kUnexpected;
}

int verify_reduction(std::ostream& out) {
  const auto rep = verify_reduction_chain();
  json steps = json::array();
  for (const auto& s : rep.steps) steps.push_back({{"step", s.description}, {"value", u128_string(s.value)}, {"ok", s.ok}});
  json report;
  report["check"] = "reduction";
  report["steps"] = steps;
  report["enumeration_threshold"] = rep.enumeration_threshold;
  report["sqrt_threshold"] = rep.sqrt_threshold;
  report["all_ok"] = rep.all_ok;
  out << report.dump(2) << '\n';
  return rep.all_ok ? kOk : kUnexpected;
}

int verify_geometry(const VerifyConfig& cfg, std::ostream& out) {
  const auto c12 = geometry::star_cylinders(12);
  const double ratio12 = geometry::moduli_ratio(12);
  const bool hooper_ok = std::abs(ratio12 - 3.0) < 1e-12 && std::abs(geometry::cylinder_ratio(c12) - 3.0) < 1e-12;
  std::uint64_t checked = 0, path_fail = 0, rational_fail = 0;
  double worst = 0;
  for (std::uint64_t n = 12; n <= cfg.geometry_n_max; n += 8) {
    ++checked;
    const double diff = std::abs(geometry::moduli_ratio(n) - geometry::cylinder_ratio(geometry::star_cylinders(n)));
    worst = std::max(worst, diff);
    if (!(diff < 1e-9)) ++path_fail;
    if (n > 12 && geometry::rational_cosine(geometry::doubled_interior_angle(n))) ++rational_fail;
    if (n > 12 && geometry::family3_verdict(n).status != Lattice::not_lattice) ++rational_fail;
  }
  json report;
  report["check"] = "geometry";
  report["n12_ratio"] = ratio12;
  report["n12_top"] = {{"height", c12.top.height}, {"circumference", c12.top.circumference}};
  report["n12_bottom"] = {{"height", c12.bottom.height}, {"circumference", c12.bottom.circumference}};
  report["n12_ratio_is_3"] = hooper_ok;
  report["n_checked"] = checked;
  report["n_max"] = cfg.geometry_n_max;
  report["max_path_difference"] = worst;
  report["path_failures"] = path_fail;
  report["rational_cosine_failures"] = rational_fail;
  out << report.dump(2) << '\n';
  return hooper_ok && path_fail == 0 && rational_fail == 0 ? kOk : kUnexpected;
}

}  // namespace

int cmd_check(std::uint64_t p, std::uint64_t q, std::uint64_t r, std::ostream& out, std::ostream& err) {
  std::optional<Triple> t;
  try {
    t = Triple::make(p, q, r);
  } catch (const DomainError& e) {
    err << "check: " << e.what() << '\n';
    return kUsage;
  }
  if (!region_at_least(region(*t), Region::obtuse)) {
    err << "check: triple is not obtuse (needs r > n/2)\n";
    return kUsage;
  }
  const Verdict v = mw_witness(*t);
  out << triple_record(*t, v, classify_family(*t), lattice_status(*t, v)).dump() << '\n';
  return v.satisfied ? kOk : kUnsatisfied;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n_max < 6) {
    err << "enumerate: --n-max must be at least 6\n";
    return kUsage;
  }
  if (config.workers < 1) {
    err << "enumerate: --workers must be at least 1\n";
    return kUsage;
  }
  EnumerateOptions opts;
  opts.n_max = config.n_max;
  opts.min_region = config.region;
  opts.unsatisfied_only = config.failures_only;
  opts.validate_oracle = config.validate_oracle;
  opts.hints = config.hints;
  opts.workers = config.workers;

  if (config.format == OutputFormat::jsonl) {
    json header;
    header["schema"] = std::string(kRecordSchema);
    header["version"] = kRecordSchemaVersion;
    header["n_max"] = config.n_max;
    header["region"] = std::string(to_string(config.region));
    header["failures_only"] = config.failures_only;
    header["validate_oracle"] = config.validate_oracle;
    header["hints"] = std::string(to_string(config.hints));
    out << header.dump() << '\n';
  } else if (config.format == OutputFormat::csv) {
    out << csv_header() << '\n';
  }

  Summary summary;
  enumerate(opts, [&](const EnumeratedTriple& e) {
    summary.add(e);
    if (config.format == OutputFormat::jsonl) {
      out << triple_record(e).dump() << '\n';
    } else if (config.format == OutputFormat::csv) {
      out << csv_row(triple_record(e)) << '\n';
    }
  });

  if (config.format == OutputFormat::jsonl) {
    out << json{{"summary", summary.to_json()}}.dump() << '\n';
  } else if (config.format == OutputFormat::summary) {
    out << summary.to_json().dump(2) << '\n';
  }
  if (summary.oracle_disagreements() > 0 || summary.hint_disagreements() > 0) {
    err << "enumerate: " << summary.oracle_disagreements() << " oracle and " << summary.hint_disagreements()
        << " hint disagreements\n";
    return kUnexpected;
  }
  return kOk;
}

int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err) {
  if (config.workers < 1) {
    err << "verify: --workers must be at least 1\n";
    return kUsage;
  }
  if (config.target == "beta") return verify_beta(config, out);
  if (config.target == "coverage") return verify_coverage(config, out);
  if (config.target == "jacobsthal") return verify_jacobsthal(config, out);
  if (config.target == "reduction") return verify_reduction(out);
  if (config.target == "geometry") return verify_geometry(config, out);
  err << "verify: unknown check '" << config.target << "'\n";
  return kUsage;
}

int cmd_counterexample(std::uint64_t p, std::uint64_t x, std::ostream& out, std::ostream& err) {
  std::optional<Counterexample> ce;
  try {
    ce = counterexample(p, x);
  } catch (const DomainError& e) {
    err << "counterexample: " << e.what() << '\n';
    return kUsage;
  }
  const Verdict v = mw_witness(ce->triple);
  json j;
  j["p"] = p;
  j["x"] = x;
  j["m"] = ce->m;
  j["c"] = ce->c;
  j["record"] = triple_record(ce->triple, v, classify_family(ce->triple), lattice_status(ce->triple, v));
  out << j.dump() << '\n';
  if (v.satisfied) {
    err << "counterexample: generated triple unexpectedly satisfies the criterion\n";
    return kUnexpected;
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mirzakhani-Wright criterion checks for rational obtuse triangles", "obtuse"};
  app.set_config("--config", "", "TOML/INI file mirroring the command-line flags");
  app.require_subcommand(1);

  std::uint64_t p = 0, q = 0, r = 0;
  auto* check = app.add_subcommand("check", "Evaluate one triple (p, q, r)");
  check->add_option("P", p)->required();
  check->add_option("Q", q)->required();
  check->add_option("R", r)->required();

  RunConfig run_cfg;
  std::string region_name = "strongly-obtuse", format_name = "jsonl";
  bool hints = false, hints_validate = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate triples with n <= N");
  enumerate_cmd->add_option("--n-max", run_cfg.n_max, "Largest n")->required();
  enumerate_cmd->add_option("--region", region_name, "obtuse | strongly-obtuse | very-obtuse")
      ->check(CLI::IsMember({"obtuse", "strongly-obtuse", "very-obtuse"}));
  enumerate_cmd->add_flag("--failures-only", run_cfg.failures_only, "Only triples without an MW witness");
  enumerate_cmd->add_option("--workers", run_cfg.workers, "OpenMP worker threads")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--format", format_name, "jsonl | csv | summary")
      ->check(CLI::IsMember({"jsonl", "csv", "summary"}));
  enumerate_cmd->add_flag("--validate-oracle", run_cfg.validate_oracle, "Cross-check with the eigenspace oracle");
  enumerate_cmd->add_flag("--hints", hints, "Try constructed witnesses before scanning");
  enumerate_cmd->add_flag("--hints-validate", hints_validate, "Run hinted and full scans and compare");

  VerifyConfig verify_cfg;
  std::string regime_name, boundary_name, counting_name = "distinct-bases";
  auto* verify = app.add_subcommand("verify", "Re-run one of the finite verification searches");
  verify->add_option("CHECK", verify_cfg.target, "beta | coverage | jacobsthal | reduction | geometry")
      ->required()
      ->check(CLI::IsMember({"beta", "coverage", "jacobsthal", "reduction", "geometry"}));
  verify->add_option("--regime", regime_name, "Coverage regime A or B (default: both)")->check(CLI::IsMember({"A", "B"}));
  verify->add_option("--boundary", boundary_name, "Target closure: open | closed")
      ->check(CLI::IsMember({"open", "closed"}));
  verify->add_option("--counting", counting_name, "Witness counting: distinct-bases | all-prime-powers")
      ->check(CLI::IsMember({"distinct-bases", "all-prime-powers"}));
  verify->add_option("--workers", verify_cfg.workers, "OpenMP worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--beta-max", verify_cfg.beta_max, "Upper end of the beta sweep")->check(CLI::Range(4, 10'000'000));
  verify->add_option("--limit", verify_cfg.jacobsthal_limit, "Jacobsthal sweep limit")
      ->check(CLI::Range(1, 10'000'000));
  verify->add_option("--n-max", verify_cfg.geometry_n_max, "Largest n for the geometry sweep")
      ->check(CLI::Range(12, 10'000'000));

  std::uint64_t ce_p = 0, ce_x = 0;
  auto* ce = app.add_subcommand("counterexample", "Build a large obtuse triple failing the criterion");
  ce->add_option("--p", ce_p, "Odd prime")->required();
  ce->add_option("--x", ce_x, "Positive integer parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(p, q, r, out, err);
    if (enumerate_cmd->parsed()) {
      run_cfg.region = *parse_region(region_name);
      run_cfg.format = format_name == "csv" ? OutputFormat::csv
                       : format_name == "summary" ? OutputFormat::summary
                                                  : OutputFormat::jsonl;
      run_cfg.hints = hints_validate ? HintMode::validate : hints ? HintMode::on : HintMode::off;
      return cmd_enumerate(run_cfg, out, err);
    }
    if (verify->parsed()) {
      if (!regime_name.empty()) verify_cfg.regime = search::parse_regime(regime_name);
      if (!boundary_name.empty()) verify_cfg.boundary = search::parse_boundary(boundary_name);
      verify_cfg.counting = *search::parse_counting(counting_name);
      return cmd_verify(verify_cfg, out, err);
    }
    if (ce->parsed()) return cmd_counterexample(ce_p, ce_x, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "unexpected failure: " << e.what() << '\n';
    return kUnexpected;
  }
  return kUsage;
}

}  // namespace obtuse::cli
