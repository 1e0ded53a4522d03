#include "app.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "CLI11.hpp"
#include "pfcycles/completions.hpp"
#include "pfcycles/distributions.hpp"
#include "pfcycles/errors.hpp"
#include "pfcycles/moments.hpp"
#include "pfcycles/parking.hpp"
#include "pfcycles/stein.hpp"
#include "pfcycles/structure.hpp"
#include "reports.hpp"

namespace pfcycles::app {

namespace {

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string error_object(const std::string& type, const std::string& message) {
  return dump(Json{{"error", Json{{"type", type}, {"message", message}}}});
}

// Shortest round-trip decimal form of a double.
std::string real_string(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return ec == std::errc{} ? std::string(buf, end) : std::to_string(x);
}

int need_n(const RunConfig& c) {
  if (!c.n) throw UsageError("--n is required");
  return *c.n;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw UsageError("malformed integer list '" + text + "'");
    }
    out.push_back(value);
  }
  return out;
}

PrefSeq parse_seq(const RunConfig& c) {
  if (!c.seq) throw UsageError("a sequence argument is required, e.g. 1,1,2");
  try {
    return PrefSeq::parse(*c.seq);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SamplingPlan plan_of(const RunConfig& c) {
  return SamplingPlan{c.samples.value_or(0), c.seed.value_or(0), c.workers};
}

Format format_of(const RunConfig& c, Format fallback) { return c.format.value_or(fallback); }

std::string run_count(const RunConfig& c) {
  const int n = need_n(c);
  return dump(Json(CountReport{n, count_parking_functions(n)}));
}

std::string run_enumerate(const RunConfig& c) {
  const int n = need_n(c);
  const Format format = format_of(c, Format::text);
  std::string out;
  Json seqs = Json::array();
  if (format == Format::csv) out += "pi\n";
  std::uint64_t count = 0;
  for_each_parking_function(
      n,
      [&](std::span<const int> seq) {
        ++count;
        if (format == Format::json) {
          seqs.push_back(format_sequence(seq));
        } else if (format == Format::csv) {
          out += '"' + format_sequence(seq) + "\"\n";
        } else {
          out += format_sequence(seq) + '\n';
        }
      },
      c.force);
  if (format == Format::json) {
    return dump(Json{{"n", n}, {"count", std::to_string(count)}, {"sequences", std::move(seqs)}});
  }
  return out;
}

std::string run_check(const RunConfig& c) {
  const PrefSeq seq = parse_seq(c);
  return dump(Json(CheckReport{seq.to_string(), seq.n(), is_parking_function(seq)}));
}

std::string run_completions(const RunConfig& c) {
  const int n = need_n(c);
  const std::vector<int> v = parse_int_list(c.v.value_or(""));
  OccupiedVector occ = [&] {
    try {
      return OccupiedVector(n, v);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const std::string method = c.method.empty() ? "formula" : c.method;
  BigInt count;
  if (method == "formula") {
    count = completions_count(occ);
  } else if (method == "lattice") {
    count = completions_count_by_lattice(occ);
  } else if (method == "block") {
    if (v.empty()) throw UsageError("--method block needs a non-empty contiguous --v");
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] != v[i - 1] + 1) throw UsageError("--method block needs a contiguous --v");
    }
    count = completions_count_block(n, v.front() - 1, static_cast<int>(v.size()));
  } else if (method == "brute") {
    count = completions_count_bruteforce(occ, c.force, c.workers);
  } else {
    throw UsageError("unknown completions method '" + method + "'");
  }
  return dump(Json(CompletionsReport{n, v, method, count}));
}

std::string run_profile(const RunConfig& c) {
  return dump(Json(make_profile_report(cycle_profile(parse_seq(c)))));
}

std::string run_sample(const RunConfig& c) {
  const int n = need_n(c);
  const SamplingPlan plan = plan_of(c);
  std::vector<std::vector<std::string>> parts(plan.workers);
  run_shards(plan.workers, [&](unsigned shard) {
    const ShardRange range = shard_range(plan.samples, shard, plan.workers);
    Rng rng = make_stream(plan.seed, shard);
    UniformSampler sampler(n);
    for (std::uint64_t i = range.begin; i < range.end; ++i) parts[shard].push_back(format_sequence(sampler.draw(rng)));
  });
  const Format format = format_of(c, Format::json);
  if (format == Format::json) {
    Json list = Json::array();
    for (auto& p : parts) {
      for (auto& s : p) list.push_back(std::move(s));
    }
    return dump(Json{{"n", n}, {"seed", plan.seed}, {"workers", plan.workers}, {"samples", std::move(list)}});
  }
  std::string out = format == Format::csv ? "pi\n" : "";
  for (auto& p : parts) {
    for (auto& s : p) out += (format == Format::csv ? '"' + s + '"' : s) + '\n';
  }
  return out;
}

struct MomentRow {
  std::string k;
  std::string method;
  std::string value;
  std::string std_error;
};

std::string run_moments(const RunConfig& c) {
  const int n = need_n(c);
  if (c.k && (*c.k < 1 || *c.k > n)) throw UsageError("--k must lie in [1, n]");
  const std::string method = c.method.empty() ? "formula" : c.method;
  std::vector<MomentRow> rows;
  if (method == "formula") {
    const int k_lo = c.k.value_or(1);
    const int k_hi = c.k.value_or(n);
    for (int k = k_lo; k <= k_hi; ++k) {
      ExactRational value;
      if (k == 1) {
        value = expected_fixed_points(n);
      } else if (k == 2) {
        value = expected_transpositions(n);
      } else {
        value = expected_k_cycles_exact(n, k, c.force);
      }
      rows.push_back({std::to_string(k), method, to_string(value), "0"});
    }
  } else if (method == "enum") {
    const EnumeratedMoments m = enumerated_cycle_means(n, c.force, c.workers);
    const int k_lo = c.k.value_or(1);
    const int k_hi = c.k.value_or(n);
    for (int k = k_lo; k <= k_hi; ++k) rows.push_back({std::to_string(k), method, to_string(m.mean_counts[k - 1]), "0"});
    if (!c.k) {
      rows.push_back({"total", method, to_string(m.mean_total), "0"});
      rows.push_back({"total", "harmonic", to_string(harmonic_number(n)), "0"});
    }
  } else if (method == "mc") {
    const SamplingPlan plan = plan_of(c);
    const int k_max = c.k.value_or(std::min(n, 10));
    for (const auto& e : expected_k_cycles_mc(n, k_max, plan)) {
      rows.push_back({std::to_string(e.k), method, real_string(e.mean), real_string(e.std_error)});
    }
    for (int k = 1; k <= k_max; ++k) {
      rows.push_back({std::to_string(k), "reference", real_string(k_cycle_reference(n, k).get_d()), "0"});
    }
    const TotalCyclesStats total = total_cycles_stats(n, plan);
    rows.push_back({"total", method, real_string(total.mean), real_string(total.std_error)});
    rows.push_back({"total", "harmonic", real_string(total.harmonic.get_d()), "0"});
  } else {
    throw UsageError("unknown moments method '" + method + "'");
  }

  if (format_of(c, Format::csv) == Format::json) {
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back(Json{{"n", n}, {"k", r.k}, {"method", r.method}, {"value", r.value}, {"stderr", r.std_error}});
    }
    return dump(Json{{"rows", std::move(list)}});
  }
  std::string out = "n,k,method,value,stderr\n";
  for (const auto& r : rows) {
    out += std::to_string(n) + ',' + r.k + ',' + r.method + ',' + r.value + ',' + r.std_error + '\n';
  }
  return out;
}

std::string run_stein(const RunConfig& c) {
  SteinOptions options;
  options.n = need_n(c);
  options.d = *c.d;
  options.exact = c.exact;
  options.plan = plan_of(c);
  options.force = c.force;
  options.workers = c.workers;
  if (c.c_b_divisor) {
    try {
      options.coefficients.b_divisor = parse_rational(*c.c_b_divisor);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return dump(Json(stein_terms(options)));
}

std::string run_tv(const RunConfig& c) {
  const int n = need_n(c);
  const int d = *c.d;
  const JointDistribution dist = c.exact ? exact_joint_distribution(n, d, c.force, c.workers)
                                         : empirical_joint_distribution(n, d, plan_of(c));
  if (format_of(c, Format::json) == Format::csv) return to_csv(dist);
  TvReport r;
  r.n = n;
  r.d = d;
  r.tv = tv_distance_to_poisson(dist);
  r.bound = tv_upper_bound(n, d);
  r.method = c.exact ? "exact" : "mc";
  r.support_size = dist.support().size();
  if (!c.exact) {
    r.samples = dist.sample_count();
    r.seed = c.seed;
    r.workers = c.workers;
  }
  return dump(Json(r));
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.workers == 0) throw UsageError("--workers must be positive");
  if (c.n && *c.n < 1) throw UsageError("--n must be at least 1");
  if (c.samples && !c.seed) throw UsageError("--seed (or PFCYCLES_SEED) is required with --samples");
  const bool sampling = c.command == Command::sample ||
                        (c.command == Command::moments && c.method == "mc") ||
                        ((c.command == Command::stein || c.command == Command::tv) && !c.exact);
  if (sampling && (!c.samples || *c.samples == 0)) throw UsageError("--samples is required and must be positive");
  if (c.command == Command::stein || c.command == Command::tv) {
    if (!c.d) throw UsageError("--d is required");
    if (!c.n) throw UsageError("--n is required");
    if (*c.d < 1 || *c.d >= *c.n) throw UsageError("--d must satisfy 1 <= d < n");
    if (c.exact && c.samples) throw UsageError("--exact and --samples are mutually exclusive");
  }
  if (c.format == Format::text && c.command != Command::enumerate && c.command != Command::sample) {
    throw UsageError("--format text is only available for enumerate and sample");
  }
}

RunResult run(const RunConfig& config) {
  try {
    validate(config);
    std::string out;
    switch (config.command) {
      case Command::count: out = run_count(config); break;
      case Command::enumerate: out = run_enumerate(config); break;
      case Command::check: out = run_check(config); break;
      case Command::completions: out = run_completions(config); break;
      case Command::profile: out = run_profile(config); break;
      case Command::sample: out = run_sample(config); break;
      case Command::moments: out = run_moments(config); break;
      case Command::stein: out = run_stein(config); break;
      case Command::tv: out = run_tv(config); break;
    }
    return {exit_code::ok, std::move(out)};
  } catch (const UsageError& e) {
    return {exit_code::usage, error_object("usage", e.what())};
  } catch (const GuardError& e) {
    return {exit_code::guard, error_object("guard", e.what())};
  } catch (const ConsistencyError& e) {
    return {exit_code::consistency, error_object("consistency", e.what())};
  } catch (const std::invalid_argument& e) {
    return {exit_code::usage, error_object("usage", e.what())};
  } catch (const std::exception& e) {
    return {exit_code::failure, error_object("failure", e.what())};
  }
}

RunResult run_command_line(const std::vector<std::string>& args, std::optional<std::uint64_t> env_seed) {
  CLI::App cli{"Cycle structure of uniformly random parking functions", "pfcycles"};
  cli.require_subcommand(1);

  RunConfig config;
  std::string format;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  int n = 0, d = 0, k = 0;
  std::string v, seq, c_b;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", config.out_path, "Write output to this file instead of stdout");
  };
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", n, "Size n")->required(); };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", samples, "Number of Monte Carlo samples");
    sub->add_option("--seed", seed, "Seed; defaults to PFCYCLES_SEED");
    sub->add_option("--workers", config.workers, "Deterministic shard count")->capture_default_str();
  };

  auto* count = cli.add_subcommand("count", "Number of parking functions, (n+1)^(n-1)");
  add_n(count);
  add_common(count);

  auto* enumerate = cli.add_subcommand("enumerate", "List PF_n, one sequence per line");
  add_n(enumerate);
  enumerate->add_flag("--force", config.force, "Lift the n <= 8 guard");
  add_common(enumerate);

  auto* check = cli.add_subcommand("check", "Test whether a sequence is a parking function");
  check->add_option("seq", seq, "Comma-separated preferences")->required();
  add_common(check);

  auto* completions = cli.add_subcommand("completions", "Count parking completions");
  add_n(completions);
  completions->add_option("--v", v, "Occupied spots, comma-separated and increasing");
  completions->add_option("--method", config.method, "formula|lattice|block|brute")
      ->check(CLI::IsMember({"formula", "lattice", "block", "brute"}));
  completions->add_flag("--force", config.force, "Lift the n <= 7 brute-force guard");
  completions->add_option("--workers", config.workers, "Shards for the brute-force count");
  add_common(completions);

  auto* profile = cli.add_subcommand("profile", "Cycle counts of a sequence's functional digraph");
  profile->add_option("seq", seq, "Comma-separated preferences")->required();
  add_common(profile);

  auto* sample = cli.add_subcommand("sample", "Draw uniform parking functions");
  add_n(sample);
  add_sampling(sample);
  add_common(sample);

  auto* moments = cli.add_subcommand("moments", "Expected cycle counts");
  add_n(moments);
  moments->add_option("--k", k, "Cycle length (mc: largest length reported)");
  moments->add_option("--method", config.method, "enum|formula|mc")->check(CLI::IsMember({"enum", "formula", "mc"}));
  moments->add_flag("--force", config.force, "Lift size guards");
  add_sampling(moments);
  add_common(moments);

  auto* stein = cli.add_subcommand("stein", "Exchangeable-pair Stein terms and bounds");
  add_n(stein);
  stein->add_option("--d", d, "Number of cycle counts")->required();
  stein->add_flag("--exact", config.exact, "Enumerate PF_n instead of sampling");
  stein->add_option("--c-b-divisor", c_b, "c_k^B = n / (divisor k); default 3");
  stein->add_flag("--force", config.force, "Lift the n <= 7 exact guard");
  add_sampling(stein);
  add_common(stein);

  auto* tv = cli.add_subcommand("tv", "Total variation distance to the product-Poisson law");
  add_n(tv);
  tv->add_option("--d", d, "Number of cycle counts")->required();
  tv->add_flag("--exact", config.exact, "Enumerate PF_n instead of sampling");
  tv->add_flag("--force", config.force, "Lift the n <= 8 exact guard");
  add_sampling(tv);
  add_common(tv);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    cli.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {exit_code::ok, cli.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {exit_code::ok, cli.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    return {exit_code::usage, error_object("usage", e.what())};
  }

  const std::pair<CLI::App*, Command> table[] = {
      {count, Command::count},       {enumerate, Command::enumerate}, {check, Command::check},
      {completions, Command::completions}, {profile, Command::profile}, {sample, Command::sample},
      {moments, Command::moments},   {stein, Command::stein},         {tv, Command::tv}};
  CLI::App* chosen = cli.get_subcommands().front();
  auto given = [&](const std::string& name) {
    const CLI::Option* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  for (const auto& [sub, command] : table) {
    if (sub == chosen) config.command = command;
  }

  if (given("--n")) config.n = n;
  if (chosen == stein || chosen == tv) config.d = d;
  if (chosen == moments && given("--k")) config.k = k;
  if (chosen == completions) config.v = v;
  if (chosen == check || chosen == profile) config.seq = seq;
  if (!c_b.empty()) config.c_b_divisor = c_b;
  if (!format.empty()) {
    config.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  }
  const bool has_sampling = chosen == sample || chosen == moments || chosen == stein || chosen == tv;
  if (has_sampling) {
    if (given("--samples")) config.samples = samples;
    if (given("--seed")) {
      config.seed = seed;
    } else if (env_seed) {
      config.seed = env_seed;
    }
  }
  return run(config);
}

}  // namespace pfcycles::app
