#include "reports.hpp"

#include <algorithm>

namespace pfcycles::app {

namespace {

BigInt big_from(const Json& j) { return BigInt(j.get<std::string>()); }
ExactRational rational_from(const Json& j) { return parse_rational(j.get<std::string>()); }

}  // namespace

ProfileReport make_profile_report(const CycleProfile& profile) {
  ProfileReport r;
  r.n = profile.n;
  r.total = profile.total;
  for (int k = 1; k <= profile.n; ++k) {
    if (profile.count(k) != 0) r.counts[k] = profile.count(k);
  }
  return r;
}

void to_json(Json& j, const CountReport& r) { j = Json{{"n", r.n}, {"count", to_string(r.count)}}; }

void from_json(const Json& j, CountReport& r) {
  r.n = j.at("n").get<int>();
  r.count = big_from(j.at("count"));
}

void to_json(Json& j, const CheckReport& r) {
  j = Json{{"seq", r.seq}, {"n", r.n}, {"is_parking_function", r.is_parking_function}};
}

void from_json(const Json& j, CheckReport& r) {
  r.seq = j.at("seq").get<std::string>();
  r.n = j.at("n").get<int>();
  r.is_parking_function = j.at("is_parking_function").get<bool>();
}

void to_json(Json& j, const CompletionsReport& r) {
  j = Json{{"n", r.n}, {"v", r.v}, {"method", r.method}, {"count", to_string(r.count)}};
}

void from_json(const Json& j, CompletionsReport& r) {
  r.n = j.at("n").get<int>();
  r.v = j.at("v").get<std::vector<int>>();
  r.method = j.at("method").get<std::string>();
  r.count = big_from(j.at("count"));
}

void to_json(Json& j, const ProfileReport& r) {
  Json counts = Json::object();
  for (const auto& [k, c] : r.counts) counts[std::to_string(k)] = c;
  j = Json{{"n", r.n}, {"counts", counts}, {"total", r.total}};
}

void from_json(const Json& j, ProfileReport& r) {
  r.n = j.at("n").get<int>();
  r.counts.clear();
  for (const auto& [k, c] : j.at("counts").items()) r.counts[std::stoi(k)] = c.get<int>();
  r.total = j.at("total").get<int>();
}

void to_json(Json& j, const TvReport& r) {
  j = Json{{"n", r.n}, {"d", r.d}, {"tv", r.tv}, {"bound", to_string(r.bound)},
           {"bound_capped", std::min(1.0, r.bound.get_d())}, {"method", r.method},
           {"support_size", r.support_size}};
  if (r.samples) j["samples"] = *r.samples;
  if (r.seed) j["seed"] = *r.seed;
  if (r.workers) j["workers"] = *r.workers;
}

void from_json(const Json& j, TvReport& r) {
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.tv = j.at("tv").get<double>();
  r.bound = rational_from(j.at("bound"));
  r.method = j.at("method").get<std::string>();
  r.support_size = j.at("support_size").get<std::size_t>();
  r.samples = j.contains("samples") ? std::optional(j["samples"].get<std::uint64_t>()) : std::nullopt;
  r.seed = j.contains("seed") ? std::optional(j["seed"].get<std::uint64_t>()) : std::nullopt;
  r.workers = j.contains("workers") ? std::optional(j["workers"].get<unsigned>()) : std::nullopt;
}

}  // namespace pfcycles::app

namespace pfcycles {

using app::Json;

namespace {
ExactRational rational_field(const Json& j) { return parse_rational(j.get<std::string>()); }
}  // namespace

void to_json(Json& j, const SteinReport& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    Json e{{"k", t.k},
           {"lambda", to_string(t.lambda)},
           {"alpha", t.alpha},
           {"c_k_A", to_string(t.c_a)},
           {"c_k_B", to_string(t.c_b)},
           {"term_A", t.term_a},
           {"term_B", t.term_b},
           {"term_A_stderr", t.term_a_error},
           {"term_B_stderr", t.term_b_error}};
    if (t.term_a_exact) e["term_A_exact"] = to_string(*t.term_a_exact);
    if (t.term_b_exact) e["term_B_exact"] = to_string(*t.term_b_exact);
    e["bound_A"] = to_string(t.bound_a);
    e["bound_B"] = to_string(t.bound_b);
    terms.push_back(std::move(e));
  }
  j = Json{{"n", r.n},
           {"d", r.d},
           {"method", r.method},
           {"samples", r.samples}};
  if (r.seed) j["seed"] = *r.seed;
  j["workers"] = r.workers;
  j["c_A_divisor"] = to_string(r.coefficients.a_divisor);
  j["c_B_divisor"] = to_string(r.coefficients.b_divisor);
  j["terms"] = std::move(terms);
  j["total_bound"] = to_string(r.total_bound);
}

void from_json(const Json& j, SteinReport& r) {
  r.n = j.at("n").get<int>();
  r.d = j.at("d").get<int>();
  r.method = j.at("method").get<std::string>();
  r.samples = j.at("samples").get<std::uint64_t>();
  r.seed = j.contains("seed") ? std::optional(j["seed"].get<std::uint64_t>()) : std::nullopt;
  r.workers = j.at("workers").get<unsigned>();
  r.coefficients.a_divisor = rational_field(j.at("c_A_divisor"));
  r.coefficients.b_divisor = rational_field(j.at("c_B_divisor"));
  r.terms.clear();
  for (const auto& e : j.at("terms")) {
    SteinTermRecord t;
    t.k = e.at("k").get<int>();
    t.lambda = rational_field(e.at("lambda"));
    t.alpha = e.at("alpha").get<double>();
    t.c_a = rational_field(e.at("c_k_A"));
    t.c_b = rational_field(e.at("c_k_B"));
    t.term_a = e.at("term_A").get<double>();
    t.term_b = e.at("term_B").get<double>();
    t.term_a_error = e.at("term_A_stderr").get<double>();
    t.term_b_error = e.at("term_B_stderr").get<double>();
    if (e.contains("term_A_exact")) t.term_a_exact = rational_field(e["term_A_exact"]);
    if (e.contains("term_B_exact")) t.term_b_exact = rational_field(e["term_B_exact"]);
    t.bound_a = rational_field(e.at("bound_A"));
    t.bound_b = rational_field(e.at("bound_B"));
    r.terms.push_back(std::move(t));
  }
  r.total_bound = rational_field(j.at("total_bound"));
}

}  // namespace pfcycles
