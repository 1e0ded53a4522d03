#pragma once

// JSON forms of the command reports. Big integers and rationals travel as
// strings ("num/den", den omitted when 1); every report parses back into its
// record type.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pfcycles/stein.hpp"
#include "pfcycles/structure.hpp"

namespace pfcycles::app {

using Json = nlohmann::ordered_json;

struct CountReport {
  int n = 0;
  BigInt count;
};

struct CheckReport {
  std::string seq;
  int n = 0;
  bool is_parking_function = false;
};

struct CompletionsReport {
  int n = 0;
  std::vector<int> v;
  std::string method;
  BigInt count;
};

struct ProfileReport {
  int n = 0;
  std::map<int, int> counts;  // sparse k -> C_k
  int total = 0;
};

struct TvReport {
  int n = 0;
  int d = 0;
  double tv = 0;
  ExactRational bound;
  std::string method;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::size_t support_size = 0;
};

ProfileReport make_profile_report(const CycleProfile& profile);

void to_json(Json& j, const CountReport& r);
void from_json(const Json& j, CountReport& r);
void to_json(Json& j, const CheckReport& r);
void from_json(const Json& j, CheckReport& r);
void to_json(Json& j, const CompletionsReport& r);
void from_json(const Json& j, CompletionsReport& r);
void to_json(Json& j, const ProfileReport& r);
void from_json(const Json& j, ProfileReport& r);
void to_json(Json& j, const TvReport& r);
void from_json(const Json& j, TvReport& r);
}  // namespace pfcycles::app

namespace pfcycles {
// Declared alongside SteinReport's namespace so ADL finds them.
void to_json(app::Json& j, const SteinReport& r);
void from_json(const app::Json& j, SteinReport& r);
}  // namespace pfcycles
