#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbithodge/hodge.hpp"
#include "orbithodge/invariants.hpp"

namespace orbithodge::cli {

struct PrimeCheck {
  std::uint32_t prime = 0;
  bool agrees = true;
  friend bool operator==(const PrimeCheck&, const PrimeCheck&) = default;
};

/// Everything one orbit or fibre command produced.
struct RunReport {
  std::string command;  // orbit | fibre
  std::vector<int> h0;
  std::vector<int> h;                 // fibre only
  std::optional<std::int64_t> lambda;  // fibre only
  std::string saturate_by = "max-ideal";
  bool diamond_requested = false;
  bool full_verify = false;

  std::uint32_t prime = 0;
  InvariantReport invariants;
  std::optional<HodgeDiamond> diamond;
  std::string diamond_mode;  // empty when no diamond
  std::optional<bool> diamond_symmetric;
  std::vector<PrimeCheck> prime_checks;
  std::map<std::string, double> timings_ms;

  std::string to_json() const;
  static RunReport from_json(const std::string& text);
  std::string to_text() const;
  // Same report with the timing fields cleared.
  RunReport without_timings() const;
};

bool same_results(const RunReport& a, const RunReport& b);

}  // namespace orbithodge::cli
