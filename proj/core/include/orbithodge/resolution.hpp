#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbithodge/graded.hpp"

namespace orbithodge {

/// steps[i][a] = number of generators of twist a in homological degree i.
struct BettiTable {
  std::vector<std::map<int, std::int64_t>> steps;

  std::vector<std::int64_t> ranks() const;
  // Staircase layout: row r lists beta_{i, i+r}.
  std::string to_text() const;
  std::string to_json() const;
};

/// F_0 <- F_1 <- ... ; maps[i] : F_{i+1} -> F_i. Not necessarily minimal;
/// betti holds the minimal Betti numbers.
struct FreeResolution {
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMap> maps;
  BettiTable betti;
  bool capped = false;

  int length() const { return static_cast<int>(maps.size()); }
};

// Schreyer resolution; cap defaults to the number of variables.
FreeResolution free_resolution(const PresentedModule& module, std::optional<int> cap = std::nullopt);

// Minimal generators of ker(phi), as a map into phi's source.
GradedMap syzygies(const GradedMap& phi);

// coker(F (x) Lambda^{p-1} G -> Lambda^p G) for module = coker(F -> G), plus
// base-ideal relations.
PresentedModule exterior_power(const PresentedModule& module, int p);

// Drops generators that are redundant and returns minimal relations.
PresentedModule minimal_presentation(const PresentedModule& module);

// Reduced Groebner basis of the relations after removing generators that
// equal combinations of others. Twists of the surviving generators in
// `generators`.
struct PrunedPresentation {
  GradedFreeModule generators;
  std::vector<Vec> basis;
};
PrunedPresentation groebner_prune(const PresentedModule& module);

}  // namespace orbithodge
