#include "orbithodge/ring.hpp"

#include <set>

namespace orbithodge {

Ring::Ring(std::vector<std::string> variables, PrimeField field, TermOrder order,
           bool last_is_homogenizer)
    : vars_(std::move(variables)), field_(field), order_(order), homogenizer_(last_is_homogenizer) {
  if (static_cast<int>(vars_.size()) > kMaxVars) {
    throw UsageError("rings support at most " + std::to_string(kMaxVars) + " variables");
  }
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw UsageError("empty variable name");
    if (!seen.insert(v).second) throw UsageError("duplicate variable name '" + v + "'");
  }
  if (homogenizer_ && vars_.empty()) throw UsageError("homogenizer requires a variable");
}

RingPtr Ring::make(std::vector<std::string> variables, PrimeField field, TermOrder order,
                   bool last_is_homogenizer) {
  return std::make_shared<const Ring>(std::move(variables), field, order, last_is_homogenizer);
}

int Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingPtr Ring::with_order(TermOrder order) const {
  return make(vars_, field_, order, homogenizer_);
}

RingPtr Ring::with_field(PrimeField field) const {
  return make(vars_, field, order_, homogenizer_);
}

RingPtr Ring::extended(const std::vector<std::string>& extra, TermOrder order) const {
  auto vars = vars_;
  vars.insert(vars.end(), extra.begin(), extra.end());
  return make(std::move(vars), field_, order, false);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace orbithodge
