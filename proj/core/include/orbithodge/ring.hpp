#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbithodge/field.hpp"
#include "orbithodge/monomial.hpp"

namespace orbithodge {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring k[x_0..x_{n-1}] over a prime field with a term order.
class Ring {
 public:
  Ring(std::vector<std::string> variables, PrimeField field, TermOrder order,
       bool last_is_homogenizer = false);

  static RingPtr make(std::vector<std::string> variables, PrimeField field = PrimeField(),
                      TermOrder order = TermOrder::grevlex(), bool last_is_homogenizer = false);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::string& variable(int i) const { return vars_.at(static_cast<std::size_t>(i)); }
  // -1 when absent.
  int index_of(std::string_view name) const;
  const PrimeField& field() const { return field_; }
  const TermOrder& order() const { return order_; }
  // Index of the homogenizing variable (always the last one), if any.
  std::optional<int> homogenizer() const {
    if (!homogenizer_) return std::nullopt;
    return nvars() - 1;
  }

  RingPtr with_order(TermOrder order) const;
  RingPtr with_field(PrimeField field) const;
  // Appends fresh variables after the existing ones (drops the homogenizer tag).
  RingPtr extended(const std::vector<std::string>& extra, TermOrder order) const;

  Monomial one() const { return Monomial(nvars()); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ && a.field_ == b.field_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> vars_;
  PrimeField field_;
  TermOrder order_;
  bool homogenizer_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace orbithodge
