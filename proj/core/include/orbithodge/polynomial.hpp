#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbithodge/ring.hpp"

namespace orbithodge {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial over a prime field. Terms are kept strictly descending in
/// the ring's order with no zero coefficients; the empty list is 0.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  // Normalizes: sorts, merges duplicates, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(const RingPtr& ring, std::int64_t value);
  static Polynomial variable(const RingPtr& ring, int index);
  static Polynomial variable(const RingPtr& ring, std::string_view name);
  static Polynomial monomial(const RingPtr& ring, const Monomial& m, Coeff c = 1);
  // Parses the canonical text form (also accepts spaces and repeated factors).
  static Polynomial parse(const RingPtr& ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& lead() const;
  const Monomial& lead_monomial() const { return lead().mono; }
  Coeff lead_coeff() const { return lead().coeff; }
  // Largest total degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;
  // True when the variable occurs in some term.
  bool involves(int var) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial scaled(Coeff c) const;
  Polynomial times_term(const Monomial& m, Coeff c) const;
  Polynomial pow(int e) const;
  Polynomial monic() const;

  // Substitutes field values for the given variables; they disappear from
  // every monomial.
  Polynomial specialize(const std::map<int, Coeff>& assignment) const;
  Polynomial specialize(const std::map<std::string, std::int64_t>& assignment) const;
  Polynomial derivative(int var) const;
  // t^deg(f) * f(x/t); throws UsageError if t already occurs.
  Polynomial homogenize(int var) const;
  // Ring homomorphism x_i -> images[i] into images' ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  // Same terms viewed in another ring with the same number of variables.
  Polynomial in_ring(const RingPtr& other) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();
  void check_same_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const Ring& ring, const Monomial& m);

}  // namespace orbithodge
