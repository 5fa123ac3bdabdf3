#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "orbithodge/errors.hpp"

namespace orbithodge {

inline constexpr int kMaxVars = 24;
inline constexpr int kMaxDegree = (1 << 15) - 1;

/// Exponent vector with a cached total degree and support bitmask.
///
/// Exponents are 16-bit; any product whose total degree would exceed
/// 2^15 - 1 throws ComputationError instead of wrapping.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(std::initializer_list<int> exponents);
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int nvars, int index, int power = 1);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  std::uint32_t support() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  void set(int i, int e);
  std::vector<int> exponents() const;

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
    for (int i = 0; i < nvars_; ++i) {
      if (exp_[static_cast<std::size_t>(i)] > other.exp_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires divisor | *this.
  Monomial operator/(const Monomial& divisor) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_ || a.mask_ != b.mask_ || a.nvars_ != b.nvars_) return false;
    for (int i = 0; i < a.nvars_; ++i) {
      if (a.exp_[static_cast<std::size_t>(i)] != b.exp_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  }

  std::size_t hash() const;

 private:
  void refresh();

  std::array<std::int16_t, kMaxVars> exp_{};
  std::int32_t degree_ = 0;
  std::uint32_t mask_ = 0;
  std::uint8_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders. Elimination(k) is a block order: grevlex on the first k
/// variables, ties broken by grevlex on the rest.
class TermOrder {
 public:
  enum class Kind { Grevlex, Lex, Elimination };

  TermOrder() = default;
  static TermOrder grevlex() { return TermOrder(Kind::Grevlex, 0); }
  static TermOrder lex() { return TermOrder(Kind::Lex, 0); }
  static TermOrder elimination(int block);

  Kind kind() const { return kind_; }
  int block() const { return block_; }
  bool degree_compatible() const { return kind_ == Kind::Grevlex; }

  // Positive when a > b.
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Grevlex:
        return cmp_grevlex(a, b, 0, a.nvars(), a.degree(), b.degree());
      case Kind::Lex:
        for (int i = 0; i < a.nvars(); ++i) {
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
      case Kind::Elimination:
        return cmp_elimination(a, b);
    }
    return 0;
  }
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  std::string name() const;
  static TermOrder parse(const std::string& text);

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_;
  }

 private:
  TermOrder(Kind k, int block) : kind_(k), block_(block) {}
  static int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi, int da, int db) {
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  int cmp_elimination(const Monomial& a, const Monomial& b) const;

  Kind kind_ = Kind::Grevlex;
  int block_ = 0;
};

// Checked monomial comparison: throws UsageError on mismatched variable counts.
std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, const TermOrder& order);

}  // namespace orbithodge
