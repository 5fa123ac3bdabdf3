#include "orbithodge/monomial.hpp"

#include <string>

namespace orbithodge {

namespace {

void check_nvars(int n) {
  if (n < 0 || n > kMaxVars) {
    throw UsageError("monomials support at most " + std::to_string(kMaxVars) + " variables");
  }
}

}  // namespace

Monomial::Monomial(int nvars) {
  check_nvars(nvars);
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exponents) {
  check_nvars(static_cast<int>(exponents.size()));
  nvars_ = static_cast<std::uint8_t>(exponents.size());
  int i = 0;
  for (int e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(static_cast<int>(i), exponents[i]);
  return m;
}

Monomial Monomial::variable(int nvars, int index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= nvars_) throw UsageError("variable index out of range");
  if (e < 0) throw UsageError("negative exponent");
  std::int64_t nd = static_cast<std::int64_t>(degree_) - exp_[static_cast<std::size_t>(i)] + e;
  if (nd > kMaxDegree) throw ComputationError("monomial degree overflow (limit 2^15 - 1)");
  exp_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(e);
  refresh();
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exp_.begin(), exp_.begin() + nvars_);
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (int i = 0; i < nvars_; ++i) {
    int e = exp_[static_cast<std::size_t>(i)];
    degree_ += e;
    if (e != 0) mask_ |= (1u << i);
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.degree_ + b.degree_ > kMaxDegree) {
    throw ComputationError("monomial degree overflow (limit 2^15 - 1)");
  }
  Monomial r;
  r.nvars_ = a.nvars_;
  for (int i = 0; i < a.nvars_; ++i) {
    r.exp_[static_cast<std::size_t>(i)] =
        static_cast<std::int16_t>(a.exp_[static_cast<std::size_t>(i)] + b.exp_[static_cast<std::size_t>(i)]);
  }
  r.degree_ = a.degree_ + b.degree_;
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& d) const {
  Monomial r;
  r.nvars_ = nvars_;
  for (int i = 0; i < nvars_; ++i) {
    r.exp_[static_cast<std::size_t>(i)] =
        static_cast<std::int16_t>(exp_[static_cast<std::size_t>(i)] - d.exp_[static_cast<std::size_t>(i)]);
  }
  r.refresh();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.nvars_ = a.nvars_;
  for (int i = 0; i < a.nvars_; ++i) {
    auto k = static_cast<std::size_t>(i);
    r.exp_[k] = a.exp_[k] > b.exp_[k] ? a.exp_[k] : b.exp_[k];
  }
  r.refresh();
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.nvars_ = a.nvars_;
  for (int i = 0; i < a.nvars_; ++i) {
    auto k = static_cast<std::size_t>(i);
    r.exp_[k] = a.exp_[k] < b.exp_[k] ? a.exp_[k] : b.exp_[k];
  }
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (int i = 0; i < nvars_; ++i) {
    h ^= static_cast<std::uint16_t>(exp_[static_cast<std::size_t>(i)]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

TermOrder TermOrder::elimination(int block) {
  if (block < 0) throw UsageError("elimination block must be non-negative");
  return TermOrder(Kind::Elimination, block);
}

int TermOrder::cmp_elimination(const Monomial& a, const Monomial& b) const {
  int n = a.nvars();
  int k = block_ < n ? block_ : n;
  int da = 0, db = 0;
  for (int i = 0; i < k; ++i) {
    da += a[i];
    db += b[i];
  }
  int c = cmp_grevlex(a, b, 0, k, da, db);
  if (c != 0) return c;
  return cmp_grevlex(a, b, k, n, a.degree() - da, b.degree() - db);
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  int c = cmp(a, b);
  if (c > 0) return std::strong_ordering::greater;
  if (c < 0) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elimination:
      return "elim" + std::to_string(block_);
  }
  return "grevlex";
}

TermOrder TermOrder::parse(const std::string& text) {
  if (text == "grevlex") return grevlex();
  if (text == "lex") return lex();
  if (text.rfind("elim", 0) == 0) {
    try {
      return elimination(std::stoi(text.substr(4)));
    } catch (const std::logic_error&) {
    }
  }
  throw UsageError("unknown term order '" + text + "'");
}

std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b, const TermOrder& order) {
  if (a.nvars() != b.nvars()) throw UsageError("monomials from different rings");
  return order.compare(a, b);
}

}  // namespace orbithodge
