#include "orbithodge/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace orbithodge {

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw UsageError("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw UsageError("polynomial needs a ring");
  for (const auto& t : terms_) {
    if (t.mono.nvars() != ring_->nvars()) throw UsageError("monomial does not belong to the ring");
  }
  normalize();
}

void Polynomial::normalize() {
  const auto& ord = ring_->order();
  const auto& F = ring_->field();
  for (auto& t : terms_) t.coeff %= F.modulus();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw UsageError("polynomials from different rings");
}

Polynomial Polynomial::constant(const RingPtr& ring, std::int64_t value) {
  Polynomial p(ring);
  Coeff c = ring->field().from_int(value);
  if (c != 0) p.terms_.push_back({ring->one(), c});
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, int index) {
  if (index < 0 || index >= ring->nvars()) throw UsageError("variable index out of range");
  return monomial(ring, Monomial::variable(ring->nvars(), index));
}

Polynomial Polynomial::variable(const RingPtr& ring, std::string_view name) {
  int i = ring->index_of(name);
  if (i < 0) throw UsageError("unknown variable '" + std::string(name) + "'");
  return variable(ring, i);
}

Polynomial Polynomial::monomial(const RingPtr& ring, const Monomial& m, Coeff c) {
  Polynomial p(ring);
  if (m.nvars() != ring->nvars()) throw UsageError("monomial does not belong to the ring");
  c %= ring->field().modulus();
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

bool Polynomial::involves(int var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono[var] != 0; });
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  const auto& ord = ring_->order();
  const auto& F = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = ord.cmp(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(other.terms_[j++]);
    } else {
      Coeff s = F.add(terms_[i].coeff, other.terms_[j].coeff);
      if (s != 0) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  const auto& F = ring_->field();
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, 0);
      it->second = F.add(it->second, F.mul(a.coeff, b.coeff));
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, c});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scaled(Coeff c) const {
  const auto& F = ring_->field();
  c %= F.modulus();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Coeff c) const {
  const auto& F = ring_->field();
  Polynomial r(ring_);
  c %= F.modulus();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw UsageError("negative power");
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::specialize(const std::map<int, Coeff>& assignment) const {
  const auto& F = ring_->field();
  for (const auto& [v, c] : assignment) {
    if (v < 0 || v >= ring_->nvars()) throw UsageError("specialized variable not in ring");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    Coeff c = t.coeff;
    for (const auto& [v, value] : assignment) {
      int e = m[v];
      if (e == 0) continue;
      Coeff pw = 1;
      for (int k = 0; k < e; ++k) pw = F.mul(pw, value % F.modulus());
      c = F.mul(c, pw);
      m.set(v, 0);
    }
    if (c != 0) out.push_back({m, c});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::specialize(const std::map<std::string, std::int64_t>& assignment) const {
  std::map<int, Coeff> a;
  for (const auto& [name, value] : assignment) {
    int i = ring_->index_of(name);
    if (i < 0) throw UsageError("unknown variable '" + name + "'");
    a[i] = ring_->field().from_int(value);
  }
  return specialize(a);
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ring_->nvars()) throw UsageError("variable index out of range");
  const auto& F = ring_->field();
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Coeff c = F.mul(t.coeff, F.from_int(e));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, c});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::homogenize(int var) const {
  if (var < 0 || var >= ring_->nvars()) throw UsageError("variable index out of range");
  if (involves(var)) {
    throw UsageError("homogenizing variable '" + ring_->variable(var) + "' already occurs");
  }
  int d = degree();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    m.set(var, d - m.degree());
    out.push_back({m, t.coeff});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_->nvars()) {
    throw UsageError("substitution needs one image per variable");
  }
  if (images.empty()) throw UsageError("substitution into a ring without variables");
  const RingPtr& target = images.front().ring();
  // powers[i][e] = images[i]^e, built lazily
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, 1).scaled(t.coeff);
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = t.mono[i];
      if (e != 0) prod = prod * power(static_cast<std::size_t>(i), e);
    }
    result += prod;
  }
  return result;
}

Polynomial Polynomial::in_ring(const RingPtr& other) const {
  if (other->nvars() != ring_->nvars()) throw UsageError("rings differ in variable count");
  std::vector<Term> t = terms_;
  return Polynomial(other, std::move(t));
}

std::string monomial_to_string(const Ring& ring, const Monomial& m) {
  std::string s;
  for (int i = 0; i < ring.nvars(); ++i) {
    int e = m[i];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variable(i);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& F = ring_->field();
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = F.to_signed(t.coeff);
    bool negative = c < 0;
    std::int64_t a = negative ? -c : c;
    if (negative) {
      s += '-';
    } else if (!first) {
      s += '+';
    }
    if (t.mono.is_one()) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + '*';
      s += monomial_to_string(*ring_, t.mono);
    }
    first = false;
  }
  return s;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    const auto& F = ring_->field();
    std::vector<Term> terms;
    skip();
    if (pos_ >= text_.size()) throw UsageError("empty polynomial text");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= text_.size()) break;
      Coeff sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = F.neg(1);
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Coeff c = sign;
      Monomial m = ring_->one();
      bool any = false;
      while (true) {
        skip();
        if (pos_ >= text_.size()) fail("dangling operator");
        char ch = peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
          c = F.mul(c, F.from_int(read_int()));
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
          std::string name = read_ident();
          int v = ring_->index_of(name);
          if (v < 0) fail("unknown variable '" + name + "'");
          int e = 1;
          skip();
          if (pos_ < text_.size() && peek() == '^') {
            ++pos_;
            skip();
            e = static_cast<int>(read_int());
          }
          m = m * Monomial::variable(ring_->nvars(), v, e);
        } else {
          fail(std::string("unexpected character '") + ch + "'");
        }
        any = true;
        skip();
        if (pos_ < text_.size() && peek() == '*') {
          ++pos_;
          continue;
        }
        break;
      }
      if (!any) fail("empty term");
      terms.push_back({m, c});
    }
    return Polynomial(ring_, std::move(terms));
  }

 private:
  char peek() const { return text_[pos_]; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::int64_t read_int() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }
  std::string read_ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse polynomial '" + std::string(text_) + "': " + why);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, std::string_view text) { return Parser(ring, text).run(); }

}  // namespace orbithodge
