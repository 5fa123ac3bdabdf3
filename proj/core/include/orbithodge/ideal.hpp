#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbithodge/polynomial.hpp"
#include "orbithodge/vec.hpp"

namespace orbithodge {

/// Persistent store for reduced Groebner bases, keyed by groebner_key().
/// Documents are ideal JSON with a groebner_basis field. A loaded document
/// is used only if its ring and generators match the request.
class GroebnerMemo {
 public:
  virtual ~GroebnerMemo() = default;
  virtual std::optional<std::string> load(const std::string& key) = 0;
  virtual void store(const std::string& key, const std::string& document) = 0;
};

void set_groebner_memo(std::shared_ptr<GroebnerMemo> memo);
std::shared_ptr<GroebnerMemo> groebner_memo();

/// Ideal given by generators, with its reduced Groebner basis in the ring's
/// order computed on first use and cached. Copies share the cache.
class IdealHandle {
 public:
  IdealHandle(RingPtr ring, std::vector<Polynomial> generators);
  static IdealHandle parse(RingPtr ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  // Reduced, ascending by leading monomial.
  const std::vector<Polynomial>& groebner_basis() const;
  bool has_cached_basis() const;
  // Installs a basis known to be the reduced one (e.g. from elimination).
  void seed_groebner_basis(std::vector<Polynomial> basis) const;

  bool contains(const Polynomial& f) const;
  bool contains(const IdealHandle& other) const;
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_homogeneous() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<Polynomial>> basis;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

// Content key for a basis computation: hash of ring, order and generators.
std::string groebner_key(const Ring& ring, const std::vector<Polynomial>& generators);

Vec to_vec(const Polynomial& f);
Polynomial from_vec(const RingPtr& ring, const Vec& v);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis, const TermOrder& order);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);
// Reduced Groebner basis in `order`; elements live in the input ring and are
// monic with respect to `order`, sorted ascending by their leading monomial
// in that order.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, const TermOrder& order);
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators);
// Minimal homogeneous generating subset of the reduced Groebner basis.
std::vector<Polynomial> minimal_generators(const IdealHandle& ideal);
bool ideal_membership(const Polynomial& f, const IdealHandle& ideal);
bool same_ideal(const IdealHandle& a, const IdealHandle& b);

IdealHandle eliminate(const IdealHandle& ideal, const std::vector<int>& variables);
IdealHandle intersect(const IdealHandle& a, const IdealHandle& b);
// I : g^infinity
IdealHandle saturate(const IdealHandle& ideal, const Polynomial& g);
// I : J^infinity, intersecting the saturations by each generator of J.
IdealHandle saturate(const IdealHandle& ideal, const IdealHandle& by);
// Saturation by the ideal of all variables.
IdealHandle saturate(const IdealHandle& ideal);
IdealHandle homogenize_ideal(const IdealHandle& ideal, int t);
// Ideal of all variables.
IdealHandle maximal_ideal(const RingPtr& ring);

std::string ideal_to_json(const IdealHandle& ideal, bool include_basis = false);
IdealHandle ideal_from_json(std::string_view text);

}  // namespace orbithodge
