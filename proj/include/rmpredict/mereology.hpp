#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rmpredict/rational.hpp"

namespace rmp {

// Finite set model of mereology. Atoms are 0..n-1 (n <= 62), terms are subsets
// encoded as bit masks, and the empty term e is the empty mask.
using AtomMask = std::uint64_t;

class Term;
Term alg_sum(const Term& x, const Term& y);
Term alg_product(const Term& x, const Term& y);

class Term {
 public:
  Term() = default;

  AtomMask bits() const { return bits_; }
  bool is_empty() const { return bits_ == 0; }
  std::size_t size() const;
  bool contains(std::size_t atom) const { return (bits_ >> atom) & 1u; }
  std::uint64_t universe_id() const { return universe_id_; }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  friend class WeightedUniverse;
  friend Term alg_sum(const Term& x, const Term& y);
  friend Term alg_product(const Term& x, const Term& y);
  Term(std::uint64_t universe, AtomMask bits) : universe_id_(universe), bits_(bits) {}

  std::uint64_t universe_id_ = 0;
  AtomMask bits_ = 0;
};

// Degree in [0, 1], exact.
class Degree {
 public:
  explicit Degree(Rational value);
  const Rational& value() const { return value_; }
  double to_double() const { return rmp::to_double(value_); }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree& a, const Degree& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_;
};

// Atoms with strictly positive integer masses; the weight of an atom is its
// mass over the total, so weights are exact and sum to 1.
class WeightedUniverse {
 public:
  static constexpr std::size_t max_atoms = 62;

  static WeightedUniverse uniform(std::size_t atoms);
  static WeightedUniverse with_masses(std::vector<std::int64_t> masses);

  std::size_t atom_count() const { return masses_.size(); }
  Rational atom_weight(std::size_t atom) const;
  std::uint64_t id() const { return id_; }

  Term term(AtomMask bits) const;
  Term term(std::initializer_list<std::size_t> atoms) const;
  Term empty() const { return term(AtomMask{0}); }
  Term universe() const { return term(full_mask()); }
  AtomMask full_mask() const;

  // m(x) = sum of atom weights in x; m(e) = 0, m(V) = 1.
  Rational weight(const Term& x) const;

  // Throws DomainError if t was made by another universe.
  void check(const Term& t) const;

 private:
  explicit WeightedUniverse(std::vector<std::int64_t> masses);

  std::uint64_t id_;
  std::vector<std::int64_t> masses_;
  std::int64_t total_ = 0;
};

// Relations. All throw DomainError when terms come from different universes.
bool proper_part(const Term& x, const Term& y);
bool component(const Term& x, const Term& y);
bool identical(const Term& x, const Term& y);
// overlap/exterior presuppose non-empty arguments and throw DomainError on e.
bool overlap(const Term& x, const Term& y);
bool exterior(const Term& x, const Term& y);
bool relative_exterior(const Term& a, const Term& m, const Term& b);

// Class of a non-empty collection of non-empty terms (their union).
Term class_of(const std::vector<Term>& collection);

// Tarski algebra.
Term alg_sum(const Term& x, const Term& y);
Term alg_product(const Term& x, const Term& y);
Term alg_complement(const WeightedUniverse& u, const Term& x);

// x -> y = -x + y; valid iff it is the whole universe.
Term implication(const WeightedUniverse& u, const Term& x, const Term& y);
bool is_valid(const WeightedUniverse& u, const Term& x);

// Rough inclusion: m(x.y)/m(x). Throws DomainError for x = e.
Degree degree_of_part(const WeightedUniverse& u, const Term& x, const Term& y);

}  // namespace rmp
