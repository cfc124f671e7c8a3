#include "rmpredict/mereology.hpp"

#include <atomic>
#include <bit>

#include "rmpredict/errors.hpp"

namespace rmp {
namespace {

std::atomic<std::uint64_t> next_universe_id{1};

void same_universe(const Term& x, const Term& y) {
  if (x.universe_id() != y.universe_id()) throw DomainError("terms belong to different universes");
}

void non_empty(const Term& x, const char* what) {
  if (x.is_empty()) {
    throw DomainError(std::string(what) + " presupposes non-empty terms (existential import)");
  }
}

}  // namespace

std::size_t Term::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

Degree::Degree(Rational value) : value_(value) {
  if (value_ < 0 || value_ > 1) throw DomainError("degree " + to_string(value_) + " outside [0,1]");
}

WeightedUniverse::WeightedUniverse(std::vector<std::int64_t> masses)
    : id_(next_universe_id.fetch_add(1)), masses_(std::move(masses)) {
  if (masses_.empty()) throw DomainError("a universe needs at least one atom");
  if (masses_.size() > max_atoms) {
    throw DomainError("at most " + std::to_string(max_atoms) + " atoms are supported");
  }
  for (auto m : masses_) {
    if (m <= 0) throw DomainError("atom weights must be strictly positive");
    total_ += m;
  }
}

WeightedUniverse WeightedUniverse::uniform(std::size_t atoms) {
  return WeightedUniverse(std::vector<std::int64_t>(atoms, 1));
}

WeightedUniverse WeightedUniverse::with_masses(std::vector<std::int64_t> masses) {
  return WeightedUniverse(std::move(masses));
}

Rational WeightedUniverse::atom_weight(std::size_t atom) const {
  return Rational(masses_.at(atom), total_);
}

AtomMask WeightedUniverse::full_mask() const {
  return masses_.size() == 64 ? ~AtomMask{0} : (AtomMask{1} << masses_.size()) - 1;
}

Term WeightedUniverse::term(AtomMask bits) const {
  if (bits & ~full_mask()) throw DomainError("term contains atoms outside the universe");
  return Term(id_, bits);
}

Term WeightedUniverse::term(std::initializer_list<std::size_t> atoms) const {
  AtomMask bits = 0;
  for (auto a : atoms) {
    if (a >= masses_.size()) throw DomainError("atom " + std::to_string(a) + " outside the universe");
    bits |= AtomMask{1} << a;
  }
  return Term(id_, bits);
}

void WeightedUniverse::check(const Term& t) const {
  if (t.universe_id() != id_) throw DomainError("term belongs to a different universe");
}

Rational WeightedUniverse::weight(const Term& x) const {
  check(x);
  std::int64_t mass = 0;
  for (AtomMask b = x.bits(); b != 0; b &= b - 1) mass += masses_[std::countr_zero(b)];
  return Rational(mass, total_);
}

bool proper_part(const Term& x, const Term& y) {
  same_universe(x, y);
  return !x.is_empty() && (x.bits() & ~y.bits()) == 0 && x.bits() != y.bits();
}

bool component(const Term& x, const Term& y) {
  same_universe(x, y);
  return !x.is_empty() && (x.bits() & ~y.bits()) == 0;
}

bool identical(const Term& x, const Term& y) {
  same_universe(x, y);
  return x.bits() == y.bits();
}

bool overlap(const Term& x, const Term& y) {
  same_universe(x, y);
  non_empty(x, "overlap");
  non_empty(y, "overlap");
  return (x.bits() & y.bits()) != 0;
}

bool exterior(const Term& x, const Term& y) { return !overlap(x, y); }

bool relative_exterior(const Term& a, const Term& m, const Term& b) {
  return proper_part(a, b) && proper_part(m, b) && exterior(a, m);
}

Term class_of(const std::vector<Term>& collection) {
  if (collection.empty()) throw DomainError("class of an empty collection is undefined");
  Term out = collection.front();
  for (const auto& t : collection) {
    non_empty(t, "class");
    out = alg_sum(out, t);
  }
  return out;
}

Term alg_sum(const Term& x, const Term& y) {
  same_universe(x, y);
  Term out = x;
  out.bits_ = x.bits() | y.bits();
  return out;
}

Term alg_product(const Term& x, const Term& y) {
  same_universe(x, y);
  Term out = x;
  out.bits_ = x.bits() & y.bits();
  return out;
}

Term alg_complement(const WeightedUniverse& u, const Term& x) {
  u.check(x);
  return u.term(~x.bits() & u.full_mask());
}

Term implication(const WeightedUniverse& u, const Term& x, const Term& y) {
  return alg_sum(alg_complement(u, x), y);
}

bool is_valid(const WeightedUniverse& u, const Term& x) {
  u.check(x);
  return x.bits() == u.full_mask();
}

Degree degree_of_part(const WeightedUniverse& u, const Term& x, const Term& y) {
  same_universe(x, y);
  if (x.is_empty()) throw DomainError("degree of part is undefined for the empty term (m(e) = 0)");
  return Degree(u.weight(alg_product(x, y)) / u.weight(x));
}

}  // namespace rmp
