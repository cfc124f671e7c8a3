#include "rmpredict/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "rmpredict/mereology.hpp"
#include "rmpredict/tnorm.hpp"

namespace rmp {
namespace {

class Suite {
 public:
  void check(const std::string& law, bool ok, const std::function<std::string()>& describe) {
    auto [it, inserted] = index_.emplace(law, laws_.size());
    if (inserted) laws_.push_back(LawResult{law});
    auto& r = laws_[it->second];
    ++r.checks;
    if (!ok) {
      if (r.failures == 0) r.first_counterexample = describe();
      ++r.failures;
    }
  }

  std::vector<LawResult> take() { return std::move(laws_); }

 private:
  std::vector<LawResult> laws_;
  std::map<std::string, std::size_t> index_;
};

std::string bits(const Term& t) {
  std::string s = "{";
  bool first = true;
  for (std::size_t a = 0; a < 64; ++a) {
    if (t.contains(a)) {
      if (!first) s += ',';
      s += std::to_string(a);
      first = false;
    }
  }
  return s + "}";
}

// Laws over one pair of terms.
void pair_laws(Suite& suite, const WeightedUniverse& u, const Term& x, const Term& y) {
  const auto where = [&] { return "x=" + bits(x) + " y=" + bits(y); };
  const Term e = u.empty();
  const Term V = u.universe();
  const auto m = [&](const Term& t) { return u.weight(t); };
  const auto neg = [&](const Term& t) { return alg_complement(u, t); };
  const auto hook = [&](const Term& a, const Term& b) { return implication(u, a, b); };
  const bool cxy = component(x, y);
  const bool cyx = component(y, x);

  if (!x.is_empty() && !y.is_empty()) {
    suite.check("overlap.symmetric", overlap(x, y) == overlap(y, x), where);
    suite.check("exterior.symmetric", exterior(x, y) == exterior(y, x), where);
    suite.check("exterior.negates_overlap", exterior(x, y) == !overlap(x, y), where);

    // Axiom A, literally: if every non-empty component of x overlaps some
    // non-empty component of y, then x is a component of y.
    bool premise = true;
    const AtomMask xa = x.bits();
    const AtomMask ya = y.bits();
    for (AtomMask mm = xa; mm != 0 && premise; mm = (mm - 1) & xa) {
      const Term part = u.term(mm);
      bool found = false;
      for (AtomMask nn = ya; nn != 0 && !found; nn = (nn - 1) & ya) {
        found = component(u.term(nn), y) && overlap(part, u.term(nn));
      }
      premise = found;
    }
    suite.check("axiom_A", !premise || cxy, where);

    // Class of {x, y}.
    const Term cls = class_of({x, y});
    suite.check("class.requirement1", component(x, cls) && component(y, cls), where);
    bool req2 = true;
    for (AtomMask cc = cls.bits(); cc != 0 && req2; cc = (cc - 1) & cls.bits()) {
      const Term c = u.term(cc);
      req2 = overlap(c, x) || overlap(c, y);
    }
    suite.check("class.requirement2", req2, where);
  }

  if (!x.is_empty()) {
    suite.check("m1", cxy == is_valid(u, hook(x, y)), where);
    suite.check("m2", cxy == (alg_product(x, y) == x), where);
    suite.check("rinc.prop1", (degree_of_part(u, x, y).value() == Rational(1)) == cxy, where);
  }
  suite.check("m3", !identical(x, y) || m(x) == m(y), where);
  suite.check("m4", m(alg_sum(x, y)) == m(x) + m(alg_product(neg(x), y)), where);
  suite.check("m5", alg_product(x, y) != e || m(alg_sum(x, y)) == m(x) + m(y), where);
  suite.check("m6", m(x) + m(neg(x)) == Rational(1), where);
  suite.check("m7", m(y) == m(alg_product(y, x)) + m(alg_product(y, neg(x))), where);
  suite.check("m8", m(alg_sum(x, y)) == m(x) + m(y) - m(alg_product(x, y)), where);
  suite.check("m9", !cxy || m(x) <= m(y), where);
  suite.check("m10", m(x) + m(y) != m(alg_sum(x, y)) || alg_product(x, y) == e, where);
  suite.check("m11", !cxy || hook(x, y) == V, where);
  suite.check("m12", !cxy || alg_product(x, neg(y)) == e, where);
  suite.check("m13", !cyx || m(hook(x, y)) == 1 - m(x) + m(y), where);
  suite.check("m14", m(hook(x, y)) == 1 - m(alg_product(x, neg(y))), where);
  if (cyx) {
    const Rational luk = std::min(Rational(1), 1 - m(x) + m(y));
    suite.check("m13.lukasiewicz", m(hook(x, y)) == luk, where);
  }
  suite.check("weight.axiom1", (m(x) == Rational(1)) == (x == V), where);
  suite.check("weight.axiom2", !is_valid(u, hook(x, y)) || m(y) == m(x) + m(alg_product(neg(x), y)),
              where);
  suite.check("weight.axiom3", x.is_empty() || m(x) > 0, where);
  suite.check("algebra.sum_complement", alg_sum(x, neg(x)) == V, where);
  suite.check("implication.law2", is_valid(u, hook(alg_product(x, y), x)), where);
  suite.check("implication.law3", is_valid(u, hook(alg_product(x, y), alg_product(y, x))), where);
  suite.check("implication.law4",
              is_valid(u, hook(alg_product(x, hook(x, y)), alg_product(y, hook(y, x)))), where);
}

// Laws over one triple of terms.
void triple_laws(Suite& suite, const WeightedUniverse& u, const Term& x, const Term& y, const Term& z) {
  const auto where = [&] { return "x=" + bits(x) + " y=" + bits(y) + " z=" + bits(z); };
  const auto hook = [&](const Term& a, const Term& b) { return implication(u, a, b); };
  const auto valid = [&](const Term& t) { return is_valid(u, t); };

  if (!x.is_empty()) suite.check("parts.irreflexive", !proper_part(x, x), where);
  suite.check("parts.transitive", !(proper_part(x, y) && proper_part(y, z)) || proper_part(x, z), where);
  suite.check("parts.asymmetric", !proper_part(x, y) || !proper_part(y, x), where);
  if (!x.is_empty()) suite.check("components.reflexive", component(x, x), where);
  suite.check("components.antisymmetric", !(component(x, y) && component(y, x)) || x == y, where);
  suite.check("components.transitive", !(component(x, y) && component(y, z)) || component(x, z), where);
  if (!x.is_empty() && !y.is_empty()) {
    suite.check("relative_exterior.symmetric", relative_exterior(x, y, z) == relative_exterior(y, x, z),
                where);
  }

  suite.check("implication.law1", valid(hook(hook(x, y), hook(hook(y, z), hook(x, z)))), where);
  suite.check("implication.law5", valid(hook(hook(x, hook(y, z)), hook(alg_product(x, y), z))), where);
  suite.check("implication.law6", valid(hook(hook(alg_product(x, y), z), hook(x, hook(y, z)))), where);
  suite.check("implication.law7",
              valid(hook(hook(x, hook(y, z)), hook(hook(hook(y, x), z), z))), where);

  if (!x.is_empty() && !z.is_empty()) {
    // x = a, y = b, z = c: P1(a,b) and Pr(c,a) give P_s(c,b) with s >= r.
    const auto ab = degree_of_part(u, x, y);
    if (ab.value() == Rational(1)) {
      const auto ca = degree_of_part(u, z, x);
      const auto cb = degree_of_part(u, z, y);
      suite.check("rinc.prop2", cb >= ca, where);
    }
  }
}

void universe_constants(Suite& suite, const WeightedUniverse& u) {
  const auto where = [] { return std::string("constants"); };
  suite.check("weight.axiom4", u.weight(u.empty()) == Rational(0), where);
  suite.check("weight.universe", u.weight(u.universe()) == Rational(1), where);
  suite.check("algebra.complement_universe", alg_complement(u, u.universe()) == u.empty(), where);
  Rational total = 0;
  for (std::size_t a = 0; a < u.atom_count(); ++a) total += u.atom_weight(a);
  suite.check("weight.normalized", total == Rational(1), where);
}

void tnorm_laws(Suite& suite) {
  using namespace tnorm;
  constexpr std::size_t n = 64;
  const auto v = check_t_norm([](double a, double b) { return t_norm_L(a, b); }, n);
  suite.check("tnorm.T_L_is_t_norm", !v, [&] { return v->describe(); });

  const auto near = [](double a, double b) { return std::abs(a - b) <= tolerance; };
  const auto tn = [](double a, double b) { return t_norm_L(a, b); };
  const auto im = [](double a, double b) { return impl_L(a, b); };
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const double p = static_cast<double>(i) / n;
      const double q = static_cast<double>(j) / n;
      const auto where = [&] { return "p=" + std::to_string(p) + " q=" + std::to_string(q); };
      suite.check("tnorm.formula1_negation", near(im(p, 0.0), neg_L(p)), where);
      suite.check("tnorm.formula2_min", near(tn(p, im(p, q)), std::min(p, q)), where);
      const double disj = std::min(im(im(p, q), q), im(im(q, p), p));
      suite.check("tnorm.formula3_max", near(disj, std::max(p, q)), where);
      suite.check("tnorm.formula4_strong_sum", near(neg_L(tn(neg_L(p), neg_L(q))), s_norm_L(p, q)), where);
      suite.check("tnorm.residuation", (im(p, q) >= 1.0 - tolerance) == (p <= q + tolerance), where);
      suite.check("tnorm.sum_dominates_product",
                  propagate(p, q, Connective::sum) >= propagate(p, q, Connective::product) - tolerance,
                  where);
    }
  }
}

std::vector<Term> all_terms(const WeightedUniverse& u) {
  std::vector<Term> out;
  for (AtomMask b = 0; b <= u.full_mask(); ++b) out.push_back(u.term(b));
  return out;
}

}  // namespace

bool SelftestReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.failures == 0; });
}

std::size_t SelftestReport::total_checks() const {
  std::size_t n = 0;
  for (const auto& r : laws) n += r.checks;
  return n;
}

std::string SelftestReport::summary() const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : laws) {
    os << (r.failures == 0 ? "PASS " : "FAIL ") << r.law << " (" << r.checks << " checks";
    if (r.failures) {
      ++failed;
      os << ", " << r.failures << " failures, e.g. " << r.first_counterexample;
    }
    os << ")\n";
  }
  os << (laws.size() - failed) << "/" << laws.size() << " laws passed, " << total_checks()
     << " checks\n";
  return os.str();
}

SelftestReport run_algebra_selftest(const SelftestOptions& options) {
  Suite suite;

  const auto uniform = WeightedUniverse::uniform(options.exhaustive_atoms);
  universe_constants(suite, uniform);
  const auto terms = all_terms(uniform);
  for (const auto& x : terms)
    for (const auto& y : terms) {
      pair_laws(suite, uniform, x, y);
      for (const auto& z : terms) triple_laws(suite, uniform, x, y, z);
    }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::int64_t> mass(1, 100);
  std::uniform_int_distribution<std::size_t> atoms(1, std::max<std::size_t>(1, options.max_random_atoms));
  for (std::size_t k = 0; k < options.random_universes; ++k) {
    std::vector<std::int64_t> masses(atoms(rng));
    for (auto& w : masses) w = mass(rng);
    const auto u = WeightedUniverse::with_masses(std::move(masses));
    universe_constants(suite, u);
    std::uniform_int_distribution<AtomMask> pick(0, u.full_mask());
    for (std::size_t s = 0; s < options.samples_per_universe; ++s) {
      const Term x = u.term(pick(rng));
      const Term y = u.term(pick(rng));
      const Term z = u.term(pick(rng));
      pair_laws(suite, u, x, y);
      triple_laws(suite, u, x, y, z);
    }
  }

  if (options.include_tnorm) tnorm_laws(suite);
  return SelftestReport{suite.take()};
}

}  // namespace rmp
