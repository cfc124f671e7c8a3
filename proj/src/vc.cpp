#include "rmpredict/vc.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "rmpredict/errors.hpp"

namespace rmp::vc {
namespace {

std::size_t count(DescriptorMask m) { return static_cast<std::size_t>(std::popcount(m)); }

// The lowest `n` set bits of `pool`.
DescriptorMask take(DescriptorMask pool, std::size_t n) {
  DescriptorMask out = 0;
  for (; n > 0 && pool != 0; --n) {
    const DescriptorMask low = pool & (~pool + 1);
    out |= low;
    pool &= pool - 1;
  }
  return out;
}

}  // namespace

const char* to_string(Mode m) { return m == Mode::exact ? "exact" : "at_least"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::exact;
  if (text == "at_least" || text == "at-least") return Mode::at_least;
  throw UsageError("unknown mode '" + std::string(text) + "' (expected exact or at_least)");
}

TouchingSet touching_set(const DecisionSystem& system, ObjectId o, const NewObject& omega) {
  const auto values = omega.aligned_values(system);
  if (values.size() > max_ground_size) {
    throw DomainError("ground sets larger than " + std::to_string(max_ground_size) +
                      " descriptors are not supported");
  }
  const std::size_t row = system.row_of(o);
  TouchingSet t{o, 0};
  for (std::size_t f = 0; f < values.size(); ++f) {
    if (system.value(row, f) == values[f]) t.members |= DescriptorMask{1} << f;
  }
  return t;
}

ComponentFamily::ComponentFamily(std::size_t ground, DescriptorMask t, Rational eps, Mode m)
    : ground_size(ground), touching(t), epsilon(eps), mode(m) {
  if (ground_size > max_ground_size) {
    throw DomainError("ground sets larger than " + std::to_string(max_ground_size) +
                      " descriptors are not supported");
  }
  if (touching & ~ground_mask()) throw DomainError("touching set is not inside the ground set");
  if (epsilon < 0 || epsilon > 1) {
    throw DomainError("epsilon " + rmp::to_string(epsilon) + " outside [0,1]");
  }
}

DescriptorMask ComponentFamily::ground_mask() const {
  return ground_size == 0 ? 0 : (~DescriptorMask{0} >> (64 - ground_size));
}

bool ComponentFamily::admits_counts(std::size_t hits, std::size_t size) const {
  if (size == 0) return false;
  const auto lhs = static_cast<std::int64_t>(hits) * epsilon.denominator();
  const auto rhs = epsilon.numerator() * static_cast<std::int64_t>(size);
  return mode == Mode::exact ? lhs == rhs : lhs >= rhs;
}

bool ComponentFamily::admits(DescriptorMask c) const {
  return admits_counts(count(c & touching), count(c));
}

std::vector<DescriptorMask> epsilon_components(const ComponentFamily& family, std::size_t cap) {
  if (family.ground_size > cap) {
    throw DomainError("ground set of " + std::to_string(family.ground_size) +
                      " descriptors exceeds the enumeration cap of " + std::to_string(cap) +
                      "; use vc_of_object, which keeps the family implicit");
  }
  std::vector<DescriptorMask> out;
  const DescriptorMask full = family.ground_mask();
  for (DescriptorMask c = 1; c <= full && c != 0; ++c) {
    if (family.admits(c)) out.push_back(c);
  }
  return out;
}

ShatterResult shatters(const ComponentFamily& family, DescriptorMask s) {
  if (s == 0) throw DomainError("shattering is defined for non-empty sets only");
  if (s & ~family.ground_mask()) throw DomainError("candidate set is not inside the ground set");

  const DescriptorMask rest = family.ground_mask() & ~s;
  const DescriptorMask rest_in = rest & family.touching;
  const DescriptorMask rest_out = rest & ~family.touching;
  const std::size_t avail_in = count(rest_in);
  const std::size_t avail_out = count(rest_out);

  // Feasibility of a trace depends only on (|T' & T|, |T' \ T|).
  std::map<std::pair<std::size_t, std::size_t>, std::optional<std::pair<std::size_t, std::size_t>>>
      memo;
  const auto extension = [&](std::size_t t_in, std::size_t t_out) {
    const auto key = std::pair{t_in, t_out};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::optional<std::pair<std::size_t, std::size_t>> found;
    for (std::size_t x_in = 0; x_in <= avail_in && !found; ++x_in)
      for (std::size_t x_out = 0; x_out <= avail_out; ++x_out) {
        if (family.admits_counts(t_in + x_in, t_in + t_out + x_in + x_out)) {
          found = std::pair{x_in, x_out};
          break;
        }
      }
    memo.emplace(key, found);
    return found;
  };

  ShatterResult result;
  result.shattered = true;
  DescriptorMask trace = 0;
  do {
    if (trace == 0) {
      result.witnesses.emplace_back(0, 0);
    } else {
      const std::size_t t_in = count(trace & family.touching);
      const auto ext = extension(t_in, count(trace) - t_in);
      if (!ext) {
        result.shattered = false;
        return result;
      }
      const DescriptorMask member = trace | take(rest_in, ext->first) | take(rest_out, ext->second);
      result.witnesses.emplace_back(trace, member);
    }
    trace = (trace - s) & s;  // next submask of s
  } while (trace != 0);
  return result;
}

unsigned vc_dimension(const ComponentFamily& family) {
  const DescriptorMask inside = family.touching;
  const DescriptorMask outside = family.ground_mask() & ~family.touching;
  const std::size_t n_in = count(inside);
  const std::size_t n_out = count(outside);

  // Sets of equal size with equally many touching descriptors are shattered
  // alike, so one representative per split stands for the whole size class.
  unsigned best = 0;
  for (std::size_t size = 1; size <= family.ground_size; ++size) {
    bool any = false;
    const std::size_t lo = size > n_out ? size - n_out : 0;
    const std::size_t hi = std::min(size, n_in);
    for (std::size_t k = lo; k <= hi && !any; ++k) {
      const DescriptorMask s = take(inside, k) | take(outside, size - k);
      any = shatters(family, s).shattered;
    }
    if (!any) break;
    best = static_cast<unsigned>(size);
  }
  return best;
}

std::optional<std::size_t> component_size_bound(const ComponentFamily& family) {
  const auto& eps = family.epsilon;
  if (eps <= 0 || eps >= 1) return std::nullopt;
  const auto t = static_cast<std::int64_t>(count(family.touching));
  const auto rest = static_cast<std::int64_t>(count(family.ground_mask() & ~family.touching));
  const auto by_touching = (t * eps.denominator()) / eps.numerator();
  const auto by_rest = (rest * eps.denominator()) / (eps.denominator() - eps.numerator());
  return static_cast<std::size_t>(std::min(by_touching, by_rest));
}

ComponentFamily family_for(const DecisionSystem& system, ObjectId o, const NewObject& omega,
                           const Rational& epsilon, Mode mode) {
  const auto t = touching_set(system, o, omega);
  return ComponentFamily(system.feature_count(), t.members, epsilon, mode);
}

unsigned vc_of_object(const DecisionSystem& system, ObjectId o, const NewObject& omega,
                      const Rational& epsilon, Mode mode) {
  return vc_dimension(family_for(system, o, omega, epsilon, mode));
}

unsigned vc_star(const DecisionSystem& system, const NewObject& omega, const Rational& epsilon,
                 Mode mode) {
  unsigned best = 0;
  for (std::size_t r = 0; r < system.object_count(); ++r) {
    best = std::max(best, vc_of_object(system, system.id(r), omega, epsilon, mode));
  }
  return best;
}

}  // namespace rmp::vc
