#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rmpredict/data_model.hpp"
#include "rmpredict/rational.hpp"

namespace rmp::vc {

// Subsets of the ground set A, indexed by the system's feature order, so
// |A| = |F| and two features sharing a value stay distinct.
using DescriptorMask = std::uint64_t;

inline constexpr std::size_t max_ground_size = 62;
inline constexpr std::size_t default_enumeration_cap = 20;

enum class Mode { exact, at_least };

const char* to_string(Mode m);
Mode parse_mode(std::string_view text);

struct TouchingSet {
  ObjectId object{};
  DescriptorMask members = 0;
};

// Descriptors of omega on which object o agrees.
TouchingSet touching_set(const DecisionSystem& system, ObjectId o, const NewObject& omega);

// Implicit family of epsilon-components of T within A:
//   exact:    { C subset of A, C non-empty : |C & T| / |C| == epsilon }
//   at_least: { ...                        : |C & T| / |C| >= epsilon }
struct ComponentFamily {
  std::size_t ground_size = 0;
  DescriptorMask touching = 0;
  Rational epsilon{1};
  Mode mode = Mode::exact;

  ComponentFamily() = default;
  ComponentFamily(std::size_t ground, DescriptorMask t, Rational eps, Mode m);

  DescriptorMask ground_mask() const;
  // Degree condition on counts: `hits` members of C inside T, `size` = |C| > 0.
  bool admits_counts(std::size_t hits, std::size_t size) const;
  bool admits(DescriptorMask c) const;
};

// Lists the family explicitly. Throws DomainError when |A| exceeds `cap`.
std::vector<DescriptorMask> epsilon_components(const ComponentFamily& family,
                                               std::size_t cap = default_enumeration_cap);

struct ShatterResult {
  bool shattered = false;
  // (trace, member) for every trace realized; member & S == trace. The empty
  // trace is realized by the empty term (member 0).
  std::vector<std::pair<DescriptorMask, DescriptorMask>> witnesses;
};

// Decides shattering without materializing the family: a trace T' of S is
// realized iff some C = T' + X with X inside A\S meets the degree condition,
// which depends only on how many elements of X fall in T.
// Throws DomainError for empty S or S outside A.
ShatterResult shatters(const ComponentFamily& family, DescriptorMask s);

// Largest |S| that is shattered (0 if none). Searches sizes upwards and stops
// at the first size with no shattered set.
unsigned vc_dimension(const ComponentFamily& family);

// Every exact component Q with 0 < epsilon < 1 has
// |Q| <= min{ floor(|T|/eps), floor(|A\T|/(1-eps)) }. Returns nullopt outside (0,1).
std::optional<std::size_t> component_size_bound(const ComponentFamily& family);

ComponentFamily family_for(const DecisionSystem& system, ObjectId o, const NewObject& omega,
                           const Rational& epsilon, Mode mode);

unsigned vc_of_object(const DecisionSystem& system, ObjectId o, const NewObject& omega,
                      const Rational& epsilon, Mode mode);
unsigned vc_star(const DecisionSystem& system, const NewObject& omega, const Rational& epsilon,
                 Mode mode);

}  // namespace rmp::vc
