#pragma once

#include <string>
#include <vector>

#include "asymprime/ideal.hpp"

namespace fx {

using asymprime::Monomial;
using asymprime::MonomialIdeal;

/// Shorthand: ideal(2, {{2,0},{1,1}}) is (x^2, xy).
inline MonomialIdeal ideal(std::size_t nvars, std::vector<std::vector<std::uint32_t>> gens) {
  std::vector<Monomial> ms;
  for (auto& g : gens) ms.emplace_back(std::move(g));
  return MonomialIdeal::from_generators(nvars, std::move(ms));
}

inline asymprime::RingContext xy() { return asymprime::RingContext({"x", "y"}); }
inline asymprime::RingContext xyz() { return asymprime::RingContext({"x", "y", "z"}); }

}  // namespace fx
