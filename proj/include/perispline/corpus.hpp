#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perispline/projection.hpp"

namespace perispline {

inline constexpr std::uint64_t kDefaultSeed = 20240915ULL;

/// Canonical labels: sin1, cos1, sin2, cos2, sin5, cos5 (sin/cos of 2 pi k x),
/// expsin (exp(sin 2 pi x)), randtrig (seeded random trig polynomial, k <= 3).
std::vector<std::string> corpus_labels();

/// Builds the named test function with exact derivatives of every order.
/// The seed only affects randtrig.
TestFunction corpus_function(const std::string& label, std::uint64_t seed = kDefaultSeed);

std::vector<TestFunction> corpus(const std::vector<std::string>& labels,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace perispline
