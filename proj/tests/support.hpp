#pragma once

#include <random>

#include "fuzzy/fuzzy.hpp"
#include "fuzzy/random.hpp"

namespace fuzzy::test {

using Array = ComplexArray<double>;
using C = std::complex<double>;
inline constexpr C I{0.0, 1.0};

inline std::mt19937_64 rng(std::uint64_t seed = 12345) { return std::mt19937_64(seed); }

template <typename A, typename B>
double diff(const A& a, const B& b)
{
    return max_abs((a - b).eval());
}

}  // namespace fuzzy::test
