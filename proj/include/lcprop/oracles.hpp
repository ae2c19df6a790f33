#pragma once

/// Independent reference computations used to cross-check the generators:
/// direct permutation enumeration, the Bell triangle, and factorials. These
/// deliberately avoid the recurrences used by the main generators.

#include <vector>

#include "lcprop/rational.hpp"
#include "lcprop/seq.hpp"

namespace lcprop {

/// Histogram of ascent counts over all n! permutations. Keep n <= 8.
std::vector<long long> ascents_histogram_bruteforce(int n);

/// Histogram of inversion counts over all n! permutations. Keep n <= 8.
std::vector<long long> inversions_histogram_bruteforce(int n);

/// Bell number via the Bell triangle (no Stirling numbers involved).
Int bell_number(long n);

Int factorial(long n);

}  // namespace lcprop
