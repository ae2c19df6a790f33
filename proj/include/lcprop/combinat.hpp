#pragma once

/// Exact generators for the classical triangle families (binomial, Stirling,
/// Eulerian, inversion numbers, q-Stirling) and Bernoulli-sum pmfs.
///
/// Conventions: Stirling rows keep the structural 0 at index 0 for n >= 1;
/// Eulerian rows are indexed by ascent count 0..n-1; inversion rows are the
/// coefficients of prod_{i=1..n-1} (1 + x + ... + x^i).

#include <optional>
#include <string>

#include "lcprop/seq.hpp"

namespace lcprop {

enum class TriangleFamily { binomial, stirling1, stirling2, q_stirling2, eulerian, inversions };

std::string family_name(TriangleFamily f);
std::optional<TriangleFamily> family_from_name(const std::string& name);

struct TriangleRow {
    TriangleFamily family;
    long n = 0;
    std::optional<Rat> q;  // q_stirling2 only
    ExactSeq row;
};

/// C(n,k), k = 0..n. Requires n >= 0.
TriangleRow binomial_row(long n);

/// Unsigned Stirling numbers of the first kind, [0, S1(n,1), ..., S1(n,n)].
/// S1(n+1,k) = S1(n,k-1) + n S1(n,k). Requires n >= 1.
TriangleRow stirling1_row(long n);

/// Stirling numbers of the second kind, [0, S2(n,1), ..., S2(n,n)].
/// S2(n,k) = S2(n-1,k-1) + k S2(n-1,k). Requires n >= 1.
TriangleRow stirling2_row(long n);

/// q-deformed Stirling-2 row via
///   S(n,k) = q^{k-1} S(n-1,k-1) + [k]_q S(n-1,k),  [k]_q = 1 + q + ... + q^{k-1},
/// which recovers stirling2_row at q = 1. Requires n >= 1 and q >= 0.
TriangleRow q_stirling2_row(long n, const Rat& q);

/// Eulerian numbers E(n,k), k = 0..n-1, via
///   E(n,k) = (k+1) E(n-1,k) + (n-k) E(n-1,k-1). Requires n >= 1.
TriangleRow eulerian_row(long n);

/// Permutations of n elements by inversion count; row sums to n!.
/// Built as the iterated convolution of all-ones blocks. Requires n >= 1.
TriangleRow inversion_numbers(long n);

/// Exact pmf of a sum of independent Bernoulli variables.
ExactSeq bernoulli_sum(const std::vector<Rat>& probs);

}  // namespace lcprop
