#pragma once

#include <cstdint>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {
namespace series {

// tau(1..N) from q prod (1-q^n)^24, exact integers.
std::vector<i128> delta_tau(long N);

// [q^m] sigma(q) for m = 0..N, sigma(q) = sum q^{n(n+1)/2} / ((1+q)...(1+q^n)).
std::vector<i128> sigma_coeffs(long N);

// [q^m] sigma*(q) for m = 0..N, sigma*(q) = 2 sum (-1)^n q^{n^2} / ((1-q)(1-q^3)...(1-q^{2n-1})).
std::vector<i128> sigma_star_coeffs(long N);

// chi_+(n): (-1)^{floor(n/30)} if (n,6)=1 and n = +-1 mod 5, else 0.
int chi_plus(int64_t n);

// number of divisors, naive.
int64_t divisor_count(int64_t n);

// d(1..N) by sieve.
std::vector<int64_t> divisor_counts(long N);

} // namespace series
} // namespace qmf
