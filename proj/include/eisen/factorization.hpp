#pragma once

#include <vector>

#include "eisen/eisenstein.hpp"
#include "eisen/rational.hpp"

namespace eisen {

struct Factor {
    EisensteinInt prime;
    unsigned long exponent;

    friend bool operator==(const Factor &, const Factor &) = default;
};

/// unit * prod(prime^exponent), primes canonical, pairwise non-associate and
/// sorted by (norm, a, b).
///
/// Canonical primes are 1 - w (kept as is even though it lies outside the
/// region a > b >= 0), the in-region elements of prime norm p = 1 (mod 3), and
/// the inert rational primes q = 2 (mod 3) as (q, 0).
struct PrimeFactorization {
    EisensteinInt unit{1, 0};
    std::vector<Factor> factors;

    EisensteinInt recompose() const;

    friend bool operator==(const PrimeFactorization &, const PrimeFactorization &) = default;
};

/// Canonical representative of the associate class of a prime.
EisensteinInt canonical_prime(const EisensteinInt &prime);

/// Ordering used for factor lists: (norm, a, b) ascending.
bool prime_order_less(const EisensteinInt &x, const EisensteinInt &y);

/// Canonical prime of norm p for a rational prime p = 1 (mod 3).
EisensteinInt prime_above(const Integer &p);

/// 3 ramifies, p = 1 (mod 3) splits into two conjugate primes, p = 2 (mod 3) is inert.
/// Throws std::domain_error if p is not a rational prime.
PrimeFactorization split_rational_prime(const Integer &p);

bool is_prime(const EisensteinInt &x);

/// Throws std::domain_error on zero and FactorEffortExceeded when the norm
/// cannot be factored within opts.
PrimeFactorization factor(const EisensteinInt &x, const FactorOptions &opts = {});

} // namespace eisen
