#pragma once

#include <optional>
#include <vector>

#include "eisen/eisenstein.hpp"
#include "eisen/factorization.hpp"

namespace eisen {

/// sigma(n) for n >= 1 via the product of (p^(e+1) - 1)/(p - 1).
Integer rational_sigma(const Integer &n, const FactorOptions &opts = {});

/// Product of (pi^(k+1) - 1)/(pi - 1) over the canonical factorization of x;
/// the unit is discarded, so sigma_star(unit) = 1. Throws on zero.
EisensteinInt sigma_star(const EisensteinInt &x, const FactorOptions &opts = {});
EisensteinInt sigma_star(const PrimeFactorization &f);

/// Every product prod(pi_q^j_q), 0 <= j_q <= k_q, in lexicographic exponent
/// order (first prime most significant). Summing it gives sigma_star(x).
std::vector<EisensteinInt> canonical_divisors(const EisensteinInt &x, const FactorOptions &opts = {});
std::vector<EisensteinInt> canonical_divisors(const PrimeFactorization &f);

/// sigma_star(x) == (1 - w) * x.
bool is_perfect(const EisensteinInt &x, const FactorOptions &opts = {});

/// N(sigma_star(x)) == 3 N(x).
bool is_norm_perfect(const EisensteinInt &x, const FactorOptions &opts = {});

struct DivisorReport {
    EisensteinInt subject;
    EisensteinInt sigma_star;
    Integer norm_subject;
    Integer norm_sigma;
    bool is_perfect = false;
    bool is_norm_perfect = false;
};

DivisorReport divisor_report(const EisensteinInt &x, const FactorOptions &opts = {});
DivisorReport divisor_report(const EisensteinInt &x, const PrimeFactorization &f);

struct ConjectureWitness {
    EisensteinInt prime;
    unsigned long exponent;
    EisensteinInt cube_root; // gamma, may be a unit
};

/// Structural check of the odd norm-perfect shape x ~ pi^k gamma^3 with
/// k = 2 (mod 3), pi and gamma odd and coprime. Returns the witness on a match.
/// Throws std::domain_error when x is zero or even.
std::optional<ConjectureWitness> matches_odd_conjecture(const EisensteinInt &x,
                                                        const FactorOptions &opts = {});

} // namespace eisen
