#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eisen/eisenstein.hpp"

namespace eisen {

/// Work limit for factoring rational integers. Pollard-rho iterations beyond
/// the bound abort the factorization with FactorEffortExceeded.
struct FactorOptions {
    std::uint64_t max_rho_iterations = 20'000'000;

    /// Defaults, overridden by EISEN_FACTOR_EFFORT when set to a positive integer.
    static FactorOptions from_environment();
};

/// The input is too large for the configured effort bound; not a mathematical failure.
class FactorEffortExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PrimePower {
    Integer prime;
    unsigned long exponent;
};

/// Trial division limit; primes below it are tabulated once.
inline constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

std::span<const std::uint32_t> small_primes();

bool is_strong_probable_prime(const Integer &n, const Integer &base);
bool is_strong_lucas_probable_prime(const Integer &n);

/// Trial division below 10^6, then Miller-Rabin on the first twelve prime bases
/// (deterministic below 3.18e23); larger inputs additionally pass a strong Lucas
/// test, which makes the combination a Baillie-PSW test.
bool is_rational_prime(const Integer &n);

/// Prime factorization of n >= 1, ascending by prime. factor_integer(1) is empty.
std::vector<PrimePower> factor_integer(const Integer &n, const FactorOptions &opts = {});

/// Writes a square root of a modulo prime p into root; false if a is a non-residue.
bool sqrt_mod_prime(const Integer &a, const Integer &p, Integer &root);

} // namespace eisen
