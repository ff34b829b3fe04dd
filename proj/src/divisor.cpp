#include "eisen/divisor.hpp"

#include <stdexcept>

namespace eisen {

Integer rational_sigma(const Integer &n, const FactorOptions &opts)
{
    if (n < 1)
        throw std::domain_error("rational_sigma: argument must be positive");
    Integer out = 1;
    for (const auto &[p, e] : factor_integer(n, opts)) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e + 1);
        out *= (pk - 1) / (p - 1);
    }
    return out;
}

namespace {

EisensteinInt geometric_sum(const EisensteinInt &prime, unsigned long k)
{
    EisensteinInt num = pow(prime, k + 1) - units::one;
    EisensteinInt den = prime - units::one;
    try {
        return exact_div(num, den);
    } catch (const NotDivisible &) {
        // pi - 1 always divides pi^(k+1) - 1; reaching here means the factorization is wrong.
        throw std::logic_error("sigma_star: inexact geometric-series division");
    }
}

} // namespace

EisensteinInt sigma_star(const PrimeFactorization &f)
{
    EisensteinInt out = units::one;
    for (const auto &[prime, k] : f.factors)
        out = out * geometric_sum(prime, k);
    return out;
}

EisensteinInt sigma_star(const EisensteinInt &x, const FactorOptions &opts)
{
    return sigma_star(factor(x, opts));
}

std::vector<EisensteinInt> canonical_divisors(const PrimeFactorization &f)
{
    std::vector<EisensteinInt> out{units::one};
    // Appending prime by prime from the last keeps the first prime most significant.
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
        std::vector<EisensteinInt> next;
        next.reserve(out.size() * (it->exponent + 1));
        EisensteinInt power = units::one;
        for (unsigned long j = 0; j <= it->exponent; ++j) {
            for (const auto &d : out)
                next.push_back(power * d);
            power = power * it->prime;
        }
        out = std::move(next);
    }
    return out;
}

std::vector<EisensteinInt> canonical_divisors(const EisensteinInt &x, const FactorOptions &opts)
{
    return canonical_divisors(factor(x, opts));
}

bool is_perfect(const EisensteinInt &x, const FactorOptions &opts)
{
    return sigma_star(x, opts) == one_minus_w * x;
}

bool is_norm_perfect(const EisensteinInt &x, const FactorOptions &opts)
{
    return norm(sigma_star(x, opts)) == 3 * norm(x);
}

DivisorReport divisor_report(const EisensteinInt &x, const PrimeFactorization &f)
{
    DivisorReport r;
    r.subject = x;
    r.sigma_star = sigma_star(f);
    r.norm_subject = norm(x);
    r.norm_sigma = norm(r.sigma_star);
    r.is_perfect = r.sigma_star == one_minus_w * x;
    r.is_norm_perfect = r.norm_sigma == 3 * r.norm_subject;
    return r;
}

DivisorReport divisor_report(const EisensteinInt &x, const FactorOptions &opts)
{
    return divisor_report(x, factor(x, opts));
}

std::optional<ConjectureWitness> matches_odd_conjecture(const EisensteinInt &x,
                                                        const FactorOptions &opts)
{
    if (x.is_zero())
        throw std::domain_error("matches_odd_conjecture: zero input");
    if (is_even(x))
        throw std::domain_error("matches_odd_conjecture: input is even");

    PrimeFactorization f = factor(x, opts);
    const Factor *special = nullptr;
    EisensteinInt gamma = units::one;
    for (const auto &factor : f.factors) {
        unsigned long r = factor.exponent % 3;
        if (r == 2) {
            if (special)
                return std::nullopt;
            special = &factor;
        } else if (r == 1) {
            return std::nullopt;
        } else {
            gamma = gamma * pow(factor.prime, factor.exponent / 3);
        }
    }
    if (!special || is_even(special->prime) || is_even(gamma))
        return std::nullopt;
    if (divides(special->prime, gamma))
        return std::nullopt;
    return ConjectureWitness{special->prime, special->exponent, gamma};
}

} // namespace eisen
