#include "eisen/mersenne.hpp"

#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "eisen/rational.hpp"

namespace eisen {

EisensteinInt mersenne_number(unsigned long k)
{
    return pow(one_minus_w, k) - units::one;
}

EisensteinInt power_table_entry(unsigned long p)
{
    if (p == 0)
        return units::one;
    // Multipliers of 3^h for columns p = 1..12 (mod 12).
    static const int coeff[12][2] = {
        {1, -1},  {0, -1}, {-1, -2}, {-1, -1}, {-2, -1}, {-1, 0},
        {-1, 1},  {0, 1},  {1, 2},   {1, 1},   {2, 1},   {1, 0},
    };
    const auto &c = coeff[(p - 1) % 12];
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 3, p / 2);
    return {Integer(c[0] * scale), Integer(c[1] * scale)};
}

bool is_mersenne_prime(unsigned long p)
{
    if (!is_rational_prime(Integer(p)))
        return false;
    Integer n = norm(mersenne_number(p));
    // Associates of an inert prime q have norm q^2; M_p is never one of them.
    if (mpz_perfect_square_p(n.get_mpz_t()))
        throw std::logic_error("is_mersenne_prime: norm of M_" + std::to_string(p) + " is a square");
    return is_rational_prime(n);
}

MersenneRecord mersenne_record(unsigned long p)
{
    MersenneRecord r;
    r.p = p;
    r.value = mersenne_number(p);
    r.norm = norm(r.value);
    r.prime = is_mersenne_prime(p);
    r.p_mod_12 = static_cast<unsigned>(p % 12);
    r.in_region = in_region(r.value);
    return r;
}

std::vector<MersenneRecord> scan_mersenne(unsigned long max_exponent, unsigned workers)
{
    std::vector<unsigned long> exponents;
    for (unsigned long p = 2; p <= max_exponent; ++p)
        if (is_rational_prime(Integer(p)))
            exponents.push_back(p);

    std::vector<MersenneRecord> out(exponents.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < exponents.size(); i = next++)
            out[i] = mersenne_record(exponents[i]);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    return out;
}

EisensteinInt euclid_norm_perfect(unsigned long k)
{
    using Reason = EuclidPreconditionError::Reason;
    if (k % 12 != 11)
        throw EuclidPreconditionError(Reason::residue_class,
                                      "k = " + std::to_string(k) + " is " + std::to_string(k % 12) +
                                          " (mod 12), not 11");
    if (!is_mersenne_prime(k))
        throw EuclidPreconditionError(Reason::not_mersenne_prime,
                                      "M_" + std::to_string(k) + " is not an Eisenstein Mersenne prime");
    return pow(one_minus_w, k - 1) * mersenne_number(k);
}

} // namespace eisen
