#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "eisen/eisenstein.hpp"

namespace eisen {

/// M_k = (1 - w)^k - 1.
EisensteinInt mersenne_number(unsigned long k);

/// Closed form of (1 - w)^p from the period-12 pattern: both coefficients are
/// a small multiple of 3^floor(p/2), selected by p mod 12.
EisensteinInt power_table_entry(unsigned long p);

/// p is a rational prime and M_p is prime in Z[w]. Decided by the primality of N(M_p).
bool is_mersenne_prime(unsigned long p);

struct MersenneRecord {
    unsigned long p = 0;
    EisensteinInt value;
    Integer norm;
    bool prime = false;
    unsigned p_mod_12 = 0;
    bool in_region = false;
};

MersenneRecord mersenne_record(unsigned long p);

/// Records for every prime exponent p <= max_exponent, ascending in p.
/// With workers > 1 exponents are evaluated concurrently; output order is unchanged.
std::vector<MersenneRecord> scan_mersenne(unsigned long max_exponent, unsigned workers = 1);

class EuclidPreconditionError : public std::domain_error {
public:
    enum class Reason { residue_class, not_mersenne_prime };

    EuclidPreconditionError(Reason reason, const std::string &what)
        : std::domain_error(what), reason_(reason)
    {
    }
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// (1 - w)^(k-1) * M_k for k = 11 (mod 12) with M_k an Eisenstein Mersenne prime.
EisensteinInt euclid_norm_perfect(unsigned long k);

} // namespace eisen
