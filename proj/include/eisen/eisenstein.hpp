#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace eisen {

using Integer = mpz_class;

/// Element a + b*w of Z[w], where w is a primitive cube root of unity (w^2 = -1 - w).
/// Any coefficient pair is a valid value; equality is coefficient-wise.
struct EisensteinInt {
    Integer a;
    Integer b;

    EisensteinInt() = default;
    EisensteinInt(Integer a_, Integer b_) : a(std::move(a_)), b(std::move(b_)) {}
    EisensteinInt(long a_, long b_) : a(a_), b(b_) {}
    explicit EisensteinInt(long a_) : a(a_), b(0) {}
    explicit EisensteinInt(Integer a_) : a(std::move(a_)), b(0) {}

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }

    friend bool operator==(const EisensteinInt &x, const EisensteinInt &y)
    {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const EisensteinInt &x, const EisensteinInt &y) { return !(x == y); }
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero in Z[w]") {}
};

/// Raised when exact_div is asked to divide by something that is not a divisor.
class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

EisensteinInt operator+(const EisensteinInt &x, const EisensteinInt &y);
EisensteinInt operator-(const EisensteinInt &x, const EisensteinInt &y);
EisensteinInt operator-(const EisensteinInt &x);
EisensteinInt operator*(const EisensteinInt &x, const EisensteinInt &y);

inline EisensteinInt add(const EisensteinInt &x, const EisensteinInt &y) { return x + y; }
inline EisensteinInt sub(const EisensteinInt &x, const EisensteinInt &y) { return x - y; }
inline EisensteinInt neg(const EisensteinInt &x) { return -x; }
inline EisensteinInt mul(const EisensteinInt &x, const EisensteinInt &y) { return x * y; }

/// Complex conjugate: conj(a + bw) = (a - b) - bw.
EisensteinInt conjugate(const EisensteinInt &x);

/// N(a + bw) = a^2 - ab + b^2.
Integer norm(const EisensteinInt &x);

EisensteinInt pow(EisensteinInt x, unsigned long k);

struct DivMod {
    EisensteinInt quotient;
    EisensteinInt remainder;
};

/// Euclidean division. The quotient is x/y rounded coordinate-wise to the
/// nearest integer (ties toward -inf), so norm(remainder) <= 3/4 norm(y).
DivMod divmod(const EisensteinInt &x, const EisensteinInt &y);

bool divides(const EisensteinInt &d, const EisensteinInt &x);
EisensteinInt exact_div(const EisensteinInt &x, const EisensteinInt &d);

bool is_unit(const EisensteinInt &x);

namespace units {
inline const EisensteinInt one{1, 0};
inline const EisensteinInt minus_one{-1, 0};
inline const EisensteinInt w{0, 1};
inline const EisensteinInt minus_w{0, -1};
inline const EisensteinInt one_plus_w{1, 1};        // -w^2
inline const EisensteinInt minus_one_minus_w{-1, -1}; // w^2
} // namespace units

/// The six units in their external order: 1, -1, w, -w, 1+w, -1-w.
const std::array<EisensteinInt, 6> &all_units();

/// Multiplicative inverse of a unit.
EisensteinInt unit_inverse(const EisensteinInt &u);

/// x times each unit, in all_units() order.
std::array<EisensteinInt, 6> associates(const EisensteinInt &x);

/// a > b >= 0: the sector holding exactly one associate of every nonzero element.
bool in_region(const EisensteinInt &x);

struct Canonical {
    EisensteinInt unit;
    EisensteinInt canonical;
};

/// Splits nonzero x as unit * canonical with canonical in the region.
/// Throws std::domain_error on zero.
Canonical canonicalize(const EisensteinInt &x);

/// Divisibility by 1 - w, via a + b = 0 (mod 3).
bool is_even(const EisensteinInt &x);

/// Canonical gcd. Throws std::domain_error if both inputs are zero.
EisensteinInt gcd(EisensteinInt x, EisensteinInt y);

/// 1 - w, the prime of norm 3.
inline const EisensteinInt one_minus_w{1, -1};

} // namespace eisen
