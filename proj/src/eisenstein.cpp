#include "eisen/eisenstein.hpp"

namespace eisen {

EisensteinInt operator+(const EisensteinInt &x, const EisensteinInt &y)
{
    return {Integer(x.a + y.a), Integer(x.b + y.b)};
}

EisensteinInt operator-(const EisensteinInt &x, const EisensteinInt &y)
{
    return {Integer(x.a - y.a), Integer(x.b - y.b)};
}

EisensteinInt operator-(const EisensteinInt &x)
{
    return {Integer(-x.a), Integer(-x.b)};
}

// (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, and w^2 = -1 - w.
EisensteinInt operator*(const EisensteinInt &x, const EisensteinInt &y)
{
    Integer bd = x.b * y.b;
    return {Integer(x.a * y.a - bd), Integer(x.a * y.b + x.b * y.a - bd)};
}

EisensteinInt conjugate(const EisensteinInt &x)
{
    return {Integer(x.a - x.b), Integer(-x.b)};
}

Integer norm(const EisensteinInt &x)
{
    return x.a * x.a - x.a * x.b + x.b * x.b;
}

EisensteinInt pow(EisensteinInt x, unsigned long k)
{
    EisensteinInt result{1, 0};
    while (k > 0) {
        if (k & 1)
            result = result * x;
        k >>= 1;
        if (k > 0)
            x = x * x;
    }
    return result;
}

namespace {

// Nearest integer to num/den (den > 0), ties toward -inf: ceil((2num - den) / 2den).
Integer round_half_down(const Integer &num, const Integer &den)
{
    Integer q;
    Integer n2 = 2 * num - den;
    Integer d2 = 2 * den;
    mpz_cdiv_q(q.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
    return q;
}

} // namespace

DivMod divmod(const EisensteinInt &x, const EisensteinInt &y)
{
    if (y.is_zero())
        throw DivisionByZero();
    // x / y = x * conj(y) / N(y), taken coordinate-wise in the (1, w) basis.
    EisensteinInt num = x * conjugate(y);
    Integer n = norm(y);
    EisensteinInt q{round_half_down(num.a, n), round_half_down(num.b, n)};
    EisensteinInt r = x - q * y;
    return {std::move(q), std::move(r)};
}

bool divides(const EisensteinInt &d, const EisensteinInt &x)
{
    if (d.is_zero())
        return x.is_zero();
    EisensteinInt num = x * conjugate(d);
    Integer n = norm(d);
    return mpz_divisible_p(num.a.get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(num.b.get_mpz_t(), n.get_mpz_t());
}

EisensteinInt exact_div(const EisensteinInt &x, const EisensteinInt &d)
{
    if (d.is_zero())
        throw DivisionByZero();
    EisensteinInt num = x * conjugate(d);
    Integer n = norm(d);
    if (!mpz_divisible_p(num.a.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.b.get_mpz_t(), n.get_mpz_t()))
        throw NotDivisible("exact_div: divisor does not divide dividend");
    EisensteinInt q;
    mpz_divexact(q.a.get_mpz_t(), num.a.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.b.get_mpz_t(), num.b.get_mpz_t(), n.get_mpz_t());
    return q;
}

bool is_unit(const EisensteinInt &x)
{
    return norm(x) == 1;
}

const std::array<EisensteinInt, 6> &all_units()
{
    static const std::array<EisensteinInt, 6> u{units::one,     units::minus_one,
                                                units::w,       units::minus_w,
                                                units::one_plus_w, units::minus_one_minus_w};
    return u;
}

EisensteinInt unit_inverse(const EisensteinInt &u)
{
    if (!is_unit(u))
        throw std::domain_error("unit_inverse: argument is not a unit");
    // u^-1 = conj(u) since N(u) = 1.
    return conjugate(u);
}

std::array<EisensteinInt, 6> associates(const EisensteinInt &x)
{
    const auto &u = all_units();
    return {x * u[0], x * u[1], x * u[2], x * u[3], x * u[4], x * u[5]};
}

bool in_region(const EisensteinInt &x)
{
    return x.a > x.b && sgn(x.b) >= 0;
}

Canonical canonicalize(const EisensteinInt &x)
{
    if (x.is_zero())
        throw std::domain_error("canonicalize: zero has no canonical associate");
    const auto &u = all_units();
    for (const auto &unit : u) {
        EisensteinInt candidate = x * unit;
        if (in_region(candidate))
            return {unit_inverse(unit), std::move(candidate)};
    }
    throw std::logic_error("canonicalize: no associate in region");
}

bool is_even(const EisensteinInt &x)
{
    Integer s = x.a + x.b;
    return mpz_divisible_ui_p(s.get_mpz_t(), 3) != 0;
}

EisensteinInt gcd(EisensteinInt x, EisensteinInt y)
{
    if (x.is_zero() && y.is_zero())
        throw std::domain_error("gcd: both arguments are zero");
    while (!y.is_zero()) {
        EisensteinInt r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return canonicalize(x).canonical;
}

} // namespace eisen
