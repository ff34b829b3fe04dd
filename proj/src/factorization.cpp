#include "eisen/factorization.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "eisen/text.hpp"

namespace eisen {

EisensteinInt PrimeFactorization::recompose() const
{
    EisensteinInt out = unit;
    for (const auto &f : factors)
        out = out * pow(f.prime, f.exponent);
    return out;
}

EisensteinInt canonical_prime(const EisensteinInt &prime)
{
    if (norm(prime) == 3)
        return one_minus_w;
    return canonicalize(prime).canonical;
}

bool prime_order_less(const EisensteinInt &x, const EisensteinInt &y)
{
    Integer nx = norm(x), ny = norm(y);
    if (nx != ny)
        return nx < ny;
    if (x.a != y.a)
        return x.a < y.a;
    return x.b < y.b;
}

EisensteinInt prime_above(const Integer &p)
{
    if (mpz_fdiv_ui(p.get_mpz_t(), 3) != 1 || !is_rational_prime(p))
        throw std::domain_error("prime_above: " + p.get_str() + " is not a prime = 1 (mod 3)");
    // u^2 + u + 1 = 0 (mod p) means p | N(u - w), so gcd(p, u - w) has norm p.
    Integer t;
    if (!sqrt_mod_prime(Integer(-3), p, t))
        throw std::logic_error("prime_above: -3 is not a square modulo " + p.get_str());
    Integer u = t - 1;
    if (mpz_odd_p(u.get_mpz_t()))
        u += p;
    u /= 2;
    EisensteinInt g = gcd(EisensteinInt(p), EisensteinInt(u, Integer(-1)));
    if (norm(g) != p)
        throw std::logic_error("prime_above: gcd has norm " + norm(g).get_str());
    return g;
}

PrimeFactorization split_rational_prime(const Integer &p)
{
    if (!is_rational_prime(p))
        throw std::domain_error("split_rational_prime: " + p.get_str() + " is not prime");
    PrimeFactorization out;
    unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 3);
    EisensteinInt target(p);
    if (r == 0) {
        out.factors.push_back({one_minus_w, 2});
    } else if (r == 2) {
        out.factors.push_back({target, 1});
    } else {
        EisensteinInt pi = prime_above(p);
        EisensteinInt pi_bar = canonicalize(conjugate(pi)).canonical;
        out.factors.push_back({pi, 1});
        out.factors.push_back({pi_bar, 1});
        std::sort(out.factors.begin(), out.factors.end(),
                  [](const Factor &x, const Factor &y) { return prime_order_less(x.prime, y.prime); });
    }
    EisensteinInt product{1, 0};
    for (const auto &f : out.factors)
        product = product * pow(f.prime, f.exponent);
    out.unit = exact_div(target, product);
    return out;
}

bool is_prime(const EisensteinInt &x)
{
    Integer n = norm(x);
    if (n < 2)
        return false;
    if (is_rational_prime(n))
        return true;
    if (!mpz_perfect_square_p(n.get_mpz_t()))
        return false;
    Integer q;
    mpz_sqrt(q.get_mpz_t(), n.get_mpz_t());
    if (mpz_fdiv_ui(q.get_mpz_t(), 3) != 2 || !is_rational_prime(q))
        return false;
    return canonicalize(x).canonical == EisensteinInt(q);
}

namespace {

unsigned long strip(EisensteinInt &residual, const EisensteinInt &prime)
{
    unsigned long k = 0;
    while (divides(prime, residual)) {
        residual = exact_div(residual, prime);
        ++k;
    }
    return k;
}

} // namespace

PrimeFactorization factor(const EisensteinInt &x, const FactorOptions &opts)
{
    if (x.is_zero())
        throw std::domain_error("factor: zero has no factorization");

    PrimeFactorization out;
    EisensteinInt residual = x;
    for (const auto &[p, e] : factor_integer(norm(x), opts)) {
        unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 3);
        if (r == 0) {
            unsigned long k = strip(residual, one_minus_w);
            if (k != e)
                throw std::logic_error("factor: exponent mismatch at 1-w");
            out.factors.push_back({one_minus_w, k});
        } else if (r == 2) {
            EisensteinInt q(p);
            unsigned long k = strip(residual, q);
            if (2 * k != e)
                throw std::logic_error("factor: exponent mismatch at inert prime " + p.get_str());
            out.factors.push_back({q, k});
        } else {
            EisensteinInt pi = prime_above(p);
            EisensteinInt pi_bar = canonicalize(conjugate(pi)).canonical;
            unsigned long k1 = strip(residual, pi);
            unsigned long k2 = strip(residual, pi_bar);
            if (k1 + k2 != e)
                throw std::logic_error("factor: exponent mismatch above " + p.get_str());
            if (k1 > 0)
                out.factors.push_back({pi, k1});
            if (k2 > 0)
                out.factors.push_back({pi_bar, k2});
        }
    }
    if (!is_unit(residual))
        throw std::logic_error("factor: residual " + format_eisenstein(residual) + " is not a unit");
    out.unit = residual;
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor &a, const Factor &b) { return prime_order_less(a.prime, b.prime); });
    return out;
}

} // namespace eisen
