#include "eisen/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace eisen {

FactorOptions FactorOptions::from_environment()
{
    FactorOptions opts;
    if (const char *env = std::getenv("EISEN_FACTOR_EFFORT")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            opts.max_rho_iterations = v;
    }
    return opts;
}

std::span<const std::uint32_t> small_primes()
{
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialDivisionLimit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < kTrialDivisionLimit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < kTrialDivisionLimit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool is_strong_probable_prime(const Integer &n, const Integer &base)
{
    if (n < 2)
        return false;
    if (n == 2)
        return true;
    if (mpz_even_p(n.get_mpz_t()))
        return false;

    Integer n_minus_1 = n - 1;
    Integer d = n_minus_1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    Integer a = base % n;
    if (sgn(a) == 0)
        return true;
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n_minus_1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

namespace {

Integer mod(const Integer &x, const Integer &n)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    return r;
}

// (x / 2) mod n for odd n.
Integer half_mod(Integer x, const Integer &n)
{
    if (mpz_odd_p(x.get_mpz_t()))
        x += n;
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    return mod(x, n);
}

} // namespace

// Selfridge method A parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1, P = 1, Q = (1 - D)/4.
bool is_strong_lucas_probable_prime(const Integer &n)
{
    if (n < 2)
        return false;
    if (n == 2)
        return true;
    if (mpz_even_p(n.get_mpz_t()))
        return false;
    if (mpz_perfect_square_p(n.get_mpz_t()))
        return false;

    long d_abs = 5;
    int d_sign = 1;
    Integer D;
    for (;;) {
        D = d_sign * d_abs;
        int j = mpz_jacobi(D.get_mpz_t(), n.get_mpz_t());
        if (j == -1)
            break;
        if (j == 0 && abs(D) != n)
            return false;
        d_abs += 2;
        d_sign = -d_sign;
    }
    const Integer P = 1;
    const Integer Q = (1 - D) / 4;

    Integer d = n + 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    Integer U = 1;
    Integer V = P;
    Integer Qk = mod(Q, n);
    const Integer Dn = mod(D, n);
    const Integer Qn = mod(Q, n);
    for (long bit = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
        U = mod(U * V, n);
        V = mod(V * V - 2 * Qk, n);
        Qk = mod(Qk * Qk, n);
        if (mpz_tstbit(d.get_mpz_t(), bit)) {
            Integer u2 = half_mod(P * U + V, n);
            Integer v2 = half_mod(Dn * U + P * V, n);
            U = std::move(u2);
            V = std::move(v2);
            Qk = mod(Qk * Qn, n);
        }
    }
    if (sgn(U) == 0 || sgn(V) == 0)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        V = mod(V * V - 2 * Qk, n);
        if (sgn(V) == 0)
            return true;
        Qk = mod(Qk * Qk, n);
    }
    return false;
}

bool is_rational_prime(const Integer &n)
{
    if (n < 2)
        return false;
    for (std::uint32_t p : small_primes()) {
        if (Integer(p) * p > n)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return n == p;
    }
    static const unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned long b : bases)
        if (!is_strong_probable_prime(n, Integer(b)))
            return false;
    static const Integer deterministic_bound("318665857834031151167461", 10);
    if (n < deterministic_bound)
        return true;
    return is_strong_lucas_probable_prime(n);
}

namespace {

// Brent's variant of Pollard rho with f(x) = x^2 + c. Returns a nontrivial
// factor of composite n, consuming from budget.
Integer pollard_brent(const Integer &n, std::uint64_t &budget)
{
    const std::uint64_t batch = 128;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        std::uint64_t r = 1;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i)
                y = mod(y * y + c, n);
            std::uint64_t k = 0;
            do {
                ys = y;
                std::uint64_t steps = std::min(batch, r - k);
                if (budget < steps)
                    throw FactorEffortExceeded("factorization effort bound exceeded for " +
                                               std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) +
                                               "-digit cofactor");
                budget -= steps;
                for (std::uint64_t i = 0; i < steps; ++i) {
                    y = mod(y * y + c, n);
                    q = mod(q * abs(x - y), n);
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += steps;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);

        if (g == n) {
            // Batch overshot; step back one at a time.
            do {
                ys = mod(ys * ys + c, n);
                mpz_gcd(g.get_mpz_t(), Integer(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_cofactor(const Integer &n, std::map<Integer, unsigned long> &out, std::uint64_t &budget)
{
    if (n == 1)
        return;
    if (is_rational_prime(n)) {
        ++out[n];
        return;
    }
    Integer root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        factor_cofactor(root, out, budget);
        factor_cofactor(root, out, budget);
        return;
    }
    Integer f = pollard_brent(n, budget);
    factor_cofactor(f, out, budget);
    factor_cofactor(Integer(n / f), out, budget);
}

} // namespace

std::vector<PrimePower> factor_integer(const Integer &n, const FactorOptions &opts)
{
    if (n < 1)
        throw std::domain_error("factor_integer: argument must be positive");
    std::map<Integer, unsigned long> found;
    Integer rest = n;
    for (std::uint32_t p : small_primes()) {
        if (Integer(p) * p > rest)
            break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned long e = 0;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            }
            found[Integer(p)] += e;
        }
    }
    std::uint64_t budget = opts.max_rho_iterations;
    factor_cofactor(rest, found, budget);

    std::vector<PrimePower> out;
    out.reserve(found.size());
    for (auto &[p, e] : found)
        out.push_back({p, e});
    return out;
}

bool sqrt_mod_prime(const Integer &a_in, const Integer &p, Integer &root)
{
    Integer a = mod(a_in, p);
    if (sgn(a) == 0) {
        root = 0;
        return true;
    }
    if (p == 2) {
        root = a;
        return true;
    }
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1)
        return false;

    // Tonelli-Shanks.
    Integer q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1)
        ++z;

    Integer c, t, r, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Integer t2 = t;
        while (t2 != 1) {
            t2 = mod(t2 * t2, p);
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j)
            b = mod(b * b, p);
        m = i;
        c = mod(b * b, p);
        t = mod(t * c, p);
        r = mod(r * b, p);
    }
    root = r;
    return true;
}

} // namespace eisen
