// Acceptance suite: one pass/fail line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "eisen/divisor.hpp"
#include "eisen/eisenstein.hpp"
#include "eisen/factorization.hpp"
#include "eisen/mersenne.hpp"
#include "eisen/report.hpp"
#include "eisen/scan.hpp"
#include "eisen/text.hpp"
#include "oracle.hpp"

#ifndef EISEN_CLI_PATH
#error "EISEN_CLI_PATH must name the eisen executable"
#endif

using namespace eisen;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

EisensteinInt sum(const std::vector<EisensteinInt> &xs)
{
    EisensteinInt s{0, 0};
    for (const auto &x : xs)
        s = s + x;
    return s;
}

std::string read_file(const fs::path &p)
{
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

int shell(const std::string &cmd)
{
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// 1. Mersenne scan to 160 finds exactly the known exponent set.
Outcome mersenne_scan()
{
    Outcome o;
    fs::path out = fs::temp_directory_path() / "eisen_acc_mersenne.jsonl";
    int rc = shell(std::string(EISEN_CLI_PATH) + " mersenne --max 160 --json > " + out.string());
    o.require(rc == 0, "CLI exit code " + std::to_string(rc));
    std::set<unsigned long> primes;
    std::istringstream is(read_file(out));
    for (std::string line; std::getline(is, line);) {
        auto r = mersenne_record_from_json(Json::parse(line));
        if (r.prime)
            primes.insert(r.p);
    }
    fs::remove(out);
    o.require(primes == std::set<unsigned long>{2, 5, 7, 11, 17, 19, 79}, "prime exponent set differs");
    o.detail = o.pass ? "prime exponents {2,5,7,11,17,19,79}" : o.detail;
    return o;
}

// 2. Worked examples for M_2, M_3 and the ramification of 3.
Outcome worked_examples()
{
    Outcome o;
    auto m2 = mersenne_number(2);
    auto m3 = mersenne_number(3);
    o.require(m2 == EisensteinInt(-1, -3) && norm(m2) == 7, "M_2 value or norm");
    o.require(is_mersenne_prime(2) && is_prime(m2), "M_2 prime");
    o.require(m3 == EisensteinInt(-4, -6) && norm(m3) == 28, "M_3 value or norm");
    o.require(!is_mersenne_prime(3) && !is_prime(m3), "M_3 composite");
    auto f = factor(EisensteinInt(3));
    o.require(f.unit == units::one_plus_w, "unit of 3 is -w^2 = 1+w");
    o.require(f.factors.size() == 1 && f.factors[0].prime == one_minus_w && f.factors[0].exponent == 2,
              "3 = unit * (1-w)^2");
    if (o.pass)
        o.detail = "N(M_2)=7 prime, N(M_3)=28 composite, 3 = (1+w)(1-w)^2";
    return o;
}

// 3. Euclid-form norm-perfect instance for k = 11.
Outcome euclid_instance()
{
    Outcome o;
    auto alpha = euclid_norm_perfect(11);
    Integer expected = Integer(59049) * 176419;
    o.require(oracle::is_rational_prime_brute(176419), "176419 prime by trial division");
    o.require(alpha == pow(one_minus_w, 10) * mersenne_number(11), "alpha construction");
    o.require(is_even(alpha), "alpha even");
    o.require(norm(alpha) == expected, "N(alpha) = 3^10 * 176419");
    o.require(norm(sigma_star(alpha)) == 3 * norm(alpha), "N(sigma*(alpha)) = 3 N(alpha)");
    if (o.pass)
        o.detail = "N(alpha)=" + norm(alpha).get_str() + ", N(sigma*)=" + norm(sigma_star(alpha)).get_str();
    return o;
}

// 4. Period-12 closed form against direct powers.
Outcome table_oracle()
{
    Outcome o;
    for (unsigned long p = 1; p <= 240; ++p)
        o.require(power_table_entry(p) == pow(one_minus_w, p), "mismatch at p=" + std::to_string(p));
    if (o.pass)
        o.detail = "1 <= p <= 240";
    return o;
}

// 5. sigma* against the divisor expansion for every nonzero element of norm <= 10^4.
Outcome sigma_oracle()
{
    Outcome o;
    std::size_t count = 0;
    for (const auto &s : oracle::ball(10'000)) {
        auto x = oracle::big(s);
        if (x.is_zero())
            continue;
        ++count;
        o.require(sigma_star(x) == sum(canonical_divisors(x)), "mismatch at " + format_eisenstein(x));
    }
    if (o.pass)
        o.detail = std::to_string(count) + " elements";
    return o;
}

// 6. Three evenness tests agree for |a|, |b| <= 50.
Outcome evenness()
{
    Outcome o;
    for (long a = -50; a <= 50; ++a)
        for (long b = -50; b <= 50; ++b) {
            EisensteinInt x(a, b);
            bool coeff = is_even(x);
            bool div = divides(one_minus_w, x);
            bool nrm = mpz_divisible_ui_p(norm(x).get_mpz_t(), 3) != 0;
            o.require(coeff == div && div == nrm, "disagreement at " + format_eisenstein(x));
        }
    if (o.pass)
        o.detail = "101 x 101 grid";
    return o;
}

// 7. Randomized property suites, 10^4 cases each.
Outcome properties()
{
    constexpr int kCases = 10'000;
    Outcome o;

    for (int i = 0; i < kCases; ++i) {
        auto x = i % 2 ? gen::huge(40) : gen::element(1'000'000);
        auto y = i % 3 ? gen::huge(25) : gen::element(1000);
        o.require(norm(x * y) == norm(x) * norm(y), "norm multiplicativity");
    }

    for (int i = 0; i < kCases; ++i) {
        auto x = i % 2 ? gen::huge(50) : gen::element(1'000'000);
        auto y = i % 2 ? gen::huge(20) : gen::nonzero(1000);
        if (y.is_zero())
            continue;
        auto [q, r] = divmod(x, y);
        o.require(q * y + r == x, "divmod identity");
        o.require(norm(r) < norm(y), "divmod remainder bound");
        o.require(4 * norm(r) <= 3 * norm(y), "divmod rounding bound");
    }

    for (int i = 0; i < kCases; ++i) {
        auto x = i % 2 ? gen::nonzero(200) : gen::nonzero(30) * gen::nonzero(30) * gen::nonzero(30);
        o.require(factor(x).recompose() == x, "factor round trip at " + format_eisenstein(x));
    }

    int coprime = 0;
    while (coprime < kCases) {
        auto x = gen::nonzero(60);
        auto y = gen::nonzero(60);
        if (!is_unit(gcd(x, y)))
            continue;
        ++coprime;
        o.require(sigma_star(x * y) == sigma_star(x) * sigma_star(y),
                  "sigma* multiplicativity at " + format_eisenstein(x) + ", " + format_eisenstein(y));
    }

    for (int i = 0; i < kCases; ++i) {
        auto x = gen::nonzero(500);
        const auto &u = all_units()[gen::uniform(0, 5)];
        o.require(sigma_star(x * u) == sigma_star(x), "sigma* associate invariance");
    }

    std::size_t unit_count = 0;
    std::set<std::pair<long, long>> unit_set;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            if (is_unit(EisensteinInt(a, b))) {
                ++unit_count;
                unit_set.insert({a, b});
            }
    o.require(unit_count == 6, "six units");
    for (const auto &u : all_units())
        o.require(unit_set.count({u.a.get_si(), u.b.get_si()}) == 1, "unit list");
    for (int i = 0; i < kCases; ++i) {
        auto x = i % 2 ? gen::huge(30) : gen::nonzero(10'000);
        auto assoc = associates(x);
        std::set<std::string> distinct;
        int in_region_count = 0;
        for (const auto &y : assoc) {
            distinct.insert(format_eisenstein(y));
            in_region_count += in_region(y);
            o.require(norm(y) == norm(x), "associate norm");
        }
        o.require(distinct.size() == 6, "six distinct associates");
        o.require(in_region_count == 1, "one associate in region");
    }
    if (o.pass)
        o.detail = "6 suites x 10^4 cases";
    return o;
}

// 8. Desk-scale scan with oracle-checked hits and kill/resume determinism.
Outcome desk_scan()
{
    Outcome o;
    const std::string cli = EISEN_CLI_PATH;
    const fs::path dir = fs::temp_directory_path() / "eisen_acceptance_scan";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path full = dir / "full.jsonl";
    const fs::path resumed = dir / "resumed.jsonl";
    const fs::path cp = dir / "scan.checkpoint";

    int rc = shell(cli + " scan --max-norm 100000 > " + full.string());
    o.require(rc == 0, "uninterrupted scan exit code " + std::to_string(rc));

    std::size_t hits = 0;
    std::uint64_t examined = 0;
    std::istringstream is(read_file(full));
    for (std::string line; std::getline(is, line);) {
        Json j = Json::parse(line);
        if (j.contains("summary")) {
            examined = j["summary"]["examined"].get<std::uint64_t>();
            o.require(j["summary"]["skipped"] == 0, "skipped candidates in desk scan");
            continue;
        }
        auto r = report_record_from_json(j);
        o.require(!r.skipped, "skipped row " + r.subject);
        auto x = parse_eisenstein(r.subject);
        auto s = sum(canonical_divisors(x));
        o.require(norm(s) == 3 * norm(x), "hit fails N(sigma*) = 3N for " + r.subject);
        o.require(r.sigma_star && *r.sigma_star == format_eisenstein(s), "sigma* disagrees for " + r.subject);
        ++hits;
    }
    o.require(examined == region_cells(100000).size(), "examined count");

    // Kill the process with SIGKILL at seeded pseudo-random moments, then resume.
    std::mt19937_64 rng(0x5CA11ED);
    const std::string base = cli + " scan --max-norm 100000 --checkpoint-every 2000 --checkpoint " + cp.string() +
                             " --resume";
    int kills = 0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        double delay = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", delay);
        int code = shell("timeout -s KILL " + std::string(buf) + " " + base + " > " + resumed.string() +
                         " 2>/dev/null");
        kills += code == 137 || code == 124;
    }
    rc = shell(base + " > " + resumed.string());
    o.require(rc == 0, "resumed scan exit code " + std::to_string(rc));
    o.require(kills > 0, "no run was actually interrupted");
    o.require(read_file(full) == read_file(resumed), "resumed output differs from uninterrupted output");
    fs::remove_all(dir);
    if (o.pass)
        o.detail = std::to_string(examined) + " candidates, " + std::to_string(hits) + " hits, " +
                   std::to_string(kills) + " kills, byte-identical resume";
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"AC1 Mersenne scan reproduction", mersenne_scan},
        {"AC2 worked examples", worked_examples},
        {"AC3 Euclid-form instance k=11", euclid_instance},
        {"AC4 closed-form power table", table_oracle},
        {"AC5 sigma* divisor-sum oracle", sigma_oracle},
        {"AC6 evenness triple equivalence", evenness},
        {"AC7 property suites", properties},
        {"AC8 desk-scale scan and resume", desk_scan},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::printf("[%s] %-34s %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
