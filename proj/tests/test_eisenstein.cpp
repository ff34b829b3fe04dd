#include <algorithm>

#include "support.hpp"

using namespace eisen;

TEST_CASE("add, sub and neg are componentwise")
{
    CHECK(E(1, -1) + E(0, 1) == E(1, 0));
    CHECK(E(0, 0) + E(5, -3) == E(5, -3));
    // M_11 = (1-w)^11 - 1
    CHECK(E(486, 243) + E(-1, 0) == E(485, 243));
    CHECK(E(3, 4) - E(1, 7) == E(2, -3));
    CHECK(-E(3, -4) == E(-3, 4));
}

TEST_CASE("mul")
{
    CHECK(E(1, -1) * E(1, -1) == E(0, -3));
    CHECK(E(1, 0) * E(-7, 12) == E(-7, 12));
    CHECK(E(3, 2) * E(3, 1) == E(7, 7));
    // w^2 = -1 - w, w^3 = 1
    CHECK(E(0, 1) * E(0, 1) == E(-1, -1));
    CHECK(pow(E(0, 1), 3) == E(1, 0));
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(E(2, -1)) == E(3, 1));
    CHECK(conjugate(E(5, 0)) == E(5, 0));
    CHECK(conjugate(E(0, 1)) == E(-1, -1));
    for (int i = 0; i < 200; ++i) {
        auto x = gen::element(1000);
        auto p = x * conjugate(x);
        CHECK(p.a == norm(x));
        CHECK(sgn(p.b) == 0);
    }
}

TEST_CASE("norm")
{
    CHECK(norm(E(1, -1)) == 3);
    CHECK(norm(E(-1, -3)) == 7);
    CHECK(norm(E(-4, -6)) == 28);
    CHECK(norm(E(0, 0)) == 0);
}

TEST_CASE("pow")
{
    CHECK(pow(E(1, -1), 3) == E(-3, -6));
    CHECK(pow(E(1, -1), 11) == E(486, 243));
    CHECK(pow(E(0, 0), 0) == E(1, 0));
    CHECK(pow(E(0, 0), 5) == E(0, 0));
    auto x = E(2, 5);
    EisensteinInt slow{1, 0};
    for (int k = 0; k < 20; ++k) {
        CHECK(pow(x, k) == slow);
        slow = slow * x;
    }
}

TEST_CASE("divmod")
{
    auto [q, r] = divmod(E(5, 0), E(2, 0));
    CHECK((q == E(2, 0) || q == E(3, 0)));
    CHECK(norm(r) == 1);
    CHECK(q * E(2, 0) + r == E(5, 0));

    CHECK(divmod(E(0, -3), E(1, -1)).remainder == E(0, 0));

    auto x = E(17, -9);
    auto self = divmod(x, x);
    CHECK(self.quotient == E(1, 0));
    CHECK(self.remainder == E(0, 0));

    CHECK_THROWS_AS(divmod(E(1, 1), E(0, 0)), DivisionByZero);
}

TEST_CASE("divmod rounds ties toward negative infinity")
{
    // 1/2 and -1/2 both sit exactly between two integers.
    CHECK(divmod(E(1, 0), E(2, 0)).quotient == E(0, 0));
    CHECK(divmod(E(-1, 0), E(2, 0)).quotient == E(-1, 0));
    CHECK(divmod(E(3, 1), E(2, 0)).quotient == E(1, 0));
}

TEST_CASE("divides and exact_div")
{
    CHECK(divides(E(1, -1), E(3, 0)));
    CHECK(divides(E(1, -1), E(1, 2)));
    CHECK_FALSE(divides(E(2, 0), E(1, 0)));
    CHECK(exact_div(E(7, 0), E(3, 1)) * E(3, 1) == E(7, 0));
    CHECK(exact_div(E(7, 7), E(3, 1)) == E(3, 2));
    CHECK_THROWS_AS(exact_div(E(1, 0), E(2, 0)), NotDivisible);
    CHECK_THROWS_AS(exact_div(E(1, 0), E(0, 0)), DivisionByZero);
}

TEST_CASE("units and associates")
{
    CHECK(is_unit(E(1, 1)));
    CHECK_FALSE(is_unit(E(1, -1)));
    CHECK_FALSE(is_unit(E(0, 0)));

    const auto &u = all_units();
    CHECK(u[0] == E(1, 0));
    CHECK(u[1] == E(-1, 0));
    CHECK(u[2] == E(0, 1));
    CHECK(u[3] == E(0, -1));
    CHECK(u[4] == E(1, 1));
    CHECK(u[5] == E(-1, -1));
    for (const auto &unit : u)
        CHECK(unit * unit_inverse(unit) == E(1, 0));
    CHECK_THROWS(unit_inverse(E(2, 0)));

    auto assoc = associates(E(1, -1));
    CHECK(std::find(assoc.begin(), assoc.end(), E(2, 1)) != assoc.end());
    auto ones = associates(E(1, 0));
    CHECK(std::equal(ones.begin(), ones.end(), u.begin()));
    for (const auto &z : associates(E(0, 0)))
        CHECK(z == E(0, 0));
}

TEST_CASE("canonicalize")
{
    auto c = canonicalize(E(1, -1));
    CHECK(c.canonical == E(2, 1));
    CHECK(c.unit * c.canonical == E(1, -1));

    c = canonicalize(E(5, 0));
    CHECK(c.canonical == E(5, 0));
    CHECK(c.unit == E(1, 0));

    CHECK(canonicalize(E(2, -1)).canonical == E(3, 2));
    CHECK_THROWS_AS(canonicalize(E(0, 0)), std::domain_error);

    for (int i = 0; i < 500; ++i) {
        auto x = gen::nonzero(10000);
        auto [unit, canon] = canonicalize(x);
        CHECK(in_region(canon));
        CHECK(unit * canon == x);
        auto again = canonicalize(canon);
        CHECK(again.unit == E(1, 0));
        CHECK(again.canonical == canon);
    }
}

TEST_CASE("is_even")
{
    CHECK(is_even(E(3, 0)));
    CHECK_FALSE(is_even(E(2, 0)));
    CHECK_FALSE(is_even(E(485, 243)));
    CHECK(is_even(E(0, 0)));
    CHECK(is_even(E(-4, 1)));
}

TEST_CASE("gcd")
{
    CHECK(gcd(E(3, 0), E(1, -1)) == E(2, 1));
    CHECK(gcd(E(2, 0), E(3, 0)) == E(1, 0));
    CHECK(gcd(E(-7, 4), E(0, 0)) == canonicalize(E(-7, 4)).canonical);
    CHECK(gcd(E(0, 0), E(-7, 4)) == canonicalize(E(-7, 4)).canonical);
    CHECK_THROWS_AS(gcd(E(0, 0), E(0, 0)), std::domain_error);

    for (int i = 0; i < 300; ++i) {
        auto common = gen::nonzero(30);
        auto x = common * gen::nonzero(30);
        auto y = common * gen::nonzero(30);
        auto g = gcd(x, y);
        CHECK(in_region(g));
        CHECK(divides(g, x));
        CHECK(divides(g, y));
        CHECK(divides(common, g));
    }
}
