#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace invforge;
using testing::field_q;
using testing::odd_prime_powers;

namespace {

// Multiplicative order of g mod p by repeated multiplication.
std::uint32_t order_mod_p(std::uint32_t g, std::uint32_t p)
{
    std::uint32_t x = g % p;
    std::uint32_t k = 1;
    while (x != 1) {
        x = x * g % p;
        ++k;
    }
    return k;
}

bool has_root_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p)
{
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
        if (v == 0) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("F7 generator is the smallest element of full order")
{
    const auto F = Field::make(7, 1);
    CHECK(F->q() == 7);
    std::uint32_t expected = 0;
    for (std::uint32_t g = 2; g < 7; ++g) {
        if (order_mod_p(g, 7) == 6) {
            expected = g;
            break;
        }
    }
    CHECK(expected == 3);
    CHECK(F->omega() == Elem{expected});
}

TEST_CASE("F9 modulus is the smallest monic irreducible quadratic")
{
    const auto F = Field::make(3, 2);
    CHECK(F->q() == 9);
    // Candidates x^2 + c1 x + c0 ordered by (c0, c1); quadratics are
    // irreducible iff rootless.
    std::vector<std::uint32_t> expected;
    for (std::uint32_t c0 = 0; c0 < 3 && expected.empty(); ++c0) {
        for (std::uint32_t c1 = 0; c1 < 3; ++c1) {
            std::vector<std::uint32_t> cand{c0, c1, 1};
            if (!has_root_mod_p(cand, 3)) {
                expected = cand;
                break;
            }
        }
    }
    CHECK(expected == std::vector<std::uint32_t>{1, 0, 1});
    CHECK(F->modulus() == expected);
}

TEST_CASE("bad field parameters are rejected")
{
    CHECK_THROWS_WITH_AS(Field::make(4, 1), doctest::Contains("not prime"), Error);
    CHECK_THROWS_WITH_AS(Field::make(2, 1), doctest::Contains("characteristic 2 unsupported"), Error);
    CHECK_THROWS_AS(Field::make(3, 0), Error);
    CHECK_THROWS_AS(Field::make(1, 1), Error);
    CHECK_THROWS_AS(Field::make(3, 5), Error);
    CHECK_NOTHROW(Field::make(3, 5, 243));
}

TEST_CASE("small arithmetic examples")
{
    const auto F7 = Field::make(7, 1);
    CHECK(F7->inv(Elem{3}) == Elem{5});
    CHECK(F7->pow(Elem{3}, 6) == F7->one());
    CHECK(F7->pow(Elem{4}, 0) == F7->one());
    CHECK(F7->pow(Elem{0}, 0) == F7->one());
    CHECK_THROWS_AS(F7->inv(F7->zero()), Error);

    const auto F9 = Field::make(3, 2);
    const std::vector<std::uint32_t> x_coords{0, 1};
    const Elem x = F9->from_coords(x_coords);
    CHECK(F9->mul(x, x) == F9->from_int(2));
    CHECK(F9->to_string(x) == "(x)");
    CHECK(F9->parse("(1+2*x)") == F9->from_coords(std::vector<std::uint32_t>{1, 2}));
}

TEST_CASE("quadratic residues")
{
    const auto F7 = Field::make(7, 1);
    std::set<std::uint32_t> squares;
    for (std::uint32_t x = 1; x < 7; ++x) squares.insert(x * x % 7);
    std::set<std::uint32_t> residues;
    for (const Elem r : F7->residues()) residues.insert(r.code());
    CHECK(residues == squares);
    CHECK(residues == std::set<std::uint32_t>{1, 2, 4});

    const auto F3 = Field::make(3, 1);
    CHECK(F3->residues() == std::vector<Elem>{Elem{1}});
    CHECK(F3->nonresidues() == std::vector<Elem>{Elem{2}});
    CHECK_THROWS_AS(F3->is_quadratic_residue(F3->zero()), Error);

    for (const auto q : odd_prime_powers(81)) {
        const auto F = field_q(q);
        CHECK(F->is_quadratic_residue(F->one()));
    }
}

TEST_CASE("enumeration")
{
    const auto F3 = Field::make(3, 1);
    CHECK(F3->elements() == std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}});

    const auto F9 = Field::make(3, 2);
    const auto e9 = F9->elements();
    CHECK(e9.size() == 9);
    CHECK(std::set<Elem>(e9.begin(), e9.end()).size() == 9);

    const auto u7 = Field::make(7, 1)->units();
    CHECK(u7.size() == 6);
    CHECK(std::find(u7.begin(), u7.end(), Elem{0}) == u7.end());
}

TEST_CASE("field properties hold exhaustively for every q up to 81")
{
    for (const auto q : odd_prime_powers(81)) {
        CAPTURE(q);
        const auto F = field_q(q);
        const auto elems = F->elements();
        const auto units = F->units();
        REQUIRE(elems.size() == q);
        REQUIRE(units.size() == q - 1);

        // modulus really is irreducible
        CHECK(is_irreducible_mod_p(F->modulus(), F->p()));
        if (F->n() <= 3 && F->n() > 1) CHECK_FALSE(has_root_mod_p(F->modulus(), F->p()));

        bool fermat = true, inverses = true;
        for (const Elem x : units) {
            fermat = fermat && F->pow(x, q - 1) == F->one();
            inverses = inverses && F->mul(x, F->inv(x)) == F->one();
        }
        CHECK(fermat);
        CHECK(inverses);

        CHECK(F->multiplicative_order(F->omega()) == q - 1);
        std::set<Elem> powers;
        for (std::uint32_t k = 0; k + 1 < q; ++k) powers.insert(F->omega_pow(k));
        CHECK(powers.size() == q - 1);
        CHECK(powers.count(F->zero()) == 0);
        // omega is the first unit of full order
        for (const Elem x : units) {
            if (x == F->omega()) break;
            CHECK(F->multiplicative_order(x) < q - 1);
        }

        const auto Q = F->residues();
        const auto Qbar = F->nonresidues();
        CHECK(Q.size() == (q - 1) / 2);
        CHECK(Qbar.size() == (q - 1) / 2);
        bool closed = true;
        for (const Elem s : Q) {
            closed = closed && F->pow(s, (q - 1) / 2) == F->one();
            for (const Elem t : Q) closed = closed && F->is_quadratic_residue(F->mul(s, t));
            for (const Elem t : Qbar) closed = closed && !F->is_quadratic_residue(F->mul(s, t));
        }
        CHECK(closed);

        // ring axioms, exhaustive over pairs and over triples for q <= 27
        bool ring = true;
        for (const Elem a : elems) {
            ring = ring && F->add(a, F->neg(a)) == F->zero() && F->sub(a, a) == F->zero();
            for (const Elem b : elems) {
                ring = ring && F->add(a, b) == F->add(b, a) && F->mul(a, b) == F->mul(b, a);
                if (q > 27) continue;
                for (const Elem c : elems) {
                    ring = ring && F->add(F->add(a, b), c) == F->add(a, F->add(b, c));
                    ring = ring && F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c));
                    ring = ring && F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c));
                }
            }
        }
        CHECK(ring);

        // text round trip
        bool text = true;
        for (const Elem a : elems) text = text && F->parse(F->to_string(a)) == a;
        CHECK(text);
    }
}

TEST_CASE("product over the residues is y^((q-1)/2) - 1")
{
    for (const auto q : {3u, 5u, 7u, 9u}) {
        CAPTURE(q);
        const auto F = field_q(q);
        // coefficients of a univariate polynomial, low degree first
        std::vector<Elem> prod{F->one()};
        for (const Elem s : F->residues()) {
            std::vector<Elem> next(prod.size() + 1, F->zero());
            for (std::size_t i = 0; i < prod.size(); ++i) {
                next[i + 1] = F->add(next[i + 1], prod[i]);
                next[i] = F->sub(next[i], F->mul(s, prod[i]));
            }
            prod = next;
        }
        std::vector<Elem> expected((q - 1) / 2 + 1, F->zero());
        expected.front() = F->neg(F->one());
        expected.back() = F->one();
        CHECK(prod == expected);
    }
}
