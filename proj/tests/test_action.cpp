#include <set>

#include "doctest.h"
#include "invforge/action.hpp"
#include "support.hpp"

using namespace invforge;
using testing::field_q;
using testing::kSeed;

namespace {

Mat3 mat(const Field& F, std::initializer_list<std::int64_t> v)
{
    Mat3 out;
    auto it = v.begin();
    for (auto& row : out)
        for (auto& x : row) x = F.from_int(*it++);
    return out;
}

// Over a prime field: expand a0 X'^2 + 2 a1 X'Y' + a2 Y'^2 for X' = dX + bY,
// Y' = cX + aY with integer arithmetic and read off a2' = [Y^2],
// a1' = [XY]/2, a0' = [X^2] as coefficient rows over (a2, a1, a0).
Mat3 induced_by_hand(const Field& F, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
{
    const std::int64_t p = F.p();
    const std::int64_t half = (p + 1) / 2;
    // rows: coefficient of (X^2, XY, Y^2) contributed by a2, a1, a0
    const std::int64_t from_a0[3] = {d * d, 2 * d * b, b * b};
    const std::int64_t from_a1[3] = {2 * d * c, 2 * (d * a + b * c), 2 * b * a};
    const std::int64_t from_a2[3] = {c * c, 2 * c * a, a * a};
    Mat3 out;
    for (int col = 0; col < 3; ++col) {
        const std::int64_t* src = col == 0 ? from_a2 : col == 1 ? from_a1 : from_a0;
        out[0][col] = Elem{static_cast<std::uint32_t>(testing::mod(src[2], p))};
        out[1][col] = Elem{static_cast<std::uint32_t>(testing::mod(src[1] * half, p))};
        out[2][col] = Elem{static_cast<std::uint32_t>(testing::mod(src[0], p))};
    }
    return out;
}

std::vector<GroupElem> gl2(const FieldPtr& F)
{
    std::vector<GroupElem> out;
    for (const Elem a : F->elements())
        for (const Elem b : F->elements())
            for (const Elem c : F->elements())
                for (const Elem d : F->elements())
                    if (!F->sub(F->mul(a, d), F->mul(b, c)).is_zero()) out.emplace_back(F, a, b, c, d);
    return out;
}

GroupElem random_element(const FieldPtr& F, std::mt19937_64& rng)
{
    for (;;) {
        const Elem a = testing::random_elem(*F, rng), b = testing::random_elem(*F, rng);
        const Elem c = testing::random_elem(*F, rng), d = testing::random_elem(*F, rng);
        if (!F->sub(F->mul(a, d), F->mul(b, c)).is_zero()) return GroupElem(F, a, b, c, d);
    }
}

}  // namespace

TEST_CASE("the three displayed induced matrices")
{
    for (const auto q : {3u, 5u, 7u, 9u, 25u}) {
        CAPTURE(q);
        const auto F = field_q(q);
        for (const Elem c : F->elements()) {
            const Mat3 expected{{{F->one(), F->mul(F->from_int(2), c), F->mul(c, c)},
                                 {F->zero(), F->one(), c},
                                 {F->zero(), F->zero(), F->one()}}};
            CHECK(GroupElem::sigma(F, c).induced() == expected);
        }
        for (const Elem w : F->units()) {
            const Mat3 expected{{{F->mul(w, w), F->zero(), F->zero()},
                                 {F->zero(), w, F->zero()},
                                 {F->zero(), F->zero(), F->one()}}};
            CHECK(GroupElem::rho(F, w).induced() == expected);
        }
        CHECK(GroupElem::tau(F).induced() == mat(*F, {0, 0, 1, 0, -1, 0, 1, 0, 0}));
    }
}

TEST_CASE("induced matrix matches a hand expansion over all of GL2(F5) and GL2(F7)")
{
    for (const auto q : {5u, 7u}) {
        const auto F = field_q(q);
        for (const auto& g : gl2(F)) {
            REQUIRE(g.induced() == induced_by_hand(*F, g.a().code(), g.b().code(), g.c().code(),
                                                   g.d().code()));
        }
    }
    const auto F = field_q(5);
    CHECK_THROWS_AS(GroupElem(F, Elem{1}, Elem{2}, Elem{2}, Elem{4}), Error);
}

TEST_CASE("apply examples")
{
    const auto F = field_q(5);
    const Poly a0 = Poly::variable(F, Var::a0);
    const Poly a1 = Poly::variable(F, Var::a1);
    const Poly a2 = Poly::variable(F, Var::a2);
    for (const Elem c : F->elements()) {
        CHECK(apply(GroupElem::sigma(F, c), a1) == a1 + a0.scale(c));
        const Elem two_c = F->mul(F->from_int(2), c);
        for (const Elem k : F->elements()) {
            const Elem c2k = F->sub(F->mul(c, c), k);
            const Poly factor = a2 + a1.scale(two_c) + a0.scale(c2k);
            const Poly image = a0 - a1.scale(two_c) + a2.scale(c2k);
            CHECK(apply(GroupElem::tau(F), factor) == image);
        }
    }
    std::mt19937_64 rng(kSeed);
    const Poly f = testing::random_poly(F, rng, 20, 10);
    CHECK(apply(GroupElem::identity(F), f) == f);
}

TEST_CASE("composition, normality and tau squared")
{
    for (const auto q : {5u, 9u}) {
        const auto F = field_q(q);
        for (const Elem c : F->elements())
            for (const Elem c2 : F->elements())
                CHECK(compose(GroupElem::sigma(F, c), GroupElem::sigma(F, c2)) ==
                      GroupElem::sigma(F, F->add(c, c2)));

        for (const Elem w : F->units()) {
            const GroupElem r = GroupElem::rho(F, w);
            const GroupElem r_inv = GroupElem::rho(F, F->inv(w));
            CHECK(compose(r, r_inv) == GroupElem::identity(F));
            for (const Elem c : F->elements()) {
                const GroupElem conj = compose(compose(r_inv, GroupElem::sigma(F, c)), r);
                CHECK(conj.a() == F->one());
                CHECK(conj.c() == F->zero());
                CHECK(conj.d() == F->one());
            }
        }

        const GroupElem t2 = compose(GroupElem::tau(F), GroupElem::tau(F));
        const Elem m1 = F->neg(F->one());
        CHECK(t2 == GroupElem(F, m1, F->zero(), F->zero(), m1));
        CHECK(t2.induced() == GroupElem::identity(F).induced());
    }
}

TEST_CASE("group cardinalities")
{
    CHECK(enumerate_P(field_q(3)).size() == 3);
    CHECK(enumerate_SL2(field_q(3)).size() == 24);
    CHECK(enumerate_SL2(field_q(5)).size() == 120);
    CHECK(enumerate_SL2(field_q(9)).size() == 720);
    CHECK_THROWS_AS(enumerate_SL2(field_q(11)), Error);
    for (const auto q : {3u, 5u, 7u, 9u, 81u}) CHECK(generators_SL2(field_q(q)).size() == q + 1);

    const auto all = enumerate_SL2(field_q(5));
    std::set<std::array<std::uint32_t, 4>> seen;
    for (const auto& g : all) {
        CHECK(g.det() == g.field()->one());
        seen.insert({g.a().code(), g.b().code(), g.c().code(), g.d().code()});
    }
    CHECK(seen.size() == all.size());
}

TEST_CASE("right-action functoriality on random pairs from SL2(F5)")
{
    const auto F = field_q(5);
    const auto all = enumerate_SL2(F);
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < 60; ++i) {
        const auto& g = all[rng() % all.size()];
        const auto& h = all[rng() % all.size()];
        const GroupElem gh = compose(g, h);
        CHECK(gh.induced() == mat3_mul(*F, g.induced(), h.induced()));
        const Poly f = testing::random_poly(F, rng, 12, 7);
        CHECK(apply(gh, f) == apply(h, apply(g, f)));
    }
}

TEST_CASE("determinant of the induced matrix is det cubed on GL2(F5)")
{
    const auto F = field_q(5);
    const auto all = gl2(F);
    CHECK(all.size() == 480);
    for (const auto& g : all) REQUIRE(mat3_det(*F, g.induced()) == F->pow(g.det(), 3));
}

TEST_CASE("factored application agrees with direct substitution and is an algebra map")
{
    for (const auto q : {3u, 7u, 9u, 25u, 27u}) {
        CAPTURE(q);
        const auto F = field_q(q);
        std::mt19937_64 rng(kSeed + q);
        for (int i = 0; i < 25; ++i) {
            const GroupElem g = random_element(F, rng);
            const Poly f = testing::random_poly(F, rng, 10, 8);
            const Poly h = testing::random_poly(F, rng, 10, 8);
            CHECK(apply(g, f) == apply_by_substitution(g, f));
            CHECK(apply(g, f * h) == apply(g, f) * apply(g, h));
            CHECK(apply(g, f + h) == apply(g, f) + apply(g, h));
            const Poly hom = testing::random_homogeneous(F, rng, 8, 6);
            if (!hom.is_zero()) {
                const Poly img = apply(g, hom);
                CHECK(img.is_homogeneous());
                CHECK(img.total_degree() == 6);
            }
        }
        for (const auto& g : generators_SL2(F)) {
            const Poly f = testing::random_poly(F, rng, 10, 8);
            CHECK(apply(g, f) == apply_by_substitution(g, f));
        }
    }
}
