#include <doctest.h>

#include "ringlib/ring.hpp"
#include "test_util.hpp"

using namespace rings;
using namespace testutil;

TEST_CASE("element enumeration is deterministic, zero-first, lexicographic") {
    auto z2 = zn(2);
    auto elems = z2->elements();
    REQUIRE(elems.size() == 2);
    CHECK(elems[0] == z2->zero());
    CHECK(elems[1] == z2->one());

    auto z12 = zn(12);
    auto all = z12->elements();
    REQUIRE(all.size() == 12);
    for (std::size_t i = 0; i < 12; ++i) CHECK(all[i].coords[0] == static_cast<Coord>(i));

    auto m2f2 = std::make_shared<MatrixRing>(zn(2), 2);
    auto mats = m2f2->elements();
    REQUIRE(mats.size() == 16);
    CHECK(mats[0] == m2f2->zero());
    for (std::size_t i = 1; i < mats.size(); ++i)
        CHECK(mats[i - 1].coords < mats[i].coords);
}

TEST_CASE("enumeration errors") {
    auto z12 = zn(12);
    CHECK_THROWS_AS(z12->elements(8), CapExceeded);
    PolynomialRing poly(zn(4));
    CHECK_THROWS_AS(poly.elements(), InfiniteRing);
}

TEST_CASE("arithmetic basics: Z/12 has 5*5 = 1") {
    auto z12 = zn(12);
    CHECK(z12->mul(z12->from_int(5), z12->from_int(5)) == z12->one());
}

TEST_CASE("Z/4[u]/(u^2): (1+u)(1+3u) = 1") {
    auto r = dual_numbers(4);
    Element one_u{r.get(), {1, 1}};
    Element one_3u{r.get(), {1, 3}};
    CHECK(r->mul(one_u, one_3u) == r->one());
}

TEST_CASE("descriptor mismatch is rejected") {
    auto a = zn(12);
    auto b = zn(12);
    CHECK_THROWS_AS(a->add(a->one(), b->one()), DescriptorMismatch);
}

TEST_CASE("pow") {
    auto z25 = zn(25);
    CHECK(z25->pow(z25->from_int(24), 2) == z25->one());
    CHECK(z25->pow(z25->from_int(9), 10) == z25->one());
    CHECK_FALSE(z25->pow(z25->from_int(9), 5) == z25->one());
    CHECK(z25->pow(z25->one(), 12345) == z25->one());
    CHECK(z25->pow(z25->from_int(7), 0) == z25->one());
}

TEST_CASE("is_unit with inverse witness") {
    auto z12 = zn(12);
    auto inv5 = z12->inverse(z12->from_int(5));
    REQUIRE(inv5.has_value());
    CHECK(z12->mul(*inv5, z12->from_int(5)) == z12->one());
    CHECK_FALSE(z12->is_unit(z12->from_int(6)));
    CHECK_FALSE(z12->is_unit(z12->zero()));

    auto r = dual_numbers(4);
    Element two_u{r.get(), {2, 1}};
    Element three_2u{r.get(), {3, 2}};
    CHECK_FALSE(r->is_unit(two_u));
    CHECK(r->is_unit(three_2u));
    // cross-check the whole ring against the exhaustive inverse oracle
    for (const Element& x : r->elements())
        CHECK(r->is_unit(x) == is_unit_oracle(*r, x));
}

TEST_CASE("units") {
    auto z12 = zn(12);
    auto u = z12->units();
    REQUIRE(u.size() == 4);
    CHECK(u[0].coords[0] == 1);
    CHECK(u[1].coords[0] == 5);
    CHECK(u[2].coords[0] == 7);
    CHECK(u[3].coords[0] == 11);

    CHECK(zn(2)->units().size() == 1);
}

TEST_CASE("group ring Z/9[C2] unit count matches the lifted factorization") {
    auto gr = std::make_shared<GroupRing>(zn(9), GroupDescriptor({2}));
    REQUIRE(*gr->cardinality() == 81);
    auto units = gr->units();
    CHECK(units.size() == 36);
    // |(RG)*| = |((R/N1)G)*| * |N1|^|G| with N1 = <3>: 4 * 3^2
    auto quotient_side = std::make_shared<GroupRing>(zn(3), GroupDescriptor({2}));
    CHECK(quotient_side->units().size() * 9 == units.size());
}

TEST_CASE("mult_order") {
    auto z25 = zn(25);
    CHECK(z25->mult_order(z25->from_int(24)) == 2);
    CHECK(z25->mult_order(z25->from_int(4)) == 10);
    CHECK(z25->mult_order(z25->one()) == 1);
    auto z12 = zn(12);
    CHECK_FALSE(z12->mult_order(z12->from_int(6)).has_value());
}

namespace {

void check_ring_axioms(const Ring& ring, std::uint64_t seed) {
    auto xs = sample_elements(ring, 24, seed);
    for (std::size_t i = 0; i + 2 < xs.size(); i += 3) {
        const Element &a = xs[i], &b = xs[i + 1], &c = xs[i + 2];
        CHECK(ring.add(a, b) == ring.add(b, a));
        CHECK(ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c)));
        CHECK(ring.add(a, ring.neg(a)) == ring.zero());
        CHECK(ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)));
        CHECK(ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c)));
        CHECK(ring.mul(ring.add(a, b), c) == ring.add(ring.mul(a, c), ring.mul(b, c)));
        CHECK(ring.mul(ring.one(), a) == a);
        CHECK(ring.mul(a, ring.one()) == a);
        if (ring.commutative()) CHECK(ring.mul(a, b) == ring.mul(b, a));
    }
}

}  // namespace

TEST_CASE("ring axioms hold on sampled triples for every descriptor kind") {
    check_ring_axioms(*zn(12), 1);
    check_ring_axioms(*dual_numbers(4), 2);
    check_ring_axioms(*std::make_shared<MatrixRing>(zn(4), 2), 3);
    check_ring_axioms(*std::make_shared<GroupRing>(zn(9), GroupDescriptor({2})), 4);
    check_ring_axioms(*std::make_shared<DirectProductRing>(
                          std::vector<RingPtr>{zn(4), zn(9)}),
                      5);
    CHECK_FALSE(MatrixRing(zn(4), 2).commutative());
}

TEST_CASE("unit orders divide |R*| and satisfy the divisibility law") {
    for (auto ring : std::vector<RingPtr>{zn(12), zn(25), dual_numbers(4),
                                          truncated_poly(2, 3)}) {
        auto units = ring->units();
        for (const Element& x : units) {
            auto order = ring->mult_order(x);
            REQUIRE(order.has_value());
            CHECK(ring->pow(x, *order) == ring->one());
            CHECK(units.size() % *order == 0);
            // if x^m = 1 then order | m
            for (std::uint64_t m = 1; m <= 2 * units.size(); ++m)
                if (ring->pow(x, m) == ring->one()) CHECK(m % *order == 0);
        }
    }
}

TEST_CASE("non-units never reach 1 by powering") {
    auto z12 = zn(12);
    for (const Element& x : z12->elements()) {
        if (z12->is_unit(x)) continue;
        for (std::uint64_t m = 1; m <= *z12->cardinality(); ++m)
            CHECK_FALSE(z12->pow(x, m) == z12->one());
    }
}

TEST_CASE("matrix unit count factorization |M2(Z/4)*| = |M2(Z/2)*| * |N1|^4") {
    auto m2z4 = std::make_shared<MatrixRing>(zn(4), 2);
    auto m2z2 = std::make_shared<MatrixRing>(zn(2), 2);
    CHECK(m2z4->units().size() == 96);
    CHECK(m2z2->units().size() == 6);  // |GL2(F2)|
    CHECK(m2z4->units().size() == m2z2->units().size() * 16);
}

TEST_CASE("direct product units are unit tuples") {
    auto prod = std::make_shared<DirectProductRing>(std::vector<RingPtr>{zn(2), zn(2)});
    auto units = prod->units();
    REQUIRE(units.size() == 1);
    CHECK(units[0] == prod->one());
}

TEST_CASE("polynomial ring structural unit test") {
    auto poly = std::make_shared<PolynomialRing>(zn(4));
    Element g = poly->from_coefficients({1, 2});  // 1 + 2x
    CHECK(poly->is_unit(g));
    CHECK(poly->pow(g, 2) == poly->one());
    Element x = poly->from_coefficients({0, 1});
    CHECK_FALSE(poly->is_unit(x));
    Element bad = poly->from_coefficients({1, 1});  // 1 + x: higher coeff not nilpotent
    CHECK_FALSE(poly->is_unit(bad));
    auto inv = poly->inverse(g);
    REQUIRE(inv.has_value());
    CHECK(poly->mul(*inv, g) == poly->one());
}
