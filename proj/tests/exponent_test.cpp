#include <doctest.h>

#include <numeric>

#include "ringlib/exponent.hpp"
#include "test_util.hpp"

using namespace rings;
using namespace testutil;

namespace {

CncChain verified_power_chain(const Ring& ring, const Element& gen) {
    return std::get<CncChain>(power_chain(ring, {gen}));
}

}  // namespace

TEST_CASE("ring_order") {
    CHECK(ring_order(*zn(12)) == 2);
    CHECK(ring_order(*zn(2)) == 1);
    CHECK(ring_order(*zn(25)) == 20);
}

TEST_CASE("ring_order equals min of E(R)") {
    for (auto ring : std::vector<RingPtr>{zn(12), zn(25), dual_numbers(4)}) {
        std::uint64_t o = ring_order(*ring);
        std::uint64_t min_member = 0;
        for (std::uint64_t m = 1; m <= 1000; ++m)
            if (exponent_member(*ring, m)) {
                min_member = m;
                break;
            }
        CHECK(o == min_member);
    }
}

TEST_CASE("exponent_member") {
    auto z12 = zn(12);
    CHECK(exponent_member(*z12, 2));
    CHECK_FALSE(exponent_member(*z12, 3));
    CHECK(exponent_member(*z12, 4));  // phi(12)
}

TEST_CASE("Lagrange membership: |R*| is in E(R)") {
    for (auto ring : std::vector<RingPtr>{zn(12), zn(25), zn(8), dual_numbers(4),
                                          truncated_poly(2, 3)})
        CHECK(exponent_member(*ring, ring->units().size()));
}

TEST_CASE("fermat_bounds: Z/9 collapses to phi(9) = 6") {
    auto z9 = zn(9);
    auto chain = verified_power_chain(*z9, z9->from_int(3));
    ExponentReport rep = fermat_bounds(z9, chain);
    CHECK(rep.m1 == 6);
    CHECK(rep.m2 == 6);
    CHECK(rep.m3 == 6);
    CHECK(rep.all_verified());
    CHECK(rep.verdicts.at("M1") == Verdict::verified);
}

TEST_CASE("fermat_bounds: Z/4[u]/(u^2) has M1 = M2 = 4 < M3 = 8") {
    auto r = dual_numbers(4);
    auto chain = std::get<CncChain>(
        power_chain(*r, {r->from_int(2), Element{r.get(), {0, 1}}}));
    ExponentReport rep = fermat_bounds(r, chain);
    CHECK(rep.m1 == 4);
    CHECK(rep.m2 == 4);
    CHECK(rep.m3 == 8);
    CHECK(rep.unit_count == 8);
    CHECK(rep.all_verified());
}

TEST_CASE("fermat_bounds: Z/9[C2] separates M1 < M2 < M3") {
    auto gr = std::make_shared<GroupRing>(zn(9), GroupDescriptor({2}));
    auto chain = verified_power_chain(*gr, gr->from_int(3));
    ExponentReport rep = fermat_bounds(gr, chain, WMode::ring_order);
    CHECK(rep.w == 2);
    CHECK(rep.m1 == 6);
    CHECK(rep.m2 == 12);
    CHECK(rep.m3 == 36);
    CHECK(rep.all_verified());

    ExponentReport rep2 = fermat_bounds(gr, chain, WMode::unit_count);
    CHECK(rep2.w == 4);
    CHECK(rep2.m1 == 12);
}

TEST_CASE("fermat_bounds: trivial chain makes the bounds Lagrange") {
    auto z5 = zn(5);
    auto chain = std::get<CncChain>(verify_cnc(*z5, {zero_ideal(*z5)}));
    ExponentReport rep = fermat_bounds(z5, chain);
    CHECK(rep.m1 == 4);  // w = o(Z/5)
    CHECK(rep.m2 == 4);
    CHECK(rep.m3 == 4);
    CHECK(rep.all_verified());
}

TEST_CASE("fermat_bounds rejects unverified chains") {
    auto z9 = zn(9);
    CncChain bogus;
    bogus.ideals = {zero_ideal(*z9)};
    CHECK_THROWS_AS(fermat_bounds(z9, bogus), UnverifiedChain);
}

TEST_CASE("bound ordering M1 <= M2 <= M3 with w = ring_order, o(R) divides each") {
    std::vector<std::pair<RingPtr, std::vector<Element>>> corpus;
    auto z8 = zn(8);
    corpus.push_back({z8, {z8->from_int(2)}});
    auto z9 = zn(9);
    corpus.push_back({z9, {z9->from_int(3)}});
    auto r = dual_numbers(4);
    corpus.push_back({r, {r->from_int(2), Element{r.get(), {0, 1}}}});
    for (auto& [ring, gens] : corpus) {
        auto chain = std::get<CncChain>(power_chain(*ring, gens));
        ExponentReport rep = fermat_bounds(ring, chain, WMode::ring_order);
        CHECK(*rep.m1 <= *rep.m2);
        CHECK(*rep.m2 <= *rep.m3);
        CHECK(*rep.m1 % *rep.ring_order == 0);
        CHECK(*rep.m2 % *rep.ring_order == 0);
        CHECK(*rep.m3 % *rep.ring_order == 0);
    }
}

TEST_CASE("euler_lcm") {
    auto z4 = zn(4);
    auto z9 = zn(9);
    std::vector<EulerEntry> entries{
        {z4, verified_power_chain(*z4, z4->from_int(2))},
        {z9, verified_power_chain(*z9, z9->from_int(3))}};
    EulerReport rep = euler_lcm(entries);
    // m_i = |(R_i/N_i1)*| * prod(s): 1*2 and 2*3
    CHECK(rep.m_values == std::vector<std::uint64_t>{2, 6});
    CHECK(rep.lcm == 6);
    CHECK(rep.product == 12);  // the classical phi(36) recovery
    CHECK(rep.lcm_oracle == Verdict::verified);
    CHECK(rep.product_oracle == Verdict::verified);
}

TEST_CASE("euler_lcm single entry and field chains") {
    auto z9 = zn(9);
    EulerReport single = euler_lcm({{z9, verified_power_chain(*z9, z9->from_int(3))}});
    CHECK(single.m_values == std::vector<std::uint64_t>{6});
    CHECK(single.lcm == 6);

    auto z2 = zn(2);
    auto z3 = zn(3);
    std::vector<EulerEntry> fields{
        {z2, std::get<CncChain>(verify_cnc(*z2, {zero_ideal(*z2)}))},
        {z3, std::get<CncChain>(verify_cnc(*z3, {zero_ideal(*z3)}))}};
    EulerReport rep = euler_lcm(fields);
    CHECK(rep.m_values == std::vector<std::uint64_t>{1, 2});
    CHECK(rep.lcm == 2);
}

TEST_CASE("lifting identity (1+n)^p = 1 + p*n*r") {
    auto z49 = zn(49);
    Ideal seven = ideal_from_generators(*z49, {z49->from_int(7)});
    for (const Element& n : seven.elements)
        CHECK(check_lifting_identity(*z49, seven, 7, n));

    // n = 0 is trivial in any ring
    auto z12 = zn(12);
    Ideal z = zero_ideal(*z12);
    CHECK(check_lifting_identity(*z12, z, 5, z12->zero()));

    // Z/8 sub-chain step (<4>, {0}) has t = 2 <= p = 2
    auto z8 = zn(8);
    Ideal four = ideal_from_generators(*z8, {z8->from_int(4)});
    for (const Element& n : four.elements) CHECK(check_lifting_identity(*z8, four, 2, n));
}

TEST_CASE("residue class exponent over Z/25") {
    auto z25 = zn(25);
    auto chain = verified_power_chain(*z25, z25->from_int(5));
    ResidueClassRecord rec = residue_class_exponent(z25, chain, z25->from_int(4), 2);
    CHECK(rec.exponent == 10);
    CHECK(rec.all_satisfy);
    CHECK(rec.orders_divide);
    REQUIRE(rec.coset.size() == 5);
    std::vector<std::uint64_t> sorted_orders = rec.orders;
    std::sort(sorted_orders.begin(), sorted_orders.end());
    CHECK(sorted_orders == std::vector<std::uint64_t>{2, 10, 10, 10, 10});
}

TEST_CASE("residue class exponent: unit coset of Z/9 with w = 1") {
    auto z9 = zn(9);
    auto chain = verified_power_chain(*z9, z9->from_int(3));
    ResidueClassRecord rec = residue_class_exponent(z9, chain, z9->one(), 1);
    CHECK(rec.exponent == 3);
    CHECK(rec.all_satisfy);
    std::vector<Coord> members;
    for (const Element& x : rec.coset) members.push_back(x.coords[0]);
    std::sort(members.begin(), members.end());
    CHECK(members == std::vector<Coord>{1, 4, 7});
}

TEST_CASE("residue class exponent rejects non-unit classes") {
    auto z25 = zn(25);
    auto chain = verified_power_chain(*z25, z25->from_int(5));
    CHECK_THROWS_AS(residue_class_exponent(z25, chain, z25->zero(), 1),
                    PreconditionFailed);
}
