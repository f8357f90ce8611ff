#include <doctest.h>

#include "ringlib/constructions.hpp"
#include "ringlib/exponent.hpp"
#include "test_util.hpp"

using namespace rings;
using namespace testutil;

namespace {

CncChain chain_of(const Ring& ring, const std::vector<Element>& gens) {
    return std::get<CncChain>(power_chain(ring, gens));
}

}  // namespace

TEST_CASE("matrix lift of Z/4 to M2(Z/4)") {
    auto z4 = zn(4);
    auto base = chain_of(*z4, {z4->from_int(2)});
    LiftedChain lc = lift_chain_matrix(z4, base, 2);
    CHECK(lc.construction == "matrix(2)");
    CHECK(lc.lifted.verified);
    CHECK(lc.parameters_match);
    REQUIRE(lc.lifted.ideals.size() == base.ideals.size());
    CHECK(lc.lifted.nilpotency == base.nilpotency);
    CHECK(lc.lifted.characteristic == base.characteristic);
    // M2(<2>) has 2^4 elements inside the 256-element ring
    CHECK(lc.lifted.ideals.front().size() == 16);
    CHECK(lc.constructed->finite_cardinality() == 256);
    CHECK(lc.constructed->units().size() == 96);
}

TEST_CASE("matrix lift keeps the Fermat bounds computable") {
    auto z4 = zn(4);
    auto base = chain_of(*z4, {z4->from_int(2)});
    LiftedChain lc = lift_chain_matrix(z4, base, 2);
    ExponentReport rep = fermat_bounds(lc.constructed, lc.lifted, WMode::ring_order);
    CHECK(rep.all_verified());
    CHECK(*rep.unit_count == 96);
    // exp(M2(Z/4)*) = 12 must land in every verified bound
    CHECK(*rep.ring_order == 12);
    CHECK(*rep.m1 % 12 == 0);
}

TEST_CASE("matrix lift over Z/9: unit count factors as |GL2(F3)| * |M2(N)|") {
    auto z9 = zn(9);
    auto base = chain_of(*z9, {z9->from_int(3)});
    LiftedChain lc = lift_chain_matrix(z9, base, 2, 1 << 14);
    CHECK(lc.lifted.verified);
    CHECK(lc.constructed->finite_cardinality() == 6561);
    CHECK(lc.constructed->units(1 << 14).size() == 48 * 81);
}

TEST_CASE("group ring lift of Z/9 by C2") {
    auto z9 = zn(9);
    auto base = chain_of(*z9, {z9->from_int(3)});
    LiftedChain lc = lift_chain_group(z9, base, GroupDescriptor({2}));
    CHECK(lc.construction == "group(C2)");
    CHECK(lc.lifted.verified);
    CHECK(lc.parameters_match);
    CHECK(lc.constructed->finite_cardinality() == 81);
    // N1 C2 = {a + b g : a, b in <3>}
    CHECK(lc.lifted.ideals.front().size() == 9);
    CHECK(lc.constructed->units().size() == 36);
}

TEST_CASE("group ring lift of Z/4 by C2 has 8 units") {
    auto z4 = zn(4);
    auto base = chain_of(*z4, {z4->from_int(2)});
    LiftedChain lc = lift_chain_group(z4, base, GroupDescriptor({2}));
    CHECK(lc.lifted.verified);
    CHECK(lc.constructed->units().size() == 8);
    for (const Element& u : lc.constructed->units())
        CHECK(is_unit_oracle(*lc.constructed, u));
}

TEST_CASE("trivial group C1 lift reproduces the base data") {
    auto z8 = zn(8);
    auto base = chain_of(*z8, {z8->from_int(2)});
    LiftedChain lc = lift_chain_group(z8, base, GroupDescriptor({1}));
    CHECK(lc.lifted.verified);
    CHECK(lc.constructed->finite_cardinality() == 8);
    CHECK(lc.lifted.nilpotency == base.nilpotency);
    CHECK(lc.lifted.characteristic == base.characteristic);
    for (std::size_t i = 0; i < base.ideals.size(); ++i)
        CHECK(lc.lifted.ideals[i].size() == base.ideals[i].size());
}

TEST_CASE("trivial base chain lifts to a trivial chain") {
    auto z3 = zn(3);
    auto base = std::get<CncChain>(verify_cnc(*z3, {zero_ideal(*z3)}));
    LiftedChain lc = lift_chain_matrix(z3, base, 2);
    CHECK(lc.lifted.verified);
    CHECK(lc.lifted.ideals.size() == 1);
    CHECK(lc.lifted.ideals.front().is_zero());
}

TEST_CASE("GR(2,2,x^2+x+1)") {
    GaloisRing gr = galois_ring(2, 2, {1, 1, 1});
    CHECK(gr.residue_field_size == 4);
    CHECK(gr.exponent_bound == 6);
    CHECK(gr.ring->finite_cardinality() == 16);
    CHECK(gr.chain.verified);
    auto units = gr.ring->units();
    CHECK(units.size() == 12);
    for (const Element& g : units) CHECK(gr.ring->pow(g, 6) == gr.ring->one());
    CHECK(ring_order(*gr.ring) == 6);  // the bound is tight here
}

TEST_CASE("GR(3,2,x^2+1)") {
    GaloisRing gr = galois_ring(3, 2, {1, 0, 1});
    CHECK(gr.residue_field_size == 9);
    CHECK(gr.exponent_bound == 24);
    CHECK(gr.ring->finite_cardinality() == 81);
    auto units = gr.ring->units();
    CHECK(units.size() == 72);
    for (const Element& g : units) CHECK(gr.ring->pow(g, 24) == gr.ring->one());
}

TEST_CASE("GR degenerate cases") {
    // degree-1 modulus x: GR(5,2,x) is just Z/25 in disguise
    GaloisRing gr = galois_ring(5, 2, {0, 1});
    CHECK(gr.residue_field_size == 5);
    CHECK(gr.exponent_bound == 20);
    CHECK(gr.ring->finite_cardinality() == 25);
    CHECK(gr.ring->units().size() == 20);
}

TEST_CASE("galois_ring rejects reducible moduli") {
    CHECK_THROWS_AS(galois_ring(2, 2, {1, 0, 1}), ReducibleModulus);   // (x+1)^2
    CHECK_THROWS_AS(galois_ring(3, 1, {2, 1, 0, 1}), ReducibleModulus);
    CHECK_THROWS_AS(galois_ring(5, 2, {0, 0, 1}), ReducibleModulus);   // x^2
}

TEST_CASE("poly_irreducible_mod_p") {
    CHECK(poly_irreducible_mod_p({1, 1, 1}, 2));
    CHECK_FALSE(poly_irreducible_mod_p({1, 0, 1}, 2));
    CHECK(poly_irreducible_mod_p({1, 0, 1}, 3));
    CHECK(poly_irreducible_mod_p({1, 1, 0, 1}, 2));      // x^3+x+1
    CHECK_FALSE(poly_irreducible_mod_p({1, 1, 1, 1}, 2));  // (x+1)(x^2+1)
    CHECK(poly_irreducible_mod_p({3, 1}, 5));            // linear
}

TEST_CASE("polynomial unit sampling satisfies the exponent bound") {
    SampleReport rep = sample_polynomial_units(3, 2, 5, 40, 12345);
    CHECK(rep.exponent == 6);
    CHECK(rep.sample_count == 40);
    CHECK(rep.failures.empty());

    SampleReport rep2 = sample_polynomial_units(2, 3, 4, 25, 7);
    CHECK(rep2.exponent == 4);
    CHECK(rep2.failures.empty());
}

TEST_CASE("sampling is reproducible for a fixed seed") {
    SampleReport a = sample_polynomial_units(5, 2, 6, 10, 42);
    SampleReport b = sample_polynomial_units(5, 2, 6, 10, 42);
    CHECK(a.exponent == b.exponent);
    CHECK(a.failures.size() == b.failures.size());
    CHECK(a.seed == 42);
}

TEST_CASE("direct products of lifted rings") {
    auto dp = direct_product({zn(4), zn(9)});
    CHECK(dp->finite_cardinality() == 36);
    CHECK(dp->units().size() == 12);  // phi(36)
    auto x = dp->from_components(
        {dp->factors()[0]->from_int(3), dp->factors()[1]->from_int(2)});
    CHECK(dp->is_unit(x));
}
