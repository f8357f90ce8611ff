#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlib/ideal.hpp"
#include "ringlib/ring.hpp"

namespace rings {

// A base chain together with its image under a matrix/group-ring lift.
// The per-step parameters are re-verified, not assumed.
struct LiftedChain {
    RingPtr constructed;
    CncChain base_chain;
    CncChain lifted;
    std::string construction;  // "matrix(n)" or "group(G)"
    bool parameters_match = false;
};

// M_n(N_i) for each step; runs the full CNC verification over M_n(R) when
// it fits under the cap.
LiftedChain lift_chain_matrix(RingPtr ring, const CncChain& chain, std::size_t n,
                              std::uint64_t cap = kDefaultCap);

// N_i G for each step.
LiftedChain lift_chain_group(RingPtr ring, const CncChain& chain,
                             const GroupDescriptor& group,
                             std::uint64_t cap = kDefaultCap);

struct GaloisRing {
    std::shared_ptr<const PolyQuotientRing> ring;
    CncChain chain;             // power chain of <p>
    std::uint64_t residue_field_size = 0;  // p^r
    std::uint64_t exponent_bound = 0;      // (p^r - 1) * p^(k-1)
};

// Z/p^k[x]/(q) with q monic of degree r, irreducible mod p (checked by an
// exhaustive divisor scan).  Throws ReducibleModulus otherwise.
GaloisRing galois_ring(std::uint64_t p, std::uint64_t k, Coords monic_modulus,
                       std::uint64_t cap = kDefaultCap);

bool poly_irreducible_mod_p(const Coords& monic, std::uint64_t p);

struct SampleReport {
    std::uint64_t p = 0, k = 0;
    std::uint64_t degree_bound = 0;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 0;
    std::uint64_t exponent = 0;  // (p-1) * p^(k-1)
    std::vector<Element> failures;
    std::shared_ptr<const PolynomialRing> ring;  // keeps the failures' ring alive
};

// Draws units of Z/p^k[x] (constant term a unit, higher coefficients
// multiples of p) and checks g^((p-1)p^(k-1)) = 1 for each.
SampleReport sample_polynomial_units(std::uint64_t p, std::uint64_t k,
                                     std::uint64_t degree_bound, std::uint64_t count,
                                     std::uint64_t seed);

std::shared_ptr<const DirectProductRing> direct_product(std::vector<RingPtr> factors);

}  // namespace rings
