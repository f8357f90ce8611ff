#include "ringlib/constructions.hpp"

#include <functional>
#include <random>

namespace rings {

namespace {

// All elements whose slot entries each lie in the base ideal, in
// lexicographic coord order; the per-slot generator placements generate it.
Ideal slotwise_ideal(const Ring& big, const Ring& base, std::size_t slots,
                     const Ideal& base_ideal,
                     const std::function<Element(const std::vector<Element>&)>& assemble,
                     std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        total *= base_ideal.size();
        if (total > cap)
            throw CapExceeded("lifted ideal in " + big.name() + " exceeds cap");
    }
    Ideal out{&big, {}, {}};
    for (const Element& g : base_ideal.generators)
        for (std::size_t slot = 0; slot < slots; ++slot) {
            std::vector<Element> entries(slots, base.zero());
            entries[slot] = g;
            out.generators.push_back(assemble(entries));
        }
    out.elements.reserve(total);
    std::vector<std::size_t> idx(slots, 0);
    for (std::uint64_t count = 0; count < total; ++count) {
        std::vector<Element> entries;
        entries.reserve(slots);
        for (std::size_t i = 0; i < slots; ++i) entries.push_back(base_ideal.elements[idx[i]]);
        out.elements.push_back(assemble(entries));
        for (std::size_t i = slots; i-- > 0;) {
            if (++idx[i] < base_ideal.size()) break;
            idx[i] = 0;
        }
    }
    return out;
}

LiftedChain lift_common(RingPtr constructed, const Ring& base, std::size_t slots,
                        const CncChain& chain, std::string construction,
                        const std::function<Element(const std::vector<Element>&)>& assemble,
                        std::uint64_t cap) {
    if (!chain.verified) throw UnverifiedChain("lift needs a verified base chain");
    LiftedChain result;
    result.constructed = constructed;
    result.base_chain = chain;
    result.construction = std::move(construction);

    std::vector<Ideal> lifted_ideals;
    for (const Ideal& ideal : chain.ideals)
        lifted_ideals.push_back(
            slotwise_ideal(*constructed, base, slots, ideal, assemble, cap));

    auto card = constructed->cardinality();
    if (card && *card <= cap) {
        CncResult verification = verify_cnc(*constructed, std::move(lifted_ideals), cap);
        if (auto* failure = std::get_if<CncFailure>(&verification))
            throw PreconditionFailed("lifted chain fails the " +
                                     to_string(failure->condition) + " condition at step " +
                                     std::to_string(failure->step));
        result.lifted = std::get<CncChain>(std::move(verification));
        result.parameters_match = result.lifted.nilpotency == chain.nilpotency &&
                                  result.lifted.characteristic == chain.characteristic;
    } else {
        // structural lift only: parameters are inherited, not re-verified
        result.lifted.ideals = std::move(lifted_ideals);
        result.lifted.nilpotency = chain.nilpotency;
        result.lifted.characteristic = chain.characteristic;
        result.lifted.verified = false;
    }
    return result;
}

}  // namespace

LiftedChain lift_chain_matrix(RingPtr ring, const CncChain& chain, std::size_t n,
                              std::uint64_t cap) {
    auto matrix_ring = std::make_shared<MatrixRing>(ring, n);
    const MatrixRing* m = matrix_ring.get();
    return lift_common(
        matrix_ring, *ring, n * n, chain, "matrix(" + std::to_string(n) + ")",
        [m](const std::vector<Element>& entries) { return m->from_entries(entries); }, cap);
}

LiftedChain lift_chain_group(RingPtr ring, const CncChain& chain,
                             const GroupDescriptor& group, std::uint64_t cap) {
    auto group_ring = std::make_shared<GroupRing>(ring, group);
    const GroupRing* g = group_ring.get();
    return lift_common(
        group_ring, *ring, group.order(), chain, "group(" + group.name() + ")",
        [g](const std::vector<Element>& coeffs) { return g->from_coefficients(coeffs); },
        cap);
}

bool poly_irreducible_mod_p(const Coords& monic, std::uint64_t p) {
    const std::size_t r = monic.size() - 1;
    if (r == 0) return false;
    if (r == 1) return true;
    Coords reduced(monic.size());
    for (std::size_t i = 0; i < monic.size(); ++i)
        reduced[i] = ((monic[i] % static_cast<Coord>(p)) + p) % p;
    // a reducible monic polynomial has a monic factor of degree <= r/2
    for (std::size_t e = 1; e <= r / 2; ++e) {
        for (std::uint64_t mask = 0; mask < ipow(p, e); ++mask) {
            Coords divisor(e + 1);
            std::uint64_t m = mask;
            for (std::size_t i = 0; i < e; ++i) {
                divisor[i] = static_cast<Coord>(m % p);
                m /= p;
            }
            divisor[e] = 1;
            // remainder of reduced by the monic divisor over F_p
            Coords rem = reduced;
            for (std::size_t i = rem.size(); i-- > e;) {
                Coord lead = rem[i];
                if (lead == 0) continue;
                rem[i] = 0;
                for (std::size_t j = 0; j < e; ++j)
                    rem[i - e + j] =
                        ((rem[i - e + j] - lead * divisor[j]) % static_cast<Coord>(p) + p) %
                        p;
            }
            bool zero = true;
            for (std::size_t i = 0; i < e; ++i)
                if (rem[i] != 0) {
                    zero = false;
                    break;
                }
            if (zero) return false;
        }
    }
    return true;
}

GaloisRing galois_ring(std::uint64_t p, std::uint64_t k, Coords monic_modulus,
                       std::uint64_t cap) {
    if (!is_prime(p)) throw PreconditionFailed(std::to_string(p) + " is not prime");
    if (k < 1) throw PreconditionFailed("k must be >= 1");
    if (monic_modulus.size() < 2 || monic_modulus.back() != 1)
        throw PreconditionFailed("modulus must be monic of degree >= 1");
    if (!poly_irreducible_mod_p(monic_modulus, p))
        throw ReducibleModulus("modulus polynomial factors mod " + std::to_string(p));

    const std::size_t r = monic_modulus.size() - 1;
    auto base = std::make_shared<ModularIntRing>(static_cast<std::int64_t>(ipow(p, k)));
    auto ring = std::make_shared<PolyQuotientRing>(base, std::move(monic_modulus));

    CncResult chain_result =
        power_chain(*ring, {ring->from_int(static_cast<std::int64_t>(p))}, cap);
    if (std::holds_alternative<CncFailure>(chain_result))
        throw PreconditionFailed("power chain of <p> fails CNC verification");

    GaloisRing out;
    out.ring = ring;
    out.chain = std::get<CncChain>(std::move(chain_result));
    out.residue_field_size = ipow(p, r);
    out.exponent_bound = (out.residue_field_size - 1) * ipow(p, k - 1);
    return out;
}

SampleReport sample_polynomial_units(std::uint64_t p, std::uint64_t k,
                                     std::uint64_t degree_bound, std::uint64_t count,
                                     std::uint64_t seed) {
    if (!is_prime(p)) throw PreconditionFailed(std::to_string(p) + " is not prime");
    SampleReport rep;
    rep.p = p;
    rep.k = k;
    rep.degree_bound = degree_bound;
    rep.sample_count = count;
    rep.seed = seed;
    rep.exponent = (p - 1) * ipow(p, k - 1);

    const std::uint64_t n = ipow(p, k);
    auto base = std::make_shared<ModularIntRing>(static_cast<std::int64_t>(n));
    auto ring = std::make_shared<PolynomialRing>(base);
    rep.ring = ring;

    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        Coords coeffs(degree_bound + 1, 0);
        do {
            coeffs[0] = static_cast<Coord>(rng() % n);
        } while (coeffs[0] % static_cast<Coord>(p) == 0);
        for (std::uint64_t d = 1; d <= degree_bound; ++d)
            coeffs[d] = static_cast<Coord>(p * (rng() % ipow(p, k - 1)));
        Element g = ring->from_coefficients(coeffs);
        if (!(ring->pow(g, rep.exponent) == ring->one())) rep.failures.push_back(g);
    }
    return rep;
}

std::shared_ptr<const DirectProductRing> direct_product(std::vector<RingPtr> factors) {
    return std::make_shared<DirectProductRing>(std::move(factors));
}

}  // namespace rings
