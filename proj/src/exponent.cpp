#include "ringlib/exponent.hpp"

#include <numeric>

namespace rings {

std::string to_string(WMode m) {
    return m == WMode::ring_order ? "ring_order" : "unit_count";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::verified: return "verified";
        case Verdict::failed: return "failed";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

bool ExponentReport::all_verified() const {
    for (const auto& [_, v] : verdicts)
        if (v == Verdict::failed) return false;
    return true;
}

std::uint64_t ring_order(const Ring& ring, std::uint64_t cap) {
    std::uint64_t acc = 1;
    for (const Element& u : ring.units(cap))
        acc = std::lcm(acc, *ring.mult_order(u, cap));
    return acc;
}

bool exponent_member(const Ring& ring, std::uint64_t m, std::uint64_t cap) {
    if (m < 1) throw PreconditionFailed("exponent must be >= 1");
    for (const Element& u : ring.units(cap))
        if (!(ring.pow(u, m) == ring.one())) return false;
    return true;
}

ExponentReport fermat_bounds(RingPtr ring, const CncChain& chain, WMode w_mode,
                             std::uint64_t cap) {
    if (!chain.verified) throw UnverifiedChain("fermat_bounds needs a verified chain");
    if (chain.head().owner != ring.get())
        throw DescriptorMismatch("chain does not belong to the given ring");

    ExponentReport rep;
    rep.ring_name = ring->name();
    rep.w_mode = w_mode;

    auto quotient = quotient_ring(ring, chain.head(), cap);
    std::uint64_t q_units = quotient->units(cap).size();
    rep.w = w_mode == WMode::ring_order ? ring_order(*quotient, cap) : q_units;

    std::uint64_t s_prod = chain.characteristic_product();
    rep.m1 = rep.w * s_prod;
    rep.m2 = q_units * s_prod;
    rep.m3 = q_units * chain.head().size();
    rep.m1_divides_m2 = *rep.m2 % *rep.m1 == 0;

    bool enumerable = ring->cardinality() && *ring->cardinality() <= cap;
    if (enumerable) {
        rep.unit_count = ring->units(cap).size();
        rep.ring_order = ring_order(*ring, cap);
        rep.verdicts["M1"] =
            exponent_member(*ring, *rep.m1, cap) ? Verdict::verified : Verdict::failed;
        rep.verdicts["M2"] =
            exponent_member(*ring, *rep.m2, cap) ? Verdict::verified : Verdict::failed;
        rep.verdicts["M3"] =
            exponent_member(*ring, *rep.m3, cap) ? Verdict::verified : Verdict::failed;
    } else {
        rep.verdicts["M1"] = rep.verdicts["M2"] = rep.verdicts["M3"] = Verdict::skipped;
    }
    return rep;
}

EulerReport euler_lcm(const std::vector<EulerEntry>& entries, std::uint64_t cap) {
    if (entries.empty()) throw PreconditionFailed("euler_lcm needs at least one entry");
    EulerReport rep;
    std::vector<RingPtr> factors;
    for (const auto& entry : entries) {
        if (!entry.chain.verified)
            throw UnverifiedChain("euler_lcm needs verified chains");
        auto quotient = quotient_ring(entry.ring, entry.chain.head(), cap);
        std::uint64_t m =
            quotient->units(cap).size() * entry.chain.characteristic_product();
        rep.m_values.push_back(m);
        rep.lcm = std::lcm(rep.lcm, m);
        rep.product *= m;
        factors.push_back(entry.ring);
    }

    DirectProductRing product(factors);
    auto card = product.cardinality();
    if (card && *card <= cap) {
        rep.lcm_oracle =
            exponent_member(product, rep.lcm, cap) ? Verdict::verified : Verdict::failed;
        rep.product_oracle =
            exponent_member(product, rep.product, cap) ? Verdict::verified : Verdict::failed;
    }
    return rep;
}

bool check_lifting_identity(const Ring& ring, const Ideal& nil_ideal, std::uint64_t p,
                            const Element& n, std::uint64_t cap) {
    if (!nil_ideal.contains(n))
        throw PreconditionFailed("element is not in the nilpotent ideal");
    Element lhs = ring.sub(ring.pow(ring.add(ring.one(), n), p), ring.one());
    Element pn = ring.smul(static_cast<std::int64_t>(p), n);
    for (const Element& r : ring.elements(cap))
        if (ring.mul(pn, r) == lhs) return true;
    return false;
}

ResidueClassRecord residue_class_exponent(RingPtr ring, const CncChain& chain,
                                          const Element& f, std::uint64_t w,
                                          std::uint64_t cap) {
    if (!chain.verified) throw UnverifiedChain("residue_class_exponent needs a verified chain");
    ring->require_member(f);
    auto quotient = quotient_ring(ring, chain.head(), cap);
    Element f_bar = quotient->project(f);
    if (!(quotient->pow(f_bar, w) == quotient->one()))
        throw PreconditionFailed("(f + N_1)^w != 1 + N_1 in " + quotient->name());

    ResidueClassRecord rec;
    rec.exponent = w * chain.characteristic_product();
    rec.all_satisfy = true;
    rec.orders_divide = true;
    for (const Element& d : chain.head().elements) {
        Element x = ring->add(f, d);
        rec.coset.push_back(x);
        if (!(ring->pow(x, rec.exponent) == ring->one())) rec.all_satisfy = false;
        auto order = ring->mult_order(x, cap);
        rec.orders.push_back(order.value_or(0));
        if (!order || rec.exponent % *order != 0) rec.orders_divide = false;
    }
    return rec;
}

}  // namespace rings
