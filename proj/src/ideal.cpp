#include "ringlib/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace rings {

bool Ideal::contains(const Element& x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

bool Ideal::contains_all(const Ideal& other) const {
    for (const Element& x : other.elements)
        if (!contains(x)) return false;
    return true;
}

std::string Ideal::label() const {
    if (generators.empty() || is_zero()) return "{0}";
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) s += ",";
        s += owner->format(generators[i]);
    }
    return s + ">";
}

std::string to_string(CncCondition c) {
    switch (c) {
        case CncCondition::chain: return "chain";
        case CncCondition::nilpotency: return "nilpotency";
        case CncCondition::characteristic: return "characteristic";
    }
    return "?";
}

std::uint64_t CncChain::characteristic_product() const {
    std::uint64_t p = 1;
    for (auto s : characteristic) p *= s;
    return p;
}

Ideal zero_ideal(const Ring& ring) {
    return {&ring, {}, {ring.zero()}};
}

Ideal ideal_from_generators(const Ring& ring, const std::vector<Element>& gens,
                            std::uint64_t cap) {
    for (const Element& g : gens) ring.require_member(g);
    const std::vector<Element> all = ring.elements(cap);

    std::unordered_set<Coords, CoordsHash> members;
    std::deque<Coords> work;
    auto insert = [&](const Element& x) {
        if (members.insert(x.coords).second) work.push_back(x.coords);
    };
    insert(ring.zero());
    for (const Element& g : gens) insert(g);

    while (!work.empty()) {
        Element x{&ring, work.front()};
        work.pop_front();
        insert(ring.neg(x));
        for (const Element& r : all) {
            insert(ring.mul(r, x));
            if (!ring.commutative()) insert(ring.mul(x, r));
        }
        // closure under addition against everything already collected
        std::vector<Coords> snapshot(members.begin(), members.end());
        for (const Coords& yc : snapshot) insert(ring.add(x, Element{&ring, yc}));
    }

    Ideal result{&ring, gens, {}};
    result.elements.reserve(members.size());
    for (const Coords& c : members) result.elements.push_back({&ring, c});
    std::sort(result.elements.begin(), result.elements.end());
    return result;
}

Ideal ideal_product(const Ideal& lhs, const Ideal& rhs, std::uint64_t cap) {
    if (lhs.owner != rhs.owner)
        throw DescriptorMismatch("ideal product across different rings");
    const Ring& ring = *lhs.owner;
    std::unordered_set<Coords, CoordsHash> gen_set;
    std::vector<Element> gens;
    for (const Element& x : lhs.elements)
        for (const Element& y : rhs.elements) {
            Element p = ring.mul(x, y);
            if (gen_set.insert(p.coords).second) gens.push_back(p);
        }
    return ideal_from_generators(ring, gens, cap);
}

std::optional<std::uint64_t> nilpotency_index_in(const Ideal& outer, const Ideal& inner,
                                                 std::uint64_t cap) {
    if (outer.owner != inner.owner) throw DescriptorMismatch("ideals from different rings");
    Ideal power = outer;
    std::uint64_t bound = outer.owner->finite_cardinality(cap);
    for (std::uint64_t t = 2; t <= bound + 1; ++t) {
        Ideal next = ideal_product(power, outer, cap);
        if (inner.contains_all(next)) return t;
        if (next == power) return std::nullopt;  // stabilized outside inner
        power = next;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> characteristic_in(const Ideal& outer, const Ideal& inner,
                                               std::uint64_t nilpotency_index,
                                               std::uint64_t cap) {
    if (outer.owner != inner.owner) throw DescriptorMismatch("ideals from different rings");
    const Ring& ring = *outer.owner;
    std::uint64_t bound = ring.finite_cardinality(cap);
    for (std::uint64_t s = 1; s <= bound; ++s) {
        bool factors_ok = true;
        for (auto p : prime_factors(s))
            if (p < nilpotency_index) {
                factors_ok = false;
                break;
            }
        if (!factors_ok) continue;
        bool kills = true;
        for (const Element& x : outer.elements)
            if (!inner.contains(ring.smul(static_cast<std::int64_t>(s), x))) {
                kills = false;
                break;
            }
        if (kills) return s;
    }
    return std::nullopt;
}

CncResult verify_cnc(const Ring& ring, std::vector<Ideal> ideals, std::uint64_t cap) {
    if (ideals.empty())
        return CncFailure{CncCondition::chain, 0, "empty chain", std::nullopt};
    for (const Ideal& ideal : ideals)
        if (ideal.owner != &ring) throw DescriptorMismatch("chain ideal from another ring");

    const Ideal& last = ideals.back();
    if (!last.is_zero()) {
        Element w = last.elements[1];
        return CncFailure{CncCondition::chain, ideals.size(),
                          "chain does not end at {0}; " + ring.format(w) + " remains", w};
    }
    if (ideals.front().size() >= ring.finite_cardinality(cap))
        return CncFailure{CncCondition::chain, 1, "N_1 is not a proper ideal of " + ring.name(),
                          std::nullopt};
    for (std::size_t i = 0; i + 1 < ideals.size(); ++i) {
        for (const Element& x : ideals[i + 1].elements)
            if (!ideals[i].contains(x))
                return CncFailure{CncCondition::chain, i + 1,
                                  "N_" + std::to_string(i + 2) + " is not contained in N_" +
                                      std::to_string(i + 1),
                                  x};
        if (ideals[i + 1].size() == ideals[i].size())
            return CncFailure{CncCondition::chain, i + 1,
                              "inclusion N_" + std::to_string(i + 2) + " < N_" +
                                  std::to_string(i + 1) + " is not strict",
                              std::nullopt};
    }

    CncChain chain{std::move(ideals), {}, {}, false};
    for (std::size_t i = 0; i + 1 < chain.ideals.size(); ++i) {
        auto t = nilpotency_index_in(chain.ideals[i], chain.ideals[i + 1], cap);
        if (!t) {
            // powers of N_i stabilize outside N_{i+1}
            Ideal power = chain.ideals[i];
            Ideal next = ideal_product(power, chain.ideals[i], cap);
            while (!(next == power)) {
                power = next;
                next = ideal_product(power, chain.ideals[i], cap);
            }
            std::optional<Element> witness;
            for (const Element& x : power.elements)
                if (!chain.ideals[i + 1].contains(x)) {
                    witness = x;
                    break;
                }
            return CncFailure{CncCondition::nilpotency, i + 1,
                              "no t >= 2 with N_" + std::to_string(i + 1) +
                                  "^t inside N_" + std::to_string(i + 2),
                              witness};
        }
        auto s = characteristic_in(chain.ideals[i], chain.ideals[i + 1], *t, cap);
        if (!s) {
            // witness: element not annihilated into N_{i+1} by the smallest
            // multiplier that ignores the prime-factor constraint
            std::optional<Element> witness;
            std::uint64_t bound = ring.finite_cardinality(cap);
            for (std::uint64_t raw = 1; raw <= bound && !witness; ++raw)
                for (const Element& x : chain.ideals[i].elements)
                    if (!chain.ideals[i + 1].contains(
                            ring.smul(static_cast<std::int64_t>(raw), x))) {
                        witness = x;
                        break;
                    }
            return CncFailure{CncCondition::characteristic, i + 1,
                              "no s >= 1 with prime factors >= t=" + std::to_string(*t) +
                                  " sends N_" + std::to_string(i + 1) + " into N_" +
                                  std::to_string(i + 2),
                              witness};
        }
        chain.nilpotency.push_back(*t);
        chain.characteristic.push_back(*s);
    }
    chain.verified = true;
    return chain;
}

CncResult power_chain(const Ring& ring, const std::vector<Element>& gens,
                      std::uint64_t cap) {
    Ideal base = ideal_from_generators(ring, gens, cap);
    std::vector<Ideal> chain{base};
    while (!chain.back().is_zero()) {
        Ideal next = ideal_product(chain.back(), base, cap);
        if (next == chain.back())
            throw NotNilpotent("ideal " + base.label() + " is not nilpotent in " +
                               ring.name() + "; powers stabilize at size " +
                               std::to_string(next.size()));
        chain.push_back(next);
    }
    return verify_cnc(ring, std::move(chain), cap);
}

std::shared_ptr<const QuotientRing> quotient_ring(RingPtr ring, const Ideal& ideal,
                                                  std::uint64_t cap) {
    if (ideal.owner != ring.get())
        throw DescriptorMismatch("ideal does not belong to the ring being quotiented");
    std::vector<Coords> coords;
    coords.reserve(ideal.elements.size());
    for (const Element& x : ideal.elements) coords.push_back(x.coords);
    return std::make_shared<QuotientRing>(std::move(ring), std::move(coords), ideal.label(),
                                          cap);
}

}  // namespace rings
