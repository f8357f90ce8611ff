#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ringlib/ring.hpp"

namespace rings {

// Finitely generated two-sided ideal with its fully enumerated element set,
// kept sorted by coords for binary-search membership.
struct Ideal {
    const Ring* owner = nullptr;
    std::vector<Element> generators;
    std::vector<Element> elements;  // sorted, zero included

    bool contains(const Element& x) const;
    bool contains_all(const Ideal& other) const;
    bool is_zero() const { return elements.size() == 1; }
    std::uint64_t size() const { return elements.size(); }
    std::string label() const;  // "<g1,g2>", "{0}" for the zero ideal

    bool operator==(const Ideal& o) const {
        return owner == o.owner && elements == o.elements;
    }
};

enum class CncCondition { chain, nilpotency, characteristic };

std::string to_string(CncCondition c);

// Verified chain N_1 > N_2 > ... > N_k = {0} with per-step minimal
// nilpotency indexes t_i and characteristics s_i.
struct CncChain {
    std::vector<Ideal> ideals;
    std::vector<std::uint64_t> nilpotency;      // t_1..t_{k-1}
    std::vector<std::uint64_t> characteristic;  // s_1..s_{k-1}
    bool verified = false;

    std::size_t length() const { return ideals.size(); }
    const Ideal& head() const { return ideals.front(); }
    std::uint64_t characteristic_product() const;
};

struct CncFailure {
    CncCondition condition;
    std::size_t step;  // 1-based
    std::string detail;
    std::optional<Element> witness;
};

using CncResult = std::variant<CncChain, CncFailure>;

// Smallest two-sided ideal containing gens, by worklist closure.
Ideal ideal_from_generators(const Ring& ring, const std::vector<Element>& gens,
                            std::uint64_t cap = kDefaultCap);

// Ideal generated by all products x*y, x in I, y in J.
Ideal ideal_product(const Ideal& lhs, const Ideal& rhs, std::uint64_t cap = kDefaultCap);

Ideal zero_ideal(const Ring& ring);

// Least t >= 2 with I^t contained in J; absent if the powers stabilize
// outside J.
std::optional<std::uint64_t> nilpotency_index_in(const Ideal& outer, const Ideal& inner,
                                                 std::uint64_t cap = kDefaultCap);

// Least s >= 1 with s*I contained in J whose prime factors are all >= t
// (s = 1 qualifies vacuously); absent if no s up to |R| works.
std::optional<std::uint64_t> characteristic_in(const Ideal& outer, const Ideal& inner,
                                               std::uint64_t nilpotency_index,
                                               std::uint64_t cap = kDefaultCap);

// Checks conditions 1-3 over the given chain (which must end at {0}) and
// fills in the minimal t_i, s_i, or reports the first violation.
CncResult verify_cnc(const Ring& ring, std::vector<Ideal> ideals,
                     std::uint64_t cap = kDefaultCap);

// Builds N > N^2 > ... > N^k = {0} from N = <gens> and verifies it.
// Throws NotNilpotent if the powers stabilize above {0}.
CncResult power_chain(const Ring& ring, const std::vector<Element>& gens,
                      std::uint64_t cap = kDefaultCap);

std::shared_ptr<const QuotientRing> quotient_ring(RingPtr ring, const Ideal& ideal,
                                                  std::uint64_t cap = kDefaultCap);

}  // namespace rings
