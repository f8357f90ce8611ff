#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ringlib/errors.hpp"
#include "ringlib/group.hpp"

namespace rings {

using Coord = std::int64_t;
using Coords = std::vector<Coord>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// An element is a canonical coordinate vector relative to its owning ring.
// Two elements are equal iff the rings match and the canonical coords match.
struct Element {
    const Ring* ring = nullptr;
    Coords coords;

    bool operator==(const Element& o) const {
        return ring == o.ring && coords == o.coords;
    }
    bool operator!=(const Element& o) const { return !(*this == o); }
    bool operator<(const Element& o) const { return coords < o.coords; }
};

struct CoordsHash {
    std::size_t operator()(const Coords& c) const {
        std::size_t h = c.size();
        for (auto v : c)
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

inline constexpr std::uint64_t kDefaultCap = 1ull << 20;

// Abstract finite (or samplable infinite) ring with identity.  Descriptors
// are immutable after construction; all operations are pure.  The memoized
// unit table is built lazily under a mutex.
class Ring {
public:
    virtual ~Ring() = default;

    virtual std::string name() const = 0;
    // nullopt means infinite.
    virtual std::optional<std::uint64_t> cardinality() const = 0;
    virtual std::size_t coord_count() const = 0;
    virtual bool commutative() const { return true; }

    virtual Element zero() const { return {this, Coords(coord_count(), 0)}; }
    virtual Element one() const = 0;
    virtual Element add(const Element& a, const Element& b) const = 0;
    virtual Element neg(const Element& a) const = 0;
    virtual Element mul(const Element& a, const Element& b) const = 0;
    Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

    // x^m by square-and-multiply; x^0 = 1.
    Element pow(const Element& x, std::uint64_t m) const;
    // s-fold additive multiple s*x (s may be negative).
    Element smul(std::int64_t s, const Element& x) const;

    // index -> element, lexicographic on canonical coords, zero first.
    virtual Element element_at(std::uint64_t index) const = 0;
    std::vector<Element> elements(std::uint64_t cap = kDefaultCap) const;

    bool is_unit(const Element& x) const { return inverse(x).has_value(); }
    virtual std::optional<Element> inverse(const Element& x) const;
    std::vector<Element> units(std::uint64_t cap = kDefaultCap) const;
    // Least m >= 1 with x^m = 1; absent for non-units.
    std::optional<std::uint64_t> mult_order(const Element& x,
                                            std::uint64_t cap = kDefaultCap) const;

    virtual std::string format(const Element& x) const;

    // Embedding of the integers, n |-> n*1.
    Element from_int(std::int64_t n) const { return smul(n, one()); }

    void require_member(const Element& x) const;
    std::uint64_t finite_cardinality(std::uint64_t cap = kDefaultCap) const;

protected:
    mutable std::mutex cache_mutex_;
    mutable std::optional<std::vector<Element>> units_cache_;
    mutable std::unordered_map<Coords, Coords, CoordsHash> inverse_cache_;
};

// ---- Concrete descriptors -------------------------------------------------

class ModularIntRing final : public Ring {
public:
    explicit ModularIntRing(std::int64_t n);
    std::int64_t modulus() const { return n_; }

    std::string name() const override { return "Z/" + std::to_string(n_); }
    std::optional<std::uint64_t> cardinality() const override {
        return static_cast<std::uint64_t>(n_);
    }
    std::size_t coord_count() const override { return 1; }
    Element one() const override { return {this, {1 % n_}}; }
    Element add(const Element& a, const Element& b) const override;
    Element neg(const Element& a) const override;
    Element mul(const Element& a, const Element& b) const override;
    Element element_at(std::uint64_t index) const override;
    std::string format(const Element& x) const override;

private:
    std::int64_t n_;
};

// Z/n[v]/(q(v)) with q monic; coords are the remainder coefficients in
// ascending degree order.
class PolyQuotientRing final : public Ring {
public:
    PolyQuotientRing(std::shared_ptr<const ModularIntRing> base, Coords monic_modulus,
                     std::string var = "x");

    const ModularIntRing& base() const { return *base_; }
    std::shared_ptr<const ModularIntRing> base_ptr() const { return base_; }
    const Coords& modulus() const { return modulus_; }
    std::size_t degree() const { return modulus_.size() - 1; }
    const std::string& var() const { return var_; }

    std::string name() const override;
    std::optional<std::uint64_t> cardinality() const override;
    std::size_t coord_count() const override { return degree(); }
    Element one() const override;
    Element add(const Element& a, const Element& b) const override;
    Element neg(const Element& a) const override;
    Element mul(const Element& a, const Element& b) const override;
    Element element_at(std::uint64_t index) const override;
    std::string format(const Element& x) const override;

private:
    std::shared_ptr<const ModularIntRing> base_;
    Coords modulus_;  // ascending, leading coefficient 1
    std::string var_;
};

class MatrixRing final : public Ring {
public:
    MatrixRing(RingPtr base, std::size_t n);

    const Ring& base() const { return *base_; }
    RingPtr base_ptr() const { return base_; }
    std::size_t size() const { return n_; }

    std::string name() const override;
    std::optional<std::uint64_t> cardinality() const override;
    std::size_t coord_count() const override { return n_ * n_ * base_->coord_count(); }
    bool commutative() const override { return n_ == 1 && base_->commutative(); }
    Element one() const override;
    Element add(const Element& a, const Element& b) const override;
    Element neg(const Element& a) const override;
    Element mul(const Element& a, const Element& b) const override;
    Element element_at(std::uint64_t index) const override;
    std::string format(const Element& x) const override;

    Element entry(const Element& x, std::size_t i, std::size_t j) const;
    Element from_entries(const std::vector<Element>& row_major) const;

private:
    std::shared_ptr<const Ring> base_;
    std::size_t n_;
};

// Group ring R[G] for finite abelian G; coords are |G| blocks of base
// coords, indexed by the group's enumeration order; multiplication is
// convolution over G.
class GroupRing final : public Ring {
public:
    GroupRing(RingPtr base, GroupDescriptor group);

    const Ring& base() const { return *base_; }
    RingPtr base_ptr() const { return base_; }
    const GroupDescriptor& group() const { return group_; }

    std::string name() const override;
    std::optional<std::uint64_t> cardinality() const override;
    std::size_t coord_count() const override {
        return group_.order() * base_->coord_count();
    }
    Element one() const override;
    Element add(const Element& a, const Element& b) const override;
    Element neg(const Element& a) const override;
    Element mul(const Element& a, const Element& b) const override;
    Element element_at(std::uint64_t index) const override;
    std::string format(const Element& x) const override;

    Element coefficient(const Element& x, std::uint64_t group_index) const;
    Element from_coefficients(const std::vector<Element>& coeffs) const;

private:
    RingPtr base_;
    GroupDescriptor group_;
};

class DirectProductRing final : public Ring {
public:
    explicit DirectProductRing(std::vector<RingPtr> factors);

    const std::vector<RingPtr>& factors() const { return factors_; }

    std::string name() const override;
    std::optional<std::uint64_t> cardinality() const override;
    std::size_t coord_count() const override;
    bool commutative() const override;
    Element one() const override;
    Element add(const Element& a, const Element& b) const override;
    Element neg(const Element& a) const override;
    Element mul(const Element& a, const Element& b) const override;
    Element element_at(std::uint64_t index) const override;
    std::string format(const Element& x) const override;

    Element component(const Element& x, std::size_t i) const;
    Element from_components(const std::vector<Element>& parts) const;

private:
    std::vector<RingPtr> factors_;
};

// R/I with coset-representative arithmetic; the representative of a coset
// is its least member in the base ring's enumeration order.  Built through
// quotient_ring() in ideal.hpp.
class QuotientRing final : public Ring {
public:
    QuotientRing(RingPtr base, std::vector<Coords> ideal_elements, std::string ideal_label,
                 std::uint64_t cap = kDefaultCap);

    const Ring& base() const { return *base_; }
    RingPtr base_ptr() const { return base_; }
    std::uint64_t ideal_size() const { return ideal_size_; }

    // Canonical coset representative of a base-ring element.
    Element project(const Element& base_element) const;

    std::string name() const override;
    std::optional<std::uint64_t> cardinality() const override {
        return representatives_.size();
    }
    std::size_t coord_count() const override { return base_->coord_count(); }
    bool commutative() const override { return base_->commutative(); }
    Element one() const override;
    Element add(const Element& a, const Element& b) const override;
    Element neg(const Element& a) const override;
    Element mul(const Element& a, const Element& b) const override;
    Element element_at(std::uint64_t index) const override;
    std::string format(const Element& x) const override;

private:
    Element normalize(Coords base_coords) const;

    RingPtr base_;
    std::uint64_t ideal_size_;
    std::string ideal_label_;
    std::vector<Coords> representatives_;
    std::unordered_map<Coords, Coords, CoordsHash> rep_of_;
};

// Z/n[x]: sample-only, never enumerable.  Coords are coefficients in
// ascending degree order with trailing zeros trimmed (zero is the empty
// vector).
class PolynomialRing final : public Ring {
public:
    explicit PolynomialRing(std::shared_ptr<const ModularIntRing> base,
                            std::string var = "x");

    const ModularIntRing& base() const { return *base_; }
    const std::string& var() const { return var_; }

    std::string name() const override { return base_->name() + "[" + var_ + "]"; }
    std::optional<std::uint64_t> cardinality() const override { return std::nullopt; }
    std::size_t coord_count() const override { return 0; }
    Element zero() const override { return {this, {}}; }
    Element one() const override { return {this, {1 % base_->modulus()}}; }
    Element add(const Element& a, const Element& b) const override;
    Element neg(const Element& a) const override;
    Element mul(const Element& a, const Element& b) const override;
    Element element_at(std::uint64_t) const override;
    // Exact: the constant term is a unit mod n and every higher coefficient
    // is nilpotent mod n.
    std::optional<Element> inverse(const Element& x) const override;
    std::string format(const Element& x) const override;

    Element from_coefficients(Coords ascending) const;

private:
    Coords trim(Coords c) const;

    std::shared_ptr<const ModularIntRing> base_;
    std::string var_;
};

// ---- Small number-theory helpers shared across modules --------------------

std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // with multiplicity
bool is_prime(std::uint64_t n);
std::uint64_t ipow(std::uint64_t b, std::uint64_t e);
std::uint64_t radical(std::uint64_t n);  // product of distinct prime factors

std::string format_poly(const Coords& ascending, const std::string& var);

}  // namespace rings
