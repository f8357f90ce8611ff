#include "ringlib/ring.hpp"

#include <algorithm>
#include <unordered_set>

namespace rings {

// ---- helpers --------------------------------------------------------------

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::uint64_t radical(std::uint64_t n) {
    std::uint64_t r = 1, last = 0;
    for (auto p : prime_factors(n))
        if (p != last) {
            r *= p;
            last = p;
        }
    return r;
}

std::string format_poly(const Coords& ascending, const std::string& var) {
    std::string s;
    for (std::size_t d = 0; d < ascending.size(); ++d) {
        Coord c = ascending[d];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (d == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c);
            s += var;
            if (d > 1) s += "^" + std::to_string(d);
        }
    }
    return s.empty() ? "0" : s;
}

// ---- Ring base ------------------------------------------------------------

void Ring::require_member(const Element& x) const {
    if (x.ring != this)
        throw DescriptorMismatch("element does not belong to ring " + name());
}

std::uint64_t Ring::finite_cardinality(std::uint64_t cap) const {
    auto c = cardinality();
    if (!c) throw InfiniteRing(name() + " is infinite");
    if (*c > cap)
        throw CapExceeded(name() + " has " + std::to_string(*c) +
                          " elements, above cap " + std::to_string(cap));
    return *c;
}

Element Ring::pow(const Element& x, std::uint64_t m) const {
    require_member(x);
    Element result = one();
    Element base = x;
    while (m > 0) {
        if (m & 1) result = mul(result, base);
        m >>= 1;
        if (m > 0) base = mul(base, base);
    }
    return result;
}

Element Ring::smul(std::int64_t s, const Element& x) const {
    require_member(x);
    Element v = s < 0 ? neg(x) : x;
    std::uint64_t m = s < 0 ? static_cast<std::uint64_t>(-s) : static_cast<std::uint64_t>(s);
    Element result = zero();
    while (m > 0) {
        if (m & 1) result = add(result, v);
        m >>= 1;
        if (m > 0) v = add(v, v);
    }
    return result;
}

std::vector<Element> Ring::elements(std::uint64_t cap) const {
    std::uint64_t n = finite_cardinality(cap);
    std::vector<Element> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
    return out;
}

// A finite ring is Dedekind-finite, and every unit has finite
// multiplicative order, so x is a unit iff its power sequence returns to 1.
// The witness x^(m-1) is then a two-sided inverse.
std::optional<Element> Ring::inverse(const Element& x) const {
    require_member(x);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = inverse_cache_.find(x.coords);
        if (it != inverse_cache_.end()) {
            if (it->second.empty() && coord_count() != 0) return std::nullopt;
            return Element{this, it->second};
        }
    }
    auto card = cardinality();
    if (!card) throw InfiniteRing("generic unit test needs a finite ring: " + name());

    std::optional<Element> inv;
    std::unordered_set<Coords, CoordsHash> seen;
    Element prev = one();
    Element cur = x;
    for (std::uint64_t step = 0; step < *card; ++step) {
        if (cur == one()) {
            inv = prev;
            break;
        }
        if (!seen.insert(cur.coords).second) break;  // cycle without 1
        prev = cur;
        cur = mul(cur, x);
    }
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        inverse_cache_[x.coords] = inv ? inv->coords : Coords{};
    }
    return inv;
}

std::vector<Element> Ring::units(std::uint64_t cap) const {
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (units_cache_) return *units_cache_;
    }
    std::vector<Element> result;
    for (const Element& x : elements(cap))
        if (is_unit(x)) result.push_back(x);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        units_cache_ = result;
    }
    return result;
}

std::optional<std::uint64_t> Ring::mult_order(const Element& x, std::uint64_t cap) const {
    require_member(x);
    if (!is_unit(x)) return std::nullopt;
    auto card = cardinality();
    std::uint64_t bound = card ? *card : cap;
    Element cur = x;
    for (std::uint64_t m = 1; m <= bound; ++m) {
        if (cur == one()) return m;
        cur = mul(cur, x);
    }
    throw CapExceeded("order of unit in " + name() + " exceeds " + std::to_string(bound));
}

std::string Ring::format(const Element& x) const {
    std::string s = "[";
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x.coords[i]);
    }
    return s + "]";
}

// ---- ModularIntRing -------------------------------------------------------

ModularIntRing::ModularIntRing(std::int64_t n) : n_(n) {
    if (n < 2) throw std::invalid_argument("modulus must be >= 2 (need 1 != 0)");
}

Element ModularIntRing::add(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    return {this, {(a.coords[0] + b.coords[0]) % n_}};
}

Element ModularIntRing::neg(const Element& a) const {
    require_member(a);
    return {this, {(n_ - a.coords[0]) % n_}};
}

Element ModularIntRing::mul(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    return {this, {(a.coords[0] * b.coords[0]) % n_}};
}

Element ModularIntRing::element_at(std::uint64_t index) const {
    return {this, {static_cast<Coord>(index)}};
}

std::string ModularIntRing::format(const Element& x) const {
    return std::to_string(x.coords[0]);
}

// ---- PolyQuotientRing -----------------------------------------------------

PolyQuotientRing::PolyQuotientRing(std::shared_ptr<const ModularIntRing> base,
                                   Coords monic_modulus, std::string var)
    : base_(std::move(base)), modulus_(std::move(monic_modulus)), var_(std::move(var)) {
    if (modulus_.size() < 2)
        throw std::invalid_argument("modulus polynomial must have degree >= 1");
    for (auto& c : modulus_) c = ((c % base_->modulus()) + base_->modulus()) % base_->modulus();
    if (modulus_.back() != 1)
        throw std::invalid_argument("modulus polynomial must be monic");
}

std::string PolyQuotientRing::name() const {
    return base_->name() + "[" + var_ + "]/(" + format_poly(modulus_, var_) + ")";
}

std::optional<std::uint64_t> PolyQuotientRing::cardinality() const {
    return ipow(static_cast<std::uint64_t>(base_->modulus()), degree());
}

Element PolyQuotientRing::one() const {
    Coords c(degree(), 0);
    c[0] = 1 % base_->modulus();
    return {this, c};
}

Element PolyQuotientRing::add(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    Coords c(degree());
    for (std::size_t i = 0; i < degree(); ++i)
        c[i] = (a.coords[i] + b.coords[i]) % base_->modulus();
    return {this, c};
}

Element PolyQuotientRing::neg(const Element& a) const {
    require_member(a);
    Coords c(degree());
    for (std::size_t i = 0; i < degree(); ++i)
        c[i] = (base_->modulus() - a.coords[i]) % base_->modulus();
    return {this, c};
}

Element PolyQuotientRing::mul(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    const std::int64_t n = base_->modulus();
    const std::size_t d = degree();
    Coords prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] = (prod[i + j] + a.coords[i] * b.coords[j]) % n;
    }
    // monic remainder reduction
    for (std::size_t i = prod.size(); i-- > d;) {
        Coord lead = prod[i];
        if (lead == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < d; ++j)
            prod[i - d + j] = ((prod[i - d + j] - lead * modulus_[j]) % n + n) % n;
    }
    prod.resize(d);
    return {this, prod};
}

Element PolyQuotientRing::element_at(std::uint64_t index) const {
    const std::uint64_t n = static_cast<std::uint64_t>(base_->modulus());
    // lexicographic order on coords: last coordinate is the fastest digit
    Coords c(degree());
    for (std::size_t i = degree(); i-- > 0;) {
        c[i] = static_cast<Coord>(index % n);
        index /= n;
    }
    return {this, c};
}

std::string PolyQuotientRing::format(const Element& x) const {
    return format_poly(x.coords, var_);
}

// ---- MatrixRing -----------------------------------------------------------

MatrixRing::MatrixRing(RingPtr base, std::size_t n) : base_(std::move(base)), n_(n) {
    if (n_ < 1) throw std::invalid_argument("matrix size must be >= 1");
}

std::string MatrixRing::name() const {
    return "M" + std::to_string(n_) + "(" + base_->name() + ")";
}

std::optional<std::uint64_t> MatrixRing::cardinality() const {
    auto c = base_->cardinality();
    if (!c) return std::nullopt;
    return ipow(*c, n_ * n_);
}

Element MatrixRing::entry(const Element& x, std::size_t i, std::size_t j) const {
    const std::size_t w = base_->coord_count();
    auto begin = x.coords.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * w);
    return {base_.get(), Coords(begin, begin + static_cast<std::ptrdiff_t>(w))};
}

Element MatrixRing::from_entries(const std::vector<Element>& row_major) const {
    if (row_major.size() != n_ * n_)
        throw std::invalid_argument("expected " + std::to_string(n_ * n_) + " entries");
    Coords c;
    c.reserve(coord_count());
    for (const auto& e : row_major) {
        base_->require_member(e);
        c.insert(c.end(), e.coords.begin(), e.coords.end());
    }
    return {this, c};
}

Element MatrixRing::one() const {
    std::vector<Element> entries(n_ * n_, base_->zero());
    for (std::size_t i = 0; i < n_; ++i) entries[i * n_ + i] = base_->one();
    return from_entries(entries);
}

Element MatrixRing::add(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    std::vector<Element> entries;
    entries.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            entries.push_back(base_->add(entry(a, i, j), entry(b, i, j)));
    return from_entries(entries);
}

Element MatrixRing::neg(const Element& a) const {
    require_member(a);
    std::vector<Element> entries;
    entries.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) entries.push_back(base_->neg(entry(a, i, j)));
    return from_entries(entries);
}

Element MatrixRing::mul(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    std::vector<Element> entries;
    entries.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            Element acc = base_->zero();
            for (std::size_t k = 0; k < n_; ++k)
                acc = base_->add(acc, base_->mul(entry(a, i, k), entry(b, k, j)));
            entries.push_back(acc);
        }
    return from_entries(entries);
}

Element MatrixRing::element_at(std::uint64_t index) const {
    const std::uint64_t bc = *base_->cardinality();
    std::vector<Element> entries(n_ * n_, base_->zero());
    for (std::size_t slot = n_ * n_; slot-- > 0;) {
        entries[slot] = base_->element_at(index % bc);
        index /= bc;
    }
    return from_entries(entries);
}

std::string MatrixRing::format(const Element& x) const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) s += ",";
            s += base_->format(entry(x, i, j));
        }
        s += "]";
    }
    return s + "]";
}

// ---- GroupRing ------------------------------------------------------------

GroupRing::GroupRing(RingPtr base, GroupDescriptor group)
    : base_(std::move(base)), group_(std::move(group)) {}

std::string GroupRing::name() const { return base_->name() + "[" + group_.name() + "]"; }

std::optional<std::uint64_t> GroupRing::cardinality() const {
    auto c = base_->cardinality();
    if (!c) return std::nullopt;
    return ipow(*c, group_.order());
}

Element GroupRing::coefficient(const Element& x, std::uint64_t group_index) const {
    const std::size_t w = base_->coord_count();
    auto begin = x.coords.begin() + static_cast<std::ptrdiff_t>(group_index * w);
    return {base_.get(), Coords(begin, begin + static_cast<std::ptrdiff_t>(w))};
}

Element GroupRing::from_coefficients(const std::vector<Element>& coeffs) const {
    if (coeffs.size() != group_.order())
        throw std::invalid_argument("expected " + std::to_string(group_.order()) +
                                    " coefficients");
    Coords c;
    c.reserve(coord_count());
    for (const auto& e : coeffs) {
        base_->require_member(e);
        c.insert(c.end(), e.coords.begin(), e.coords.end());
    }
    return {this, c};
}

Element GroupRing::one() const {
    std::vector<Element> coeffs(group_.order(), base_->zero());
    coeffs[0] = base_->one();  // index 0 is the group identity
    return from_coefficients(coeffs);
}

Element GroupRing::add(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    std::vector<Element> coeffs;
    coeffs.reserve(group_.order());
    for (std::uint64_t g = 0; g < group_.order(); ++g)
        coeffs.push_back(base_->add(coefficient(a, g), coefficient(b, g)));
    return from_coefficients(coeffs);
}

Element GroupRing::neg(const Element& a) const {
    require_member(a);
    std::vector<Element> coeffs;
    coeffs.reserve(group_.order());
    for (std::uint64_t g = 0; g < group_.order(); ++g)
        coeffs.push_back(base_->neg(coefficient(a, g)));
    return from_coefficients(coeffs);
}

Element GroupRing::mul(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    std::vector<Element> coeffs(group_.order(), base_->zero());
    for (std::uint64_t g = 0; g < group_.order(); ++g) {
        Element ca = coefficient(a, g);
        if (ca == base_->zero()) continue;
        for (std::uint64_t h = 0; h < group_.order(); ++h) {
            std::uint64_t gh = group_.compose(g, h);
            coeffs[gh] = base_->add(coeffs[gh], base_->mul(ca, coefficient(b, h)));
        }
    }
    return from_coefficients(coeffs);
}

Element GroupRing::element_at(std::uint64_t index) const {
    const std::uint64_t bc = *base_->cardinality();
    std::vector<Element> coeffs(group_.order(), base_->zero());
    for (std::uint64_t slot = group_.order(); slot-- > 0;) {
        coeffs[slot] = base_->element_at(index % bc);
        index /= bc;
    }
    return from_coefficients(coeffs);
}

std::string GroupRing::format(const Element& x) const {
    static const char* kGens = "ghij";
    std::string s;
    for (std::uint64_t g = 0; g < group_.order(); ++g) {
        Element c = coefficient(x, g);
        if (c == base_->zero()) continue;
        std::string label;
        auto exps = group_.element(g);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            label += kGens[i % 4];
            if (exps[i] > 1) label += "^" + std::to_string(exps[i]);
        }
        std::string coeff = base_->format(c);
        if (!s.empty()) s += "+";
        if (label.empty()) {
            s += coeff;
        } else {
            if (coeff != "1") s += "(" + coeff + ")";
            s += label;
        }
    }
    return s.empty() ? "0" : s;
}

// ---- DirectProductRing ----------------------------------------------------

DirectProductRing::DirectProductRing(std::vector<RingPtr> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("product needs >= 1 factor");
}

std::string DirectProductRing::name() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " x ";
        s += factors_[i]->name();
    }
    return s;
}

std::optional<std::uint64_t> DirectProductRing::cardinality() const {
    std::uint64_t total = 1;
    for (const auto& f : factors_) {
        auto c = f->cardinality();
        if (!c) return std::nullopt;
        total *= *c;
    }
    return total;
}

std::size_t DirectProductRing::coord_count() const {
    std::size_t total = 0;
    for (const auto& f : factors_) total += f->coord_count();
    return total;
}

bool DirectProductRing::commutative() const {
    for (const auto& f : factors_)
        if (!f->commutative()) return false;
    return true;
}

Element DirectProductRing::component(const Element& x, std::size_t i) const {
    std::size_t offset = 0;
    for (std::size_t k = 0; k < i; ++k) offset += factors_[k]->coord_count();
    auto begin = x.coords.begin() + static_cast<std::ptrdiff_t>(offset);
    return {factors_[i].get(),
            Coords(begin, begin + static_cast<std::ptrdiff_t>(factors_[i]->coord_count()))};
}

Element DirectProductRing::from_components(const std::vector<Element>& parts) const {
    if (parts.size() != factors_.size())
        throw std::invalid_argument("component count mismatch");
    Coords c;
    c.reserve(coord_count());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        factors_[i]->require_member(parts[i]);
        c.insert(c.end(), parts[i].coords.begin(), parts[i].coords.end());
    }
    return {this, c};
}

Element DirectProductRing::one() const {
    std::vector<Element> parts;
    for (const auto& f : factors_) parts.push_back(f->one());
    return from_components(parts);
}

Element DirectProductRing::add(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    std::vector<Element> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->add(component(a, i), component(b, i)));
    return from_components(parts);
}

Element DirectProductRing::neg(const Element& a) const {
    require_member(a);
    std::vector<Element> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->neg(component(a, i)));
    return from_components(parts);
}

Element DirectProductRing::mul(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    std::vector<Element> parts;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        parts.push_back(factors_[i]->mul(component(a, i), component(b, i)));
    return from_components(parts);
}

Element DirectProductRing::element_at(std::uint64_t index) const {
    std::vector<Element> parts(factors_.size(), Element{});
    for (std::size_t i = factors_.size(); i-- > 0;) {
        std::uint64_t c = *factors_[i]->cardinality();
        parts[i] = factors_[i]->element_at(index % c);
        index /= c;
    }
    return from_components(parts);
}

std::string DirectProductRing::format(const Element& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ",";
        s += factors_[i]->format(component(x, i));
    }
    return s + ")";
}

// ---- QuotientRing ---------------------------------------------------------

QuotientRing::QuotientRing(RingPtr base, std::vector<Coords> ideal_elements,
                           std::string ideal_label, std::uint64_t cap)
    : base_(std::move(base)),
      ideal_size_(ideal_elements.size()),
      ideal_label_(std::move(ideal_label)) {
    std::uint64_t n = base_->finite_cardinality(cap);
    rep_of_.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        Element x = base_->element_at(i);
        if (rep_of_.count(x.coords)) continue;
        // first unassigned element in enumeration order is the least of its coset
        representatives_.push_back(x.coords);
        for (const Coords& d : ideal_elements) {
            Element shifted = base_->add(x, Element{base_.get(), d});
            rep_of_[shifted.coords] = x.coords;
        }
    }
}

Element QuotientRing::normalize(Coords base_coords) const {
    auto it = rep_of_.find(base_coords);
    if (it == rep_of_.end())
        throw DescriptorMismatch("coords are not canonical for " + name());
    return {this, it->second};
}

Element QuotientRing::project(const Element& base_element) const {
    base_->require_member(base_element);
    return normalize(base_element.coords);
}

std::string QuotientRing::name() const {
    return base_->name() + " / " + ideal_label_;
}

Element QuotientRing::one() const { return normalize(base_->one().coords); }

Element QuotientRing::add(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    return normalize(
        base_->add(Element{base_.get(), a.coords}, Element{base_.get(), b.coords}).coords);
}

Element QuotientRing::neg(const Element& a) const {
    require_member(a);
    return normalize(base_->neg(Element{base_.get(), a.coords}).coords);
}

Element QuotientRing::mul(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    return normalize(
        base_->mul(Element{base_.get(), a.coords}, Element{base_.get(), b.coords}).coords);
}

Element QuotientRing::element_at(std::uint64_t index) const {
    return {this, representatives_.at(index)};
}

std::string QuotientRing::format(const Element& x) const {
    return base_->format(Element{base_.get(), x.coords});
}

// ---- PolynomialRing -------------------------------------------------------

PolynomialRing::PolynomialRing(std::shared_ptr<const ModularIntRing> base, std::string var)
    : base_(std::move(base)), var_(std::move(var)) {}

Coords PolynomialRing::trim(Coords c) const {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

Element PolynomialRing::from_coefficients(Coords ascending) const {
    const std::int64_t n = base_->modulus();
    for (auto& c : ascending) c = ((c % n) + n) % n;
    return {this, trim(std::move(ascending))};
}

Element PolynomialRing::add(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    Coords c(std::max(a.coords.size(), b.coords.size()), 0);
    for (std::size_t i = 0; i < a.coords.size(); ++i) c[i] = a.coords[i];
    for (std::size_t i = 0; i < b.coords.size(); ++i)
        c[i] = (c[i] + b.coords[i]) % base_->modulus();
    return {this, trim(std::move(c))};
}

Element PolynomialRing::neg(const Element& a) const {
    require_member(a);
    Coords c(a.coords.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = (base_->modulus() - a.coords[i]) % base_->modulus();
    return {this, trim(std::move(c))};
}

Element PolynomialRing::mul(const Element& a, const Element& b) const {
    require_member(a);
    require_member(b);
    if (a.coords.empty() || b.coords.empty()) return zero();
    Coords c(a.coords.size() + b.coords.size() - 1, 0);
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        for (std::size_t j = 0; j < b.coords.size(); ++j)
            c[i + j] = (c[i + j] + a.coords[i] * b.coords[j]) % base_->modulus();
    return {this, trim(std::move(c))};
}

Element PolynomialRing::element_at(std::uint64_t) const {
    throw InfiniteRing(name() + " cannot be enumerated");
}

std::optional<Element> PolynomialRing::inverse(const Element& x) const {
    require_member(x);
    const std::int64_t n = base_->modulus();
    if (x.coords.empty()) return std::nullopt;
    if (std::gcd(x.coords[0], n) != 1) return std::nullopt;
    const std::int64_t rad = static_cast<std::int64_t>(radical(static_cast<std::uint64_t>(n)));
    for (std::size_t i = 1; i < x.coords.size(); ++i)
        if (x.coords[i] % rad != 0) return std::nullopt;
    // unit: constant term invertible, higher part nilpotent; the power
    // sequence reaches 1 in finitely many steps
    Element prev = one();
    Element cur = x;
    while (!(cur == one())) {
        prev = cur;
        cur = mul(cur, x);
    }
    return prev;
}

std::string PolynomialRing::format(const Element& x) const {
    return format_poly(x.coords, var_);
}

}  // namespace rings
