#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rings {

// Finite abelian group given as a direct product of cyclic groups
// C_{m1} x ... x C_{mr}.  Elements are exponent tuples with componentwise
// modular addition, enumerated lexicographically (identity first).
class GroupDescriptor {
public:
    explicit GroupDescriptor(std::vector<std::int64_t> cyclic_orders)
        : factors_(std::move(cyclic_orders)) {
        if (factors_.empty()) factors_.push_back(1);
        order_ = 1;
        for (auto m : factors_) {
            if (m < 1) throw std::invalid_argument("cyclic order must be >= 1");
            order_ *= static_cast<std::uint64_t>(m);
        }
    }

    const std::vector<std::int64_t>& factors() const { return factors_; }
    std::uint64_t order() const { return order_; }

    std::vector<std::int64_t> element(std::uint64_t index) const {
        std::vector<std::int64_t> e(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            e[i] = static_cast<std::int64_t>(index % factors_[i]);
            index /= factors_[i];
        }
        return e;
    }

    std::uint64_t index_of(const std::vector<std::int64_t>& e) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            idx = idx * factors_[i] + static_cast<std::uint64_t>(e[i] % factors_[i]);
        return idx;
    }

    // Index of the product of the elements at indexes a and b.
    std::uint64_t compose(std::uint64_t a, std::uint64_t b) const {
        auto ea = element(a);
        auto eb = element(b);
        for (std::size_t i = 0; i < factors_.size(); ++i)
            ea[i] = (ea[i] + eb[i]) % factors_[i];
        return index_of(ea);
    }

    std::string name() const {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += "x";
            s += "C" + std::to_string(factors_[i]);
        }
        return s;
    }

    bool operator==(const GroupDescriptor& o) const { return factors_ == o.factors_; }

private:
    std::vector<std::int64_t> factors_;
    std::uint64_t order_;
};

}  // namespace rings
