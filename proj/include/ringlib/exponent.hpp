#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringlib/ideal.hpp"
#include "ringlib/ring.hpp"

namespace rings {

enum class WMode { ring_order, unit_count };
enum class Verdict { verified, failed, skipped };

std::string to_string(WMode m);
std::string to_string(Verdict v);

// The theorem-side bounds M1/M2/M3 with the brute-force oracle's verdicts.
struct ExponentReport {
    std::string ring_name;
    std::optional<std::uint64_t> unit_count;  // |R*|, absent when not enumerable
    std::optional<std::uint64_t> ring_order;  // o(R)
    std::uint64_t w = 0;
    WMode w_mode = WMode::ring_order;
    std::optional<std::uint64_t> m1, m2, m3;
    std::map<std::string, Verdict> verdicts;  // keys M1, M2, M3
    bool m1_divides_m2 = false;               // observed, not asserted

    bool all_verified() const;
};

// lcm of the orders of all units; equals min E(R).
std::uint64_t ring_order(const Ring& ring, std::uint64_t cap = kDefaultCap);

// True iff x^m = 1 for every unit x.
bool exponent_member(const Ring& ring, std::uint64_t m, std::uint64_t cap = kDefaultCap);

// Computes Q = R/N_1, w per w_mode, and
//   M1 = w * s_1...s_{k-1},  M2 = |Q*| * s_1...s_{k-1},  M3 = |Q*| * |N_1|,
// then oracle-checks each bound against the full unit group when R is
// enumerable.
ExponentReport fermat_bounds(RingPtr ring, const CncChain& chain,
                             WMode w_mode = WMode::ring_order,
                             std::uint64_t cap = kDefaultCap);

struct EulerEntry {
    RingPtr ring;
    CncChain chain;
};

struct EulerReport {
    std::vector<std::uint64_t> m_values;   // m_i = |(R_i/N_i1)*| * prod s_il
    std::uint64_t lcm = 1;                 // the theorem's combined exponent
    std::uint64_t product = 1;             // the classical-recovery form; lcm | product
    Verdict product_oracle = Verdict::skipped;  // y^M = (1,..,1) over the direct product
    Verdict lcm_oracle = Verdict::skipped;
};

EulerReport euler_lcm(const std::vector<EulerEntry>& entries,
                      std::uint64_t cap = kDefaultCap);

// Membership check for (1+n)^p = 1 + p*n*r with r ranging over R.
bool check_lifting_identity(const Ring& ring, const Ideal& nil_ideal, std::uint64_t p,
                            const Element& n, std::uint64_t cap = kDefaultCap);

// Per-member verification of x^(w*s_1...s_{k-1}) = 1 over the coset f + N_1.
struct ResidueClassRecord {
    std::uint64_t exponent = 0;  // w * s_1...s_{k-1}
    std::vector<Element> coset;
    std::vector<std::uint64_t> orders;  // exact order of each coset member
    bool all_satisfy = false;
    bool orders_divide = false;  // meaningful when w is the order of f + N_1
};

ResidueClassRecord residue_class_exponent(RingPtr ring, const CncChain& chain,
                                          const Element& f, std::uint64_t w,
                                          std::uint64_t cap = kDefaultCap);

}  // namespace rings
