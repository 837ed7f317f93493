#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "regcensus/fpring.hpp"
#include "regcensus/permrep.hpp"

namespace regcensus {

inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;
inline constexpr size_t kDefaultClosureCap = 1'000'000;

// p^e, saturating at 2^63 so cap comparisons stay meaningful.
std::uint64_t pow_saturating(std::uint64_t base, int exp);

enum class CheckStatus { Pass, Fail, Skipped };

struct NamedCheck {
    std::string name;
    CheckStatus status;
};

/// Canonical coordinates of one regular subgroup <s, t_{g,x}, t_{h,y}>.
/// The two twisted shifts commute exactly when (x-1)h y = (y-1)g x, the
/// compatibility condition every stored pair satisfies; canonical means the
/// (0,0) coefficient of both g and h is zero, fixing the representatives
/// modulo the all-ones element.
struct RegParams {
    RingElem g, h;
    bool canonical = false;

    // Serialization contract: g digits, ':', h digits.
    std::string key() const { return g.to_digits() + ":" + h.to_digits(); }

    friend bool operator==(const RegParams& a, const RegParams& b) {
        return a.g == b.g && a.h == b.h;
    }
    friend auto operator<=>(const RegParams& a, const RegParams& b) {
        if (auto c = a.g <=> b.g; c != 0) return c;
        return a.h <=> b.h;
    }
};

// Subtracts the (0,0) coefficient times the all-ones element from g and from
// h. Throws std::invalid_argument unless (x-1)h y = (y-1)g x.
RegParams canonicalize(const RingElem& g, const RingElem& h);

// The commutation obstruction (y-1)g x = (x-1)h y of a compatible pair; it
// ranges over the next ideal power as the census is swept.
RingElem compat_element(const RegParams& rp);

/// The complete set of canonical parameter pairs for one (p, k), packed as
/// digit rows (g digits then h digits) and sorted; the backing store for both
/// enumeration output and orbit counting.
class ParamTable {
public:
    // Throws CapExceeded when the predicted count p^(dim A + dim B +
    // dim I_{k+1} - 2) exceeds enum_cap; std::invalid_argument unless
    // p <= k <= 2(p-1).
    static ParamTable build(const Context& ctx, int k, std::uint64_t enum_cap);

    int p() const { return p_; }
    size_t size() const { return order_.size(); }
    std::span<const std::uint8_t> packed(size_t idx) const;
    RegParams unpack(size_t idx) const;
    std::optional<size_t> find(const RegParams& rp) const;

private:
    ParamTable(int p, std::vector<std::uint8_t> data, std::vector<std::uint32_t> order)
        : p_(p), data_(std::move(data)), order_(std::move(order)) {}

    size_t row_bytes() const { return static_cast<size_t>(2 * p_ * p_); }

    int p_;
    std::vector<std::uint8_t> data_;     // rows in sweep order
    std::vector<std::uint32_t> order_;   // row ids sorted by packed bytes
};

// All canonical parameter pairs, sorted by serialization.
std::vector<RegParams> enumerate_reg(const Context& ctx, int k, std::uint64_t enum_cap);

// The generators {s, t_{g,x}, t_{h,y}} as permutations.
GenSet params_to_group(const Context& ctx, const RegParams& rp);

/// Everything computed or predicted for one (p, k). Orbit fields stay empty
/// until the conjugation pass fills them in.
struct CensusReport {
    int p = 0, k = 0;
    int dim_Ik = 0, dim_Ik_plus_1 = 0, dim_Ak = 0, dim_Bk = 0;
    int gamma_order_exp = 0;           // |Gamma| = p^this
    int reg_count_expected_exp = 0;    // |reg| = p^this
    std::optional<std::uint64_t> reg_count_enumerated;
    int d = 0;                         // 2p - k - 1
    std::optional<std::uint64_t> b_H;
    std::map<std::uint64_t, std::uint64_t> orbit_size_hist;
    std::optional<std::uint64_t> orbit_size_min, orbit_size_max;
    std::optional<bool> bound_count_lower, bound_count_upper;   // on b_H
    std::optional<bool> bound_orbit_sandwich;                   // on orbit sizes
    std::optional<bool> bound_headline;                         // k = p only
    std::vector<NamedCheck> checks;
    std::vector<std::string> skipped;

    bool any_failed() const;
};

// Dimension fields, formula checks, and (when under cap) the enumerated
// count; cap exhaustion is reported as skipped entries, not an error.
CensusReport census_counts(const Context& ctx, int k, std::uint64_t enum_cap);

}  // namespace regcensus
