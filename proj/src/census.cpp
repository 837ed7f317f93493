#include "regcensus/census.hpp"

#include <algorithm>
#include <cstring>
#include <set>

namespace regcensus {

std::uint64_t pow_saturating(std::uint64_t base, int exp) {
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > kLimit / base) return kLimit;
        r *= base;
    }
    return r;
}

bool CensusReport::any_failed() const {
    return std::any_of(checks.begin(), checks.end(),
                       [](const NamedCheck& c) { return c.status == CheckStatus::Fail; });
}

RegParams canonicalize(const RingElem& g, const RingElem& h) {
    const Context ctx(g.p());
    if (h.times_x_minus_one().shifted(0, 1) != g.times_y_minus_one().shifted(1, 0))
        throw std::invalid_argument("incompatible parameters: (x-1)h y != (y-1)g x");
    const RingElem ones = RingElem::all_ones(ctx);
    RegParams rp{g, h, true};
    if (const int c = rp.g.at(0, 0); c != 0) rp.g -= ones.scaled(c);
    if (const int c = rp.h.at(0, 0); c != 0) rp.h -= ones.scaled(c);
    return rp;
}

RingElem compat_element(const RegParams& rp) {
    return rp.g.times_y_minus_one().shifted(1, 0);
}

namespace {

void validate_k_range(const Context& ctx, int k) {
    if (k < ctx.p() || k > 2 * (ctx.p() - 1))
        throw std::invalid_argument("k=" + std::to_string(k) + " outside [p, 2(p-1)] for p=" +
                                    std::to_string(ctx.p()));
}

// Echelon rows whose pivot is not the (0,0) coordinate. Since the all-ones
// element lies in the kernel spaces used below, these rows span a complement
// of it consisting of elements with zero (0,0) coefficient; sweeping them
// produces each canonical representative exactly once.
std::vector<RingElem> drop_corner_pivot(const IdealBasis& s) {
    std::vector<RingElem> rows;
    for (const auto& row : s.rows())
        if (row.at(0, 0) == 0) rows.push_back(row);
    return rows;
}

std::vector<RingElem> offset_sweep(const Context& ctx, const std::vector<RingElem>& rows) {
    IdealBasis sub = IdealBasis::span_of(ctx, rows, false);
    return span_elements(sub);
}

}  // namespace

ParamTable ParamTable::build(const Context& ctx, int k, std::uint64_t enum_cap) {
    validate_k_range(ctx, k);
    const int p = ctx.p();
    const RingElem a = RingElem::x_minus_one(ctx);
    const RingElem b = RingElem::y_minus_one(ctx);
    const IdealBasis ideal_k = augmentation_power(ctx, k);
    const IdealBasis ideal_k1 = augmentation_power(ctx, k + 1);
    const IdealBasis ker_a = mult_kernel(ideal_k, a);
    const IdealBasis ker_b = mult_kernel(ideal_k, b);

    const int exp = ker_a.dim() + ker_b.dim() + ideal_k1.dim() - 2;
    const std::uint64_t expected = pow_saturating(static_cast<std::uint64_t>(p), exp);
    if (expected > enum_cap)
        throw CapExceeded("predicted census size p^" + std::to_string(exp) +
                          " exceeds enumeration cap " + std::to_string(enum_cap));

    // For the commutation value c = (y-1)g x = (x-1)h y, g sweeps a fiber of
    // multiplication by (y-1) and h of multiplication by (x-1); dropping the
    // all-ones direction from each kernel keeps exactly the canonical
    // representatives.
    const auto g_offsets = offset_sweep(ctx, drop_corner_pivot(ker_b));
    const auto h_offsets = offset_sweep(ctx, drop_corner_pivot(ker_a));
    const auto compat_values = span_elements(ideal_k1);

    const size_t row_bytes = static_cast<size_t>(2 * p * p);
    std::vector<std::uint8_t> data;
    data.reserve(static_cast<size_t>(expected) * row_bytes);
    for (const auto& c : compat_values) {
        const auto g0 = solve_mult(ideal_k, b, c.shifted(-1, 0));
        const auto h0 = solve_mult(ideal_k, a, c.shifted(0, -1));
        if (!g0 || !h0)
            throw std::logic_error("compatibility value has no preimage in the ideal");
        for (const auto& gu : g_offsets) {
            const RingElem g = *g0 + gu;
            for (const auto& hv : h_offsets) {
                const RegParams rp = canonicalize(g, *h0 + hv);
                const auto gd = rp.g.flat();
                const auto hd = rp.h.flat();
                data.insert(data.end(), gd.begin(), gd.end());
                data.insert(data.end(), hd.begin(), hd.end());
            }
        }
    }

    const size_t count = data.size() / row_bytes;
    std::vector<std::uint32_t> order(count);
    for (size_t i = 0; i < count; ++i) order[i] = static_cast<std::uint32_t>(i);
    const auto* base = data.data();
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        return std::memcmp(base + x * row_bytes, base + y * row_bytes, row_bytes) < 0;
    });
    for (size_t i = 1; i < count; ++i)
        if (std::memcmp(base + order[i - 1] * row_bytes, base + order[i] * row_bytes,
                        row_bytes) == 0)
            throw std::logic_error("duplicate canonical parameters in census sweep");
    if (count != expected)
        throw std::logic_error("census sweep produced an unexpected count");
    return ParamTable(p, std::move(data), std::move(order));
}

std::span<const std::uint8_t> ParamTable::packed(size_t idx) const {
    return {data_.data() + static_cast<size_t>(order_[idx]) * row_bytes(), row_bytes()};
}

RegParams ParamTable::unpack(size_t idx) const {
    const Context ctx(p_);
    const auto row = packed(idx);
    const int n = p_ * p_;
    RingElem g(ctx), h(ctx);
    for (int i = 0; i < p_; ++i)
        for (int j = 0; j < p_; ++j) {
            g.set(i, j, row[static_cast<size_t>(i * p_ + j)]);
            h.set(i, j, row[static_cast<size_t>(n + i * p_ + j)]);
        }
    return RegParams{std::move(g), std::move(h), true};
}

std::optional<size_t> ParamTable::find(const RegParams& rp) const {
    std::vector<std::uint8_t> key;
    key.reserve(row_bytes());
    const auto gd = rp.g.flat();
    const auto hd = rp.h.flat();
    key.insert(key.end(), gd.begin(), gd.end());
    key.insert(key.end(), hd.begin(), hd.end());
    size_t lo = 0, hi = size();
    while (lo < hi) {
        const size_t mid = lo + (hi - lo) / 2;
        const int cmp = std::memcmp(packed(mid).data(), key.data(), row_bytes());
        if (cmp == 0) return mid;
        if (cmp < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

std::vector<RegParams> enumerate_reg(const Context& ctx, int k, std::uint64_t enum_cap) {
    const ParamTable table = ParamTable::build(ctx, k, enum_cap);
    std::vector<RegParams> out;
    out.reserve(table.size());
    for (size_t i = 0; i < table.size(); ++i) out.push_back(table.unpack(i));
    return out;
}

GenSet params_to_group(const Context& ctx, const RegParams& rp) {
    std::vector<Perm> gens{block_translation(ctx, RingElem::all_ones(ctx)),
                           twisted_shift(ctx, rp.g, Axis::X),
                           twisted_shift(ctx, rp.h, Axis::Y)};
    return GenSet(std::move(gens), "G(" + rp.key() + ")");
}

CensusReport census_counts(const Context& ctx, int k, std::uint64_t enum_cap) {
    validate_k_range(ctx, k);
    const int p = ctx.p();
    const RingElem a = RingElem::x_minus_one(ctx);
    const RingElem b = RingElem::y_minus_one(ctx);
    const IdealBasis ideal_k = augmentation_power(ctx, k);
    const IdealBasis ideal_k1 = augmentation_power(ctx, k + 1);
    const IdealBasis ker_a = mult_kernel(ideal_k, a);
    const IdealBasis ker_b = mult_kernel(ideal_k, b);

    CensusReport rep;
    rep.p = p;
    rep.k = k;
    rep.dim_Ik = ideal_k.dim();
    rep.dim_Ik_plus_1 = ideal_k1.dim();
    rep.dim_Ak = ker_a.dim();
    rep.dim_Bk = ker_b.dim();
    rep.gamma_order_exp = 2 + rep.dim_Ik;
    rep.reg_count_expected_exp = rep.dim_Ak + rep.dim_Bk + rep.dim_Ik_plus_1 - 2;
    rep.d = 2 * p - k - 1;

    const int n = 2 * p - k;
    auto push = [&](std::string name, bool ok) {
        rep.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail});
    };
    push("dim_Ik_formula", rep.dim_Ik == n * (n - 1) / 2);
    push("image_a_eq_Ik1", mult_image(ideal_k, a) == ideal_k1);
    push("image_b_eq_Ik1", mult_image(ideal_k, b) == ideal_k1);
    push("kernel_dim_a", rep.dim_Ak == 2 * p - k - 1);
    push("kernel_dim_b", rep.dim_Bk == 2 * p - k - 1);
    push("rank_nullity", rep.dim_Ik == rep.dim_Ak + rep.dim_Ik_plus_1);
    push("d_formula",
         rep.d == rep.dim_Ak + rep.dim_Bk + rep.dim_Ik_plus_1 - rep.dim_Ik);

    const std::uint64_t expected =
        pow_saturating(static_cast<std::uint64_t>(p), rep.reg_count_expected_exp);
    if (expected > enum_cap) {
        auto skip = [&](std::string name) {
            rep.skipped.push_back(name);
            rep.checks.push_back({std::move(name), CheckStatus::Skipped});
        };
        skip("reg_count_matches");
        skip("compat_covers_next_ideal");
        return rep;
    }

    const ParamTable table = ParamTable::build(ctx, k, enum_cap);
    rep.reg_count_enumerated = table.size();
    push("reg_count_matches", table.size() == expected);

    // Each pair's commutation value must cover I_{k+1} exactly.
    std::set<std::string> compat_seen;
    bool compat_members = true;
    for (size_t i = 0; i < table.size(); ++i) {
        const RingElem c = compat_element(table.unpack(i));
        compat_members = compat_members && ideal_k1.contains(c);
        compat_seen.insert(c.to_digits());
    }
    push("compat_covers_next_ideal",
         compat_members &&
             compat_seen.size() ==
                 pow_saturating(static_cast<std::uint64_t>(p), rep.dim_Ik_plus_1));
    return rep;
}

}  // namespace regcensus
