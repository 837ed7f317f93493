#include "regcensus/conj.hpp"

#include <algorithm>
#include <numeric>

namespace regcensus {

ParamAction::ParamAction(const Context& ctx, int k) : ctx_(ctx) {
    const IdealBasis ideal_k = augmentation_power(ctx, k);
    labels_.push_back("shift_x");
    labels_.push_back("shift_y");
    for (size_t r = 0; r < ideal_k.rows().size(); ++r) {
        const RingElem& u = ideal_k.rows()[r];
        labels_.push_back("translate_" + std::to_string(r));
        translate_sources_.push_back(u);
        offsets_.emplace_back(u.shifted(-1, 0) - u, u.shifted(0, -1) - u);
    }
}

ParamAction build_action(const Context& ctx, int k) { return ParamAction(ctx, k); }

RegParams ParamAction::apply(int gen, const RegParams& rp) const {
    switch (gen) {
        case 0: return canonicalize(rp.g.shifted(1, 0), rp.h.shifted(1, 0));
        case 1: return canonicalize(rp.g.shifted(0, 1), rp.h.shifted(0, 1));
        default: {
            const auto& [dx, dy] = offsets_[static_cast<size_t>(gen - 2)];
            return canonicalize(rp.g + dx, rp.h + dy);
        }
    }
}

Perm ParamAction::generator_perm(int gen) const {
    switch (gen) {
        case 0: return exponent_shift(ctx_, Axis::X);
        case 1: return exponent_shift(ctx_, Axis::Y);
        default: return block_translation(ctx_, translate_sources_[static_cast<size_t>(gen - 2)]);
    }
}

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;

    explicit UnionFind(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::uint32_t{0});
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

OrbitReport count_orbits(const Context& ctx, int k, std::uint64_t enum_cap) {
    const ParamTable table = ParamTable::build(ctx, k, enum_cap);
    const ParamAction action(ctx, k);
    UnionFind uf(table.size());
    for (size_t i = 0; i < table.size(); ++i) {
        const RegParams rp = table.unpack(i);
        for (int gen = 0; gen < action.generator_count(); ++gen) {
            const auto j = table.find(action.apply(gen, rp));
            if (!j) throw std::logic_error("conjugation left the parameter set");
            uf.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*j));
        }
    }
    std::map<std::uint32_t, std::uint64_t> class_sizes;
    for (size_t i = 0; i < table.size(); ++i) ++class_sizes[uf.find(static_cast<std::uint32_t>(i))];

    OrbitReport rep;
    rep.p = ctx.p();
    rep.k = k;
    rep.class_count = class_sizes.size();
    rep.total = table.size();
    rep.min_size = table.size();
    rep.max_size = 0;
    for (const auto& [root, size] : class_sizes) {
        ++rep.size_hist[size];
        rep.min_size = std::min(rep.min_size, size);
        rep.max_size = std::max(rep.max_size, size);
    }
    return rep;
}

BoundVerdicts check_bounds(const OrbitReport& orbit, const CensusReport& census) {
    if (orbit.p != census.p || orbit.k != census.k)
        throw std::invalid_argument("orbit and census reports describe different (p, k)");
    const auto p = static_cast<std::uint64_t>(orbit.p);
    const int k = orbit.k;
    BoundVerdicts v;
    v.count_lower = orbit.class_count >= pow_saturating(p, 2 * orbit.p - k - 2);
    v.count_upper = orbit.class_count <= pow_saturating(p, 2 * orbit.p - k + 1);
    // Orbit sizes: p^(dim-4) can drop below one, where the bound is vacuous.
    const std::uint64_t size_lo =
        census.dim_Ik >= 4 ? pow_saturating(p, census.dim_Ik - 4) : 1;
    const std::uint64_t size_hi = pow_saturating(p, census.dim_Ik - 1);
    v.orbit_sandwich = orbit.min_size >= size_lo && orbit.max_size <= size_hi;
    if (k == orbit.p) v.headline = orbit.class_count >= pow_saturating(p, orbit.p - 2);
    return v;
}

void merge_orbit_data(CensusReport& census, const OrbitReport& orbit,
                      const BoundVerdicts& bounds) {
    census.b_H = orbit.class_count;
    census.orbit_size_hist = orbit.size_hist;
    census.orbit_size_min = orbit.min_size;
    census.orbit_size_max = orbit.max_size;
    census.bound_count_lower = bounds.count_lower;
    census.bound_count_upper = bounds.count_upper;
    census.bound_orbit_sandwich = bounds.orbit_sandwich;
    census.bound_headline = bounds.headline;
    auto push = [&](std::string name, bool ok) {
        census.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail});
    };
    push("orbit_sum_matches", orbit.total == census.reg_count_enumerated.value_or(0));
    bool powers = true;
    for (const auto& [size, mult] : orbit.size_hist) {
        std::uint64_t s = size;
        while (s % static_cast<std::uint64_t>(census.p) == 0)
            s /= static_cast<std::uint64_t>(census.p);
        powers = powers && s == 1;
    }
    push("orbit_sizes_p_powers", powers);
}

namespace {

Perm induced_block_perm(const Context& ctx, const Perm& q) {
    const int p = ctx.p();
    std::vector<std::uint16_t> img(static_cast<size_t>(p * p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            const auto c = point_coords(p, q(point_index(p, i, j, 0)));
            img[static_cast<size_t>(i * p + j)] = static_cast<std::uint16_t>(c.i * p + c.j);
        }
    return Perm::from_images(std::move(img));
}

std::vector<Perm> conjugate_set(const std::vector<Perm>& elems, const Perm& w) {
    std::vector<Perm> out;
    out.reserve(elems.size());
    for (const auto& q : elems) out.push_back(q.conjugated_by(w));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

OracleReport oracle_reg_and_orbits(const Context& ctx, int k, size_t closure_cap) {
    const int p = ctx.p();
    const IdealBasis ideal_k = augmentation_power(ctx, k);
    const auto gamma = group_closure(gamma_generators(ctx, ideal_k), closure_cap);

    // Cell shift induced on the blocks by tau_x resp. tau_y.
    const Perm x_cells = induced_block_perm(ctx, exponent_shift(ctx, Axis::X));
    const Perm y_cells = induced_block_perm(ctx, exponent_shift(ctx, Axis::Y));
    std::vector<Perm> to_x, to_y;
    for (const auto& q : gamma) {
        if (q.order() != static_cast<std::uint64_t>(p)) continue;
        const Perm cells = induced_block_perm(ctx, q);
        if (cells == x_cells) to_x.push_back(q);
        if (cells == y_cells) to_y.push_back(q);
    }

    const Perm s = block_translation(ctx, RingElem::all_ones(ctx));
    std::vector<std::vector<Perm>> subgroups;
    for (const auto& t1 : to_x)
        for (const auto& t2 : to_y) {
            if (t1.then(t2) != t2.then(t1)) continue;
            const GenSet gens({s, t1, t2}, "candidate");
            if (!is_regular_elementary_abelian(p, gens)) continue;
            auto elems = *try_group_closure(gens, static_cast<size_t>(ctx.degree()));
            subgroups.push_back(std::move(elems));
        }
    std::sort(subgroups.begin(), subgroups.end());
    subgroups.erase(std::unique(subgroups.begin(), subgroups.end()), subgroups.end());

    // Conjugacy classes by conjugating every subgroup with every element.
    auto index_of = [&](const std::vector<Perm>& set) {
        const auto it = std::lower_bound(subgroups.begin(), subgroups.end(), set);
        if (it == subgroups.end() || *it != set)
            throw std::logic_error("conjugate subgroup missing from oracle scan");
        return static_cast<std::uint32_t>(it - subgroups.begin());
    };
    UnionFind uf(subgroups.size());
    for (size_t i = 0; i < subgroups.size(); ++i)
        for (const auto& w : gamma)
            uf.unite(static_cast<std::uint32_t>(i), index_of(conjugate_set(subgroups[i], w)));

    OracleReport rep;
    std::vector<bool> seen(subgroups.size(), false);
    for (size_t i = 0; i < subgroups.size(); ++i) {
        const auto root = uf.find(static_cast<std::uint32_t>(i));
        if (!seen[root]) {
            seen[root] = true;
            ++rep.class_count;
        }
    }
    rep.subgroups = std::move(subgroups);
    return rep;
}

}  // namespace regcensus
