#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "regcensus/conj.hpp"

using namespace regcensus;

namespace {

std::vector<Perm> conjugate_sorted(const std::vector<Perm>& elems, const Perm& w) {
    std::vector<Perm> out;
    out.reserve(elems.size());
    for (const auto& q : elems) out.push_back(q.conjugated_by(w));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("action generators") {
    const Context ctx(3);
    const ParamAction action(ctx, 4);
    REQUIRE(action.generator_count() == 3);  // two shifts + dim I_4 = 1
    CHECK(action.label(0) == "shift_x");
    CHECK(action.label(1) == "shift_y");
    CHECK(action.label(2) == "translate_0");

    // The singleton census at (3,4) is fixed by every generator; in
    // particular translating by the all-ones basis element acts trivially.
    const RegParams origin = canonicalize(RingElem(ctx), RingElem(ctx));
    for (int gen = 0; gen < action.generator_count(); ++gen)
        CHECK(action.apply(gen, origin) == origin);
}

TEST_CASE("parameter action matches permutation conjugation") {
    for (auto [p, k] : {std::pair{2, 2}, {3, 3}, {3, 4}}) {
        const Context ctx(p);
        const ParamAction action(ctx, k);
        for (const auto& rp : enumerate_reg(ctx, k, kDefaultEnumCap)) {
            const auto base = group_closure(params_to_group(ctx, rp),
                                            static_cast<size_t>(ctx.degree()));
            for (int gen = 0; gen < action.generator_count(); ++gen) {
                const RegParams image = action.apply(gen, rp);
                CHECK(compat_element(image) == image.h.times_x_minus_one().shifted(0, 1));
                const auto image_set = group_closure(params_to_group(ctx, image),
                                                     static_cast<size_t>(ctx.degree()));
                CHECK(image_set == conjugate_sorted(base, action.generator_perm(gen)));
            }
        }
    }
}

TEST_CASE("class counts") {
    struct Expected {
        int p, k;
        std::uint64_t b_H, min_size, max_size;
    };
    for (const auto& e : {Expected{2, 2, 1, 1, 1},
                          {3, 3, 27, 1, 1},
                          {3, 4, 1, 1, 1},
                          {5, 6, 625, 125, 125},
                          {5, 7, 125, 1, 1},
                          {5, 8, 1, 1, 1},
                          {7, 11, 343, 1, 1},
                          {7, 12, 1, 1, 1}}) {
        const Context ctx(e.p);
        const OrbitReport orb = count_orbits(ctx, e.k, kDefaultEnumCap);
        CHECK(orb.class_count == e.b_H);
        CHECK(orb.min_size == e.min_size);
        CHECK(orb.max_size == e.max_size);

        const CensusReport census = census_counts(ctx, e.k, kDefaultEnumCap);
        CHECK(orb.total == *census.reg_count_enumerated);
        std::uint64_t size_sum = 0;
        for (const auto& [size, mult] : orb.size_hist) {
            size_sum += size * mult;
            std::uint64_t s = size;
            while (s % static_cast<std::uint64_t>(e.p) == 0)
                s /= static_cast<std::uint64_t>(e.p);
            CHECK(s == 1);  // orbit sizes are powers of p
            const std::uint64_t gamma =
                pow_saturating(static_cast<std::uint64_t>(e.p), census.gamma_order_exp);
            CHECK(gamma % size == 0);  // and divide the group order
        }
        CHECK(size_sum == orb.total);
    }
}

TEST_CASE("bound verdicts") {
    for (auto [p, k] : {std::pair{2, 2}, {3, 3}, {3, 4}, {5, 6}, {5, 7}, {5, 8}}) {
        const Context ctx(p);
        const OrbitReport orb = count_orbits(ctx, k, kDefaultEnumCap);
        const CensusReport census = census_counts(ctx, k, kDefaultEnumCap);
        const BoundVerdicts v = check_bounds(orb, census);
        CHECK(v.count_lower);
        CHECK(v.count_upper);
        CHECK(v.orbit_sandwich);
        if (k == p) {
            REQUIRE(v.headline.has_value());
            CHECK(*v.headline);
        } else {
            CHECK_FALSE(v.headline.has_value());
        }
    }

    // At (3,3) the size lower bound 3^(dim-4) drops below one and clamps.
    const Context ctx(3);
    const OrbitReport orb = count_orbits(ctx, 3, kDefaultEnumCap);
    CHECK(orb.min_size == 1);

    const CensusReport other = census_counts(ctx, 4, kDefaultEnumCap);
    CHECK_THROWS_AS(check_bounds(orb, other), std::invalid_argument);
}

TEST_CASE("headline bound at k = p") {
    const Context ctx2(2);
    CHECK(count_orbits(ctx2, 2, kDefaultEnumCap).class_count >= 1);  // 2^(p-2) = 1
    const Context ctx3(3);
    CHECK(count_orbits(ctx3, 3, kDefaultEnumCap).class_count >= 3);  // 3^(p-2) = 3
}

TEST_CASE("merge_orbit_data fills the report") {
    const Context ctx(3);
    CensusReport census = census_counts(ctx, 3, kDefaultEnumCap);
    const OrbitReport orb = count_orbits(ctx, 3, kDefaultEnumCap);
    merge_orbit_data(census, orb, check_bounds(orb, census));
    CHECK(census.b_H == 27);
    CHECK(census.orbit_size_hist.at(1) == 27);
    CHECK(census.orbit_size_min == 1);
    CHECK(census.orbit_size_max == 1);
    CHECK(census.bound_count_lower == true);
    CHECK(census.bound_headline == true);
    CHECK_FALSE(census.any_failed());
}

TEST_CASE("oracle agreement") {
    for (auto [p, k] : {std::pair{2, 2}, {3, 3}, {3, 4}}) {
        const Context ctx(p);
        const OracleReport oracle = oracle_reg_and_orbits(ctx, k, kDefaultClosureCap);
        const OrbitReport orb = count_orbits(ctx, k, kDefaultEnumCap);
        const CensusReport census = census_counts(ctx, k, kDefaultEnumCap);
        CHECK(oracle.subgroups.size() == *census.reg_count_enumerated);
        CHECK(oracle.class_count == orb.class_count);
    }
    const Context ctx(3);
    CHECK(oracle_reg_and_orbits(ctx, 4, kDefaultClosureCap).subgroups.size() == 1);
    CHECK_THROWS_AS(oracle_reg_and_orbits(ctx, 3, 10), CapExceeded);
}
