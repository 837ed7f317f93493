#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "regcensus/census.hpp"
#include "regcensus/fpring.hpp"
#include "regcensus/permrep.hpp"

namespace regcensus {

/// Conjugation by Gamma(I_k) written directly on canonical parameter pairs:
/// conjugating by tau_x or tau_y multiplies (g, h) by x resp. y, and
/// conjugating by sigma_u translates (g, h) by (u(x^-1 - 1), u(y^-1 - 1)).
/// Every map lands back in the canonical parameter set and agrees with
/// permutation-level conjugation by the matching group element.
class ParamAction {
public:
    ParamAction(const Context& ctx, int k);

    int generator_count() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int gen) const { return labels_[static_cast<size_t>(gen)]; }
    RegParams apply(int gen, const RegParams& rp) const;

    // The group element realizing generator gen as a permutation (tau_x,
    // tau_y, or sigma_u); conjugating by it matches apply() at desk scale.
    Perm generator_perm(int gen) const;

private:
    Context ctx_;
    std::vector<std::string> labels_;
    std::vector<RingElem> translate_sources_;              // basis u of I_k
    std::vector<std::pair<RingElem, RingElem>> offsets_;   // (u(x-1), u(y-1))
};

ParamAction build_action(const Context& ctx, int k);

/// Conjugacy classes of the regular subgroup census under the parameter
/// action.
struct OrbitReport {
    int p = 0, k = 0;
    std::uint64_t class_count = 0;                        // b_H
    std::map<std::uint64_t, std::uint64_t> size_hist;     // orbit size -> multiplicity
    std::uint64_t min_size = 0, max_size = 0;
    std::uint64_t total = 0;
};

// Union-find over the full parameter table; throws CapExceeded via
// ParamTable::build when the census is out of reach.
OrbitReport count_orbits(const Context& ctx, int k, std::uint64_t enum_cap);

struct BoundVerdicts {
    bool count_lower = false;       // b_H >= p^(2p-k-2)
    bool count_upper = false;       // b_H <= p^(2p-k+1)
    bool orbit_sandwich = false;    // sizes within [max(1, p^(dim-4)), p^(dim-1)]
    std::optional<bool> headline;   // k = p only: b_H >= p^(p-2)
};

// Throws std::invalid_argument when the reports describe different (p, k).
BoundVerdicts check_bounds(const OrbitReport& orbit, const CensusReport& census);

void merge_orbit_data(CensusReport& census, const OrbitReport& orbit,
                      const BoundVerdicts& bounds);

/// Brute-force verification path: materializes the whole group, scans for
/// regular elementary abelian subgroups directly, and counts conjugacy
/// classes by conjugating with every group element.
struct OracleReport {
    std::vector<std::vector<Perm>> subgroups;   // sorted element sets, sorted list
    std::uint64_t class_count = 0;
};

OracleReport oracle_reg_and_orbits(const Context& ctx, int k, size_t closure_cap);

}  // namespace regcensus
