#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "regcensus/census.hpp"
#include "regcensus/conj.hpp"

namespace regcensus {

std::string check_status_name(CheckStatus s);

// One JSON document per (p, k); field names and order are a stable contract.
nlohmann::ordered_json report_to_json(const CensusReport& rep);
std::string reports_to_json_text(std::span<const CensusReport> reps);

// Flat projection of the same fields, one row per (p, k).
std::string reports_to_csv_text(std::span<const CensusReport> reps);

// Oracle comparison document (used by the oracle command only).
struct OracleComparison {
    int p = 0, k = 0;
    std::uint64_t oracle_subgroups = 0, census_subgroups = 0;
    bool sets_agree = false;
    std::uint64_t oracle_b_H = 0, param_b_H = 0;
    bool b_H_agree = false;
    std::vector<std::vector<std::string>> subgroup_generators;   // serialized perms
};

std::string oracle_to_json_text(const OracleComparison& cmp);
std::string oracle_to_csv_text(const OracleComparison& cmp);

}  // namespace regcensus
