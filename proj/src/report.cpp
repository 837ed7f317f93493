#include "regcensus/report.hpp"

#include <sstream>

namespace regcensus {

using nlohmann::ordered_json;

std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

namespace {

ordered_json opt_json(const std::optional<std::uint64_t>& v) {
    if (v) return *v;
    return nullptr;
}

ordered_json opt_json(const std::optional<bool>& v) {
    if (v) return *v;
    return nullptr;
}

}  // namespace

ordered_json report_to_json(const CensusReport& rep) {
    ordered_json doc;
    doc["p"] = rep.p;
    doc["k"] = rep.k;
    doc["dims"] = {{"I_k", rep.dim_Ik},
                   {"I_k1", rep.dim_Ik_plus_1},
                   {"A_k", rep.dim_Ak},
                   {"B_k", rep.dim_Bk}};
    doc["gamma_order_exp"] = rep.gamma_order_exp;
    doc["reg_count_exp"] = rep.reg_count_expected_exp;
    doc["reg_count_enumerated"] = opt_json(rep.reg_count_enumerated);
    doc["d"] = rep.d;
    doc["b_H"] = opt_json(rep.b_H);
    ordered_json hist = ordered_json::object();
    for (const auto& [size, mult] : rep.orbit_size_hist) hist[std::to_string(size)] = mult;
    doc["orbit_sizes"] = hist;
    doc["m_k"] = opt_json(rep.orbit_size_min);
    doc["M_k"] = opt_json(rep.orbit_size_max);
    doc["bounds"] = {{"eq090616a_lower", opt_json(rep.bound_count_lower)},
                     {"eq090616a_upper", opt_json(rep.bound_count_upper)},
                     {"lemma070616a3", opt_json(rep.bound_orbit_sandwich)},
                     {"theorem251015b", opt_json(rep.bound_headline)}};
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"status", check_status_name(c.status)}});
    doc["checks"] = checks;
    doc["skipped"] = rep.skipped;
    return doc;
}

std::string reports_to_json_text(std::span<const CensusReport> reps) {
    ordered_json arr = ordered_json::array();
    for (const auto& rep : reps) arr.push_back(report_to_json(rep));
    return arr.dump(2) + "\n";
}

namespace {

std::string csv_opt(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string{};
}

std::string csv_opt(const std::optional<bool>& v) {
    if (!v) return {};
    return *v ? "true" : "false";
}

}  // namespace

std::string reports_to_csv_text(std::span<const CensusReport> reps) {
    std::ostringstream os;
    os << "p,k,dim_I_k,dim_I_k1,dim_A_k,dim_B_k,gamma_order_exp,reg_count_exp,"
          "reg_count_enumerated,d,b_H,m_k,M_k,orbit_sizes,eq090616a_lower,eq090616a_upper,"
          "lemma070616a3,theorem251015b,checks,skipped\n";
    for (const auto& rep : reps) {
        os << rep.p << ',' << rep.k << ',' << rep.dim_Ik << ',' << rep.dim_Ik_plus_1 << ','
           << rep.dim_Ak << ',' << rep.dim_Bk << ',' << rep.gamma_order_exp << ','
           << rep.reg_count_expected_exp << ',' << csv_opt(rep.reg_count_enumerated) << ','
           << rep.d << ',' << csv_opt(rep.b_H) << ',' << csv_opt(rep.orbit_size_min) << ','
           << csv_opt(rep.orbit_size_max) << ',';
        bool first = true;
        for (const auto& [size, mult] : rep.orbit_size_hist) {
            if (!first) os << ';';
            first = false;
            os << size << ':' << mult;
        }
        os << ',' << csv_opt(rep.bound_count_lower) << ',' << csv_opt(rep.bound_count_upper)
           << ',' << csv_opt(rep.bound_orbit_sandwich) << ',' << csv_opt(rep.bound_headline)
           << ',';
        first = true;
        for (const auto& c : rep.checks) {
            if (!first) os << ';';
            first = false;
            os << c.name << '=' << check_status_name(c.status);
        }
        os << ',';
        first = true;
        for (const auto& name : rep.skipped) {
            if (!first) os << ';';
            first = false;
            os << name;
        }
        os << '\n';
    }
    return os.str();
}

std::string oracle_to_json_text(const OracleComparison& cmp) {
    ordered_json doc;
    doc["p"] = cmp.p;
    doc["k"] = cmp.k;
    doc["oracle_subgroups"] = cmp.oracle_subgroups;
    doc["census_subgroups"] = cmp.census_subgroups;
    doc["sets_agree"] = cmp.sets_agree;
    doc["oracle_b_H"] = cmp.oracle_b_H;
    doc["param_b_H"] = cmp.param_b_H;
    doc["b_H_agree"] = cmp.b_H_agree;
    ordered_json groups = ordered_json::array();
    for (const auto& gens : cmp.subgroup_generators) groups.push_back(gens);
    doc["subgroup_generators"] = groups;
    return doc.dump(2) + "\n";
}

std::string oracle_to_csv_text(const OracleComparison& cmp) {
    std::ostringstream os;
    os << "p,k,oracle_subgroups,census_subgroups,sets_agree,oracle_b_H,param_b_H,b_H_agree\n";
    os << cmp.p << ',' << cmp.k << ',' << cmp.oracle_subgroups << ',' << cmp.census_subgroups
       << ',' << (cmp.sets_agree ? "true" : "false") << ',' << cmp.oracle_b_H << ','
       << cmp.param_b_H << ',' << (cmp.b_H_agree ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace regcensus
