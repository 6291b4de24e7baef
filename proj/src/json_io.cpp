#include "gocha/json_io.hpp"

#include "json.hpp"

namespace gocha {

namespace {

nlohmann::json int_series_json(const IntSeries& s)
{
    auto arr = nlohmann::json::array();
    for (const auto& v : s.coeffs()) {
        // Desk-scale dimensions fit comfortably in 64 bits; anything else
        // is a bug upstream.
        if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min())
            throw std::logic_error("series coefficient exceeds int64 in JSON output");
        arr.push_back(int64_t(v));
    }
    return arr;
}

} // namespace

std::string gocha_report_json(const GochaReport& rep)
{
    nlohmann::json j;
    j["dims"] = int_series_json(rep.dims);
    j["exact_to_degree"] = rep.exact_to_degree;
    j["matched_model"] = rep.matched_model;
    j["mild"] = rep.mild;
    j["warnings"] = rep.warnings;
    return j.dump();
}

std::string cohomology_table_json(const CohomologyTable& t)
{
    nlohmann::json j;
    j["cd"] = t.cd;
    j["certificate"] = t.certificate;
    j["certified"] = t.certified;
    j["h"] = t.h;
    j["note"] = t.note;
    if (t.split_cd)
        j["split_cd"] = *t.split_cd;
    else
        j["split_cd"] = nullptr;
    return j.dump();
}

} // namespace gocha
