#ifndef GOCHA_JSON_IO_HPP
#define GOCHA_JSON_IO_HPP

#include <string>

#include "gocha/cohomology.hpp"
#include "gocha/gradation.hpp"

namespace gocha {

// Machine-readable reports. Keys are emitted sorted and the field sets are
// fixed, so output is stable across runs and platforms.

// {"dims": [...], "exact_to_degree": N, "matched_model": "...",
//  "mild": bool, "warnings": [...]}
std::string gocha_report_json(const GochaReport& rep);

// {"cd": n, "certificate": "...", "certified": bool, "h": [...],
//  "note": "...", "split_cd": n | null}
std::string cohomology_table_json(const CohomologyTable& t);

} // namespace gocha

#endif
