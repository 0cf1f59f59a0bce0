#pragma once

#include <string>

#include <json.hpp>

namespace teichlab {

// Envelope for one experiment run.  Serialization is deterministic: keys are
// emitted in sorted order, numbers in shortest round-trip form, and no
// timestamps or machine identifiers are recorded, so identical parameters and
// seed reproduce the file byte for byte.
struct ExperimentReport {
    std::string id;
    std::string outcome;  // experiment-specific, e.g. "diverging"
    std::string verdict;  // "pass" | "fail" | "inconclusive"
    nlohmann::json parameters;
    nlohmann::json details;
    std::string profile_csv;

    nlohmann::json to_json() const;
    std::string dump() const;  // 2-space indent, trailing newline
    int exit_code() const;     // 0 pass, 1 fail, 2 inconclusive
};

// Shortest round-trip decimal form of a double, for CSV cells.
std::string csv_num(double v);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace teichlab
