#include "teichlab/report.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace teichlab {

nlohmann::json ExperimentReport::to_json() const {
    nlohmann::json j;
    j["id"] = id;
    j["outcome"] = outcome;
    j["verdict"] = verdict;
    j["parameters"] = parameters;
    j["details"] = details;
    j["profile_csv"] = profile_csv;
    return j;
}

std::string ExperimentReport::dump() const { return to_json().dump(2) + "\n"; }

int ExperimentReport::exit_code() const {
    if (verdict == "pass") return 0;
    if (verdict == "fail") return 1;
    return 2;
}

std::string csv_num(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace teichlab
