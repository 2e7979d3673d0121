#include "rslocal/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rslocal {

CheckRecord CheckRecord::pass_fail(std::string name, std::string identity, std::string inputs,
                                   std::string expected, std::string got, bool ok) {
    return CheckRecord{std::move(name), std::move(identity), std::move(inputs),
                       std::move(expected), std::move(got), ok ? "pass" : "fail"};
}

CheckRecord CheckRecord::skip(std::string name, std::string identity, std::string inputs,
                              std::string reason) {
    return CheckRecord{std::move(name), std::move(identity), std::move(inputs),
                       "", std::move(reason), "skip"};
}

std::size_t Report::count(const char* verdict) const {
    std::size_t n = 0;
    for (const CheckRecord& c : checks)
        if (c.verdict == verdict) ++n;
    return n;
}

std::string Report::summary() const {
    std::ostringstream out;
    out << "# checks: " << checks.size() << "  passed: " << count("pass")
        << "  failed: " << count("fail") << "  skipped: " << count("skip") << "\n";
    out << "# overall: " << (overall_pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string Report::render() const {
    std::ostringstream out;
    nlohmann::ordered_json header;
    header["type"] = "header";
    header["schema"] = kReportSchema;
    header["version"] = version;
    header["pipeline"] = pipeline;
    header["seed"] = seed;
    header["trunc"] = trunc;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [key, value] : inputs_echo) inputs[key] = value;
    header["inputs"] = std::move(inputs);
    out << header.dump() << "\n";

    for (const CheckRecord& c : checks) {
        nlohmann::ordered_json rec;
        rec["type"] = "check";
        rec["name"] = c.name;
        rec["identity"] = c.identity;
        rec["inputs"] = c.inputs;
        rec["expected"] = c.expected;
        rec["got"] = c.got;
        rec["verdict"] = c.verdict;
        out << rec.dump() << "\n";
    }
    out << summary();
    return out.str();
}

void Report::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open report path '" + path + "'");
    out << render();
    if (!out) throw std::runtime_error("failed writing report to '" + path + "'");
}

}  // namespace rslocal
