#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rslocal {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr const char* kReportSchema = "rslocal-report/1";

/// One verification record: what was checked (name), which identity it
/// verifies, the inputs, and expected/got with a pass/fail/skip verdict.
struct CheckRecord {
    std::string name;
    std::string identity;
    std::string inputs;
    std::string expected;
    std::string got;
    std::string verdict;  // "pass" | "fail" | "skip"

    static CheckRecord pass_fail(std::string name, std::string identity, std::string inputs,
                                 std::string expected, std::string got, bool ok);
    static CheckRecord skip(std::string name, std::string identity, std::string inputs,
                            std::string reason);
};

/// Machine-readable report: one JSON record per line (header, then checks)
/// followed by a human-readable summary footer. Byte-stable for identical
/// config + artifact version; timing is deliberately not part of the file.
struct Report {
    std::string pipeline;
    std::string version = kArtifactVersion;
    std::uint64_t seed = 0;
    unsigned trunc = 0;
    std::vector<std::pair<std::string, std::string>> inputs_echo;  // resolved config
    std::vector<CheckRecord> checks;

    std::size_t count(const char* verdict) const;
    bool overall_pass() const { return count("fail") == 0; }

    std::string render() const;
    /// Writes render() to the path; throws std::runtime_error on I/O failure.
    void write_file(const std::string& path) const;
    /// The footer lines only (for the CLI's stdout summary).
    std::string summary() const;
};

}  // namespace rslocal
