// Check reports: every command and verification produces one of these, and
// the two serializations (JSON for scripts, text for people) are built here.
// JSON output is deterministic: alphabetically sorted keys and canonical
// value strings, so identical inputs give byte-identical reports. Timing is
// carried alongside but only shown in the text form, keeping the JSON stable
// across runs.
#pragma once

#include <string>
#include <vector>

namespace dsym {

struct Check {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

class Report {
public:
    Report() = default;
    explicit Report(std::string command) : command_(std::move(command)) {}

    const std::string& command() const { return command_; }

    /// Records an echoed input; values are kept as strings verbatim.
    void set_input(const std::string& key, const std::string& value);
    void set_input(const std::string& key, long long value);

    /// Adds a check; the default pass flag is string equality.
    void add_check(const std::string& name, const std::string& expected,
                   const std::string& computed);
    void add_check(const std::string& name, const std::string& expected,
                   const std::string& computed, bool pass);

    const std::vector<Check>& checks() const { return checks_; }
    bool pass() const;

    void set_elapsed(double seconds) { elapsed_ = seconds; }
    double elapsed() const { return elapsed_; }

    /// Compact deterministic JSON: {command, inputs, checks, pass}.
    std::string json() const;

    /// Human-readable listing with one line per check and the elapsed time.
    std::string text() const;

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<Check> checks_;
    double elapsed_ = 0.0;
};

} // namespace dsym
