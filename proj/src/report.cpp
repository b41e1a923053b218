#include "deltasym/report.hpp"

#include <json.hpp>

#include <cstdio>

namespace dsym {

void Report::set_input(const std::string& key, const std::string& value) {
    inputs_.emplace_back(key, value);
}

void Report::set_input(const std::string& key, long long value) {
    inputs_.emplace_back(key, std::to_string(value));
}

void Report::add_check(const std::string& name, const std::string& expected,
                       const std::string& computed) {
    add_check(name, expected, computed, expected == computed);
}

void Report::add_check(const std::string& name, const std::string& expected,
                       const std::string& computed, bool pass) {
    checks_.push_back({name, expected, computed, pass});
}

bool Report::pass() const {
    for (const Check& c : checks_)
        if (!c.pass) return false;
    return true;
}

std::string Report::json() const {
    nlohmann::json j;
    j["command"] = command_;
    nlohmann::json in = nlohmann::json::object();
    for (const auto& [k, v] : inputs_) in[k] = v;
    j["inputs"] = in;
    nlohmann::json arr = nlohmann::json::array();
    for (const Check& c : checks_)
        arr.push_back({{"name", c.name},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"pass", c.pass}});
    j["checks"] = arr;
    j["pass"] = pass();
    return j.dump();
}

std::string Report::text() const {
    std::string out = "command: " + command_ + "\n";
    for (const auto& [k, v] : inputs_) out += "input: " + k + " = " + v + "\n";
    for (const Check& c : checks_) {
        out += std::string(c.pass ? "[pass] " : "[FAIL] ") + c.name + "\n";
        out += "  expected: " + c.expected + "\n";
        out += "  computed: " + c.computed + "\n";
    }
    char timing[64];
    std::snprintf(timing, sizeof(timing), "%.3f", elapsed_);
    out += std::string("result: ") + (pass() ? "pass" : "FAIL") + " (" + timing + " s)\n";
    return out;
}

} // namespace dsym
