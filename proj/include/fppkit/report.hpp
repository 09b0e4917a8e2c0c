#pragma once

// Machine-readable verification report: an ordered list of named checks, each
// with an anchor (a self-contained statement of the fact being checked), the
// expected and computed values, and a status. Axiom entries record inputs the
// computation takes on faith; they never fail. Serialization is deterministic:
// two runs of the same build produce byte-identical output.

#include <json.hpp>

#include <string>
#include <vector>

namespace fppkit {

enum class CheckStatus { pass, fail, axiom };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::axiom: return "axiom";
    }
    throw std::logic_error("unreachable");
}

struct Check {
    std::string name;
    std::string anchor;
    CheckStatus status = CheckStatus::fail;
    std::string expected;
    std::string computed;
};

struct VerificationReport {
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail)
                return false;
        return true;
    }

    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail)
                ++n;
        return n;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name},
                                   {"anchor", c.anchor},
                                   {"status", to_string(c.status)},
                                   {"expected", c.expected},
                                   {"computed", c.computed}});
        j["status"] = pass() ? "pass" : "fail";
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }
};

}  // namespace fppkit
