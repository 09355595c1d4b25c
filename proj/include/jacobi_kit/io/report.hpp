#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace jacobi_kit::io {

/// One named verdict with optional evidence lines (residuals printed in
/// grammar form, witness triples, seeds).
struct CheckResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
};

/// A deterministic verification report: given the same input file, seed
/// and trial count, both renderings are byte-identical. Wall-clock timing
/// is collected but only rendered on request, so it never breaks
/// determinism.
struct Report {
    std::string subject;
    std::string kind;
    std::uint64_t seed = 0;
    unsigned trials = 0;
    unsigned degree = 0;
    std::vector<CheckResult> checks;
    double elapsed_ms = 0.0;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::vector<std::string> details = {}) {
        checks.push_back(CheckResult{std::move(name), pass, std::move(details)});
    }

    std::string render_text(bool with_timings = false) const {
        std::ostringstream os;
        os << "subject: " << subject << "\n";
        os << "kind: " << kind << "  seed: " << seed << "  trials: " << trials
           << "  degree: " << degree << "\n";
        for (const auto& c : checks) {
            os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
            for (const auto& d : c.details) os << "      " << d << "\n";
        }
        os << "overall: " << (overall() ? "PASS" : "FAIL") << "\n";
        if (with_timings) os << "elapsed_ms: " << elapsed_ms << "\n";
        return os.str();
    }

    std::string render_json(bool with_timings = false) const {
        nlohmann::ordered_json j;
        j["subject"] = subject;
        j["kind"] = kind;
        j["seed"] = seed;
        j["trials"] = trials;
        j["degree"] = degree;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["details"] = c.details;
            j["checks"].push_back(jc);
        }
        j["overall"] = overall();
        if (with_timings) j["elapsed_ms"] = elapsed_ms;
        return j.dump(2) + "\n";
    }
};

}  // namespace jacobi_kit::io
