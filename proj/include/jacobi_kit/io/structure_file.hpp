#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "jacobi_kit/contact/contact_form.hpp"
#include "jacobi_kit/jacobi/jacobi_pair.hpp"
#include "jacobi_kit/symcore/parser.hpp"

namespace jacobi_kit::io {

using symcore::Chart;
using symcore::Expr;

// Structure-definition files, plain key-value text with nested tables:
//
//     # standard contact form on R^3
//     name = std_contact_r3
//     kind = contact_form
//     chart = x y z
//
//     [theta]
//     1 = -y
//     3 = 1
//
// Component keys are strictly increasing 1-based index tuples, written
// either as a digit run ("12") or comma-separated ("1,2"); values are
// expression strings over the chart. jacobi_pair files carry [lambda]
// (bivector) and [r] (vector field) tables, contact_form files carry
// [theta]. Tables may be empty or omitted (zero tensor).

enum class StructureKind { JacobiPair, ContactForm };

struct StructureFile {
    std::string name;
    std::string description;
    StructureKind kind = StructureKind::JacobiPair;
    std::vector<std::string> chart_names;
    std::map<std::vector<std::size_t>, std::string> lambda_comps;
    std::map<std::vector<std::size_t>, std::string> r_comps;
    std::map<std::vector<std::size_t>, std::string> theta_comps;

    Chart chart() const { return Chart(chart_names); }

    jacobi::JacobiPair to_jacobi_pair() const {
        if (kind != StructureKind::JacobiPair)
            throw symcore::StructureFileError("file does not define a jacobi_pair");
        Chart c = chart();
        extcalc::MultiVector lambda(c, 2);
        extcalc::MultiVector r(c, 1);
        for (const auto& [idx, src] : lambda_comps)
            lambda.set_at(idx, symcore::parse(src, c));
        for (const auto& [idx, src] : r_comps) r.set_at(idx, symcore::parse(src, c));
        return jacobi::JacobiPair(std::move(lambda), std::move(r));
    }

    contact::ContactForm to_contact_form() const {
        if (kind != StructureKind::ContactForm)
            throw symcore::StructureFileError("file does not define a contact_form");
        Chart c = chart();
        extcalc::DiffForm theta(c, 1);
        for (const auto& [idx, src] : theta_comps) theta.set_at(idx, symcore::parse(src, c));
        return contact::ContactForm(std::move(theta));
    }
};

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::size_t> parse_index_tuple(const std::string& key, std::size_t line_no) {
    std::vector<std::size_t> idx;
    auto fail = [&](const std::string& why) {
        throw symcore::StructureFileError("line " + std::to_string(line_no) +
                                          ": bad component key '" + key + "': " + why);
    };
    if (key.empty()) fail("empty");
    if (key.find(',') != std::string::npos) {
        std::stringstream ss(key);
        std::string part;
        while (std::getline(ss, part, ',')) {
            part = trim(part);
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                fail("indices must be positive integers");
            idx.push_back(std::stoull(part));
        }
    } else {
        for (char ch : key) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) fail("indices must be digits");
            idx.push_back(static_cast<std::size_t>(ch - '0'));
        }
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] == 0) fail("indices are 1-based");
        if (i > 0 && idx[i] <= idx[i - 1]) fail("indices must be strictly increasing");
    }
    for (auto& i : idx) --i;  // to 0-based
    return idx;
}

}  // namespace detail

inline StructureFile parse_structure(std::string_view text) {
    using detail::trim;
    StructureFile out;
    bool saw_kind = false, saw_chart = false;
    bool saw_lambda = false, saw_r = false, saw_theta = false;
    std::string section;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw symcore::StructureFileError("line " + std::to_string(line_no) +
                                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section == "lambda")
                saw_lambda = true;
            else if (section == "r")
                saw_r = true;
            else if (section == "theta")
                saw_theta = true;
            else
                throw symcore::StructureFileError("line " + std::to_string(line_no) +
                                                  ": unknown section [" + section + "]");
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw symcore::StructureFileError("line " + std::to_string(line_no) +
                                              ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (section.empty()) {
            if (key == "name") {
                out.name = value;
            } else if (key == "description") {
                out.description = value;
            } else if (key == "kind") {
                saw_kind = true;
                if (value == "jacobi_pair")
                    out.kind = StructureKind::JacobiPair;
                else if (value == "contact_form")
                    out.kind = StructureKind::ContactForm;
                else
                    throw symcore::StructureFileError("line " + std::to_string(line_no) +
                                                      ": unknown kind '" + value + "'");
            } else if (key == "chart") {
                saw_chart = true;
                std::stringstream ss(value);
                std::string coord;
                while (ss >> coord) out.chart_names.push_back(coord);
            } else {
                throw symcore::StructureFileError("line " + std::to_string(line_no) +
                                                  ": unknown key '" + key + "'");
            }
            continue;
        }
        auto idx = detail::parse_index_tuple(key, line_no);
        auto& table = section == "lambda"   ? out.lambda_comps
                      : section == "r"      ? out.r_comps
                                            : out.theta_comps;
        if (!table.emplace(std::move(idx), value).second)
            throw symcore::StructureFileError("line " + std::to_string(line_no) +
                                              ": duplicate component key '" + key + "'");
    }
    if (!saw_kind) throw symcore::StructureFileError("missing 'kind'");
    if (!saw_chart || out.chart_names.empty())
        throw symcore::StructureFileError("missing or empty 'chart'");
    if (out.kind == StructureKind::JacobiPair && saw_theta)
        throw symcore::StructureFileError("jacobi_pair files must not carry [theta]");
    if (out.kind == StructureKind::ContactForm && (saw_lambda || saw_r))
        throw symcore::StructureFileError("contact_form files must not carry [lambda] or [r]");

    // Validate early: chart well-formed, indices in range, expressions parse.
    Chart c = out.chart();
    auto validate = [&](const std::map<std::vector<std::size_t>, std::string>& table,
                        std::size_t arity, const char* which) {
        for (const auto& [idx, src] : table) {
            if (idx.size() != arity)
                throw symcore::StructureFileError(std::string(which) + ": component key has " +
                                                  std::to_string(idx.size()) +
                                                  " indices, expected " + std::to_string(arity));
            for (std::size_t i : idx)
                if (i >= c.dim())
                    throw symcore::StructureFileError(std::string(which) +
                                                      ": component index out of range");
            try {
                symcore::parse(src, c);
            } catch (const symcore::Error& e) {
                throw symcore::StructureFileError(std::string(which) + " component '" + src +
                                                  "': " + e.what());
            }
        }
    };
    validate(out.lambda_comps, 2, "lambda");
    validate(out.r_comps, 1, "r");
    validate(out.theta_comps, 1, "theta");
    return out;
}

inline StructureFile load_structure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw symcore::StructureFileError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_structure(ss.str());
}

}  // namespace jacobi_kit::io
