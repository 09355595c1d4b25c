// jacobi-kit command line front end.
//
// Verbs: check, bracket, spencer, poissonize, reeb, decompose.
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage/parse error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jacobi_kit/jacobi_kit.hpp"

namespace jk = jacobi_kit;
using jk::extcalc::DiffForm;
using jk::extcalc::IndexMask;
using jk::extcalc::MultiVector;
using jk::io::Report;
using jk::io::StructureFile;
using jk::io::StructureKind;
using jk::symcore::Chart;
using jk::symcore::Expr;

namespace {

struct Options {
    std::string file;
    std::uint64_t seed = 42;
    unsigned trials = 20;
    unsigned degree = 3;
    bool json = false;
    bool timings = false;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("JACOBI_KIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw jk::Error("JACOBI_KIT_SEED is not an integer");
        }
    }
    return 42;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("file", opt.file, "structure-definition file")->required();
    cmd->add_option("--seed", opt.seed, "random seed (default: JACOBI_KIT_SEED or 42)");
    cmd->add_option("--trials", opt.trials, "randomized trials per sampled check");
    cmd->add_option("--degree", opt.degree, "total degree of random polynomials");
    cmd->add_flag("--json", opt.json, "machine-readable report");
    cmd->add_flag("--timings", opt.timings, "include wall-clock timing in the report");
}

std::string tensor_lines(const MultiVector& t) { return t.str(); }
std::string tensor_lines(const DiffForm& t) { return t.str(); }

int emit(const Report& report, const Options& opt) {
    std::cout << (opt.json ? report.render_json(opt.timings)
                           : report.render_text(opt.timings));
    return report.overall() ? 0 : 1;
}

void check_jacobi_file(const StructureFile& sf, const Options& opt, Report& report) {
    jk::jacobi::JacobiPair pair = sf.to_jacobi_pair();
    auto pr = jk::jacobi::check_jacobi_pair(pair);
    report.add("structure_eq_lambda_r", pr.residual_lr.is_zero(),
               pr.residual_lr.is_zero()
                   ? std::vector<std::string>{}
                   : std::vector<std::string>{"residual: " + tensor_lines(pr.residual_lr)});
    report.add("structure_eq_lambda_lambda", pr.residual_ll.is_zero(),
               pr.residual_ll.is_zero()
                   ? std::vector<std::string>{}
                   : std::vector<std::string>{"residual: " + tensor_lines(pr.residual_ll)});

    bool sampling_ok = true;
    std::vector<std::string> details;
    const Chart chart = sf.chart();
    for (unsigned t = 0; t < opt.trials && sampling_ok; ++t) {
        std::uint64_t s = jk::symcore::mix_seed(opt.seed, t);
        Expr f = jk::symcore::random_poly(chart, opt.degree, jk::symcore::mix_seed(s, 1));
        Expr g = jk::symcore::random_poly(chart, opt.degree, jk::symcore::mix_seed(s, 2));
        Expr h = jk::symcore::random_poly(chart, opt.degree, jk::symcore::mix_seed(s, 3));
        Expr j = jk::jacobi::jacobiator(pair, f, g, h);
        if (!j.is_zero()) {
            sampling_ok = false;
            details.push_back("seed " + std::to_string(s) + ": jacobiator = " + j.str());
            details.push_back("f = " + f.str());
            details.push_back("g = " + g.str());
            details.push_back("h = " + h.str());
        }
    }
    if (!pr.is_jacobi) {
        if (auto w = jk::jacobi::jacobiator_witness(pair, 2)) {
            details.push_back("monomial witness: f = " + (*w)[0].str() + ", g = " +
                              (*w)[1].str() + ", h = " + (*w)[2].str());
            details.push_back("jacobiator(f,g,h) = " +
                              jk::jacobi::jacobiator(pair, (*w)[0], (*w)[1], (*w)[2]).str());
            sampling_ok = false;
        }
    }
    report.add("jacobiator_sampling", sampling_ok, std::move(details));
}

void check_contact_file(const StructureFile& sf, const Options& opt, Report& report) {
    jk::contact::ContactForm form = sf.to_contact_form();
    auto cr = jk::contact::is_contact(form);
    report.add("is_contact", cr.contact, {"theta^(dtheta)^n component: " + cr.witness.str()});
    if (!cr.contact) return;

    const Chart chart = sf.chart();
    MultiVector r = jk::contact::reeb_field(form);
    DiffForm dtheta = jk::extcalc::ext_d(form.theta);
    bool normalized = jk::extcalc::pairing(form.theta, r) == Expr::one(chart) &&
                      jk::extcalc::interior(r, dtheta).is_zero();
    report.add("reeb_normalization", normalized, {"R: " + tensor_lines(r)});

    bool conformal_ok = true;
    std::vector<std::string> conformal_details;
    for (unsigned t = 0; t < opt.trials && conformal_ok; ++t) {
        std::uint64_t s = jk::symcore::mix_seed(opt.seed, 1000 + t);
        Expr f = jk::symcore::random_poly(chart, opt.degree, s);
        MultiVector lhs = jk::contact::reeb_field_of(form, f);
        MultiVector rhs = f * r + jk::contact::b_map(form, jk::extcalc::differential(f));
        if (lhs != rhs) {
            conformal_ok = false;
            conformal_details.push_back("seed " + std::to_string(s) + ": R_f != f R + b(df)");
        }
    }
    report.add("reeb_of_f_equals_fR_plus_b_df", conformal_ok, std::move(conformal_details));

    bool homo_ok = true;
    std::vector<std::string> homo_details;
    for (unsigned t = 0; t < opt.trials && homo_ok; ++t) {
        std::uint64_t s = jk::symcore::mix_seed(opt.seed, 2000 + t);
        Expr f = jk::symcore::random_poly(chart, opt.degree, jk::symcore::mix_seed(s, 1));
        Expr g = jk::symcore::random_poly(chart, opt.degree, jk::symcore::mix_seed(s, 2));
        MultiVector lhs = jk::extcalc::vf_bracket(jk::contact::reeb_field_of(form, f),
                                                  jk::contact::reeb_field_of(form, g));
        MultiVector rhs = jk::contact::reeb_field_of(form, jk::contact::reeb_bracket(form, f, g));
        if (lhs != rhs) {
            homo_ok = false;
            homo_details.push_back("seed " + std::to_string(s) + ": [R_f,R_g] != R_{{f,g}}");
        }
    }
    report.add("reeb_bracket_homomorphism", homo_ok, std::move(homo_details));
}

int cmd_check(const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    StructureFile sf = jk::io::load_structure(opt.file);
    Report report;
    report.subject = sf.name.empty() ? opt.file : sf.name;
    report.kind = sf.kind == StructureKind::JacobiPair ? "jacobi_pair" : "contact_form";
    report.seed = opt.seed;
    report.trials = opt.trials;
    report.degree = opt.degree;
    if (sf.kind == StructureKind::JacobiPair)
        check_jacobi_file(sf, opt, report);
    else
        check_contact_file(sf, opt, report);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return emit(report, opt);
}

jk::jacobi::JacobiPair pair_from_file(const StructureFile& sf) {
    if (sf.kind == StructureKind::JacobiPair) return sf.to_jacobi_pair();
    return jk::contact::induced_jacobi_pair(sf.to_contact_form());
}

int cmd_bracket(const Options& opt, const std::string& f_src, const std::string& g_src) {
    StructureFile sf = jk::io::load_structure(opt.file);
    Chart chart = sf.chart();
    Expr f = jk::symcore::parse(f_src, chart);
    Expr g = jk::symcore::parse(g_src, chart);
    Expr result = sf.kind == StructureKind::JacobiPair
                      ? jk::jacobi::jacobi_bracket(sf.to_jacobi_pair(), f, g)
                      : jk::contact::reeb_bracket(sf.to_contact_form(), f, g);
    if (opt.json)
        std::cout << "{\"bracket\": \"" << result.str() << "\"}\n";
    else
        std::cout << result.str() << "\n";
    return 0;
}

int cmd_spencer(const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    StructureFile sf = jk::io::load_structure(opt.file);
    jk::jacobi::JacobiPair pair = pair_from_file(sf);
    Report report;
    report.subject = sf.name.empty() ? opt.file : sf.name;
    report.kind = sf.kind == StructureKind::JacobiPair ? "jacobi_pair" : "contact_form";
    report.seed = opt.seed;
    report.trials = opt.trials;
    report.degree = opt.degree;

    auto rep = jk::jetalg::check_spencer_axioms(pair, opt.trials, opt.seed, opt.degree);
    auto summarize = [&](const char* name,
                         const std::vector<jk::jetalg::ResidualSample>& list) {
        bool ok = true;
        std::vector<std::string> details;
        for (const auto& s : list) {
            if (s.zero()) continue;
            ok = false;
            if (details.size() < 4) {
                for (const auto& e : s.values) {
                    if (e.is_zero()) continue;
                    details.push_back("seed " + std::to_string(s.seed) +
                                      ": residual = " + e.str());
                    break;
                }
            }
        }
        report.add(name, ok, std::move(details));
    };
    summarize("spencer_leibniz", rep.leibniz_residuals);
    summarize("spencer_horizontal", rep.horizontal_residuals);
    summarize("spencer_vertical", rep.vertical_residuals);
    summarize("algebroid_structure", rep.structure_residuals);

    bool roundtrip = true;
    std::vector<std::string> rt_details;
    const Chart chart = pair.chart();
    for (unsigned t = 0; t < opt.trials && roundtrip; ++t) {
        std::uint64_t s = jk::symcore::mix_seed(opt.seed, 3000 + t);
        Expr u = jk::symcore::random_poly(chart, opt.degree, jk::symcore::mix_seed(s, 1));
        Expr v = jk::symcore::random_poly(chart, opt.degree, jk::symcore::mix_seed(s, 2));
        auto br = jk::jetalg::unchecked::algebroid_bracket_via_generators(
            pair, jk::jetalg::j1(u), jk::jetalg::j1(v));
        if (jk::jetalg::pr(br) != jk::jacobi::jacobi_bracket(pair, u, v) ||
            !jk::jetalg::spencer_D(br).is_zero()) {
            roundtrip = false;
            rt_details.push_back("seed " + std::to_string(s) +
                                 ": pr([j1 u, j1 v]) != {u,v} or D != 0");
        }
    }
    report.add("bracket_round_trip", roundtrip, std::move(rt_details));
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return emit(report, opt);
}

int cmd_poissonize(const Options& opt, const std::string& coord) {
    StructureFile sf = jk::io::load_structure(opt.file);
    if (sf.kind != StructureKind::JacobiPair)
        throw jk::StructureFileError("poissonize expects a jacobi_pair file");
    jk::jacobi::JacobiPair pair = sf.to_jacobi_pair();
    MultiVector pi = jk::jacobi::poissonization(pair, coord);
    Chart ext = pi.chart();
    MultiVector pipi = jk::extcalc::schouten(pi, pi);
    MultiVector euler(ext, 1);
    euler.set(IndexMask{1} << (ext.dim() - 1), Expr::coordinate(ext, ext.dim() - 1));
    MultiVector homo = jk::extcalc::lie_derivative(euler, pi) + pi;

    Report report;
    report.subject = sf.name.empty() ? opt.file : sf.name;
    report.kind = "jacobi_pair";
    report.seed = opt.seed;
    report.trials = opt.trials;
    report.degree = opt.degree;
    report.add("poissonization_components", true, {"Pi: " + tensor_lines(pi)});
    report.add("pi_is_poisson", pipi.is_zero(),
               pipi.is_zero() ? std::vector<std::string>{}
                              : std::vector<std::string>{"[Pi,Pi]: " + tensor_lines(pipi)});
    report.add("pi_is_homogeneous", homo.is_zero(),
               homo.is_zero()
                   ? std::vector<std::string>{}
                   : std::vector<std::string>{"L_{t dt}Pi + Pi: " + tensor_lines(homo)});
    return emit(report, opt);
}

int cmd_reeb(const Options& opt, const std::string& f_src) {
    StructureFile sf = jk::io::load_structure(opt.file);
    if (sf.kind != StructureKind::ContactForm)
        throw jk::StructureFileError("reeb expects a contact_form file");
    jk::contact::ContactForm form = sf.to_contact_form();
    Chart chart = sf.chart();
    Expr f = jk::symcore::parse(f_src, chart);
    MultiVector rf = jk::contact::reeb_field_of(form, f);
    if (opt.json) {
        std::cout << "{\"reeb_field\": \"" << rf.str() << "\"}\n";
    } else {
        std::cout << "R_f for f = " << f.str() << ":\n";
        for (std::size_t i = 0; i < chart.dim(); ++i) {
            Expr c = rf.component(IndexMask{1} << i);
            if (!c.is_zero()) std::cout << "  d/d" << chart.name(i) << ": " << c.str() << "\n";
        }
        if (rf.is_zero()) std::cout << "  0\n";
    }
    return 0;
}

int cmd_decompose(const Options& opt, const std::vector<std::string>& comps) {
    StructureFile sf = jk::io::load_structure(opt.file);
    if (sf.kind != StructureKind::ContactForm)
        throw jk::StructureFileError("decompose expects a contact_form file");
    jk::contact::ContactForm form = sf.to_contact_form();
    Chart chart = sf.chart();
    if (comps.size() != chart.dim())
        throw jk::Error("decompose needs one component expression per coordinate (" +
                        std::to_string(chart.dim()) + ")");
    MultiVector x(chart, 1);
    for (std::size_t i = 0; i < comps.size(); ++i)
        x.set(IndexMask{1} << i, jk::symcore::parse(comps[i], chart));
    auto dec = jk::contact::decompose_vf(form, x);
    bool roundtrip = jk::contact::reconstruct_vf(form, dec) == x;

    Report report;
    report.subject = sf.name.empty() ? opt.file : sf.name;
    report.kind = "contact_form";
    report.seed = opt.seed;
    report.trials = opt.trials;
    report.degree = opt.degree;
    report.add("decomposition", true,
               {"u = " + dec.u.str(), "phi: " + tensor_lines(dec.phi)});
    report.add("reconstruct_round_trip", roundtrip);
    return emit(report, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculus of Jacobi pairs, contact forms and jet-bundle brackets"};
    app.require_subcommand(1);

    Options check_opt, bracket_opt, spencer_opt, poisson_opt, reeb_opt, dec_opt;
    std::string bracket_f, bracket_g, poisson_coord = "t", reeb_f = "1";
    std::vector<std::string> dec_comps;

    try {
        check_opt.seed = bracket_opt.seed = spencer_opt.seed = poisson_opt.seed =
            reeb_opt.seed = dec_opt.seed = default_seed();
    } catch (const jk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App* check = app.add_subcommand("check", "verify the structure equations of a file");
    add_common(check, check_opt);
    CLI::App* bracket = app.add_subcommand("bracket", "evaluate the bracket of two expressions");
    add_common(bracket, bracket_opt);
    bracket->add_option("f", bracket_f, "first argument")->required();
    bracket->add_option("g", bracket_g, "second argument")->required();
    CLI::App* spencer =
        app.add_subcommand("spencer", "verify the Spencer-operator laws on the jet algebroid");
    add_common(spencer, spencer_opt);
    CLI::App* poissonize =
        app.add_subcommand("poissonize", "homogeneous Poisson bivector on the extended chart");
    add_common(poissonize, poisson_opt);
    poissonize->add_option("coord", poisson_coord, "name of the new coordinate (default t)");
    CLI::App* reeb = app.add_subcommand("reeb", "Reeb vector field of a function");
    add_common(reeb, reeb_opt);
    reeb->add_option("f", reeb_f, "section (default 1)");
    CLI::App* decompose =
        app.add_subcommand("decompose", "split a vector field as (theta(X), theta([.,X]))");
    add_common(decompose, dec_opt);
    decompose->add_option("components", dec_comps, "vector field components, one per coordinate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(check_opt);
        if (bracket->parsed()) return cmd_bracket(bracket_opt, bracket_f, bracket_g);
        if (spencer->parsed()) return cmd_spencer(spencer_opt);
        if (poissonize->parsed()) return cmd_poissonize(poisson_opt, poisson_coord);
        if (reeb->parsed()) return cmd_reeb(reeb_opt, reeb_f);
        if (decompose->parsed()) return cmd_decompose(dec_opt, dec_comps);
    } catch (const jk::SingularSystem& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const jk::NotAJacobiPair& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const jk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
