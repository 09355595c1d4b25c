#pragma once

#include <cstdint>
#include <vector>

#include "jacobi_kit/jetalg/algebroid.hpp"
#include "jacobi_kit/symcore/random.hpp"

namespace jacobi_kit::jetalg {

/// One randomized trial's residual, tagged with the seed that produced
/// the trial data so every failure is reproducible.
struct ResidualSample {
    std::uint64_t seed;
    std::vector<Expr> values;

    bool zero() const {
        for (const Expr& e : values)
            if (!e.is_zero()) return false;
        return true;
    }
};

/// Residuals of the compatibility laws of the classical Spencer operator
/// on J1L, sampled on random sections:
///   leibniz:     D_X(f a) - f D_X(a) - X(f) pr(a)
///   horizontal:  D_{rho(a)}(b) - nabla_b(pr a) - pr([a, b])
///   vertical:    D_X[a,b] - nabla_a(D_X b) + D_{[rho(a),X]} b
///                          + nabla_b(D_X a) - D_{[rho(b),X]} a
///   structure:   the Lie-algebroid laws the first three presuppose
///                (bracket Jacobi identity, flatness of nabla, anchor
///                morphism). The first three are formal identities of the
///                coordinate formulas and hold for any pair; a broken pair
///                is exposed by the structure residuals.
struct SpencerAxiomReport {
    std::vector<ResidualSample> leibniz_residuals;
    std::vector<ResidualSample> horizontal_residuals;
    std::vector<ResidualSample> vertical_residuals;
    std::vector<ResidualSample> structure_residuals;
    bool all_zero = true;
};

namespace detail {

inline Expr random_scalar(const Chart& chart, unsigned degree, std::uint64_t seed) {
    return symcore::random_poly(chart, degree, seed);
}

inline DiffForm random_form(const Chart& chart, unsigned degree, std::uint64_t seed) {
    DiffForm out(chart, 1);
    for (std::size_t i = 0; i < chart.dim(); ++i)
        out.accumulate(extcalc::IndexMask{1} << i,
                       symcore::random_poly(chart, degree, symcore::mix_seed(seed, i)));
    return out;
}

inline MultiVector random_vf(const Chart& chart, unsigned degree, std::uint64_t seed) {
    MultiVector out(chart, 1);
    for (std::size_t i = 0; i < chart.dim(); ++i)
        out.accumulate(extcalc::IndexMask{1} << i,
                       symcore::random_poly(chart, degree, symcore::mix_seed(seed, i)));
    return out;
}

inline JetSection random_section(const Chart& chart, unsigned degree, std::uint64_t seed) {
    return JetSection(random_scalar(chart, degree, symcore::mix_seed(seed, 101)),
                      random_form(chart, degree, symcore::mix_seed(seed, 202)));
}

inline void flatten(const Expr& e, std::vector<Expr>& out) { out.push_back(e); }

inline void flatten(const DiffForm& w, std::vector<Expr>& out) {
    const Chart& chart = w.chart();
    for (std::size_t i = 0; i < chart.dim(); ++i)
        out.push_back(w.component(extcalc::IndexMask{1} << i));
}

inline void flatten(const MultiVector& v, std::vector<Expr>& out) {
    const Chart& chart = v.chart();
    for (std::size_t i = 0; i < chart.dim(); ++i)
        out.push_back(v.component(extcalc::IndexMask{1} << i));
}

inline void flatten(const JetSection& s, std::vector<Expr>& out) {
    flatten(s.u, out);
    flatten(s.omega, out);
}

}  // namespace detail

/// Run `trials` randomized trials of every law above on the raw coordinate
/// formulas (no Jacobi precondition: broken pairs are meant to be fed in
/// and caught). all_zero is true iff every residual of every trial is
/// identically zero. Random data are polynomials of total degree
/// <= degree.
inline SpencerAxiomReport check_spencer_axioms(const JacobiPair& p, unsigned trials,
                                               std::uint64_t seed, unsigned degree = 3) {
    using namespace detail;
    const Chart& chart = p.chart();
    SpencerAxiomReport report;
    if (trials == 0) throw symcore::Error("check_spencer_axioms needs trials >= 1");

    for (unsigned t = 0; t < trials; ++t) {
        std::uint64_t trial_seed = symcore::mix_seed(seed, t);
        JetSection a = random_section(chart, degree, symcore::mix_seed(trial_seed, 1));
        JetSection b = random_section(chart, degree, symcore::mix_seed(trial_seed, 2));
        JetSection c = random_section(chart, degree, symcore::mix_seed(trial_seed, 3));
        MultiVector x = random_vf(chart, degree, symcore::mix_seed(trial_seed, 4));
        Expr f = random_scalar(chart, degree, symcore::mix_seed(trial_seed, 5));
        Expr v = random_scalar(chart, degree, symcore::mix_seed(trial_seed, 6));

        MultiVector rho_a = unchecked::anchor(p, a);
        MultiVector rho_b = unchecked::anchor(p, b);
        JetSection ab = unchecked::algebroid_bracket(p, a, b);

        // Leibniz rule of D relative to pr.
        {
            DiffForm res = spencer_D(module_action(f, a)) - f * spencer_D(a) -
                           pr(a) * extcalc::differential(f);
            ResidualSample s{trial_seed, {}};
            flatten(res, s.values);
            report.leibniz_residuals.push_back(std::move(s));
        }
        // Horizontal compatibility.
        {
            Expr res = spencer_D_along(rho_a, b) - unchecked::nabla(p, b, pr(a)) - pr(ab);
            ResidualSample s{trial_seed, {}};
            flatten(res, s.values);
            report.horizontal_residuals.push_back(std::move(s));
        }
        // Vertical compatibility.
        {
            Expr res = spencer_D_along(x, ab) -
                       unchecked::nabla(p, a, spencer_D_along(x, b)) +
                       spencer_D_along(extcalc::vf_bracket(rho_a, x), b) +
                       unchecked::nabla(p, b, spencer_D_along(x, a)) -
                       spencer_D_along(extcalc::vf_bracket(rho_b, x), a);
            ResidualSample s{trial_seed, {}};
            flatten(res, s.values);
            report.vertical_residuals.push_back(std::move(s));
        }
        // Lie-algebroid presuppositions.
        {
            ResidualSample s{trial_seed, {}};
            JetSection jac = unchecked::algebroid_bracket(p, ab, c) +
                             unchecked::algebroid_bracket(p, unchecked::algebroid_bracket(p, b, c), a) +
                             unchecked::algebroid_bracket(p, unchecked::algebroid_bracket(p, c, a), b);
            flatten(jac, s.values);
            Expr flat = unchecked::nabla(p, ab, v) -
                        unchecked::nabla(p, a, unchecked::nabla(p, b, v)) +
                        unchecked::nabla(p, b, unchecked::nabla(p, a, v));
            flatten(flat, s.values);
            MultiVector morph = unchecked::anchor(p, ab) - extcalc::vf_bracket(rho_a, rho_b);
            flatten(morph, s.values);
            report.structure_residuals.push_back(std::move(s));
        }
    }
    for (const auto* list : {&report.leibniz_residuals, &report.horizontal_residuals,
                             &report.vertical_residuals, &report.structure_residuals})
        for (const ResidualSample& s : *list)
            if (!s.zero()) report.all_zero = false;
    return report;
}

}  // namespace jacobi_kit::jetalg
