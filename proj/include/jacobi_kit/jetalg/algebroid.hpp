#pragma once

#include <vector>

#include "jacobi_kit/jacobi/jacobi_pair.hpp"
#include "jacobi_kit/jetalg/jet.hpp"

namespace jacobi_kit::jetalg {

using jacobi::JacobiPair;

// The coordinate formulas below are well defined for an arbitrary pair
// (Lambda, R); the Lie-algebroid laws they are supposed to satisfy hold
// exactly when the pair is Jacobi. The public operations enforce that
// precondition; the `unchecked` namespace exposes the raw formulas for
// the axiom checker, whose whole point is to run them on broken pairs
// and exhibit the failures.

namespace unchecked {

/// rho2(omega) = -(omega _| Lambda), minus the symbol of rho1.
inline MultiVector rho2(const JacobiPair& p, const DiffForm& omega) {
    return -extcalc::contract_form(omega, p.lambda);
}

/// Anchor rho(u, omega) = rho1(u) + rho2(omega); C-infinity linear over
/// jet sections.
inline MultiVector anchor(const JacobiPair& p, const JetSection& a) {
    return jacobi::hamiltonian_symbol(p, a.u) + rho2(p, a.omega);
}

/// nabla_(u, omega)(v) = {u, v} + omega(rho1(v)).
inline Expr nabla(const JacobiPair& p, const JetSection& a, const Expr& v) {
    return jacobi::jacobi_bracket(p, a.u, v) +
           extcalc::pairing(a.omega, jacobi::hamiltonian_symbol(p, v));
}

/// Closed form of the bracket, derived once and for all from
/// [j1 u, j1 v] = j1{u,v} and the Leibniz rule:
///   [j1 u, i(eta)]   = i( L_{rho1(u)} eta - R(u) eta )
///   [i(omega), i(eta)] = ( -<omega^eta, Lambda> ,
///        sum_{k,l} [ -rho1(omega_k)(x_l) eta_l dx_k
///                    + rho1(eta_l)(x_k) omega_k dx_l
///                    - omega_k L^{kl} d(eta_l) - eta_l L^{kl} d(omega_k)
///                    - 2 omega_k eta_l d(L^{kl}) ] )
/// with L^{kl} = <dx_k ^ dx_l, Lambda>.
inline JetSection algebroid_bracket(const JacobiPair& p, const JetSection& a,
                                    const JetSection& b) {
    const Chart& chart = p.chart();
    symcore::require_same_chart(chart, a.chart(), "algebroid_bracket");
    symcore::require_same_chart(chart, b.chart(), "algebroid_bracket");
    const std::size_t dim = chart.dim();

    Expr pr_part = jacobi::jacobi_bracket(p, a.u, b.u) -
                   extcalc::pairing(extcalc::wedge(a.omega, b.omega), p.lambda);

    MultiVector rho1_u = jacobi::hamiltonian_symbol(p, a.u);
    MultiVector rho1_v = jacobi::hamiltonian_symbol(p, b.u);
    DiffForm d_part = extcalc::lie_derivative(rho1_u, b.omega) -
                      extcalc::apply_vf(p.r, a.u) * b.omega -
                      extcalc::lie_derivative(rho1_v, a.omega) +
                      extcalc::apply_vf(p.r, b.u) * a.omega;

    for (std::size_t k = 0; k < dim; ++k) {
        Expr wk = a.omega.component(extcalc::IndexMask{1} << k);
        if (wk.is_zero()) continue;
        MultiVector rho1_wk = jacobi::hamiltonian_symbol(p, wk);
        DiffForm dwk = extcalc::differential(wk);
        for (std::size_t l = 0; l < dim; ++l) {
            Expr el = b.omega.component(extcalc::IndexMask{1} << l);
            if (el.is_zero()) continue;
            Expr lkl = k == l ? Expr::zero(chart)
                              : extcalc::pairing(
                                    extcalc::wedge(DiffForm::basis(chart, k),
                                                   DiffForm::basis(chart, l)),
                                    p.lambda);
            MultiVector rho1_el = jacobi::hamiltonian_symbol(p, el);
            DiffForm t(chart, 1);
            t.accumulate(extcalc::IndexMask{1} << k,
                         -(rho1_wk.component(extcalc::IndexMask{1} << l) * el));
            t.accumulate(extcalc::IndexMask{1} << l,
                         rho1_el.component(extcalc::IndexMask{1} << k) * wk);
            if (!lkl.is_zero()) {
                t = t - wk * lkl * extcalc::differential(el) - el * lkl * dwk;
                t = t - Expr::constant(chart, 2) * wk * el * extcalc::differential(lkl);
            }
            d_part = d_part + t;
        }
    }
    return JetSection(std::move(pr_part), std::move(d_part));
}

/// Same bracket through the generator expansion: every section is written
/// as a combination of holonomic generators,
///   (u, omega) = j1(u) + sum_k [ x_k . j1(omega_k) - j1(x_k omega_k) ],
/// and brackets of scaled holonomic sections reduce via the Leibniz rule
///   [c j1 p, d j1 q] = (c d).j1{p,q} + (c rho1(p)(d)).j1 q - (d rho1(q)(c)).j1 p.
/// Kept as an independent route; the two implementations are
/// cross-validated against each other in the test suite.
inline JetSection algebroid_bracket_via_generators(const JacobiPair& p, const JetSection& a,
                                                   const JetSection& b) {
    const Chart& chart = p.chart();
    symcore::require_same_chart(chart, a.chart(), "algebroid_bracket");
    symcore::require_same_chart(chart, b.chart(), "algebroid_bracket");

    struct Gen {
        Expr scale;
        Expr base;
    };
    auto generators = [&chart](const JetSection& s) {
        std::vector<Gen> out;
        out.push_back(Gen{Expr::one(chart), s.u});
        for (std::size_t k = 0; k < chart.dim(); ++k) {
            Expr wk = s.omega.component(extcalc::IndexMask{1} << k);
            if (wk.is_zero()) continue;
            Expr xk = Expr::coordinate(chart, k);
            out.push_back(Gen{xk, wk});
            out.push_back(Gen{-Expr::one(chart), xk * wk});
        }
        return out;
    };

    JetSection result(Expr::zero(chart), DiffForm::zero(chart, 1));
    for (const Gen& ga : generators(a)) {
        MultiVector rho1_p = jacobi::hamiltonian_symbol(p, ga.base);
        for (const Gen& gb : generators(b)) {
            MultiVector rho1_q = jacobi::hamiltonian_symbol(p, gb.base);
            result = result +
                     module_action(ga.scale * gb.scale,
                                   j1(jacobi::jacobi_bracket(p, ga.base, gb.base))) +
                     module_action(ga.scale * extcalc::apply_vf(rho1_p, gb.scale),
                                   j1(gb.base)) -
                     module_action(gb.scale * extcalc::apply_vf(rho1_q, ga.scale),
                                   j1(ga.base));
        }
    }
    return result;
}

}  // namespace unchecked

inline void require_jacobi(const JacobiPair& p, const char* what) {
    if (!jacobi::check_jacobi_pair(p).is_jacobi)
        throw symcore::NotAJacobiPair(std::string(what) +
                                      ": pair does not satisfy the structure equations");
}

/// Anchor of the Lie algebroid on J1L.
inline MultiVector anchor(const JacobiPair& p, const JetSection& a) {
    require_jacobi(p, "anchor");
    return unchecked::anchor(p, a);
}

/// The Lie algebroid bracket (closed form).
inline JetSection algebroid_bracket(const JacobiPair& p, const JetSection& a,
                                    const JetSection& b) {
    require_jacobi(p, "algebroid_bracket");
    return unchecked::algebroid_bracket(p, a, b);
}

/// The Lie algebroid bracket via generator expansion.
inline JetSection algebroid_bracket_via_generators(const JacobiPair& p, const JetSection& a,
                                                   const JetSection& b) {
    require_jacobi(p, "algebroid_bracket");
    return unchecked::algebroid_bracket_via_generators(p, a, b);
}

/// The flat action of J1L on L with nabla_{j1 u}(v) = {u, v}.
inline Expr nabla(const JacobiPair& p, const JetSection& a, const Expr& v) {
    require_jacobi(p, "nabla");
    return unchecked::nabla(p, a, v);
}

/// Round trip of the correspondence: the bracket recovered from the
/// algebroid, pr([j1 u, j1 v]); coincides with jacobi_bracket, and
/// [j1 u, j1 v] itself is holonomic.
inline Expr bracket_from_algebroid(const JacobiPair& p, const Expr& u, const Expr& v) {
    require_jacobi(p, "bracket_from_algebroid");
    return pr(unchecked::algebroid_bracket_via_generators(p, j1(u), j1(v)));
}

}  // namespace jacobi_kit::jetalg
