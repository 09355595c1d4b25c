#pragma once

#include <utility>

#include "jacobi_kit/extcalc/ops.hpp"

namespace jacobi_kit::jetalg {

using extcalc::DiffForm;
using extcalc::MultiVector;
using symcore::Chart;
using symcore::Expr;

/// A section of the first jet bundle of the trivialized line bundle, in
/// the splitting (scalar part, 1-form part). The convention is
/// j1(u) = (u, 0), so the stored form equals the value of the classical
/// Spencer operator, and the module action reads
///   f . (u, omega) = (f u, f omega + u df).
struct JetSection {
    JetSection(Expr u_, DiffForm omega_) : u(std::move(u_)), omega(std::move(omega_)) {
        symcore::require_same_chart(u.chart(), omega.chart(), "jet section");
        if (omega.grade() != 1) throw symcore::GradeError("jet section form part must be grade 1");
    }

    const Chart& chart() const { return u.chart(); }
    bool is_zero() const { return u.is_zero() && omega.is_zero(); }

    friend JetSection operator+(const JetSection& a, const JetSection& b) {
        return JetSection(a.u + b.u, a.omega + b.omega);
    }
    friend JetSection operator-(const JetSection& a, const JetSection& b) {
        return JetSection(a.u - b.u, a.omega - b.omega);
    }
    JetSection operator-() const { return JetSection(-u, -omega); }

    friend bool operator==(const JetSection& a, const JetSection& b) {
        return a.u == b.u && a.omega == b.omega;
    }
    friend bool operator!=(const JetSection& a, const JetSection& b) { return !(a == b); }

    Expr u;
    DiffForm omega;
};

/// Holonomic lift u |-> (u, 0).
inline JetSection j1(const Expr& u) {
    return JetSection(u, DiffForm::zero(u.chart(), 1));
}

/// Inclusion of a 1-form, omega |-> (0, omega). Satisfies
/// i(u df) = f . j1(u) - j1(f u).
inline JetSection i_incl(const DiffForm& omega) {
    return JetSection(Expr::zero(omega.chart()), omega);
}

inline Expr pr(const JetSection& a) { return a.u; }

/// Classical Spencer operator: projection onto the form part. Vanishes
/// exactly on holonomic sections.
inline DiffForm spencer_D(const JetSection& a) { return a.omega; }

/// The C-infinity module action f . (u, omega) = (f u, f omega + u df).
inline JetSection module_action(const Expr& f, const JetSection& a) {
    symcore::require_same_chart(f.chart(), a.chart(), "module_action");
    return JetSection(f * a.u, f * a.omega + a.u * extcalc::differential(f));
}

/// D evaluated on a vector field: D_X(alpha) = D(alpha)(X).
inline Expr spencer_D_along(const MultiVector& x, const JetSection& a) {
    return extcalc::pairing(a.omega, x);
}

}  // namespace jacobi_kit::jetalg
