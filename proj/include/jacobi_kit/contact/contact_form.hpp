#pragma once

#include <utility>
#include <vector>

#include "jacobi_kit/contact/linsolve.hpp"
#include "jacobi_kit/jacobi/jacobi_pair.hpp"

namespace jacobi_kit::contact {

using extcalc::DiffForm;
using extcalc::IndexMask;
using extcalc::MultiVector;
using symcore::Chart;
using symcore::Expr;

/// A scalar-valued 1-form theta on an odd-dimensional chart whose kernel
/// is meant to be a contact hyperplane. Contact-ness is checked by
/// is_contact and is a precondition of every downstream operation.
struct ContactForm {
    explicit ContactForm(DiffForm theta_) : theta(std::move(theta_)) {
        if (theta.grade() != 1) throw symcore::GradeError("theta must be a 1-form");
    }

    const Chart& chart() const { return theta.chart(); }

    DiffForm theta;
};

struct ContactReport {
    bool contact;
    /// The single component of theta ^ (d theta)^n; nonvanishing of this
    /// rational function on the working domain is the caller's concern,
    /// so it is reported for inspection.
    Expr witness;
};

inline ContactReport is_contact(const ContactForm& c) {
    std::size_t dim = c.chart().dim();
    if (dim % 2 == 0)
        throw symcore::GradeError("contact forms need an odd-dimensional chart");
    std::size_t n = (dim - 1) / 2;
    DiffForm top = c.theta;
    DiffForm dtheta = extcalc::ext_d(c.theta);
    for (std::size_t k = 0; k < n; ++k) top = extcalc::wedge(top, dtheta);
    IndexMask full = dim >= 64 ? ~IndexMask{0} : (IndexMask{1} << dim) - 1;
    Expr witness = top.component(full);
    return ContactReport{!witness.is_zero(), std::move(witness)};
}

inline void require_contact(const ContactForm& c, const char* what) {
    if (!is_contact(c).contact)
        throw symcore::SingularSystem(std::string(what) + ": form is not contact");
}

/// A frame of the hyperplane H = ker theta: with m the largest index whose
/// theta-component is nonzero, W_j = theta_m d_j - theta_j d_m for j != m.
/// The frame spans H wherever theta_m does not vanish; that locus is the
/// same one the exact solvers expose through denominators.
inline std::vector<MultiVector> hyperplane_frame(const ContactForm& c) {
    const Chart& chart = c.chart();
    std::size_t dim = chart.dim();
    std::size_t m = dim;
    for (std::size_t i = dim; i-- > 0;) {
        if (!c.theta.component(IndexMask{1} << i).is_zero()) {
            m = i;
            break;
        }
    }
    if (m == dim) throw symcore::SingularSystem("theta is identically zero");
    Expr theta_m = c.theta.component(IndexMask{1} << m);
    std::vector<MultiVector> frame;
    for (std::size_t j = 0; j < dim; ++j) {
        if (j == m) continue;
        MultiVector w(chart, 1);
        w.set(IndexMask{1} << j, theta_m);
        w.accumulate(IndexMask{1} << m, -c.theta.component(IndexMask{1} << j));
        frame.push_back(std::move(w));
    }
    return frame;
}

namespace detail {

/// Rows of the pointwise linear system shared by the Reeb solvers:
/// unknowns are the d components of a vector field V.
inline std::vector<Expr> theta_row(const ContactForm& c) {
    std::vector<Expr> row;
    for (std::size_t i = 0; i < c.chart().dim(); ++i)
        row.push_back(c.theta.component(IndexMask{1} << i));
    return row;
}

/// Row expressing  dtheta(V, W) = sum_i V^i dtheta(d_i, W).
inline std::vector<Expr> curvature_row(const DiffForm& dtheta, const MultiVector& w) {
    const Chart& chart = dtheta.chart();
    std::vector<Expr> row;
    for (std::size_t i = 0; i < chart.dim(); ++i) {
        Expr entry = Expr::zero(chart);
        for (std::size_t j = 0; j < chart.dim(); ++j) {
            if (j == i) continue;
            Expr wj = w.component(IndexMask{1} << j);
            if (wj.is_zero()) continue;
            IndexMask pair = (IndexMask{1} << i) | (IndexMask{1} << j);
            Expr comp = dtheta.component(pair);
            if (comp.is_zero()) continue;
            // dtheta(d_i, d_j) = comp for i < j, -comp otherwise
            entry += (i < j) ? comp * wj : -(comp * wj);
        }
        row.push_back(entry);
    }
    return row;
}

inline MultiVector vector_from(const Chart& chart, const std::vector<Expr>& comps) {
    MultiVector v(chart, 1);
    for (std::size_t i = 0; i < comps.size(); ++i)
        v.accumulate(IndexMask{1} << i, comps[i]);
    return v;
}

}  // namespace detail

/// The Reeb vector field of f: the unique R_f with theta(R_f) = f and
/// theta([R_f, X]) = 0 for every section X of H. The bracket condition is
/// equivalent to the pointwise system  dtheta(R_f, W) = -df(W) on a frame
/// W of H (expand d theta(R_f, W) with theta(W) = 0), which is what gets
/// solved; the bracket formulation is kept for the tests.
inline MultiVector reeb_field_of(const ContactForm& c, const Expr& f) {
    require_contact(c, "reeb_field_of");
    symcore::require_same_chart(c.chart(), f.chart(), "reeb_field_of");
    const Chart& chart = c.chart();
    DiffForm dtheta = extcalc::ext_d(c.theta);
    DiffForm df = extcalc::differential(f);
    std::vector<std::vector<Expr>> a;
    std::vector<Expr> b;
    a.push_back(detail::theta_row(c));
    b.push_back(f);
    for (const MultiVector& w : hyperplane_frame(c)) {
        a.push_back(detail::curvature_row(dtheta, w));
        b.push_back(-extcalc::pairing(df, w));
    }
    return detail::vector_from(chart, solve_unique(std::move(a), std::move(b)));
}

/// The classical Reeb vector field: theta(R) = 1, i_R(d theta) = 0,
/// solved as the (d+1) x d system it literally is.
inline MultiVector reeb_field(const ContactForm& c) {
    require_contact(c, "reeb_field");
    const Chart& chart = c.chart();
    DiffForm dtheta = extcalc::ext_d(c.theta);
    std::vector<std::vector<Expr>> a;
    std::vector<Expr> b;
    a.push_back(detail::theta_row(c));
    b.push_back(Expr::one(chart));
    for (std::size_t j = 0; j < chart.dim(); ++j) {
        a.push_back(detail::curvature_row(dtheta, MultiVector::basis(chart, j)));
        b.push_back(Expr::zero(chart));
    }
    return detail::vector_from(chart, solve_unique(std::move(a), std::move(b)));
}

/// The inverse b of the curvature isomorphism: the unique V in H with
/// dtheta(W, V) = omega(W) for all W in H. Orientation is the one that
/// makes  R_f = f R + b(df)  hold identically.
inline MultiVector b_map(const ContactForm& c, const DiffForm& omega) {
    require_contact(c, "b_map");
    symcore::require_same_chart(c.chart(), omega.chart(), "b_map");
    if (omega.grade() != 1) throw symcore::GradeError("b_map expects a 1-form");
    const Chart& chart = c.chart();
    DiffForm dtheta = extcalc::ext_d(c.theta);
    std::vector<std::vector<Expr>> a;
    std::vector<Expr> b;
    a.push_back(detail::theta_row(c));
    b.push_back(Expr::zero(chart));
    for (const MultiVector& w : hyperplane_frame(c)) {
        // dtheta(W, V) = omega(W): negate the row for dtheta(V, W).
        std::vector<Expr> row = detail::curvature_row(dtheta, w);
        for (Expr& e : row) e = -e;
        a.push_back(std::move(row));
        b.push_back(extcalc::pairing(omega, w));
    }
    return detail::vector_from(chart, solve_unique(std::move(a), std::move(b)));
}

/// {f, g} = theta([R_f, R_g]), the bracket transported from Reeb fields.
inline Expr reeb_bracket(const ContactForm& c, const Expr& f, const Expr& g) {
    MultiVector rf = reeb_field_of(c, f);
    MultiVector rg = reeb_field_of(c, g);
    return extcalc::pairing(c.theta, extcalc::vf_bracket(rf, rg));
}

/// The Jacobi pair (Lambda, R) reproducing the Reeb bracket through
/// {f,g} = <df^dg, Lambda> + f R(g) - g R(f). R is the classical Reeb
/// field; Lambda's components are extracted from the bracket on
/// coordinates, Lambda^{ij} = {x_i, x_j} - x_i R^j + x_j R^i, which pins
/// every sign: the defining identity itself is the contract.
inline jacobi::JacobiPair induced_jacobi_pair(const ContactForm& c) {
    require_contact(c, "induced_jacobi_pair");
    const Chart& chart = c.chart();
    MultiVector r = reeb_field(c);
    MultiVector lambda(chart, 2);
    std::vector<MultiVector> reeb_of_coord;
    for (std::size_t i = 0; i < chart.dim(); ++i)
        reeb_of_coord.push_back(reeb_field_of(c, Expr::coordinate(chart, i)));
    for (std::size_t i = 0; i < chart.dim(); ++i) {
        Expr xi = Expr::coordinate(chart, i);
        for (std::size_t j = i + 1; j < chart.dim(); ++j) {
            Expr xj = Expr::coordinate(chart, j);
            Expr br = extcalc::pairing(
                c.theta, extcalc::vf_bracket(reeb_of_coord[i], reeb_of_coord[j]));
            Expr comp = br - xi * r.component(IndexMask{1} << j) +
                        xj * r.component(IndexMask{1} << i);
            lambda.accumulate((IndexMask{1} << i) | (IndexMask{1} << j), comp);
        }
    }
    return jacobi::JacobiPair(std::move(lambda), std::move(r));
}

/// The two components of the vector-field decomposition: u = theta(X) and
/// the 1-form phi representing theta([., X]) on H. phi is stored as a full
/// 1-form; only its restriction to H is contractually meaningful.
struct VFDecomposition {
    Expr u;
    DiffForm phi;
};

/// X |-> (theta(X), du + i_X dtheta); the second component agrees with
/// theta([., X]) on H (expand d theta(W, X) for W in H).
inline VFDecomposition decompose_vf(const ContactForm& c, const MultiVector& x) {
    require_contact(c, "decompose_vf");
    symcore::require_same_chart(c.chart(), x.chart(), "decompose_vf");
    if (x.grade() != 1) throw symcore::GradeError("decompose_vf expects a vector field");
    Expr u = extcalc::pairing(c.theta, x);
    DiffForm phi = extcalc::differential(u) + extcalc::interior(x, extcalc::ext_d(c.theta));
    return VFDecomposition{std::move(u), std::move(phi)};
}

/// Inverse of decompose_vf: (u, phi) |-> R_u - b(phi).
inline MultiVector reconstruct_vf(const ContactForm& c, const VFDecomposition& dec) {
    return reeb_field_of(c, dec.u) - b_map(c, dec.phi);
}

/// Equality of 1-forms as functionals on H: same value on every frame
/// vector. Decompositions are compared this way, never componentwise.
inline bool equal_on_hyperplane(const ContactForm& c, const DiffForm& a, const DiffForm& b) {
    for (const MultiVector& w : hyperplane_frame(c))
        if (extcalc::pairing(a, w) != extcalc::pairing(b, w)) return false;
    return true;
}

}  // namespace jacobi_kit::contact
