#pragma once

#include "jacobi_kit/extcalc/tensor.hpp"

namespace jacobi_kit::extcalc {

// ---------------------------------------------------------------------
// exterior product

/// Graded-commutative wedge: A ^ B = (-1)^{|A||B|} B ^ A. Both arguments
/// must be of the same kind (two multivectors or two forms).
template <Variance V>
Tensor<V> wedge(const Tensor<V>& a, const Tensor<V>& b) {
    symcore::require_same_chart(a.chart(), b.chart(), "wedge");
    Tensor<V> out(a.chart(), a.grade() + b.grade());
    for (const auto& [ma, va] : a.components()) {
        for (const auto& [mb, vb] : b.components()) {
            if (ma & mb) continue;
            Expr term = va * vb;
            if (merge_sign(ma, mb) < 0) term = -term;
            out.accumulate(ma | mb, term);
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// differential

/// Differential of a scalar as a 1-form.
inline DiffForm differential(const Expr& f) {
    DiffForm out(f.chart(), 1);
    for (std::size_t i = 0; i < f.chart().dim(); ++i)
        out.accumulate(IndexMask{1} << i, f.diff(i));
    return out;
}

/// Exterior derivative in coordinates; raises the grade by one.
inline DiffForm ext_d(const DiffForm& w) {
    DiffForm out(w.chart(), w.grade() + 1);
    for (const auto& [m, v] : w.components()) {
        for (std::size_t i = 0; i < w.chart().dim(); ++i) {
            IndexMask bit = IndexMask{1} << i;
            if (m & bit) continue;
            Expr dv = v.diff(i);
            if (dv.is_zero()) continue;
            if (merge_sign(bit, m) < 0) dv = -dv;
            out.accumulate(bit | m, dv);
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// contractions

namespace detail {

/// First-slot contraction of a grade-1 object into an antisymmetric
/// tensor: i(e)(T)_{J \ i} = (-1)^{pos(i in J)} e^i T_J. The same
/// combinatorics serves i_X(omega) and the musical contraction of a
/// 1-form into a multivector.
template <Variance VT, Variance VO>
Tensor<VT> contract_first_slot(const Tensor<VO>& one, const Tensor<VT>& t) {
    symcore::require_same_chart(one.chart(), t.chart(), "contraction");
    if (one.grade() != 1) throw symcore::GradeError("contraction requires a grade-1 argument");
    if (t.grade() == 0) throw symcore::GradeError("cannot contract into a grade-0 tensor");
    Tensor<VT> out(t.chart(), t.grade() - 1);
    for (const auto& [m, v] : t.components()) {
        for (const auto& [mi, c] : one.components()) {
            if (!(m & mi)) continue;
            std::size_t i = indices_from_mask(mi)[0];
            Expr term = c * v;
            if (removal_sign(m, i) < 0) term = -term;
            out.accumulate(m & ~mi, term);
        }
    }
    return out;
}

}  // namespace detail

/// Interior product i_X(omega) of a vector field in a form's first slot.
inline DiffForm interior(const MultiVector& x, const DiffForm& w) {
    return detail::contract_first_slot(x, w);
}

/// Contraction of a 1-form into a multivector's first slot; for a
/// bivector L this realizes the musical map  beta(contract_form(alpha, L))
/// = <alpha ^ beta, L>.
inline MultiVector contract_form(const DiffForm& alpha, const MultiVector& a) {
    return detail::contract_first_slot(alpha, a);
}

/// Full pairing of equal grades, normalized so that
/// <a^1 ^ ... ^ a^k, X_1 ^ ... ^ X_k> = det[a^i(X_j)]; on the sparse
/// representation that is the sum of componentwise products.
template <Variance VA, Variance VB>
Expr pairing(const Tensor<VA>& w, const Tensor<VB>& a) {
    static_assert(VA != VB, "pairing contracts a form with a multivector");
    symcore::require_same_chart(w.chart(), a.chart(), "pairing");
    if (w.grade() != a.grade()) throw symcore::GradeError("pairing requires equal grades");
    Expr out = Expr::zero(w.chart());
    for (const auto& [m, v] : w.components()) {
        Expr other = a.component(m);
        if (!other.is_zero()) out += v * other;
    }
    return out;
}

// ---------------------------------------------------------------------
// vector fields

/// X(f), the grade-0 Lie derivative.
inline Expr apply_vf(const MultiVector& x, const Expr& f) {
    symcore::require_same_chart(x.chart(), f.chart(), "vector field application");
    if (x.grade() != 1) throw symcore::GradeError("apply_vf requires a vector field");
    Expr out = Expr::zero(f.chart());
    for (const auto& [m, c] : x.components())
        out += c * f.diff(indices_from_mask(m)[0]);
    return out;
}

/// Jacobi-Lie bracket [X,Y]^i = X(Y^i) - Y(X^i).
inline MultiVector vf_bracket(const MultiVector& x, const MultiVector& y) {
    symcore::require_same_chart(x.chart(), y.chart(), "vf_bracket");
    if (x.grade() != 1 || y.grade() != 1)
        throw symcore::GradeError("vf_bracket requires two vector fields");
    MultiVector out(x.chart(), 1);
    for (std::size_t i = 0; i < x.chart().dim(); ++i) {
        IndexMask bit = IndexMask{1} << i;
        out.accumulate(bit, apply_vf(x, y.component(bit)) - apply_vf(y, x.component(bit)));
    }
    return out;
}

// ---------------------------------------------------------------------
// Schouten-Nijenhuis bracket

namespace detail {

/// Left Grassmann derivative d/d(xi_i) on the odd generators: strike
/// index i, sign (-1)^(position of i).
inline MultiVector grassmann_del(const MultiVector& a, std::size_t i) {
    MultiVector out(a.chart(), a.grade() - 1);
    IndexMask bit = IndexMask{1} << i;
    for (const auto& [m, v] : a.components()) {
        if (!(m & bit)) continue;
        out.accumulate(m & ~bit, removal_sign(m, i) < 0 ? -v : v);
    }
    return out;
}

inline MultiVector coefficient_diff(const MultiVector& a, std::size_t i) {
    MultiVector out(a.chart(), a.grade());
    for (const auto& [m, v] : a.components()) out.accumulate(m, v.diff(i));
    return out;
}

inline int parity_sign(std::uint64_t n) { return n % 2 ? -1 : 1; }

/// Sign of the grade automorphism A -> (-1)^(k(k-1)/2) A that fixes the
/// convention (see schouten below).
inline int eps_sign(std::size_t k) { return parity_sign((k * (k - 1) / 2) % 2); }

}  // namespace detail

/// Schouten-Nijenhuis bracket, grade p + q - 1. Convention, fixed for the
/// whole library and calibrated so that the structure equations of a pair
/// (Lambda, R) read exactly [Lambda,R] = 0, [Lambda,Lambda] = 2 R^Lambda:
///   - on two vector fields it is the Jacobi-Lie bracket,
///   - schouten(X, A) is the Lie derivative L_X A for every grade of A,
///   - graded antisymmetry [A,B] = -(-1)^{(p-1)(q-1)} [B,A],
///   - graded Jacobi identity
///     (-1)^{(p-1)(r-1)}[[A,B],C] + (cyclic in (A,B,C)) = 0.
/// Computed through the odd-variable calculus: writing A = sum A^I xi_I
/// with anticommuting xi_i,
///   [A,B] = s1 * sum_i (dA/dxi_i)^(dB/dx_i) + s2 * sum_i (dB/dxi_i)^(dA/dx_i)
/// with s1 = c (-1)^{p-1}, s2 = -c (-1)^{(p-1)(q-1)+(q-1)} and
/// c = eps(p) eps(q) eps(p+q-1), eps(k) = (-1)^{k(k-1)/2}.
inline MultiVector schouten(const MultiVector& a, const MultiVector& b) {
    using namespace detail;
    symcore::require_same_chart(a.chart(), b.chart(), "schouten");
    std::size_t p = a.grade(), q = b.grade();
    if (p + q == 0) throw symcore::GradeError("schouten requires total grade >= 1");
    MultiVector out(a.chart(), p + q - 1);
    int c = eps_sign(p) * eps_sign(q) * eps_sign(p + q - 1);
    int s1 = c * parity_sign(p - 1);
    int s2 = -c * parity_sign((p - 1) * (q - 1) + (q - 1));
    for (std::size_t i = 0; i < a.chart().dim(); ++i) {
        if (p >= 1) {
            MultiVector t = wedge(grassmann_del(a, i), coefficient_diff(b, i));
            out = out + (s1 < 0 ? -t : t);
        }
        if (q >= 1) {
            MultiVector t = wedge(grassmann_del(b, i), coefficient_diff(a, i));
            out = out + (s2 < 0 ? -t : t);
        }
    }
    return out;
}

// ---------------------------------------------------------------------
// Lie derivatives

/// Cartan's formula L_X = i_X d + d i_X on forms; on grade 0 this is X(f).
inline DiffForm lie_derivative(const MultiVector& x, const DiffForm& w) {
    if (w.grade() == 0)
        return DiffForm::scalar(apply_vf(x, w.scalar_value()));
    return interior(x, ext_d(w)) + ext_d(interior(x, w));
}

/// On multivectors the Lie derivative is schouten(X, A) (the convention
/// above makes this the honest L_X).
inline MultiVector lie_derivative(const MultiVector& x, const MultiVector& a) {
    if (x.grade() != 1) throw symcore::GradeError("lie_derivative requires a vector field");
    if (a.grade() == 0)
        return MultiVector::scalar(apply_vf(x, a.scalar_value()));
    return schouten(x, a);
}

}  // namespace jacobi_kit::extcalc
