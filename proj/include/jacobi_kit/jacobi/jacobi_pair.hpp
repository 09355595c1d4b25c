#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "jacobi_kit/extcalc/ops.hpp"

namespace jacobi_kit::jacobi {

using extcalc::DiffForm;
using extcalc::MultiVector;
using symcore::Chart;
using symcore::Expr;

/// A bivector Lambda and a vector field R on a common chart. Whether the
/// pair actually satisfies the structure equations is a verdict
/// (check_jacobi_pair), not a type invariant: broken pairs are first-class
/// values so that negative tests and failure reports can be expressed.
struct JacobiPair {
    JacobiPair(MultiVector lambda_, MultiVector r_)
        : lambda(std::move(lambda_)), r(std::move(r_)) {
        symcore::require_same_chart(lambda.chart(), r.chart(), "jacobi pair");
        if (lambda.grade() != 2) throw symcore::GradeError("lambda must be a bivector");
        if (r.grade() != 1) throw symcore::GradeError("r must be a vector field");
    }

    const Chart& chart() const { return lambda.chart(); }

    static JacobiPair zero(const Chart& chart) {
        return JacobiPair(MultiVector::zero(chart, 2), MultiVector::zero(chart, 1));
    }

    MultiVector lambda;
    MultiVector r;
};

/// Exact residuals of the structure equations: residual_lr = [Lambda, R]
/// and residual_ll = [Lambda, Lambda] - 2 R ^ Lambda. The pair is Jacobi
/// iff both vanish identically.
struct PairReport {
    bool is_jacobi;
    MultiVector residual_lr;
    MultiVector residual_ll;
};

inline PairReport check_jacobi_pair(const JacobiPair& p) {
    MultiVector lr = extcalc::schouten(p.lambda, p.r);
    MultiVector ll = extcalc::schouten(p.lambda, p.lambda) -
                     Expr::constant(p.chart(), 2) * extcalc::wedge(p.r, p.lambda);
    return PairReport{lr.is_zero() && ll.is_zero(), std::move(lr), std::move(ll)};
}

/// {f, g} = <df ^ dg, Lambda> + f R(g) - g R(f). Antisymmetric, local,
/// first order in each slot.
inline Expr jacobi_bracket(const JacobiPair& p, const Expr& f, const Expr& g) {
    symcore::require_same_chart(p.chart(), f.chart(), "jacobi_bracket");
    symcore::require_same_chart(p.chart(), g.chart(), "jacobi_bracket");
    Expr pair = extcalc::pairing(extcalc::wedge(extcalc::differential(f),
                                                extcalc::differential(g)),
                                 p.lambda);
    return pair + f * extcalc::apply_vf(p.r, g) - g * extcalc::apply_vf(p.r, f);
}

/// {{f,g},h} + {{g,h},f} + {{h,f},g}; identically zero exactly when the
/// pair is Jacobi. This is the brute-force oracle the structure equations
/// are calibrated against.
inline Expr jacobiator(const JacobiPair& p, const Expr& f, const Expr& g, const Expr& h) {
    return jacobi_bracket(p, jacobi_bracket(p, f, g), h) +
           jacobi_bracket(p, jacobi_bracket(p, g, h), f) +
           jacobi_bracket(p, jacobi_bracket(p, h, f), g);
}

/// The symbol rho1(u) of the operator {u, .}: the unique vector field with
/// {u, f v} = f {u, v} + rho1(u)(f) v. Closed form: rho1(u) = du _| Lambda
/// + u R, where _| contracts the 1-form into the bivector's first slot.
inline MultiVector hamiltonian_symbol(const JacobiPair& p, const Expr& u) {
    symcore::require_same_chart(p.chart(), u.chart(), "hamiltonian_symbol");
    return extcalc::contract_form(extcalc::differential(u), p.lambda) + u * p.r;
}

/// Homogeneous Poisson bivector on the chart extended by `new_coord`
/// (denote it t, taken on t > 0):  Pi = (1/t) Lambda + dt ^ R.
/// Pi is Poisson iff the pair is Jacobi, and L_{t dt} Pi = -Pi always.
inline MultiVector poissonization(const JacobiPair& p, const std::string& new_coord) {
    Chart ext = p.chart().extended(new_coord);
    std::size_t t_index = ext.dim() - 1;
    Expr t = Expr::coordinate(ext, t_index);
    MultiVector lam = p.lambda.lifted_to(ext);
    MultiVector r = p.r.lifted_to(ext);
    MultiVector dt = MultiVector::basis(ext, t_index);
    return Expr::one(ext) / t * lam + extcalc::wedge(dt, r);
}

/// Search the monomial triples of total degree <= max_degree (in grlex
/// order, constants first) for one with a nonzero Jacobiator. Returns the
/// first witness found; empty for genuine Jacobi pairs.
inline std::optional<std::array<Expr, 3>> jacobiator_witness(const JacobiPair& p,
                                                             unsigned max_degree) {
    const Chart& chart = p.chart();
    std::vector<Expr> monos;
    symcore::Monomial m(chart.dim(), 0);
    auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var + 1 == chart.dim()) {
            for (std::uint32_t e = 0; e <= remaining; ++e) {
                m[var] = e;
                monos.push_back(Expr(symcore::Polynomial::term(chart, m, 1)));
            }
            m[var] = 0;
            return;
        }
        for (std::uint32_t e = 0; e <= remaining; ++e) {
            m[var] = e;
            self(self, var + 1, remaining - e);
        }
        m[var] = 0;
    };
    rec(rec, 0, max_degree);
    for (std::size_t i = 0; i < monos.size(); ++i)
        for (std::size_t j = i + 1; j < monos.size(); ++j)
            for (std::size_t k = j + 1; k < monos.size(); ++k)
                if (!jacobiator(p, monos[i], monos[j], monos[k]).is_zero())
                    return std::array<Expr, 3>{monos[i], monos[j], monos[k]};
    return std::nullopt;
}

}  // namespace jacobi_kit::jacobi
