#pragma once

#include <vector>

#include "jacobi_kit/symcore/polynomial.hpp"

// Multivariate gcd over Q[x1..xn] via content extraction and a
// subresultant polynomial remainder sequence in a main variable
// (Knuth TAOCP 4.6.1, Algorithm C).  Results are normalized to be
// integer-primitive with positive leading coefficient, so canonical
// fraction reduction is deterministic.

namespace jacobi_kit::symcore {

namespace gcd_detail {

/// Strip rational denominators and the integer content; flip sign so the
/// grlex leading coefficient is positive. The result generates the same
/// ideal over Q.
inline Polynomial primitive_integer(const Polynomial& f) {
    if (f.is_zero()) return f;
    Integer den_lcm = 1;
    for (const auto& [m, c] : f.terms())
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    Integer num_gcd = 0;
    for (const auto& [m, c] : f.terms())
        num_gcd = boost::multiprecision::gcd(num_gcd, Integer(numerator(c) * (den_lcm / denominator(c))));
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    if (f.lead_coeff() < 0) scale = -scale;
    return f.scaled(scale);
}

/// Componentwise minimum of all exponent vectors (the largest monomial
/// dividing every term).
inline Monomial monomial_content(const Polynomial& f) {
    Monomial m = f.terms().begin()->first;
    for (const auto& [mm, c] : f.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], mm[i]);
    return m;
}

inline Polynomial shift_down(const Polynomial& f, const Monomial& m) {
    Polynomial out(f.chart());
    for (const auto& [mm, c] : f.terms()) out.add_term(monomial_div(mm, m), c);
    return out;
}

/// f viewed as a univariate polynomial in coordinate `v`: coefficient
/// polynomials (free of v) indexed by the v-degree.
inline std::vector<Polynomial> univariate_coeffs(const Polynomial& f, std::size_t v) {
    std::vector<Polynomial> out(f.degree_in(v) + 1, Polynomial(f.chart()));
    for (const auto& [m, c] : f.terms()) {
        Monomial n = m;
        std::uint32_t d = n[v];
        n[v] = 0;
        out[d].add_term(n, c);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

inline Polynomial from_univariate(const std::vector<Polynomial>& coeffs, std::size_t v,
                                  const Chart& chart) {
    Polynomial out(chart);
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        for (const auto& [m, c] : coeffs[d].terms()) {
            Monomial n = m;
            n[v] += static_cast<std::uint32_t>(d);
            out.add_term(n, c);
        }
    }
    return out;
}

inline int uni_degree(const std::vector<Polynomial>& a) {
    int d = static_cast<int>(a.size()) - 1;
    while (d >= 0 && a[static_cast<std::size_t>(d)].is_zero()) --d;
    return d;  // -1 for the zero polynomial
}

/// Pseudo-remainder of a by b in the main variable: the remainder of
/// lc(b)^(deg a - deg b + 1) * a under univariate division by b.
inline std::vector<Polynomial> pseudo_rem(std::vector<Polynomial> a,
                                          const std::vector<Polynomial>& b,
                                          const Chart& chart) {
    int db = uni_degree(b);
    const Polynomial& lcb = b[static_cast<std::size_t>(db)];
    int da = uni_degree(a);
    int e = da - db + 1;
    while (true) {
        da = uni_degree(a);
        if (da < db || da < 0) break;
        Polynomial lca = a[static_cast<std::size_t>(da)];
        for (auto& c : a) c = c * lcb;
        int shift = da - db;
        for (int i = 0; i <= db; ++i) {
            std::size_t k = static_cast<std::size_t>(i + shift);
            a[k] = a[k] - lca * b[static_cast<std::size_t>(i)];
        }
        --e;
    }
    if (e > 0) {
        Polynomial scale = lcb.pow(static_cast<std::uint64_t>(e));
        for (auto& c : a) c = c * scale;
    }
    return a;
}

}  // namespace gcd_detail

inline Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

namespace gcd_detail {

/// gcd of all v-coefficients of f (the content of f w.r.t. v).
inline Polynomial content_in(const Polynomial& f, std::size_t v) {
    auto coeffs = univariate_coeffs(f, v);
    Polynomial c(f.chart());
    for (const auto& p : coeffs) {
        c = poly_gcd(c, p);
        if (c.is_one()) break;
    }
    return c;
}

}  // namespace gcd_detail

/// gcd over Q[x...], integer-primitive with positive leading coefficient;
/// poly_gcd(0, 0) = 0 and nonzero constants are units (gcd 1).
inline Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
    using namespace gcd_detail;
    require_same_chart(f.chart(), g.chart(), "gcd");
    const Chart& chart = f.chart();
    if (f.is_zero()) return g.is_zero() ? g : primitive_integer(g);
    if (g.is_zero()) return primitive_integer(f);
    if (f.is_constant() || g.is_constant()) return Polynomial::constant(chart, 1);

    // Pull out the common monomial factor first; it also guarantees the
    // single-term fast path reduces to the constant case.
    Monomial mf = monomial_content(f);
    Monomial mg = monomial_content(g);
    Monomial common(chart.dim(), 0);
    for (std::size_t i = 0; i < common.size(); ++i) common[i] = std::min(mf[i], mg[i]);
    Polynomial fs = shift_down(f, mf);
    Polynomial gs = shift_down(g, mg);
    Polynomial mono = Polynomial::term(chart, common, Rational(1));
    if (fs.is_constant() || gs.is_constant()) return mono;

    Polynomial fi = primitive_integer(fs);
    Polynomial gi = primitive_integer(gs);

    std::size_t v = 0;
    while (fi.degree_in(v) == 0 && gi.degree_in(v) == 0) ++v;
    if (fi.degree_in(v) == 0) return mono * poly_gcd(fi, content_in(gi, v));
    if (gi.degree_in(v) == 0) return mono * poly_gcd(content_in(fi, v), gi);

    Polynomial cf = content_in(fi, v);
    Polynomial cg = content_in(gi, v);
    Polynomial cont = poly_gcd(cf, cg);
    auto F = univariate_coeffs(exact_divide(fi, cf), v);
    auto G = univariate_coeffs(exact_divide(gi, cg), v);
    if (uni_degree(F) < uni_degree(G)) std::swap(F, G);

    // Subresultant PRS on the primitive parts.
    Polynomial h = Polynomial::constant(chart, 1);
    Polynomial lead = Polynomial::constant(chart, 1);
    Polynomial result(chart);
    while (true) {
        int delta = uni_degree(F) - uni_degree(G);
        auto R = pseudo_rem(F, G, chart);
        if (uni_degree(R) < 0) {
            result = from_univariate(G, v, chart);
            break;
        }
        if (uni_degree(R) == 0) {
            result = Polynomial::constant(chart, 1);
            break;
        }
        Polynomial divisor = lead * h.pow(static_cast<std::uint64_t>(delta));
        F = std::move(G);
        G.assign(R.size(), Polynomial(chart));
        for (std::size_t i = 0; i < R.size(); ++i) G[i] = exact_divide(R[i], divisor);
        while (G.size() > 1 && G.back().is_zero()) G.pop_back();
        lead = F[static_cast<std::size_t>(uni_degree(F))];
        if (delta == 1) {
            h = lead;
        } else if (delta > 1) {
            h = exact_divide(lead.pow(static_cast<std::uint64_t>(delta)),
                             h.pow(static_cast<std::uint64_t>(delta - 1)));
        }
    }
    if (!result.is_constant())
        result = exact_divide(result, content_in(result, v));
    return mono * primitive_integer(cont * result);
}

}  // namespace jacobi_kit::symcore
