#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jacobi_kit/symcore/chart.hpp"
#include "jacobi_kit/symcore/errors.hpp"
#include "jacobi_kit/symcore/rational.hpp"

namespace jacobi_kit::symcore {

/// Exponent vector, one entry per chart coordinate.
using Monomial = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

/// Graded lexicographic order in declared coordinate order: compare total
/// degree first, then exponent vectors lexicographically (earlier
/// coordinates dominate). The leading term of a polynomial is the maximal
/// monomial in this order; it is the order referenced everywhere a
/// "leading coefficient" is mentioned.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

/// Multivariate polynomial with exact rational coefficients over the
/// chart's coordinates. Zero coefficients are never stored, so the term
/// map itself is a canonical form.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit Polynomial(Chart chart) : chart_(std::move(chart)) {}

    static Polynomial constant(const Chart& chart, Rational value) {
        Polynomial p(chart);
        if (value != 0) p.terms_.emplace(Monomial(chart.dim(), 0), std::move(value));
        return p;
    }

    static Polynomial coordinate(const Chart& chart, std::size_t index) {
        if (index >= chart.dim()) throw Error("coordinate index out of range");
        Polynomial p(chart);
        Monomial m(chart.dim(), 0);
        m[index] = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static Polynomial term(const Chart& chart, Monomial m, Rational coeff) {
        if (m.size() != chart.dim()) throw Error("monomial width does not match chart");
        Polynomial p(chart);
        if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
        return p;
    }

    const Chart& chart() const { return chart_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw Error("polynomial is not constant");
        return terms_.begin()->second;
    }

    bool is_one() const { return is_constant() && constant_value() == 1; }

    std::uint64_t degree() const {
        return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
    }

    const Monomial& lead_monomial() const {
        if (terms_.empty()) throw Error("zero polynomial has no leading term");
        return terms_.rbegin()->first;
    }

    const Rational& lead_coeff() const {
        if (terms_.empty()) throw Error("zero polynomial has no leading term");
        return terms_.rbegin()->second;
    }

    std::uint32_t degree_in(std::size_t var) const {
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_chart(a.chart_, b.chart_, "polynomial add");
        Polynomial out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same_chart(a.chart_, b.chart_, "polynomial sub");
        Polynomial out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(chart_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_chart(a.chart_, b.chart_, "polynomial mul");
        Polynomial out(a.chart_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(monomial_mul(ma, mb), ca * cb);
        return out;
    }

    Polynomial scaled(const Rational& s) const {
        Polynomial out(chart_);
        if (s == 0) return out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
        return out;
    }

    Polynomial pow(std::uint64_t k) const {
        Polynomial result = constant(chart_, 1);
        Polynomial base = *this;
        while (k > 0) {
            if (k & 1) result = result * base;
            base = (k >>= 1) ? base * base : base;
        }
        return result;
    }

    Polynomial derivative(std::size_t var) const {
        if (var >= chart_.dim()) throw Error("derivative: coordinate index out of range");
        Polynomial out(chart_);
        for (const auto& [m, c] : terms_) {
            if (m[var] == 0) continue;
            Monomial n = m;
            n[var] -= 1;
            out.add_term(n, c * Rational(m[var]));
        }
        return out;
    }

    /// Exact value at a point given in chart coordinate order.
    Rational eval(const std::vector<Rational>& point) const {
        if (point.size() != chart_.dim()) throw Error("eval: point has wrong dimension");
        Rational out(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
            out += t;
        }
        return out;
    }

    /// Same polynomial re-indexed on a chart that extends this one by
    /// trailing coordinates; new exponents are zero.
    Polynomial lifted_to(const Chart& bigger) const {
        if (!chart_.is_prefix_of(bigger))
            throw ChartMismatch("lift: target chart does not extend source chart");
        Polynomial out(bigger);
        for (const auto& [m, c] : terms_) {
            Monomial n(bigger.dim(), 0);
            std::copy(m.begin(), m.end(), n.begin());
            out.terms_.emplace(std::move(n), c);
        }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.chart_ == b.chart_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Grammar-compatible rendering, leading term first.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool printed_coeff = false;
            if (a != 1 || total_degree(m) == 0) {
                os << rational_str(a);
                printed_coeff = true;
            }
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (printed_coeff) os << "*";
                os << chart_.name(i);
                if (m[i] > 1) os << "^" << m[i];
                printed_coeff = true;
            }
        }
        return os.str();
    }

private:
    Chart chart_;
    TermMap terms_;
};

/// Quotient of f by g when g divides f exactly, std::nullopt otherwise.
/// Greedy leading-term division: if f = q*g then lt(f) = lt(q)*lt(g) in
/// any monomial order, so the loop recovers q term by term.
inline std::optional<Polynomial> try_exact_divide(const Polynomial& f, const Polynomial& g) {
    require_same_chart(f.chart(), g.chart(), "polynomial div");
    if (g.is_zero()) throw DivisionByZero("exact division by zero polynomial");
    Polynomial q(f.chart());
    Polynomial r = f;
    while (!r.is_zero()) {
        if (!monomial_divides(g.lead_monomial(), r.lead_monomial())) return std::nullopt;
        Monomial m = monomial_div(r.lead_monomial(), g.lead_monomial());
        Rational c = r.lead_coeff() / g.lead_coeff();
        Polynomial t = Polynomial::term(f.chart(), std::move(m), std::move(c));
        q = q + t;
        r = r - t * g;
    }
    return q;
}

inline Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    auto q = try_exact_divide(f, g);
    if (!q) throw Error("exact division failed: divisor does not divide dividend");
    return *q;
}

}  // namespace jacobi_kit::symcore
