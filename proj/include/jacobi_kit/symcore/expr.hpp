#pragma once

#include <map>
#include <string>
#include <utility>

#include "jacobi_kit/symcore/polynomial.hpp"
#include "jacobi_kit/symcore/polynomial_gcd.hpp"

namespace jacobi_kit::symcore {

/// Exact rational function over a chart, kept in canonical form:
///   - gcd(numerator, denominator) is a unit,
///   - the denominator is monic under grlex (so it is 1 for polynomials),
///   - zero is 0/1.
/// Structural equality therefore coincides with mathematical equality,
/// which is what every "identically zero" verdict in the library rests on.
class Expr {
public:
    explicit Expr(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::constant(num_.chart(), 1)) {}

    Expr(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        require_same_chart(num_.chart(), den_.chart(), "expr");
        if (den_.is_zero()) throw DivisionByZero("denominator is identically zero");
        canonicalize();
    }

    static Expr zero(const Chart& chart) { return Expr(Polynomial(chart)); }
    static Expr one(const Chart& chart) { return constant(chart, 1); }
    static Expr constant(const Chart& chart, Rational v) {
        return Expr(Polynomial::constant(chart, std::move(v)));
    }
    static Expr coordinate(const Chart& chart, std::size_t index) {
        return Expr(Polynomial::coordinate(chart, index));
    }
    static Expr coordinate(const Chart& chart, std::string_view name) {
        auto i = chart.index_of(name);
        if (!i) throw Error("unknown coordinate '" + std::string(name) + "'");
        return Expr(Polynomial::coordinate(chart, *i));
    }

    const Chart& chart() const { return num_.chart(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational constant_value() const {
        if (!is_constant()) throw Error("expression is not constant");
        return num_.constant_value();
    }

    friend Expr operator+(const Expr& a, const Expr& b) {
        require_same_chart(a.chart(), b.chart(), "add");
        if (a.den_ == b.den_) return Expr(a.num_ + b.num_, a.den_);
        return Expr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend Expr operator-(const Expr& a, const Expr& b) {
        require_same_chart(a.chart(), b.chart(), "sub");
        if (a.den_ == b.den_) return Expr(a.num_ - b.num_, a.den_);
        return Expr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    Expr operator-() const {
        Expr out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend Expr operator*(const Expr& a, const Expr& b) {
        require_same_chart(a.chart(), b.chart(), "mul");
        if (a.is_polynomial() && b.is_polynomial()) return Expr(a.num_ * b.num_);
        // Cross-cancel before multiplying to keep intermediate degrees low.
        Polynomial g1 = poly_gcd(a.num_, b.den_);
        Polynomial g2 = poly_gcd(b.num_, a.den_);
        Polynomial n1 = g1.is_one() || g1.is_zero() ? a.num_ : exact_divide(a.num_, g1);
        Polynomial d2 = g1.is_one() || g1.is_zero() ? b.den_ : exact_divide(b.den_, g1);
        Polynomial n2 = g2.is_one() || g2.is_zero() ? b.num_ : exact_divide(b.num_, g2);
        Polynomial d1 = g2.is_one() || g2.is_zero() ? a.den_ : exact_divide(a.den_, g2);
        return Expr(n1 * n2, d1 * d2);
    }

    friend Expr operator/(const Expr& a, const Expr& b) {
        require_same_chart(a.chart(), b.chart(), "div");
        if (b.is_zero()) throw DivisionByZero("division by zero expression");
        return a * Expr(b.den_, b.num_);
    }

    Expr& operator+=(const Expr& o) { return *this = *this + o; }
    Expr& operator-=(const Expr& o) { return *this = *this - o; }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }
    Expr& operator/=(const Expr& o) { return *this = *this / o; }

    /// Integer power; negative exponents invert (zero base rejected).
    Expr pow(long long k) const {
        if (k < 0) {
            if (is_zero()) throw DivisionByZero("negative power of zero expression");
            return Expr(den_, num_).pow(-k);
        }
        Expr result = one(chart());
        Expr base = *this;
        auto e = static_cast<unsigned long long>(k);
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Exact partial derivative by the quotient rule.
    Expr diff(std::size_t var) const {
        if (is_polynomial()) return Expr(num_.derivative(var));
        return Expr(num_.derivative(var) * den_ - num_ * den_.derivative(var),
                    den_ * den_);
    }

    Expr diff(std::string_view coordinate) const {
        auto i = chart().index_of(coordinate);
        if (!i) throw Error("unknown coordinate '" + std::string(coordinate) + "'");
        return diff(*i);
    }

    /// Exact evaluation; throws PoleError when the denominator vanishes.
    Rational eval(const std::map<std::string, Rational>& point) const {
        std::vector<Rational> p;
        p.reserve(chart().dim());
        for (const auto& name : chart().names()) {
            auto it = point.find(name);
            if (it == point.end())
                throw Error("eval: no value assigned to coordinate '" + name + "'");
            p.push_back(it->second);
        }
        Rational d = den_.eval(p);
        if (d == 0) throw PoleError("eval: denominator vanishes at the given point");
        return num_.eval(p) / d;
    }

    friend bool operator==(const Expr& a, const Expr& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    /// Rendering that reparses to the same canonical value.
    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.terms().size() == 1 ? num_.str() : "(" + num_.str() + ")";
        bool den_atomic = false;
        if (den_.terms().size() == 1) {
            const auto& [m, c] = *den_.terms().begin();
            std::size_t vars = 0;
            for (auto e : m) vars += e > 0 ? 1 : 0;
            den_atomic = (c == 1 && vars == 1);
        }
        std::string d = den_atomic ? den_.str() : "(" + den_.str() + ")";
        return n + "/" + d;
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(chart(), 1);
            return;
        }
        if (!den_.is_one()) {
            Polynomial g = poly_gcd(num_, den_);
            if (!g.is_one()) {
                num_ = exact_divide(num_, g);
                den_ = exact_divide(den_, g);
            }
        }
        Rational lc = den_.lead_coeff();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Polynomial num_;
    Polynomial den_;
};

}  // namespace jacobi_kit::symcore
