#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "jacobi_kit/symcore/expr.hpp"

namespace jacobi_kit::extcalc {

using symcore::Chart;
using symcore::Expr;

/// Strictly increasing index tuples are encoded as bitmasks: bit i set
/// means coordinate i occurs. The encoding is canonical by construction,
/// grade = popcount, and permutation signs reduce to popcount arithmetic.
using IndexMask = std::uint64_t;

inline IndexMask mask_from_indices(const std::vector<std::size_t>& idx, std::size_t dim) {
    IndexMask m = 0;
    for (std::size_t i : idx) {
        if (i >= dim) throw symcore::GradeError("tensor index out of range");
        IndexMask bit = IndexMask{1} << i;
        if (bit <= m) throw symcore::GradeError("tensor index tuple must be strictly increasing");
        m |= bit;
    }
    return m;
}

inline std::vector<std::size_t> indices_from_mask(IndexMask m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

/// Sign of moving the sorted tuple `a` in front of the sorted tuple `b`
/// (the Koszul sign of the merge); tuples must be disjoint.
inline int merge_sign(IndexMask a, IndexMask b) {
    int inversions = 0;
    for (IndexMask bb = b; bb;) {
        IndexMask low = bb & (~bb + 1);
        // indices of `a` strictly above this bit
        inversions += std::popcount(a & ~(low | (low - 1)));
        bb ^= low;
    }
    return inversions % 2 ? -1 : 1;
}

/// Sign picked up when index i is pulled out of the front of mask m:
/// (-1)^(number of set bits below i).
inline int removal_sign(IndexMask m, std::size_t i) {
    IndexMask below = (IndexMask{1} << i) - 1;
    return std::popcount(m & below) % 2 ? -1 : 1;
}

enum class Variance { Contra, Co };

/// Antisymmetric grade-k tensor with Expr components; absent tuples are
/// zero. Both multivector fields (contravariant) and differential forms
/// (covariant) share this representation, distinguished by the tag.
template <Variance V>
class Tensor {
public:
    Tensor(Chart chart, std::size_t grade) : chart_(std::move(chart)), grade_(grade) {}

    static Tensor zero(const Chart& chart, std::size_t grade) { return Tensor(chart, grade); }

    /// Grade-0 tensor wrapping a scalar.
    static Tensor scalar(const Expr& value) {
        Tensor t(value.chart(), 0);
        t.set(0, value);
        return t;
    }

    /// Grade-1 basis element (coordinate vector field / coordinate form).
    static Tensor basis(const Chart& chart, std::size_t i) {
        Tensor t(chart, 1);
        if (i >= chart.dim()) throw symcore::GradeError("basis index out of range");
        t.set(IndexMask{1} << i, Expr::one(chart));
        return t;
    }

    const Chart& chart() const { return chart_; }
    std::size_t grade() const { return grade_; }
    const std::map<IndexMask, Expr>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    Expr component(IndexMask m) const {
        auto it = comps_.find(m);
        return it == comps_.end() ? Expr::zero(chart_) : it->second;
    }

    /// Component at a strictly increasing index tuple (0-based).
    Expr component_at(const std::vector<std::size_t>& idx) const {
        return component(mask_from_indices(idx, chart_.dim()));
    }

    void set(IndexMask m, const Expr& value) {
        check_mask(m);
        if (value.is_zero())
            comps_.erase(m);
        else
            comps_.insert_or_assign(m, value);
    }

    /// Set the component at a strictly increasing index tuple (0-based).
    void set_at(const std::vector<std::size_t>& idx, const Expr& value) {
        set(mask_from_indices(idx, chart_.dim()), value);
    }

    void accumulate(IndexMask m, const Expr& value) {
        check_mask(m);
        if (value.is_zero()) return;
        auto it = comps_.find(m);
        if (it == comps_.end()) {
            comps_.emplace(m, value);
        } else {
            it->second += value;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    /// Scalar value of a grade-0 tensor.
    Expr scalar_value() const {
        if (grade_ != 0) throw symcore::GradeError("scalar_value on tensor of positive grade");
        return component(IndexMask{0});
    }

    friend Tensor operator+(const Tensor& a, const Tensor& b) {
        a.require_compatible(b, "tensor add");
        Tensor out = a;
        for (const auto& [m, v] : b.comps_) out.accumulate(m, v);
        return out;
    }

    friend Tensor operator-(const Tensor& a, const Tensor& b) {
        a.require_compatible(b, "tensor sub");
        Tensor out = a;
        for (const auto& [m, v] : b.comps_) out.accumulate(m, -v);
        return out;
    }

    Tensor operator-() const {
        Tensor out(chart_, grade_);
        for (const auto& [m, v] : comps_) out.comps_.emplace(m, -v);
        return out;
    }

    friend Tensor operator*(const Expr& s, const Tensor& t) {
        symcore::require_same_chart(s.chart(), t.chart_, "tensor scale");
        Tensor out(t.chart_, t.grade_);
        if (s.is_zero()) return out;
        for (const auto& [m, v] : t.comps_) {
            Expr w = s * v;
            if (!w.is_zero()) out.comps_.emplace(m, std::move(w));
        }
        return out;
    }

    friend Tensor operator*(const Tensor& t, const Expr& s) { return s * t; }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.chart_ == b.chart_ && a.grade_ == b.grade_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    /// Tensor on a chart extending this one by trailing coordinates.
    Tensor lifted_to(const Chart& bigger) const {
        Tensor out(bigger, grade_);
        for (const auto& [m, v] : comps_) {
            symcore::Expr lifted(v.num().lifted_to(bigger), v.den().lifted_to(bigger));
            out.comps_.emplace(m, std::move(lifted));
        }
        return out;
    }

    /// Deterministic component listing like "[1,3] = -y" (1-based indices).
    std::string str() const {
        if (comps_.empty()) return "0";
        std::string out;
        for (const auto& [m, v] : comps_) {
            if (!out.empty()) out += "; ";
            out += "[";
            bool first = true;
            for (std::size_t i : indices_from_mask(m)) {
                if (!first) out += ",";
                out += std::to_string(i + 1);
                first = false;
            }
            out += "] = " + v.str();
        }
        return out;
    }

private:
    void check_mask(IndexMask m) const {
        if (static_cast<std::size_t>(std::popcount(m)) != grade_)
            throw symcore::GradeError("component index tuple size does not match grade");
        if (chart_.dim() < 64 && (m >> chart_.dim()) != 0)
            throw symcore::GradeError("component index out of range");
    }

    void require_compatible(const Tensor& o, const char* what) const {
        symcore::require_same_chart(chart_, o.chart_, what);
        if (grade_ != o.grade_)
            throw symcore::GradeError(std::string(what) + ": grade mismatch");
    }

    Chart chart_;
    std::size_t grade_;
    std::map<IndexMask, Expr> comps_;
};

using MultiVector = Tensor<Variance::Contra>;
using DiffForm = Tensor<Variance::Co>;

}  // namespace jacobi_kit::extcalc
