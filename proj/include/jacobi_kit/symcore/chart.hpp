#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jacobi_kit/symcore/errors.hpp"

namespace jacobi_kit::symcore {

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

/// An ordered list of coordinate names. Charts are cheap to copy (shared
/// storage) and compared by content, with a pointer fast path.
class Chart {
public:
    explicit Chart(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
        if (names_->empty()) throw Error("chart needs at least one coordinate");
        for (std::size_t i = 0; i < names_->size(); ++i) {
            const std::string& n = (*names_)[i];
            if (!is_identifier(n))
                throw Error("invalid coordinate name '" + n + "'");
            for (std::size_t j = i + 1; j < names_->size(); ++j)
                if (n == (*names_)[j])
                    throw Error("duplicate coordinate name '" + n + "'");
        }
    }

    std::size_t dim() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return names_->at(i); }
    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == name) return i;
        return std::nullopt;
    }

    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    /// New chart with one coordinate appended at the end.
    Chart extended(const std::string& new_name) const {
        if (contains(new_name))
            throw Error("coordinate '" + new_name + "' already present in chart");
        std::vector<std::string> n = *names_;
        n.push_back(new_name);
        return Chart(std::move(n));
    }

    /// True when `bigger` starts with exactly this chart's coordinates.
    bool is_prefix_of(const Chart& bigger) const {
        if (bigger.dim() < dim()) return false;
        for (std::size_t i = 0; i < dim(); ++i)
            if (bigger.name(i) != name(i)) return false;
        return true;
    }

    friend bool operator==(const Chart& a, const Chart& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

inline void require_same_chart(const Chart& a, const Chart& b, const char* what) {
    if (a != b) throw ChartMismatch(std::string(what) + ": operands live on different charts");
}

}  // namespace jacobi_kit::symcore
