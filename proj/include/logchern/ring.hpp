#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace logchern {

// A graded variable. Degrees are cohomological, hence even and positive.
struct Variable {
    std::string name;
    int degree = 2;
};

enum class OrderKind { GrevLex, GrLex };

inline std::string to_string(OrderKind k) {
    return k == OrderKind::GrevLex ? "grevlex" : "grlex";
}

// Ambient graded polynomial ring: an ordered variable list (the order of the
// list is the precedence, highest first) and a monomial order kind.
class Ring {
public:
    Ring(std::vector<Variable> vars, OrderKind kind = OrderKind::GrevLex)
        : vars_(std::move(vars)), kind_(kind) {
        for (const auto& v : vars_) {
            if (v.name.empty()) throw std::invalid_argument("unnamed variable");
            if (v.degree <= 0 || v.degree % 2 != 0)
                throw std::invalid_argument("variable '" + v.name + "' must have even positive degree");
        }
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i].name == vars_[j].name)
                    throw std::invalid_argument("duplicate variable '" + vars_[i].name + "'");
    }

    std::size_t size() const { return vars_.size(); }
    const Variable& var(std::size_t i) const { return vars_.at(i); }
    const std::vector<Variable>& vars() const { return vars_; }
    OrderKind order_kind() const { return kind_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return i;
        return std::nullopt;
    }

    bool same_as(const Ring& o) const {
        if (kind_ != o.kind_ || vars_.size() != o.vars_.size()) return false;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name != o.vars_[i].name || vars_[i].degree != o.vars_[i].degree) return false;
        return true;
    }

private:
    std::vector<Variable> vars_;
    OrderKind kind_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<Variable> vars, OrderKind kind = OrderKind::GrevLex) {
    return std::make_shared<const Ring>(std::move(vars), kind);
}

// Exponent vector, indexed by ring variable position.
using Monomial = std::vector<std::uint32_t>;

inline int monomial_degree(const Ring& ring, const Monomial& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * ring.var(i).degree;
    return d;
}

// Three-way comparison in the ring's graded order: negative if a < b, zero if
// equal, positive if a > b. Grading is by weighted (cohomological) degree.
inline int monomial_cmp(const Ring& ring, const Monomial& a, const Monomial& b) {
    int da = monomial_degree(ring, a), db = monomial_degree(ring, b);
    if (da != db) return da < db ? -1 : 1;
    if (ring.order_kind() == OrderKind::GrevLex) {
        // ties broken reverse-lexicographically: the last differing exponent
        // decides, smaller exponent wins
        for (std::size_t i = ring.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }
    for (std::size_t i = 0; i < ring.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

inline bool monomial_divides(const Monomial& div, const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (div[i] > m[i]) return false;
    return true;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Monomial monomial_quot(const Monomial& m, const Monomial& div) {
    Monomial r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - div[i];
    return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

} // namespace logchern
