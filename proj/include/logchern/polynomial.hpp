#pragma once

#include "logchern/rational.hpp"
#include "logchern/ring.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace logchern {

// Sparse multivariate polynomial over Rational with a cohomological grading.
// Terms are kept in descending monomial order (leading term first); zero
// coefficients are never stored. Values are immutable in spirit: every
// operation returns a fresh polynomial.
class Polynomial {
public:
    struct Cmp {
        RingPtr ring;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return monomial_cmp(*ring, a, b) > 0; // descending
        }
    };
    using TermMap = std::map<Monomial, Rational, Cmp>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)), terms_(Cmp{ring_}) {
        if (!ring_) throw std::invalid_argument("null ring");
    }

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }

    static Polynomial constant(const RingPtr& ring, Rational c) {
        Polynomial p(ring);
        if (c != 0) p.terms_.emplace(Monomial(ring->size(), 0), std::move(c));
        return p;
    }

    static Polynomial term(const RingPtr& ring, Monomial m, Rational c) {
        Polynomial p(ring);
        if (m.size() != ring->size()) throw std::invalid_argument("bad exponent vector size");
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    static Polynomial variable(const RingPtr& ring, std::size_t index, std::uint32_t exp = 1) {
        Monomial m(ring->size(), 0);
        m.at(index) = exp;
        return term(ring, std::move(m), Rational(1));
    }

    static Polynomial variable(const RingPtr& ring, std::string_view name, std::uint32_t exp = 1) {
        auto idx = ring->index_of(name);
        if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
        return variable(ring, *idx, exp);
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && monomial_degree(*ring_, terms_.begin()->first) == 0;
    }

    Rational constant_term() const {
        Monomial one(ring_->size(), 0);
        auto it = terms_.find(one);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::logic_error("leading monomial of zero");
        return terms_.begin()->first;
    }
    const Rational& leading_coefficient() const {
        if (terms_.empty()) throw std::logic_error("leading coefficient of zero");
        return terms_.begin()->second;
    }

    // total weighted degree; -1 for the zero polynomial
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(*ring_, m));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = monomial_degree(*ring_, terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (monomial_degree(*ring_, m) != d) return false;
        return true;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_ambient(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_ambient(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_ambient(b);
        Polynomial r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }

    friend Polynomial operator*(const Rational& c, Polynomial p) {
        if (c == 0) return Polynomial(p.ring_);
        for (auto& [m, v] : p.terms_) v *= c;
        return p;
    }
    friend Polynomial operator*(Polynomial p, const Rational& c) { return c * std::move(p); }

    Polynomial pow(std::uint32_t e) const {
        Polynomial r = constant(ring_, 1);
        Polynomial base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e) base = base * base;
        }
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (!ring_->same_as(*o.ring_)) return false;
        return terms_.size() == o.terms_.size() &&
               std::equal(terms_.begin(), terms_.end(), o.terms_.begin());
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // drops monomials of weighted degree above max_degree
    Polynomial truncated(int max_degree) const {
        if (max_degree < 0) throw std::invalid_argument("negative truncation degree");
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_)
            if (monomial_degree(*ring_, m) <= max_degree) r.terms_.emplace(m, c);
        return r;
    }

    // homogeneous piece of the given weighted degree
    Polynomial graded_piece(int deg) const {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_)
            if (monomial_degree(*ring_, m) == deg) r.terms_.emplace(m, c);
        return r;
    }

    void check_ambient(const Polynomial& o) const {
        if (ring_ != o.ring_ && !ring_->same_as(*o.ring_))
            throw std::invalid_argument("ambient ring mismatch");
    }

    // Canonical text form: terms in descending order, explicit '*', 'x^k'
    // exponents, coefficients as n or n/d. Re-parses to the same polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational cc = c;
            if (first) {
                if (cc < 0) { os << "-"; cc = -cc; }
            } else {
                os << (cc < 0 ? " - " : " + ");
                if (cc < 0) cc = -cc;
            }
            first = false;
            bool has_vars = monomial_degree(*ring_, m) > 0;
            bool coeff_shown = !has_vars || cc != 1;
            if (coeff_shown) os << logchern::to_string(cc);
            bool dangling = coeff_shown;
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (!m[i]) continue;
                if (dangling) os << "*";
                os << ring_->var(i).name;
                if (m[i] > 1) os << "^" << m[i];
                dangling = true;
            }
        }
        return os.str();
    }

private:
    RingPtr ring_;
    TermMap terms_;
};

inline std::string to_string(const Polynomial& p) { return p.to_string(); }

namespace detail {

// shared evaluation core for substitute()/evaluate()
inline Polynomial eval_with_images(const Polynomial& p, const RingPtr& target,
                                   const std::vector<Polynomial>& images) {
    const Ring& src = *p.ring();
    // power cache per variable
    std::vector<std::map<std::uint32_t, Polynomial>> powers(src.size());
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto [it, inserted] = powers[i].try_emplace(e, target);
        if (inserted) it->second = images[i].pow(e);
        return it->second;
    };
    Polynomial out(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t = t * power_of(i, m[i]);
        out += t;
    }
    return out;
}

} // namespace detail

// Graded substitution: every image must be homogeneous of the source
// variable's degree, so the result of substituting into a homogeneous
// polynomial is homogeneous of the same degree.
inline Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
    const Ring& src = *p.ring();
    if (images.size() != src.size()) throw std::invalid_argument("one image per variable required");
    RingPtr target = images.empty() ? p.ring() : images.front().ring();
    for (std::size_t i = 0; i < images.size(); ++i) {
        images[i].ring()->same_as(*target);
        if (!images[i].is_zero() &&
            (!images[i].is_homogeneous() || images[i].degree() != src.var(i).degree))
            throw std::invalid_argument("image of '" + src.var(i).name +
                                        "' is not homogeneous of degree " +
                                        std::to_string(src.var(i).degree));
    }
    return detail::eval_with_images(p, target, images);
}

// Unchecked evaluation: plain ring-homomorphic image, no grading constraint.
inline Polynomial evaluate(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (images.size() != p.ring()->size())
        throw std::invalid_argument("one image per variable required");
    RingPtr target = images.empty() ? p.ring() : images.front().ring();
    return detail::eval_with_images(p, target, images);
}

// identity images helper; override selected variables by name afterwards
inline std::vector<Polynomial> identity_images(const RingPtr& ring) {
    std::vector<Polynomial> images;
    images.reserve(ring->size());
    for (std::size_t i = 0; i < ring->size(); ++i) images.push_back(Polynomial::variable(ring, i));
    return images;
}

} // namespace logchern
