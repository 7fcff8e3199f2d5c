#pragma once

#include "logchern/polynomial.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

namespace logchern {

// Completed ideal basis: the generators together with a reduced Groebner
// basis (monic, inter-reduced, every S-polynomial reducing to zero).
class IdealBasis {
public:
    IdealBasis(RingPtr ring, std::vector<Polynomial> generators)
        : ring_(std::move(ring)), generators_(std::move(generators)) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    const std::vector<Polynomial>& basis() const { return basis_; }
    bool completed() const { return completed_; }

    void set_basis(std::vector<Polynomial> basis) {
        basis_ = std::move(basis);
        completed_ = true;
    }

private:
    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::vector<Polynomial> basis_;
    bool completed_ = false;
};

namespace detail {

// remainder of full division of p by the (lead-reduced) list fs
inline Polynomial divide_remainder(Polynomial p, const std::vector<Polynomial>& fs) {
    Polynomial rem(p.ring());
    while (!p.is_zero()) {
        const Monomial& lm = p.leading_monomial();
        bool reduced = false;
        for (const auto& f : fs) {
            if (!monomial_divides(f.leading_monomial(), lm)) continue;
            Rational factor = p.leading_coefficient() / f.leading_coefficient();
            Monomial q = monomial_quot(lm, f.leading_monomial());
            p -= Polynomial::term(p.ring(), q, factor) * f;
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, p.leading_coefficient());
            p.add_term(lm, -p.leading_coefficient());
        }
    }
    return rem;
}

} // namespace detail

// Buchberger's algorithm with the normal (lowest lcm degree first) pair
// strategy and the product criterion, followed by inter-reduction to the
// reduced monic basis. Termination is classical. When max_degree >= 0 the
// completion is truncated: pairs whose lcm exceeds that degree are skipped,
// which is sound for normal forms of elements within the bound when the
// ideal is homogeneous.
inline IdealBasis buchberger(std::vector<Polynomial> gens, int max_degree = -1) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    RingPtr ring = gens.front().ring();
    for (const auto& g : gens) {
        gens.front().check_ambient(g);
        if (g.is_zero()) throw std::invalid_argument("zero generator");
    }
    IdealBasis result(ring, gens);

    std::vector<Polynomial> basis;
    for (auto& g : gens) basis.push_back(Rational(1) / g.leading_coefficient() * g);

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        int deg;
    };
    std::vector<Pair> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = monomial_lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
            queue.push_back({i, j, l, monomial_degree(*ring, l)});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        auto best = std::min_element(queue.begin(), queue.end(),
                                     [](const Pair& a, const Pair& b) { return a.deg < b.deg; });
        Pair pr = *best;
        queue.erase(best);
        if (max_degree >= 0 && pr.deg > max_degree) continue;
        const Polynomial& f = basis[pr.i];
        const Polynomial& g = basis[pr.j];
        if (monomial_coprime(f.leading_monomial(), g.leading_monomial())) continue;
        Polynomial s = Polynomial::term(ring, monomial_quot(pr.lcm, f.leading_monomial()),
                                        Rational(1) / f.leading_coefficient()) * f -
                       Polynomial::term(ring, monomial_quot(pr.lcm, g.leading_monomial()),
                                        Rational(1) / g.leading_coefficient()) * g;
        Polynomial rem = detail::divide_remainder(std::move(s), basis);
        if (!rem.is_zero()) {
            basis.push_back(Rational(1) / rem.leading_coefficient() * rem);
            push_pairs(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose lead is divisible by another kept lead;
    // among equal leads keep the first
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!monomial_divides(basis[j].leading_monomial(), basis[i].leading_monomial()))
                continue;
            if (basis[j].leading_monomial() != basis[i].leading_monomial() || j < i)
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = others.empty() ? minimal[i] : detail::divide_remainder(minimal[i], others);
        if (!r.is_zero()) reduced.push_back(Rational(1) / r.leading_coefficient() * r);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_cmp(*ring, a.leading_monomial(), b.leading_monomial()) < 0;
    });
    result.set_basis(std::move(reduced));
    return result;
}

// Reduced normal form: no monomial of the result is divisible by any leading
// monomial of the completed basis; p - NF(p) lies in the ideal; idempotent.
inline Polynomial normal_form(const Polynomial& p, const IdealBasis& basis) {
    if (!basis.completed()) throw std::logic_error("basis not completed");
    return detail::divide_remainder(p, basis.basis());
}

inline bool is_member(const Polynomial& p, const IdealBasis& basis) {
    return normal_form(p, basis).is_zero();
}

} // namespace logchern
