#pragma once

#include "logchern/bundled.hpp"
#include "logchern/presentation.hpp"

#include <utility>

namespace logchern {

// A class on the second blow-up in the pair representation: a pullback part p
// (polynomial in xi, alpha, beta) plus the divisor pushforward of q
// (polynomial in eta, u, v, alpha, beta). The divisor class eta itself is
// (p, q) = (0, 1). The represented class is p + push(q); the representation
// is not canonical, only the operations on it are.
struct S2Class {
    Polynomial p;
    Polynomial q;

    bool is_zero() const { return p.is_zero() && q.is_zero(); }
    bool operator==(const S2Class& o) const { return p == o.p && q == o.q; }
    bool operator!=(const S2Class& o) const { return !(*this == o); }

    std::string to_string() const { return "p: " + p.to_string() + " ; q: " + q.to_string(); }
};

// The geometric setup of the two blow-ups: the three cohomology rings with
// completed bases, a working truncation degree, and the pair-model calculus.
class BlowupModel {
public:
    explicit BlowupModel(int truncation = 16)
        : BlowupModel(parse_presentation(bundled::b_presentation),
                      parse_presentation(bundled::btilde_presentation),
                      parse_presentation(bundled::s1_presentation), truncation) {}

    BlowupModel(RingPresentation b, RingPresentation btilde, RingPresentation s1, int truncation)
        : b_(std::move(b)), btilde_(std::move(btilde)), s1_(std::move(s1)), trunc_(truncation) {
        if (trunc_ < 2 || trunc_ % 2 != 0)
            throw std::invalid_argument("truncation degree must be even and >= 2");
        for (const char* name : {"u", "v", "alpha", "beta"})
            if (!btilde_.ring()->index_of(name))
                throw std::invalid_argument(std::string("divisor ring lacks variable ") + name);
        if (!btilde_.ring()->index_of("eta"))
            throw std::invalid_argument("divisor ring lacks variable eta");
        if (!s1_.ring()->index_of("xi"))
            throw std::invalid_argument("base ring lacks variable xi");
        bracket_ = btilde_.nf(parse(bundled::rehouse_bracket, btilde_.ring()));
    }

    const QuotientRing& b() const { return b_; }
    const QuotientRing& btilde() const { return btilde_; }
    const QuotientRing& s1() const { return s1_; }
    int truncation() const { return trunc_; }

    // alpha = beta = 0 specialization: the fiber of the composed projection;
    // the parameters are adjoined to each relation ideal so normal forms kill
    // them
    BlowupModel fiber() const {
        auto specialize = [](const RingPresentation& pres) {
            RingPresentation out = pres;
            out.relations.push_back(Polynomial::variable(pres.ring, "alpha"));
            out.relations.push_back(Polynomial::variable(pres.ring, "beta"));
            return out;
        };
        return BlowupModel(specialize(b_.presentation()), specialize(btilde_.presentation()),
                           specialize(s1_.presentation()), trunc_);
    }

    // ring of pullback-free mixed polynomials in xi, eta, alpha, beta
    RingPtr pullback_eta_ring() const {
        return make_ring({{"xi", 2}, {"eta", 2}, {"alpha", 4}, {"beta", 6}});
    }

    // restriction to the exceptional divisor: xi -> u+v, eta -> eta, reduced
    Polynomial restrict_to_divisor(const Polynomial& s2poly) const {
        const RingPtr& src = s2poly.ring();
        const RingPtr& bt = btilde_.ring();
        std::vector<Polynomial> images;
        images.reserve(src->size());
        for (const auto& var : src->vars()) {
            if (var.name == "xi")
                images.push_back(Polynomial::variable(bt, "u") + Polynomial::variable(bt, "v"));
            else if (bt->index_of(var.name))
                images.push_back(Polynomial::variable(bt, var.name));
            else
                throw std::invalid_argument("cannot restrict variable '" + var.name + "'");
        }
        return btilde_.nf(substitute(s2poly, images));
    }

    S2Class zero() const {
        return {Polynomial::zero(s1_.ring()), Polynomial::zero(btilde_.ring())};
    }
    S2Class constant(const Rational& c) const {
        return {Polynomial::constant(s1_.ring(), c), Polynomial::zero(btilde_.ring())};
    }
    S2Class from_pullback(Polynomial p) const { return normalize({std::move(p), Polynomial::zero(btilde_.ring())}); }
    S2Class from_pushforward(Polynomial q) const { return normalize({Polynomial::zero(s1_.ring()), std::move(q)}); }

    S2Class parse_class(const std::string& p_text, const std::string& q_text) const {
        return normalize({parse(p_text, s1_.ring()), parse(q_text, btilde_.ring())});
    }

    // reads the serialized form "p: <poly> ; q: <poly>"
    S2Class parse_class(const std::string& text) const {
        auto p_pos = text.find("p:");
        auto sep = text.find(';');
        auto q_pos = text.find("q:", sep == std::string::npos ? 0 : sep);
        if (p_pos == std::string::npos || sep == std::string::npos || q_pos == std::string::npos)
            throw std::invalid_argument("expected 'p: <poly> ; q: <poly>'");
        return parse_class(text.substr(p_pos + 2, sep - p_pos - 2), text.substr(q_pos + 2));
    }

    // q contributes its own degree plus 2 (the pushforward shift)
    S2Class normalize(S2Class x) const {
        x.p = s1_.nf(x.p).truncated(trunc_);
        x.q = btilde_.nf(x.q).truncated(trunc_ - 2);
        return x;
    }

    S2Class truncate(S2Class x, int degree) const {
        x.p = x.p.truncated(degree);
        x.q = x.q.truncated(degree - 2);
        return x;
    }

    S2Class add(const S2Class& x, const S2Class& y) const { return {x.p + y.p, x.q + y.q}; }
    S2Class sub(const S2Class& x, const S2Class& y) const { return {x.p - y.p, x.q - y.q}; }
    S2Class negate(const S2Class& x) const { return {-x.p, -x.q}; }
    S2Class scale(const Rational& c, const S2Class& x) const { return {c * x.p, c * x.q}; }

    // projection formula: (p1 + push q1)(p2 + push q2)
    //   = p1 p2 + push(p1|q2 + p2|q1 + eta q1 q2)
    // using that the self-intersection pulls push(q) back to eta*q
    S2Class mul(const S2Class& x, const S2Class& y) const {
        Polynomial p = x.p * y.p;
        Polynomial eta = Polynomial::variable(btilde_.ring(), "eta");
        Polynomial q = restrict_pullback(x.p) * y.q + restrict_pullback(y.p) * x.q + eta * x.q * y.q;
        return normalize({std::move(p), std::move(q)});
    }

    S2Class pow(const S2Class& x, std::uint32_t e) const {
        S2Class r = constant(1);
        S2Class base = x;
        while (e) {
            if (e & 1u) r = mul(r, base);
            e >>= 1u;
            if (e) base = mul(base, base);
        }
        return r;
    }

    // homogeneous piece in total cohomological degree
    S2Class graded_piece(const S2Class& x, int degree) const {
        return {x.p.graded_piece(degree), degree >= 2 ? x.q.graded_piece(degree - 2)
                                                      : Polynomial::zero(btilde_.ring())};
    }

    bool is_unit(const S2Class& x) const { return x.p.constant_term() == 1; }

    // inverse of a unit (constant term 1) by the geometric series, truncated
    S2Class inverse_unit(const S2Class& x) const {
        if (!is_unit(x)) throw std::invalid_argument("inverse of a non-unit class");
        S2Class z = sub(x, constant(1));
        S2Class acc = constant(1);
        S2Class pw = constant(1);
        S2Class mz = negate(z);
        for (int k = 1; 2 * k <= trunc_; ++k) {
            pw = mul(pw, mz);
            if (pw.is_zero()) break;
            acc = add(acc, pw);
        }
        return normalize(acc);
    }

    // inverse of (1, q): the geometric series in the pushforward part alone
    S2Class pair_inverse_unit(const S2Class& x) const {
        if (!x.p.is_constant() || x.p.constant_term() != 1)
            throw std::invalid_argument("pair_inverse_unit requires pullback part exactly 1");
        return inverse_unit(x);
    }

    // sign flip of every homogeneous piece of degree 2 mod 4 (dualization)
    S2Class dual_flip(const S2Class& x) const {
        S2Class r = zero();
        for (int d = 0; d <= trunc_; d += 2) {
            S2Class piece = graded_piece(x, d);
            if (d % 4 == 2) piece = negate(piece);
            r = add(r, piece);
        }
        return r;
    }

    // Directed rewrite of the pullback part: replaces xi^4 by
    // -alpha*xi^2 + push(-bracket/6) until every pullback monomial has
    // xi-exponent at most 3. Terminates since the xi-exponent drops by two
    // each pass; the represented class is unchanged.
    S2Class rehouse(const S2Class& x) const {
        const RingPtr& s1r = s1_.ring();
        std::size_t xi = *s1r->index_of("xi");
        std::size_t al = *s1r->index_of("alpha");
        Polynomial p = x.p;
        Polynomial qadd = Polynomial::zero(btilde_.ring());
        for (;;) {
            Polynomial keep(s1r), rewritten(s1r);
            for (const auto& [m, c] : p.terms()) {
                if (m[xi] < 4) {
                    keep.add_term(m, c);
                    continue;
                }
                Monomial rest = m;
                rest[xi] -= 4;
                Monomial shifted = rest;
                shifted[xi] += 2;
                shifted[al] += 1;
                rewritten.add_term(shifted, -c);
                Polynomial lifted = restrict_pullback(Polynomial::term(s1r, rest, c));
                qadd += lifted * (Rational(-1, 6) * bracket_);
            }
            if (rewritten.is_zero()) {
                p = std::move(keep);
                break;
            }
            p = keep + rewritten;
        }
        return normalize({std::move(p), x.q + qadd});
    }

    // substitutes alpha = beta = 0 and renormalizes in the fiber model;
    // the returned class lives in fiber()
    S2Class fiber_restrict(const S2Class& x) const {
        BlowupModel f = fiber();
        return f.normalize({rebase(x.p, f.s1().ring()), rebase(x.q, f.btilde().ring())});
    }

    // restriction of a pullback-part polynomial to the divisor (xi -> u+v)
    Polynomial restrict_pullback(const Polynomial& p) const {
        const RingPtr& bt = btilde_.ring();
        std::vector<Polynomial> images;
        for (const auto& var : p.ring()->vars()) {
            if (var.name == "xi")
                images.push_back(Polynomial::variable(bt, "u") + Polynomial::variable(bt, "v"));
            else
                images.push_back(Polynomial::variable(bt, var.name));
        }
        return btilde_.nf(substitute(p, images));
    }

private:
    static Polynomial rebase(const Polynomial& p, const RingPtr& target) {
        std::vector<Polynomial> images;
        for (const auto& var : p.ring()->vars()) images.push_back(Polynomial::variable(target, var.name));
        return substitute(p, images);
    }

    QuotientRing b_, btilde_, s1_;
    int trunc_;
    Polynomial bracket_{btilde_.ring()};
};

// Classes on the second blow-up with the divisor class eta kept formal and
// the pushforwards J1, J2, J3 of uv, (uv)^2, (uv)^3 as generators. Normalized
// by the lifted quartic relation (eta-exponent below 4) and the projection
// formula on J-products. This is the representation in which the displayed
// 7th and 8th Chern classes are stated.
class MixedModel {
public:
    // eta^4 = -(6 xi eta^3 + (15 xi^2 + 4 alpha) eta^2 - 3 J1 eta
    //          + (15 xi^3 + 9 alpha xi) eta + 6 xi^4 + 6 alpha xi^2)
    explicit MixedModel(int truncation = 16)
        : ring_(make_ring({{"xi", 2},
                           {"eta", 2},
                           {"alpha", 4},
                           {"beta", 6},
                           {"J1", 6},
                           {"J2", 10},
                           {"J3", 14}})),
          sym_ring_(make_ring({{"xi", 2}, {"eta", 2}, {"w", 4}, {"alpha", 4}, {"beta", 6}})),
          trunc_(truncation),
          r2_rhs_(parse("-(6*xi*eta^3 + (15*xi^2 + 4*alpha)*eta^2 - 3*J1*eta"
                        " + (15*xi^3 + 9*alpha*xi)*eta + 6*xi^4 + 6*alpha*xi^2)",
                        ring_)) {
        // beyond degree 18 the products J2*J2, J1*J3, ... would need further
        // pushforward generators; refuse rather than drop them
        if (trunc_ > 18) throw std::invalid_argument("mixed representation supports degrees up to 18");
    }

    const RingPtr& ring() const { return ring_; }
    const RingPtr& sym_ring() const { return sym_ring_; }
    int truncation() const { return trunc_; }

    Polynomial reduce(Polynomial f) const {
        std::size_t eta = *ring_->index_of("eta");
        std::size_t j1 = *ring_->index_of("J1");
        std::size_t j2 = *ring_->index_of("J2");
        std::size_t j3 = *ring_->index_of("J3");
        for (;;) {
            Polynomial out(ring_);
            bool changed = false;
            for (const auto& [m, c] : f.terms()) {
                if (monomial_degree(*ring_, m) > trunc_) {
                    changed = true;
                    continue;
                }
                if (m[eta] >= 4) {
                    Monomial rest = m;
                    rest[eta] -= 4;
                    out += Polynomial::term(ring_, rest, c) * r2_rhs_;
                    changed = true;
                } else if (m[j1] >= 2) {
                    Monomial rw = m;
                    rw[j1] -= 2;
                    rw[j2] += 1;
                    rw[eta] += 1;
                    out.add_term(rw, c);
                    changed = true;
                } else if (m[j1] >= 1 && m[j2] >= 1) {
                    Monomial rw = m;
                    rw[j1] -= 1;
                    rw[j2] -= 1;
                    rw[j3] += 1;
                    rw[eta] += 1;
                    out.add_term(rw, c);
                    changed = true;
                } else {
                    out.add_term(m, c);
                }
            }
            f = std::move(out);
            if (!changed) return f;
        }
    }

    Polynomial mul(const Polynomial& a, const Polynomial& b) const { return reduce(a * b); }

    Polynomial inverse_unit(const Polynomial& f) const {
        if (f.constant_term() != 1) throw std::invalid_argument("inverse of a non-unit");
        Polynomial z = reduce(f - Polynomial::constant(ring_, 1));
        Polynomial acc = Polynomial::constant(ring_, 1);
        Polynomial pw = Polynomial::constant(ring_, 1);
        Polynomial mz = -z;
        for (int k = 1; 2 * k <= trunc_; ++k) {
            pw = mul(pw, mz);
            if (pw.is_zero()) break;
            acc += pw;
        }
        return reduce(acc);
    }

    Polynomial dual_flip(const Polynomial& f) const {
        Polynomial r(ring_);
        for (const auto& [m, c] : f.terms()) {
            int d = monomial_degree(*ring_, m);
            r.add_term(m, d % 4 == 2 ? -c : c);
        }
        return r;
    }

    // pushforward of a divisor class written in the symmetric variables
    // xi(=u+v), eta, w(=uv): monomials with w^m map to eta^k * Jm, w-free
    // monomials pick up one extra eta
    Polynomial push_symmetric(const Polynomial& sym) const {
        std::size_t xi_s = *sym_ring_->index_of("xi");
        std::size_t eta_s = *sym_ring_->index_of("eta");
        std::size_t w_s = *sym_ring_->index_of("w");
        std::size_t al_s = *sym_ring_->index_of("alpha");
        std::size_t be_s = *sym_ring_->index_of("beta");
        std::size_t xi_m = *ring_->index_of("xi");
        std::size_t eta_m = *ring_->index_of("eta");
        std::size_t al_m = *ring_->index_of("alpha");
        std::size_t be_m = *ring_->index_of("beta");
        std::size_t j[4] = {0, *ring_->index_of("J1"), *ring_->index_of("J2"),
                            *ring_->index_of("J3")};
        Polynomial out(ring_);
        for (const auto& [m, c] : sym.terms()) {
            Monomial t(ring_->size(), 0);
            t[xi_m] = m[xi_s];
            t[al_m] = m[al_s];
            t[be_m] = m[be_s];
            if (m[w_s] > 0) {
                if (m[w_s] > 3) continue; // beyond the working degree
                t[j[m[w_s]]] = 1;
                t[eta_m] = m[eta_s];
            } else {
                t[eta_m] = m[eta_s] + 1;
            }
            out.add_term(t, c);
        }
        return reduce(out);
    }

    // forgetful map to the pair representation: eta-powers and J-factors move
    // into the pushforward part via the projection formula
    S2Class to_pair(const Polynomial& f, const BlowupModel& model) const {
        const RingPtr& s1r = model.s1().ring();
        const RingPtr& btr = model.btilde().ring();
        std::size_t xi = *ring_->index_of("xi");
        std::size_t eta = *ring_->index_of("eta");
        std::size_t al = *ring_->index_of("alpha");
        std::size_t be = *ring_->index_of("beta");
        std::size_t j1 = *ring_->index_of("J1");
        std::size_t j2 = *ring_->index_of("J2");
        std::size_t j3 = *ring_->index_of("J3");
        Polynomial p(s1r), q(btr);
        Polynomial uv = Polynomial::variable(btr, "u") * Polynomial::variable(btr, "v");
        Polynomial upv = Polynomial::variable(btr, "u") + Polynomial::variable(btr, "v");
        for (const auto& [m, c] : f.terms()) {
            std::uint32_t s = m[j1] + m[j2] + m[j3];
            std::uint32_t uv_pow = m[j1] + 2 * m[j2] + 3 * m[j3];
            if (m[eta] == 0 && s == 0) {
                Monomial pm(s1r->size(), 0);
                pm[*s1r->index_of("xi")] = m[xi];
                pm[*s1r->index_of("alpha")] = m[al];
                pm[*s1r->index_of("beta")] = m[be];
                p.add_term(pm, c);
            } else {
                std::uint32_t eta_pow = m[eta] + (s >= 1 ? s - 1 : 0) - (s == 0 ? 1 : 0);
                Polynomial t = Polynomial::constant(btr, c) * upv.pow(m[xi]) * uv.pow(uv_pow) *
                               Polynomial::variable(btr, "eta", 1).pow(eta_pow) *
                               Polynomial::variable(btr, "alpha", 1).pow(m[al]) *
                               Polynomial::variable(btr, "beta", 1).pow(m[be]);
                q += t;
            }
        }
        return model.normalize({std::move(p), std::move(q)});
    }

private:
    RingPtr ring_;
    RingPtr sym_ring_;
    int trunc_;
    Polynomial r2_rhs_;
};

} // namespace logchern
