#pragma once

#include "logchern/cohomology.hpp"

namespace logchern {

// inverse of a unit power series in a free polynomial ring, truncated
inline Polynomial unit_inverse(const Polynomial& f, int truncation) {
    if (f.constant_term() != 1) throw std::invalid_argument("inverse of a non-unit");
    Polynomial z = (f - Polynomial::constant(f.ring(), 1)).truncated(truncation);
    Polynomial acc = Polynomial::constant(f.ring(), 1);
    Polynomial pw = acc;
    Polynomial mz = -z;
    for (int k = 1; 2 * k <= truncation; ++k) {
        pw = (pw * mz).truncated(truncation);
        if (pw.is_zero()) break;
        acc += pw;
    }
    return acc.truncated(truncation);
}

// inverse of a unit inside a quotient ring, truncated and reduced
inline Polynomial unit_inverse(const QuotientRing& ring, const Polynomial& f, int truncation) {
    if (f.constant_term() != 1) throw std::invalid_argument("inverse of a non-unit");
    Polynomial z = ring.nf(f - Polynomial::constant(f.ring(), 1)).truncated(truncation);
    Polynomial acc = Polynomial::constant(f.ring(), 1);
    Polynomial pw = acc;
    Polynomial mz = -z;
    for (int k = 1; 2 * k <= truncation; ++k) {
        pw = ring.nf(pw * mz).truncated(truncation);
        if (pw.is_zero()) break;
        acc += pw;
    }
    return ring.nf(acc).truncated(truncation);
}

// A degree-truncated total Chern class in the pair model: constant term 1,
// homogeneous pieces c_i in cohomological degree 2i.
struct TotalChernClass {
    S2Class value;

    static TotalChernClass wrap(const BlowupModel& model, S2Class v) {
        if (v.p.constant_term() != 1)
            throw std::invalid_argument("total class must have constant term 1");
        (void)model;
        return {std::move(v)};
    }
    S2Class c(const BlowupModel& model, int i) const { return model.graded_piece(value, 2 * i); }
};

inline TotalChernClass total_mul(const BlowupModel& m, const TotalChernClass& x,
                                 const TotalChernClass& y) {
    return {m.mul(x.value, y.value)};
}

// x * y^{-1}; with total_mul this satisfies total_div(total_mul(a,b), b) = a
// up to truncation
inline TotalChernClass total_div(const BlowupModel& m, const TotalChernClass& x,
                                 const TotalChernClass& y) {
    return {m.mul(x.value, m.inverse_unit(y.value))};
}

// negates the pieces of degree 2 mod 4 (passing between a bundle and its
// dual); an involution
inline TotalChernClass dual_flip(const BlowupModel& m, const TotalChernClass& x) {
    return {m.dual_flip(x.value)};
}

// ---- the concrete pipeline stages, pair route ------------------------------

// total Chern class of the normal bundle of the center inside the first
// projectivization, reduced in the b ring
inline Polynomial normal_bundle_total(const BlowupModel& model) {
    const QuotientRing& b = model.b();
    Polynomial num = parse(bundled::normal_bundle_numerator, b.ring());
    Polynomial den = parse(bundled::normal_bundle_denominator, b.ring());
    int d = model.truncation();
    return b.nf(num * unit_inverse(b, den, d)).truncated(d);
}

// total Chern class of the excess bundle on the exceptional divisor:
// c(N)/(1 + eta), reduced in the btilde ring; rank 3, so degrees <= 6
inline Polynomial excess_bundle_total(const BlowupModel& model) {
    const QuotientRing& bt = model.btilde();
    std::vector<Polynomial> images;
    for (const auto& var : model.b().ring()->vars())
        images.push_back(Polynomial::variable(bt.ring(), var.name));
    Polynomial cn = substitute(normal_bundle_total(model), images);
    Polynomial one_plus_eta =
        Polynomial::constant(bt.ring(), 1) + Polynomial::variable(bt.ring(), "eta");
    int d = model.truncation();
    return bt.nf(cn * unit_inverse(bt, one_plus_eta, d)).truncated(d);
}

// the roots of cF shifted by -eta: sum_k c_k(F) (1-eta)^(3-k)
inline Polynomial shifted_roots_product(const BlowupModel& model, const Polynomial& cF) {
    const RingPtr& r = cF.ring();
    Polynomial shift = Polynomial::constant(r, 1) - Polynomial::variable(r, "eta");
    Polynomial out(r);
    for (int k = 0; k <= 3; ++k) out += cF.graded_piece(2 * k) * shift.pow(3 - k);
    return model.btilde().nf(out);
}

// The pushforward excess term of the Grothendieck-Riemann-Roch expression:
// (1/eta)(1 - prod (1+b_i)/(1+b_i-eta)) for the rank-3 class cF, computed as
// the closed quotient F/(1-D) and reduced in the btilde ring through
// out_trunc. The exact division by eta happens before any reduction:
// ((1-eta)^m - 1)/eta has integer coefficients.
inline Polynomial grr_excess(const BlowupModel& model, const Polynomial& cF, int out_trunc = 14) {
    const RingPtr& r = cF.ring();
    if (cF.constant_term() != 1) throw std::invalid_argument("total class must start at 1");
    for (int d = 8; d <= cF.degree(); d += 2)
        if (!cF.graded_piece(d).is_zero())
            throw std::invalid_argument("excess formula requires the fixed rank-3 shape");
    Polynomial eta = Polynomial::variable(r, "eta");
    auto shift_quot = [&](int m) { // ((1-eta)^m - 1)/eta
        Polynomial acc(r);
        Rational binom = 1;
        for (int j = 1; j <= m; ++j) {
            binom = binom * (m - j + 1) / j;
            acc += Polynomial::constant(r, (j % 2 ? -binom : binom)) * eta.pow(j - 1);
        }
        return acc;
    };
    Polynomial f_num(r);
    for (int k = 0; k <= 2; ++k) f_num += cF.graded_piece(2 * k) * shift_quot(3 - k);
    Polynomial shifted = shifted_roots_product(model, cF);
    return model.btilde().nf(f_num * unit_inverse(model.btilde(), shifted, out_trunc))
        .truncated(out_trunc);
}

// full assembly of the log cotangent total class in the pair model, from
// first principles
inline S2Class log_cotangent_total(const BlowupModel& model) {
    int d = model.truncation();
    if (d < 4) throw std::invalid_argument("working degree too small");
    Polynomial excess = grr_excess(model, excess_bundle_total(model), d - 2);
    S2Class c_jF = model.normalize({Polynomial::constant(model.s1().ring(), 1), -excess});
    S2Class c_omega21 = model.dual_flip(model.inverse_unit(c_jF));
    S2Class numer = model.from_pullback(parse(bundled::log_numerator, model.s1().ring()));
    S2Class one_minus_d1 = model.parse_class("1", "-1");
    S2Class d2 = model.parse_class("1 + 3*xi", "2");
    S2Class denom = model.mul(one_minus_d1, d2);
    return model.mul(model.mul(numer, model.inverse_unit(denom)), c_omega21);
}

// ---- the display-faithful mixed route --------------------------------------

// same assembly carried out in the mixed representation, seeded by the
// (separately certified) symmetric form of cF; this reproduces the displayed
// class representatives term for term
inline Polynomial mixed_log_cotangent_total(const MixedModel& mixed, const Polynomial& cF_sym) {
    const RingPtr& sr = mixed.sym_ring();
    cF_sym.check_ambient(Polynomial::zero(sr));
    int d = mixed.truncation();
    // shifted product and the eta-quotient numerator, free in the symmetric ring
    Polynomial shift = Polynomial::constant(sr, 1) - Polynomial::variable(sr, "eta");
    Polynomial eta = Polynomial::variable(sr, "eta");
    Polynomial shifted(sr), f_num(sr);
    for (int k = 0; k <= 3; ++k) shifted += cF_sym.graded_piece(2 * k) * shift.pow(3 - k);
    auto shift_quot = [&](int m) {
        Polynomial acc(sr);
        Rational binom = 1;
        for (int j = 1; j <= m; ++j) {
            binom = binom * (m - j + 1) / j;
            acc += Polynomial::constant(sr, (j % 2 ? -binom : binom)) * eta.pow(j - 1);
        }
        return acc;
    };
    for (int k = 0; k <= 2; ++k) f_num += cF_sym.graded_piece(2 * k) * shift_quot(3 - k);
    Polynomial excess_sym = (f_num * unit_inverse(shifted, d - 2)).truncated(d - 2);

    const RingPtr& mr = mixed.ring();
    Polynomial c_jF = mixed.reduce(Polynomial::constant(mr, 1) - mixed.push_symmetric(excess_sym));
    Polynomial c_omega21 = mixed.dual_flip(mixed.inverse_unit(c_jF));
    Polynomial numer = parse(bundled::log_numerator, mr).truncated(d);
    Polynomial denom = mixed.mul(parse("1 - eta", mr), parse("1 + 3*xi + 2*eta", mr));
    return mixed.mul(mixed.mul(numer, mixed.inverse_unit(denom)), c_omega21);
}

// symmetric-ring expansion of the quotient F/(1-D) alone (for the display
// comparison of the collected expansion)
inline Polynomial mixed_grr_expansion(const MixedModel& mixed, const Polynomial& cF_sym,
                                      int out_trunc = 14) {
    const RingPtr& sr = mixed.sym_ring();
    Polynomial shift = Polynomial::constant(sr, 1) - Polynomial::variable(sr, "eta");
    Polynomial eta = Polynomial::variable(sr, "eta");
    Polynomial shifted(sr), f_num(sr);
    for (int k = 0; k <= 3; ++k) shifted += cF_sym.graded_piece(2 * k) * shift.pow(3 - k);
    auto shift_quot = [&](int m) {
        Polynomial acc(sr);
        Rational binom = 1;
        for (int j = 1; j <= m; ++j) {
            binom = binom * (m - j + 1) / j;
            acc += Polynomial::constant(sr, (j % 2 ? -binom : binom)) * eta.pow(j - 1);
        }
        return acc;
    };
    for (int k = 0; k <= 2; ++k) f_num += cF_sym.graded_piece(2 * k) * shift_quot(3 - k);
    return (f_num * unit_inverse(shifted, out_trunc)).truncated(out_trunc);
}

} // namespace logchern
