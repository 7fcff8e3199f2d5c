#pragma once

// Bundled data: the three cohomology-ring presentations and the claimed
// intermediate classes that the verification pipeline reproduces. Everything
// is plain polynomial text in the formats of presentation.hpp / parser.hpp.
//
// Variable conventions:
//   b / btilde rings:  u, v (degree 2), eta (degree 2), alpha (4), beta (6)
//   s1 ring:           xi (degree 2), alpha (4), beta (6)
//   sym ring:          xi, eta (degree 2), w = uv (degree 4), alpha, beta
//   mixed ring:        xi, eta, alpha, beta and J1, J2, J3 (degrees 6, 10, 14),
//                      where Jm denotes the divisor pushforward of (uv)^m

namespace logchern::bundled {

inline constexpr const char* b_presentation =
    "# intersection of the two rank-one loci: a product of projectivized rank-3 bundles\n"
    "var u deg 2\n"
    "var v deg 2\n"
    "var alpha deg 4\n"
    "var beta deg 6\n"
    "order grevlex u > v > alpha > beta\n"
    "rel u^3 + alpha*u + beta\n"
    "rel v^3 + alpha*v - beta\n";

inline constexpr const char* btilde_presentation =
    "# exceptional divisor of the second blow-up: projectivized normal bundle over b\n"
    "var eta deg 2\n"
    "var u deg 2\n"
    "var v deg 2\n"
    "var alpha deg 4\n"
    "var beta deg 6\n"
    "order grevlex eta > u > v > alpha > beta\n"
    "rel u^3 + alpha*u + beta\n"
    "rel v^3 + alpha*v - beta\n"
    "rel eta^4 + 6*(u+v)*eta^3 + (15*(u+v)^2 + 4*alpha - 3*u*v)*eta^2"
    " + (15*(u+v)^3 + 9*alpha*(u+v))*eta + 6*(u+v)^4 + 6*alpha*(u+v)^2\n";

inline constexpr const char* s1_presentation =
    "# projectivized hom bundle: first blow-up base\n"
    "var xi deg 2\n"
    "var alpha deg 4\n"
    "var beta deg 6\n"
    "order grevlex xi > alpha > beta\n"
    "rel xi^3*(xi^6 + 6*alpha*xi^4 + 9*alpha^2*xi^2 + 4*alpha^3 + 27*beta^2)\n";

// ---- pipeline inputs -------------------------------------------------------

// c of the relative cotangent bundle of the first projectivization, restricted
// to the rank-one locus (b ring; xi restricts to u+v, hence the 1-u-v powers)
inline constexpr const char* normal_bundle_numerator =
    "(1-u-v)^3*((1-u-v)^6 + 6*alpha*(1-u-v)^4 + 9*alpha^2*(1-u-v)^2 + 4*alpha^3 + 27*beta^2)";
inline constexpr const char* normal_bundle_denominator =
    "(1 - 3*u + 3*u^2 + alpha)*(1 - 3*v + 3*v^2 + alpha)";

// numerator of the log-cotangent assembly (s1 ring)
inline constexpr const char* log_numerator =
    "(1+xi)^3*((1+xi)^6 + 6*alpha*(1+xi)^4 + 9*alpha^2*(1+xi)^2 + 4*alpha^3 + 27*beta^2)";

// degree-16 class generating the kernel of multiplication by xi (s1 ring)
inline constexpr const char* mu_class =
    "xi^2*(xi^6 + 6*alpha*xi^4 + 9*alpha^2*xi^2 + 4*alpha^3 + 27*beta^2)";

// the lifted-relation bracket: xi^4 + alpha*xi^2 equals the pushforward of
// -bracket/6 (btilde ring)
inline constexpr const char* rehouse_bracket =
    "eta^3 + 6*(u+v)*eta^2 + (15*(u+v)^2 + 4*alpha)*eta - 3*u*v*eta"
    " + 15*(u+v)^3 + 9*alpha*(u+v)";

// ---- claimed displays ------------------------------------------------------

// total Chern class of the normal bundle of the rank-one locus (sym ring)
inline constexpr const char* normal_bundle_display =
    "1 - 6*xi + (15*xi^2 + 4*alpha - 3*w) - (15*xi^3 + 9*alpha*xi)"
    " + (6*xi^4 + 6*alpha*xi^2)";

// total Chern class of the excess bundle on the exceptional divisor (sym ring)
inline constexpr const char* cF_display =
    "1 - (6*xi + eta) + (15*xi^2 + 4*alpha - 3*w + 6*xi*eta + eta^2)"
    " - (15*xi^3 + 9*alpha*xi + 15*xi^2*eta + 4*alpha*eta + 6*xi*eta^2 + eta^3 - 3*w*eta)";

// the same roots shifted by -eta (sym ring)
inline constexpr const char* shifted_product_display =
    "1 - (6*xi + 4*eta) + (15*xi^2 + 4*alpha - 3*w + 18*xi*eta + 6*eta^2)"
    " - (15*xi^3 + 9*alpha*xi + 30*xi^2*eta + 8*alpha*eta + 18*xi*eta^2 + 4*eta^3 - 6*w*eta)";

// building blocks of the pushforward quotient (sym ring)
inline constexpr const char* grr_A_display =
    "(6*xi + 4*eta) - (15*xi^2 + 4*alpha + 18*xi*eta + 6*eta^2)"
    " + (15*xi^3 + 9*alpha*xi + 30*xi^2*eta + 8*alpha*eta + 18*xi*eta^2 + 4*eta^3 - 6*w*eta)";
inline constexpr const char* grr_B_display =
    "-3 + (12*xi + 5*eta) - (15*xi^2 + 12*xi*eta + 3*eta^2 + 4*alpha)";

// the collected quotient expansion through degree 14, in A, B and w (grr ring)
inline constexpr const char* grr_quotient_display =
    "27*w^3 + 9*w^2 + 3*w + 18*B*A^5*w + 12*B*A^3*w + 3*A*w"
    " + 3*A^2*w + 18*A*w^2 + 3*A^3*w + 27*A^2*w^2 + 81*A*w^3 + 3*A^4*w + 36*A^3*w^2"
    " + 162*A^2*w^3 + B*A^3 + B*A^4 + B + 3*A^5*w + 45*A^4*w^2"
    " + 270*A^3*w^3 + 54*A^5*w^2 + 405*A^4*w^3 + 3*w*A^7 + 567*w^3*A^5"
    " + 63*w^2*A^6 + 27*B*w^3 + 9*B*w^2 + 3*B*w + 3*A^6*w + B*A^2"
    " + B*A + B*A^5 + B*A^6 + B*A^7 + 6*B*A*w + 9*B*A^2*w + 27*B*A*w^2"
    " + 54*B*A^2*w^2 + 108*B*A*w^3 + 15*B*A^4*w + 90*B*A^3*w^2"
    " + 270*B*A^2*w^3 + 135*B*A^4*w^2 + 540*B*A^3*w^3 + 189*B*A^5*w^2"
    " + 945*B*A^4*w^3 + 21*B*A^6*w";

// the displayed 7th Chern class (mixed ring, stated up to a global sign)
inline constexpr const char* c7_display =
    "-378*xi^5*eta^2 + 36*alpha*xi*J1*eta - 72*alpha*xi^2*eta^3 - 138*alpha^2*xi*eta^2"
    " - 492*alpha^2*xi^2*eta - 516*alpha*xi^3*eta^2 - 1056*alpha*xi^4*eta"
    " - 540*xi^2*J1*eta^2 + 558*alpha*xi^2*J1 + 108*alpha*J2 - 810*xi^2*J2"
    " - 630*xi^3*J1*eta - 564*xi^6*eta - 252*xi^7 - 504*alpha*xi^5 - 252*alpha^2*xi^3"
    " - 72*xi^4*eta^3 - 54*alpha^2*J1 + 72*xi^4*J1 - 126*xi*eta^3*J1 - 54*eta*beta^2 - 54*J3";

// the displayed 8th Chern class (mixed ring; like terms deliberately kept
// uncollected, exactly as displayed)
inline constexpr const char* c8_display =
    "1332*J1*eta^2*alpha*xi + 2178*J1*xi^2*alpha*eta - 2835*J2*xi^3 - 1143*J2*eta^3"
    " + 2214*J1*xi^5 - 6939*J2*xi^2*eta - 4968*J2*xi*eta^2 + 1485*J2*alpha*xi"
    " + 774*J2*alpha*eta - 72*xi^5*eta^3 + 132*xi^6*eta^2 - 336*alpha^2*xi*eta^3"
    " - 588*alpha^2*xi^2*eta^2 - 408*alpha*xi^3*eta^3 - 456*alpha*xi^4*eta^2"
    " + 1152*J2*eta^3 + 6372*xi^2*J2*eta - 828*alpha*J2*eta + 3942*eta^2*J2*xi"
    " + 846*J1*xi^4*eta + 30*J1*alpha^2*eta + 1008*J1*eta^2*xi^3 + 72*J1*xi^2*eta^3"
    " - 6*J1*alpha*eta^3 + 3150*J1*alpha*xi^3 - 828*J1*alpha^2*xi - 567*eta*J3"
    " - 648*alpha*xi^5*eta - 498*alpha^2*xi^3*eta + 132*alpha^3*xi*eta - 18*xi^7*eta"
    " + 153*xi^8 - 810*xi*J3 + 54*beta^2*eta^2 + 165*alpha^2*xi^4 + 6*xi^2*alpha^3"
    " + 81*xi^2*beta^2 + 312*alpha*xi^6 + 594*J2*J1";

// preimage of the 7th class under the pushforward after rehousing (btilde ring)
inline constexpr const char* chk7_display =
    "-378*(u+v)^5*eta + 36*alpha*u*v*(u+v)*eta - 72*alpha*(u+v)^2*eta^2"
    " - 138*alpha^2*(u+v)*eta - 492*alpha^2*(u+v)^2 - 516*alpha*(u+v)^3*eta"
    " - 1056*alpha*(u+v)^4 - 540*(u+v)^2*eta^2*u*v + 558*alpha*u*v*(u+v)^2"
    " + 108*alpha*u^2*v^2 - 810*(u+v)^2*u^2*v^2 - 630*(u+v)^3*u*v*eta - 564*(u+v)^6"
    " - 72*(u+v)^4*eta^2 - 54*alpha^2*u*v + 72*(u+v)^4*u*v - 126*(u+v)*eta^3*u*v"
    " - 54*beta^2 - 54*u^3*v^3"
    " + 42*alpha*(u+v)*(eta^3 + 6*(u+v)*eta^2 + (15*(u+v)^2 + 4*alpha)*eta - 3*u*v*eta"
    " + 15*(u+v)^3 + 9*alpha*(u+v))"
    " + 42*(u+v)^3*(eta^3 + 6*(u+v)*eta^2 + (15*(u+v)^2 + 4*alpha)*eta - 3*u*v*eta"
    " + 15*(u+v)^3 + 9*alpha*(u+v))";

// reduced preimage of the 8th class minus 3*mu (btilde ring, normal form)
inline constexpr const char* ch8van_display =
    "3*eta^3*u^2*v^2 + alpha*u^2*eta^3 + 2*eta^3*alpha*u*v - 3*eta^3*u*beta"
    " + alpha*v^2*eta^3 + 3*eta^3*v*beta + alpha^2*eta^3"
    " + 6*alpha*u^2*v^2*eta + 9*eta*u^2*v*beta + 4*alpha^2*eta*u^2 - 9*eta*u*v^2*beta"
    " + 2*alpha^2*u*v*eta - 6*eta*alpha*u*beta + 4*alpha^2*eta*v^2 + 6*eta*alpha*v*beta"
    " + 4*alpha^3*eta + 9*beta^2*eta";

// pullback residue of the 8th class after rehousing (s1 ring)
inline constexpr const char* c8_residual_display = "81*xi^2*beta^2";

} // namespace logchern::bundled
