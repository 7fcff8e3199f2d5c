#pragma once

#include "logchern/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace logchern::stability {

// ---------------------------------------------------------------------------
// slopes and walls
// ---------------------------------------------------------------------------

// numerical invariants of a subsheaf: generic rank, rank of the image at the
// marked node, Euler characteristic, and the rank on each rational component
struct SheafInvariants {
    int r0 = 0;
    int r_dag = 0;
    long long chi = 0;
    std::vector<int> component_ranks;
};

// polarization weights d_i; the epsilon scaling them is kept formal
struct Polarization {
    std::vector<int> weights;

    static Polarization uniform(std::size_t n) { return {std::vector<int>(n, 1)}; }
};

struct WallSolution {
    Rational alpha;
    long long chi0 = 0;
    int r0 = 0;
    int r_dag = 0;
};

// The wall set: all alpha in [0,1) with
//   alpha = r0/(r0 - rdag) * (chi/r - chi0/r0),
//   0 < r0 < r, 0 <= rdag <= r, 2 r0 - r <= rdag <= 2 r0, rdag != r0.
// Duplicate alphas are merged; each keeps its lexicographically least witness.
inline std::vector<WallSolution> lambda_set(int r, long long chi) {
    if (r < 2) throw std::invalid_argument("rank must be at least 2");
    if (std::gcd(static_cast<long long>(r), chi < 0 ? -chi : chi) != 1)
        throw std::invalid_argument("rank and chi must be coprime");
    auto floor_div = [](const Integer& p, const Integer& q) { // q > 0
        Integer m = ((p % q) + q) % q;
        return (p - m) / q;
    };
    std::map<Rational, WallSolution> found;
    for (int r0 = 1; r0 < r; ++r0) {
        for (int rdag = std::max(0, 2 * r0 - r); rdag <= std::min(r, 2 * r0); ++rdag) {
            if (rdag == r0) continue; // the formula degenerates
            // alpha = (base - chi0) / (r0 - rdag) with base = r0 chi / r lies
            // in [0,1) for at most |r0 - rdag| integers chi0 next to base
            Rational base = Rational(r0 * chi, r);
            int m = r0 - rdag;
            Integer fl = floor_div(numerator(base), denominator(base));
            for (int t = 0; t < std::abs(m); ++t) {
                Integer chi0 = m > 0 ? Integer(fl - t) : Integer(fl + 1 + t);
                Rational alpha = (base - Rational(chi0)) / Rational(m);
                if (alpha < 0 || alpha >= 1) continue;
                WallSolution w{alpha, chi0.convert_to<long long>(), r0, rdag};
                auto it = found.find(alpha);
                if (it == found.end()) {
                    found.emplace(alpha, w);
                } else {
                    auto key = std::tuple(w.chi0, w.r0, w.r_dag);
                    auto cur = std::tuple(it->second.chi0, it->second.r0, it->second.r_dag);
                    if (key < cur) it->second = w;
                }
            }
        }
    }
    std::vector<WallSolution> out;
    for (auto& [a, w] : found) out.push_back(w);
    return out;
}

// Independent check: scan every rational a/b in [0,1) with b bounded by
// r*(r-1) and keep those achieved by some admissible triple.
inline std::vector<Rational> lambda_oracle(int r, long long chi) {
    std::set<Rational> hits;
    for (int b = 1; b <= r * (r - 1); ++b) {
        for (int a = 0; a < b; ++a) {
            Rational alpha(a, b);
            bool achieved = false;
            for (int r0 = 1; r0 < r && !achieved; ++r0)
                for (int rdag = std::max(0, 2 * r0 - r);
                     rdag <= std::min(r, 2 * r0) && !achieved; ++rdag) {
                    if (rdag == r0) continue;
                    // chi0 = r0*chi/r - alpha*(r0-rdag) must be an integer
                    Rational chi0 = Rational(r0 * chi, r) - alpha * Rational(r0 - rdag);
                    if (denominator(chi0) == 1) achieved = true;
                }
            if (achieved) hits.insert(alpha);
        }
    }
    return {hits.begin(), hits.end()};
}

enum class Cmp { Less, Equal, Greater };

inline const char* to_string(Cmp c) {
    switch (c) {
    case Cmp::Less: return "less";
    case Cmp::Equal: return "equal";
    default: return "greater";
    }
}

namespace detail {

// slope numerator/denominator as polynomials in the formal epsilon:
// rk_d = r0 + eps * (sum d_i rk_i - |d| r0)
struct EpsLinear {
    Rational c0, c1;
};

inline EpsLinear rank_poly(const SheafInvariants& f, const Polarization& d) {
    if (f.component_ranks.size() != d.weights.size())
        throw std::invalid_argument("component ranks and weights disagree in length");
    long long wsum = 0, dotted = 0;
    for (std::size_t i = 0; i < d.weights.size(); ++i) {
        if (d.weights[i] <= 0) throw std::invalid_argument("weights must be positive");
        wsum += d.weights[i];
        dotted += static_cast<long long>(d.weights[i]) * f.component_ranks[i];
    }
    return {Rational(f.r0), Rational(dotted - wsum * f.r0)};
}

inline int sign_at_zero_plus(const EpsLinear& p) {
    if (p.c0 != 0) return p.c0 > 0 ? 1 : -1;
    if (p.c1 != 0) return p.c1 > 0 ? 1 : -1;
    return 0;
}

} // namespace detail

// Exact comparison of the two slopes for all sufficiently small eps > 0. The
// difference is a ratio of eps-linear polynomials; its sign at 0+ is the sign
// of the lowest nonvanishing coefficient.
inline Cmp slope_compare(const SheafInvariants& F, const SheafInvariants& E,
                         const Rational& alpha, const Polarization& d) {
    detail::EpsLinear rkF = detail::rank_poly(F, d);
    detail::EpsLinear rkE = detail::rank_poly(E, d);
    if (detail::sign_at_zero_plus(rkF) == 0 || detail::sign_at_zero_plus(rkE) == 0)
        throw std::invalid_argument("slope denominator vanishes identically");
    Rational nF = Rational(F.chi) - alpha * F.r_dag;
    Rational nE = Rational(E.chi) - alpha * E.r_dag;
    // nF/rkF - nE/rkE = (nF rkE - nE rkF) / (rkF rkE)
    detail::EpsLinear num{nF * rkE.c0 - nE * rkF.c0, nF * rkE.c1 - nE * rkF.c1};
    int s = detail::sign_at_zero_plus(num);
    if (s == 0) return Cmp::Equal;
    s *= detail::sign_at_zero_plus(rkF) * detail::sign_at_zero_plus(rkE);
    return s > 0 ? Cmp::Greater : Cmp::Less;
}

// slope of a generalized parabolic bundle: (chi + (1-alpha) r+) / rank
inline Rational gpb_slope(long long chiF, int r_plus, int rank, const Rational& alpha) {
    if (rank <= 0) throw std::invalid_argument("rank must be positive");
    return (Rational(chiF) + (Rational(1) - alpha) * r_plus) / rank;
}

enum class Side { SigmaMinus, SigmaPlus };

inline const char* to_string(Side s) {
    return s == Side::SigmaMinus ? "Sigma-" : "Sigma+";
}

struct DestabTriple {
    int r0 = 0;
    int r_dag = 0;
    long long chiF = 0;
    Side side = Side::SigmaMinus;
};

// Integer solutions of (chiF - wall*rdag)/r0 = (chi - wall*r)/r inside the
// admissible box, tagged by the side of the wall on which they destabilize.
// Only the explicit quantitative bounds are enforced; finer viability
// conditions from the deformation theory are not filtered here.
inline std::vector<DestabTriple> destab_triples(int r, long long chi, const Rational& wall) {
    auto walls = lambda_set(r, chi);
    bool on_wall = std::any_of(walls.begin(), walls.end(),
                               [&](const WallSolution& w) { return w.alpha == wall; });
    if (!on_wall) throw std::invalid_argument("alpha is not a wall for these invariants");
    Rational target = (Rational(chi) - wall * r) / r;
    std::vector<DestabTriple> out;
    for (int r0 = 1; r0 < r; ++r0) {
        for (int rdag = std::max(0, 2 * r0 - r); rdag <= std::min(r, 2 * r0); ++rdag) {
            if (rdag == r0) continue; // slope equal on both sides, never flips
            Rational chiF = target * r0 + wall * rdag;
            if (denominator(chiF) != 1) continue;
            // d/dalpha of the slope difference is 1 - rdag/r0: destabilizes
            // above the wall (Sigma-) when positive
            Side side = rdag < r0 ? Side::SigmaMinus : Side::SigmaPlus;
            out.push_back({r0, rdag, static_cast<long long>(numerator(chiF)), side});
        }
    }
    std::sort(out.begin(), out.end(), [](const DestabTriple& a, const DestabTriple& b) {
        return std::tuple(a.r0, a.r_dag, a.chiF) < std::tuple(b.r0, b.r_dag, b.chiF);
    });
    return out;
}

// ---------------------------------------------------------------------------
// chains of rational curves: transfer and regularity
// ---------------------------------------------------------------------------

// a locally free sheaf on an end-pointed chain, recorded by the multiset of
// line-bundle degrees on each component
struct ChainBundle {
    int rank = 0;
    std::vector<std::vector<int>> degrees; // one multiset (size = rank) per component

    std::string to_string() const {
        std::ostringstream os;
        os << "r=" << rank << ":";
        for (const auto& comp : degrees) {
            os << " [";
            for (std::size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << comp[i];
            os << "]";
        }
        return os.str();
    }
};

inline ChainBundle parse_chain(const std::string& text) {
    ChainBundle cb;
    std::istringstream in(text);
    std::string head;
    in >> head;
    if (head.rfind("r=", 0) != 0) throw std::invalid_argument("chain text must start with r=<rank>:");
    std::string rank_part = head.substr(2);
    if (!rank_part.empty() && rank_part.back() == ':') rank_part.pop_back();
    cb.rank = std::stoi(rank_part);
    std::string tok;
    while (in >> tok) {
        if (tok.front() != '[' || tok.back() != ']')
            throw std::invalid_argument("component must look like [d1,d2,...]");
        std::vector<int> comp;
        std::string inner = tok.substr(1, tok.size() - 2);
        std::istringstream cs(inner);
        std::string num;
        while (std::getline(cs, num, ',')) comp.push_back(std::stoi(num));
        cb.degrees.push_back(std::move(comp));
    }
    return cb;
}

inline bool is_admissible(const ChainBundle& cb) {
    for (const auto& comp : cb.degrees) {
        if (static_cast<int>(comp.size()) != cb.rank) return false;
        for (int d : comp)
            if (d < 0) return false;
    }
    return true;
}

struct TransferResult {
    std::vector<int> dims; // W_0 .. W_n
    int t_forward = 0;
};

// Transfer of the zero subspace along the chain under generic attaching maps:
// W_0 = 0 and W_i = min(rank, W_{i-1} + a_i) with a_i the number of degree-1
// factors on component i. Requires every factor degree in {0, 1}.
inline TransferResult transfer(const ChainBundle& cb) {
    if (!is_admissible(cb)) throw std::invalid_argument("chain bundle is not admissible");
    TransferResult res;
    res.dims.push_back(0);
    for (const auto& comp : cb.degrees) {
        int a = 0;
        for (int d : comp) {
            if (d != 0 && d != 1)
                throw std::invalid_argument("transfer requires factor degrees in {0,1}");
            a += d == 1;
        }
        res.dims.push_back(std::min(cb.rank, res.dims.back() + a));
    }
    res.t_forward = res.dims.back();
    return res;
}

// regular: factor degrees in {0,1} and the transfer grows by exactly a_i at
// every step (no clamping), equivalently sum a_i <= rank
inline bool is_regular(const ChainBundle& cb) {
    if (!is_admissible(cb)) return false;
    int total = 0;
    for (const auto& comp : cb.degrees)
        for (int d : comp) {
            if (d != 0 && d != 1) return false;
            total += d == 1;
        }
    return total <= cb.rank;
}

// ---------------------------------------------------------------------------
// destabilizing subsheaf patterns (rank 3, invariants (2,3,3))
// ---------------------------------------------------------------------------

// one summand of a destabilizing pattern: support over components lo+1..hi,
// endpoint markers (dot = nonzero value, circle = zero), optional degree-1
// twist column
struct PatternSummand {
    int lo = 0, hi = 0;
    bool left_dot = true, right_dot = true;
    int twist = 0; // 0 = none

    bool operator==(const PatternSummand& o) const {
        return lo == o.lo && hi == o.hi && left_dot == o.left_dot && right_dot == o.right_dot &&
               twist == o.twist;
    }
};

struct SubsheafPattern {
    int n = 0;
    int marked = 0;
    std::vector<PatternSummand> summands;

    bool operator==(const SubsheafPattern& o) const {
        return n == o.n && marked == o.marked && summands == o.summands;
    }
};

// figure notation, one line per summand: node markers o/* (or . outside the
// support) joined by -- on supported segments, twist column in brackets
inline std::string to_string(const PatternSummand& s, int n) {
    std::string line;
    for (int node = 0; node <= n; ++node) {
        if (node < s.lo || node > s.hi) line += '.';
        else if (node == s.lo) line += s.left_dot ? '*' : 'o';
        else if (node == s.hi) line += s.right_dot ? '*' : 'o';
        else line += '*';
        if (node < n) line += (node >= s.lo && node + 1 <= s.hi) ? "--" : "  ";
    }
    if (s.twist) line += " [" + std::to_string(s.twist) + "]";
    return line;
}

inline std::string to_string(const SubsheafPattern& p) {
    std::ostringstream os;
    os << "pattern n=" << p.n << " marked=" << p.marked << "\n";
    for (const auto& s : p.summands) os << "  " << to_string(s, p.n) << "\n";
    return os.str();
}

inline SubsheafPattern parse_pattern(const std::string& text);

inline PatternSummand parse_summand(const std::string& line, int n) {
    PatternSummand s;
    std::vector<char> nodes;
    for (int node = 0, pos = 0; node <= n; ++node, pos += 3) {
        if (pos >= static_cast<int>(line.size())) throw std::invalid_argument("summand line too short");
        nodes.push_back(line[static_cast<std::size_t>(pos)]);
    }
    int lo = -1, hi = -1;
    for (int i = 0; i <= n; ++i) {
        if (nodes[static_cast<std::size_t>(i)] == '.') continue;
        if (lo < 0) lo = i;
        hi = i;
    }
    if (lo < 0 || lo == hi) throw std::invalid_argument("summand must cover at least one segment");
    s.lo = lo;
    s.hi = hi;
    s.left_dot = nodes[static_cast<std::size_t>(lo)] == '*';
    s.right_dot = nodes[static_cast<std::size_t>(hi)] == '*';
    auto bracket = line.find('[');
    if (bracket != std::string::npos)
        s.twist = std::stoi(line.substr(bracket + 1, line.find(']') - bracket - 1));
    return s;
}

// All destabilizing patterns with invariants (2,3,3) over a chain with n
// components and marked node q_m. The derived shape is: one summand dying at
// the right (q_i), one dying at the left (q_j), one running through (with an
// optional twist). Filters: all three alive at the marked node (j < m < i),
// and the degree-1 host demands d_c must satisfy d_c >= 1 with sum <= 3 (the
// ambient bundle has at least one and in total at most three degree-1
// factors, and a vacant degree-1 factor would admit a small extension).
inline std::vector<SubsheafPattern> enumerate_destab_patterns(int n, int marked, int rank = 3,
                                                              std::array<int, 3> invariants = {
                                                                  2, 3, 3}) {
    if (n != 2 && n != 3) throw std::invalid_argument("pattern enumeration supports n in {2,3}");
    if (marked <= 0 || marked >= n) throw std::invalid_argument("marked node must be interior");
    if (rank != 3 || invariants != std::array<int, 3>{2, 3, 3})
        throw std::invalid_argument("pattern enumeration is specific to rank 3, invariants (2,3,3)");
    std::vector<SubsheafPattern> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!(j < marked && marked < i)) continue; // r_dag = 3 at the marked node
            for (int k = 0; k <= n; ++k) { // 0 = untwisted through summand
                std::vector<int> demand(static_cast<std::size_t>(n) + 1, 0);
                demand[static_cast<std::size_t>(i)] += 1;     // right-dying summand twists into D_i
                demand[static_cast<std::size_t>(j) + 1] += 1; // left-dying summand twists into D_{j+1}
                if (k) demand[static_cast<std::size_t>(k)] += 1;
                int total = 0;
                bool feasible = true;
                for (int c = 1; c <= n; ++c) {
                    if (demand[static_cast<std::size_t>(c)] < 1) feasible = false;
                    total += demand[static_cast<std::size_t>(c)];
                }
                if (!feasible || total > 3) continue;
                SubsheafPattern p;
                p.n = n;
                p.marked = marked;
                p.summands.push_back({0, i, true, false, 0});  // O_[0,i)
                p.summands.push_back({j, n, false, true, 0});  // O_(j,n]
                p.summands.push_back({0, n, true, true, k});   // O_[0,n] or twisted
                out.push_back(std::move(p));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SubsheafPattern& a, const SubsheafPattern& b) {
        auto key = [](const SubsheafPattern& p) {
            return std::tuple(p.summands[0].hi, p.summands[1].lo, p.summands[2].twist);
        };
        return key(a) < key(b);
    });
    return out;
}

// ---------------------------------------------------------------------------
// flip-locus type catalogs
// ---------------------------------------------------------------------------

enum class Family { SigmaPlus, SigmaMinus };

// A catalog entry records the figure rows: per row, node markers (o/*) and
// segment occupancy ('-' solid, '.' dashed) including the two half-edges into
// the genus part, plus the degree-1 columns of that row.
struct CatalogEntry {
    std::string id;
    int n = 0;
    int marked = 0;
    std::vector<std::string> rows;          // e.g. "-*-o.o." (half, node, seg, ..., half)
    std::vector<std::vector<int>> twists;   // per row, twisted component columns
    std::string reflection_of;              // empty when drawn directly
    std::string identified_with;            // equal type under another family label
};

struct TypeCatalog {
    Family family = Family::SigmaPlus;
    std::vector<CatalogEntry> entries;
    std::vector<std::pair<std::string, std::string>> identifications;
    // pairwise intersections of the component closures, by entry id ("" = empty)
    std::string ab_intersection, ac_intersection, bc_intersection;
};

namespace detail {

inline CatalogEntry reflect(const CatalogEntry& e, std::string new_id) {
    CatalogEntry r = e;
    r.id = std::move(new_id);
    r.reflection_of = e.id;
    r.marked = e.n - e.marked;
    for (auto& row : r.rows) std::reverse(row.begin(), row.end());
    for (auto& t : r.twists)
        for (auto& k : t) k = e.n + 1 - k;
    r.identified_with.clear();
    return r;
}

inline CatalogEntry plus_entry(std::string id, int n, int marked, int i, int j, int k,
                               std::string identified) {
    // rows drawn from the pattern: through summand, left-dying, right-dying
    CatalogEntry e;
    e.id = std::move(id);
    e.n = n;
    e.marked = marked;
    e.identified_with = std::move(identified);
    auto row = [&](int lo, int hi, bool ldot, bool rdot) {
        std::string s;
        s += (lo == 0 && ldot) ? '-' : '.';
        for (int node = 0; node <= n; ++node) {
            bool alive = node > lo && node < hi;
            alive = alive || (node == lo && ldot) || (node == hi && rdot);
            s += alive ? '*' : 'o';
            if (node < n) s += (node >= lo && node + 1 <= hi) ? '-' : '.';
        }
        s += (hi == n && rdot) ? '-' : '.';
        return s;
    };
    e.rows.push_back(row(0, n, true, true));   // through summand
    e.rows.push_back(row(j, n, false, true));  // left-dying
    e.rows.push_back(row(0, i, true, false));  // right-dying
    e.twists = {{}, {j + 1}, {}};
    if (k) e.twists[0].push_back(k);
    if (i >= 1) e.twists[2].push_back(i);
    return e;
}

} // namespace detail

inline TypeCatalog type_catalog(Family family) {
    TypeCatalog cat;
    cat.family = family;
    if (family == Family::SigmaPlus) {
        // the nine types; (n, marked, i, j, k) as in enumerate_destab_patterns
        cat.entries = {
            detail::plus_entry("Ia+0", 2, 1, 2, 0, 0, ""),
            detail::plus_entry("Ia+1", 3, 1, 2, 0, 3, "Ic+2"),
            detail::plus_entry("Ia+2", 3, 2, 3, 1, 1, "Ib+2"),
            detail::plus_entry("Ib+0", 2, 1, 2, 0, 1, ""),
            detail::plus_entry("Ib+1", 3, 2, 3, 0, 2, ""),
            detail::plus_entry("Ib+2", 3, 2, 3, 1, 1, "Ia+2"),
            detail::plus_entry("Ic+0", 2, 1, 2, 0, 2, ""),
            detail::plus_entry("Ic+1", 3, 1, 3, 0, 2, ""),
            detail::plus_entry("Ic+2", 3, 1, 2, 0, 3, "Ia+1"),
        };
        cat.identifications = {{"Ia+1", "Ic+2"}, {"Ia+2", "Ib+2"}};
        cat.ab_intersection = "Ia+2=Ib+2";
        cat.ac_intersection = "Ia+1=Ic+2";
        cat.bc_intersection = ""; // empty
        return cat;
    }
    // Sigma-: the drawn representatives, then the reflections
    auto entry = [](std::string id, int n, int marked, std::vector<std::string> rows,
                    std::vector<std::vector<int>> twists) {
        CatalogEntry e;
        e.id = std::move(id);
        e.n = n;
        e.marked = marked;
        e.rows = std::move(rows);
        e.twists = std::move(twists);
        return e;
    };
    std::vector<CatalogEntry> a = {
        entry("Ia-0", 0, 0, {"-o.", ".o-", ".o."}, {{}, {}, {}}),
        entry("Ia-1", 1, 0, {"-o.o.", ".o-*-", ".o.o."}, {{}, {1}, {}}),
        entry("Ia-2", 1, 0, {"-o.o.", ".o.o-", ".o.o."}, {{}, {}, {1}}),
        entry("Ia-3", 2, 1, {".o.o.o-", "-*-o.o.", ".o.o.o."}, {{}, {1}, {2}}),
        entry("Ia-4", 2, 1, {"-*-o.o.", ".o.o-*-", ".o.o.o."}, {{1}, {2}, {}}),
    };
    std::vector<CatalogEntry> b = {
        entry("Ib-0", 1, 0, {"-o.o.", ".o-*-", ".o.o."}, {{}, {1}, {1}}),
        entry("Ib-1", 2, 0, {"-*.o.o.", ".o-*-*-", ".o.o.o."}, {{}, {1}, {2}}),
        entry("Ib-2", 2, 0, {"-o.o.o.", ".o.o-*-", ".o.o.o."}, {{}, {2}, {1}}),
        entry("Ib-3", 2, 1, {"-*-o.o.", ".o.o-*-", ".o.o.o."}, {{1}, {2}, {2}}),
        entry("Ib-4", 3, 1, {"-*-o.o.o.", ".o.o.o-*-", ".o.o.o.o."}, {{1}, {3}, {2}}),
        entry("Ib-5", 3, 1, {"-*-o.o.o.", ".o.o-*-*-", ".o.o.o.o."}, {{1}, {2}, {3}}),
    };
    for (const auto& e : a) cat.entries.push_back(e);
    for (const auto& e : a) cat.entries.push_back(detail::reflect(e, e.id + "'"));
    for (const auto& e : b) cat.entries.push_back(e);
    for (const auto& e : b) cat.entries.push_back(detail::reflect(e, "Ic" + e.id.substr(2)));
    return cat;
}

inline std::string to_string(const CatalogEntry& e) {
    std::ostringstream os;
    os << e.id << "  (n=" << e.n << ", marked=q" << e.marked;
    if (!e.reflection_of.empty()) os << ", reflection of " << e.reflection_of;
    if (!e.identified_with.empty()) os << ", = " << e.identified_with;
    os << ")\n";
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        os << "    ";
        for (char c : e.rows[r]) {
            os << c;
            if (c == '-' || c == '.') os << c; // widen segments for readability
        }
        if (!e.twists[r].empty()) {
            os << "   deg1 at";
            for (int k : e.twists[r]) os << " D" << k;
        }
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// dimension bookkeeping
// ---------------------------------------------------------------------------

// the dimension formulas around the first wall crossing, as functions of the
// arithmetic genus g >= 2, with their displayed consistency identities checked
inline std::map<std::string, long long> dims_table(long long g) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    std::map<std::string, long long> t;
    t["ExtFL"] = 2 * g;          // extensions of the rank-2 piece by the line piece
    t["G243"] = 4 * g - 4;       // parabolic moduli, rank 2, chi 4, 3-dim subspace
    t["G130"] = g - 1;           // parabolic moduli, rank 1, chi 3, zero subspace
    t["A"] = 5 * g - 5;          // product of the two
    t["PWminus_total"] = 7 * g - 6;
    t["M0"] = 9 * g - 8;
    t["ExtLF"] = 2 * g - 2;
    t["B"] = 5 * g - 5;          // blow-up of A along the two incidence loci
    t["Ia"] = 7 * g - 8;
    t["Ib"] = 7 * g - 7;
    t["Ic"] = 7 * g - 7;
    // displayed arithmetic identities
    auto check = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("dimension identity failed: ") + what);
    };
    check(t["A"] == t["G243"] + t["G130"], "A = G243 + G130");
    check(t["PWminus_total"] == (t["ExtFL"] - 1) + t["A"], "(2g-1) + (5g-5) = 7g-6");
    check(t["M0"] == t["PWminus_total"] + t["ExtLF"], "(7g-6) + (2g-2) = 9g-8");
    check(t["Ia"] == (t["ExtLF"] - 1) + t["A"], "projectivized W+ over A");
    check(t["Ib"] == t["Ia"] - 2 + 3 && t["Ic"] == t["Ib"], "P3-bundles over codim-2 loci");
    check(t["B"] == t["A"], "blowing up preserves dimension");
    return t;
}

} // namespace logchern::stability
