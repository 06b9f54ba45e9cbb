#include "maxseg/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maxseg {

namespace {

std::string repeat(const std::string& s, Int times) {
    std::string out;
    out.reserve(s.size() * static_cast<std::size_t>(times));
    for (Int i = 0; i < times; ++i) out += s;
    return out;
}

std::pair<Int, Int> word_counts(const std::string& w) {  // (ones, zeros)
    Int ones = 0, zeros = 0;
    for (char c : w) (c == '1' ? ones : zeros)++;
    return {ones, zeros};
}

// Reduced slope of a word and the power of its primitive pattern it equals,
// or multiplicity 0 if it is not a pattern power.
struct WordSlope {
    Int a, b, f;
};

WordSlope word_as_pattern_power(const std::string& w);

}  // namespace

ContinuedFraction cf_decompose(Int a, Int b) {
    if (!(0 < a && a <= b)) throw std::invalid_argument("cf_decompose: need 0 < a <= b");
    if (gcd_nonneg(a, b) != 1) throw std::invalid_argument("cf_decompose: a, b not coprime");
    ContinuedFraction cf;
    cf.a = a;
    cf.b = b;
    Int num = b, den = a;  // b/a = u_1 + 1/(...)
    while (den != 0) {
        cf.quotients.push_back(num / den);
        Int r = num % den;
        num = den;
        den = r;
    }
    return cf;
}

ContinuedFraction cf_from_quotients(std::vector<Int> quotients) {
    if (quotients.empty()) throw std::invalid_argument("cf_from_quotients: empty");
    for (Int u : quotients)
        if (u < 1) throw std::invalid_argument("cf_from_quotients: quotients must be >= 1");
    ContinuedFraction cf;
    cf.quotients = std::move(quotients);
    Int p2 = 1, q2 = 0;  // k-2
    Int p1 = 0, q1 = 1;  // k-1
    for (Int u : cf.quotients) {
        Int p = u * p1 + p2;
        Int q = u * q1 + q2;
        p2 = p1;
        q2 = q1;
        p1 = p;
        q1 = q;
    }
    cf.a = p1;
    cf.b = q1;
    return cf;
}

ContinuedFraction ContinuedFraction::parity_flipped() const {
    std::vector<Int> us = quotients;
    if (us.empty()) throw std::invalid_argument("parity_flipped: empty fraction");
    if (us.back() >= 2) {
        us.back() -= 1;
        us.push_back(1);
    } else if (us.size() >= 2) {
        us.pop_back();
        us.back() += 1;
    } else {
        throw std::invalid_argument("parity_flipped: slope 1 has a single representation");
    }
    return cf_from_quotients(std::move(us));
}

ConvergentTable convergents(const ContinuedFraction& cf) {
    ConvergentTable t;
    t.rows.push_back({0, 1});  // k = 0
    Int p2 = 1, q2 = 0;
    Int p1 = 0, q1 = 1;
    for (Int u : cf.quotients) {
        Int p = u * p1 + p2;
        Int q = u * q1 + q2;
        t.rows.push_back({p, q});
        p2 = p1;
        q2 = q1;
        p1 = p;
        q1 = q;
    }
    if (!t.rows.empty() && (t.rows.back().p != cf.a || t.rows.back().q != cf.b))
        throw std::logic_error("convergents: table does not reproduce the value");
    return t;
}

std::vector<std::string> pattern_word_series(const ContinuedFraction& cf) {
    std::vector<std::string> e;
    e.emplace_back("0");  // E(z_0)
    if (cf.depth() >= 1) e.push_back(repeat("0", cf.quotient(1)) + "1");
    for (Int k = 2; k <= cf.depth(); ++k) {
        const std::string& prev = e[static_cast<std::size_t>(k - 1)];
        const std::string& prev2 = e[static_cast<std::size_t>(k - 2)];
        if (k % 2 == 1)
            e.push_back(repeat(prev, cf.quotient(k)) + prev2);
        else
            e.push_back(prev2 + repeat(prev, cf.quotient(k)));
    }
    return e;
}

PatternWord pattern_word(const ContinuedFraction& cf) {
    auto series = pattern_word_series(cf);
    PatternWord w{series.back(), cf.a, cf.b};
    auto [ones, zeros] = word_counts(w.word);
    if (ones != cf.a || zeros != cf.b)
        throw std::logic_error("pattern_word: letter counts disagree with the slope");
    return w;
}

PatternWord pattern_word_for_slope(Int a, Int b) {
    if (a == 0) {
        if (b != 1) throw std::invalid_argument("pattern_word_for_slope: slope 0 must be (0,1)");
        return {"0", 0, 1};
    }
    return pattern_word(cf_decompose(a, b));
}

PatternWord reversed_pattern(const ContinuedFraction& cf) {
    PatternWord w = pattern_word(cf);
    std::reverse(w.word.begin(), w.word.end());
    return w;
}

std::vector<LatticePoint> embed_word(const std::string& word, LatticePoint origin) {
    std::vector<LatticePoint> pts;
    pts.reserve(word.size() + 1);
    LatticePoint p = origin;
    pts.push_back(p);
    for (char c : word) {
        if (c == '0')
            p.x += 1;
        else if (c == '1')
            p.y += 1;
        else
            throw std::invalid_argument("embed_word: word must be over {0,1}");
        pts.push_back(p);
    }
    return pts;
}

LeaningVectors leaning_vectors(const ContinuedFraction& cf) {
    const Int n = cf.depth();
    if (n < 1) throw std::invalid_argument("leaning_vectors: undefined for slope 0");
    ConvergentTable t = convergents(cf);
    auto vec = [&](Int k) { return LatticeVector{t.at(k).q, t.at(k).p}; };
    LeaningVectors lv;
    if (n % 2 == 1) {  // n = 2i+1
        lv.u1_to_l1 = (cf.quotient(n) - 1) * vec(n - 1) + vec(n - 2) + LatticeVector{1, -1};
        lv.l1_to_u2 = LatticeVector{t.at(n - 1).q - 1, t.at(n - 1).p + 1};
    } else {  // n = 2i
        lv.u1_to_l1 = LatticeVector{t.at(n - 1).q + 1, t.at(n - 1).p - 1};
        lv.l1_to_u2 = (cf.quotient(n) - 1) * vec(n - 1) + vec(n - 2) + LatticeVector{-1, 1};
    }
    if (!(lv.u1_to_l1 + lv.l1_to_u2 == LatticeVector{cf.b, cf.a}))
        throw std::logic_error("leaning_vectors: U1L1 + L1U2 != (b,a)");
    return lv;
}

FactorStructure factor_structure(const ContinuedFraction& cf) {
    const Int n = cf.depth();
    if (n < 2) throw std::invalid_argument("factor_structure: needs depth >= 2");
    auto e = pattern_word_series(cf);
    FactorStructure fs;
    if (n % 2 == 1) {
        fs.left_factor_of_u1l1 = repeat(e[static_cast<std::size_t>(n - 1)], cf.quotient(n) - 1);
        fs.right_factor_of_l1u2 = repeat(e[static_cast<std::size_t>(n - 2)], cf.quotient(n - 1));
    } else {
        fs.left_factor_of_u1l1 = repeat(e[static_cast<std::size_t>(n - 2)], cf.quotient(n - 1));
        fs.right_factor_of_l1u2 = repeat(e[static_cast<std::size_t>(n - 1)], cf.quotient(n) - 1);
    }
    return fs;
}

namespace {

WordSlope word_as_pattern_power(const std::string& w) {
    auto [ones, zeros] = word_counts(w);
    Int g = gcd_nonneg(ones, zeros);
    Int a = ones / g, b = zeros / g;
    PatternWord primitive = pattern_word_for_slope(a, b);
    const std::size_t plen = primitive.word.size();
    if (w.size() % plen != 0) return {a, b, 0};
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != primitive.word[i % plen]) return {a, b, 0};
    return {a, b, static_cast<Int>(w.size() / plen)};
}

// Exact slope comparison a1/b1 > a2/b2 (nonnegative, b may be 0 for "1/0").
bool slope_greater(Int a1, Int b1, Int a2, Int b2) {
    return Wide(a1) * b2 > Wide(a2) * b1;
}

// Remainder sweep: the embedded word is a DSS of slope a/b iff the
// remainder range over its points is at most a+b-1 wide.
bool word_is_dss_of_slope(const std::string& w, Int a, Int b) {
    Int lo = 0, hi = 0;
    Int x = 0, y = 0;
    for (char c : w) {
        if (c == '0') x++; else y++;
        Int r = a * x - b * y;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return hi - lo <= a + b - 1;
}

// Construction at cut index j (the quotient being cut): the R side is a
// right factor of E(z_j), the L side a left factor.
std::string flank_word(const std::vector<std::string>& e, const ContinuedFraction& cf, Int j,
                       FlankSide side, Int cut) {
    const std::string& ej1 = e[static_cast<std::size_t>(j - 1)];
    const std::string em1 = (j >= 2) ? e[static_cast<std::size_t>(j - 2)] : std::string("1");
    std::string power = repeat(ej1, cf.quotient(j) - cut);
    if (j % 2 == 1)  // E(z_j) = E(z_{j-1})^{u_j} E(z_{j-2})
        return side == FlankSide::left_r ? power + em1 : power;
    else             // E(z_j) = E(z_{j-2}) E(z_{j-1})^{u_j}
        return side == FlankSide::left_r ? power : em1 + power;
}

Int flank_complexity(Int j, FlankSide side) {
    if (side == FlankSide::left_r) return j % 2 == 1 ? j : j - 1;
    return j % 2 == 1 ? j - 1 : j;
}

FlankingEdge make_flank(const std::vector<std::string>& e, const ContinuedFraction& cf, Int j,
                        FlankSide side, Int rank, Int cut) {
    if (cut < 1 || cut >= cf.quotient(j))
        throw std::invalid_argument("flanking: cut must satisfy 1 <= cut < quotient");
    FlankingEdge f;
    f.word = flank_word(e, cf, j, side, cut);
    f.side = side;
    f.rank = rank;
    f.complexity = flank_complexity(j, side);
    WordSlope ws = word_as_pattern_power(f.word);
    if (ws.f == 0) throw std::logic_error("flanking: factor is not a pattern power");
    f.slope_a = ws.a;
    f.slope_b = ws.b;
    f.multiplicity = ws.f;
    return f;
}

}  // namespace

FlankingEdge flanking_factors(const ContinuedFraction& cf, FlankSide side, Int cut) {
    const Int n = cf.depth();
    if (n < 1) throw std::invalid_argument("flanking_factors: needs depth >= 1");
    auto e = pattern_word_series(cf);
    FlankingEdge f = make_flank(e, cf, n, side, 1, cut);

    // Postconditions (the flanking lemma, properties (i)-(iv)).
    const std::string& pat = e[static_cast<std::size_t>(n)];
    const std::string concat =
        side == FlankSide::left_r ? f.word + pat : pat + f.word;
    if (!word_is_dss_of_slope(f.word, cf.a, cf.b) || !word_is_dss_of_slope(concat, cf.a, cf.b))
        throw std::logic_error("flanking_factors: concatenation is not a DSS of the slope");
    if (word_as_pattern_power(concat).f != 0)
        throw std::logic_error("flanking_factors: concatenation is itself a pattern");
    const bool order_ok = side == FlankSide::left_r
                              ? slope_greater(f.slope_a, f.slope_b, cf.a, cf.b)
                              : slope_greater(cf.a, cf.b, f.slope_a, f.slope_b);
    if (!order_ok) throw std::logic_error("flanking_factors: slope ordering violated");
    return f;
}

FlankingSequence flanking_edge_sequence(const ContinuedFraction& cf, const std::vector<Int>& r_cuts,
                                        const std::vector<Int>& l_cuts, Int center_multiplicity) {
    const Int n = cf.depth();
    if (n < 1) throw std::invalid_argument("flanking_edge_sequence: needs depth >= 1");
    if (static_cast<Int>(r_cuts.size()) != n || static_cast<Int>(l_cuts.size()) != n)
        throw std::invalid_argument("flanking_edge_sequence: need one cut per rank");
    if (center_multiplicity < 1)
        throw std::invalid_argument("flanking_edge_sequence: center multiplicity must be >= 1");
    auto e = pattern_word_series(cf);

    FlankingSequence seq;
    for (Int k = 1; k <= n; ++k) {
        const Int j = n + 1 - k;  // quotient cut at rank k
        if (cf.quotient(j) < 2) continue;  // no strict cut exists, step skipped
        seq.right_of_center.push_back(
            make_flank(e, cf, j, FlankSide::left_r, k, r_cuts[static_cast<std::size_t>(k - 1)]));
        seq.left_of_center.push_back(
            make_flank(e, cf, j, FlankSide::right_l, k, l_cuts[static_cast<std::size_t>(k - 1)]));
    }

    // [R_n ... R_1 E L_1 ... L_n] must be a DSS of slope a/b with its upper
    // leaning points confined to E, and slopes strictly decreasing.
    std::string word;
    for (auto it = seq.right_of_center.rbegin(); it != seq.right_of_center.rend(); ++it)
        word += it->word;
    const Int e_start_moves = static_cast<Int>(word.size());
    word += repeat(e[static_cast<std::size_t>(n)], center_multiplicity);
    const Int e_end_moves = static_cast<Int>(word.size());
    for (const auto& l : seq.left_of_center) word += l.word;

    auto pts = embed_word(word);
    Int lo = 0, hi = 0;
    for (const auto& p : pts) {
        Int r = cf.a * p.x - cf.b * p.y;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (hi - lo > cf.a + cf.b - 1)
        throw std::logic_error("flanking_edge_sequence: concatenation is not a DSS");
    for (Int i = 0; i < static_cast<Int>(pts.size()); ++i) {
        Int r = cf.a * pts[static_cast<std::size_t>(i)].x - cf.b * pts[static_cast<std::size_t>(i)].y;
        if (r == lo && (i < e_start_moves || i > e_end_moves))
            throw std::logic_error("flanking_edge_sequence: upper leaning point off the center edge");
    }

    std::vector<const FlankingEdge*> ordered;
    for (auto it = seq.right_of_center.rbegin(); it != seq.right_of_center.rend(); ++it)
        ordered.push_back(&*it);
    FlankingEdge center{e[static_cast<std::size_t>(n)], FlankSide::left_r, 0, n, cf.a, cf.b, 1};
    ordered.push_back(&center);
    for (const auto& l : seq.left_of_center) ordered.push_back(&l);
    for (std::size_t i = 0; i + 1 < ordered.size(); ++i)
        if (!slope_greater(ordered[i]->slope_a, ordered[i]->slope_b, ordered[i + 1]->slope_a,
                           ordered[i + 1]->slope_b))
            throw std::logic_error("flanking_edge_sequence: slopes are not strictly decreasing");
    return seq;
}

FlankingSequence flanking_edge_sequence(const ContinuedFraction& cf, const std::vector<Int>& cuts) {
    return flanking_edge_sequence(cf, cuts, cuts);
}

std::vector<Int> pell_numbers(Int count) {
    std::vector<Int> u;
    if (count <= 0) return u;
    u.push_back(0);
    if (count == 1) return u;
    u.push_back(1);
    while (static_cast<Int>(u.size()) < count)
        u.push_back(2 * u[u.size() - 1] + u[u.size() - 2]);
    return u;
}

EdgeCountBound max_edges_bound(Int m) {
    if (m < 2) throw std::invalid_argument("max_edges_bound: needs m >= 2");
    EdgeCountBound out;
    Int u2 = 0, u1 = 1;  // U_{k-1}, U_k with k = 1
    Int k = 1;
    while (true) {
        Int next = 2 * u1 + u2;  // U_{k+1}
        if (next > m) break;
        u2 = u1;
        u1 = next;
        ++k;
    }
    out.exact = k - 1;  // max n with U_{n+1} <= m
    out.closed_form = std::log(4.0 * static_cast<double>(m) / std::sqrt(2.0)) /
                          std::log(1.0 + std::sqrt(2.0)) -
                      1.0;
    return out;
}

}  // namespace maxseg
