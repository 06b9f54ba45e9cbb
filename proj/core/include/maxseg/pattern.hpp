#pragma once

#include <string>
#include <vector>

#include "maxseg/lattice.hpp"

namespace maxseg {

/// Simple continued fraction [0; u_1, ..., u_n] of a rational slope
/// 0 < a/b <= 1. Its depth n is the slope's complexity. The canonical
/// form has u_n >= 2 whenever n >= 2; every rational has exactly one
/// representation of each depth parity (the other one ends ..., u_n-1, 1).
struct ContinuedFraction {
    std::vector<Int> quotients;  // u_1..u_n, all >= 1
    Int a = 1;
    Int b = 1;

    Int depth() const { return static_cast<Int>(quotients.size()); }
    Int quotient(Int k) const { return quotients[static_cast<std::size_t>(k - 1)]; }  // u_k
    bool canonical() const { return depth() <= 1 || quotients.back() >= 2; }
    ContinuedFraction parity_flipped() const;
};

/// Canonical decomposition by the Euclidean algorithm.
/// Requires 0 < a <= b and gcd(a,b) = 1.
ContinuedFraction cf_decompose(Int a, Int b);
/// Builds a (possibly non-canonical) fraction from explicit quotients.
ContinuedFraction cf_from_quotients(std::vector<Int> quotients);

struct Convergent {
    Int p = 0;
    Int q = 1;
};

/// Convergents p_k/q_k for k = 0..n, with the recurrence
/// (p_k, q_k) = u_k (p_{k-1}, q_{k-1}) + (p_{k-2}, q_{k-2}) and the
/// determinant identity p_k q_{k-1} - p_{k-1} q_k = (-1)^{k+1}.
struct ConvergentTable {
    std::vector<Convergent> rows;  // index k, k = 0..n

    Convergent at(Int k) const {  // supports k = -1 with (p,q) = (1,0)
        if (k == -1) return {1, 0};
        return rows[static_cast<std::size_t>(k)];
    }
    Int depth() const { return static_cast<Int>(rows.size()) - 1; }
};

ConvergentTable convergents(const ContinuedFraction& cf);

/// Freeman word of the digital line between two consecutive upper leaning
/// points, over {'0','1'} in the first octant: b zeros and a ones.
struct PatternWord {
    std::string word;
    Int a = 0;
    Int b = 1;
};

/// E(z_k) series: E(z_0) = "0", E(z_1) = 0^{u_1} 1,
/// E(z_{2i+1}) = E(z_{2i})^{u_{2i+1}} E(z_{2i-1}),
/// E(z_{2i})   = E(z_{2i-2}) E(z_{2i-1})^{u_{2i}}.
/// Index k = 0..n; pattern_word returns E(z_n).
std::vector<std::string> pattern_word_series(const ContinuedFraction& cf);
PatternWord pattern_word(const ContinuedFraction& cf);
/// Slope 0 maps to "0"; slope 1 to "01"; others go through cf_decompose.
PatternWord pattern_word_for_slope(Int a, Int b);
/// The word between consecutive lower leaning points: the pattern reversed.
PatternWord reversed_pattern(const ContinuedFraction& cf);

/// Embeds a word from `origin`, one lattice point per prefix.
std::vector<LatticePoint> embed_word(const std::string& word, LatticePoint origin = {0, 0});

/// Displacements U1->L1 and L1->U2 between the principal leaning points of
/// the pattern's DSS (a,b,0), by the closed forms branching on the depth
/// parity. Their sum is always (b,a). Requires depth >= 1.
struct LeaningVectors {
    LatticeVector u1_to_l1;
    LatticeVector l1_to_u2;
};
LeaningVectors leaning_vectors(const ContinuedFraction& cf);

/// Left factor of [U1 L1] and right factor of [L1 U2] as literal words:
/// odd depth n=2i+1: E(z_{2i})^{u_{2i+1}-1} and E(z_{2i-1})^{u_{2i}};
/// even depth n=2i:  E(z_{2i-2})^{u_{2i-1}} and E(z_{2i-1})^{u_{2i}-1}.
/// Requires depth >= 2.
struct FactorStructure {
    std::string left_factor_of_u1l1;
    std::string right_factor_of_l1u2;
};
FactorStructure factor_structure(const ContinuedFraction& cf);

enum class FlankSide { left_r, right_l };

/// A strict factor of a pattern usable as a digital edge flanking it:
/// R on the left of the pattern, L on the right.
struct FlankingEdge {
    std::string word;
    FlankSide side = FlankSide::left_r;
    Int rank = 1;
    Int complexity = 0;      // per the construction tables
    Int slope_a = 0;         // reduced slope of the word
    Int slope_b = 1;
    Int multiplicity = 1;    // the word is this power of its pattern
};

/// Rank-1 flanking factor with the top quotient cut by `cut`
/// (1 <= cut <= u_n - 1):
/// odd n:  R = E(z_{n-1})^{u_n - cut} E(z_{n-2}),  L = E(z_{n-1})^{u_n - cut};
/// even n: R = E(z_{n-1})^{u_n - cut},             L = E(z_{n-2}) E(z_{n-1})^{u_n - cut}.
/// Verifies on return: [R P], [P L], [R P L] are DSS of the pattern's
/// slope, R/L are pattern powers, the concatenations are not, and
/// slope(R) > slope(P) > slope(L).
FlankingEdge flanking_factors(const ContinuedFraction& cf, FlankSide side, Int cut);

/// The full flanking sequences (R_k) and (L_k), k = 1..n, rank k cutting
/// quotient u_{n+1-k}; ranks whose quotient is < 2 are skipped. Verifies
/// that [R_n...R_1 E L_1...L_n] is a DSS of the pattern's slope with all
/// upper leaning points on E and strictly decreasing edge slopes.
struct FlankingSequence {
    std::vector<FlankingEdge> right_of_center;  // R_1..R_n order (adjacent to E first)
    std::vector<FlankingEdge> left_of_center;   // L_1..L_n
};
FlankingSequence flanking_edge_sequence(const ContinuedFraction& cf, const std::vector<Int>& r_cuts,
                                        const std::vector<Int>& l_cuts, Int center_multiplicity = 1);
FlankingSequence flanking_edge_sequence(const ContinuedFraction& cf, const std::vector<Int>& cuts);

/// Pell numbers U_0 = 0, U_1 = 1, U_k = 2 U_{k-1} + U_{k-2}: denominators
/// of the convergents of [0; 2, 2, ...], the shortest slopes of given
/// complexity.
std::vector<Int> pell_numbers(Int count);

/// Largest complexity n whose shortest supporting-edge pattern fits an
/// m x m grid: exact = max { n : U_{n+1} <= m }, and the closed-form
/// estimate log(4m/sqrt(2)) / log(1+sqrt(2)) - 1. Requires m >= 2.
struct EdgeCountBound {
    Int exact = 0;
    double closed_form = 0.0;
};
EdgeCountBound max_edges_bound(Int m);

}  // namespace maxseg
