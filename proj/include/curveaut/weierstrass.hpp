#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "curveaut/errors.hpp"

namespace curveaut {

/// Gap sequence at a point of a genus-g curve: g strictly increasing
/// integers in [1, 2g-1] starting at 1 whose complement in the positive
/// integers is closed under addition.
struct GapSequence {
    int genus = 0;
    std::vector<int> gaps;

    /// Non-gaps on the window {1, ..., 2g} (the largest non-gap is 2g).
    std::vector<int> nongaps() const {
        std::vector<int> out;
        std::vector<bool> is_gap(2 * genus + 1, false);
        for (int n : gaps)
            if (n <= 2 * genus) is_gap[n] = true;
        for (int v = 1; v <= 2 * genus; ++v)
            if (!is_gap[v]) out.push_back(v);
        return out;
    }
};

/// Validity with a reason: all the defining invariants, with semigroup
/// closure checked on [1, 4g] (violations with generators <= 2g show there).
inline bool is_valid_gap_sequence(int g, const std::vector<int>& gaps, std::string* why = nullptr) {
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    if (g < 1) return fail("genus must be >= 1");
    if (static_cast<int>(gaps.size()) != g)
        return fail("expected exactly " + std::to_string(g) + " gaps");
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] < 1 || gaps[i] > 2 * g - 1)
            return fail("gap " + std::to_string(gaps[i]) + " outside [1, 2g-1]");
        if (i > 0 && gaps[i] <= gaps[i - 1]) return fail("gaps must be strictly increasing");
    }
    if (gaps[0] != 1) return fail("1 must be a gap");
    int window = 4 * g;
    std::vector<bool> gap_flag(window + 1, false);
    for (int n : gaps) gap_flag[n] = true;
    for (int a = 1; a <= window; ++a) {
        if (gap_flag[a]) continue;
        for (int b = a; a + b <= window; ++b) {
            if (gap_flag[b]) continue;
            if (gap_flag[a + b])
                return fail("non-gaps " + std::to_string(a) + " + " + std::to_string(b) +
                            " land on a gap");
        }
    }
    return true;
}

/// All valid gap sequences for genus g, lexicographic. The search walks the
/// integers 2..2g-1 deciding gap or non-gap, forcing non-gap whenever the
/// value is a sum of two smaller non-gaps.
inline std::vector<GapSequence> enumerate_gap_sequences(int g) {
    if (g < 1) throw parameter_error("enumerate_gap_sequences: genus must be >= 1");
    if (g > 16) throw resource_error("enumerate_gap_sequences: genus cap of 16 exceeded");
    std::vector<GapSequence> out;
    std::vector<int> gaps{1};
    std::vector<bool> nongap(2 * g + 1, false);
    auto rec = [&](auto&& self, int v) -> void {
        if (static_cast<int>(gaps.size()) > g) return;
        if (v == 2 * g) {
            if (static_cast<int>(gaps.size()) == g) {
                GapSequence s;
                s.genus = g;
                s.gaps = gaps;
                std::string why;
                if (is_valid_gap_sequence(g, gaps, &why)) out.push_back(std::move(s));
            }
            return;
        }
        bool forced_nongap = false;
        for (int a = 2; !forced_nongap && a + a <= v; ++a)
            if (nongap[a] && a < v && nongap[v - a]) forced_nongap = true;
        // taking v as a gap
        if (!forced_nongap && static_cast<int>(gaps.size()) < g) {
            gaps.push_back(v);
            self(self, v + 1);
            gaps.pop_back();
        }
        // taking v as a non-gap
        nongap[v] = true;
        self(self, v + 1);
        nongap[v] = false;
    };
    rec(rec, 2);
    std::sort(out.begin(), out.end(),
              [](const GapSequence& a, const GapSequence& b) { return a.gaps < b.gaps; });
    return out;
}

/// Weierstrass weight: sum of (n_i - i).
inline long long weight(const GapSequence& seq) {
    std::string why;
    if (!is_valid_gap_sequence(seq.genus, seq.gaps, &why))
        throw parameter_error("weight: invalid gap sequence: " + why);
    long long w = 0;
    for (std::size_t i = 0; i < seq.gaps.size(); ++i)
        w += seq.gaps[i] - static_cast<long long>(i + 1);
    return w;
}

/// The non-gap pairing bound alpha_j + alpha_{g-j} >= 2g for 0 < j < g
/// (a theorem; exposed so the property is machine-checked).
inline bool nongap_pairing_holds(const GapSequence& seq) {
    auto alpha = seq.nongaps();
    int g = seq.genus;
    if (static_cast<int>(alpha.size()) != g) return false;
    for (int j = 1; j < g; ++j)
        if (alpha[j - 1] + alpha[g - j - 1] < 2 * g) return false;
    return true;
}

struct WeierstrassPointBounds {
    long long lower = 0;        // 2g + 2, attained exactly by hyperelliptic curves
    long long upper = 0;        // g^3 - g
    long long total_weight = 0; // g^3 - g
};

inline WeierstrassPointBounds weierstrass_point_count_bounds(int g) {
    if (g < 2) throw parameter_error("weierstrass_point_count_bounds: genus must be >= 2");
    WeierstrassPointBounds b;
    long long gg = g;
    b.lower = 2 * gg + 2;
    b.upper = gg * gg * gg - gg;
    b.total_weight = b.upper;
    return b;
}

/// Genus bound from the Weierstrass normal form: g <= (n-1)(m-1)/2 for the
/// first non-gap m and the least non-gap n prime to m.
inline long long wnf_genus_bound(int m, int n) {
    if (m < 2 || n < 2) throw parameter_error("wnf_genus_bound: m, n must be >= 2");
    if (std::gcd(m, n) != 1) throw parameter_error("wnf_genus_bound: gcd(m, n) must be 1");
    long long prod = static_cast<long long>(n - 1) * (m - 1);
    return prod / 2;  // coprime m, n cannot both be even, so the product is even
}

}  // namespace curveaut
