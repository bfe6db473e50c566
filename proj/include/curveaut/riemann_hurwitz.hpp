#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "curveaut/errors.hpp"
#include "curveaut/rational.hpp"
#include "curveaut/signature.hpp"

namespace curveaut {

/// Genus from the Riemann-Hurwitz formula
///   g - 1 = n (g0 - 1) + (n/2) sum (1 - 1/m_j)
/// as an exact rational; callers decide what to do with non-integers.
inline Rat rh_genus(const Signature& sig, long long order) {
    if (order < 1) throw parameter_error("rh_genus: order must be >= 1");
    Rat g(order * (sig.orbit_genus - 1) + 1);
    for (int m : sig.periods) g += Rat(order, 2) * Rat(m - 1, m);
    return g;
}

/// All canonical signatures with periods drawn from `allowed_periods` whose
/// RH genus for the given order is exactly `genus`. Complete and finite: each
/// period term contributes at least 1/2 to the fixed branch sum.
inline std::vector<Signature> enumerate_signatures(int genus, long long order,
                                                   const std::set<int>& allowed_periods) {
    if (genus < 2) throw parameter_error("enumerate_signatures: genus must be >= 2");
    std::vector<int> ms(allowed_periods.begin(), allowed_periods.end());
    for (int m : ms)
        if (m < 2) throw parameter_error("enumerate_signatures: periods must be >= 2");
    std::vector<Signature> out;
    // n(g0 - 1) <= g - 1  =>  g0 <= (g-1)/n + 1
    for (int g0 = 0; static_cast<long long>(g0 - 1) * order <= genus - 1; ++g0) {
        // required branch sum S = sum (1 - 1/m_j)
        Rat S = (Rat(genus - 1) - Rat(order * (g0 - 1))) * Rat(2, order);
        if (S < Rat(0)) continue;
        std::vector<int> current;
        auto rec = [&](auto&& self, Rat remaining, std::size_t min_idx) -> void {
            if (remaining == Rat(0)) {
                out.emplace_back(g0, current);
                return;
            }
            for (std::size_t i = min_idx; i < ms.size(); ++i) {
                Rat term(ms[i] - 1, ms[i]);
                if (term > remaining) break;  // (m-1)/m grows with m
                current.push_back(ms[i]);
                self(self, remaining - term, i);
                current.pop_back();
            }
        };
        rec(rec, S, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// covers with explicit ramification data (tame and wild)

struct RamifiedPlace {
    long long e = 1;       // ramification index
    long long q = 1;       // wild part: 1 if tame, else a power of char dividing e
    long long d_place = 1; // degree of the base place
    long long count = 1;   // multiplicity of identical places
    // explicit different exponent; when absent the tame/wild rule applies
    // (beta = e - 1 tame, beta = e* q + q - 2 wild, e = e* q)
    std::optional<long long> different_exponent;
};

struct CoverData {
    long long degree = 1;
    int base_genus = 0;
    std::vector<RamifiedPlace> ramified_places;
};

inline long long different_exponent_of(const RamifiedPlace& p, long long characteristic_hint = 0) {
    if (p.e < 1) throw parameter_error("cover place: ramification index must be >= 1");
    if (p.different_exponent) {
        long long b = *p.different_exponent;
        if (p.q == 1 && b != p.e - 1)
            throw parameter_error("cover place: tame place must have different exponent e - 1");
        if (p.q > 1 && b < p.e)
            throw parameter_error("cover place: wild place needs different exponent >= e");
        return b;
    }
    if (p.q == 1) return p.e - 1;
    if (p.e % p.q != 0)
        throw parameter_error("cover place: wild part q must divide e");
    long long estar = p.e / p.q;
    if ((p.q - 1) % estar != 0)
        throw parameter_error("cover place: wild case requires e/q dividing q - 1");
    (void)characteristic_hint;
    return estar * p.q + p.q - 2;
}

/// Genus of the cover from 2(gK - 1) = 2(gE - 1) |G| + |G| sum (beta_i / e_i) d_i.
inline Rat cover_genus(const CoverData& c) {
    if (c.degree < 1) throw parameter_error("cover_genus: degree must be >= 1");
    Rat twog2(2 * (c.base_genus - 1) * c.degree);
    for (const auto& p : c.ramified_places) {
        long long beta = different_exponent_of(p);
        twog2 += Rat(c.degree) * Rat(beta, p.e) * Rat(p.d_place) * Rat(p.count);
    }
    return twog2 * Rat(1, 2) + Rat(1);
}

// ---------------------------------------------------------------------------
// classical bounds

inline long long hurwitz_bound(int g) {
    if (g < 2) throw parameter_error("hurwitz_bound: genus must be >= 2");
    return 84LL * (g - 1);
}

inline long long wiman_bound(int g) {
    if (g < 2) throw parameter_error("wiman_bound: genus must be >= 2");
    return 2LL * (2 * g + 1);
}

inline long long poschar_bound(int g) {
    if (g < 2) throw parameter_error("poschar_bound: genus must be >= 2");
    long long gg = g;
    return 16LL * gg * gg * gg * gg;
}

inline long long large_group_threshold(int g) {
    if (g < 2) throw parameter_error("large_group_threshold: genus must be >= 2");
    return 4LL * (g - 1);
}

/// Bound on the order of a single automorphism in characteristic p > 0.
inline long long poschar_element_order_bound(int g, long long p) {
    if (g < 2) throw parameter_error("poschar_element_order_bound: genus must be >= 2");
    if (p < 2) throw parameter_error("poschar_element_order_bound: characteristic must be >= 2");
    long long w = 2 * g + 1;
    return 2 * p * (g + 1) * w * w;
}

// ---------------------------------------------------------------------------
// exceptional families with very large automorphism groups

struct ExceptionalFamily {
    std::string name;   // Henn-i, Henn-ii, Henn-iii, Henn-iv, Stichtenoth
    std::string curve;  // defining equation, for reports
    std::string group;  // structure description
    long long p = 0;
    std::vector<long long> params;  // family parameters, see name
    long long genus = 0;
    long long group_order = 0;      // 0 when the family only pins the group up to choices
};

namespace detail {
inline bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}
}  // namespace detail

/// Every parameter instance with 2 <= genus <= max_genus of the families
/// that beat the generic positive-characteristic bounds.
inline std::vector<ExceptionalFamily> exceptional_families(int max_genus) {
    if (max_genus < 2) throw parameter_error("exceptional_families: max_genus must be >= 2");
    std::vector<ExceptionalFamily> out;
    // Henn i: p=2, g = 2^(k-1), |G| = 2^(2k+1) (2^k + 1)
    for (long long k = 2;; ++k) {
        long long g = 1LL << (k - 1);
        if (g > max_genus) break;
        ExceptionalFamily f;
        f.name = "Henn-i";
        f.curve = "y^2 + y + x^(2^k+1) = 0";
        f.group = "order 2^(2k+1)(2^k+1)";
        f.p = 2;
        f.params = {k};
        f.genus = g;
        f.group_order = (1LL << (2 * k + 1)) * ((1LL << k) + 1);
        out.push_back(std::move(f));
    }
    // Henn ii: p > 2, q = p^m, g = (q-1)/2, reduced group PSL(2,q) or PGL(2,q)
    for (long long q = 3; (q - 1) / 2 <= max_genus; q += 2) {
        long long base = q;
        long long p = 0;
        for (long long d = 2; d * d <= base; ++d)
            if (base % d == 0) { p = d; break; }
        if (p == 0) p = base;
        long long t = base;
        while (t % p == 0) t /= p;
        if (t != 1 || p == 2) continue;  // q must be an odd prime power
        long long g = (q - 1) / 2;
        if (g < 2) continue;
        ExceptionalFamily f;
        f.name = "Henn-ii";
        f.curve = "y^2 = x^q - x";
        f.group = "reduced group PSL(2,q) or PGL(2,q)";
        f.p = p;
        f.params = {q};
        f.genus = g;
        f.group_order = 2 * q * (q * q - 1);  // the PGL lift
        out.push_back(std::move(f));
    }
    // Henn iii (Hermitian): g = (q^2 - q)/2, G = PSU(3,q) or PGU(3,q)
    for (long long q = 2; q * (q - 1) / 2 <= max_genus; ++q) {
        long long base = q, p = 0;
        for (long long d = 2; d * d <= base; ++d)
            if (base % d == 0) { p = d; break; }
        if (p == 0) p = base;
        long long t = base;
        while (t % p == 0) t /= p;
        if (t != 1) continue;
        long long g = q * (q - 1) / 2;
        if (g < 2) continue;
        ExceptionalFamily f;
        f.name = "Henn-iii";
        f.curve = "y^q + y = x^(q+1)";
        f.group = "PSU(3,q) or PGU(3,q)";
        f.p = p;
        f.params = {q};
        f.genus = g;
        f.group_order = q * q * q * (q * q * q + 1) * (q * q - 1);  // |PGU(3,q)|
        out.push_back(std::move(f));
    }
    // Henn iv (Suzuki): p=2, q0 = 2^r, q = 2 q0^2, g = q0 (q - 1)
    for (long long r = 1;; ++r) {
        long long q0 = 1LL << r;
        long long q = 2 * q0 * q0;
        long long g = q0 * (q - 1);
        if (g > max_genus) break;
        ExceptionalFamily f;
        f.name = "Henn-iv";
        f.curve = "y^q + y = x^q0 (x^q + x)";
        f.group = "Sz(q)";
        f.p = 2;
        f.params = {q0, q};
        f.genus = g;
        f.group_order = q * q * (q * q + 1) * (q - 1);  // |Sz(q)|
        out.push_back(std::move(f));
    }
    // Stichtenoth: g = p^n (p^n - 1)/2, |Aut| = p^(3n) (p^(3n) + 1)(p^(2n) - 1)
    for (long long p = 2; p * (p - 1) / 2 <= max_genus; ++p) {
        if (!detail::is_prime_ll(p)) continue;
        for (long long n = 1;; ++n) {
            long long q = 1;
            for (long long i = 0; i < n; ++i) q *= p;
            long long g = q * (q - 1) / 2;
            if (g > max_genus) break;
            if (g < 2) continue;
            ExceptionalFamily f;
            f.name = "Stichtenoth";
            f.curve = "y^(p^n) + y = x^(p^(n+1))";
            f.group = "full automorphism group of the Stichtenoth curve";
            f.p = p;
            f.params = {p, n};
            f.genus = g;
            long long q3 = q * q * q, q2 = q * q;
            f.group_order = q3 * (q3 + 1) * (q2 - 1);
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end(), [](const ExceptionalFamily& a, const ExceptionalFamily& b) {
        if (a.genus != b.genus) return a.genus < b.genus;
        return a.name < b.name;
    });
    return out;
}

}  // namespace curveaut
