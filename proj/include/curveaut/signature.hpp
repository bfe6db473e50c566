#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "curveaut/errors.hpp"
#include "curveaut/rational.hpp"

namespace curveaut {

/// Signature (g0; m1, ..., mr) of a group action / Fuchsian group: orbit
/// genus plus branch orders. Canonical form keeps the periods sorted
/// ascending; an empty period list is legal and prints as "g0;-".
struct Signature {
    int orbit_genus = 0;
    std::vector<int> periods;

    Signature() = default;
    Signature(int g0, std::vector<int> ms) : orbit_genus(g0), periods(std::move(ms)) {
        for (int m : periods)
            if (m < 2) throw parameter_error("signature periods must be >= 2");
        if (g0 < 0) throw parameter_error("orbit genus must be nonnegative");
    }

    Signature canonical() const {
        Signature s = *this;
        std::sort(s.periods.begin(), s.periods.end());
        return s;
    }

    int r() const { return static_cast<int>(periods.size()); }

    bool operator==(const Signature& o) const {
        Signature a = canonical(), b = o.canonical();
        return a.orbit_genus == b.orbit_genus && a.periods == b.periods;
    }
    bool operator!=(const Signature& o) const { return !(*this == o); }
    bool operator<(const Signature& o) const {
        Signature a = canonical(), b = o.canonical();
        if (a.orbit_genus != b.orbit_genus) return a.orbit_genus < b.orbit_genus;
        if (a.periods.size() != b.periods.size()) return a.periods.size() < b.periods.size();
        return a.periods < b.periods;
    }

    /// Hyperbolic area measure 2 g0 - 2 + sum (1 - 1/m). Positive exactly for
    /// the signatures of genus >= 2 actions.
    Rat measure() const {
        Rat s(2 * orbit_genus - 2);
        for (int m : periods) s += Rat(m - 1, m);
        return s;
    }

    std::string str() const {
        std::string out = std::to_string(orbit_genus) + ";";
        if (periods.empty()) return out + "-";
        for (std::size_t i = 0; i < periods.size(); ++i)
            out += (i ? "," : "") + std::to_string(periods[i]);
        return out;
    }
};

/// Parse "g0;m1,m2,...,mr" or "g0;-".
inline Signature parse_signature(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw data_error("signature '" + text + "': expected 'g0;m1,...,mr' or 'g0;-'");
    int g0;
    try {
        std::size_t used = 0;
        g0 = std::stoi(text.substr(0, semi), &used);
        if (used != semi) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw data_error("signature '" + text + "': bad orbit genus");
    }
    std::string rest = text.substr(semi + 1);
    std::vector<int> periods;
    if (rest != "-" && !rest.empty()) {
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                int m = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("");
                periods.push_back(m);
            } catch (const std::exception&) {
                throw data_error("signature '" + text + "': bad period '" + tok + "'");
            }
        }
    }
    try {
        return Signature(g0, std::move(periods));
    } catch (const parameter_error& e) {
        throw data_error("signature '" + text + "': " + e.what());
    }
}

}  // namespace curveaut
