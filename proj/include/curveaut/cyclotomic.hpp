#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "curveaut/errors.hpp"
#include "curveaut/rational.hpp"

namespace curveaut {

/// Integer polynomial division helpers for building cyclotomic polynomials.
namespace cyclo_detail {

using ZPoly = std::vector<std::int64_t>;  // coefficient vector, index = degree

inline ZPoly zp_trim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

/// Exact division of integer polynomials (caller guarantees divisibility
/// and a monic divisor).
inline ZPoly zp_divide_exact(ZPoly num, const ZPoly& den) {
    num = zp_trim(num);
    ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    while (num.size() >= den.size() && !num.empty()) {
        std::int64_t c = num.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        num = zp_trim(num);
    }
    if (!num.empty()) throw internal_error("zp_divide_exact: nonzero remainder");
    return q;
}

/// N-th cyclotomic polynomial, computed as (x^N - 1) / prod of proper ones.
inline const ZPoly& cyclotomic_polynomial(int n) {
    static std::map<int, ZPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ZPoly num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = zp_divide_exact(num, cyclotomic_polynomial(d));
    return cache.emplace(n, zp_trim(num)).first->second;
}

}  // namespace cyclo_detail

/// Element of Q(zeta_N) as a rational coefficient vector over the power basis
/// 1, zeta, ..., zeta^(phi(N)-1), reduced modulo the N-th cyclotomic
/// polynomial. Arithmetic is exact.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), coeffs_(1, Rat(0)) {}

    explicit Cyclotomic(int n, Rat constant = Rat(0)) : n_(n) {
        coeffs_.assign(degree_of(n), Rat(0));
        if (!coeffs_.empty()) coeffs_[0] = constant;
    }

    /// zeta_N^k
    static Cyclotomic root_of_unity(int n, long long k) {
        Cyclotomic z(n);
        k %= n;
        if (k < 0) k += n;
        std::vector<Rat> raw(static_cast<std::size_t>(k) + 1, Rat(0));
        raw[static_cast<std::size_t>(k)] = Rat(1);
        z.coeffs_ = reduce(n, raw);
        return z;
    }

    static Cyclotomic from_integer_coeffs(int n, const std::vector<std::int64_t>& c) {
        Cyclotomic z(n);
        std::vector<Rat> raw(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) raw[i] = Rat(c[i]);
        z.coeffs_ = reduce(n, raw);
        return z;
    }

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const Rat& c : coeffs_)
            if (c != Rat(0)) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != Rat(0)) return false;
        return true;
    }

    Rat rational_value() const {
        if (!is_rational()) throw internal_error("Cyclotomic: value is not rational");
        return coeffs_.empty() ? Rat(0) : coeffs_[0];
    }

    Cyclotomic operator+(const Cyclotomic& o) const {
        check_same_field(o);
        Cyclotomic r(n_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return r;
    }

    Cyclotomic operator-(const Cyclotomic& o) const {
        check_same_field(o);
        Cyclotomic r(n_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return r;
    }

    Cyclotomic operator*(const Cyclotomic& o) const {
        check_same_field(o);
        std::vector<Rat> raw(coeffs_.size() + o.coeffs_.size(), Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == Rat(0)) continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                raw[i + j] += coeffs_[i] * o.coeffs_[j];
        }
        Cyclotomic r(n_);
        r.coeffs_ = reduce(n_, raw);
        return r;
    }

    Cyclotomic operator*(const Rat& s) const {
        Cyclotomic r = *this;
        for (Rat& c : r.coeffs_) c *= s;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const { return n_ == o.n_ && coeffs_ == o.coeffs_; }

    /// Complex conjugation: zeta -> zeta^(N-1).
    Cyclotomic conjugate() const {
        std::vector<Rat> raw(static_cast<std::size_t>(n_), Rat(0));
        // coefficient at zeta^i moves to zeta^(N - i mod N)
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == Rat(0)) continue;
            std::size_t e = i == 0 ? 0 : static_cast<std::size_t>(n_) - i;
            if (raw.size() <= e) raw.resize(e + 1, Rat(0));
            raw[e] += coeffs_[i];
        }
        Cyclotomic r(n_);
        r.coeffs_ = reduce(n_, raw);
        return r;
    }

    static std::size_t degree_of(int n) {
        return cyclo_detail::cyclotomic_polynomial(n).size() - 1;
    }

private:
    void check_same_field(const Cyclotomic& o) const {
        if (n_ != o.n_) throw internal_error("Cyclotomic: mixed conductors");
    }

    /// Reduce a raw coefficient vector modulo Phi_N.
    static std::vector<Rat> reduce(int n, std::vector<Rat> raw) {
        const auto& phi = cyclo_detail::cyclotomic_polynomial(n);
        std::size_t deg = phi.size() - 1;
        while (raw.size() > deg) {
            Rat c = raw.back();
            if (c != Rat(0)) {
                std::size_t shift = raw.size() - 1 - deg;
                for (std::size_t i = 0; i < deg; ++i)
                    raw[shift + i] -= c * Rat(phi[i]);
            }
            raw.pop_back();
        }
        raw.resize(deg, Rat(0));
        return raw;
    }

    int n_;
    std::vector<Rat> coeffs_;
};

}  // namespace curveaut
