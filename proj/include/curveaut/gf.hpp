#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curveaut/errors.hpp"

namespace curveaut {

/// Finite field F_{p^s} with table-driven arithmetic. Elements are encoded
/// as integers in [0, p^s): the base-p digits are the coefficients over the
/// power basis of the defining root. The defining polynomial is the
/// lexicographically least monic irreducible of degree s, so every context
/// for the same (p, s) is identical.
class GF {
public:
    GF(int p, int s = 1) : p_(p), s_(s) {
        if (p < 2 || s < 1) throw parameter_error("GF: need a prime p >= 2 and s >= 1");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw parameter_error("GF: characteristic must be prime");
        q_ = 1;
        for (int i = 0; i < s; ++i) {
            q_ *= p;
            if (q_ > 4096) throw resource_error("GF: field size exceeds cap of 4096");
        }
        defining_ = find_defining_polynomial();
        build_tables();
    }

    int p() const { return p_; }
    int s() const { return s_; }
    int q() const { return static_cast<int>(q_); }
    const std::vector<int>& defining_polynomial() const { return defining_; }

    int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const {
        if (a == 0) throw parameter_error("GF: inverse of zero");
        return inv_[a];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }

    int pow(int a, long long e) const {
        if (a == 0) {
            if (e == 0) return 1;
            if (e < 0) throw parameter_error("GF: negative power of zero");
            return 0;
        }
        long long m = q_ - 1;
        e %= m;
        if (e < 0) e += m;
        int acc = 1, base = a;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    /// An integer (image of 1+1+...) as a field element.
    int from_int(long long n) const {
        long long r = n % p_;
        if (r < 0) r += p_;
        return static_cast<int>(r);
    }

    /// The multiplicative order of a nonzero element.
    int mult_order(int a) const {
        if (a == 0) throw parameter_error("GF: order of zero");
        int x = a, k = 1;
        while (x != 1) {
            x = mul(x, a);
            ++k;
        }
        return k;
    }

    /// Least generator of the multiplicative group (by element code).
    int primitive_element() const {
        for (int a = 2; a < q(); ++a)
            if (mult_order(a) == q() - 1) return a;
        if (q() == 2) return 1;
        throw internal_error("GF: no primitive element found");
    }

    /// Primitive m-th root of unity; requires m | q - 1.
    int root_of_unity(int m) const {
        if (m <= 0 || (q() - 1) % m != 0)
            throw parameter_error("GF(" + std::to_string(p_) + "^" + std::to_string(s_) +
                                  "): no primitive " + std::to_string(m) + "-th root of unity");
        if (m == 1) return 1;
        return pow(primitive_element(), (q() - 1) / m);
    }

    /// Elements of the subfield F_{p^t} (requires t | s): fixed points of the
    /// t-fold Frobenius.
    std::vector<int> subfield_elements(int t) const {
        if (t < 1 || s_ % t != 0) throw parameter_error("GF: subfield degree must divide s");
        long long pt = 1;
        for (int i = 0; i < t; ++i) pt *= p_;
        std::vector<int> out;
        for (int a = 0; a < q(); ++a)
            if (pow(a, pt) == a) out.push_back(a);
        if (static_cast<long long>(out.size()) != pt)
            throw internal_error("GF: subfield has wrong size");
        return out;
    }

    std::string str() const {
        return s_ == 1 ? "F" + std::to_string(p_)
                       : "F" + std::to_string(p_) + "^" + std::to_string(s_);
    }

private:
    // F_p[x] helpers on digit vectors used only during construction
    std::vector<int> fp_mul(const std::vector<int>& a, const std::vector<int>& b) const {
        std::vector<int> c(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
        return c;
    }

    std::vector<int> fp_mod(std::vector<int> a, const std::vector<int>& f) const {
        // f monic
        while (a.size() >= f.size()) {
            int c = a.back();
            if (c != 0) {
                std::size_t shift = a.size() - f.size();
                for (std::size_t i = 0; i < f.size(); ++i)
                    a[shift + i] = ((a[shift + i] - c * f[i]) % p_ + p_) % p_;
            }
            a.pop_back();
        }
        return a;
    }

    bool fp_is_irreducible(const std::vector<int>& f) const {
        // f monic of degree s; irreducible iff gcd(x^(p^i) - x, f) = 1 for
        // i <= s/2 and x^(p^s) = x mod f
        int deg = static_cast<int>(f.size()) - 1;
        auto xq = [&](int e) {
            // x^(p^e) mod f by repeated p-th powers
            std::vector<int> r{0, 1};
            for (int i = 0; i < e; ++i) {
                std::vector<int> acc{1};
                std::vector<int> base = r;
                int ee = p_;
                while (ee) {
                    if (ee & 1) acc = fp_mod(fp_mul(acc, base), f);
                    base = fp_mod(fp_mul(base, base), f);
                    ee >>= 1;
                }
                r = acc;
            }
            return r;
        };
        auto trim = [](std::vector<int> v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
            return v;
        };
        auto fp_gcd = [&](std::vector<int> a, std::vector<int> b) {
            a = trim(a);
            b = trim(b);
            while (!b.empty()) {
                // a mod b with b made monic
                int lead = b.back();
                int li = 1;
                for (int t = 1; t < p_; ++t)
                    if (lead * t % p_ == 1) { li = t; break; }
                std::vector<int> bm = b;
                for (int& c : bm) c = c * li % p_;
                while (a.size() >= bm.size() && !a.empty()) {
                    int c = a.back();
                    if (c != 0) {
                        std::size_t shift = a.size() - bm.size();
                        for (std::size_t i = 0; i < bm.size(); ++i)
                            a[shift + i] = ((a[shift + i] - c * bm[i]) % p_ + p_) % p_;
                    }
                    a.pop_back();
                    a = trim(a);
                }
                std::swap(a, b);
                b = trim(b);
            }
            return trim(a);
        };
        for (int i = 1; i <= deg / 2; ++i) {
            std::vector<int> xi = xq(i);
            // x^(p^i) - x
            if (xi.size() < 2) xi.resize(2, 0);
            xi[1] = ((xi[1] - 1) % p_ + p_) % p_;
            auto gstar = fp_gcd(xi, f);
            if (!(gstar.size() == 1)) return false;
        }
        std::vector<int> xs = xq(deg);
        if (xs.size() < 2) xs.resize(2, 0);
        xs[1] = ((xs[1] - 1) % p_ + p_) % p_;
        xs = trim(xs);
        return xs.empty();
    }

    std::vector<int> find_defining_polynomial() const {
        if (s_ == 1) return {0, 1};  // unused
        // lexicographically least monic irreducible: enumerate constant terms首
        long long count = 1;
        for (int i = 0; i < s_; ++i) count *= p_;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> f(s_ + 1, 0);
            long long c = code;
            for (int i = 0; i < s_; ++i) {
                f[i] = static_cast<int>(c % p_);
                c /= p_;
            }
            f[s_] = 1;
            if (fp_is_irreducible(f)) return f;
        }
        throw internal_error("GF: no irreducible polynomial found");
    }

    void build_tables() {
        int q = static_cast<int>(q_);
        add_.resize(static_cast<std::size_t>(q) * q);
        mul_.resize(static_cast<std::size_t>(q) * q);
        neg_.resize(q);
        inv_.assign(q, 0);
        auto digits = [&](int a) {
            std::vector<int> d(s_);
            for (int i = 0; i < s_; ++i) {
                d[i] = a % p_;
                a /= p_;
            }
            return d;
        };
        auto encode = [&](const std::vector<int>& d) {
            int a = 0;
            for (int i = s_ - 1; i >= 0; --i) a = a * p_ + (i < static_cast<int>(d.size()) ? d[i] : 0);
            return a;
        };
        for (int a = 0; a < q; ++a) {
            auto da = digits(a);
            std::vector<int> dn(s_);
            for (int i = 0; i < s_; ++i) dn[i] = (p_ - da[i]) % p_;
            neg_[a] = encode(dn);
            for (int b = 0; b < q; ++b) {
                auto db = digits(b);
                std::vector<int> dsum(s_);
                for (int i = 0; i < s_; ++i) dsum[i] = (da[i] + db[i]) % p_;
                add_[static_cast<std::size_t>(a) * q + b] = encode(dsum);
                std::vector<int> prod = fp_mul(da, db);
                if (s_ > 1) prod = fp_mod(std::move(prod), defining_);
                else {
                    prod[0] %= p_;
                    prod.resize(1);
                }
                mul_[static_cast<std::size_t>(a) * q + b] = encode(prod);
            }
        }
        for (int a = 1; a < q; ++a)
            for (int b = 1; b < q; ++b)
                if (mul(a, b) == 1) {
                    inv_[a] = b;
                    break;
                }
    }

    int p_, s_;
    long long q_;
    std::vector<int> defining_;  // monic, degree s, coefficients in F_p
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Parse a field spec "p" or "p^s".
inline std::pair<int, int> parse_field_spec(const std::string& text) {
    auto caret = text.find('^');
    try {
        if (caret == std::string::npos) return {std::stoi(text), 1};
        return {std::stoi(text.substr(0, caret)), std::stoi(text.substr(caret + 1))};
    } catch (const std::exception&) {
        throw data_error("bad field spec '" + text + "' (expected p or p^s)");
    }
}

// ---------------------------------------------------------------------------
// univariate polynomials over GF

/// Dense polynomial; index = degree. The zero polynomial is the empty vector.
class Poly {
public:
    Poly() = default;
    Poly(const GF* f, std::vector<int> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }
    static Poly zero(const GF& f) { return Poly(&f, {}); }
    static Poly constant(const GF& f, int value) { return Poly(&f, {value}); }
    static Poly x(const GF& f) { return Poly(&f, {0, 1}); }
    static Poly monomial(const GF& f, int coeff, int degree) {
        std::vector<int> c(degree + 1, 0);
        c[degree] = coeff;
        return Poly(&f, std::move(c));
    }

    const GF& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    int leading() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<int>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const {
        std::vector<int> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return Poly(f_, std::move(r));
    }
    Poly operator-(const Poly& o) const {
        std::vector<int> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = f_->sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
        return Poly(f_, std::move(r));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly(f_, {});
        std::vector<int> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
        }
        return Poly(f_, std::move(r));
    }
    Poly scaled(int k) const {
        std::vector<int> r = c_;
        for (int& v : r) v = f_->mul(v, k);
        return Poly(f_, std::move(r));
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly pow(long long e) const {
        Poly acc = Poly::constant(*f_, 1);
        Poly base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    /// Quotient and remainder.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw parameter_error("Poly: division by zero polynomial");
        Poly r = *this;
        std::vector<int> q(std::max<int>(0, degree() - d.degree() + 1), 0);
        int dinv = f_->inv(d.leading());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int c = f_->mul(r.leading(), dinv);
            int shift = r.degree() - d.degree();
            q[shift] = c;
            std::vector<int> rc = r.c_;
            for (int i = 0; i <= d.degree(); ++i)
                rc[shift + i] = f_->sub(rc[shift + i], f_->mul(c, d.coeff(i)));
            r = Poly(f_, std::move(rc));
        }
        return {Poly(f_, std::move(q)), r};
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(f_, {});
        std::vector<int> r(c_.size() - 1, 0);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            int k = f_->from_int(static_cast<long long>(i));
            r[i - 1] = f_->mul(c_[i], k);
        }
        return Poly(f_, std::move(r));
    }

    int eval(int x) const {
        int acc = 0;
        for (int i = degree(); i >= 0; --i) acc = f_->add(f_->mul(acc, x), c_[i]);
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(f_->inv(leading()));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += std::to_string(c_[i]);
            if (i > 0) out += "*x^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const GF* f_ = nullptr;
    std::vector<int> c_;
};

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

/// p-th root of a polynomial whose derivative vanishes: f(x) = g(x^p) with
/// g's coefficients the p-th roots (Frobenius inverses) of f's.
inline Poly poly_pth_root(const Poly& f) {
    const GF& k = f.field();
    int p = k.p();
    std::vector<int> g;
    for (int i = 0; i <= f.degree(); i += p) {
        // a^(1/p) = a^(q/p) in F_q
        long long e = k.q() / p;
        g.push_back(k.pow(f.coeff(i), e));
    }
    return Poly(&k, std::move(g));
}

/// Squarefree decomposition in characteristic p: returns (multiplicity,
/// factor) pairs with the factors squarefree, pairwise coprime, and
/// f = lc * prod factor^multiplicity.
inline std::vector<std::pair<long long, Poly>> squarefree_decomposition(const Poly& f0) {
    std::vector<std::pair<long long, Poly>> out;
    if (f0.is_zero()) throw parameter_error("squarefree_decomposition: zero polynomial");
    Poly f = f0.monic();
    if (f.degree() == 0) return out;
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        // f = g(x^p) = (pth root)^p
        Poly g = poly_pth_root(f);
        auto sub = squarefree_decomposition(g);
        for (auto& [m, q] : sub) out.push_back({m * f.field().p(), q});
        return out;
    }
    Poly c = poly_gcd(f, fp);
    Poly w = f.divmod(c).first;  // product of squarefree parts with p-coprime multiplicity
    long long i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = w.divmod(y).first;
        if (z.degree() > 0) out.push_back({i, z.monic()});
        c = c.divmod(y).first;
        w = y;
        ++i;
    }
    if (c.degree() > 0) {
        // remaining part has all multiplicities divisible by p; its factors
        // are coprime to everything found above
        auto sub = squarefree_decomposition(poly_pth_root(c));
        for (auto& [m, q] : sub) out.push_back({m * f.field().p(), q});
    }
    return out;
}

// ---------------------------------------------------------------------------
// rational functions

/// Quotient of polynomials in lowest terms with monic denominator.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw parameter_error("RatFunc: zero denominator");
        normalize();
    }
    static RatFunc from_poly(Poly p) {
        const GF& f = p.field();
        return RatFunc(std::move(p), Poly::constant(f, 1));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const GF& field() const { return num_.field(); }

    /// max(deg num, deg den): the degree as a map of the projective line.
    int map_degree() const { return std::max(num_.degree(), den_.degree()); }

    bool operator==(const RatFunc& o) const {
        // cross multiplication; both sides are normalized but this stays exact
        return num_ * o.den_ == o.num_ * den_;
    }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly::constant(num_.field(), 1);
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        int lead = den_.leading();
        if (lead != 1) {
            int li = num_.field().inv(lead);
            num_ = num_.scaled(li);
            den_ = den_.scaled(li);
        }
    }

    Poly num_, den_;
};

/// A Moebius transformation x -> (a x + b) / (c x + d), ad - bc != 0.
struct Moebius {
    const GF* field = nullptr;
    int a = 1, b = 0, c = 0, d = 1;

    bool valid() const {
        return field && field->sub(field->mul(a, d), field->mul(b, c)) != 0;
    }

    Moebius compose(const Moebius& o) const {  // (*this) after o
        Moebius r;
        r.field = field;
        r.a = field->add(field->mul(a, o.a), field->mul(b, o.c));
        r.b = field->add(field->mul(a, o.b), field->mul(b, o.d));
        r.c = field->add(field->mul(c, o.a), field->mul(d, o.c));
        r.d = field->add(field->mul(c, o.b), field->mul(d, o.d));
        return r;
    }

    /// Canonical projective normalization (first nonzero of a,b,c,d made 1).
    std::array<int, 4> normalized() const {
        std::array<int, 4> m{a, b, c, d};
        for (int v : m)
            if (v != 0) {
                int li = field->inv(v);
                for (int& x : m) x = field->mul(x, li);
                break;
            }
        return m;
    }

    /// Evaluate at a projective point (q() encodes infinity).
    int eval_projective(int x) const {
        int INF = field->q();
        if (x == INF) {
            if (c == 0) return INF;
            return field->div(a, c);
        }
        int den = field->add(field->mul(c, x), d);
        int num = field->add(field->mul(a, x), b);
        if (den == 0) return INF;
        return field->div(num, den);
    }
};

/// Substitute a Moebius map into a polynomial:
/// P((ax+b)/(cx+d)) = P_hom(ax+b, cx+d) / (cx+d)^deg P.
inline Poly poly_moebius_numerator(const Poly& pe, const Moebius& m) {
    const GF& f = pe.field();
    Poly axb(&f, {m.b, m.a});
    Poly cxd(&f, {m.d, m.c});
    Poly acc = Poly::zero(f);
    int n = pe.degree();
    if (n < 0) return acc;
    for (int i = 0; i <= n; ++i) {
        if (pe.coeff(i) == 0) continue;
        acc = acc + (axb.pow(i) * cxd.pow(n - i)).scaled(pe.coeff(i));
    }
    return acc;
}

/// z composed with a Moebius map, as a rational function.
inline RatFunc ratfunc_compose_moebius(const RatFunc& z, const Moebius& m) {
    const GF& f = z.field();
    Poly cxd(&f, {m.d, m.c});
    Poly nn = poly_moebius_numerator(z.num(), m);
    Poly dd = poly_moebius_numerator(z.den(), m);
    int dn = z.num().degree(), ddeg = z.den().degree();
    // bring both to the common homogenization degree
    if (dn > ddeg) dd = dd * cxd.pow(dn - ddeg);
    else if (ddeg > dn) nn = nn * cxd.pow(ddeg - dn);
    return RatFunc(nn, dd);
}

}  // namespace curveaut
