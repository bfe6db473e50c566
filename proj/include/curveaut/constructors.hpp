#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "curveaut/group.hpp"

namespace curveaut {

inline int inv_mod(int a, int m) {
    a %= m;
    if (a < 0) a += m;
    int g = m, x = 0, x1 = 1, a1 = a;
    while (a1) {
        int qq = g / a1;
        x -= qq * x1; std::swap(x, x1);
        g -= qq * a1; std::swap(g, a1);
    }
    if (g != 1) throw parameter_error("inv_mod: not invertible");
    return ((x % m) + m) % m;
}

// ---------------------------------------------------------------------------
// permutation groups

using Perm = std::vector<int>;  // one-line image notation on {0..d-1}

inline Perm perm_compose(const Perm& a, const Perm& b) {
    // (a*b)(x) = a(b(x))
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

inline bool is_permutation(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

/// Close a set of permutations into a group and encode it as a table.
/// Elements are sorted lexicographically by image vector, which puts the
/// identity at index 0 and makes the numbering reproducible.
inline FiniteGroup group_from_permutations(const std::vector<Perm>& gens, std::string label,
                                           int max_order = 20000) {
    if (gens.empty()) throw parameter_error("group_from_permutations: no generators");
    std::size_t d = gens[0].size();
    for (const auto& p : gens) {
        if (p.size() != d) throw data_error("generators act on different point counts");
        if (!is_permutation(p)) throw data_error("generator is not a permutation");
    }
    Perm id(d);
    std::iota(id.begin(), id.end(), 0);
    std::set<Perm> elems{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                Perm y = perm_compose(g, x);
                if (elems.insert(y).second) {
                    next.push_back(y);
                    if (static_cast<int>(elems.size()) > max_order)
                        throw resource_error("permutation closure exceeds cap of " +
                                             std::to_string(max_order) + " elements");
                }
            }
        frontier = std::move(next);
    }
    std::vector<Perm> sorted(elems.begin(), elems.end());  // set is already lex-sorted
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
    int n = static_cast<int>(sorted.size());
    std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mul[static_cast<std::size_t>(i) * n + j] =
                static_cast<Elt>(index.at(perm_compose(sorted[i], sorted[j])));
    return make_group(n, std::move(mul), std::move(label));
}

/// Faithful permutation generators for any table group via the left-regular
/// action of a small generating set.
inline std::vector<Perm> regular_representation_generators(const FiniteGroup& g) {
    std::vector<Perm> out;
    for (int x : small_generating_set(g)) {
        Perm p(g.order);
        for (int a = 0; a < g.order; ++a) p[a] = g.op(x, a);
        out.push_back(std::move(p));
    }
    if (out.empty()) {  // trivial group
        out.push_back(Perm{0});
    }
    return out;
}

// ---------------------------------------------------------------------------
// standard families

inline FiniteGroup cyclic_group(int n, std::string label = "") {
    if (n <= 0) throw parameter_error("cyclic_group: order must be positive");
    std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = static_cast<Elt>((a + b) % n);
    if (label.empty()) label = "C" + std::to_string(n);
    return make_group(n, std::move(mul), std::move(label));
}

/// Dihedral group of order 2n. Labels carry the order: D12 is the dihedral
/// group with 12 elements.
inline FiniteGroup dihedral_group(int n, std::string label = "") {
    if (n <= 0) throw parameter_error("dihedral_group: n must be positive");
    int N = 2 * n;
    auto enc = [n](int i, int e) { return e * n + i; };
    std::vector<Elt> mul(static_cast<std::size_t>(N) * N);
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i = 0; i < n; ++i)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int j = 0; j < n; ++j) {
                    // (r^i s^e1)(r^j s^e2) = r^(i + j or i - j) s^(e1^e2)
                    int k = e1 == 0 ? (i + j) % n : ((i - j) % n + n) % n;
                    mul[static_cast<std::size_t>(enc(i, e1)) * N + enc(j, e2)] =
                        static_cast<Elt>(enc(k, e1 ^ e2));
                }
    if (label.empty()) label = "D" + std::to_string(N);
    return make_group(N, std::move(mul), std::move(label));
}

/// Direct product of abelian cyclic factors C_{d1} x C_{d2} x ...
inline FiniteGroup abelian_group(const std::vector<int>& factors, std::string label = "") {
    if (factors.empty()) throw parameter_error("abelian_group: empty factor list");
    long long n = 1;
    for (int d : factors) {
        if (d <= 0) throw parameter_error("abelian_group: factors must be positive");
        n *= d;
        if (n > 20000) throw resource_error("abelian_group: order exceeds cap of 20000");
    }
    int N = static_cast<int>(n);
    auto decode = [&](int x) {
        std::vector<int> t(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            t[i] = x % factors[i];
            x /= factors[i];
        }
        return t;
    };
    auto encode = [&](const std::vector<int>& t) {
        int x = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i] + t[i];
        return x;
    };
    std::vector<Elt> mul(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < N; ++a) {
        auto ta = decode(a);
        for (int b = 0; b < N; ++b) {
            auto tb = decode(b);
            std::vector<int> tc(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i) tc[i] = (ta[i] + tb[i]) % factors[i];
            mul[static_cast<std::size_t>(a) * N + b] = static_cast<Elt>(encode(tc));
        }
    }
    if (label.empty()) {
        for (std::size_t i = 0; i < factors.size(); ++i)
            label += (i ? "x" : "") + ("C" + std::to_string(factors[i]));
    }
    return make_group(N, std::move(mul), std::move(label));
}

inline FiniteGroup symmetric_group(int n) {
    if (n < 1 || n > 6) throw parameter_error("symmetric_group: supported for 1 <= n <= 6");
    if (n == 1) return cyclic_group(1, "S1");
    Perm cycle(n), swap01(n);
    std::iota(cycle.begin(), cycle.end(), 0);
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    return group_from_permutations({cycle, swap01}, "S" + std::to_string(n));
}

inline FiniteGroup alternating_group(int n) {
    if (n < 3 || n > 6) throw parameter_error("alternating_group: supported for 3 <= n <= 6");
    Perm three(n);
    std::iota(three.begin(), three.end(), 0);
    three[0] = 1; three[1] = 2; three[2] = 0;  // (0 1 2)
    if (n == 3) return group_from_permutations({three}, "A3");
    Perm other(n);
    std::iota(other.begin(), other.end(), 0);
    if (n % 2 == 1) {  // n odd: n-cycle is even
        std::rotate(other.begin(), other.begin() + 1, other.end());
    } else {  // n even: use an (n-1)-cycle on {1..n-1}
        std::rotate(other.begin() + 1, other.begin() + 2, other.end());
    }
    return group_from_permutations({three, other}, "A" + std::to_string(n));
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::string label = "") {
    long long n = static_cast<long long>(a.order) * b.order;
    if (n > 20000) throw resource_error("direct_product: order exceeds cap of 20000");
    int N = static_cast<int>(n);
    std::vector<Elt> mul(static_cast<std::size_t>(N) * N);
    auto enc = [&](int x, int y) { return x * b.order + y; };
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    mul[static_cast<std::size_t>(enc(x1, y1)) * N + enc(x2, y2)] =
                        static_cast<Elt>(enc(a.op(x1, x2), b.op(y1, y2)));
    if (label.empty()) label = a.label + "x" + b.label;
    return make_group(N, std::move(mul), std::move(label));
}

/// Semidirect product C_n x|_k C_m where the C_m generator acts on the C_n
/// generator by r -> r^k. Requires gcd(k, n) = 1 and k^m = 1 mod n.
inline FiniteGroup semidirect_cyclic(int n, int k, int m, std::string label = "") {
    if (n <= 0 || m <= 0) throw parameter_error("semidirect_cyclic: orders must be positive");
    k = ((k % n) + n) % n;
    if (std::gcd(k, n) != 1)
        throw parameter_error("semidirect_cyclic: action parameter k must be a unit mod n");
    long long km = 1;
    for (int i = 0; i < m; ++i) km = (km * k) % n;
    if (km != 1 % n)
        throw parameter_error("semidirect_cyclic: k^m must be 1 mod n (invalid action)");
    int N = n * m;
    // element r^i s^j encoded as j*n + i;  s r s^-1 = r^k
    std::vector<long long> kpow(m);
    kpow[0] = 1;
    for (int j = 1; j < m; ++j) kpow[j] = (kpow[j - 1] * k) % n;
    std::vector<Elt> mul(static_cast<std::size_t>(N) * N);
    for (int j1 = 0; j1 < m; ++j1)
        for (int i1 = 0; i1 < n; ++i1)
            for (int j2 = 0; j2 < m; ++j2)
                for (int i2 = 0; i2 < n; ++i2) {
                    // r^i1 s^j1 r^i2 s^j2 = r^(i1 + k^j1 * i2) s^(j1+j2)
                    int i = static_cast<int>((i1 + kpow[j1] * i2) % n);
                    int j = (j1 + j2) % m;
                    mul[static_cast<std::size_t>(j1 * n + i1) * N + (j2 * n + i2)] =
                        static_cast<Elt>(j * n + i);
                }
    if (label.empty())
        label = "C" + std::to_string(n) + ":" + std::to_string(k) + "C" + std::to_string(m);
    return make_group(N, std::move(mul), std::move(label));
}

/// Dicyclic group of order 4n: < a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1 >.
/// Dic8 is the quaternion group Q8.
inline FiniteGroup dicyclic_group(int n, std::string label = "") {
    if (n <= 0) throw parameter_error("dicyclic_group: n must be positive");
    int N = 4 * n, two_n = 2 * n;
    auto enc = [two_n](int i, int e) { return e * two_n + i; };
    std::vector<Elt> mul(static_cast<std::size_t>(N) * N);
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i1 = 0; i1 < two_n; ++i1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int i2 = 0; i2 < two_n; ++i2) {
                    // (a^i1 b^e1)(a^i2 b^e2); b a b^-1 = a^-1, b^2 = a^n
                    int i = e1 == 0 ? (i1 + i2) % two_n : ((i1 - i2) % two_n + two_n) % two_n;
                    int e = e1 ^ e2;
                    if (e1 == 1 && e2 == 1) i = (i + n) % two_n;  // b^2 = a^n
                    mul[static_cast<std::size_t>(enc(i1, e1)) * N + enc(i2, e2)] =
                        static_cast<Elt>(enc(i, e));
                }
    if (label.empty()) label = "Dic" + std::to_string(N);
    return make_group(N, std::move(mul), std::move(label));
}

/// Semidirect product A x| Q with abelian kernel A. The action is given by
/// one automorphism of A per element of Q (as a permutation of A's indices);
/// the map q -> theta_q must be a homomorphism, which is verified.
inline FiniteGroup semidirect_abelian(const FiniteGroup& a, const FiniteGroup& q,
                                      const std::vector<Perm>& theta, std::string label) {
    if (!a.is_abelian()) throw parameter_error("semidirect_abelian: kernel must be abelian");
    if (static_cast<int>(theta.size()) != q.order)
        throw parameter_error("semidirect_abelian: need one automorphism per element of Q");
    for (int j = 0; j < q.order; ++j) {
        const Perm& t = theta[j];
        if (static_cast<int>(t.size()) != a.order || !is_permutation(t) || t[0] != 0)
            throw parameter_error("semidirect_abelian: theta is not a permutation fixing identity");
        for (int x = 0; x < a.order; ++x)
            for (int y = 0; y < a.order; ++y)
                if (t[a.op(x, y)] != a.op(t[x], t[y]))
                    throw parameter_error("semidirect_abelian: theta value is not an automorphism");
    }
    for (int j1 = 0; j1 < q.order; ++j1)
        for (int j2 = 0; j2 < q.order; ++j2) {
            Perm lhs = perm_compose(theta[j1], theta[j2]);
            if (lhs != theta[q.op(j1, j2)])
                throw parameter_error("semidirect_abelian: theta is not a homomorphism");
        }
    long long n = static_cast<long long>(a.order) * q.order;
    if (n > 20000) throw resource_error("semidirect_abelian: order exceeds cap of 20000");
    int N = static_cast<int>(n);
    auto enc = [&](int x, int j) { return j * a.order + x; };
    std::vector<Elt> mul(static_cast<std::size_t>(N) * N);
    for (int j1 = 0; j1 < q.order; ++j1)
        for (int x1 = 0; x1 < a.order; ++x1)
            for (int j2 = 0; j2 < q.order; ++j2)
                for (int x2 = 0; x2 < a.order; ++x2) {
                    // (x1, j1)(x2, j2) = (x1 + theta_{j1}(x2), j1 j2)
                    mul[static_cast<std::size_t>(enc(x1, j1)) * N + enc(x2, j2)] =
                        static_cast<Elt>(enc(a.op(x1, theta[j1][x2]), q.op(j1, j2)));
                }
    return make_group(N, std::move(mul), std::move(label));
}

/// Generalized dihedral group over an abelian A: A extended by the
/// inversion automorphism.
inline FiniteGroup generalized_dihedral(const FiniteGroup& a, std::string label = "") {
    Perm invp(a.order);
    for (int x = 0; x < a.order; ++x) invp[x] = a.inv(x);
    Perm id(a.order);
    std::iota(id.begin(), id.end(), 0);
    if (label.empty()) label = "Dih(" + a.label + ")";
    return semidirect_abelian(a, cyclic_group(2), {id, invp}, std::move(label));
}

/// Central product (A x B) / <(z_a, z_b)> identifying central elements of
/// equal order.
inline FiniteGroup central_product(const FiniteGroup& a, int za, const FiniteGroup& b, int zb,
                                   std::string label) {
    if (a.element_order[za] != b.element_order[zb])
        throw parameter_error("central_product: identified elements must have equal order");
    FiniteGroup prod = direct_product(a, b);
    auto encode = [&](int x, int y) { return x * b.order + y; };
    // subgroup generated by (za, zb^-1): its image must be central
    std::vector<int> gen{encode(za, b.inv(zb))};
    std::vector<int> sub = generated_subgroup(prod, gen);
    for (int s : sub)
        for (int x = 0; x < prod.order; ++x)
            if (prod.op(s, x) != prod.op(x, s))
                throw parameter_error("central_product: identified subgroup is not central");
    return quotient_group(prod, sub, nullptr, std::move(label));
}

// ---------------------------------------------------------------------------
// matrix groups over small prime fields (as permutation groups on vectors)

/// GL(2,p) or SL(2,p) acting on the p^2 - 1 nonzero column vectors of F_p^2.
inline FiniteGroup matrix_group_2x2(int p, bool special, std::string label) {
    std::vector<std::array<int, 4>> gens;
    if (special) {
        gens.push_back({1, 1, 0, 1});
        gens.push_back({0, 1, p - 1, 0});  // det 1
    } else {
        gens.push_back({1, 1, 0, 1});
        // a companion of a generator of F_p^*: [g,0;0,1]
        int g = 1;
        for (int cand = 2; cand < p; ++cand) {
            int x = cand % p, k = 1;
            while (x != 1) { x = x * cand % p; ++k; }
            if (k == p - 1) { g = cand; break; }
        }
        gens.push_back({g % p, 0, 0, 1});
        gens.push_back({0, 1, p - 1, 0});
    }
    int d = p * p - 1;
    auto vec_index = [p](int x, int y) { return x * p + y - 1; };  // (0,0) excluded
    std::vector<Perm> perms;
    for (const auto& m : gens) {
        Perm perm(d);
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) {
                if (x == 0 && y == 0) continue;
                int nx = (m[0] * x + m[1] * y) % p;
                int ny = (m[2] * x + m[3] * y) % p;
                perm[vec_index(x, y)] = vec_index(nx, ny);
            }
        perms.push_back(std::move(perm));
    }
    return group_from_permutations(perms, std::move(label));
}

/// PSL(2,q) or PGL(2,q) for prime q, acting on the projective line
/// {0, ..., q-1, infinity} (infinity encoded as index q).
inline FiniteGroup projective_group_2(int q, bool special, std::string label) {
    int d = q + 1;
    const int INF = q;
    auto act = [&](int a, int b, int c, int dd, int x) {
        if (x == INF) return c % q == 0 ? INF : ((a % q) * inv_mod(c, q)) % q;
        long long num = (static_cast<long long>(a) * x + b) % q;
        long long den = (static_cast<long long>(c) * x + dd) % q;
        if (den == 0) return INF;
        return static_cast<int>(num * inv_mod(static_cast<int>(den), q) % q);
    };
    std::vector<Perm> perms;
    auto add = [&](int a, int b, int c, int dd) {
        Perm p(d);
        for (int x = 0; x <= q; ++x) p[x] = act(a, b, c, dd, x);
        perms.push_back(std::move(p));
    };
    add(1, 1, 0, 1);       // x -> x + 1
    add(0, -1 + q, 1, 0);  // x -> -1/x
    if (!special) {
        int g = 2;
        for (int cand = 2; cand < q; ++cand) {
            int x = cand % q, k = 1;
            while (x != 1) { x = x * cand % q; ++k; }
            if (k == q - 1) { g = cand; break; }
        }
        add(g, 0, 0, 1);  // x -> g x  (non-square multiplier: full PGL)
    }
    return group_from_permutations(perms, std::move(label));
}

}  // namespace curveaut
