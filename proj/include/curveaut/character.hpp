#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curveaut/conjugacy.hpp"
#include "curveaut/cyclotomic.hpp"
#include "curveaut/errors.hpp"
#include "curveaut/group.hpp"

namespace curveaut {

/// Exact character table over Z[zeta_N], N = group exponent. One row per
/// irreducible character, one column per conjugacy class. Columns are
/// described by (representative order, class size) only; that is all the
/// counting formula needs.
struct CharacterTable {
    int exponent = 0;
    int group_order = 0;
    std::vector<int> class_rep_orders;
    std::vector<int> class_sizes;
    std::vector<std::vector<Cyclotomic>> rows;
    std::vector<long long> degrees;  // chi(1) per row

    int class_count() const { return static_cast<int>(class_sizes.size()); }
};

/// Exact row orthogonality: sum over classes of size * chi_i(c) * conj(chi_j(c))
/// equals |G| * delta_ij.
inline bool character_rows_orthogonal(const CharacterTable& t, std::string* why = nullptr) {
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (std::size_t j = i; j < t.rows.size(); ++j) {
            Cyclotomic acc(t.exponent);
            for (int c = 0; c < t.class_count(); ++c) {
                acc += t.rows[i][c] * t.rows[j][c].conjugate() * Rat(t.class_sizes[c]);
            }
            Rat expected = i == j ? Rat(t.group_order) : Rat(0);
            if (!acc.is_rational() || acc.rational_value() != expected) {
                if (why)
                    *why = "row orthogonality fails for rows " + std::to_string(i) + "," +
                           std::to_string(j);
                return false;
            }
        }
    }
    return true;
}

/// Column orthogonality: sum over rows of chi(c1) conj(chi(c2)) equals
/// |C_G(c1)| delta_{c1 c2}.
inline bool character_columns_orthogonal(const CharacterTable& t, std::string* why = nullptr) {
    for (int c1 = 0; c1 < t.class_count(); ++c1) {
        for (int c2 = c1; c2 < t.class_count(); ++c2) {
            Cyclotomic acc(t.exponent);
            for (std::size_t i = 0; i < t.rows.size(); ++i)
                acc += t.rows[i][c1] * t.rows[i][c2].conjugate();
            Rat expected = c1 == c2 ? Rat(t.group_order, t.class_sizes[c1]) : Rat(0);
            if (!acc.is_rational() || acc.rational_value() != expected) {
                if (why)
                    *why = "column orthogonality fails for classes " + std::to_string(c1) + "," +
                           std::to_string(c2);
                return false;
            }
        }
    }
    return true;
}

/// Character table of an abelian group: the |G| linear characters, built by
/// enumerating root-of-unity images of a generating set and keeping the
/// multiplicative assignments.
inline CharacterTable abelian_character_table(const FiniteGroup& g) {
    if (!g.is_abelian())
        throw parameter_error("abelian_character_table: group is not abelian "
                              "(nonabelian tables enter only via ingestion)");
    int n = g.order;
    int N = g.exponent();
    auto cc = conjugacy_classes(g);  // singleton classes; keeps column order canonical
    CharacterTable t;
    t.exponent = N;
    t.group_order = n;
    for (int c = 0; c < cc.count(); ++c) {
        t.class_rep_orders.push_back(g.element_order[cc.representatives[c]]);
        t.class_sizes.push_back(cc.sizes[c]);
    }

    std::vector<int> gens = small_generating_set(g);
    if (gens.empty()) gens.push_back(0);
    // express every element as a product of generator powers via BFS words
    std::vector<std::vector<int>> word(n);  // exponent vector per element
    std::vector<bool> have(n, false);
    have[0] = true;
    word[0].assign(gens.size(), 0);
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int y = g.op(x, gens[i]);
                if (!have[y]) {
                    have[y] = true;
                    word[y] = word[x];
                    ++word[y][i];
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }

    // enumerate character candidates: generator i maps to zeta_N^(N/d_i * j)
    std::vector<int> dords;
    for (int x : gens) dords.push_back(g.element_order[x]);
    std::vector<int> choice(gens.size(), 0);
    std::vector<std::vector<int>> assignments;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == gens.size()) {
            assignments.push_back(choice);
            return;
        }
        for (int j = 0; j < dords[i]; ++j) {
            choice[i] = j;
            self(self, i + 1);
        }
    };
    rec(rec, 0);

    std::set<std::vector<long long>> distinct;  // dependent generators can repeat a character
    for (const auto& asg : assignments) {
        // candidate chi(x) = zeta^(sum_i word[x][i] * (N/d_i) * asg[i])
        std::vector<long long> expo(n);
        for (int x = 0; x < n; ++x) {
            long long e = 0;
            for (std::size_t i = 0; i < gens.size(); ++i)
                e += static_cast<long long>(word[x][i]) * (N / dords[i]) * asg[i];
            expo[x] = e % N;
        }
        bool multiplicative = true;
        for (int x = 0; x < n && multiplicative; ++x)
            for (int y = 0; y < n; ++y)
                if ((expo[x] + expo[y]) % N != expo[g.op(x, y)] % N) {
                    multiplicative = false;
                    break;
                }
        if (!multiplicative) continue;
        if (!distinct.insert(expo).second) continue;
        std::vector<Cyclotomic> row;
        row.reserve(cc.count());
        for (int c = 0; c < cc.count(); ++c)
            row.push_back(Cyclotomic::root_of_unity(N, expo[cc.representatives[c]]));
        t.rows.push_back(std::move(row));
        t.degrees.push_back(1);
    }

    if (static_cast<int>(t.rows.size()) != n)
        throw internal_error("abelian_character_table: expected " + std::to_string(n) +
                             " characters, built " + std::to_string(t.rows.size()));
    std::string why;
    if (!character_rows_orthogonal(t, &why))
        throw internal_error("abelian_character_table: " + why);
    return t;
}

}  // namespace curveaut
