#pragma once

#include <vector>

#include "curveaut/group.hpp"

namespace curveaut {

/// Partition of a group into conjugacy classes. Classes are ordered by their
/// minimal element index, so class 0 is always {identity}.
struct ConjugacyClasses {
    std::vector<int> class_of;        // element -> class index
    std::vector<int> representatives; // minimal element of each class
    std::vector<int> sizes;

    int count() const { return static_cast<int>(representatives.size()); }
};

inline ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
    ConjugacyClasses cc;
    cc.class_of.assign(g.order, -1);
    for (int a = 0; a < g.order; ++a) {
        if (cc.class_of[a] != -1) continue;
        int id = static_cast<int>(cc.representatives.size());
        cc.representatives.push_back(a);
        int size = 0;
        for (int t = 0; t < g.order; ++t) {
            int c = g.conj(t, a);
            if (cc.class_of[c] == -1) {
                cc.class_of[c] = id;
                ++size;
            }
        }
        cc.sizes.push_back(size);
    }
    return cc;
}

/// Elements of the centralizer of x.
inline std::vector<int> centralizer(const FiniteGroup& g, int x) {
    std::vector<int> out;
    for (int a = 0; a < g.order; ++a)
        if (g.op(a, x) == g.op(x, a)) out.push_back(a);
    return out;
}

}  // namespace curveaut
