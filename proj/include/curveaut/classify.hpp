#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "curveaut/action_search.hpp"
#include "curveaut/catalog.hpp"
#include "curveaut/generating_vector.hpp"
#include "curveaut/riemann_hurwitz.hpp"
#include "curveaut/signature.hpp"

namespace curveaut {

enum class Maximality {
    maximal_witness_exists,
    never_maximal,
    undecided,
};

inline std::string to_string(Maximality m) {
    switch (m) {
        case Maximality::maximal_witness_exists: return "maximal-witness-exists";
        case Maximality::never_maximal: return "never-maximal";
        case Maximality::undecided: return "undecided";
    }
    return "undecided";
}

/// One classified action: a group, a signature it acts with, and a witness.
struct ActionRecord {
    int order = 0;
    std::string group_label;
    std::optional<std::pair<int, int>> catalog_id;
    Signature signature;
    GeneratingVector witness;
    std::optional<long long> hom_count;
    std::optional<long long> epi_class_count;
    Maximality maximality = Maximality::undecided;
    bool maximality_relative_to_catalog = false;
    bool catalog_complete_at_order = false;
};

struct ClassifyOptions {
    std::optional<long long> max_order;       // default: the Hurwitz bound
    std::set<int> orders_filter;              // empty = all orders
    std::uint64_t node_cap = kDefaultSearchNodeCap;
    int count_order_cap = 64;                 // skip hom/epi counts above this order
    std::uint64_t count_cost_cap = 50'000'000;
    int workers = 1;
    bool compute_counts = true;
};

/// The classification driver: for each catalog group of each admissible
/// order and each signature solving Riemann-Hurwitz, search for a witness.
/// Maximality verdicts are attached by the maximality module; here records
/// carry `undecided`.
inline std::vector<ActionRecord> classify(int genus, const GroupCatalog& catalog,
                                          const ClassifyOptions& opt = {}) {
    if (genus < 2) throw parameter_error("classify: genus must be >= 2");
    long long max_order = opt.max_order.value_or(hurwitz_bound(genus));

    struct Task {
        int order;
        const CatalogEntry* entry;
        Signature sig;
    };
    std::vector<Task> tasks;
    for (long long n = 2; n <= max_order; ++n) {
        if (!opt.orders_filter.empty() && !opt.orders_filter.count(static_cast<int>(n))) continue;
        for (const auto& entry : catalog.entries(static_cast<int>(n))) {
            std::set<int> period_set;
            for (int o : entry.group.order_spectrum())
                if (o >= 2) period_set.insert(o);
            if (period_set.empty()) continue;
            for (const auto& sig : enumerate_signatures(genus, n, period_set))
                tasks.push_back({static_cast<int>(n), &entry, sig});
        }
    }

    std::vector<std::optional<ActionRecord>> slots(tasks.size());
    auto run_task = [&](std::size_t i) {
        const Task& t = tasks[i];
        auto outcome = find_generating_vector(t.entry->group, t.sig, opt.node_cap);
        if (!outcome.found()) return;
        ActionRecord rec;
        rec.order = t.order;
        rec.group_label = t.entry->group.label;
        rec.catalog_id = t.entry->group.catalog_id;
        rec.signature = t.sig;
        rec.witness = *outcome.witness;
        rec.catalog_complete_at_order = catalog.order_complete(t.order);
        if (opt.compute_counts && t.sig.orbit_genus == 0 && t.order <= opt.count_order_cap) {
            try {
                rec.hom_count = count_torsion_free_homs(t.entry->group, t.sig, opt.count_cost_cap);
                rec.epi_class_count =
                    count_epimorphism_classes(t.entry->group, t.sig, kDefaultSubgroupOrderCap,
                                              opt.count_cost_cap)
                        .classes;
            } catch (const resource_error&) {
                // counts stay unset; the record itself is still sound
            }
        }
        slots[i] = std::move(rec);
    };

    int workers = std::max(1, opt.workers);
    if (workers == 1 || tasks.size() < 2) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                    run_task(i);
            });
        for (auto& th : pool) th.join();
    }

    // tasks are generated in sorted order (order, catalog position, signature),
    // so collecting the slots in order keeps the output deterministic
    std::vector<ActionRecord> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

}  // namespace curveaut
