#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curveaut/action_search.hpp"
#include "curveaut/catalog.hpp"
#include "curveaut/classify.hpp"
#include "curveaut/maximality.hpp"
#include "curveaut/presentations.hpp"
#include "curveaut/riemann_hurwitz.hpp"
#include "curveaut/superelliptic.hpp"
#include "curveaut/table1.hpp"
#include "curveaut/weierstrass.hpp"

namespace curveaut {

// exit codes: 0 ok, 1 usage, 2 data/validation, 3 resource cap, 4 internal
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitInternal = 4;

namespace cli_detail {

using nlohmann::ordered_json;

inline ordered_json signature_json(const Signature& s) {
    ordered_json j;
    j["orbit_genus"] = s.orbit_genus;
    j["periods"] = s.periods;
    j["text"] = s.str();
    return j;
}

inline ordered_json witness_json(const GeneratingVector& v) {
    ordered_json j;
    std::vector<int> a, b;
    for (std::size_t i = 0; i + 1 < v.hyperbolic_part.size(); i += 2) {
        a.push_back(v.hyperbolic_part[i]);
        b.push_back(v.hyperbolic_part[i + 1]);
    }
    j["a"] = a;
    j["b"] = b;
    j["c"] = v.elliptic_part;
    return j;
}

inline ordered_json record_json(const ActionRecord& r) {
    ordered_json j;
    j["order"] = r.order;
    j["group"] = r.group_label;
    if (r.catalog_id) j["catalog_id"] = {r.catalog_id->first, r.catalog_id->second};
    else j["catalog_id"] = nullptr;
    j["signature"] = r.signature.canonical().str();
    j["witness"] = witness_json(r.witness);
    if (r.hom_count) j["hom_count"] = *r.hom_count;
    else j["hom_count"] = nullptr;
    if (r.epi_class_count) j["epi_classes"] = *r.epi_class_count;
    else j["epi_classes"] = nullptr;
    j["maximality"] = to_string(r.maximality);
    j["catalog_complete"] = r.catalog_complete_at_order;
    return j;
}

inline std::string record_csv_header() {
    return "order,group,catalog_id,signature,witness_a,witness_b,witness_c,hom_count,"
           "epi_classes,maximality,catalog_complete";
}

inline std::string join_ints(const std::vector<int>& v, char sep = ' ') {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string record_csv_row(const ActionRecord& r) {
    std::vector<int> a, b;
    for (std::size_t i = 0; i + 1 < r.witness.hyperbolic_part.size(); i += 2) {
        a.push_back(r.witness.hyperbolic_part[i]);
        b.push_back(r.witness.hyperbolic_part[i + 1]);
    }
    std::string id = r.catalog_id ? std::to_string(r.catalog_id->first) + ":" +
                                        std::to_string(r.catalog_id->second)
                                  : "";
    std::string row = std::to_string(r.order) + "," + r.group_label + "," + id + "," +
                      r.signature.canonical().str() + "," + join_ints(a) + "," + join_ints(b) +
                      "," + join_ints(r.witness.elliptic_part) + ",";
    row += r.hom_count ? std::to_string(*r.hom_count) : "";
    row += ",";
    row += r.epi_class_count ? std::to_string(*r.epi_class_count) : "";
    row += ",";
    row += to_string(r.maximality);
    row += ",";
    row += r.catalog_complete_at_order ? "true" : "false";
    return row;
}

/// Group selector: "order:index" catalog ids, exact catalog labels, or
/// structural names (C5, D12 = dihedral of order 12, Q8, Dic12, V4, S4, A5,
/// and x-products of those). Ambiguity is an error.
inline FiniteGroup resolve_group_selector(const std::string& text, const GroupCatalog& catalog) {
    // catalog id
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        try {
            int order = std::stoi(text.substr(0, colon));
            int index = std::stoi(text.substr(colon + 1));
            const auto* e = catalog.find_by_id(order, index);
            if (!e) throw data_error("group selector '" + text + "': no catalog entry");
            return e->group;
        } catch (const std::invalid_argument&) {
            throw data_error("group selector '" + text + "': bad catalog id");
        }
    }
    // exact catalog label
    if (const auto* e = catalog.find_by_label(text)) return e->group;

    // structural grammar
    auto parse_atom = [](const std::string& atom) -> FiniteGroup {
        auto num_after = [&](std::size_t pos) {
            if (pos >= atom.size()) throw data_error("group selector '" + atom + "': missing number");
            std::size_t used = 0;
            int v = std::stoi(atom.substr(pos), &used);
            if (used != atom.size() - pos)
                throw data_error("group selector '" + atom + "': trailing characters");
            return v;
        };
        if (atom == "V4") return abelian_group({2, 2}, "C2xC2");
        if (atom == "Q8") return dicyclic_group(2, "Q8");
        if (atom == "Q16") return dicyclic_group(4, "Q16");
        if (atom == "F20") return semidirect_cyclic(5, 2, 4, "F20");
        if (atom.rfind("Dic", 0) == 0) {
            int k = num_after(3);
            if (k % 4 != 0) throw data_error("dicyclic order must be divisible by 4");
            return dicyclic_group(k / 4, atom);
        }
        if (atom.rfind("C", 0) == 0 && atom.find('^') != std::string::npos) {
            auto caret = atom.find('^');
            int base = std::stoi(atom.substr(1, caret - 1));
            int expo = std::stoi(atom.substr(caret + 1));
            if (expo < 1 || expo > 12) throw data_error("bad exponent in '" + atom + "'");
            return abelian_group(std::vector<int>(expo, base), atom);
        }
        switch (atom.empty() ? '\0' : atom[0]) {
            case 'C': return cyclic_group(num_after(1));
            case 'D': {
                int order = num_after(1);
                if (order % 2 != 0 || order < 4)
                    throw data_error("dihedral selector D<order> needs an even order >= 4");
                return dihedral_group(order / 2);
            }
            case 'S': return symmetric_group(num_after(1));
            case 'A': return alternating_group(num_after(1));
            default: break;
        }
        throw data_error("group selector atom '" + atom + "' not recognized");
    };
    std::vector<std::string> atoms;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, 'x')) atoms.push_back(tok);
    if (atoms.empty()) throw data_error("empty group selector");
    FiniteGroup g = parse_atom(atoms[0]);
    for (std::size_t i = 1; i < atoms.size(); ++i) g = direct_product(g, parse_atom(atoms[i]));
    if (atoms.size() > 1) g.label = text;
    return g;
}

inline GroupCatalog load_catalog_for_cli(const std::string& path_flag) {
    if (!path_flag.empty()) return catalog_load_file(path_flag);
    if (const char* env = std::getenv("CURVEAUT_CATALOG")) {
        if (env[0] != '\0') return catalog_load_file(env);
    }
    return builtin_catalog();
}

inline CharacterTable character_table_from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw data_error("cannot open character table file: " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw data_error(path + ": JSON parse error: " + e.what());
    }
    CharacterTable t;
    try {
        t.exponent = j.at("exponent").get<int>();
        for (const auto& c : j.at("classes")) {
            t.class_rep_orders.push_back(c.at("rep_order").get<int>());
            t.class_sizes.push_back(c.at("size").get<int>());
        }
        t.group_order = 0;
        for (int s : t.class_sizes) t.group_order += s;
        for (const auto& row : j.at("characters")) {
            std::vector<Cyclotomic> r;
            for (const auto& val : row) {
                auto coeffs = val.get<std::vector<std::int64_t>>();
                r.push_back(Cyclotomic::from_integer_coeffs(t.exponent, coeffs));
            }
            if (static_cast<int>(r.size()) != t.class_count())
                throw data_error("character row has wrong length");
            t.rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw data_error(path + ": bad character table: " + e.what());
    }
    if (static_cast<int>(t.rows.size()) != t.class_count())
        throw data_error(path + ": row count must equal class count");
    // degrees: value on the identity class
    int id_class = -1;
    for (int c = 0; c < t.class_count(); ++c)
        if (t.class_rep_orders[c] == 1) id_class = c;
    if (id_class < 0) throw data_error(path + ": no identity class (rep_order 1)");
    for (const auto& row : t.rows) {
        if (!row[id_class].is_rational() || !row[id_class].rational_value().is_integer() ||
            row[id_class].rational_value().num() <= 0)
            throw data_error(path + ": character degree is not a positive integer");
        t.degrees.push_back(row[id_class].rational_value().as_integer());
    }
    std::string why;
    if (!character_rows_orthogonal(t, &why)) throw data_error(path + ": " + why);
    return t;
}

inline ordered_json moebius_json(const Moebius& m) {
    return ordered_json{{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}};
}

inline ordered_json table1_json(const Table1Instance& inst) {
    ordered_json j;
    j["case"] = inst.case_no;
    j["reduced_group"] = inst.reduced_label;
    j["reduced_order"] = inst.reduced_order;
    j["field"] = inst.field->str();
    j["degree"] = inst.z.map_degree();
    j["z_numerator"] = inst.z.num().coeffs();
    j["z_denominator"] = inst.z.den().coeffs();
    j["ramification"] = inst.ramification;
    ordered_json gens = ordered_json::array();
    for (const auto& g : inst.generators) gens.push_back(moebius_json(g));
    j["generators"] = gens;
    if (!inst.notes.empty()) j["notes"] = inst.notes;
    return j;
}

}  // namespace cli_detail

/// Whole CLI as a callable: parses argv-style arguments, writes to the
/// given streams, returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::ordered_json;
    CLI::App app{"classification of finite group actions on curves of genus >= 2"};
    app.require_subcommand(1);

    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "catalog file (default: $CURVEAUT_CATALOG or builtin)");

    // classify
    auto* sc_classify = app.add_subcommand("classify", "enumerate group actions for a genus");
    int genus = 2;
    long long max_order = 0;
    std::vector<int> orders_filter;
    std::string format = "json";
    int jobs = 1;
    std::uint64_t node_cap = kDefaultSearchNodeCap;
    bool no_counts = false, with_maximality = false;
    sc_classify->add_option("--genus", genus, "genus >= 2")->required();
    sc_classify->add_option("--max-order", max_order, "largest group order (default 84(g-1))");
    sc_classify->add_option("--orders", orders_filter, "restrict to these orders");
    sc_classify->add_option("--format", format, "json | csv | text");
    sc_classify->add_option("--jobs", jobs, "worker count (default 1)");
    sc_classify->add_option("--node-cap", node_cap, "search node cap");
    sc_classify->add_flag("--no-counts", no_counts, "skip hom/epimorphism counting");
    sc_classify->add_flag("--maximality", with_maximality, "attach maximality verdicts");

    // maximal
    auto* sc_maximal = app.add_subcommand("maximal", "maximality verdict for one action");
    std::string group_sel, sig_text;
    sc_maximal->add_option("--group", group_sel, "group selector")->required();
    sc_maximal->add_option("--signature", sig_text, "signature g0;m1,...,mr")->required();
    sc_maximal->add_option("--node-cap", node_cap, "search node cap");

    // count-homs
    auto* sc_count = app.add_subcommand("count-homs", "torsion-free homomorphism counting");
    std::string chartable_path;
    sc_count->add_option("--group", group_sel, "group selector")->required();
    sc_count->add_option("--signature", sig_text, "signature g0;m1,...,mr")->required();
    sc_count->add_option("--character-table", chartable_path,
                         "character table file for the formula route");

    // surfaces
    auto* sc_surfaces = app.add_subcommand("surfaces", "count surfaces up to conformal equivalence");
    sc_surfaces->add_option("--group", group_sel, "group selector")->required();
    sc_surfaces->add_option("--signature", sig_text, "triangle signature")->required();

    // gap-seqs
    auto* sc_gaps = app.add_subcommand("gap-seqs", "Weierstrass gap sequences for a genus");
    bool with_weights = false;
    sc_gaps->add_option("--genus", genus, "genus")->required();
    sc_gaps->add_flag("--weights", with_weights, "include the weight distribution");

    // superelliptic
    auto* sc_super = app.add_subcommand("superelliptic", "reduced-group data and checks");
    sc_super->require_subcommand(1);
    auto* sc_t1 = sc_super->add_subcommand("table1", "rational function of a reduced-group case");
    auto* sc_verify = sc_super->add_subcommand("verify", "invariance and ramification checks");
    auto* sc_char2 = sc_super->add_subcommand("char2", "characteristic-2 ramification types");
    auto* sc_lists = sc_super->add_subcommand("lists", "genus 3/4 automorphism group lists");
    int case_no = 1, par_p = 0, par_m = 1, par_t = 1, par_f = 1, chr = 0;
    for (auto* sc : {sc_t1, sc_verify}) {
        sc->add_option("--case", case_no, "table row 1..9")->required();
        sc->add_option("--p", par_p, "characteristic")->required();
        sc->add_option("--m", par_m, "parameter m");
        sc->add_option("--t", par_t, "parameter t");
        sc->add_option("--f", par_f, "q = p^f for the projective rows");
    }
    sc_char2->add_option("--genus", genus, "genus")->required();
    sc_lists->add_option("--genus", genus, "3 or 4")->required();
    sc_lists->add_option("--char", chr, "characteristic (0, 3, 5, 7, or >= 11)")->required();

    // bounds
    auto* sc_bounds = app.add_subcommand("bounds", "classical bounds and exceptional families");
    bool with_families = false;
    sc_bounds->add_option("--genus", genus, "genus")->required();
    sc_bounds->add_option("--char", chr, "positive characteristic for the element-order bound");
    sc_bounds->add_flag("--families", with_families, "list exceptional families up to the genus");

    // catalog
    auto* sc_catalog = app.add_subcommand("catalog", "catalog maintenance");
    sc_catalog->require_subcommand(1);
    auto* sc_cat_validate = sc_catalog->add_subcommand("validate", "full validation report");
    auto* sc_cat_info = sc_catalog->add_subcommand("info", "orders and entries");
    int info_order = 0;
    sc_cat_info->add_option("--order", info_order, "restrict to one order");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*sc_classify) {
            auto catalog = cli_detail::load_catalog_for_cli(catalog_path);
            ClassifyOptions opt;
            if (max_order > 0) opt.max_order = max_order;
            for (int o : orders_filter) opt.orders_filter.insert(o);
            opt.workers = jobs;
            opt.node_cap = node_cap;
            opt.compute_counts = !no_counts;
            auto records = classify(genus, catalog, opt);
            if (with_maximality) {
                for (auto& r : records) {
                    const auto* entry = r.catalog_id
                                            ? catalog.find_by_id(r.catalog_id->first, r.catalog_id->second)
                                            : catalog.find_by_label(r.group_label);
                    if (!entry) continue;
                    auto verdict = analyze_maximality(entry->group, r.signature, catalog, node_cap);
                    r.maximality = verdict.verdict;
                    r.maximality_relative_to_catalog = verdict.relative_to_catalog;
                }
            }
            if (format == "json") {
                ordered_json j = ordered_json::array();
                for (const auto& r : records) j.push_back(cli_detail::record_json(r));
                out << j.dump(2) << "\n";
            } else if (format == "csv") {
                out << cli_detail::record_csv_header() << "\n";
                for (const auto& r : records) out << cli_detail::record_csv_row(r) << "\n";
            } else {
                for (const auto& r : records) {
                    out << r.group_label << " acts with (" << r.signature.canonical().str() << ")";
                    if (r.epi_class_count) out << "  [classes: " << *r.epi_class_count << "]";
                    out << "\n";
                }
                out << records.size() << " action(s)\n";
            }
            return kExitOk;
        }
        if (*sc_maximal) {
            auto catalog = cli_detail::load_catalog_for_cli(catalog_path);
            FiniteGroup g = cli_detail::resolve_group_selector(group_sel, catalog);
            Signature sig = parse_signature(sig_text);
            auto res = analyze_maximality(g, sig, catalog, node_cap);
            ordered_json j;
            j["group"] = g.label;
            j["signature"] = sig.canonical().str();
            j["verdict"] = to_string(res.verdict);
            j["relative_to_catalog"] = res.relative_to_catalog;
            j["vectors_examined"] = res.vectors_examined;
            j["vectors_extending_structurally"] = res.vectors_extending;
            ordered_json matches = ordered_json::array();
            for (const auto& m : res.matches) {
                matches.push_back(ordered_json{{"case", m.rule.case_id},
                                               {"outer", m.outer.str()},
                                               {"index", m.index},
                                               {"normal", m.normal}});
            }
            j["singerman_matches"] = matches;
            if (res.extension) {
                j["extension"] = ordered_json{{"overgroup", res.extension->overgroup_label},
                                              {"outer_signature", res.extension->outer_signature.str()},
                                              {"rule", res.extension->rule_case},
                                              {"index", res.extension->index}};
            } else {
                j["extension"] = nullptr;
            }
            j["notes"] = res.notes;
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*sc_count) {
            auto catalog = cli_detail::load_catalog_for_cli(catalog_path);
            FiniteGroup g = cli_detail::resolve_group_selector(group_sel, catalog);
            Signature sig = parse_signature(sig_text);
            ordered_json j;
            j["group"] = g.label;
            j["signature"] = sig.canonical().str();
            long long homs = count_torsion_free_homs(g, sig);
            j["hom_count"] = homs;
            try {
                auto epi = count_epimorphism_classes(g, sig);
                j["epimorphisms"] = epi.epimorphisms;
                j["epi_classes"] = epi.classes;
            } catch (const resource_error& e) {
                j["epimorphisms"] = nullptr;
                j["epi_classes"] = nullptr;
                j["counting_note"] = e.what();
            }
            if (!chartable_path.empty()) {
                auto table = cli_detail::character_table_from_file(chartable_path);
                j["character_count"] = count_torsion_free_homs_character(g, table, sig);
            } else if (g.is_abelian() && sig.r() == 3 && sig.orbit_genus == 0) {
                auto table = abelian_character_table(g);
                j["character_count"] = count_torsion_free_homs_character(g, table, sig);
            }
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*sc_surfaces) {
            auto catalog = cli_detail::load_catalog_for_cli(catalog_path);
            FiniteGroup g = cli_detail::resolve_group_selector(group_sel, catalog);
            Signature sig = parse_signature(sig_text);
            auto res = fuse_surface_count(g, sig, catalog);
            ordered_json j;
            j["group"] = g.label;
            j["signature"] = sig.canonical().str();
            j["exact"] = res.exact;
            if (res.exact) j["count"] = res.count;
            else j["bounds"] = {res.lower, res.upper};
            j["trace"] = res.trace;
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*sc_gaps) {
            auto seqs = enumerate_gap_sequences(genus);
            ordered_json rows = ordered_json::array();
            std::map<long long, int> weight_distribution;
            for (const auto& s : seqs) {
                long long w = weight(s);
                rows.push_back(
                    ordered_json{{"gaps", s.gaps}, {"nongaps", s.nongaps()}, {"weight", w}});
                ++weight_distribution[w];
            }
            ordered_json j;
            j["genus"] = genus;
            j["count"] = seqs.size();
            j["sequences"] = rows;
            if (with_weights) {
                ordered_json wd = ordered_json::array();
                for (auto& [w, c] : weight_distribution)
                    wd.push_back(ordered_json{{"weight", w}, {"sequences", c}});
                j["weight_distribution"] = wd;
            }
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*sc_t1 || *sc_verify) {
            Table1Params par;
            par.p = par_p;
            par.m = par_m;
            par.t = par_t;
            par.f = par_f;
            auto inst = table1_function(case_no, par);
            ordered_json j = cli_detail::table1_json(inst);
            if (*sc_verify) {
                auto inv = verify_invariance(inst);
                j["invariance"] = ordered_json{{"all_invariant", inv.all_invariant},
                                               {"group_order", inv.group_order},
                                               {"degree", inv.degree},
                                               {"evaluation_confirmed", inv.evaluation_confirmed},
                                               {"evaluation_points", inv.evaluation_points}};
                auto ram = verify_ramification(inst);
                j["ramification_check"] = ordered_json{{"confirmed", ram.confirmed},
                                                       {"found_orders", ram.found_orders},
                                                       {"notes", ram.notes}};
            }
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*sc_char2) {
            auto types = char2_ramification_types(genus);
            ordered_json j;
            j["genus"] = genus;
            j["types"] = types;
            if (genus == 3 || genus == 4) j["automorphism_groups"] = char2_hyperelliptic_groups(genus);
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*sc_lists) {
            auto catalog = cli_detail::load_catalog_for_cli(catalog_path);
            auto ids = genus34_superelliptic_lists(genus, chr);
            ordered_json rows = ordered_json::array();
            for (auto id : ids) {
                auto r = resolve_small_group_id(catalog, id);
                rows.push_back(ordered_json{{"id", {id.first, id.second}},
                                            {"resolved", r.resolved},
                                            {"label", r.resolved ? ordered_json(r.label)
                                                                 : ordered_json(nullptr)}});
            }
            ordered_json j;
            j["genus"] = genus;
            j["char"] = chr;
            j["count"] = ids.size();
            j["groups"] = rows;
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*sc_bounds) {
            ordered_json j;
            j["genus"] = genus;
            j["hurwitz"] = hurwitz_bound(genus);
            j["wiman"] = wiman_bound(genus);
            j["poschar_16g4"] = poschar_bound(genus);
            j["large_group_threshold"] = large_group_threshold(genus);
            if (chr >= 2) j["element_order_bound"] = poschar_element_order_bound(genus, chr);
            if (with_families) {
                ordered_json fams = ordered_json::array();
                for (const auto& f : exceptional_families(genus)) {
                    fams.push_back(ordered_json{{"name", f.name},
                                                {"curve", f.curve},
                                                {"group", f.group},
                                                {"p", f.p},
                                                {"params", f.params},
                                                {"genus", f.genus},
                                                {"group_order", f.group_order}});
                }
                j["exceptional_families"] = fams;
            }
            out << j.dump(2) << "\n";
            return kExitOk;
        }
        if (*sc_cat_validate) {
            auto catalog = cli_detail::load_catalog_for_cli(catalog_path);
            auto rep = catalog_validate(catalog);
            ordered_json j;
            j["ok"] = rep.ok;
            j["entries"] = catalog.total_entries();
            j["problems"] = rep.problems;
            j["notes"] = rep.notes;
            out << j.dump(2) << "\n";
            return rep.ok ? kExitOk : kExitData;
        }
        if (*sc_cat_info) {
            auto catalog = cli_detail::load_catalog_for_cli(catalog_path);
            ordered_json orders = ordered_json::array();
            for (const auto& [order, entries] : catalog.by_order) {
                if (info_order > 0 && order != info_order) continue;
                ordered_json labels = ordered_json::array();
                for (const auto& e : entries) {
                    ordered_json ej;
                    ej["label"] = e.group.label;
                    if (e.group.catalog_id)
                        ej["id"] = {e.group.catalog_id->first, e.group.catalog_id->second};
                    labels.push_back(ej);
                }
                orders.push_back(ordered_json{{"order", order},
                                              {"complete", catalog.order_complete(order)},
                                              {"count", entries.size()},
                                              {"entries", labels}});
            }
            ordered_json j;
            j["orders"] = orders;
            out << j.dump(2) << "\n";
            return kExitOk;
        }
    } catch (const parameter_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const data_error& e) {
        err << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const resource_error& e) {
        err << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const internal_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    }
    err << "usage error: no subcommand\n";
    return kExitUsage;
}

}  // namespace curveaut
