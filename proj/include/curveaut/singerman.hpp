#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "curveaut/errors.hpp"
#include "curveaut/rational.hpp"
#include "curveaut/signature.hpp"

namespace curveaut {

/// Linear term `coef * var` (var empty = constant) in a signature pattern.
struct PatternTerm {
    int coef = 1;
    std::string var;
};

/// Parametric signature such as "0;2,t,2u".
struct SignaturePattern {
    int orbit_genus = 0;
    std::vector<PatternTerm> terms;
};

/// Inequality `sum of terms >= bound`, e.g. "t+u>=7".
struct PatternConstraint {
    std::vector<std::string> vars;
    int bound = 0;
};

struct SingermanRule {
    std::string case_id;  // N1..N8, T1..T11
    SignaturePattern inner;
    SignaturePattern outer;
    std::vector<PatternConstraint> constraints;
    int index = 0;
    bool normal = false;  // whether the containment is normal
};

inline PatternTerm parse_pattern_term(const std::string& tok) {
    PatternTerm t;
    std::size_t i = 0;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
    if (i > 0) t.coef = std::stoi(tok.substr(0, i));
    t.var = tok.substr(i);
    if (t.var.size() > 1 || (i == 0 && t.var.empty()))
        throw data_error("bad pattern term '" + tok + "'");
    for (char c : t.var)
        if (!std::islower(static_cast<unsigned char>(c)))
            throw data_error("bad pattern variable in '" + tok + "'");
    return t;
}

inline SignaturePattern parse_signature_pattern(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw data_error("bad signature pattern '" + text + "'");
    SignaturePattern p;
    p.orbit_genus = std::stoi(text.substr(0, semi));
    std::string rest = text.substr(semi + 1);
    if (rest == "-" || rest.empty()) return p;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) p.terms.push_back(parse_pattern_term(tok));
    return p;
}

inline PatternConstraint parse_pattern_constraint(const std::string& text) {
    auto ge = text.find(">=");
    if (ge == std::string::npos) throw data_error("bad constraint '" + text + "' (expected >=)");
    PatternConstraint c;
    c.bound = std::stoi(text.substr(ge + 2));
    std::stringstream ss(text.substr(0, ge));
    std::string tok;
    while (std::getline(ss, tok, '+')) {
        if (tok.size() != 1 || !std::islower(static_cast<unsigned char>(tok[0])))
            throw data_error("bad constraint variable in '" + text + "'");
        c.vars.push_back(tok);
    }
    return c;
}

/// The table rows, row for row. Shipped as data (data/singerman_list.json);
/// this string is the same JSON and is the compiled-in default.
inline const char* singerman_table_json() {
    return R"JSON([
{"case":"N1","inner":"2;-","constraints":[],"outer":"0;2,2,2,2,2,2","index":2,"normal":true},
{"case":"N2","inner":"1;t,t","constraints":[],"outer":"0;2,2,2,2,t","index":2,"normal":true},
{"case":"N3","inner":"1;t","constraints":[],"outer":"0;2,2,2,2t","index":2,"normal":true},
{"case":"N4","inner":"0;t,t,t,t","constraints":["t>=3"],"outer":"0;2,2,2,t","index":4,"normal":true},
{"case":"N5","inner":"0;t,t,u,u","constraints":["t+u>=5"],"outer":"0;2,2,t,u","index":2,"normal":true},
{"case":"N6","inner":"0;t,t,t","constraints":["t>=4"],"outer":"0;3,3,t","index":3,"normal":true},
{"case":"N7","inner":"0;t,t,t","constraints":["t>=4"],"outer":"0;2,3,2t","index":6,"normal":true},
{"case":"N8","inner":"0;t,t,u","constraints":["t>=3","t+u>=7"],"outer":"0;2,t,2u","index":2,"normal":true},
{"case":"T1","inner":"0;7,7,7","constraints":[],"outer":"0;2,3,7","index":24,"normal":false},
{"case":"T2","inner":"0;2,7,7","constraints":[],"outer":"0;2,3,7","index":9,"normal":false},
{"case":"T3","inner":"0;3,3,7","constraints":[],"outer":"0;2,3,7","index":8,"normal":false},
{"case":"T4","inner":"0;4,8,8","constraints":[],"outer":"0;2,3,8","index":12,"normal":false},
{"case":"T5","inner":"0;3,8,8","constraints":[],"outer":"0;2,3,8","index":10,"normal":false},
{"case":"T6","inner":"0;9,9,9","constraints":[],"outer":"0;2,3,9","index":12,"normal":false},
{"case":"T7","inner":"0;4,4,5","constraints":[],"outer":"0;2,4,5","index":6,"normal":false},
{"case":"T8","inner":"0;n,4n,4n","constraints":["n>=2"],"outer":"0;2,3,4n","index":6,"normal":false},
{"case":"T9","inner":"0;n,2n,2n","constraints":["n>=3"],"outer":"0;2,4,2n","index":4,"normal":false},
{"case":"T10","inner":"0;3,n,3n","constraints":["n>=3"],"outer":"0;2,3,3n","index":4,"normal":false},
{"case":"T11","inner":"0;2,n,2n","constraints":["n>=4"],"outer":"0;2,3,2n","index":3,"normal":false}
])JSON";
}

inline std::vector<SingermanRule> parse_singerman_rules(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw data_error(std::string("singerman table: JSON parse error: ") + e.what());
    }
    if (!j.is_array()) throw data_error("singerman table: expected a JSON array");
    std::vector<SingermanRule> rules;
    for (const auto& row : j) {
        SingermanRule r;
        r.case_id = row.at("case").get<std::string>();
        r.inner = parse_signature_pattern(row.at("inner").get<std::string>());
        r.outer = parse_signature_pattern(row.at("outer").get<std::string>());
        for (const auto& c : row.at("constraints"))
            r.constraints.push_back(parse_pattern_constraint(c.get<std::string>()));
        r.index = row.at("index").get<int>();
        r.normal = row.at("normal").get<bool>();
        rules.push_back(std::move(r));
    }
    return rules;
}

inline const std::vector<SingermanRule>& singerman_rules() {
    static const std::vector<SingermanRule> rules = parse_singerman_rules(singerman_table_json());
    return rules;
}

inline std::vector<SingermanRule> load_singerman_rules_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw data_error("cannot open singerman table file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_singerman_rules(ss.str());
}

/// A rule instantiated at a concrete signature.
struct SingermanMatch {
    SingermanRule rule;
    std::map<std::string, int> assignment;
    Signature outer;
    int index = 0;
    bool normal = false;
};

namespace singerman_detail {

inline bool constraints_hold(const SingermanRule& rule, const std::map<std::string, int>& asg) {
    for (const auto& c : rule.constraints) {
        int s = 0;
        for (const auto& v : c.vars) {
            auto it = asg.find(v);
            if (it == asg.end()) return false;
            s += it->second;
        }
        if (s < c.bound) return false;
    }
    return true;
}

inline Signature instantiate(const SignaturePattern& p, const std::map<std::string, int>& asg) {
    std::vector<int> periods;
    for (const auto& t : p.terms) {
        int v = t.coef;
        if (!t.var.empty()) {
            auto it = asg.find(t.var);
            if (it == asg.end()) throw internal_error("pattern variable without assignment");
            v *= it->second;
        }
        periods.push_back(v);
    }
    return Signature(p.orbit_genus, periods);
}

}  // namespace singerman_detail

/// Every way a rule's inner pattern matches the signature (as multisets),
/// with variable assignments satisfying the row constraints.
inline std::vector<SingermanMatch> match_rule(const SingermanRule& rule, const Signature& sig) {
    std::vector<SingermanMatch> out;
    Signature s = sig.canonical();
    if (rule.inner.orbit_genus != s.orbit_genus) return out;
    if (rule.inner.terms.size() != s.periods.size()) return out;
    int r = static_cast<int>(s.periods.size());
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    std::set<std::pair<std::string, std::vector<int>>> seen;  // dedupe identical instantiations
    // try every bijection pattern term <-> signature slot
    std::sort(perm.begin(), perm.end());
    do {
        std::map<std::string, int> asg;
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            const PatternTerm& t = rule.inner.terms[i];
            int m = s.periods[perm[i]];
            if (t.var.empty()) {
                if (t.coef != m) ok = false;
            } else {
                if (m % t.coef != 0) { ok = false; break; }
                int val = m / t.coef;
                if (val < 1) { ok = false; break; }
                auto it = asg.find(t.var);
                if (it == asg.end()) asg[t.var] = val;
                else if (it->second != val) ok = false;
            }
        }
        if (!ok) continue;
        if (!singerman_detail::constraints_hold(rule, asg)) continue;
        Signature outer = singerman_detail::instantiate(rule.outer, asg);
        if (!(outer.measure() > Rat(0))) continue;  // instantiated overgroup must be hyperbolic
        std::vector<int> key;
        for (const auto& [k, v] : asg) key.push_back(v);
        if (!seen.insert({rule.case_id + "|" + outer.canonical().str(), key}).second) continue;
        SingermanMatch m;
        m.rule = rule;
        m.assignment = asg;
        m.outer = outer.canonical();
        m.index = rule.index;
        m.normal = rule.normal;
        out.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// All table rows matching the signature. An empty result means the
/// signature is finitely maximal: every Fuchsian group with it is maximal.
inline std::vector<SingermanMatch> singerman_overgroups(
    const Signature& sig, const std::vector<SingermanRule>& rules = singerman_rules()) {
    std::vector<SingermanMatch> out;
    for (const auto& rule : rules)
        for (auto& m : match_rule(rule, sig)) out.push_back(std::move(m));
    std::sort(out.begin(), out.end(), [](const SingermanMatch& a, const SingermanMatch& b) {
        if (a.rule.case_id.size() != b.rule.case_id.size())
            return a.rule.case_id.size() < b.rule.case_id.size();
        if (a.rule.case_id != b.rule.case_id) return a.rule.case_id < b.rule.case_id;
        return a.outer < b.outer;
    });
    return out;
}

}  // namespace curveaut
