// Inheritance flattening (C3 linearization, Solidity override order) and the
// per-function identifier resolution pass that runs after it.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ssrlint/ir.hpp"

namespace ssrlint {

namespace inherit_detail {

// C3 merge over base lists. Solidity linearizes most-derived-first with the
// later-written base taking precedence, i.e. bases are merged reversed.
inline bool c3_merge(std::vector<std::vector<std::string>> seqs, std::vector<std::string>& out) {
    for (;;) {
        seqs.erase(std::remove_if(seqs.begin(), seqs.end(),
                                  [](const auto& s) { return s.empty(); }),
                   seqs.end());
        if (seqs.empty()) return true;
        std::string candidate;
        for (const auto& s : seqs) {
            const std::string& head = s.front();
            bool in_tail = false;
            for (const auto& t : seqs) {
                for (size_t i = 1; i < t.size(); ++i)
                    if (t[i] == head) { in_tail = true; break; }
                if (in_tail) break;
            }
            if (!in_tail) { candidate = head; break; }
        }
        if (candidate.empty()) return false; // no valid head: inconsistent hierarchy
        out.push_back(candidate);
        for (auto& s : seqs)
            if (!s.empty() && s.front() == candidate) s.erase(s.begin());
    }
}

inline std::vector<std::string> linearize(const std::string& name,
                                          const std::map<std::string, const ContractIR*>& by_name,
                                          std::set<std::string>& in_progress,
                                          std::vector<std::string>& unresolved) {
    if (in_progress.count(name))
        throw CyclicInheritance("cyclic inheritance involving contract " + name);
    auto it = by_name.find(name);
    if (it == by_name.end()) {
        unresolved.push_back(name);
        return {};
    }
    in_progress.insert(name);
    const ContractIR& c = *it->second;
    std::vector<std::vector<std::string>> seqs;
    std::vector<std::string> reversed(c.bases.rbegin(), c.bases.rend());
    for (const auto& b : reversed) {
        auto lin = linearize(b, by_name, in_progress, unresolved);
        if (!lin.empty()) seqs.push_back(std::move(lin));
    }
    std::vector<std::string> present_bases;
    for (const auto& b : reversed)
        if (by_name.count(b)) present_bases.push_back(b);
    if (!present_bases.empty()) seqs.push_back(present_bases);
    std::vector<std::string> merged{name};
    std::vector<std::string> rest;
    if (!c3_merge(std::move(seqs), rest))
        throw CyclicInheritance("inconsistent inheritance hierarchy at contract " + name);
    merged.insert(merged.end(), rest.begin(), rest.end());
    in_progress.erase(name);
    return merged;
}

} // namespace inherit_detail

// ---------------------------------------------------------------------------
// Identifier resolution

inline void resolve_identifiers(ContractIR& contract) {
    std::map<std::string, std::pair<RefKind, std::string>> contract_scope;
    for (const auto& v : contract.state_vars)
        contract_scope[v.name] = {RefKind::StateVar, v.type_desc.str()};
    for (const auto& f : contract.functions)
        if (!f.name.empty()) contract_scope.emplace(f.name, std::make_pair(RefKind::FunctionRef, ""));
    for (const auto& e : contract.events)
        contract_scope.emplace(e, std::make_pair(RefKind::EventRef, ""));
    for (const auto& [sname, sd] : contract.structs)
        contract_scope.emplace(sname, std::make_pair(RefKind::TypeRef, sname));

    static const std::set<std::string> builtins = {
        "require", "assert", "revert", "msg",  "block", "tx",    "this",   "super",
        "abi",     "type",   "keccak256", "sha256", "ecrecover", "gasleft", "addmod",
        "mulmod",  "selfdestruct", "new"};

    auto resolve_in = [&](std::vector<Stmt>& body, const std::vector<ParamDecl>& params,
                          const std::vector<ParamDecl>& returns) {
        std::map<std::string, std::pair<RefKind, std::string>> local_scope;
        for (const auto& p : params)
            if (!p.name.empty()) local_scope[p.name] = {RefKind::Param, p.type_name};
        for (const auto& r : returns)
            if (!r.name.empty()) local_scope[r.name] = {RefKind::LocalVar, r.type_name};
        for_each_stmt_mut(body, [&](Stmt& s) {
            if (s.kind != StmtKind::Declare) return;
            for (size_t i = 0; i < s.decl_names.size(); ++i)
                if (!s.decl_names[i].empty())
                    local_scope[s.decl_names[i]] = {
                        RefKind::LocalVar, i < s.decl_types.size() ? s.decl_types[i] : ""};
        });
        for_each_stmt_mut(body, [&](Stmt& s) {
            for (auto& root : s.exprs) {
                std::function<void(Expr&)> walk = [&](Expr& e) {
                    if (e.kind == ExprKind::Identifier && !e.name.empty()) {
                        if (e.name == "now") { // 0.6 alias for block.timestamp
                            e.kind = ExprKind::SpecialRef;
                            e.special = SpecialKind::BlockTimestamp;
                        } else if (auto it = local_scope.find(e.name); it != local_scope.end()) {
                            e.ref = it->second.first;
                            e.type_name = it->second.second;
                        } else if (auto it2 = contract_scope.find(e.name);
                                   it2 != contract_scope.end()) {
                            e.ref = it2->second.first;
                            if (e.type_name.empty()) e.type_name = it2->second.second;
                        } else if (builtins.count(e.name)) {
                            e.ref = RefKind::Builtin;
                        } else {
                            e.ref = RefKind::Unresolved;
                        }
                    }
                    for (auto& c : e.sub) walk(c);
                    for (auto& [k, opt] : e.call_options)
                        if (opt) walk(*opt);
                };
                walk(root);
            }
        });
    };

    for (auto& f : contract.functions) resolve_in(f.body, f.params, f.returns);
    for (auto& m : contract.modifiers) resolve_in(m.body, m.params, {});
}

// ---------------------------------------------------------------------------
// Flattening

inline SourceUnit flatten_inheritance(const SourceUnit& input) {
    SourceUnit unit = input;
    std::map<std::string, const ContractIR*> by_name;
    for (const auto& c : input.contracts) by_name[c.name] = &c;

    std::vector<ContractIR> flattened;
    flattened.reserve(input.contracts.size());
    for (const auto& c : input.contracts) {
        std::set<std::string> in_progress;
        std::vector<std::string> unresolved;
        auto mro = inherit_detail::linearize(c.name, by_name, in_progress, unresolved);

        ContractIR out;
        out.name = c.name;
        out.kind = c.kind;
        out.bases = c.bases;
        out.loc = c.loc;
        out.flattened = true;
        for (const auto& u : unresolved) {
            out.unresolved_bases.push_back(u);
            diag(unit.diagnostics, Severity::Note, "unresolved-base",
                 "contract " + c.name + ": base " + u + " not found in unit", c.loc);
        }

        // State vars: base-most first (Solidity storage layout order).
        std::map<std::string, size_t> var_index;
        for (auto it = mro.rbegin(); it != mro.rend(); ++it) {
            const ContractIR& src = *by_name.at(*it);
            for (const auto& v : src.state_vars) {
                auto found = var_index.find(v.name);
                if (found == var_index.end()) {
                    var_index[v.name] = out.state_vars.size();
                    out.state_vars.push_back(v);
                } else {
                    out.state_vars[found->second] = v; // derived re-declaration wins in place
                    diag(unit.diagnostics, Severity::Warning, "shadowed-state-var",
                         "state variable " + v.name + " shadows a base declaration in " + c.name,
                         v.loc);
                }
            }
            for (const auto& [sname, sd] : src.structs) out.structs.emplace(sname, sd);
            for (const auto& e : src.events)
                if (std::find(out.events.begin(), out.events.end(), e) == out.events.end())
                    out.events.push_back(e);
        }

        // Functions: most-derived-first; first (name, signature) wins. Bodies
        // beat interface declarations. Constructors concatenate base-most first.
        std::set<std::string> seen_sigs;
        std::vector<const FunctionIR*> ctors;
        for (const auto& cname : mro) {
            const ContractIR& src = *by_name.at(cname);
            for (const auto& f : src.functions) {
                if (f.kind == "constructor") {
                    ctors.push_back(&f);
                    continue;
                }
                std::string sig = f.signature();
                if (seen_sigs.count(sig)) continue;
                // prefer an implemented version from a base over a bare declaration
                if (!f.has_body) {
                    bool implemented_later = false;
                    for (const auto& bname : mro) {
                        const ContractIR& bc = *by_name.at(bname);
                        for (const auto& bf : bc.functions)
                            if (bf.signature() == sig && bf.has_body) implemented_later = true;
                    }
                    if (implemented_later) continue;
                }
                seen_sigs.insert(sig);
                out.functions.push_back(f);
            }
            for (const auto& m : src.modifiers) {
                bool present = false;
                for (const auto& om : out.modifiers)
                    if (om.name == m.name) present = true;
                if (!present) out.modifiers.push_back(m);
            }
        }
        if (!ctors.empty()) {
            FunctionIR ctor = *ctors.front(); // most-derived signature and params
            ctor.body.clear();
            for (auto it = ctors.rbegin(); it != ctors.rend(); ++it)
                ctor.body.insert(ctor.body.end(), (*it)->body.begin(), (*it)->body.end());
            out.functions.push_back(std::move(ctor));
        }

        number_statements(out);
        resolve_identifiers(out);
        flattened.push_back(std::move(out));
    }
    unit.contracts = std::move(flattened);
    return unit;
}

} // namespace ssrlint
