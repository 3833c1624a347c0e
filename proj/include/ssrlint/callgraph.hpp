// Interprocedural call graph: internal / external(target type) / low-level
// edges, plus the external-reachability closure.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ssrlint/ir.hpp"

namespace ssrlint {

struct CallSite {
    enum class Kind { Internal, External, LowLevel };
    Kind kind = Kind::Internal;
    std::string caller;       // display name
    std::string callee;       // function/member name
    std::string target_type;  // static type of the receiver, when known
    bool resolved = true;     // internal edges: callee found in contract
    int stmt_id = -1;
    SourceLoc loc;
};

struct CallGraph {
    std::vector<CallSite> edges;
    std::set<std::string> ext_reachable;

    std::vector<const CallSite*> calls_from(const std::string& fn) const {
        std::vector<const CallSite*> out;
        for (const auto& e : edges)
            if (e.caller == fn) out.push_back(&e);
        return out;
    }
    std::vector<const CallSite*> internal_callers_of(const std::string& fn) const {
        std::vector<const CallSite*> out;
        for (const auto& e : edges)
            if (e.kind == CallSite::Kind::Internal && e.callee == fn && e.resolved)
                out.push_back(&e);
        return out;
    }
    bool externally_reachable(const std::string& fn) const { return ext_reachable.count(fn) > 0; }
};

namespace callgraph_detail {

inline const std::set<std::string>& arithmetic_members() {
    static const std::set<std::string> m = {"mul", "div", "add", "sub", "mod"};
    return m;
}

inline std::string receiver_static_type(const Expr& base, const ContractIR& contract) {
    if (base.kind == ExprKind::Identifier) {
        if (const StateVarDecl* v = contract.find_state_var(base.name)) {
            if (v->type_desc.is_contract_ref()) return v->type_desc.name;
            return "";
        }
        if (base.ref == RefKind::Param || base.ref == RefKind::LocalVar) {
            // declared type text, if it names a user type
            if (!base.type_name.empty() && base.type_name != "address" &&
                base.type_name.rfind("uint", 0) != 0 && base.type_name != "bool")
                return base.type_name;
        }
        return "";
    }
    if (base.kind == ExprKind::TypeConversion) return base.name; // IERC20(x).f()
    return "";
}

inline bool is_address_typed(const Expr& base) {
    if (base.kind == ExprKind::SpecialRef) return true;
    if (base.kind == ExprKind::TypeConversion)
        return base.name.rfind("address", 0) == 0;
    return base.type_name.rfind("address", 0) == 0;
}

} // namespace callgraph_detail

inline CallGraph build_callgraph(const ContractIR& contract) {
    CallGraph cg;
    for (const auto& f : contract.functions) {
        for_each_stmt(f.body, [&](const Stmt& s) {
            for_each_expr_in(s, [&](const Expr& e) {
                if (e.kind != ExprKind::Call || e.sub.empty()) return;
                const Expr& callee = e.sub[0];
                CallSite site;
                site.caller = f.display_name();
                site.stmt_id = s.id;
                site.loc = e.loc.line ? e.loc : s.loc;
                if (callee.kind == ExprKind::Identifier) {
                    if (callee.ref == RefKind::Builtin || callee.ref == RefKind::EventRef ||
                        callee.ref == RefKind::TypeRef || callee.name == "new")
                        return;
                    site.kind = CallSite::Kind::Internal;
                    site.callee = callee.name;
                    site.resolved = contract.find_function(callee.name) != nullptr;
                    cg.edges.push_back(std::move(site));
                    return;
                }
                if (callee.kind == ExprKind::MemberAccess && !callee.sub.empty()) {
                    const Expr& base = callee.sub[0];
                    if (callgraph_detail::arithmetic_members().count(callee.name)) return;
                    if (base.is_identifier("this") || base.is_identifier("super")) {
                        site.kind = CallSite::Kind::Internal;
                        site.callee = callee.name;
                        site.resolved = contract.find_function(callee.name) != nullptr;
                        cg.edges.push_back(std::move(site));
                        return;
                    }
                    if ((callee.name == "call" || callee.name == "delegatecall" ||
                         callee.name == "staticcall") &&
                        callgraph_detail::is_address_typed(base)) {
                        site.kind = CallSite::Kind::LowLevel;
                        site.callee = callee.name;
                        cg.edges.push_back(std::move(site));
                        return;
                    }
                    std::string target = callgraph_detail::receiver_static_type(base, contract);
                    if (!target.empty() || base.kind == ExprKind::Identifier ||
                        base.kind == ExprKind::TypeConversion) {
                        site.kind = CallSite::Kind::External;
                        site.callee = callee.name;
                        site.target_type = target;
                        cg.edges.push_back(std::move(site));
                    }
                }
            });
        });
    }

    // ext_reachable: closure of public/external functions over internal edges
    std::vector<std::string> work;
    for (const auto& f : contract.functions) {
        if (f.is_public_or_external() && f.kind != "constructor") {
            cg.ext_reachable.insert(f.display_name());
            work.push_back(f.display_name());
        }
    }
    while (!work.empty()) {
        std::string cur = work.back();
        work.pop_back();
        for (const auto& e : cg.edges) {
            if (e.caller != cur || e.kind != CallSite::Kind::Internal || !e.resolved) continue;
            if (cg.ext_reachable.insert(e.callee).second) work.push_back(e.callee);
        }
    }
    return cg;
}

} // namespace ssrlint
