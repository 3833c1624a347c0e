// Flow-insensitive def-use facts: per-variable def/use statement sets and the
// state read/write sets with resolved VariablePaths, including one-level
// storage-pointer alias resolution (`UserInfo storage u = userInfo[x]`).
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssrlint/ir.hpp"
#include "ssrlint/paths.hpp"

namespace ssrlint {

struct StateAccess {
    VariablePath path;
    AddrClass key = AddrClass::unknown(); // index key class, when the base is a mapping
    int stmt_id = -1;
    SourceLoc loc;
    std::string op;       // writes: "=", "+=", "-=", "++", ...
    bool via_alias = false;
    bool key_resolved = false;
};

struct StorageAlias {
    std::string base;
    AddrClass key;
    bool valid = true;
};

struct DefUse {
    std::map<std::string, std::set<int>> defs; // variable name -> stmt ids
    std::map<std::string, std::set<int>> uses;
    std::vector<StateAccess> state_reads;
    std::vector<StateAccess> state_writes;
    std::map<std::string, StorageAlias> aliases;
    Diagnostics diagnostics;

    bool writes_path(const VariablePath& p) const {
        for (const auto& a : state_writes)
            if (a.path.same_slot(p)) return true;
        return false;
    }
    bool reads_path(const VariablePath& p) const {
        for (const auto& a : state_reads)
            if (a.path.same_slot(p)) return true;
        return false;
    }
};

namespace defuse_detail {

// Resolves an lvalue/rvalue storage reference into (base, member, key).
// Handles: stateVar | stateVar[k] | stateVar[k].m | stateVar[k][i] |
// stateVar[k][i].m | aliasLocal | aliasLocal.m
inline std::optional<StateAccess> resolve_path(const Expr& e, const ContractIR& contract,
                                               const std::map<std::string, StorageAlias>& aliases) {
    StateAccess acc;
    const Expr* cur = &e;
    if (cur->kind == ExprKind::MemberAccess) {
        acc.path.member = cur->name;
        cur = &cur->sub[0];
    }
    // unwrap nested index accesses, keeping the outermost mapping key
    const Expr* key_expr = nullptr;
    while (cur->kind == ExprKind::IndexAccess) {
        if (cur->sub.size() > 1) key_expr = &cur->sub[1];
        cur = &cur->sub[0];
    }
    auto finish = [&](const std::string& base) -> std::optional<StateAccess> {
        acc.path.base = base;
        const StateVarDecl* v = contract.find_state_var(base);
        if (v) acc.path.key_shape = key_shape_of(v->type_desc);
        // a member survives only if the base's innermost value type is a struct
        // actually declaring it; `.mul(x)`, `.length` and friends are not paths
        if (!acc.path.member.empty()) {
            bool valid_member = false;
            if (v) {
                const TypeDesc& leaf = v->type_desc.leaf();
                if (leaf.kind == TypeDesc::Kind::Struct) {
                    if (const StructDef* sd = contract.find_struct(leaf.name)) {
                        for (const auto& [mname, mtype] : sd->members)
                            if (mname == acc.path.member) valid_member = true;
                    }
                }
            }
            if (!valid_member) acc.path.member.clear();
        }
        return acc;
    };
    if (cur->kind == ExprKind::Identifier && cur->ref == RefKind::StateVar) {
        if (key_expr) {
            acc.key = classify_address(*key_expr);
            acc.key_resolved = true;
        }
        return finish(cur->name);
    }
    if (cur->kind == ExprKind::Identifier && cur->ref == RefKind::LocalVar) {
        auto it = aliases.find(cur->name);
        if (it != aliases.end() && it->second.valid) {
            acc.key = it->second.key;
            acc.key_resolved = true;
            acc.via_alias = true;
            return finish(it->second.base);
        }
    }
    return std::nullopt;
}

inline void collect_var_reads(const Expr& e, std::set<std::string>& out) {
    for_each_expr(e, [&](const Expr& n) {
        if (n.kind == ExprKind::Identifier &&
            (n.ref == RefKind::StateVar || n.ref == RefKind::LocalVar || n.ref == RefKind::Param))
            out.insert(n.name);
    });
}

inline void collect_state_reads(const Expr& e, const ContractIR& contract,
                                const std::map<std::string, StorageAlias>& aliases, const Stmt& s,
                                std::vector<StateAccess>& out) {
    // resolve the largest path expression first, then recurse into index keys
    if (e.kind == ExprKind::MemberAccess || e.kind == ExprKind::IndexAccess ||
        (e.kind == ExprKind::Identifier &&
         (e.ref == RefKind::StateVar || e.ref == RefKind::LocalVar))) {
        auto acc = resolve_path(e, contract, aliases);
        if (acc && (e.kind != ExprKind::Identifier || e.ref == RefKind::StateVar ||
                    acc->via_alias)) {
            acc->stmt_id = s.id;
            acc->loc = e.loc;
            out.push_back(*acc);
            // still recurse into index expressions (their reads count)
            const Expr* cur = &e;
            while (cur->kind == ExprKind::MemberAccess || cur->kind == ExprKind::IndexAccess) {
                if (cur->kind == ExprKind::IndexAccess && cur->sub.size() > 1)
                    collect_state_reads(cur->sub[1], contract, aliases, s, out);
                cur = &cur->sub[0];
            }
            return;
        }
    }
    for (const auto& c : e.sub) collect_state_reads(c, contract, aliases, s, out);
    for (const auto& [k, opt] : e.call_options)
        if (opt) collect_state_reads(*opt, contract, aliases, s, out);
}

} // namespace defuse_detail

inline DefUse build_defuse(const FunctionIR& f, const ContractIR& contract) {
    DefUse du;

    // pass 1: storage-pointer aliases (one level deep)
    for_each_stmt(f.body, [&](const Stmt& s) {
        if (s.kind != StmtKind::Declare || !s.decl_is_storage_ref || s.exprs.empty()) return;
        if (s.decl_names.size() != 1 || s.decl_names[0].empty()) return;
        const Expr& init = s.exprs[0];
        const Expr* cur = &init;
        const Expr* key_expr = nullptr;
        while (cur->kind == ExprKind::IndexAccess) {
            if (cur->sub.size() > 1 && !key_expr) key_expr = &cur->sub[1];
            cur = &cur->sub[0];
        }
        StorageAlias alias;
        if (cur->kind == ExprKind::Identifier && cur->ref == RefKind::StateVar) {
            alias.base = cur->name;
            alias.key = key_expr ? classify_address(*key_expr) : AddrClass::unknown();
        } else {
            alias.valid = false; // alias of an alias, or non-state base
            diag(du.diagnostics, Severity::Warning, "unresolved-alias",
                 "storage pointer " + s.decl_names[0] + " cannot be traced to a state variable",
                 s.loc);
        }
        du.aliases[s.decl_names[0]] = alias;
    });

    // pass 2: defs/uses and state accesses
    for_each_stmt(f.body, [&](const Stmt& s) {
        auto add_reads_of = [&](const Expr& e) {
            std::set<std::string> names;
            defuse_detail::collect_var_reads(e, names);
            for (const auto& n : names) du.uses[n].insert(s.id);
            defuse_detail::collect_state_reads(e, contract, du.aliases, s, du.state_reads);
        };
        std::function<void(const Expr&, const std::string&)> add_write =
            [&](const Expr& lhs, const std::string& op) {
            // scalar local defs
            if (lhs.kind == ExprKind::Identifier &&
                (lhs.ref == RefKind::LocalVar || lhs.ref == RefKind::Param)) {
                du.defs[lhs.name].insert(s.id);
                if (du.aliases.count(lhs.name)) return; // alias rebinding, not a state write
            }
            auto acc = defuse_detail::resolve_path(lhs, contract, du.aliases);
            if (acc) {
                if (lhs.kind == ExprKind::Identifier && lhs.ref == RefKind::LocalVar &&
                    !acc->via_alias)
                    return;
                acc->stmt_id = s.id;
                acc->loc = lhs.loc;
                acc->op = op;
                du.state_writes.push_back(*acc);
                du.defs[acc->path.base].insert(s.id);
                // index keys are read even in write position
                const Expr* cur = &lhs;
                while (cur->kind == ExprKind::MemberAccess || cur->kind == ExprKind::IndexAccess) {
                    if (cur->kind == ExprKind::IndexAccess && cur->sub.size() > 1)
                        add_reads_of(cur->sub[1]);
                    cur = &cur->sub[0];
                }
            } else if (lhs.kind == ExprKind::Identifier && lhs.ref == RefKind::StateVar) {
                du.defs[lhs.name].insert(s.id);
            } else if (lhs.kind == ExprKind::Tuple) {
                for (const auto& c : lhs.sub)
                    if (c.kind != ExprKind::Identifier || !c.name.empty()) add_write(c, op);
            }
        };

        switch (s.kind) {
            case StmtKind::Assign: {
                add_write(s.exprs[0], s.op);
                if (s.op != "=") add_reads_of(s.exprs[0]); // compound assignment also reads
                if (s.exprs.size() > 1) add_reads_of(s.exprs[1]);
                break;
            }
            case StmtKind::Declare: {
                for (const auto& n : s.decl_names)
                    if (!n.empty()) du.defs[n].insert(s.id);
                if (!s.exprs.empty()) add_reads_of(s.exprs[0]);
                break;
            }
            default:
                for (const auto& e : s.exprs) add_reads_of(e);
                break;
        }
    });
    return du;
}

} // namespace ssrlint
