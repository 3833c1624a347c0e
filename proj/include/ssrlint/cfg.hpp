// Per-function control-flow graph with guard nodes. Modifier conditions are
// inlined as entry guards in application order; require statements split
// blocks so their false edge reaches the synthetic exit.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ssrlint/ir.hpp"

namespace ssrlint {

struct GuardNode {
    Expr condition;               // raw condition expression
    bool negated = false;         // effective condition is !condition (if-revert form)
    std::string origin;           // require|modifier|if|loop
    std::set<int> dominated_stmts;
    int block_id = -1;            // block whose terminator carries the guard (-1: entry guard)
    SourceLoc loc;
};

struct BasicBlock {
    int id = 0;
    std::vector<const Stmt*> stmts;
    bool reachable = true;
};

struct CfgEdge {
    enum class Kind { Fallthrough, True, False, LoopBack };
    int from = 0;
    int to = 0;
    Kind kind = Kind::Fallthrough;
};

struct Cfg {
    std::vector<BasicBlock> blocks;
    std::vector<CfgEdge> edges;
    std::vector<GuardNode> guards;
    int entry = 0;
    int exit = 0;

    std::vector<const GuardNode*> guards_dominating(int stmt_id) const {
        std::vector<const GuardNode*> out;
        for (const auto& g : guards)
            if (g.dominated_stmts.count(stmt_id)) out.push_back(&g);
        return out;
    }
};

namespace cfg_detail {

inline void collect_ids(const std::vector<Stmt>& body, std::set<int>& out) {
    for_each_stmt(body, [&](const Stmt& s) { out.insert(s.id); });
}

inline bool body_is_revert_only(const std::vector<Stmt>& body) {
    if (body.empty()) return false;
    for (const auto& s : body)
        if (s.kind != StmtKind::Revert) return false;
    return true;
}

// Substitutes modifier parameters with the invocation arguments inside a
// condition expression.
inline Expr bind_params(const Expr& e, const std::map<std::string, const Expr*>& binding) {
    if (e.kind == ExprKind::Identifier) {
        auto it = binding.find(e.name);
        if (it != binding.end()) return *it->second;
    }
    Expr out = e;
    for (auto& c : out.sub) c = bind_params(c, binding);
    return out;
}

class Builder {
public:
    explicit Builder(Cfg& cfg) : cfg_(cfg) {}

    int new_block() {
        BasicBlock b;
        b.id = static_cast<int>(cfg_.blocks.size());
        cfg_.blocks.push_back(b);
        return b.id;
    }
    void edge(int from, int to, CfgEdge::Kind kind) { cfg_.edges.push_back({from, to, kind}); }

    // Builds the block structure for a statement list starting in `cur`;
    // returns the block that control flows out of (or -1 if terminated).
    int build_list(const std::vector<Stmt>& body, int cur) {
        for (size_t i = 0; i < body.size(); ++i) {
            const Stmt& s = body[i];
            if (cur < 0) { // unreachable tail after return/revert
                cur = new_block();
                cfg_.blocks[cur].reachable = false;
            }
            switch (s.kind) {
                case StmtKind::Require: {
                    cfg_.blocks[cur].stmts.push_back(&s);
                    GuardNode g;
                    if (!s.exprs.empty()) g.condition = s.exprs[0];
                    g.origin = "require";
                    g.block_id = cur;
                    g.loc = s.loc;
                    // dominates the remaining siblings (and everything nested there)
                    std::vector<Stmt> rest(body.begin() + i + 1, body.end());
                    collect_ids(rest, g.dominated_stmts);
                    cfg_.guards.push_back(std::move(g));
                    int next = new_block();
                    edge(cur, next, CfgEdge::Kind::True);
                    edge(cur, cfg_.exit, CfgEdge::Kind::False);
                    cur = next;
                    break;
                }
                case StmtKind::If: {
                    cfg_.blocks[cur].stmts.push_back(&s);
                    GuardNode g;
                    if (!s.exprs.empty()) g.condition = s.exprs[0];
                    g.origin = "if";
                    g.block_id = cur;
                    g.loc = s.loc;
                    collect_ids(s.body, g.dominated_stmts);
                    collect_ids(s.else_body, g.dominated_stmts);
                    if (body_is_revert_only(s.body) && s.else_body.empty()) {
                        // require-like: everything after is control-dependent
                        g.negated = true;
                        std::vector<Stmt> rest(body.begin() + i + 1, body.end());
                        collect_ids(rest, g.dominated_stmts);
                    }
                    cfg_.guards.push_back(std::move(g));

                    int then_entry = new_block();
                    edge(cur, then_entry, CfgEdge::Kind::True);
                    int then_out = build_list(s.body, then_entry);
                    int else_out;
                    if (!s.else_body.empty()) {
                        int else_entry = new_block();
                        edge(cur, else_entry, CfgEdge::Kind::False);
                        else_out = build_list(s.else_body, else_entry);
                    } else {
                        else_out = cur; // false edge goes straight to the join
                    }
                    int join = new_block();
                    if (then_out >= 0) edge(then_out, join, CfgEdge::Kind::Fallthrough);
                    if (else_out >= 0)
                        edge(else_out, join,
                             else_out == cur ? CfgEdge::Kind::False : CfgEdge::Kind::Fallthrough);
                    cur = join;
                    break;
                }
                case StmtKind::Loop: {
                    int header = new_block();
                    edge(cur, header, CfgEdge::Kind::Fallthrough);
                    cfg_.blocks[header].stmts.push_back(&s);
                    GuardNode g;
                    if (!s.exprs.empty()) g.condition = s.exprs[0];
                    g.origin = "loop";
                    g.block_id = header;
                    g.loc = s.loc;
                    collect_ids(s.body, g.dominated_stmts);
                    cfg_.guards.push_back(std::move(g));
                    int body_entry = new_block();
                    edge(header, body_entry, CfgEdge::Kind::True);
                    int body_out = build_list(s.body, body_entry);
                    if (body_out >= 0) edge(body_out, header, CfgEdge::Kind::LoopBack);
                    int after = new_block();
                    edge(header, after, CfgEdge::Kind::False);
                    cur = after;
                    break;
                }
                case StmtKind::Return:
                    cfg_.blocks[cur].stmts.push_back(&s);
                    edge(cur, cfg_.exit, CfgEdge::Kind::Fallthrough);
                    cur = -1;
                    break;
                case StmtKind::Revert:
                    cfg_.blocks[cur].stmts.push_back(&s);
                    edge(cur, cfg_.exit, CfgEdge::Kind::Fallthrough);
                    cur = -1;
                    break;
                default:
                    cfg_.blocks[cur].stmts.push_back(&s);
                    break;
            }
        }
        return cur;
    }

private:
    Cfg& cfg_;
};

} // namespace cfg_detail

inline Cfg build_cfg(const FunctionIR& f, const ContractIR& contract) {
    Cfg cfg;
    cfg_detail::Builder builder(cfg);
    cfg.exit = builder.new_block(); // block 0 reserved as synthetic exit
    cfg.entry = builder.new_block();

    // modifier conditions become entry guards, in application order
    std::set<int> all_ids;
    cfg_detail::collect_ids(f.body, all_ids);
    for (const auto& mi : f.modifiers_applied) {
        const ModifierIR* mod = nullptr;
        for (const auto& m : contract.modifiers)
            if (m.name == mi.name) mod = &m;
        if (!mod) continue;
        std::map<std::string, const Expr*> binding;
        for (size_t i = 0; i < mod->params.size() && i < mi.args.size(); ++i)
            binding[mod->params[i].name] = &mi.args[i];
        for_each_stmt(mod->body, [&](const Stmt& s) {
            GuardNode g;
            g.origin = "modifier";
            g.block_id = -1;
            g.loc = s.loc;
            g.dominated_stmts = all_ids;
            if (s.kind == StmtKind::Require && !s.exprs.empty()) {
                g.condition = cfg_detail::bind_params(s.exprs[0], binding);
                cfg.guards.push_back(std::move(g));
            } else if (s.kind == StmtKind::If && cfg_detail::body_is_revert_only(s.body) &&
                       s.else_body.empty() && !s.exprs.empty()) {
                g.condition = cfg_detail::bind_params(s.exprs[0], binding);
                g.negated = true;
                cfg.guards.push_back(std::move(g));
            }
        });
    }

    int out = builder.build_list(f.body, cfg.entry);
    if (out >= 0) cfg.edges.push_back({out, cfg.exit, CfgEdge::Kind::Fallthrough});

    // reachability from entry
    std::set<int> seen{cfg.entry};
    std::vector<int> work{cfg.entry};
    while (!work.empty()) {
        int b = work.back();
        work.pop_back();
        for (const auto& e : cfg.edges)
            if (e.from == b && !seen.count(e.to)) {
                seen.insert(e.to);
                work.push_back(e.to);
            }
    }
    for (auto& b : cfg.blocks)
        if (b.id != cfg.exit) b.reachable = seen.count(b.id) > 0;
    return cfg;
}

} // namespace ssrlint
