// Calculation Dependency Graph construction. Rooted at a transferred-amount
// variable; Cal edges follow defining expressions (descending into internal
// calls with argument binding, collapsing bare return locals), Con edges come
// from guards dominating definitions and the transfer statement itself.
#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssrlint/analysis.hpp"
#include "ssrlint/ir.hpp"
#include "ssrlint/paths.hpp"

namespace ssrlint {

struct CdgNode {
    enum class Kind { StateVar, Local, Param, Balance, ExternalSource, Constant, Time };
    Kind kind = Kind::Local;
    VariablePath path;        // StateVar
    std::string function;     // Local/Param owner
    std::string name;         // local/param name, callee name, constant text
    std::string target;       // ExternalSource receiver (state var / param / "this")
    std::string target_type;  // ExternalSource receiver static type
    bool token_balance = false;

    std::string id() const {
        switch (kind) {
            case Kind::StateVar: return "S:" + path.str();
            case Kind::Local: return "L:" + function + ":" + name;
            case Kind::Param: return "P:" + function + ":" + name;
            case Kind::Balance: return token_balance ? "B:token:" + target : "B:native";
            case Kind::ExternalSource: return "X:" + target + ":" + name;
            case Kind::Constant: return "C:" + name;
            case Kind::Time: return "T:timestamp";
        }
        return "?";
    }
    std::string display() const {
        switch (kind) {
            case Kind::StateVar: return path.str();
            case Kind::Local: return name;
            case Kind::Param: return name;
            case Kind::Balance: return token_balance ? target + ".balanceOf(this)" : "this.balance";
            case Kind::ExternalSource: return target + "." + name + "()";
            case Kind::Constant: return name;
            case Kind::Time: return "block.timestamp";
        }
        return "?";
    }
};

struct CdgEdge {
    enum class Kind { Cal, Con };
    std::string from;
    std::string to;
    Kind kind = Kind::Cal;
};

struct Cdg {
    std::string function;       // transfer function
    int transfer_stmt_id = -1;
    SourceLoc transfer_loc;
    std::string root_id;
    std::map<std::string, CdgNode> nodes;
    std::vector<CdgEdge> edges;

    std::set<VariablePath> state_dep;
    bool dep_native_balance = false;
    bool dep_token_balance = false;
    bool has_time_node = false;
    bool truncated = false;
    bool crossed_lowlevel = false;
    bool crossed_unanalyzed = false;
    bool ambiguous = false;

    const CdgNode& root() const { return nodes.at(root_id); }
    bool contains_state(const VariablePath& p) const {
        for (const auto& sp : state_dep)
            if (sp.same_slot(p)) return true;
        return false;
    }
    std::vector<const CdgNode*> external_sources() const {
        std::vector<const CdgNode*> out;
        for (const auto& [id, n] : nodes)
            if (n.kind == CdgNode::Kind::ExternalSource) out.push_back(&n);
        return out;
    }
    std::set<std::string> edge_targets(CdgEdge::Kind k) const {
        std::set<std::string> out;
        for (const auto& e : edges)
            if (e.kind == k) out.insert(nodes.at(e.to).display());
        return out;
    }
    bool has_edge_to(const std::string& display_name, CdgEdge::Kind k) const {
        return edge_targets(k).count(display_name) > 0;
    }
    // reachability between nodes (root reaches everything by construction)
    bool reaches(const std::string& from_id, const std::string& to_id) const {
        if (from_id == to_id) return true;
        std::set<std::string> seen{from_id};
        std::vector<std::string> work{from_id};
        while (!work.empty()) {
            std::string cur = work.back();
            work.pop_back();
            for (const auto& e : edges) {
                if (e.from != cur || seen.count(e.to)) continue;
                if (e.to == to_id) return true;
                seen.insert(e.to);
                work.push_back(e.to);
            }
        }
        return false;
    }
};

class CdgBuilder {
public:
    CdgBuilder(const ContractIR& contract, const ContractAnalysis& analysis, int depth_bound = 16)
        : contract_(contract), analysis_(analysis), depth_bound_(depth_bound) {
        for (const auto& f : contract.functions) {
            bool opaque = false;
            for_each_stmt(f.body, [&](const Stmt& s) {
                if (s.unanalyzed) opaque = true;
            });
            if (opaque) opaque_fns_.insert(f.display_name());
        }
    }

    Cdg build(const TransferSite& site) {
        cdg_ = Cdg{};
        frames_.clear();
        frames_of_fn_.clear();
        visited_.clear();
        worklist_.clear();

        cdg_.function = site.function;
        cdg_.transfer_stmt_id = site.stmt_id;
        cdg_.transfer_loc = site.loc;

        const FunctionIR* fn = analysis_.function(site.function);
        Frame* root_frame = make_frame(fn, {}, nullptr, 0);

        CdgNode root = site.amount ? node_for_expr_root(*site.amount, *root_frame)
                                   : make_constant("0");
        cdg_.root_id = root.id();
        add_node(root);
        visited_.insert(root.id());
        if (expandable(root)) worklist_.push_back(root.id());

        // Con edges from guards dominating the transfer statement
        if (const Cfg* cfg = analysis_.cfg(site.function)) {
            for (const auto* g : cfg->guards_dominating(site.stmt_id))
                add_guard_deps(root.id(), g->condition, *root_frame);
        }

        while (!worklist_.empty()) {
            std::string id = worklist_.front();
            worklist_.pop_front();
            expand(id);
        }
        derive();
        return cdg_;
    }

private:
    struct Frame;
    struct Binding {
        const Expr* expr = nullptr;
        const Frame* frame = nullptr; // frame the expression is evaluated in
    };
    struct Frame {
        const FunctionIR* fn = nullptr;
        std::map<std::string, Binding> bindings;
        const Frame* parent = nullptr;
        int depth = 0;
    };

    Frame* make_frame(const FunctionIR* fn, std::map<std::string, Binding> bindings,
                      const Frame* parent, int depth) {
        frames_.push_back(Frame{fn, std::move(bindings), parent, depth});
        Frame* f = &frames_.back();
        if (fn) frames_of_fn_[fn->display_name()].push_back(f);
        return f;
    }

    // --- node helpers ------------------------------------------------------
    static CdgNode make_constant(std::string value) {
        CdgNode n;
        n.kind = CdgNode::Kind::Constant;
        n.name = std::move(value);
        return n;
    }
    CdgNode make_state(VariablePath p) const {
        CdgNode n;
        n.kind = CdgNode::Kind::StateVar;
        n.path = std::move(p);
        return n;
    }
    static CdgNode make_local(const std::string& fn, const std::string& name) {
        CdgNode n;
        n.kind = CdgNode::Kind::Local;
        n.function = fn;
        n.name = name;
        return n;
    }
    static CdgNode make_param(const std::string& fn, const std::string& name) {
        CdgNode n;
        n.kind = CdgNode::Kind::Param;
        n.function = fn;
        n.name = name;
        return n;
    }
    static CdgNode make_time() {
        CdgNode n;
        n.kind = CdgNode::Kind::Time;
        return n;
    }
    static CdgNode make_balance(bool token, std::string token_name) {
        CdgNode n;
        n.kind = CdgNode::Kind::Balance;
        n.token_balance = token;
        n.target = std::move(token_name);
        return n;
    }
    static CdgNode make_external(std::string target, std::string callee, std::string type) {
        CdgNode n;
        n.kind = CdgNode::Kind::ExternalSource;
        n.target = std::move(target);
        n.name = std::move(callee);
        n.target_type = std::move(type);
        return n;
    }

    static bool expandable(const CdgNode& n) {
        return n.kind == CdgNode::Kind::StateVar || n.kind == CdgNode::Kind::Local ||
               n.kind == CdgNode::Kind::Param;
    }

    void add_node(const CdgNode& n) {
        cdg_.nodes.emplace(n.id(), n);
    }
    void add_edge(const std::string& from, const CdgNode& to, CdgEdge::Kind kind) {
        if (to.id() == from) return; // reflexivity is by convention, not stored
        add_node(to);
        for (const auto& e : cdg_.edges)
            if (e.from == from && e.to == to.id() && e.kind == kind) return;
        cdg_.edges.push_back({from, to.id(), kind});
        if (expandable(to) && !visited_.count(to.id())) {
            visited_.insert(to.id());
            worklist_.push_back(to.id());
        }
    }

    // --- expansion -----------------------------------------------------------
    void expand(const std::string& id) {
        const CdgNode node = cdg_.nodes.at(id);
        switch (node.kind) {
            case CdgNode::Kind::StateVar: expand_state(id, node.path); break;
            case CdgNode::Kind::Local: expand_local(id, node.function, node.name); break;
            case CdgNode::Kind::Param: expand_param(id, node.function, node.name); break;
            default: break;
        }
    }

    std::vector<const Frame*> frames_for(const std::string& fn_name) {
        auto it = frames_of_fn_.find(fn_name);
        if (it != frames_of_fn_.end() && !it->second.empty()) return it->second;
        const FunctionIR* fn = analysis_.function(fn_name);
        return {make_frame(fn, {}, nullptr, 0)};
    }

    void expand_state(const std::string& id, const VariablePath& path) {
        // definitions anywhere in the contract, flow-insensitively
        for (const auto& f : contract_.functions) {
            const DefUse* du = analysis_.defuse(f.display_name());
            if (!du) continue;
            bool any_write = false;
            for (const auto& w : du->state_writes)
                if (w.path.same_slot(path)) any_write = true;
            if (!any_write) continue;
            auto frames = frames_for(f.display_name());
            for (const auto& w : du->state_writes) {
                if (!w.path.same_slot(path)) continue;
                const Stmt* s = analysis_.find_stmt(f.display_name(), w.stmt_id);
                if (!s) continue;
                const Expr* rhs = nullptr;
                if (s->kind == StmtKind::Assign && s->exprs.size() > 1) rhs = &s->exprs[1];
                if (s->kind == StmtKind::Declare && !s->exprs.empty()) rhs = &s->exprs[0];
                for (const Frame* frame : frames) {
                    if (rhs) walk_value(id, *rhs, *frame, CdgEdge::Kind::Cal);
                    if (const Cfg* cfg = analysis_.cfg(f.display_name()))
                        for (const auto* g : cfg->guards_dominating(w.stmt_id))
                            add_guard_deps(id, g->condition, *frame);
                }
            }
        }
        // declaration initializer
        if (const StateVarDecl* v = contract_.find_state_var(path.base)) {
            if (v->initial_value) {
                Frame* bare = make_frame(nullptr, {}, nullptr, 0);
                walk_value(id, *v->initial_value, *bare, CdgEdge::Kind::Cal);
            }
        }
    }

    void expand_local(const std::string& id, const std::string& fn_name, const std::string& name) {
        const DefUse* du = analysis_.defuse(fn_name);
        if (!du) return;
        auto dit = du->defs.find(name);
        if (dit == du->defs.end()) return;
        auto frames = frames_for(fn_name);
        for (int stmt_id : dit->second) {
            const Stmt* s = analysis_.find_stmt(fn_name, stmt_id);
            if (!s) continue;
            const Expr* rhs = nullptr;
            if (s->kind == StmtKind::Assign && s->exprs.size() > 1) {
                // skip writes that resolve to state (alias writes)
                rhs = &s->exprs[1];
            } else if (s->kind == StmtKind::Declare && !s->exprs.empty()) {
                rhs = &s->exprs[0];
            }
            if (!rhs) continue;
            for (const Frame* frame : frames) {
                walk_value(id, *rhs, *frame, CdgEdge::Kind::Cal);
                if (const Cfg* cfg = analysis_.cfg(fn_name))
                    for (const auto* g : cfg->guards_dominating(stmt_id))
                        add_guard_deps(id, g->condition, *frame);
            }
        }
    }

    void expand_param(const std::string& id, const std::string& fn_name, const std::string& name) {
        auto it = frames_of_fn_.find(fn_name);
        if (it == frames_of_fn_.end()) return;
        for (const Frame* frame : it->second) {
            auto bit = frame->bindings.find(name);
            if (bit == frame->bindings.end() || !bit->second.expr || !bit->second.frame) continue;
            walk_value(id, *bit->second.expr, *bit->second.frame, CdgEdge::Kind::Cal);
        }
    }

    void add_guard_deps(const std::string& from, const Expr& condition, const Frame& frame) {
        walk_value(from, condition, frame, CdgEdge::Kind::Con);
    }

    // --- expression walking ----------------------------------------------------
    void walk_value(const std::string& from, const Expr& e, const Frame& frame,
                    CdgEdge::Kind kind, int extra_depth = 0) {
        if (frame.fn && opaque_fns_.count(frame.fn->display_name())) cdg_.crossed_unanalyzed = true;
        switch (e.kind) {
            case ExprKind::Identifier: {
                if (e.ref == RefKind::StateVar) {
                    VariablePath p;
                    p.base = e.name;
                    if (const StateVarDecl* v = contract_.find_state_var(e.name))
                        p.key_shape = key_shape_of(v->type_desc);
                    add_edge(from, make_state(p), kind);
                    return;
                }
                if (e.ref == RefKind::LocalVar && frame.fn) {
                    const DefUse* du = analysis_.defuse(frame.fn->display_name());
                    if (du) {
                        auto ait = du->aliases.find(e.name);
                        if (ait != du->aliases.end()) {
                            if (ait->second.valid) {
                                VariablePath p;
                                p.base = ait->second.base;
                                add_edge(from, make_state(p), kind);
                            } else {
                                cdg_.ambiguous = true;
                            }
                            return;
                        }
                    }
                    add_edge(from, make_local(frame.fn->display_name(), e.name), kind);
                    return;
                }
                if (e.ref == RefKind::Param && frame.fn) {
                    auto bit = frame.bindings.find(e.name);
                    if (bit != frame.bindings.end() && bit->second.expr && bit->second.frame) {
                        walk_value(from, *bit->second.expr, *bit->second.frame, kind);
                        return;
                    }
                    add_edge(from, make_param(frame.fn->display_name(), e.name), kind);
                    return;
                }
                if (e.ref == RefKind::Unresolved && !e.name.empty() && e.name != "this") {
                    cdg_.ambiguous = true;
                    add_edge(from, make_external("<unresolved>", e.name, ""), kind);
                }
                return;
            }
            case ExprKind::SpecialRef:
                if (e.special == SpecialKind::ThisBalance)
                    add_edge(from, make_balance(false, ""), kind);
                else if (e.special == SpecialKind::BlockTimestamp ||
                         e.special == SpecialKind::BlockNumber)
                    add_edge(from, make_time(), kind);
                else if (e.special == SpecialKind::MsgValue && frame.fn)
                    add_edge(from, make_param(frame.fn->display_name(), "msg.value"), kind);
                return;
            case ExprKind::Literal:
                return;
            case ExprKind::MemberAccess:
            case ExprKind::IndexAccess: {
                if (frame.fn) {
                    const DefUse* du = analysis_.defuse(frame.fn->display_name());
                    static const std::map<std::string, StorageAlias> no_aliases;
                    auto acc = defuse_detail::resolve_path(e, contract_,
                                                           du ? du->aliases : no_aliases);
                    if (acc) {
                        add_edge(from, make_state(acc->path), kind);
                        return;
                    }
                }
                // unresolved shapes: walk the base (index keys are selectors,
                // not value dependencies)
                if (!e.sub.empty()) walk_value(from, e.sub[0], frame, kind);
                return;
            }
            case ExprKind::Call:
                walk_call(from, e, frame, kind, extra_depth);
                return;
            case ExprKind::BinaryOp:
            case ExprKind::UnaryOp:
            case ExprKind::Conditional:
            case ExprKind::Tuple:
            case ExprKind::TypeConversion:
                for (const auto& c : e.sub) walk_value(from, c, frame, kind, extra_depth);
                return;
        }
    }

    struct Receiver {
        std::string name;
        std::string type;
        bool is_state = false;
        bool is_this = false;
    };
    Receiver resolve_receiver(const Expr& base, const Frame& frame) const {
        if (base.kind == ExprKind::Identifier) {
            if (const StateVarDecl* v = contract_.find_state_var(base.name)) {
                std::string type = v->type_desc.is_contract_ref() ? v->type_desc.name : "";
                return {base.name, type, true, false};
            }
            if (base.ref == RefKind::Param) {
                auto bit = frame.bindings.find(base.name);
                if (bit != frame.bindings.end() && bit->second.expr && bit->second.frame)
                    return resolve_receiver(*bit->second.expr, *bit->second.frame);
                return {base.name, base.type_name, false, false};
            }
            if (base.is_identifier("this")) return {"this", contract_.name, false, true};
            return {base.name, base.type_name, false, false};
        }
        if (base.kind == ExprKind::SpecialRef && base.special == SpecialKind::AddressThis)
            return {"this", contract_.name, false, true};
        if (base.kind == ExprKind::TypeConversion) {
            if (!base.sub.empty()) {
                Receiver inner = resolve_receiver(base.sub[0], frame);
                if (!base.name.empty() && base.name.rfind("address", 0) != 0)
                    inner.type = base.name; // IERC20(x): conversion names the interface
                return inner;
            }
            return {"<dyn>", base.name, false, false};
        }
        return {"<dyn>", "", false, false};
    }

    void walk_call(const std::string& from, const Expr& e, const Frame& frame, CdgEdge::Kind kind,
                   int extra_depth) {
        if (e.sub.empty()) return;
        const Expr& callee = e.sub[0];
        auto walk_args = [&] {
            for (size_t i = 1; i < e.sub.size(); ++i) walk_value(from, e.sub[i], frame, kind);
        };

        if (callee.kind == ExprKind::Identifier) {
            const std::string& name = callee.name;
            if (name == "_msgSender" || name == "msgSender") return;
            if (name == "require" || name == "assert" || name == "revert") return;
            const FunctionIR* g = contract_.find_function(name);
            if (g && g->has_body) {
                descend_call(from, *g, e, frame, kind, extra_depth);
                return;
            }
            if (callee.ref == RefKind::Builtin || callee.ref == RefKind::TypeRef) {
                walk_args();
                return;
            }
            // unresolved bare call (inherited external helper, totalSupply() on
            // self, ...) behaves as an opaque value source
            add_edge(from, make_external("this", name, ""), kind);
            walk_args();
            return;
        }
        if (callee.kind != ExprKind::MemberAccess || callee.sub.empty()) return;

        const Expr& base = callee.sub[0];
        const std::string& member = callee.name;
        if (callgraph_detail::arithmetic_members().count(member)) {
            walk_value(from, base, frame, kind, extra_depth);
            walk_args();
            return;
        }
        if (base.is_identifier("this") || base.is_identifier("super")) {
            const FunctionIR* g = contract_.find_function(member);
            if (g && g->has_body) {
                descend_call(from, *g, e, frame, kind, extra_depth);
                return;
            }
        }
        if (member == "call" || member == "delegatecall" || member == "staticcall") {
            cdg_.crossed_lowlevel = true;
            add_edge(from, make_external("<lowlevel>", member, ""), kind);
            return;
        }
        Receiver recv = resolve_receiver(base, frame);
        if (member == "balanceOf" && e.sub.size() == 2 &&
            (e.sub[1].special == SpecialKind::AddressThis || e.sub[1].is_identifier("this"))) {
            add_edge(from, make_balance(true, recv.name), kind);
            if (recv.is_state) {
                VariablePath p;
                p.base = recv.name;
                add_edge(from, make_state(p), kind);
            }
            return;
        }
        if (recv.is_this) {
            const FunctionIR* g = contract_.find_function(member);
            if (g && g->has_body) {
                descend_call(from, *g, e, frame, kind, extra_depth);
                return;
            }
        }
        add_edge(from, make_external(recv.name, member, recv.type), kind);
        if (recv.is_state) {
            VariablePath p;
            p.base = recv.name;
            add_edge(from, make_state(p), kind);
        }
        walk_args();
    }

    void descend_call(const std::string& from, const FunctionIR& g, const Expr& call,
                      const Frame& frame, CdgEdge::Kind kind, int extra_depth) {
        int depth = frame.depth + extra_depth + 1;
        if (depth > depth_bound_) {
            cdg_.truncated = true;
            return;
        }
        std::map<std::string, Binding> bindings;
        for (size_t i = 0; i < g.params.size(); ++i) {
            size_t arg_index = i + 1;
            if (arg_index < call.sub.size() && !g.params[i].name.empty())
                bindings[g.params[i].name] = Binding{&call.sub[arg_index], &frame};
        }
        Frame* frame_g = make_frame(&g, std::move(bindings), &frame, depth);

        // dependencies of the callee's returned value
        std::vector<const Expr*> returns;
        for_each_stmt(g.body, [&](const Stmt& s) {
            if (s.kind == StmtKind::Return && !s.exprs.empty()) returns.push_back(&s.exprs[0]);
        });
        std::set<std::string> collapsing;
        if (returns.empty()) {
            for (const auto& r : g.returns)
                if (!r.name.empty()) collapse_local(from, g, r.name, *frame_g, kind, collapsing);
        }
        for (const Expr* r : returns) {
            if (r->kind == ExprKind::Identifier && r->ref == RefKind::LocalVar) {
                collapse_local(from, g, r->name, *frame_g, kind, collapsing);
            } else {
                walk_value(from, *r, *frame_g, kind);
            }
        }
    }

    // Substitutes a bare returned local by its defining expressions so the
    // caller-side node depends directly on the callee's inputs.
    void collapse_local(const std::string& from, const FunctionIR& g, const std::string& name,
                        const Frame& frame_g, CdgEdge::Kind kind, std::set<std::string>& collapsing) {
        if (!collapsing.insert(name).second) return;
        const DefUse* du = analysis_.defuse(g.display_name());
        if (!du) return;
        auto dit = du->defs.find(name);
        if (dit == du->defs.end()) return;
        for (int stmt_id : dit->second) {
            const Stmt* s = analysis_.find_stmt(g.display_name(), stmt_id);
            if (!s) continue;
            const Expr* rhs = nullptr;
            if (s->kind == StmtKind::Assign && s->exprs.size() > 1) rhs = &s->exprs[1];
            if (s->kind == StmtKind::Declare && !s->exprs.empty()) rhs = &s->exprs[0];
            if (!rhs) continue;
            if (rhs->kind == ExprKind::Identifier && rhs->ref == RefKind::LocalVar) {
                collapse_local(from, g, rhs->name, frame_g, kind, collapsing);
            } else {
                walk_value(from, *rhs, frame_g, kind);
            }
            if (const Cfg* cfg = analysis_.cfg(g.display_name()))
                for (const auto* gn : cfg->guards_dominating(stmt_id))
                    add_guard_deps(from, gn->condition, frame_g);
        }
    }

    // Determines the root node for the transferred-amount expression.
    CdgNode node_for_expr_root(const Expr& amount, Frame& root_frame) {
        switch (amount.kind) {
            case ExprKind::Identifier:
                if (amount.ref == RefKind::StateVar) {
                    VariablePath p;
                    p.base = amount.name;
                    if (const StateVarDecl* v = contract_.find_state_var(amount.name))
                        p.key_shape = key_shape_of(v->type_desc);
                    return make_state(p);
                }
                if (amount.ref == RefKind::Param && root_frame.fn)
                    return make_param(root_frame.fn->display_name(), amount.name);
                if (root_frame.fn) return make_local(root_frame.fn->display_name(), amount.name);
                return make_constant(amount.name);
            case ExprKind::Literal:
                return make_constant(amount.name);
            case ExprKind::SpecialRef:
                if (amount.special == SpecialKind::ThisBalance) return make_balance(false, "");
                if (amount.special == SpecialKind::MsgValue && root_frame.fn)
                    return make_param(root_frame.fn->display_name(), "msg.value");
                return make_constant("special");
            case ExprKind::MemberAccess:
            case ExprKind::IndexAccess: {
                if (root_frame.fn) {
                    const DefUse* du = analysis_.defuse(root_frame.fn->display_name());
                    static const std::map<std::string, StorageAlias> no_aliases;
                    auto acc = defuse_detail::resolve_path(amount, contract_,
                                                           du ? du->aliases : no_aliases);
                    if (acc) return make_state(acc->path);
                }
                [[fallthrough]];
            }
            default: {
                // synthetic root bound to the whole expression
                CdgNode synth = make_local(root_frame.fn ? root_frame.fn->display_name() : "",
                                           "<amount@" + std::to_string(transfer_marker_++) + ">");
                add_node(synth);
                visited_.insert(synth.id());
                walk_value(synth.id(), amount, root_frame, CdgEdge::Kind::Cal);
                return synth;
            }
        }
    }

    void derive() {
        for (const auto& [id, n] : cdg_.nodes) {
            switch (n.kind) {
                case CdgNode::Kind::StateVar: cdg_.state_dep.insert(n.path); break;
                case CdgNode::Kind::Balance:
                    (n.token_balance ? cdg_.dep_token_balance : cdg_.dep_native_balance) = true;
                    break;
                case CdgNode::Kind::Time: cdg_.has_time_node = true; break;
                default: break;
            }
        }
    }

    const ContractIR& contract_;
    const ContractAnalysis& analysis_;
    int depth_bound_;
    Cdg cdg_;
    std::deque<Frame> frames_;
    std::map<std::string, std::vector<const Frame*>> frames_of_fn_;
    std::set<std::string> visited_;
    std::deque<std::string> worklist_;
    std::set<std::string> opaque_fns_;
    int transfer_marker_ = 0;
};

} // namespace ssrlint
