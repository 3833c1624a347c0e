// Normalized contract IR: the value types every analysis pass works on.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssrlint/source.hpp"

namespace ssrlint {

// ---------------------------------------------------------------------------
// Errors

struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct UnsupportedVersion : AnalysisError {
    explicit UnsupportedVersion(const std::string& found)
        : AnalysisError("unsupported solc AST version: " + found), version(found) {}
    std::string version;
};
struct CyclicInheritance : AnalysisError {
    using AnalysisError::AnalysisError;
};
struct NotATransfer : AnalysisError {
    using AnalysisError::AnalysisError;
};

// ---------------------------------------------------------------------------
// Types

struct TypeDesc {
    enum class Kind { Elementary, Mapping, Struct, Array, Contract, Unknown };
    Kind kind = Kind::Unknown;
    std::string name;                 // elementary text / struct name / contract name
    std::string key_type;             // Mapping only
    std::shared_ptr<TypeDesc> value;  // Mapping value / Array element

    static TypeDesc elementary(std::string n) { return {Kind::Elementary, std::move(n), {}, nullptr}; }
    static TypeDesc unknown() { return {}; }

    bool is_mapping() const { return kind == Kind::Mapping; }
    bool is_contract_ref() const { return kind == Kind::Contract; }
    bool is_address() const { return kind == Kind::Elementary && (name == "address" || name == "address payable"); }
    bool is_uint_like() const {
        return kind == Kind::Elementary && (name.rfind("uint", 0) == 0 || name.rfind("int", 0) == 0);
    }
    bool is_bool() const { return kind == Kind::Elementary && name == "bool"; }

    // The innermost value type, unwrapping mappings and arrays.
    const TypeDesc& leaf() const {
        const TypeDesc* t = this;
        while ((t->kind == Kind::Mapping || t->kind == Kind::Array) && t->value) t = t->value.get();
        return *t;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Elementary: return name;
            case Kind::Mapping:
                return "mapping(" + key_type + " => " + (value ? value->str() : "?") + ")";
            case Kind::Struct: return "struct " + name;
            case Kind::Array: return (value ? value->str() : "?") + "[]";
            case Kind::Contract: return name;
            case Kind::Unknown: return "?";
        }
        return "?";
    }
};

// ---------------------------------------------------------------------------
// Expressions

enum class ExprKind {
    Identifier,
    MemberAccess,   // sub[0] = base, name = member
    IndexAccess,    // sub[0] = base, sub[1] = index
    BinaryOp,       // name = operator, sub[0], sub[1]
    UnaryOp,        // name = operator, sub[0]
    Call,           // sub[0] = callee expression, sub[1..] = arguments
    Literal,        // name = raw value text
    SpecialRef,     // msg.sender, block.timestamp, ...
    Tuple,          // sub = components (empty Identifier name "" for skipped slots)
    Conditional,    // sub[0] = cond, sub[1] = true, sub[2] = false
    TypeConversion, // name = target type, sub[0] = argument
};

enum class SpecialKind {
    None,
    MsgSender,
    MsgValue,
    BlockTimestamp,
    BlockNumber,
    ThisBalance,   // this.balance / address(this).balance
    AddressThis,   // address(this) or `this` used as an address value
    TxOrigin,
};

enum class RefKind { Unresolved, StateVar, LocalVar, Param, FunctionRef, EventRef, TypeRef, Builtin };

struct Expr {
    ExprKind kind = ExprKind::Identifier;
    std::string name;          // see ExprKind comments
    SpecialKind special = SpecialKind::None;
    RefKind ref = RefKind::Unresolved;
    std::string type_name;     // best-known static type text ("" if unknown)
    std::vector<Expr> sub;
    std::vector<std::pair<std::string, std::shared_ptr<Expr>>> call_options; // {value: x} etc.
    SourceLoc loc;

    bool is_identifier(std::string_view n) const {
        return kind == ExprKind::Identifier && name == n;
    }
};

// ---------------------------------------------------------------------------
// Statements

enum class StmtKind {
    Assign,    // exprs[0] = lhs, exprs[1] = rhs, op = "=", "+=", ...
    Declare,   // decl_names, decl_types; exprs[0] = initializer if present
    Require,   // exprs[0] = condition (message dropped)
    Revert,
    If,        // exprs[0] = condition; body = then, else_body = else
    Loop,      // exprs[0] = condition (may be empty Literal "true"); body
    Return,    // exprs[0] = value if present
    Emit,      // exprs[0] = event call
    ExprStmt,  // exprs[0]
    Other,     // break/continue/placeholder: control-only, no data effect
    Unanalyzed // assembly blocks, try/catch: opaque, never dropped
};

struct Stmt {
    StmtKind kind = StmtKind::ExprStmt;
    int id = -1; // stable per-function id assigned after flattening
    std::vector<Expr> exprs;
    std::vector<Stmt> body;
    std::vector<Stmt> else_body;
    std::string op;
    std::vector<std::string> decl_names;  // parallel to tuple slots; "" = skipped
    std::vector<std::string> decl_types;
    bool decl_is_storage_ref = false;
    bool unanalyzed = false;
    SourceLoc loc;
};

// ---------------------------------------------------------------------------
// Declarations

struct StateVarDecl {
    std::string name;
    TypeDesc type_desc;
    std::string visibility = "internal"; // public|internal|private
    bool is_constant_or_immutable = false;
    std::optional<Expr> initial_value;
    std::string declared_in; // contract that originally declared it
    SourceLoc loc;
};

struct ParamDecl {
    std::string name;
    std::string type_name;
    bool is_storage = false;
};

struct ModifierInvocation {
    std::string name;
    std::vector<Expr> args;
};

struct FunctionIR {
    std::string name;                    // "" for constructor/receive/fallback
    std::string kind = "function";       // function|constructor|receive|fallback
    std::vector<ParamDecl> params;
    std::vector<ParamDecl> returns;
    std::string visibility = "public";   // external|public|internal|private
    std::string mutability = "nonpayable";
    std::vector<ModifierInvocation> modifiers_applied;
    std::vector<Stmt> body;
    bool has_body = true;                // false for interface declarations
    std::string declared_in;
    SourceLoc loc;
    bool is_externally_reachable = false; // computed by callgraph pass

    std::string display_name() const {
        if (kind == "constructor") return "constructor";
        if (kind == "receive") return "receive";
        if (kind == "fallback") return "fallback";
        return name;
    }
    std::string signature() const {
        std::string sig = display_name() + "(";
        for (size_t i = 0; i < params.size(); ++i) {
            if (i) sig += ",";
            sig += params[i].type_name;
        }
        return sig + ")";
    }
    bool is_public_or_external() const {
        return visibility == "public" || visibility == "external";
    }
};

struct ModifierIR {
    std::string name;
    std::vector<ParamDecl> params;
    std::vector<Stmt> body;
    std::string declared_in;
    SourceLoc loc;
};

struct StructDef {
    std::string name;
    std::vector<std::pair<std::string, TypeDesc>> members;
};

struct ContractIR {
    std::string name;
    std::string kind = "contract"; // contract|interface|library
    std::vector<std::string> bases;
    std::vector<StateVarDecl> state_vars;
    std::vector<FunctionIR> functions;
    std::vector<ModifierIR> modifiers;
    std::map<std::string, StructDef> structs;
    std::vector<std::string> events;
    std::vector<std::string> unresolved_bases;
    bool flattened = false;
    SourceLoc loc;

    const StateVarDecl* find_state_var(std::string_view n) const {
        for (const auto& v : state_vars)
            if (v.name == n) return &v;
        return nullptr;
    }
    const FunctionIR* find_function(std::string_view n) const {
        for (const auto& f : functions)
            if (f.name == n) return &f;
        return nullptr;
    }
    const StructDef* find_struct(std::string_view n) const {
        auto it = structs.find(std::string(n));
        return it == structs.end() ? nullptr : &it->second;
    }
};

struct SourceUnit {
    std::string path;
    std::string pragma_version; // "0.8.19" style, "" if absent
    std::string source_hash;    // sha256 of the input bytes
    std::vector<ContractIR> contracts;
    Diagnostics diagnostics;

    const ContractIR* find_contract(std::string_view n) const {
        for (const auto& c : contracts)
            if (c.name == n) return &c;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// Traversal helpers

template <typename Fn>
void for_each_stmt(const std::vector<Stmt>& body, Fn&& fn) {
    for (const auto& s : body) {
        fn(s);
        for_each_stmt(s.body, fn);
        for_each_stmt(s.else_body, fn);
    }
}

template <typename Fn>
void for_each_stmt_mut(std::vector<Stmt>& body, Fn&& fn) {
    for (auto& s : body) {
        fn(s);
        for_each_stmt_mut(s.body, fn);
        for_each_stmt_mut(s.else_body, fn);
    }
}

template <typename Fn>
void for_each_expr(const Expr& e, Fn&& fn) {
    fn(e);
    for (const auto& c : e.sub) for_each_expr(c, fn);
    for (const auto& [k, opt] : e.call_options)
        if (opt) for_each_expr(*opt, fn);
}

template <typename Fn>
void for_each_expr_in(const Stmt& s, Fn&& fn) {
    for (const auto& e : s.exprs) for_each_expr(e, fn);
}

inline int count_statements(const std::vector<Stmt>& body) {
    int n = 0;
    for_each_stmt(body, [&](const Stmt& s) {
        (void)s;
        ++n;
    });
    return n;
}

inline int count_statements(const ContractIR& c) {
    int n = 0;
    for (const auto& f : c.functions) n += count_statements(f.body);
    return n;
}

// Assigns sequential statement ids per function. Called once after flattening.
inline void number_statements(ContractIR& contract) {
    for (auto& f : contract.functions) {
        int next = 0;
        for_each_stmt_mut(f.body, [&](Stmt& s) { s.id = next++; });
    }
    for (auto& m : contract.modifiers) {
        int next = 0;
        for_each_stmt_mut(m.body, [&](Stmt& s) { s.id = next++; });
    }
}

} // namespace ssrlint
