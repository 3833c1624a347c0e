// Ingestion of solc compact-AST JSON into the normalized ContractIR.
// Accepts a bare SourceUnit node, a {"sources": {...}} wrapper (standard-json
// output), or an array of SourceUnit nodes.
#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ssrlint/detail/sha256.hpp"
#include "ssrlint/ir.hpp"

namespace ssrlint {

namespace astjson {

using json = nlohmann::json;

// Byte-offset to 1-based line mapping for one source file.
class LineIndex {
public:
    LineIndex() = default;
    explicit LineIndex(std::string_view text) {
        starts_.push_back(0);
        for (size_t i = 0; i < text.size(); ++i)
            if (text[i] == '\n') starts_.push_back(static_cast<int>(i) + 1);
    }
    bool valid() const { return !starts_.empty(); }
    int line_of(int offset) const {
        if (starts_.empty() || offset < 0) return 0;
        auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
        return static_cast<int>(it - starts_.begin());
    }

private:
    std::vector<int> starts_;
};

class Loader {
public:
    Loader(std::string path, LineIndex lines) : path_(std::move(path)), lines_(std::move(lines)) {}

    SourceLoc loc_of(const json& node) const {
        SourceLoc l;
        l.file = path_;
        if (node.contains("src") && node["src"].is_string()) {
            std::string src = node["src"].get<std::string>();
            auto colon = src.find(':');
            if (colon != std::string::npos) {
                l.byte_offset = std::atoi(src.substr(0, colon).c_str());
                auto colon2 = src.find(':', colon + 1);
                if (colon2 != std::string::npos)
                    l.length = std::atoi(src.substr(colon + 1, colon2 - colon - 1).c_str());
                l.line = lines_.line_of(l.byte_offset);
            }
        }
        return l;
    }

    TypeDesc load_type(const json& t) const {
        if (t.is_null()) return TypeDesc::unknown();
        std::string nt = t.value("nodeType", "");
        if (nt == "ElementaryTypeName") {
            std::string name = t.value("name", "");
            if (t.contains("stateMutability") && t["stateMutability"] == "payable")
                name = "address payable";
            return TypeDesc::elementary(name);
        }
        if (nt == "Mapping") {
            TypeDesc d;
            d.kind = TypeDesc::Kind::Mapping;
            d.key_type = load_type(t["keyType"]).name;
            d.value = std::make_shared<TypeDesc>(load_type(t["valueType"]));
            return d;
        }
        if (nt == "UserDefinedTypeName") {
            TypeDesc d;
            d.kind = TypeDesc::Kind::Struct; // refined against struct/contract tables later
            if (t.contains("pathNode"))
                d.name = t["pathNode"].value("name", "");
            else
                d.name = t.value("name", "");
            return d;
        }
        if (nt == "ArrayTypeName") {
            TypeDesc d;
            d.kind = TypeDesc::Kind::Array;
            d.value = std::make_shared<TypeDesc>(load_type(t["baseType"]));
            return d;
        }
        if (nt == "FunctionTypeName") return TypeDesc::unknown();
        return TypeDesc::unknown();
    }

    // --- expressions -------------------------------------------------------
    Expr load_expr(const json& e) const {
        Expr out;
        out.loc = loc_of(e);
        std::string nt = e.value("nodeType", "");
        if (nt == "Identifier") {
            out.kind = ExprKind::Identifier;
            out.name = e.value("name", "");
        } else if (nt == "MemberAccess") {
            out.kind = ExprKind::MemberAccess;
            out.name = e.value("memberName", "");
            out.sub.push_back(load_expr(e["expression"]));
            specialize_member(out);
        } else if (nt == "IndexAccess") {
            out.kind = ExprKind::IndexAccess;
            out.sub.push_back(load_expr(e["baseExpression"]));
            if (e.contains("indexExpression") && !e["indexExpression"].is_null())
                out.sub.push_back(load_expr(e["indexExpression"]));
        } else if (nt == "BinaryOperation") {
            out.kind = ExprKind::BinaryOp;
            out.name = e.value("operator", "");
            out.sub.push_back(load_expr(e["leftExpression"]));
            out.sub.push_back(load_expr(e["rightExpression"]));
        } else if (nt == "UnaryOperation") {
            out.kind = ExprKind::UnaryOp;
            out.name = e.value("operator", "");
            out.sub.push_back(load_expr(e["subExpression"]));
        } else if (nt == "Assignment") {
            // expression-position assignment; statement layer usually unwraps
            out.kind = ExprKind::BinaryOp;
            out.name = e.value("operator", "=");
            out.sub.push_back(load_expr(e["leftHandSide"]));
            out.sub.push_back(load_expr(e["rightHandSide"]));
        } else if (nt == "FunctionCall") {
            std::string kind = e.value("kind", "functionCall");
            json callee = e["expression"];
            if (kind == "typeConversion" ||
                callee.value("nodeType", "") == "ElementaryTypeNameExpression") {
                out.kind = ExprKind::TypeConversion;
                if (callee.value("nodeType", "") == "ElementaryTypeNameExpression") {
                    const json& tn = callee.contains("typeName") ? callee["typeName"] : json{};
                    out.name = tn.is_object() ? tn.value("name", "") : callee.value("typeName", "");
                } else if (callee.value("nodeType", "") == "Identifier") {
                    out.name = callee.value("name", "");
                }
                if (!e["arguments"].empty()) out.sub.push_back(load_expr(e["arguments"][0]));
                specialize_conversion(out);
            } else {
                out.kind = ExprKind::Call;
                out.sub.push_back(load_expr(callee));
                for (const auto& a : e["arguments"]) out.sub.push_back(load_expr(a));
                // carry call{value: ...} options from a FunctionCallOptions callee
                if (callee.value("nodeType", "") == "FunctionCallOptions") {
                    const json& names = callee["names"];
                    const json& options = callee["options"];
                    for (size_t i = 0; i < names.size() && i < options.size(); ++i) {
                        out.call_options.emplace_back(
                            names[i].get<std::string>(),
                            std::make_shared<Expr>(load_expr(options[i])));
                    }
                }
            }
        } else if (nt == "FunctionCallOptions") {
            // bare options node (callee position); load the inner expression
            out = load_expr(e["expression"]);
        } else if (nt == "Literal") {
            out.kind = ExprKind::Literal;
            out.name = e.value("value", "");
            if (e.contains("subdenomination") && e["subdenomination"].is_string())
                out.name += " " + e["subdenomination"].get<std::string>();
            out.type_name = e.value("kind", "");
        } else if (nt == "TupleExpression") {
            out.kind = ExprKind::Tuple;
            for (const auto& c : e["components"]) {
                if (c.is_null()) {
                    Expr hole;
                    hole.kind = ExprKind::Identifier;
                    out.sub.push_back(hole);
                } else {
                    out.sub.push_back(load_expr(c));
                }
            }
            if (out.sub.size() == 1) return out.sub[0];
        } else if (nt == "Conditional") {
            out.kind = ExprKind::Conditional;
            out.sub.push_back(load_expr(e["condition"]));
            out.sub.push_back(load_expr(e["trueExpression"]));
            out.sub.push_back(load_expr(e["falseExpression"]));
        } else if (nt == "ElementaryTypeNameExpression") {
            out.kind = ExprKind::TypeConversion;
            const json& tn = e.contains("typeName") ? e["typeName"] : json{};
            out.name = tn.is_object() ? tn.value("name", "") : "";
        } else if (nt == "NewExpression") {
            out.kind = ExprKind::Call;
            Expr callee;
            callee.kind = ExprKind::Identifier;
            callee.name = "new";
            out.sub.push_back(callee);
        } else {
            out.kind = ExprKind::Identifier;
            out.name = "";
        }
        return out;
    }

    void specialize_member(Expr& e) const {
        const Expr& base = e.sub[0];
        if (base.is_identifier("msg")) {
            if (e.name == "sender") { e.kind = ExprKind::SpecialRef; e.special = SpecialKind::MsgSender; }
            if (e.name == "value") { e.kind = ExprKind::SpecialRef; e.special = SpecialKind::MsgValue; }
        } else if (base.is_identifier("block")) {
            if (e.name == "timestamp") { e.kind = ExprKind::SpecialRef; e.special = SpecialKind::BlockTimestamp; }
            if (e.name == "number") { e.kind = ExprKind::SpecialRef; e.special = SpecialKind::BlockNumber; }
        } else if (base.is_identifier("tx")) {
            if (e.name == "origin") { e.kind = ExprKind::SpecialRef; e.special = SpecialKind::TxOrigin; }
        } else if (e.name == "balance" &&
                   (base.is_identifier("this") || base.special == SpecialKind::AddressThis)) {
            e.kind = ExprKind::SpecialRef;
            e.special = SpecialKind::ThisBalance;
        }
        if (e.kind == ExprKind::SpecialRef) e.sub.clear();
    }

    void specialize_conversion(Expr& e) const {
        // address(this) -> AddressThis
        if ((e.name == "address" || e.name == "address payable") && e.sub.size() == 1 &&
            e.sub[0].is_identifier("this")) {
            e.kind = ExprKind::SpecialRef;
            e.special = SpecialKind::AddressThis;
            e.sub.clear();
        }
        if (e.kind == ExprKind::TypeConversion) e.type_name = e.name;
    }

    // --- statements ----------------------------------------------------------
    void load_statements(const json& block_or_stmt, std::vector<Stmt>& out) const {
        if (block_or_stmt.is_null()) return;
        std::string nt = block_or_stmt.value("nodeType", "");
        if (nt == "Block" || nt == "UncheckedBlock") {
            for (const auto& s : block_or_stmt["statements"]) load_statements(s, out);
            return;
        }
        out.push_back(load_stmt(block_or_stmt));
    }

    Stmt load_stmt(const json& s) const {
        Stmt st;
        st.loc = loc_of(s);
        std::string nt = s.value("nodeType", "");
        if (nt == "ExpressionStatement") {
            const json& e = s["expression"];
            std::string ent = e.value("nodeType", "");
            if (ent == "Assignment") {
                st.kind = StmtKind::Assign;
                st.op = e.value("operator", "=");
                st.exprs.push_back(load_expr(e["leftHandSide"]));
                st.exprs.push_back(load_expr(e["rightHandSide"]));
                return st;
            }
            if (ent == "UnaryOperation") {
                std::string op = e.value("operator", "");
                if (op == "++" || op == "--" || op == "delete") {
                    st.kind = StmtKind::Assign;
                    st.op = op;
                    Expr target = load_expr(e["subExpression"]);
                    st.exprs.push_back(target);
                    if (op == "delete") {
                        Expr zero;
                        zero.kind = ExprKind::Literal;
                        zero.name = "0";
                        st.exprs.push_back(zero);
                    } else {
                        st.exprs.push_back(target);
                    }
                    return st;
                }
            }
            if (ent == "FunctionCall") {
                const json& callee = e["expression"];
                std::string callee_name =
                    callee.value("nodeType", "") == "Identifier" ? callee.value("name", "") : "";
                if (callee_name == "require" || callee_name == "assert") {
                    st.kind = StmtKind::Require;
                    if (!e["arguments"].empty()) st.exprs.push_back(load_expr(e["arguments"][0]));
                    return st;
                }
                if (callee_name == "revert") {
                    st.kind = StmtKind::Revert;
                    return st;
                }
            }
            st.kind = StmtKind::ExprStmt;
            st.exprs.push_back(load_expr(e));
            return st;
        }
        if (nt == "VariableDeclarationStatement") {
            st.kind = StmtKind::Declare;
            for (const auto& d : s["declarations"]) {
                if (d.is_null()) {
                    st.decl_names.emplace_back("");
                    st.decl_types.emplace_back("");
                    continue;
                }
                st.decl_names.push_back(d.value("name", ""));
                st.decl_types.push_back(load_type(d.contains("typeName") ? d["typeName"] : json{}).str());
                if (d.value("storageLocation", "default") == "storage") st.decl_is_storage_ref = true;
            }
            if (s.contains("initialValue") && !s["initialValue"].is_null())
                st.exprs.push_back(load_expr(s["initialValue"]));
            return st;
        }
        if (nt == "IfStatement") {
            st.kind = StmtKind::If;
            st.exprs.push_back(load_expr(s["condition"]));
            load_statements(s["trueBody"], st.body);
            if (s.contains("falseBody") && !s["falseBody"].is_null())
                load_statements(s["falseBody"], st.else_body);
            return st;
        }
        if (nt == "ForStatement") {
            // lowered by the caller into [init, Loop]; here produce Loop only
            st.kind = StmtKind::Loop;
            if (s.contains("condition") && !s["condition"].is_null())
                st.exprs.push_back(load_expr(s["condition"]));
            load_statements(s["body"], st.body);
            if (s.contains("loopExpression") && !s["loopExpression"].is_null())
                st.body.push_back(load_stmt(s["loopExpression"]));
            return st;
        }
        if (nt == "WhileStatement" || nt == "DoWhileStatement") {
            st.kind = StmtKind::Loop;
            if (s.contains("condition") && !s["condition"].is_null())
                st.exprs.push_back(load_expr(s["condition"]));
            load_statements(s["body"], st.body);
            return st;
        }
        if (nt == "Return") {
            st.kind = StmtKind::Return;
            if (s.contains("expression") && !s["expression"].is_null())
                st.exprs.push_back(load_expr(s["expression"]));
            return st;
        }
        if (nt == "EmitStatement") {
            st.kind = StmtKind::Emit;
            st.exprs.push_back(load_expr(s["eventCall"]));
            return st;
        }
        if (nt == "RevertStatement") {
            st.kind = StmtKind::Revert;
            return st;
        }
        if (nt == "Break" || nt == "Continue" || nt == "PlaceholderStatement") {
            st.kind = StmtKind::Other;
            return st;
        }
        if (nt == "InlineAssembly" || nt == "TryStatement") {
            st.kind = StmtKind::Unanalyzed;
            st.unanalyzed = true;
            return st;
        }
        // unknown statement kinds are preserved as opaque, never dropped
        st.kind = StmtKind::Unanalyzed;
        st.unanalyzed = true;
        return st;
    }

    std::vector<Stmt> load_body(const json& body) const {
        std::vector<Stmt> out;
        if (body.is_null()) return out;
        // ForStatement init hoisting happens via recursion in load_statements;
        // a For node needs its init emitted before the Loop statement.
        struct Rec {
            const Loader& L;
            void walk(const json& node, std::vector<Stmt>& sink) const {
                if (node.is_null()) return;
                std::string nt = node.value("nodeType", "");
                if (nt == "Block" || nt == "UncheckedBlock") {
                    for (const auto& s : node["statements"]) walk(s, sink);
                    return;
                }
                if (nt == "ForStatement") {
                    if (node.contains("initializationExpression") &&
                        !node["initializationExpression"].is_null())
                        walk(node["initializationExpression"], sink);
                    Stmt loop = L.load_stmt(node);
                    // rebuild body through walk so nested fors also hoist
                    loop.body.clear();
                    walk(node["body"], loop.body);
                    if (node.contains("loopExpression") && !node["loopExpression"].is_null())
                        walk(node["loopExpression"], loop.body);
                    sink.push_back(std::move(loop));
                    return;
                }
                if (nt == "IfStatement") {
                    Stmt s;
                    s.loc = L.loc_of(node);
                    s.kind = StmtKind::If;
                    s.exprs.push_back(L.load_expr(node["condition"]));
                    walk(node["trueBody"], s.body);
                    if (node.contains("falseBody") && !node["falseBody"].is_null())
                        walk(node["falseBody"], s.else_body);
                    sink.push_back(std::move(s));
                    return;
                }
                if (nt == "WhileStatement" || nt == "DoWhileStatement") {
                    Stmt s;
                    s.loc = L.loc_of(node);
                    s.kind = StmtKind::Loop;
                    if (node.contains("condition") && !node["condition"].is_null())
                        s.exprs.push_back(L.load_expr(node["condition"]));
                    walk(node["body"], s.body);
                    sink.push_back(std::move(s));
                    return;
                }
                sink.push_back(L.load_stmt(node));
            }
        } rec{*this};
        rec.walk(body, out);
        return out;
    }

    // --- declarations ----------------------------------------------------------
    ParamDecl load_param(const json& p) const {
        ParamDecl d;
        d.name = p.value("name", "");
        d.type_name = load_type(p.contains("typeName") ? p["typeName"] : json{}).str();
        d.is_storage = p.value("storageLocation", "default") == "storage";
        return d;
    }

    std::vector<ParamDecl> load_params(const json& plist) const {
        std::vector<ParamDecl> out;
        if (plist.is_object() && plist.contains("parameters"))
            for (const auto& p : plist["parameters"]) out.push_back(load_param(p));
        return out;
    }

    FunctionIR load_function(const json& f, const std::string& contract_name) const {
        FunctionIR fn;
        fn.name = f.value("name", "");
        fn.kind = f.value("kind", fn.name.empty() ? "constructor" : "function");
        if (f.value("isConstructor", false)) fn.kind = "constructor";
        fn.visibility = f.value("visibility", "public");
        fn.mutability = f.value("stateMutability", "nonpayable");
        fn.params = load_params(f.contains("parameters") ? f["parameters"] : json{});
        fn.returns = load_params(f.contains("returnParameters") ? f["returnParameters"] : json{});
        fn.declared_in = contract_name;
        fn.loc = loc_of(f);
        if (f.contains("modifiers")) {
            for (const auto& m : f["modifiers"]) {
                ModifierInvocation mi;
                if (m.contains("modifierName"))
                    mi.name = m["modifierName"].value("name", "");
                if (m.contains("arguments") && m["arguments"].is_array())
                    for (const auto& a : m["arguments"]) mi.args.push_back(load_expr(a));
                fn.modifiers_applied.push_back(std::move(mi));
            }
        }
        if (f.contains("body") && !f["body"].is_null()) {
            fn.body = load_body(f["body"]);
            fn.has_body = true;
        } else {
            fn.has_body = false;
        }
        return fn;
    }

    ContractIR load_contract(const json& c,
                             const std::vector<StructDef>& file_structs) const {
        ContractIR ir;
        ir.name = c.value("name", "");
        ir.kind = c.value("contractKind", "contract");
        ir.loc = loc_of(c);
        for (const auto& sd : file_structs) ir.structs[sd.name] = sd;
        if (c.contains("baseContracts")) {
            for (const auto& b : c["baseContracts"]) {
                if (b.contains("baseName")) {
                    std::string name = b["baseName"].value("name", "");
                    if (name.empty() && b["baseName"].contains("pathNode"))
                        name = b["baseName"]["pathNode"].value("name", "");
                    if (name.empty() && b["baseName"].contains("name"))
                        name = b["baseName"]["name"].get<std::string>();
                    if (!name.empty()) ir.bases.push_back(name);
                }
            }
        }
        for (const auto& n : c["nodes"]) {
            std::string nt = n.value("nodeType", "");
            if (nt == "VariableDeclaration") {
                StateVarDecl v;
                v.name = n.value("name", "");
                v.type_desc = load_type(n.contains("typeName") ? n["typeName"] : json{});
                v.visibility = n.value("visibility", "internal");
                std::string mut = n.value("mutability", "mutable");
                v.is_constant_or_immutable = n.value("constant", false) || mut == "constant" ||
                                             mut == "immutable";
                if (n.contains("value") && !n["value"].is_null()) v.initial_value = load_expr(n["value"]);
                v.declared_in = ir.name;
                v.loc = loc_of(n);
                ir.state_vars.push_back(std::move(v));
            } else if (nt == "FunctionDefinition") {
                ir.functions.push_back(load_function(n, ir.name));
            } else if (nt == "ModifierDefinition") {
                ModifierIR m;
                m.name = n.value("name", "");
                m.params = load_params(n.contains("parameters") ? n["parameters"] : json{});
                if (n.contains("body") && !n["body"].is_null()) m.body = load_body(n["body"]);
                m.declared_in = ir.name;
                m.loc = loc_of(n);
                ir.modifiers.push_back(std::move(m));
            } else if (nt == "StructDefinition") {
                StructDef sd;
                sd.name = n.value("name", "");
                for (const auto& m : n["members"])
                    sd.members.emplace_back(m.value("name", ""),
                                            load_type(m.contains("typeName") ? m["typeName"] : json{}));
                ir.structs[sd.name] = std::move(sd);
            } else if (nt == "EventDefinition") {
                ir.events.push_back(n.value("name", ""));
            }
            // UsingForDirective, EnumDefinition, ErrorDefinition: no analysis impact
        }
        return ir;
    }

private:
    std::string path_;
    LineIndex lines_;
};

inline std::string extract_pragma_version(const json& unit_node) {
    if (!unit_node.contains("nodes")) return "";
    for (const auto& n : unit_node["nodes"]) {
        if (n.value("nodeType", "") != "PragmaDirective") continue;
        std::string joined;
        for (const auto& lit : n.value("literals", json::array())) {
            if (lit.is_string() && lit.get<std::string>() != "solidity")
                joined += lit.get<std::string>();
        }
        std::smatch m;
        static const std::regex ver(R"((\d+)\.(\d+))");
        if (std::regex_search(joined, m, ver)) return m[1].str() + "." + m[2].str();
    }
    return "";
}

inline void check_version_supported(const std::string& version) {
    if (version.empty()) return;
    int major = 0, minor = 0;
    if (std::sscanf(version.c_str(), "%d.%d", &major, &minor) != 2) return;
    bool ok = major == 0 && minor >= 6 && minor <= 8;
    if (!ok) throw UnsupportedVersion(version);
}

// Refine Struct-vs-Contract classification for user-defined type names, once
// all contracts of the unit are known. Struct declarations may live in base
// contracts, so the whole unit's struct names are consulted.
inline void refine_user_types(SourceUnit& unit) {
    std::map<std::string, bool> struct_names;
    for (const auto& c : unit.contracts)
        for (const auto& [name, sd] : c.structs) struct_names[name] = true;
    auto refine = [&](TypeDesc& t, auto&& self) -> void {
        if (t.kind == TypeDesc::Kind::Struct && !struct_names.count(t.name)) {
            // contracts declared in the unit, or unknown imported types used as
            // typed handles, are contract references
            t.kind = TypeDesc::Kind::Contract;
        }
        if (t.value) self(*t.value, self);
    };
    for (auto& c : unit.contracts) {
        for (auto& v : c.state_vars) refine(v.type_desc, refine);
        for (auto& [name, sd] : c.structs)
            for (auto& [mname, mt] : sd.members) refine(mt, refine);
    }
}

} // namespace astjson

// Loads one or more solc compact-AST JSON source units.
// `sources` optionally maps absolute paths to source text for line mapping;
// when missing, the loader attempts to read the path from disk relative to
// `base_dir` and otherwise leaves lines at 0.
inline SourceUnit load_ast(std::string_view json_bytes,
                           const std::map<std::string, std::string>& sources = {},
                           const std::string& base_dir = "") {
    using astjson::json;
    json doc;
    try {
        doc = json::parse(json_bytes);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }

    std::vector<json> unit_nodes;
    if (doc.is_object() && doc.value("nodeType", "") == "SourceUnit") {
        unit_nodes.push_back(doc);
    } else if (doc.is_object() && doc.contains("sources") && doc["sources"].is_object()) {
        for (const auto& [path, entry] : doc["sources"].items()) {
            json ast;
            if (entry.contains("AST")) ast = entry["AST"];
            else if (entry.contains("ast")) ast = entry["ast"];
            if (ast.is_object()) {
                if (!ast.contains("absolutePath")) ast["absolutePath"] = path;
                unit_nodes.push_back(ast);
            }
        }
    } else if (doc.is_array()) {
        for (const auto& n : doc)
            if (n.is_object() && n.value("nodeType", "") == "SourceUnit") unit_nodes.push_back(n);
    }
    if (unit_nodes.empty())
        throw ParseError("not a solc compact AST: no SourceUnit node found");

    SourceUnit unit;
    unit.source_hash = detail::sha256_hex(json_bytes);
    for (const auto& node : unit_nodes) {
        std::string path = node.value("absolutePath", "");
        if (unit.path.empty()) unit.path = path;
        std::string version = astjson::extract_pragma_version(node);
        astjson::check_version_supported(version);
        if (unit.pragma_version.empty()) unit.pragma_version = version;

        astjson::LineIndex lines;
        auto it = sources.find(path);
        if (it != sources.end()) {
            lines = astjson::LineIndex(it->second);
        } else if (node.contains("source") && node["source"].is_string()) {
            lines = astjson::LineIndex(node["source"].get<std::string>());
        } else if (!path.empty()) {
            std::string full = base_dir.empty() ? path : base_dir + "/" + path;
            if (FILE* fp = std::fopen(full.c_str(), "rb")) {
                std::string text;
                char buf[4096];
                size_t n;
                while ((n = std::fread(buf, 1, sizeof buf, fp)) > 0) text.append(buf, n);
                std::fclose(fp);
                lines = astjson::LineIndex(text);
            } else {
                diag(unit.diagnostics, Severity::Note, "no-source-text",
                     "source text unavailable for " + path + "; line numbers unset");
            }
        }

        astjson::Loader loader(path, std::move(lines));
        std::vector<StructDef> file_structs;
        for (const auto& n : node["nodes"]) {
            if (n.value("nodeType", "") == "StructDefinition") {
                StructDef sd;
                sd.name = n.value("name", "");
                for (const auto& m : n["members"])
                    sd.members.emplace_back(
                        m.value("name", ""),
                        loader.load_type(m.contains("typeName") ? m["typeName"] : astjson::json{}));
                file_structs.push_back(std::move(sd));
            }
        }
        for (const auto& n : node["nodes"]) {
            if (n.value("nodeType", "") == "ContractDefinition")
                unit.contracts.push_back(loader.load_contract(n, file_structs));
        }
    }
    astjson::refine_user_types(unit);
    return unit;
}

} // namespace ssrlint
