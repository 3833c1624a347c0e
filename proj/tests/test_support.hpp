#pragma once

#include <string>

#include "ssrlint/frontend.hpp"
#include "ssrlint/ir.hpp"

namespace ssrlint::test {

inline std::string repo_dir() { return SSRLINT_REPO_DIR; }
inline std::string corpus_path(const std::string& name) { return repo_dir() + "/corpus/" + name; }
inline std::string fixture_path(const std::string& name) {
    return repo_dir() + "/tests/fixtures/" + name;
}

inline SourceUnit load_source(const std::string& solidity, const std::string& path = "test.sol") {
    return flatten_inheritance(load_from_source(solidity, path));
}

// structural serialization used by determinism checks
inline void dump_expr(const Expr& e, std::string& out) {
    out += "(" + std::to_string(static_cast<int>(e.kind)) + ":" + e.name + ":" +
           std::to_string(static_cast<int>(e.special)) + ":" +
           std::to_string(static_cast<int>(e.ref));
    for (const auto& c : e.sub) dump_expr(c, out);
    for (const auto& [k, v] : e.call_options) {
        out += "{" + k + ":";
        if (v) dump_expr(*v, out);
        out += "}";
    }
    out += ")";
}

inline void dump_stmt(const Stmt& s, std::string& out) {
    out += "[" + std::to_string(static_cast<int>(s.kind)) + "#" + std::to_string(s.id) + "@" +
           std::to_string(s.loc.line) + ":" + s.op;
    for (const auto& n : s.decl_names) out += "," + n;
    for (const auto& e : s.exprs) dump_expr(e, out);
    for (const auto& c : s.body) dump_stmt(c, out);
    out += "|";
    for (const auto& c : s.else_body) dump_stmt(c, out);
    out += "]";
}

inline std::string dump_structure(const SourceUnit& unit) {
    std::string out;
    for (const auto& c : unit.contracts) {
        out += "contract " + c.name + "/" + c.kind + "\n";
        for (const auto& v : c.state_vars)
            out += "  var " + v.name + " : " + v.type_desc.str() + " " + v.visibility + "\n";
        for (const auto& f : c.functions) {
            out += "  fn " + f.signature() + " " + f.visibility + " " + f.mutability + "\n";
            for (const auto& s : f.body) {
                out += "    ";
                dump_stmt(s, out);
                out += "\n";
            }
        }
    }
    return out;
}

} // namespace ssrlint::test
