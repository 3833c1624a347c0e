// Input loading: .json compact ASTs directly; .sol through the configured
// solc binary (SSRLINT_SOLC) or, when none is configured, the built-in
// subset parser.
#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ssrlint/ast_json.hpp"
#include "ssrlint/detail/sha256.hpp"
#include "ssrlint/inherit.hpp"
#include "ssrlint/sol_parser.hpp"

namespace ssrlint {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw AnalysisError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string solc_binary_from_env() {
    const char* v = std::getenv("SSRLINT_SOLC");
    return v ? std::string(v) : std::string();
}

// Runs the external compiler for a .sol path; returns raw compact-AST JSON.
inline std::string run_solc_ast(const std::string& solc, const std::string& path) {
    std::string cmd = solc + " --ast-compact-json " + path + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw AnalysisError("failed to invoke solc: " + solc);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int rc = ::pclose(pipe);
    if (rc != 0) throw AnalysisError("solc failed on " + path);
    // solc prints a header line per file before each JSON document
    auto brace = out.find('{');
    if (brace == std::string::npos) throw ParseError("no JSON in solc output for " + path);
    return out.substr(brace);
}

// Loads a source unit (not yet flattened) from a .sol or .json path.
inline SourceUnit load_unit_from_path(const std::string& path) {
    std::filesystem::path p(path);
    std::string ext = p.extension().string();
    if (ext == ".json") {
        std::string bytes = read_file(path);
        return load_ast(bytes, {}, p.parent_path().string());
    }
    if (ext == ".sol") {
        std::string source = read_file(path);
        std::string solc = solc_binary_from_env();
        SourceUnit unit;
        if (!solc.empty()) {
            std::string bytes = run_solc_ast(solc, path);
            unit = load_ast(bytes, {{path, source}});
        } else {
            auto ast = sol::parse_to_ast_json(source, path);
            unit = load_ast(ast.dump(), {{path, source}});
        }
        unit.source_hash = detail::sha256_hex(source);
        return unit;
    }
    throw AnalysisError("unsupported input extension (want .sol or .json): " + path);
}

// Convenience: load + flatten in one step.
inline SourceUnit load_flattened(const std::string& path) {
    return flatten_inheritance(load_unit_from_path(path));
}

// Parses source text directly (used by tests and the LLM path, which works on
// raw source).
inline SourceUnit load_from_source(const std::string& source, const std::string& virtual_path) {
    auto ast = sol::parse_to_ast_json(source, virtual_path);
    SourceUnit unit = load_ast(ast.dump(), {{virtual_path, source}});
    unit.source_hash = detail::sha256_hex(source);
    return unit;
}

} // namespace ssrlint
