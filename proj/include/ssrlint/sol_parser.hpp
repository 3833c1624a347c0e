// Frontend for a Solidity subset. Produces compact-AST JSON in the shape
// emitted by `solc --ast-compact-json`, so downstream ingestion has a single
// entry format regardless of whether a real compiler produced the AST.
#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ssrlint/ir.hpp"

namespace ssrlint {

namespace sol {

using json = nlohmann::json;

struct Token {
    enum class Kind { Ident, Number, String, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int offset = 0;
    int line = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& cur() const { return cur_; }
    const Token& peek() {
        if (!peeked_) {
            saved_ = cur_;
            saved_pos_ = pos_;
            saved_line_ = line_;
            advance();
            peeked_tok_ = cur_;
            cur_ = saved_;
            pos_ = saved_pos_;
            line_ = saved_line_;
            peeked_ = true;
        }
        return peeked_tok_;
    }
    void next() {
        if (peeked_) {
            // re-lex from the saved position to keep state simple
            peeked_ = false;
        }
        advance();
    }

    int offset() const { return cur_.offset; }

private:
    void advance() {
        skip_trivia();
        Token t;
        t.offset = static_cast<int>(pos_);
        t.line = line_;
        if (pos_ >= src_.size()) {
            t.kind = Token::Kind::End;
            cur_ = t;
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
            size_t b = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                    src_[pos_] == '$'))
                ++pos_;
            t.kind = Token::Kind::Ident;
            t.text = std::string(src_.substr(b, pos_ - b));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t b = pos_;
            if (c == '0' && pos_ + 1 < src_.size() && (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X')) {
                pos_ += 2;
                while (pos_ < src_.size() && std::isxdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            } else {
                while (pos_ < src_.size() &&
                       (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                        src_[pos_] == '.' || src_[pos_] == 'e' || src_[pos_] == 'E' ||
                        ((src_[pos_] == '+' || src_[pos_] == '-') && pos_ > b &&
                         (src_[pos_ - 1] == 'e' || src_[pos_ - 1] == 'E'))))
                    ++pos_;
            }
            t.kind = Token::Kind::Number;
            t.text = std::string(src_.substr(b, pos_ - b));
        } else if (c == '"' || c == '\'') {
            char quote = c;
            ++pos_;
            std::string out;
            while (pos_ < src_.size() && src_[pos_] != quote) {
                if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
                    out += src_[pos_ + 1];
                    pos_ += 2;
                } else {
                    out += src_[pos_++];
                }
            }
            if (pos_ < src_.size()) ++pos_;
            t.kind = Token::Kind::String;
            t.text = out;
        } else {
            static const char* multi[] = {"**", "+=", "-=", "*=", "/=", "%=", "==", "!=", "<=",
                                          ">=", "&&", "||", "->", "=>", "++", "--", ">>", "<<"};
            t.kind = Token::Kind::Punct;
            t.text = std::string(1, c);
            for (const char* m : multi) {
                if (src_.substr(pos_, 2) == m) {
                    t.text = m;
                    break;
                }
            }
            pos_ += t.text.size();
        }
        cur_ = t;
    }

    void skip_trivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
                pos_ += 2;
                while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) {
                    if (src_[pos_] == '\n') ++line_;
                    ++pos_;
                }
                pos_ = std::min(pos_ + 2, src_.size());
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    Token cur_;
    bool peeked_ = false;
    Token peeked_tok_, saved_;
    size_t saved_pos_ = 0;
    int saved_line_ = 1;
};

inline bool is_elementary_type(std::string_view s) {
    if (s == "address" || s == "bool" || s == "string" || s == "bytes" || s == "byte") return true;
    if (s.rfind("uint", 0) == 0 || s.rfind("int", 0) == 0) {
        for (char c : s.substr(s[0] == 'u' ? 4 : 3))
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    }
    if (s.rfind("bytes", 0) == 0) {
        for (char c : s.substr(5))
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    }
    return false;
}

inline bool is_subdenomination(std::string_view s) {
    return s == "wei" || s == "gwei" || s == "ether" || s == "seconds" || s == "minutes" ||
           s == "hours" || s == "days" || s == "weeks";
}

// Recursive-descent parser. Throws ParseError on malformed input.
class Parser {
public:
    Parser(std::string_view source, std::string path)
        : lex_(source), src_(source), path_(std::move(path)) {}

    json parse_source_unit() {
        json nodes = json::array();
        while (!at_end()) {
            if (is_ident("pragma")) {
                nodes.push_back(parse_pragma());
            } else if (is_ident("import")) {
                skip_until(";");
                expect_punct(";");
            } else if (is_ident("abstract") || is_ident("contract") || is_ident("interface") ||
                       is_ident("library")) {
                nodes.push_back(parse_contract());
            } else {
                fail("unexpected token at file scope: '" + lex_.cur().text + "'");
            }
        }
        return json{{"nodeType", "SourceUnit"},
                    {"absolutePath", path_},
                    {"nodes", nodes},
                    {"src", src(0)}};
    }

private:
    // --- token helpers -----------------------------------------------------
    bool at_end() const { return lex_.cur().kind == Token::Kind::End; }
    bool is_ident(std::string_view s) const {
        return lex_.cur().kind == Token::Kind::Ident && lex_.cur().text == s;
    }
    bool is_punct(std::string_view s) const {
        return lex_.cur().kind == Token::Kind::Punct && lex_.cur().text == s;
    }
    bool accept_ident(std::string_view s) {
        if (is_ident(s)) {
            lex_.next();
            return true;
        }
        return false;
    }
    bool accept_punct(std::string_view s) {
        if (is_punct(s)) {
            lex_.next();
            return true;
        }
        return false;
    }
    void expect_punct(std::string_view s) {
        if (!accept_punct(s))
            fail("expected '" + std::string(s) + "', found '" + lex_.cur().text + "'");
    }
    std::string expect_ident() {
        if (lex_.cur().kind != Token::Kind::Ident)
            fail("expected identifier, found '" + lex_.cur().text + "'");
        std::string t = lex_.cur().text;
        lex_.next();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(path_ + ":" + std::to_string(lex_.cur().line) + ": " + msg);
    }
    std::string src(int start_offset) const {
        int end = lex_.cur().offset;
        return std::to_string(start_offset) + ":" + std::to_string(std::max(0, end - start_offset)) +
               ":0";
    }
    void skip_until(std::string_view punct) {
        while (!at_end() && !is_punct(punct)) lex_.next();
    }

    // --- declarations ------------------------------------------------------
    json parse_pragma() {
        int start = lex_.cur().offset;
        lex_.next(); // pragma
        json literals = json::array();
        while (!at_end() && !is_punct(";")) {
            literals.push_back(lex_.cur().text);
            lex_.next();
        }
        expect_punct(";");
        return json{{"nodeType", "PragmaDirective"}, {"literals", literals}, {"src", src(start)}};
    }

    json parse_contract() {
        int start = lex_.cur().offset;
        accept_ident("abstract");
        std::string kind = expect_ident(); // contract|interface|library
        std::string name = expect_ident();
        json bases = json::array();
        if (accept_ident("is")) {
            do {
                std::string base = expect_ident();
                while (accept_punct(".")) base = expect_ident(); // qualified path: keep leaf
                if (accept_punct("(")) { skip_balanced(")"); }
                bases.push_back(json{{"nodeType", "InheritanceSpecifier"},
                                     {"baseName", json{{"nodeType", "IdentifierPath"}, {"name", base}}}});
            } while (accept_punct(","));
        }
        expect_punct("{");
        json members = json::array();
        while (!at_end() && !is_punct("}")) members.push_back(parse_contract_member());
        expect_punct("}");
        return json{{"nodeType", "ContractDefinition"},
                    {"name", name},
                    {"contractKind", kind},
                    {"abstract", false},
                    {"baseContracts", bases},
                    {"nodes", members},
                    {"src", src(start)}};
    }

    json parse_contract_member() {
        if (is_ident("function") || is_ident("constructor") || is_ident("receive") ||
            is_ident("fallback"))
            return parse_function();
        if (is_ident("modifier")) return parse_modifier();
        if (is_ident("struct")) return parse_struct();
        if (is_ident("event")) return parse_event();
        if (is_ident("enum")) return parse_enum();
        if (is_ident("using")) {
            int start = lex_.cur().offset;
            skip_until(";");
            expect_punct(";");
            return json{{"nodeType", "UsingForDirective"}, {"src", src(start)}};
        }
        return parse_state_variable();
    }

    json parse_type_name() {
        int start = lex_.cur().offset;
        json t;
        if (accept_ident("mapping")) {
            expect_punct("(");
            json key = parse_type_name();
            expect_punct("=>");
            json value = parse_type_name();
            expect_punct(")");
            t = json{{"nodeType", "Mapping"}, {"keyType", key}, {"valueType", value}, {"src", src(start)}};
        } else if (lex_.cur().kind == Token::Kind::Ident && is_elementary_type(lex_.cur().text)) {
            std::string n = expect_ident();
            if (n == "address" && accept_ident("payable")) n = "address payable";
            t = json{{"nodeType", "ElementaryTypeName"}, {"name", n}, {"src", src(start)}};
        } else if (accept_ident("payable")) {
            t = json{{"nodeType", "ElementaryTypeName"}, {"name", "address payable"}, {"src", src(start)}};
        } else {
            std::string n = expect_ident();
            while (accept_punct(".")) n = expect_ident();
            t = json{{"nodeType", "UserDefinedTypeName"},
                     {"pathNode", json{{"name", n}}},
                     {"src", src(start)}};
        }
        while (is_punct("[")) {
            lex_.next();
            if (!is_punct("]")) parse_expression(); // fixed length: parsed, discarded
            expect_punct("]");
            t = json{{"nodeType", "ArrayTypeName"}, {"baseType", t}, {"src", src(start)}};
        }
        return t;
    }

    bool looks_like_type_start() {
        if (is_ident("mapping") || is_ident("payable")) return true;
        if (lex_.cur().kind == Token::Kind::Ident && is_elementary_type(lex_.cur().text)) return true;
        return false;
    }

    json make_var_decl(const json& type, const std::string& name, bool state_var,
                       const std::string& visibility, bool constant, const std::string& storage_loc,
                       int start) {
        return json{{"nodeType", "VariableDeclaration"},
                    {"name", name},
                    {"stateVariable", state_var},
                    {"visibility", visibility},
                    {"constant", constant},
                    {"mutability", constant ? "constant" : "mutable"},
                    {"storageLocation", storage_loc},
                    {"typeName", type},
                    {"src", src(start)}};
    }

    json parse_state_variable() {
        int start = lex_.cur().offset;
        json type = parse_type_name();
        std::string visibility = "internal";
        bool constant = false;
        for (;;) {
            if (is_ident("public") || is_ident("internal") || is_ident("private")) {
                visibility = expect_ident();
            } else if (is_ident("constant") || is_ident("immutable")) {
                constant = true;
                lex_.next();
            } else if (is_ident("override")) {
                lex_.next();
            } else {
                break;
            }
        }
        std::string name = expect_ident();
        json decl = make_var_decl(type, name, true, visibility, constant, "default", start);
        if (accept_punct("=")) decl["value"] = parse_expression();
        expect_punct(";");
        return decl;
    }

    json parse_parameter_list() {
        expect_punct("(");
        json params = json::array();
        while (!is_punct(")")) {
            int start = lex_.cur().offset;
            json type = parse_type_name();
            std::string storage_loc = "default";
            for (;;) {
                if (is_ident("memory") || is_ident("storage") || is_ident("calldata")) {
                    storage_loc = expect_ident();
                } else if (is_ident("indexed")) {
                    lex_.next();
                } else {
                    break;
                }
            }
            std::string name;
            if (lex_.cur().kind == Token::Kind::Ident) name = expect_ident();
            params.push_back(make_var_decl(type, name, false, "internal", false, storage_loc, start));
            if (!accept_punct(",")) break;
        }
        expect_punct(")");
        return json{{"nodeType", "ParameterList"}, {"parameters", params}};
    }

    json parse_function() {
        int start = lex_.cur().offset;
        std::string kind = "function";
        std::string name;
        if (accept_ident("constructor")) {
            kind = "constructor";
        } else if (accept_ident("receive")) {
            kind = "receive";
        } else if (accept_ident("fallback")) {
            kind = "fallback";
        } else {
            expect_ident(); // 'function'
            name = expect_ident();
        }
        json params = parse_parameter_list();
        std::string visibility = kind == "function" ? "public" : "public";
        std::string mutability = "nonpayable";
        json modifiers = json::array();
        json returns = json{{"nodeType", "ParameterList"}, {"parameters", json::array()}};
        for (;;) {
            if (is_ident("public") || is_ident("external") || is_ident("internal") ||
                is_ident("private")) {
                visibility = expect_ident();
            } else if (is_ident("payable") || is_ident("view") || is_ident("pure")) {
                mutability = expect_ident();
            } else if (is_ident("virtual")) {
                lex_.next();
            } else if (is_ident("override")) {
                lex_.next();
                if (accept_punct("(")) skip_balanced(")");
            } else if (is_ident("returns")) {
                lex_.next();
                returns = parse_parameter_list();
            } else if (lex_.cur().kind == Token::Kind::Ident) {
                std::string mod = expect_ident();
                json args = json::array();
                if (accept_punct("(")) {
                    while (!is_punct(")")) {
                        args.push_back(parse_expression());
                        if (!accept_punct(",")) break;
                    }
                    expect_punct(")");
                }
                modifiers.push_back(json{{"nodeType", "ModifierInvocation"},
                                         {"modifierName", json{{"name", mod}}},
                                         {"arguments", args}});
            } else {
                break;
            }
        }
        json fn{{"nodeType", "FunctionDefinition"},
                {"kind", kind},
                {"name", name},
                {"visibility", visibility},
                {"stateMutability", mutability},
                {"modifiers", modifiers},
                {"parameters", params},
                {"returnParameters", returns},
                {"src", src(start)}};
        if (accept_punct(";")) {
            fn["body"] = nullptr;
            fn["implemented"] = false;
        } else {
            fn["body"] = parse_block();
            fn["implemented"] = true;
        }
        return fn;
    }

    json parse_modifier() {
        int start = lex_.cur().offset;
        lex_.next(); // modifier
        std::string name = expect_ident();
        json params = json{{"nodeType", "ParameterList"}, {"parameters", json::array()}};
        if (is_punct("(")) params = parse_parameter_list();
        while (is_ident("virtual") || is_ident("override")) lex_.next();
        json body = parse_block();
        return json{{"nodeType", "ModifierDefinition"},
                    {"name", name},
                    {"parameters", params},
                    {"body", body},
                    {"src", src(start)}};
    }

    json parse_struct() {
        int start = lex_.cur().offset;
        lex_.next(); // struct
        std::string name = expect_ident();
        expect_punct("{");
        json members = json::array();
        while (!is_punct("}")) {
            int mstart = lex_.cur().offset;
            json type = parse_type_name();
            std::string mname = expect_ident();
            expect_punct(";");
            members.push_back(make_var_decl(type, mname, false, "internal", false, "default", mstart));
        }
        expect_punct("}");
        return json{
            {"nodeType", "StructDefinition"}, {"name", name}, {"members", members}, {"src", src(start)}};
    }

    json parse_event() {
        int start = lex_.cur().offset;
        lex_.next(); // event
        std::string name = expect_ident();
        json params = parse_parameter_list();
        accept_ident("anonymous");
        expect_punct(";");
        return json{
            {"nodeType", "EventDefinition"}, {"name", name}, {"parameters", params}, {"src", src(start)}};
    }

    json parse_enum() {
        int start = lex_.cur().offset;
        lex_.next(); // enum
        std::string name = expect_ident();
        expect_punct("{");
        skip_balanced("}");
        return json{{"nodeType", "EnumDefinition"}, {"name", name}, {"src", src(start)}};
    }

    void skip_balanced(std::string_view closer) {
        std::string_view opener = closer == ")" ? "(" : (closer == "}" ? "{" : "[");
        int depth = 1;
        while (!at_end() && depth > 0) {
            if (is_punct(opener)) ++depth;
            else if (is_punct(closer)) --depth;
            lex_.next();
        }
    }

    // --- statements ----------------------------------------------------------
    json parse_block() {
        int start = lex_.cur().offset;
        expect_punct("{");
        json stmts = json::array();
        while (!at_end() && !is_punct("}")) stmts.push_back(parse_statement());
        expect_punct("}");
        return json{{"nodeType", "Block"}, {"statements", stmts}, {"src", src(start)}};
    }

    json parse_statement() {
        int start = lex_.cur().offset;
        if (is_punct("{")) return parse_block();
        if (is_ident("unchecked")) {
            lex_.next();
            json body = parse_block();
            body["nodeType"] = "UncheckedBlock";
            return body;
        }
        if (is_ident("if")) {
            lex_.next();
            expect_punct("(");
            json cond = parse_expression();
            expect_punct(")");
            json true_body = parse_statement();
            json node{{"nodeType", "IfStatement"},
                      {"condition", cond},
                      {"trueBody", true_body},
                      {"falseBody", nullptr},
                      {"src", src(start)}};
            if (accept_ident("else")) node["falseBody"] = parse_statement();
            return node;
        }
        if (is_ident("while")) {
            lex_.next();
            expect_punct("(");
            json cond = parse_expression();
            expect_punct(")");
            json body = parse_statement();
            return json{{"nodeType", "WhileStatement"},
                        {"condition", cond},
                        {"body", body},
                        {"src", src(start)}};
        }
        if (is_ident("for")) {
            lex_.next();
            expect_punct("(");
            json init = nullptr, cond = nullptr, post = nullptr;
            if (!is_punct(";")) init = parse_simple_statement();
            else expect_punct(";");
            if (!is_punct(";")) cond = parse_expression();
            expect_punct(";");
            if (!is_punct(")")) post = json{{"nodeType", "ExpressionStatement"}, {"expression", parse_expression()}};
            expect_punct(")");
            json body = parse_statement();
            return json{{"nodeType", "ForStatement"},
                        {"initializationExpression", init},
                        {"condition", cond},
                        {"loopExpression", post},
                        {"body", body},
                        {"src", src(start)}};
        }
        if (is_ident("return")) {
            lex_.next();
            json node{{"nodeType", "Return"}, {"expression", nullptr}, {"src", src(start)}};
            if (!is_punct(";")) node["expression"] = parse_expression();
            expect_punct(";");
            return node;
        }
        if (is_ident("emit")) {
            lex_.next();
            json call = parse_expression();
            expect_punct(";");
            return json{{"nodeType", "EmitStatement"}, {"eventCall", call}, {"src", src(start)}};
        }
        if (is_ident("break")) {
            lex_.next();
            expect_punct(";");
            return json{{"nodeType", "Break"}, {"src", src(start)}};
        }
        if (is_ident("continue")) {
            lex_.next();
            expect_punct(";");
            return json{{"nodeType", "Continue"}, {"src", src(start)}};
        }
        if (is_ident("assembly")) {
            lex_.next();
            if (lex_.cur().kind == Token::Kind::String) lex_.next(); // dialect
            expect_punct("{");
            skip_balanced("}");
            return json{{"nodeType", "InlineAssembly"}, {"src", src(start)}};
        }
        return parse_simple_statement();
    }

    // Declaration or expression statement, ending with ';'.
    json parse_simple_statement() {
        int start = lex_.cur().offset;
        if (looks_like_declaration()) {
            json type = parse_type_name();
            std::string storage_loc = "default";
            while (is_ident("memory") || is_ident("storage") || is_ident("calldata"))
                storage_loc = expect_ident();
            std::string name = expect_ident();
            json decl = make_var_decl(type, name, false, "internal", false, storage_loc, start);
            json node{{"nodeType", "VariableDeclarationStatement"},
                      {"declarations", json::array({decl})},
                      {"initialValue", nullptr},
                      {"src", src(start)}};
            if (accept_punct("=")) node["initialValue"] = parse_expression();
            expect_punct(";");
            return node;
        }
        if (is_punct("(") && tuple_declaration_ahead()) {
            lex_.next(); // (
            json decls = json::array();
            while (!is_punct(")")) {
                if (is_punct(",")) {
                    decls.push_back(nullptr);
                    lex_.next();
                    continue;
                }
                int dstart = lex_.cur().offset;
                json type = parse_type_name();
                while (is_ident("memory") || is_ident("storage") || is_ident("calldata")) lex_.next();
                std::string name;
                if (lex_.cur().kind == Token::Kind::Ident) name = expect_ident();
                decls.push_back(make_var_decl(type, name, false, "internal", false, "default", dstart));
                if (!is_punct(")")) accept_punct(",");
            }
            expect_punct(")");
            expect_punct("=");
            json init = parse_expression();
            expect_punct(";");
            return json{{"nodeType", "VariableDeclarationStatement"},
                        {"declarations", decls},
                        {"initialValue", init},
                        {"src", src(start)}};
        }
        json expr = parse_expression();
        expect_punct(";");
        return json{{"nodeType", "ExpressionStatement"}, {"expression", expr}, {"src", src(start)}};
    }

    bool looks_like_declaration() {
        if (looks_like_type_start()) return true;
        // `Ident Ident` or `Ident storage Ident` or `Ident[] ...` is a declaration
        if (lex_.cur().kind == Token::Kind::Ident) {
            const Token& p = lex_.peek();
            if (p.kind == Token::Kind::Ident &&
                (p.text == "storage" || p.text == "memory" || p.text == "calldata"))
                return true;
            if (p.kind == Token::Kind::Ident && !is_subdenomination(p.text)) {
                // avoid treating `x y` oddities; require known declaration shape
                return true;
            }
            if (p.kind == Token::Kind::Punct && p.text == "[") {
                // could be indexing (expression) or array type; indexing has an
                // expression inside brackets while array type has `]` right away
                return false; // subset: array-typed locals must use elementary bases
            }
        }
        return false;
    }

    bool tuple_declaration_ahead() {
        // `(` followed by a type keyword or a second `(`—our subset only uses
        // tuple declarations of elementary/user types.
        const Token& p = lex_.peek();
        if (p.kind == Token::Kind::Ident && (is_elementary_type(p.text) || p.text == "mapping"))
            return true;
        if (p.kind == Token::Kind::Punct && p.text == ",") return true;
        return false;
    }

    // --- expressions ---------------------------------------------------------
    json parse_expression() { return parse_assignment(); }

    json parse_assignment() {
        json lhs = parse_conditional();
        static const char* ops[] = {"=", "+=", "-=", "*=", "/=", "%="};
        for (const char* op : ops) {
            if (is_punct(op)) {
                lex_.next();
                json rhs = parse_assignment();
                return json{{"nodeType", "Assignment"},
                            {"operator", op},
                            {"leftHandSide", lhs},
                            {"rightHandSide", rhs}};
            }
        }
        return lhs;
    }

    json parse_conditional() {
        json cond = parse_binary(0);
        if (accept_punct("?")) {
            json t = parse_expression();
            expect_punct(":");
            json f = parse_conditional();
            return json{{"nodeType", "Conditional"},
                        {"condition", cond},
                        {"trueExpression", t},
                        {"falseExpression", f}};
        }
        return cond;
    }

    int binary_prec(const std::string& op) const {
        if (op == "||") return 1;
        if (op == "&&") return 2;
        if (op == "==" || op == "!=") return 3;
        if (op == "<" || op == ">" || op == "<=" || op == ">=") return 4;
        if (op == "|" || op == "^" || op == "&") return 5;
        if (op == "<<" || op == ">>") return 6;
        if (op == "+" || op == "-") return 7;
        if (op == "*" || op == "/" || op == "%") return 8;
        if (op == "**") return 9;
        return -1;
    }

    json parse_binary(int min_prec) {
        json lhs = parse_unary();
        for (;;) {
            if (lex_.cur().kind != Token::Kind::Punct) return lhs;
            int prec = binary_prec(lex_.cur().text);
            if (prec < 0 || prec < min_prec) return lhs;
            std::string op = lex_.cur().text;
            lex_.next();
            json rhs = parse_binary(prec + 1);
            lhs = json{{"nodeType", "BinaryOperation"},
                       {"operator", op},
                       {"leftExpression", lhs},
                       {"rightExpression", rhs}};
        }
    }

    json parse_unary() {
        static const char* ops[] = {"!", "-", "+", "~", "++", "--"};
        for (const char* op : ops) {
            if (is_punct(op)) {
                lex_.next();
                json sub = parse_unary();
                return json{{"nodeType", "UnaryOperation"},
                            {"operator", op},
                            {"prefix", true},
                            {"subExpression", sub}};
            }
        }
        if (is_ident("delete")) {
            lex_.next();
            json sub = parse_unary();
            return json{
                {"nodeType", "UnaryOperation"}, {"operator", "delete"}, {"prefix", true}, {"subExpression", sub}};
        }
        return parse_postfix();
    }

    json parse_postfix() {
        json e = parse_primary();
        for (;;) {
            if (accept_punct(".")) {
                std::string member = expect_ident();
                e = json{{"nodeType", "MemberAccess"}, {"expression", e}, {"memberName", member}};
            } else if (accept_punct("[")) {
                json idx = parse_expression();
                expect_punct("]");
                e = json{{"nodeType", "IndexAccess"}, {"baseExpression", e}, {"indexExpression", idx}};
            } else if (is_punct("{") && (e["nodeType"] == "MemberAccess")) {
                // call options: addr.call{value: v}(...)
                lex_.next();
                json names = json::array();
                json options = json::array();
                while (!is_punct("}")) {
                    names.push_back(expect_ident());
                    expect_punct(":");
                    options.push_back(parse_expression());
                    if (!accept_punct(",")) break;
                }
                expect_punct("}");
                e = json{{"nodeType", "FunctionCallOptions"},
                         {"expression", e},
                         {"names", names},
                         {"options", options}};
            } else if (accept_punct("(")) {
                json args = json::array();
                while (!is_punct(")")) {
                    args.push_back(parse_expression());
                    if (!accept_punct(",")) break;
                }
                expect_punct(")");
                std::string kind = "functionCall";
                if (e.value("nodeType", "") == "ElementaryTypeNameExpression") kind = "typeConversion";
                e = json{{"nodeType", "FunctionCall"},
                         {"expression", e},
                         {"arguments", args},
                         {"names", json::array()},
                         {"kind", kind}};
            } else if (is_punct("++") || is_punct("--")) {
                std::string op = lex_.cur().text;
                lex_.next();
                e = json{{"nodeType", "UnaryOperation"}, {"operator", op}, {"prefix", false}, {"subExpression", e}};
            } else {
                break;
            }
        }
        return e;
    }

    json parse_primary() {
        const Token& t = lex_.cur();
        if (t.kind == Token::Kind::Number) {
            std::string value = t.text;
            lex_.next();
            std::string sub;
            if (lex_.cur().kind == Token::Kind::Ident && is_subdenomination(lex_.cur().text)) {
                sub = lex_.cur().text;
                lex_.next();
            }
            json lit{{"nodeType", "Literal"}, {"kind", "number"}, {"value", value}};
            if (!sub.empty()) lit["subdenomination"] = sub;
            return lit;
        }
        if (t.kind == Token::Kind::String) {
            std::string value = t.text;
            lex_.next();
            return json{{"nodeType", "Literal"}, {"kind", "string"}, {"value", value}};
        }
        if (t.kind == Token::Kind::Ident) {
            if (t.text == "true" || t.text == "false") {
                std::string v = t.text;
                lex_.next();
                return json{{"nodeType", "Literal"}, {"kind", "bool"}, {"value", v}};
            }
            if (is_elementary_type(t.text) || t.text == "payable") {
                std::string name = t.text == "payable" ? "address payable" : t.text;
                lex_.next();
                return json{{"nodeType", "ElementaryTypeNameExpression"},
                            {"typeName", json{{"nodeType", "ElementaryTypeName"}, {"name", name}}}};
            }
            if (t.text == "new") {
                lex_.next();
                std::string tn = expect_ident();
                return json{{"nodeType", "NewExpression"}, {"typeName", json{{"name", tn}}}};
            }
            std::string name = t.text;
            lex_.next();
            return json{{"nodeType", "Identifier"}, {"name", name}};
        }
        if (is_punct("(")) {
            lex_.next();
            json components = json::array();
            bool pending = true;
            while (!is_punct(")")) {
                if (is_punct(",")) {
                    if (pending) components.push_back(nullptr);
                    lex_.next();
                    pending = true;
                    continue;
                }
                components.push_back(parse_expression());
                pending = false;
            }
            if (pending && !components.empty()) components.push_back(nullptr);
            expect_punct(")");
            if (components.size() == 1 && !components[0].is_null()) return components[0];
            return json{{"nodeType", "TupleExpression"}, {"components", components}};
        }
        fail("unexpected token in expression: '" + t.text + "'");
    }

    Lexer lex_;
    std::string_view src_;
    std::string path_;
};

// Parses a Solidity-subset source text into compact-AST JSON.
inline json parse_to_ast_json(std::string_view source, const std::string& path) {
    Parser p(source, path);
    return p.parse_source_unit();
}

} // namespace sol

} // namespace ssrlint
