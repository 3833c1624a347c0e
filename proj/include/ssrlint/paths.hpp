// VariablePath (state variable or two-layer mapping->struct-member path) and
// the syntactic address classification used for keys, senders and receivers.
#pragma once

#include <string>
#include <tuple>

#include "ssrlint/ir.hpp"

namespace ssrlint {

enum class KeyShape { None, AddressKeyed, IdKeyed };

struct VariablePath {
    std::string base;
    std::string member;          // empty for single-layer paths
    KeyShape key_shape = KeyShape::None;
    std::string role;            // role tag, filled in by model resolution

    std::string str() const { return member.empty() ? base : base + "." + member; }
    bool same_slot(const VariablePath& o) const { return base == o.base && member == o.member; }
    bool operator==(const VariablePath& o) const { return same_slot(o); }
    bool operator<(const VariablePath& o) const {
        return std::tie(base, member) < std::tie(o.base, o.member);
    }
};

// Syntactic classification of an address-valued expression.
struct AddrClass {
    enum class Kind { Caller, Param, Constant, StateRef, This, Unknown };
    Kind kind = Kind::Unknown;
    std::string name; // param name / state var name / literal text

    static AddrClass caller() { return {Kind::Caller, ""}; }
    static AddrClass self() { return {Kind::This, ""}; }
    static AddrClass param(std::string n) { return {Kind::Param, std::move(n)}; }
    static AddrClass state_ref(std::string n) { return {Kind::StateRef, std::move(n)}; }
    static AddrClass constant(std::string n) { return {Kind::Constant, std::move(n)}; }
    static AddrClass unknown() { return {Kind::Unknown, ""}; }

    bool is_caller() const { return kind == Kind::Caller; }
    bool operator==(const AddrClass& o) const { return kind == o.kind && name == o.name; }
    std::string str() const {
        switch (kind) {
            case Kind::Caller: return "Caller";
            case Kind::Param: return "Param(" + name + ")";
            case Kind::Constant: return "Constant(" + name + ")";
            case Kind::StateRef: return "StateRef(" + name + ")";
            case Kind::This: return "This";
            case Kind::Unknown: return "Unknown";
        }
        return "Unknown";
    }
};

// Classification is deterministic and purely syntactic. `_msgSender()` and
// similar forwarder calls count as the caller.
inline AddrClass classify_address(const Expr& e) {
    switch (e.kind) {
        case ExprKind::SpecialRef:
            if (e.special == SpecialKind::MsgSender) return AddrClass::caller();
            if (e.special == SpecialKind::AddressThis) return AddrClass::self();
            if (e.special == SpecialKind::TxOrigin) return AddrClass::unknown();
            return AddrClass::unknown();
        case ExprKind::Identifier:
            if (e.is_identifier("this")) return AddrClass::self();
            if (e.ref == RefKind::Param) return AddrClass::param(e.name);
            if (e.ref == RefKind::StateVar) return AddrClass::state_ref(e.name);
            return AddrClass::unknown();
        case ExprKind::Literal:
            return AddrClass::constant(e.name);
        case ExprKind::TypeConversion:
            if (!e.sub.empty()) return classify_address(e.sub[0]);
            return AddrClass::unknown();
        case ExprKind::Call:
            if (!e.sub.empty() && e.sub[0].kind == ExprKind::Identifier &&
                (e.sub[0].name == "_msgSender" || e.sub[0].name == "msgSender"))
                return AddrClass::caller();
            return AddrClass::unknown();
        default:
            return AddrClass::unknown();
    }
}

inline KeyShape key_shape_of(const TypeDesc& mapping_type) {
    if (!mapping_type.is_mapping()) return KeyShape::None;
    if (mapping_type.key_type.rfind("address", 0) == 0) return KeyShape::AddressKeyed;
    return KeyShape::IdKeyed;
}

} // namespace ssrlint
