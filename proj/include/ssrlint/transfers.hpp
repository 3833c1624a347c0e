// Token-movement recognition following ERC naming and parameter conventions:
// transfer/transferFrom/safeTransfer/safeTransferFrom/mint/burn on tokens,
// plus native sends (call{value:..}, address.transfer, address.send).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssrlint/detail/strings.hpp"
#include "ssrlint/ir.hpp"
#include "ssrlint/paths.hpp"

namespace ssrlint {

struct TransferSite {
    enum class Kind { Erc, Mint, Burn, Native };
    Kind kind = Kind::Erc;
    int stmt_id = -1;
    SourceLoc loc;
    const Expr* call = nullptr;      // the recognized call expression
    const Expr* amount = nullptr;    // amount argument
    const Expr* from_expr = nullptr; // nullptr when implied (contract itself)
    const Expr* to_expr = nullptr;
    std::string token_expr;          // receiver text for token calls ("" for bare calls)
    std::string function;            // enclosing function display name

    bool is_native() const { return kind == Kind::Native; }
};

namespace transfers_detail {

inline std::string receiver_name(const Expr& callee_base) {
    if (callee_base.kind == ExprKind::Identifier) return callee_base.name;
    if (callee_base.kind == ExprKind::TypeConversion) return callee_base.name; // IERC20(x)
    if (callee_base.kind == ExprKind::SpecialRef && callee_base.special == SpecialKind::AddressThis)
        return "this";
    return "";
}

inline bool name_has(const std::string& name, std::string_view token) {
    return detail::contains_ci(name, token);
}

// Attempts to interpret `call` (an ExprKind::Call) as a token movement.
inline std::optional<TransferSite> match_call(const Expr& call) {
    if (call.kind != ExprKind::Call || call.sub.empty()) return std::nullopt;
    const Expr& callee = call.sub[0];
    size_t argc = call.sub.size() - 1;
    auto arg = [&](size_t i) -> const Expr* {
        return i < argc ? &call.sub[1 + i] : nullptr;
    };

    std::string fname;
    const Expr* receiver = nullptr;
    if (callee.kind == ExprKind::Identifier) {
        fname = callee.name;
    } else if (callee.kind == ExprKind::MemberAccess) {
        fname = callee.name;
        receiver = &callee.sub[0];
    } else {
        return std::nullopt;
    }
    std::string lower = detail::to_lower(fname);

    TransferSite site;
    site.call = &call;
    if (receiver) site.token_expr = receiver_name(*receiver);

    // native value movement: x.call{value: v}(...), x.transfer(v), x.send(v)
    for (const auto& [opt_name, opt_expr] : call.call_options) {
        if (opt_name == "value" && lower == "call") {
            site.kind = TransferSite::Kind::Native;
            site.amount = opt_expr.get();
            site.to_expr = receiver;
            return site;
        }
    }
    if (receiver && (lower == "transfer" || lower == "send") && argc == 1) {
        site.kind = TransferSite::Kind::Native;
        site.amount = arg(0);
        site.to_expr = receiver;
        return site;
    }

    if (lower == "mint" || lower == "_mint" || lower == "safemint" || lower == "_safemint") {
        if (argc == 2) {
            site.kind = TransferSite::Kind::Mint;
            site.to_expr = arg(0);
            site.amount = arg(1);
            return site;
        }
        return std::nullopt;
    }
    if (lower == "burn" || lower == "_burn" || lower == "burnfrom") {
        if (argc == 2) {
            site.kind = TransferSite::Kind::Burn;
            site.from_expr = arg(0);
            site.amount = arg(1);
            return site;
        }
        if (argc == 1) {
            site.kind = TransferSite::Kind::Burn;
            site.amount = arg(0);
            return site;
        }
        return std::nullopt;
    }

    if (!name_has(fname, "transfer")) return std::nullopt;

    bool is_from_style = name_has(fname, "transferfrom") || name_has(fname, "transfer_from");
    site.kind = TransferSite::Kind::Erc;
    if (is_from_style && argc == 3) {
        site.from_expr = arg(0);
        site.to_expr = arg(1);
        site.amount = arg(2);
        return site;
    }
    if (argc == 3) {
        // generic helper convention: (from, to, amount)
        site.from_expr = arg(0);
        site.to_expr = arg(1);
        site.amount = arg(2);
        return site;
    }
    if (argc == 2) {
        // token.transfer(to, amount) / safeTransfer(to, amount)
        site.to_expr = arg(0);
        site.amount = arg(1);
        return site;
    }
    return std::nullopt;
}

} // namespace transfers_detail

// All token-moving statements in a function body, in statement order.
inline std::vector<TransferSite> find_transfers(const FunctionIR& f) {
    std::vector<TransferSite> out;
    for_each_stmt(f.body, [&](const Stmt& s) {
        for_each_expr_in(s, [&](const Expr& e) {
            if (e.kind != ExprKind::Call) return;
            auto site = transfers_detail::match_call(e);
            if (site) {
                site->stmt_id = s.id;
                site->loc = e.loc.line ? e.loc : s.loc;
                site->function = f.display_name();
                out.push_back(*site);
            }
        });
    });
    return out;
}

// Spec'd single-statement entry point: the amount expression of a recognized
// token-moving statement. Throws NotATransfer otherwise.
inline const Expr& locate_transfer_amount(const Stmt& stmt) {
    const Expr* found = nullptr;
    for_each_expr_in(stmt, [&](const Expr& e) {
        if (found || e.kind != ExprKind::Call) return;
        auto site = transfers_detail::match_call(e);
        if (site && site->amount) found = site->amount;
    });
    if (!found) throw NotATransfer("statement is not a recognized token transfer");
    return *found;
}

} // namespace ssrlint
