// Role extraction: which variables hold stake amounts / rewards / times and
// which functions implement stake / getReward / unStake. The deterministic
// heuristic is the default path; the LLM client (llm.hpp) produces the same
// StakingInfo shape and falls back here.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssrlint/analysis.hpp"
#include "ssrlint/detail/strings.hpp"
#include "ssrlint/ir.hpp"
#include "ssrlint/paths.hpp"

namespace ssrlint {

enum class VarRole { UserStakeAmount, UserStakeReward, UserStakeTime, StakeTokenAddress, RewardTokenAddress };
enum class FuncRole { Stake, GetReward, UnStake };

inline const char* to_string(VarRole r) {
    switch (r) {
        case VarRole::UserStakeAmount: return "UserStakeAmount";
        case VarRole::UserStakeReward: return "UserStakeReward";
        case VarRole::UserStakeTime: return "UserStakeTime";
        case VarRole::StakeTokenAddress: return "StakeTokenAddress";
        case VarRole::RewardTokenAddress: return "RewardTokenAddress";
    }
    return "?";
}
inline const char* to_string(FuncRole r) {
    switch (r) {
        case FuncRole::Stake: return "Stake";
        case FuncRole::GetReward: return "GetReward";
        case FuncRole::UnStake: return "UnStake";
    }
    return "?";
}

struct TransferLocator {
    std::string function; // function containing the statement
    int stmt_id = -1;
    SourceLoc loc;
    bool operator<(const TransferLocator& o) const {
        return std::tie(function, stmt_id) < std::tie(o.function, o.stmt_id);
    }
};

struct RoleFunction {
    std::string name;
    std::optional<TransferLocator> transfer;
    int score = 0;
    std::vector<FuncRole> secondary; // extra lexicon matches (dual-role functions)
};

struct StakingInfo {
    std::map<VarRole, std::vector<std::string>> var_roles; // "base" or "base.member"
    std::map<FuncRole, std::vector<RoleFunction>> func_roles;
    std::string provenance = "heuristic";
    Diagnostics diagnostics;

    bool is_staking() const {
        for (const auto& [r, v] : var_roles)
            if (!v.empty()) return true;
        for (const auto& [r, v] : func_roles)
            if (!v.empty()) return true;
        return false;
    }
    std::vector<std::string> names_for(VarRole r) const {
        auto it = var_roles.find(r);
        return it == var_roles.end() ? std::vector<std::string>{} : it->second;
    }
};

namespace extractor_detail {

using detail::contains_ci;
using detail::to_lower;

inline bool any_of_ci(const std::string& name, std::initializer_list<const char*> tokens) {
    for (const char* t : tokens)
        if (contains_ci(name, t)) return true;
    return false;
}

// --- variable lexicons (layer 1) ------------------------------------------

inline bool time_lexicon(const std::string& n) {
    return any_of_ci(n, {"time", "timestamp", "duration", "lastclaim", "lastupdate", "since",
                         "lastaction", "startblock", "unlockat", "stakedat"});
}
inline bool reward_lexicon(const std::string& n) {
    return any_of_ci(n, {"reward", "earned", "pending", "claimable", "harvest"});
}
inline bool amount_lexicon_flat(const std::string& n) {
    return any_of_ci(n, {"stake", "deposit"}) && !contains_ci(n, "unstake");
}
inline bool amount_lexicon_member(const std::string& n) {
    return any_of_ci(n, {"amount", "balance", "shares", "staked", "deposit"});
}
inline bool reward_token_lexicon(const std::string& n) {
    return contains_ci(n, "rewardtoken") || contains_ci(n, "rewardstoken") ||
           (contains_ci(n, "reward") && contains_ci(n, "token"));
}
inline bool stake_token_lexicon(const std::string& n) {
    return any_of_ci(n, {"staketoken", "stakingtoken", "lptoken", "deposittoken", "want",
                         "asset"}) ||
           to_lower(n) == "token" || to_lower(n) == "_token";
}

// --- type constraints (layer 2) --------------------------------------------

inline bool per_user_uint(const TypeDesc& t) {
    if (!t.is_mapping()) return false;
    const TypeDesc& leaf = t.leaf();
    return leaf.is_uint_like();
}
inline bool address_like(const TypeDesc& t) { return t.is_address() || t.is_contract_ref(); }

// whether any write to `path` assigns an expression containing block.timestamp
inline bool assigned_from_timestamp(const ContractIR& contract, const ContractAnalysis& analysis,
                                    const VariablePath& path) {
    for (const auto& f : contract.functions) {
        const DefUse* du = analysis.defuse(f.display_name());
        if (!du) continue;
        for (const auto& w : du->state_writes) {
            if (!w.path.same_slot(path)) continue;
            const Stmt* s = analysis.find_stmt(f.display_name(), w.stmt_id);
            if (!s) continue;
            bool uses_ts = false;
            for_each_expr_in(*s, [&](const Expr& e) {
                if (e.special == SpecialKind::BlockTimestamp || e.special == SpecialKind::BlockNumber)
                    uses_ts = true;
            });
            if (uses_ts) return true;
        }
    }
    return false;
}

struct VarCandidate {
    VariablePath path;
    const TypeDesc* leaf_type;
    const TypeDesc* full_type;
};

inline std::vector<VarCandidate> variable_candidates(const ContractIR& contract) {
    std::vector<VarCandidate> out;
    for (const auto& v : contract.state_vars) {
        VarCandidate flat;
        flat.path.base = v.name;
        flat.path.key_shape = key_shape_of(v.type_desc);
        flat.leaf_type = &v.type_desc.leaf();
        flat.full_type = &v.type_desc;
        out.push_back(flat);
        // two-layer: mapping (or mapping->array) whose leaf is a struct
        const TypeDesc& leaf = v.type_desc.leaf();
        if (v.type_desc.is_mapping() && leaf.kind == TypeDesc::Kind::Struct) {
            if (const StructDef* sd = contract.find_struct(leaf.name)) {
                for (const auto& [mname, mtype] : sd->members) {
                    VarCandidate two;
                    two.path.base = v.name;
                    two.path.member = mname;
                    two.path.key_shape = key_shape_of(v.type_desc);
                    two.leaf_type = &mtype;
                    two.full_type = &mtype;
                    out.push_back(two);
                }
            }
        }
    }
    return out;
}

// --- function usage constraints (layer 3) -----------------------------------

// transfer sites of a function including internal callees (one closure pass)
inline std::vector<const TransferSite*> transitive_transfers(const ContractAnalysis& analysis,
                                                             const std::string& fn) {
    std::vector<const TransferSite*> out;
    std::set<std::string> seen;
    std::vector<std::string> work{fn};
    while (!work.empty()) {
        std::string cur = work.back();
        work.pop_back();
        if (!seen.insert(cur).second) continue;
        if (const auto* ts = analysis.transfers(cur))
            for (const auto& t : *ts) out.push_back(&t);
        for (const auto* call : analysis.callgraph().calls_from(cur))
            if (call->kind == CallSite::Kind::Internal && call->resolved)
                work.push_back(call->callee);
    }
    return out;
}

inline bool transfers_tokens_out(const ContractAnalysis& analysis, const std::string& fn) {
    for (const auto* t : transitive_transfers(analysis, fn)) {
        if (t->kind == TransferSite::Kind::Mint) return true; // minted out to a user
        if (t->to_expr) {
            AddrClass to = classify_address(*t->to_expr);
            if (to.kind != AddrClass::Kind::This) return true;
        } else if (t->kind == TransferSite::Kind::Native) {
            return true;
        }
    }
    return false;
}

inline bool receives_tokens_in(const ContractAnalysis& analysis, const FunctionIR& f) {
    if (f.mutability == "payable") return true;
    for (const auto* t : transitive_transfers(analysis, f.display_name())) {
        if (t->to_expr) {
            AddrClass to = classify_address(*t->to_expr);
            if (to.kind == AddrClass::Kind::This) return true;
        }
        if (t->kind == TransferSite::Kind::Mint) return true; // minting shares on deposit
    }
    return false;
}

// first outgoing (or incoming, for stake) transfer used as the role locator
inline std::optional<TransferLocator> role_transfer(const ContractAnalysis& analysis,
                                                    const std::string& fn, FuncRole role) {
    std::vector<const TransferSite*> sites = transitive_transfers(analysis, fn);
    auto locator = [](const TransferSite* t) {
        return TransferLocator{t->function, t->stmt_id, t->loc};
    };
    for (const auto* t : sites) {
        AddrClass to = t->to_expr ? classify_address(*t->to_expr) : AddrClass::unknown();
        bool outgoing = t->kind == TransferSite::Kind::Native || t->kind == TransferSite::Kind::Mint ||
                        to.kind != AddrClass::Kind::This;
        if (role == FuncRole::Stake && !outgoing) return locator(t);
        if (role == FuncRole::Stake && t->kind == TransferSite::Kind::Mint) return locator(t);
        if ((role == FuncRole::GetReward || role == FuncRole::UnStake) && outgoing)
            return locator(t);
    }
    if (!sites.empty()) return locator(sites.front());
    return std::nullopt;
}

} // namespace extractor_detail

// ---------------------------------------------------------------------------
// Heuristic extraction: layered scoring (name lexicon, type constraint, usage)

inline StakingInfo extract_heuristic(const ContractIR& contract, const ContractAnalysis& analysis) {
    using namespace extractor_detail;
    StakingInfo info;
    info.provenance = "heuristic";

    // variables
    for (const auto& cand : variable_candidates(contract)) {
        const std::string flat_name = cand.path.base;
        const std::string name = cand.path.str();
        const std::string match_name = cand.path.member.empty() ? flat_name : cand.path.member;
        struct Scored { VarRole role; int score; };
        std::vector<Scored> scores;

        if (time_lexicon(match_name)) {
            int s = 1;
            if (per_user_uint(*cand.full_type) || cand.leaf_type->is_uint_like()) s += 1;
            if (assigned_from_timestamp(contract, analysis, cand.path)) s += 1;
            if (s >= 2) scores.push_back({VarRole::UserStakeTime, s});
        }
        if (reward_lexicon(match_name) && !time_lexicon(match_name)) {
            int s = 1;
            if (cand.path.member.empty() ? per_user_uint(*cand.full_type)
                                         : cand.leaf_type->is_uint_like())
                s += 1;
            if (s >= 2) scores.push_back({VarRole::UserStakeReward, s});
        }
        {
            bool lex = cand.path.member.empty() ? amount_lexicon_flat(match_name)
                                                : amount_lexicon_member(match_name);
            if (lex && !reward_lexicon(match_name) && !time_lexicon(match_name)) {
                int s = 1;
                if (cand.path.member.empty() ? per_user_uint(*cand.full_type)
                                             : cand.leaf_type->is_uint_like())
                    s += 1;
                if (s >= 2) scores.push_back({VarRole::UserStakeAmount, s});
            }
        }
        if (cand.path.member.empty() && address_like(*cand.full_type)) {
            if (reward_token_lexicon(flat_name))
                scores.push_back({VarRole::RewardTokenAddress, 2});
            else if (stake_token_lexicon(flat_name))
                scores.push_back({VarRole::StakeTokenAddress, 2});
        }

        if (scores.empty()) continue;
        std::stable_sort(scores.begin(), scores.end(),
                         [](const Scored& a, const Scored& b) { return a.score > b.score; });
        info.var_roles[scores.front().role].push_back(name);
    }

    // functions
    for (const auto& f : contract.functions) {
        if (f.kind != "function" || !f.has_body) continue;
        const std::string name = f.name;
        const std::string lower = to_lower(name);
        struct Scored { FuncRole role; int score; };
        std::vector<Scored> scores;

        bool unstake_lex = any_of_ci(name, {"unstake", "withdraw", "exit", "leave", "redeem",
                                            "unbond", "emergencyexit"});
        bool reward_lex = any_of_ci(name, {"getreward", "claim", "harvest", "collectreward",
                                           "reward", "earn"});
        bool stake_lex = !unstake_lex && any_of_ci(name, {"stake", "deposit", "enter", "bond", "farm"});

        if (reward_lex && !unstake_lex) {
            int s = 1;
            if (transfers_tokens_out(analysis, f.display_name())) s += 1;
            if (s >= 2) scores.push_back({FuncRole::GetReward, s});
        }
        if (unstake_lex) {
            int s = 1;
            if (transfers_tokens_out(analysis, f.display_name())) s += 1;
            if (s >= 2) scores.push_back({FuncRole::UnStake, s});
        }
        if (stake_lex) {
            int s = 1;
            if (receives_tokens_in(analysis, f)) s += 1;
            if (s >= 2) scores.push_back({FuncRole::Stake, s});
        }
        if (scores.empty()) continue;
        std::stable_sort(scores.begin(), scores.end(),
                         [](const Scored& a, const Scored& b) { return a.score > b.score; });

        RoleFunction rf;
        rf.name = f.display_name();
        rf.score = scores.front().score;
        rf.transfer = role_transfer(analysis, f.display_name(), scores.front().role);
        for (size_t i = 1; i < scores.size(); ++i) rf.secondary.push_back(scores[i].role);
        info.func_roles[scores.front().role].push_back(std::move(rf));
    }
    return info;
}

// ---------------------------------------------------------------------------
// Role refinement against the call graph

inline StakingInfo refine_roles(const StakingInfo& raw, const ContractIR& contract,
                                const ContractAnalysis& analysis) {
    StakingInfo out = raw;
    const CallGraph& cg = analysis.callgraph();

    for (auto& [role, funcs] : out.func_roles) {
        std::vector<RoleFunction> kept;
        std::set<std::string> present;
        for (const auto& rf : funcs) present.insert(rf.name);
        for (auto rf : funcs) {
            const FunctionIR* f = analysis.function(rf.name);
            if (!f) {
                diag(out.diagnostics, Severity::Note, "dropped-role",
                     "role function " + rf.name + " not found in contract");
                continue;
            }
            if (!cg.externally_reachable(rf.name)) {
                diag(out.diagnostics, Severity::Note, "dropped-role",
                     "role function " + rf.name + " is not externally reachable");
                continue;
            }
            if (!f->is_public_or_external()) {
                // internal helper: propagate the role to the externally
                // reachable wrapper that calls it
                std::set<std::string> seen{rf.name};
                std::vector<std::string> work{rf.name};
                std::string wrapper;
                while (!work.empty() && wrapper.empty()) {
                    std::string cur = work.back();
                    work.pop_back();
                    for (const auto* site : cg.internal_callers_of(cur)) {
                        const FunctionIR* caller = analysis.function(site->caller);
                        if (!caller) continue;
                        if (caller->is_public_or_external() && caller->kind == "function") {
                            wrapper = site->caller;
                            break;
                        }
                        if (seen.insert(site->caller).second) work.push_back(site->caller);
                    }
                }
                if (wrapper.empty()) {
                    diag(out.diagnostics, Severity::Note, "dropped-role",
                         "role function " + rf.name + " has no externally reachable wrapper");
                    continue;
                }
                if (present.count(wrapper)) continue; // wrapper already carries the role
                diag(out.diagnostics, Severity::Note, "role-propagated",
                     "role moved from internal " + rf.name + " to wrapper " + wrapper);
                rf.name = wrapper;
                present.insert(wrapper);
            }
            // re-anchor the transfer locator to the statement that actually
            // moves tokens (possibly inside an internal callee)
            auto anchored = extractor_detail::role_transfer(analysis, rf.name, role);
            if (anchored) rf.transfer = anchored;
            kept.push_back(std::move(rf));
        }
        // deterministic order, one entry per function
        std::stable_sort(kept.begin(), kept.end(),
                         [](const RoleFunction& a, const RoleFunction& b) { return a.name < b.name; });
        kept.erase(std::unique(kept.begin(), kept.end(),
                               [](const RoleFunction& a, const RoleFunction& b) {
                                   return a.name == b.name;
                               }),
                   kept.end());
        funcs = std::move(kept);
    }

    // validation totality: every referenced variable name resolves
    for (auto& [role, names] : out.var_roles) {
        std::vector<std::string> kept;
        for (const auto& n : names) {
            auto dot = n.find('.');
            std::string base = dot == std::string::npos ? n : n.substr(0, dot);
            if (contract.find_state_var(base)) {
                kept.push_back(n);
            } else {
                diag(out.diagnostics, Severity::Note, "dropped-role",
                     "role variable " + n + " does not resolve in contract");
            }
        }
        names = std::move(kept);
    }
    return out;
}

} // namespace ssrlint
