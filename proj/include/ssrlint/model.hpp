// The staking model: resolved role paths, role-tagged functions and one CDG
// per transfer statement of each role function; answers the Reward/StakeTime/
// Amount/unStake/CalDepend/DependonBalance predicates.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ssrlint/analysis.hpp"
#include "ssrlint/cdg.hpp"
#include "ssrlint/extractor.hpp"
#include "ssrlint/ir.hpp"
#include "ssrlint/paths.hpp"

namespace ssrlint {

struct TransferCdg {
    FuncRole role = FuncRole::GetReward;
    std::string role_function;  // externally reachable function carrying the role
    TransferSite::Kind transfer_kind = TransferSite::Kind::Erc;
    bool outgoing = true;       // tokens leave the contract (to != this)
    AddrClass to = AddrClass::unknown();
    std::string token_expr;
    Cdg cdg;
};

struct StakingModel {
    std::string contract_name;
    std::vector<VariablePath> rewards;
    std::vector<VariablePath> stake_times;
    std::vector<VariablePath> amounts;
    std::optional<VariablePath> stake_token;
    std::optional<VariablePath> reward_token;
    std::set<std::string> ambiguous_names; // names that matched several declarations

    struct RoleFunc {
        std::string name;
        FuncRole role;
        std::vector<FuncRole> secondary;
    };
    std::vector<RoleFunc> role_funcs;
    std::vector<TransferCdg> transfer_cdgs;
    Diagnostics diagnostics;

    // --- predicates ----------------------------------------------------------
    bool is_reward(const VariablePath& p) const { return contains(rewards, p); }
    bool is_amount(const VariablePath& p) const { return contains(amounts, p); }
    bool is_stake_time(const VariablePath& p) const { return contains(stake_times, p); }
    bool is_stake_time_name(const std::string& name) const {
        if (name == "block.timestamp" || name == "block.number" || name == "now") return true;
        for (const auto& p : stake_times)
            if (p.str() == name || p.base == name) return true;
        return false;
    }
    bool has_role(const std::string& fn, FuncRole role) const {
        for (const auto& rf : role_funcs) {
            if (rf.name != fn) continue;
            if (rf.role == role) return true;
            for (auto s : rf.secondary)
                if (s == role) return true;
        }
        return false;
    }
    std::vector<const RoleFunc*> funcs_with(FuncRole role) const {
        std::vector<const RoleFunc*> out;
        for (const auto& rf : role_funcs) {
            bool match = rf.role == role;
            for (auto s : rf.secondary) match = match || s == role;
            if (match) out.push_back(&rf);
        }
        return out;
    }
    std::vector<const TransferCdg*> cdgs_for(FuncRole role) const {
        std::vector<const TransferCdg*> out;
        for (const auto& tc : transfer_cdgs)
            if (tc.role == role) out.push_back(&tc);
        return out;
    }
    // time evidence anywhere in a CDG's closure, Con edges included
    bool time_evidence(const Cdg& cdg) const {
        if (cdg.has_time_node) return true;
        for (const auto& p : cdg.state_dep)
            if (is_stake_time(p)) return true;
        return false;
    }

private:
    static bool contains(const std::vector<VariablePath>& v, const VariablePath& p) {
        for (const auto& x : v)
            if (x.same_slot(p)) return true;
        return false;
    }
};

namespace model_detail {

// Resolves a role name ("base", "base.member", or a bare struct member name)
// against the contract's declarations.
inline std::vector<VariablePath> resolve_role_name(const std::string& name,
                                                   const ContractIR& contract, bool& ambiguous) {
    std::vector<VariablePath> out;
    ambiguous = false;
    auto dot = name.find('.');
    if (dot != std::string::npos) {
        std::string base = name.substr(0, dot);
        std::string member = name.substr(dot + 1);
        const StateVarDecl* v = contract.find_state_var(base);
        if (!v) return out;
        const TypeDesc& leaf = v->type_desc.leaf();
        if (leaf.kind == TypeDesc::Kind::Struct) {
            if (const StructDef* sd = contract.find_struct(leaf.name)) {
                for (const auto& [mname, mtype] : sd->members) {
                    if (mname == member) {
                        VariablePath p;
                        p.base = base;
                        p.member = member;
                        p.key_shape = key_shape_of(v->type_desc);
                        out.push_back(p);
                    }
                }
            }
        }
        return out;
    }
    if (const StateVarDecl* v = contract.find_state_var(name)) {
        VariablePath p;
        p.base = name;
        p.key_shape = key_shape_of(v->type_desc);
        out.push_back(p);
        return out;
    }
    // bare member name: search mapping->struct members across declarations
    for (const auto& v : contract.state_vars) {
        const TypeDesc& leaf = v.type_desc.leaf();
        if (!v.type_desc.is_mapping() || leaf.kind != TypeDesc::Kind::Struct) continue;
        const StructDef* sd = contract.find_struct(leaf.name);
        if (!sd) continue;
        for (const auto& [mname, mtype] : sd->members) {
            if (mname == name) {
                VariablePath p;
                p.base = v.name;
                p.member = name;
                p.key_shape = key_shape_of(v.type_desc);
                out.push_back(p);
            }
        }
    }
    ambiguous = out.size() > 1;
    return out;
}

} // namespace model_detail

inline StakingModel build_staking_model(const StakingInfo& info, const ContractIR& contract,
                                        const ContractAnalysis& analysis, int cdg_depth_bound = 16) {
    StakingModel model;
    model.contract_name = contract.name;

    auto resolve_role = [&](VarRole role, std::vector<VariablePath>& sink) {
        for (const auto& name : info.names_for(role)) {
            bool ambiguous = false;
            auto paths = model_detail::resolve_role_name(name, contract, ambiguous);
            if (paths.empty()) {
                diag(model.diagnostics, Severity::Note, "dropped-path",
                     "role name " + name + " matches no declaration");
                continue;
            }
            if (ambiguous) model.ambiguous_names.insert(name);
            for (auto& p : paths) {
                p.role = to_string(role);
                bool dup = false;
                for (const auto& existing : sink)
                    if (existing.same_slot(p)) dup = true;
                if (!dup) sink.push_back(p);
            }
        }
    };
    resolve_role(VarRole::UserStakeAmount, model.amounts);
    resolve_role(VarRole::UserStakeReward, model.rewards);
    resolve_role(VarRole::UserStakeTime, model.stake_times);
    std::vector<VariablePath> stake_tok, reward_tok;
    resolve_role(VarRole::StakeTokenAddress, stake_tok);
    resolve_role(VarRole::RewardTokenAddress, reward_tok);
    if (!stake_tok.empty()) model.stake_token = stake_tok.front();
    if (!reward_tok.empty()) model.reward_token = reward_tok.front();

    CdgBuilder builder(contract, analysis, cdg_depth_bound);
    for (const auto& [role, funcs] : info.func_roles) {
        for (const auto& rf : funcs) {
            StakingModel::RoleFunc entry;
            entry.name = rf.name;
            entry.role = role;
            entry.secondary = rf.secondary;
            model.role_funcs.push_back(entry);

            for (const auto* site : extractor_detail::transitive_transfers(analysis, rf.name)) {
                TransferCdg tc;
                tc.role = role;
                tc.role_function = rf.name;
                tc.transfer_kind = site->kind;
                tc.token_expr = site->token_expr;
                tc.to = site->to_expr ? classify_address(*site->to_expr) : AddrClass::unknown();
                tc.outgoing = site->kind == TransferSite::Kind::Native ||
                              site->kind == TransferSite::Kind::Mint ||
                              tc.to.kind != AddrClass::Kind::This;
                tc.cdg = builder.build(*site);
                model.transfer_cdgs.push_back(std::move(tc));
            }
        }
    }
    return model;
}

} // namespace ssrlint
