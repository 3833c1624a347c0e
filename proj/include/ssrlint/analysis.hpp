// Per-contract analysis bundle: CFGs, def-use, call graph, transfer sites.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "ssrlint/callgraph.hpp"
#include "ssrlint/cfg.hpp"
#include "ssrlint/defuse.hpp"
#include "ssrlint/ir.hpp"
#include "ssrlint/transfers.hpp"

namespace ssrlint {

class ContractAnalysis {
public:
    explicit ContractAnalysis(const ContractIR& contract) : contract_(contract) {
        for (const auto& f : contract.functions) {
            if (!f.has_body) continue;
            std::string name = f.display_name();
            cfgs_.emplace(name, build_cfg(f, contract));
            defuse_.emplace(name, build_defuse(f, contract));
            transfers_.emplace(name, find_transfers(f));
        }
        callgraph_ = build_callgraph(contract);
    }

    ContractAnalysis(const ContractAnalysis&) = delete;
    ContractAnalysis& operator=(const ContractAnalysis&) = delete;

    const ContractIR& contract() const { return contract_; }
    const CallGraph& callgraph() const { return callgraph_; }

    const FunctionIR* function(const std::string& name) const {
        for (const auto& f : contract_.functions)
            if (f.display_name() == name) return &f;
        return nullptr;
    }
    const Cfg* cfg(const std::string& name) const {
        auto it = cfgs_.find(name);
        return it == cfgs_.end() ? nullptr : &it->second;
    }
    const DefUse* defuse(const std::string& name) const {
        auto it = defuse_.find(name);
        return it == defuse_.end() ? nullptr : &it->second;
    }
    const std::vector<TransferSite>* transfers(const std::string& name) const {
        auto it = transfers_.find(name);
        return it == transfers_.end() ? nullptr : &it->second;
    }

    const std::map<std::string, std::vector<TransferSite>>& all_transfers() const {
        return transfers_;
    }
    const std::map<std::string, Cfg>& all_cfgs() const { return cfgs_; }
    const std::map<std::string, DefUse>& all_defuse() const { return defuse_; }

    const Stmt* find_stmt(const std::string& fn_name, int stmt_id) const {
        const FunctionIR* f = function(fn_name);
        if (!f) return nullptr;
        const Stmt* found = nullptr;
        for_each_stmt(f->body, [&](const Stmt& s) {
            if (s.id == stmt_id) found = &s;
        });
        return found;
    }

private:
    const ContractIR& contract_;
    std::map<std::string, Cfg> cfgs_;
    std::map<std::string, DefUse> defuse_;
    std::map<std::string, std::vector<TransferSite>> transfers_;
    CallGraph callgraph_;
};

} // namespace ssrlint
