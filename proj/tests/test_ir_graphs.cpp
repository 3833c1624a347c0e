#include <gtest/gtest.h>

#include "test_support.hpp"

#include "ssrlint/analysis.hpp"

using namespace ssrlint;

namespace {

int reachable_count_without_edge(const Cfg& cfg, int from_block, CfgEdge::Kind kind,
                                 std::set<int>& reached) {
    std::vector<int> work{cfg.entry};
    reached = {cfg.entry};
    while (!work.empty()) {
        int b = work.back();
        work.pop_back();
        for (const auto& e : cfg.edges) {
            if (e.from == from_block && e.kind == kind) continue; // mutated away
            if (e.from == b && !reached.count(e.to)) {
                reached.insert(e.to);
                work.push_back(e.to);
            }
        }
    }
    return static_cast<int>(reached.size());
}

} // namespace

TEST(Cfg, EmptyBody) {
    SourceUnit unit = test::load_source("contract A { function f() public {} }");
    const FunctionIR* f = unit.contracts[0].find_function("f");
    Cfg cfg = build_cfg(*f, unit.contracts[0]);
    EXPECT_TRUE(cfg.guards.empty());
    // entry connects straight to the synthetic exit
    bool entry_to_exit = false;
    for (const auto& e : cfg.edges)
        if (e.from == cfg.entry && e.to == cfg.exit) entry_to_exit = true;
    EXPECT_TRUE(entry_to_exit);
}

TEST(Cfg, DiamondShape) {
    const char* src = R"(
contract A {
    uint public a;
    function f(bool c) public {
        if (c) { a = 1; } else { a = 2; }
    }
}
)";
    SourceUnit unit = test::load_source(src);
    const FunctionIR* f = unit.contracts[0].find_function("f");
    Cfg cfg = build_cfg(*f, unit.contracts[0]);
    // entry(+cond), then, else, join — synthetic exit excluded
    EXPECT_EQ(static_cast<int>(cfg.blocks.size()) - 1, 4);
    ASSERT_EQ(cfg.guards.size(), 1u);
    const GuardNode& g = cfg.guards[0];
    EXPECT_EQ(g.origin, "if");
    EXPECT_EQ(g.dominated_stmts.size(), 2u); // both branch assignments
}

TEST(Cfg, Fig11RequireGuardDominatesTransfer) {
    SourceUnit unit = load_flattened(test::fixture_path("fig11_cdg.sol"));
    const ContractIR& c = unit.contracts[0];
    ContractAnalysis analysis(c);
    const auto* transfers = analysis.transfers("getReward");
    ASSERT_NE(transfers, nullptr);
    ASSERT_EQ(transfers->size(), 1u);
    int transfer_stmt = (*transfers)[0].stmt_id;

    const Cfg* cfg = analysis.cfg("getReward");
    ASSERT_NE(cfg, nullptr);
    bool require_guard_dominates = false;
    for (const auto* g : cfg->guards_dominating(transfer_stmt)) {
        if (g->origin == "require" && g->condition.kind == ExprKind::BinaryOp &&
            g->condition.name == ">" && g->condition.sub[1].is_identifier("min"))
            require_guard_dominates = true;
    }
    EXPECT_TRUE(require_guard_dominates);
}

TEST(Cfg, GuardDominationMatchesControlDependence) {
    const char* src = R"(
contract A {
    uint public a;
    uint public b;
    function f(uint x) public {
        require(x > 0, "positive");
        a = x;
        if (x > 10) { b = x; }
        a = a + 1;
    }
}
)";
    SourceUnit unit = test::load_source(src);
    const FunctionIR* f = unit.contracts[0].find_function("f");
    Cfg cfg = build_cfg(*f, unit.contracts[0]);
    for (const auto& g : cfg.guards) {
        if (g.block_id < 0) continue;
        std::set<int> reached;
        reachable_count_without_edge(cfg, g.block_id, CfgEdge::Kind::True, reached);
        // every dominated statement sits in a block unreachable without the true edge
        for (int sid : g.dominated_stmts) {
            for (const auto& blk : cfg.blocks) {
                for (const Stmt* s : blk.stmts) {
                    if (s->id == sid && s->kind != StmtKind::If && s->kind != StmtKind::Loop)
                        EXPECT_FALSE(reached.count(blk.id))
                            << "stmt " << sid << " reachable without guard true-edge";
                }
            }
        }
    }
}

TEST(Cfg, ModifierConditionsBecomeEntryGuards) {
    const char* src = R"(
contract A {
    address public owner;
    uint public fee;
    modifier onlyOwner() {
        require(msg.sender == owner, "not owner");
        _;
    }
    function setFee(uint f) public onlyOwner {
        fee = f;
    }
}
)";
    SourceUnit unit = test::load_source(src);
    const FunctionIR* f = unit.contracts[0].find_function("setFee");
    Cfg cfg = build_cfg(*f, unit.contracts[0]);
    ASSERT_EQ(cfg.guards.size(), 1u);
    EXPECT_EQ(cfg.guards[0].origin, "modifier");
    // dominates the whole body
    EXPECT_EQ(cfg.guards[0].dominated_stmts.size(), 1u);
}

TEST(DefUse, StraightLineExactness) {
    SourceUnit unit = test::load_source(R"(
contract A {
    function f(uint b, uint c) public pure returns (uint) {
        uint a = b + c;
        return a;
    }
}
)");
    const ContractIR& c = unit.contracts[0];
    DefUse du = build_defuse(*c.find_function("f"), c);
    const Stmt& decl = c.find_function("f")->body[0];
    EXPECT_TRUE(du.defs.at("a").count(decl.id));
    EXPECT_TRUE(du.uses.at("b").count(decl.id));
    EXPECT_TRUE(du.uses.at("c").count(decl.id));
    EXPECT_FALSE(du.uses.count("a") && du.uses.at("a").count(decl.id));
    EXPECT_TRUE(du.state_reads.empty());
    EXPECT_TRUE(du.state_writes.empty());
}

TEST(DefUse, Fig7ForceTransferWrites) {
    SourceUnit unit = load_flattened(test::corpus_path("fig7_uaa.sol"));
    const ContractIR& c = unit.contracts[0];
    DefUse du = build_defuse(*c.find_function("forceTransfer"), c);
    ASSERT_EQ(du.state_writes.size(), 2u);
    EXPECT_EQ(du.state_writes[0].path.base, "userStakeAmount");
    EXPECT_EQ(du.state_writes[0].key.kind, AddrClass::Kind::Param);
    EXPECT_EQ(du.state_writes[0].key.name, "from");
    EXPECT_EQ(du.state_writes[1].key.name, "to");
}

TEST(DefUse, CompoundAssignmentIsDefAndUse) {
    SourceUnit unit = test::load_source(R"(
contract A {
    uint public total;
    function f(uint x) public { total += x; }
}
)");
    const ContractIR& c = unit.contracts[0];
    DefUse du = build_defuse(*c.find_function("f"), c);
    int sid = c.find_function("f")->body[0].id;
    EXPECT_TRUE(du.defs.at("total").count(sid));
    EXPECT_TRUE(du.uses.at("total").count(sid));
    ASSERT_EQ(du.state_writes.size(), 1u);
    EXPECT_EQ(du.state_writes[0].op, "+=");
    ASSERT_FALSE(du.state_reads.empty());
}

TEST(DefUse, StoragePointerAliasResolvesOneLevel) {
    const char* src = R"(
contract A {
    struct UserInfo { uint256 amount; uint256 rewardDebt; }
    mapping(address => UserInfo) public userInfo;
    function clear() public {
        UserInfo storage u = userInfo[msg.sender];
        u.amount = 0;
    }
    function deep() public {
        UserInfo storage u = userInfo[msg.sender];
        UserInfo storage v = u;
        v.amount = 1;
    }
}
)";
    SourceUnit unit = test::load_source(src);
    const ContractIR& c = unit.contracts[0];

    DefUse du = build_defuse(*c.find_function("clear"), c);
    ASSERT_EQ(du.state_writes.size(), 1u);
    EXPECT_EQ(du.state_writes[0].path.base, "userInfo");
    EXPECT_EQ(du.state_writes[0].path.member, "amount");
    EXPECT_EQ(du.state_writes[0].key.kind, AddrClass::Kind::Caller);
    EXPECT_TRUE(du.state_writes[0].via_alias);

    DefUse du2 = build_defuse(*c.find_function("deep"), c);
    bool has_unresolved_alias = false;
    for (const auto& d : du2.diagnostics)
        if (d.code == "unresolved-alias") has_unresolved_alias = true;
    EXPECT_TRUE(has_unresolved_alias);
}

TEST(DefUse, SafeMathMembersAreNotPaths) {
    SourceUnit unit = test::load_source(R"(
contract A {
    mapping(address => uint) public bal;
    uint public rate;
    function f() public view returns (uint) {
        return bal[msg.sender].mul(rate);
    }
}
)");
    const ContractIR& c = unit.contracts[0];
    DefUse du = build_defuse(*c.find_function("f"), c);
    for (const auto& r : du.state_reads) EXPECT_TRUE(r.path.member.empty());
    bool saw_bal = false, saw_rate = false;
    for (const auto& r : du.state_reads) {
        if (r.path.base == "bal") {
            saw_bal = true;
            EXPECT_EQ(r.key.kind, AddrClass::Kind::Caller);
        }
        if (r.path.base == "rate") saw_rate = true;
    }
    EXPECT_TRUE(saw_bal);
    EXPECT_TRUE(saw_rate);
}

TEST(CallGraph, ClosureIncludesPrivateHelpers) {
    const char* src = R"(
contract A {
    mapping(address => uint) public bal;
    function stake() public { _mint(msg.sender, 1); }
    function _mint(address to, uint amount) private { bal[to] += amount; }
    function helper() internal pure returns (uint) { return 1; }
}
)";
    SourceUnit unit = test::load_source(src);
    CallGraph cg = build_callgraph(unit.contracts[0]);
    EXPECT_TRUE(cg.ext_reachable.count("stake"));
    EXPECT_TRUE(cg.ext_reachable.count("_mint"));
    EXPECT_FALSE(cg.ext_reachable.count("helper"));
}

TEST(CallGraph, ExternalCallCarriesTargetType) {
    const char* src = R"(
interface IPancakePair {
    function getReserves() external view returns (uint112, uint112, uint32);
}
contract A {
    IPancakePair private _lp;
    function price() public view returns (uint) {
        (uint112 r0, uint112 r1, uint32 ts) = _lp.getReserves();
        return uint(r0) / uint(r1);
    }
}
)";
    SourceUnit unit = test::load_source(src);
    const ContractIR* a = unit.find_contract("A");
    ASSERT_NE(a, nullptr);
    CallGraph cg = build_callgraph(*a);
    bool found = false;
    for (const auto& e : cg.edges) {
        if (e.kind == CallSite::Kind::External && e.callee == "getReserves") {
            EXPECT_EQ(e.target_type, "IPancakePair");
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(CallGraph, ExtReachableMonotonicUnderNewEdges) {
    const char* base = R"(
contract A {
    uint public x;
    function entry() public { x = 1; }
    function helper() internal { x = 2; }
}
)";
    const char* extended = R"(
contract A {
    uint public x;
    function entry() public { x = 1; helper(); }
    function helper() internal { x = 2; }
}
)";
    SourceUnit u1 = test::load_source(base);
    SourceUnit u2 = test::load_source(extended);
    CallGraph cg1 = build_callgraph(u1.contracts[0]);
    CallGraph cg2 = build_callgraph(u2.contracts[0]);
    for (const auto& fn : cg1.ext_reachable) EXPECT_TRUE(cg2.ext_reachable.count(fn));
    EXPECT_TRUE(cg2.ext_reachable.count("helper"));
}

TEST(Transfers, RecognizesConventions) {
    const char* src = R"(
contract A {
    mapping(address => uint) public bal;
    function a(address to, uint amt) public { token.transfer(to, amt); }
    function b(address to, uint amt) public { token.transferFrom(msg.sender, address(this), amt); }
    function c(address payable to, uint amt) public { to.call{value: amt}(""); }
    function d(address payable to) public { to.transfer(1 ether); }
    function e(address to, uint amt) public { _standardTransfer(address(this), to, amt); }
    function nope(uint x) public { bal[msg.sender] = x; }
    function _standardTransfer(address from, address to, uint amount) internal {}
}
)";
    SourceUnit unit = test::load_source(src);
    const ContractIR& c = unit.contracts[0];
    auto kinds = [&](const char* fn) {
        return find_transfers(*c.find_function(fn));
    };
    ASSERT_EQ(kinds("a").size(), 1u);
    EXPECT_EQ(kinds("a")[0].kind, TransferSite::Kind::Erc);
    ASSERT_EQ(kinds("b").size(), 1u);
    ASSERT_EQ(kinds("c").size(), 1u);
    EXPECT_TRUE(kinds("c")[0].is_native());
    ASSERT_EQ(kinds("d").size(), 1u);
    EXPECT_TRUE(kinds("d")[0].is_native());
    ASSERT_EQ(kinds("e").size(), 1u);
    EXPECT_TRUE(kinds("nope").empty());
}

TEST(Transfers, LocateAmount) {
    const char* src = R"(
contract A {
    function f(address to, uint amt) public { token.transfer(to, 100); }
    function g(address payable to, uint amt) public { to.call{value: amt}(""); }
    function h(uint x) public { x = x + 1; }
}
)";
    SourceUnit unit = test::load_source(src);
    const ContractIR& c = unit.contracts[0];
    const Expr& lit = locate_transfer_amount(c.find_function("f")->body[0]);
    EXPECT_EQ(lit.kind, ExprKind::Literal);
    EXPECT_EQ(lit.name, "100");
    const Expr& amt = locate_transfer_amount(c.find_function("g")->body[0]);
    EXPECT_TRUE(amt.is_identifier("amt"));
    EXPECT_THROW(locate_transfer_amount(c.find_function("h")->body[0]), NotATransfer);
}
