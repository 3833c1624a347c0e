#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

#include "ssrlint/analysis.hpp"
#include "ssrlint/cdg.hpp"
#include "ssrlint/extractor.hpp"
#include "ssrlint/model.hpp"

using namespace ssrlint;

namespace {

struct Built {
    SourceUnit unit;
    std::unique_ptr<ContractAnalysis> analysis;
    StakingInfo info;
    StakingModel model;
};

Built build_all_from(const SourceUnit& unit_in, const std::string& contract_name = "") {
    Built b;
    b.unit = unit_in;
    const ContractIR* c = contract_name.empty() ? &b.unit.contracts.back()
                                                : b.unit.find_contract(contract_name);
    b.analysis = std::make_unique<ContractAnalysis>(*c);
    StakingInfo raw = extract_heuristic(*c, *b.analysis);
    b.info = refine_roles(raw, *c, *b.analysis);
    b.model = build_staking_model(b.info, *c, *b.analysis);
    return b;
}

Built build_all_path(const std::string& path) { return build_all_from(load_flattened(path)); }
Built build_all_src(const std::string& src) { return build_all_from(test::load_source(src)); }

const Cdg* first_cdg(const Built& b, FuncRole role) {
    for (const auto& tc : b.model.transfer_cdgs)
        if (tc.role == role) return &tc.cdg;
    return nullptr;
}

} // namespace

TEST(ResolvePaths, TwoLayerAndFlat) {
    const char* src = R"(
contract P {
    struct UserInfo { uint256 stakeAmount; uint256 stakeTime; }
    mapping(address => UserInfo) public userInfo;
    mapping(address => uint256) public userStakeAmount;
}
)";
    SourceUnit unit = test::load_source(src);
    const ContractIR& c = unit.contracts[0];
    bool ambiguous = false;
    auto two = model_detail::resolve_role_name("userInfo.stakeAmount", c, ambiguous);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].base, "userInfo");
    EXPECT_EQ(two[0].member, "stakeAmount");
    EXPECT_EQ(two[0].key_shape, KeyShape::AddressKeyed);

    auto flat = model_detail::resolve_role_name("userStakeAmount", c, ambiguous);
    ASSERT_EQ(flat.size(), 1u);
    EXPECT_TRUE(flat[0].member.empty());
    EXPECT_EQ(flat[0].key_shape, KeyShape::AddressKeyed);

    // bare member resolves through the mapping it belongs to
    auto bare = model_detail::resolve_role_name("stakeAmount", c, ambiguous);
    ASSERT_EQ(bare.size(), 1u);
    EXPECT_EQ(bare[0].base, "userInfo");

    auto missing = model_detail::resolve_role_name("stakeAmt", c, ambiguous);
    EXPECT_TRUE(missing.empty());
}

TEST(Cdg, Fig11Walkthrough) {
    Built b = build_all_path(test::fixture_path("fig11_cdg.sol"));
    const Cdg* cdg = first_cdg(b, FuncRole::GetReward);
    ASSERT_NE(cdg, nullptr);
    EXPECT_EQ(cdg->root().display(), "_reward");

    std::set<std::string> cal = cdg->edge_targets(CdgEdge::Kind::Cal);
    std::set<std::string> expected = {"_rewardPerToken", "userLPStakeAmount",
                                      "userRewardPerTokenPaid", "userRewards", "totalSupply"};
    EXPECT_EQ(cal, expected);
    EXPECT_TRUE(cdg->has_edge_to("min", CdgEdge::Kind::Con));
    EXPECT_FALSE(cdg->dep_native_balance);
}

TEST(Cdg, ConstantAmountHasNoEdges) {
    const char* src = R"(
interface IERC20 { function transfer(address to, uint256 v) external returns (bool); }
contract A {
    IERC20 public token;
    mapping(address => uint256) public userStakeAmount;
    function claimReward() public { token.transfer(msg.sender, 5); }
}
)";
    Built b = build_all_src(src);
    const Cdg* cdg = first_cdg(b, FuncRole::GetReward);
    ASSERT_NE(cdg, nullptr);
    EXPECT_EQ(cdg->root().kind, CdgNode::Kind::Constant);
    EXPECT_TRUE(cdg->edges.empty());
    EXPECT_TRUE(cdg->state_dep.empty());
}

TEST(Cdg, TransitiveClosureThroughLocals) {
    const char* src = R"(
interface IERC20 { function transfer(address to, uint256 v) external returns (bool); }
contract A {
    IERC20 public token;
    uint256 public b;
    uint256 public c;
    uint256 public d;
    mapping(address => uint256) public stakeBook;
    function claimReward() public {
        uint256 a = b;
        b = c + d;
        token.transfer(msg.sender, a);
    }
}
)";
    Built b = build_all_src(src);
    const Cdg* cdg = first_cdg(b, FuncRole::GetReward);
    ASSERT_NE(cdg, nullptr);
    std::set<std::string> dep;
    for (const auto& p : cdg->state_dep) dep.insert(p.str());
    // flow-insensitive: a <- b and b <- c + d anywhere in scope
    EXPECT_EQ(dep, (std::set<std::string>{"b", "c", "d", "token"}));
}

TEST(Cdg, BalanceDependency) {
    const char* native = R"(
contract A {
    mapping(address => uint256) public userStakeAmount;
    function claimReward() public {
        uint256 r = address(this).balance / 2;
        payable(msg.sender).call{value: r}("");
    }
}
)";
    Built b1 = build_all_src(native);
    const Cdg* c1 = first_cdg(b1, FuncRole::GetReward);
    ASSERT_NE(c1, nullptr);
    EXPECT_TRUE(c1->dep_native_balance);
    EXPECT_FALSE(c1->dep_token_balance);

    const char* token = R"(
interface IERC20 {
    function transfer(address to, uint256 v) external returns (bool);
    function balanceOf(address who) external view returns (uint256);
}
contract B {
    IERC20 public token;
    mapping(address => uint256) public userStakeAmount;
    function claimReward() public {
        uint256 r = token.balanceOf(address(this)) / 100;
        token.transfer(msg.sender, r);
    }
}
)";
    Built b2 = build_all_src(token);
    const Cdg* c2 = first_cdg(b2, FuncRole::GetReward);
    ASSERT_NE(c2, nullptr);
    EXPECT_TRUE(c2->dep_token_balance);
    EXPECT_FALSE(c2->dep_native_balance);
}

TEST(Predicates, Fig3TimeDependency) {
    Built b = build_all_path(test::corpus_path("fig3_rt_fixed.sol"));
    const Cdg* cdg = first_cdg(b, FuncRole::GetReward);
    ASSERT_NE(cdg, nullptr);
    // CalDepend(_reward, lastClaimTime) and StakeTime(lastClaimTime)
    VariablePath lct;
    lct.base = "lastClaimTime";
    EXPECT_TRUE(cdg->contains_state(lct));
    EXPECT_TRUE(b.model.is_stake_time(lct));
    EXPECT_TRUE(b.model.is_stake_time_name("block.timestamp"));
    EXPECT_TRUE(b.model.time_evidence(*cdg));
    // reflexive reachability
    EXPECT_TRUE(cdg->reaches(cdg->root_id, cdg->root_id));
}

TEST(Predicates, RtVariantHasNoTimeEvidence) {
    Built b = build_all_path(test::corpus_path("fig3_rt.sol"));
    const Cdg* cdg = first_cdg(b, FuncRole::GetReward);
    ASSERT_NE(cdg, nullptr);
    EXPECT_FALSE(b.model.time_evidence(*cdg));
}

TEST(Cdg, MonotonicUnderAddedAssignment) {
    const char* base = R"(
interface IERC20 { function transfer(address to, uint256 v) external returns (bool); }
contract A {
    IERC20 public token;
    uint256 public v;
    mapping(address => uint256) public stakeLedger;
    function claimReward() public {
        uint256 root = 1;
        token.transfer(msg.sender, root);
    }
}
)";
    const char* extended = R"(
interface IERC20 { function transfer(address to, uint256 v) external returns (bool); }
contract A {
    IERC20 public token;
    uint256 public v;
    mapping(address => uint256) public stakeLedger;
    function claimReward() public {
        uint256 root = 1;
        root = root + v;
        token.transfer(msg.sender, root);
    }
}
)";
    Built b1 = build_all_src(base);
    Built b2 = build_all_src(extended);
    const Cdg* c1 = first_cdg(b1, FuncRole::GetReward);
    const Cdg* c2 = first_cdg(b2, FuncRole::GetReward);
    ASSERT_NE(c1, nullptr);
    ASSERT_NE(c2, nullptr);
    for (const auto& [id, n] : c1->nodes) EXPECT_TRUE(c2->nodes.count(id)) << id;
    VariablePath vp;
    vp.base = "v";
    EXPECT_TRUE(c2->contains_state(vp));
}

TEST(Cdg, DepthBoundProducesTruncatedFlag) {
    std::string src = R"(
interface IERC20 { function transfer(address to, uint256 v) external returns (bool); }
contract A {
    IERC20 public token;
    mapping(address => uint256) public userStakeAmount;
)";
    // chain of 20 internal calls, deeper than the default bound of 16
    src += "    function f0() internal view returns (uint256) { return 1; }\n";
    for (int i = 1; i <= 20; ++i)
        src += "    function f" + std::to_string(i) + "() internal view returns (uint256) { return f" +
               std::to_string(i - 1) + "(); }\n";
    src += R"(
    function claimReward() public {
        uint256 r = f20();
        token.transfer(msg.sender, r);
    }
}
)";
    Built b = build_all_src(src);
    const Cdg* cdg = first_cdg(b, FuncRole::GetReward);
    ASSERT_NE(cdg, nullptr);
    EXPECT_TRUE(cdg->truncated);
}

// ---------------------------------------------------------------------------
// Randomized loop-free contracts vs. a brute-force transitive-closure oracle.

namespace {

struct GeneratedProgram {
    std::string source;
    std::set<std::string> expected_state_dep;
};

GeneratedProgram generate_program(std::mt19937& rng) {
    std::uniform_int_distribution<int> nstate_d(2, 5), nlocal_d(1, 4), nassign_d(3, 20);
    int nstate = nstate_d(rng), nlocal = nlocal_d(rng), nassign = nassign_d(rng);

    std::vector<std::string> vars;
    for (int i = 0; i < nstate; ++i) vars.push_back("s" + std::to_string(i));
    for (int i = 0; i < nlocal; ++i) vars.push_back("l" + std::to_string(i));

    std::vector<std::pair<std::string, std::vector<std::string>>> assigns; // lhs -> rhs vars
    std::uniform_int_distribution<size_t> var_d(0, vars.size() - 1);
    std::uniform_int_distribution<int> arity_d(1, 2);
    std::uniform_int_distribution<int> in_g_d(0, 3);

    std::string body_f, body_g;
    for (int i = 0; i < nassign; ++i) {
        std::string lhs = vars[var_d(rng)];
        bool lhs_is_state = lhs[0] == 's';
        bool in_g = lhs_is_state && in_g_d(rng) == 0; // some state defs live elsewhere
        int arity = arity_d(rng);
        std::vector<std::string> rhs;
        for (int a = 0; a < arity; ++a) {
            std::string v = vars[var_d(rng)];
            if (in_g && v[0] == 'l') v = "s0"; // g() has no locals
            rhs.push_back(v);
        }
        std::string expr = rhs[0];
        for (size_t a = 1; a < rhs.size(); ++a) expr += " + " + rhs[a];
        std::string stmt = "        " + lhs + " = " + expr + ";\n";
        (in_g ? body_g : body_f) += stmt;
        assigns.emplace_back(lhs, rhs);
    }
    std::string root = vars[var_d(rng)];

    std::string src = "interface IERC20 { function transfer(address to, uint256 v) external returns "
                      "(bool); }\ncontract Gen {\n    IERC20 public token;\n    mapping(address => "
                      "uint256) public userStakeAmount;\n";
    for (int i = 0; i < nstate; ++i) src += "    uint256 public s" + std::to_string(i) + ";\n";
    src += "    function claimReward() public {\n";
    for (int i = 0; i < nlocal; ++i) src += "        uint256 l" + std::to_string(i) + " = 0;\n";
    src += body_f;
    src += "        token.transfer(msg.sender, " + root + ");\n    }\n";
    src += "    function poke() public {\n" + body_g + "    }\n}\n";

    // oracle: naive fixpoint over the assignment relation
    std::set<std::string> closure{root};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [lhs, rhs] : assigns) {
            if (!closure.count(lhs)) continue;
            for (const auto& v : rhs)
                if (closure.insert(v).second) changed = true;
        }
    }
    GeneratedProgram out;
    out.source = src;
    for (const auto& v : closure)
        if (v[0] == 's') out.expected_state_dep.insert(v);
    return out;
}

} // namespace

TEST(Cdg, BruteForceEquivalenceOnRandomPrograms) {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 100; ++trial) {
        GeneratedProgram prog = generate_program(rng);
        Built b = build_all_src(prog.source);
        const Cdg* cdg = first_cdg(b, FuncRole::GetReward);
        ASSERT_NE(cdg, nullptr) << prog.source;
        std::set<std::string> actual;
        for (const auto& p : cdg->state_dep)
            if (p.base[0] == 's' && p.base.size() <= 3) actual.insert(p.base);
        EXPECT_EQ(actual, prog.expected_state_dep) << "trial " << trial << "\n" << prog.source;

        // Algorithm-1 termination bound: nodes <= variables in scope + specials
        size_t var_bound = 0;
        for (const auto& c2 : b.unit.contracts) var_bound += c2.state_vars.size();
        var_bound += 32; // locals, params, specials
        EXPECT_LE(cdg->nodes.size(), var_bound);
    }
}

TEST(Model, RoleFunctionsAndTokens) {
    Built b = build_all_path(test::corpus_path("fig2_svm.sol"));
    ASSERT_FALSE(b.model.funcs_with(FuncRole::GetReward).empty());
    EXPECT_EQ(b.model.funcs_with(FuncRole::GetReward)[0]->name, "claimReward");
    VariablePath usa;
    usa.base = "userStakeAmount";
    EXPECT_TRUE(b.model.is_amount(usa));
    EXPECT_FALSE(b.model.is_reward(usa));
}
