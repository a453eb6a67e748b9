#include "riskchain/allocation.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace riskchain;

namespace {

/// Exhaustive oracle: best assignment weight over all permutations.
/// Independent of the solver under test.
std::size_t brute_force_best_weight(const std::vector<TeamMember>& vsps,
                                    const std::vector<TeamMember>& hsps) {
    REQUIRE(vsps.size() == hsps.size());
    std::vector<std::size_t> perm(hsps.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t best = 0;
    do {
        std::size_t total = 0;
        for (std::size_t i = 0; i < vsps.size(); ++i) {
            total += intersection_size(vsps[i].skills, hsps[perm[i]].skills);
        }
        best = std::max(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// Exhaustive oracle for the chain-order cross score.
std::size_t brute_force_best_cross(const std::vector<MatchedPair>& pairs) {
    std::vector<std::size_t> perm(pairs.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t best = 0;
    do {
        std::size_t total = 0;
        for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
            total += intersection_size(pairs[perm[i]].hsp_skills, pairs[perm[i + 1]].vsp_skills);
        }
        best = std::max(best, total);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<TeamMember> random_members(std::mt19937& rng, std::size_t count,
                                       const std::string& prefix, std::size_t universe = 10,
                                       std::size_t max_skills = 5) {
    std::vector<TeamMember> members;
    for (std::size_t i = 0; i < count; ++i) {
        TeamMember m;
        m.id = prefix + std::to_string(i);
        const std::size_t size = rng() % (max_skills + 1);
        for (std::size_t k = 0; k < size; ++k) m.skills.insert("s" + std::to_string(rng() % universe));
        members.push_back(std::move(m));
    }
    return members;
}

std::size_t total_weight(const std::vector<MatchedPair>& pairs) {
    std::size_t w = 0;
    for (const auto& p : pairs) w += p.weight;
    return w;
}

} // namespace

TEST_CASE("single pair is returned as-is", "[allocation]") {
    const auto pairs = best_pairing({{"v1", SkillSet{"c"}}}, {{"h1", SkillSet{"c", "sql"}}});
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].vsp_id == "v1");
    CHECK(pairs[0].hsp_id == "h1");
    CHECK(pairs[0].weight == 1);
    CHECK_FALSE(pairs[0].unpaired());
}

TEST_CASE("hand-enumerated 2x2 instance", "[allocation]") {
    // identity pairing scores 0, the swap scores 2
    const auto pairs = best_pairing({{"v1", SkillSet{"c"}}, {"v2", SkillSet{"java"}}},
                                    {{"h1", SkillSet{"java"}}, {"h2", SkillSet{"c"}}});
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].vsp_id == "v1");
    CHECK(pairs[0].hsp_id == "h2");
    CHECK(pairs[1].vsp_id == "v2");
    CHECK(pairs[1].hsp_id == "h1");
    CHECK(total_weight(pairs) == 2);
}

TEST_CASE("empty groups are rejected", "[allocation]") {
    CHECK_THROWS_AS(best_pairing({}, {{"h1", SkillSet{"c"}}}), DomainError);
    CHECK_THROWS_AS(best_pairing({{"v1", SkillSet{"c"}}}, {}), DomainError);
}

TEST_CASE("pairing weight matches the exhaustive oracle", "[allocation]") {
    std::mt19937 rng(20250810);
    for (int instance = 0; instance < 100; ++instance) {
        const std::size_t n = 1 + rng() % 6;
        const auto vsps = random_members(rng, n, "v");
        const auto hsps = random_members(rng, n, "h");
        const auto pairs = best_pairing(vsps, hsps);
        REQUIRE(pairs.size() == n);
        CHECK(total_weight(pairs) == brute_force_best_weight(vsps, hsps));
    }
}

TEST_CASE("ties break lexicographically by (vsp_id, hsp_id)", "[allocation]") {
    // every weight is 1; the identity-by-id matching is the lexicographic pick
    const auto pairs = best_pairing(
        {{"va", SkillSet{"x"}}, {"vb", SkillSet{"x"}}},
        {{"ha", SkillSet{"x"}}, {"hb", SkillSet{"x"}}});
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].vsp_id == "va");
    CHECK(pairs[0].hsp_id == "ha");
    CHECK(pairs[1].vsp_id == "vb");
    CHECK(pairs[1].hsp_id == "hb");
}

TEST_CASE("tie-break matches the brute-force lexicographic oracle", "[allocation]") {
    // Oracle: enumerate every optimal assignment and keep the one whose
    // (vsp_id -> hsp_id) sequence, taken in sorted vsp order, is smallest.
    std::mt19937 rng(505);
    for (int instance = 0; instance < 60; ++instance) {
        const std::size_t n = 2 + rng() % 4;
        // tiny skill universe so weight ties are common
        const auto vsps = random_members(rng, n, "v", 3, 2);
        const auto hsps = random_members(rng, n, "h", 3, 2);

        std::vector<std::size_t> vsp_order(n);
        std::iota(vsp_order.begin(), vsp_order.end(), 0);
        std::sort(vsp_order.begin(), vsp_order.end(),
                  [&](std::size_t a, std::size_t b) { return vsps[a].id < vsps[b].id; });

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::size_t best_weight = 0;
        std::vector<std::string> best_seq;
        do {
            std::size_t total = 0;
            for (std::size_t i = 0; i < n; ++i) {
                total += intersection_size(vsps[i].skills, hsps[perm[i]].skills);
            }
            std::vector<std::string> seq;
            for (std::size_t v : vsp_order) seq.push_back(hsps[perm[v]].id);
            if (total > best_weight || (total == best_weight && (best_seq.empty() || seq < best_seq))) {
                best_weight = total;
                best_seq = seq;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        const auto pairs = best_pairing(vsps, hsps);
        REQUIRE(pairs.size() == n);
        std::vector<std::string> got_seq;
        for (const auto& p : pairs) got_seq.push_back(*p.hsp_id);
        CHECK(total_weight(pairs) == best_weight);
        CHECK(got_seq == best_seq);
    }
}

TEST_CASE("unequal groups are padded with unpaired placeholders", "[allocation]") {
    const auto pairs = best_pairing({{"v1", SkillSet{"c"}}},
                                    {{"h1", SkillSet{"java"}}, {"h2", SkillSet{"c"}}});
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].vsp_id == "v1");
    CHECK(pairs[0].hsp_id == "h2");
    CHECK(pairs[0].weight == 1);
    CHECK(pairs[1].unpaired());
    CHECK_FALSE(pairs[1].vsp_id.has_value());
    CHECK(pairs[1].hsp_id == "h1");
    CHECK(pairs[1].weight == 0);
}

TEST_CASE("adding a skill to an HSP never lowers the best weight", "[allocation]") {
    std::mt19937 rng(404);
    for (int instance = 0; instance < 50; ++instance) {
        const std::size_t n = 1 + rng() % 5;
        const auto vsps = random_members(rng, n, "v");
        auto hsps = random_members(rng, n, "h");
        const std::size_t before = total_weight(best_pairing(vsps, hsps));

        auto& lucky = hsps[rng() % n];
        lucky.skills.insert("s" + std::to_string(rng() % 10));
        const std::size_t after = total_weight(best_pairing(vsps, hsps));
        CHECK(after >= before);
    }
}

TEST_CASE("chain order: single pair stays put", "[allocation]") {
    const auto pairs = best_pairing({{"v1", SkillSet{"c"}}}, {{"h1", SkillSet{"c"}}});
    const auto order = best_chain_order(pairs);
    CHECK(order.order == std::vector<std::size_t>{0});
    CHECK(order.cross_score == 0);
    CHECK_FALSE(order.heuristic);
}

TEST_CASE("chain order with no cross links keeps identity by tie-break", "[allocation]") {
    std::vector<MatchedPair> pairs;
    for (int i = 0; i < 4; ++i) {
        MatchedPair p;
        p.vsp_id = "v" + std::to_string(i);
        p.hsp_id = "h" + std::to_string(i);
        p.vsp_skills = SkillSet{"a" + std::to_string(i)};
        p.hsp_skills = SkillSet{"b" + std::to_string(i)};
        p.weight = 0;
        pairs.push_back(p);
    }
    const auto order = best_chain_order(pairs);
    CHECK(order.order == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(order.cross_score == 0);
}

TEST_CASE("exhaustive chain order matches the brute-force oracle", "[allocation]") {
    std::mt19937 rng(606);
    for (int instance = 0; instance < 60; ++instance) {
        const std::size_t n = 1 + rng() % 6;
        const auto vsps = random_members(rng, n, "v");
        const auto hsps = random_members(rng, n, "h");
        const auto pairs = best_pairing(vsps, hsps);
        const auto order = best_chain_order(pairs);
        CHECK_FALSE(order.heuristic);
        CHECK(order.cross_score == brute_force_best_cross(pairs));
    }
}

TEST_CASE("large instances fall back to the flagged greedy heuristic", "[allocation]") {
    std::mt19937 rng(707);
    const auto vsps = random_members(rng, 9, "v");
    const auto hsps = random_members(rng, 9, "h");
    const auto pairs = best_pairing(vsps, hsps);
    const auto order = best_chain_order(pairs);
    CHECK(order.heuristic);

    std::vector<std::size_t> sorted = order.order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expect(9);
    std::iota(expect.begin(), expect.end(), 0);
    CHECK(sorted == expect); // a real permutation

    // greedy never beats the true optimum
    CHECK(order.cross_score <= brute_force_best_cross(pairs));
}

TEST_CASE("team_risk_report composes the plan", "[allocation]") {
    const std::vector<TeamMember> vsps = {{"v_ada", SkillSet{"c", "sql"}},
                                          {"v_ben", SkillSet{"java"}},
                                          {"v_cia", SkillSet{"python", "html"}}};
    const std::vector<TeamMember> hsps = {{"h_dan", SkillSet{"c", "html"}},
                                          {"h_eve", SkillSet{"java", "css"}},
                                          {"h_fay", SkillSet{"python", "sql"}}};
    const TeamPlan plan = team_risk_report(vsps, hsps, true);

    REQUIRE(plan.pairs.size() == 3);
    CHECK(plan.pairs[0].pair.vsp_id == "v_ada");
    CHECK(plan.pairs[0].pair.hsp_id == "h_dan");
    CHECK(plan.pairs[0].relation == SetRelation::Overlapping);
    CHECK(plan.pairs[0].risk == RiskLevel::Low);
    CHECK(plan.pairs[0].union_strength == 3);
    CHECK(plan.pairs[1].pair.vsp_id == "v_ben");
    CHECK(plan.pairs[1].pair.hsp_id == "h_eve");
    CHECK(plan.pairs[1].relation == SetRelation::ProperSubset);
    CHECK(plan.pairs[1].risk == RiskLevel::VeryLow);
    CHECK(plan.pairs[2].pair.vsp_id == "v_cia");
    CHECK(plan.pairs[2].pair.hsp_id == "h_fay");

    // hand-enumerated optimum: pair weights 1+1+1, best cross link 1
    CHECK(plan.chain_order == std::vector<std::size_t>{0, 2, 1});
    CHECK(plan.chain_score == 4);
    CHECK_FALSE(plan.heuristic_chain);
    CHECK(plan.overall_risk == RiskLevel::Low);

    SECTION("chain score is self-consistent with the chain operation") {
        std::vector<SkillSet> a, b;
        for (std::size_t idx : plan.chain_order) {
            a.push_back(plan.pairs[idx].pair.vsp_skills);
            b.push_back(plan.pairs[idx].pair.hsp_skills);
        }
        CHECK(chain_score(a, b) == plan.chain_score);
    }
}

TEST_CASE("plan chain score is always self-consistent", "[allocation]") {
    std::mt19937 rng(808);
    for (int instance = 0; instance < 40; ++instance) {
        const std::size_t nv = 1 + rng() % 5;
        const std::size_t nh = 1 + rng() % 5;
        const auto vsps = random_members(rng, nv, "v");
        const auto hsps = random_members(rng, nh, "h");
        const TeamPlan plan = team_risk_report(vsps, hsps, (rng() % 2) == 0);

        std::vector<SkillSet> a, b;
        for (std::size_t idx : plan.chain_order) {
            a.push_back(plan.pairs[idx].pair.vsp_skills);
            b.push_back(plan.pairs[idx].pair.hsp_skills);
        }
        CHECK(chain_score(a, b) == plan.chain_score);

        int worst = 0;
        for (const auto& p : plan.pairs) worst = std::max(worst, rank(p.risk));
        CHECK(rank(plan.overall_risk) == worst);
    }
}

TEST_CASE("overall risk does not depend on member listing order", "[allocation]") {
    std::mt19937 rng(909);
    for (int instance = 0; instance < 30; ++instance) {
        const std::size_t n = 2 + rng() % 4;
        auto vsps = random_members(rng, n, "v");
        auto hsps = random_members(rng, n, "h");
        const RiskLevel baseline = team_risk_report(vsps, hsps).overall_risk;
        std::shuffle(vsps.begin(), vsps.end(), rng);
        std::shuffle(hsps.begin(), hsps.end(), rng);
        CHECK(team_risk_report(vsps, hsps).overall_risk == baseline);
    }
}

TEST_CASE("shared skills cap risk; a disjoint pair forces VeryHigh", "[allocation]") {
    std::mt19937 rng(1010);
    for (int instance = 0; instance < 40; ++instance) {
        const std::size_t n = 1 + rng() % 5;
        auto vsps = random_members(rng, n, "v", 6, 3);
        auto hsps = random_members(rng, n, "h", 6, 3);
        // everyone shares a core skill, so no pair can be disjoint
        for (auto& m : vsps) m.skills.insert("core");
        for (auto& m : hsps) m.skills.insert("core");
        const TeamPlan plan = team_risk_report(vsps, hsps);
        CHECK(rank(plan.overall_risk) < rank(RiskLevel::VeryHigh));

        // inject a pair of members with talents alien to everyone else
        auto vsps2 = vsps;
        auto hsps2 = hsps;
        vsps2.push_back({"v_alien", SkillSet{"island_a"}});
        hsps2.push_back({"h_alien", SkillSet{"island_b"}});
        const TeamPlan tainted = team_risk_report(vsps2, hsps2);
        CHECK(tainted.overall_risk == RiskLevel::VeryHigh);
    }
}

TEST_CASE("group_developers splits by professional class", "[allocation]") {
    std::vector<Developer> devs(4);
    devs[0].id = "expert1";
    devs[0].proficiencies = {{"c", Proficiency::Expert}};
    devs[1].id = "broad1";
    devs[1].proficiencies = {{"c", Proficiency::Moderate}, {"sql", Proficiency::Moderate}};
    devs[2].id = "novice";
    devs[2].proficiencies = {{"c", Proficiency::Moderate}};
    devs[3].id = "empty";

    const auto groups = group_developers(devs);
    REQUIRE(groups.vsps.size() == 1);
    CHECK(groups.vsps[0].id == "expert1");
    REQUIRE(groups.hsps.size() == 1);
    CHECK(groups.hsps[0].id == "broad1");
    CHECK(groups.unclassified == std::vector<std::string>{"novice", "empty"});
}
