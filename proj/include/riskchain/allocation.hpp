#pragma once

#include "riskchain/errors.hpp"
#include "riskchain/riskmodel.hpp"
#include "riskchain/skillsets.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace riskchain {

struct TeamMember {
    std::string id;
    SkillSet skills;
};

/// One matched VSP/HSP pair. A missing id marks the synthetic padding
/// member used when the groups are unequal in size.
struct MatchedPair {
    std::optional<std::string> vsp_id;
    std::optional<std::string> hsp_id;
    SkillSet vsp_skills;
    SkillSet hsp_skills;
    std::size_t weight = 0; // |vsp_skills ∩ hsp_skills|

    bool unpaired() const { return !vsp_id.has_value() || !hsp_id.has_value(); }
};

namespace detail {

/// Min-cost assignment on a square matrix (Jonker-Volgenant style
/// potentials, O(n^3)). Returns row -> column.
inline std::vector<int> assignment_min_cost(const std::vector<std::vector<long long>>& cost) {
    const int n = static_cast<int>(cost.size());
    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j) {
        if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
    }
    return row_to_col;
}

/// Max total weight achievable on the given square weight matrix.
inline long long assignment_max_weight(const std::vector<std::vector<long long>>& weight) {
    const int n = static_cast<int>(weight.size());
    long long maxw = 0;
    for (const auto& row : weight) {
        for (long long w : row) maxw = std::max(maxw, w);
    }
    std::vector<std::vector<long long>> cost(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) cost[i][j] = maxw - weight[i][j];
    }
    const std::vector<int> asg = assignment_min_cost(cost);
    long long total = 0;
    for (int i = 0; i < n; ++i) total += weight[i][asg[i]];
    return total;
}

/// Tie order for ids: real members sorted by id come before padding.
inline bool id_order_less(const std::optional<std::string>& a, const std::optional<std::string>& b) {
    if (a.has_value() != b.has_value()) return a.has_value();
    if (!a.has_value()) return false;
    return *a < *b;
}

} // namespace detail

/// Maximum-weight bipartite matching between VSP and HSP groups under
/// w(i,j) = |A_i ∩ B_j|. The smaller group is padded with empty skill sets
/// so every member appears in exactly one pair. Among equally optimal
/// matchings the lexicographically smallest by (vsp_id, hsp_id) is returned
/// for group sizes up to 64; larger instances are still exact but keep the
/// solver's own (deterministic) tie resolution.
inline std::vector<MatchedPair> best_pairing(const std::vector<TeamMember>& vsps,
                                             const std::vector<TeamMember>& hsps) {
    if (vsps.empty() || hsps.empty()) {
        throw DomainError("pairing needs at least one member in each group");
    }

    const std::size_t m = std::max(vsps.size(), hsps.size());
    std::vector<std::optional<std::string>> vsp_ids(m), hsp_ids(m);
    std::vector<SkillSet> vsp_sets(m), hsp_sets(m);
    for (std::size_t i = 0; i < vsps.size(); ++i) {
        vsp_ids[i] = vsps[i].id;
        vsp_sets[i] = vsps[i].skills;
    }
    for (std::size_t j = 0; j < hsps.size(); ++j) {
        hsp_ids[j] = hsps[j].id;
        hsp_sets[j] = hsps[j].skills;
    }

    std::vector<std::vector<long long>> weight(m, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            weight[i][j] = static_cast<long long>(intersection_size(vsp_sets[i], hsp_sets[j]));
        }
    }
    const long long best_total = detail::assignment_max_weight(weight);

    std::vector<int> chosen(m, -1); // vsp index -> hsp index

    if (m <= 64) {
        // Fix pairs one vsp at a time in id order, always taking the first
        // hsp (in id order) that still permits an optimal completion.
        std::vector<std::size_t> vsp_order(m), hsp_order(m);
        std::iota(vsp_order.begin(), vsp_order.end(), 0);
        std::iota(hsp_order.begin(), hsp_order.end(), 0);
        std::sort(vsp_order.begin(), vsp_order.end(), [&](std::size_t a, std::size_t b) {
            return detail::id_order_less(vsp_ids[a], vsp_ids[b]);
        });
        std::sort(hsp_order.begin(), hsp_order.end(), [&](std::size_t a, std::size_t b) {
            return detail::id_order_less(hsp_ids[a], hsp_ids[b]);
        });

        std::vector<std::size_t> free_vsps = vsp_order;
        std::vector<std::size_t> free_hsps = hsp_order;
        long long fixed_weight = 0;

        auto residual_optimum = [&](const std::vector<std::size_t>& rows,
                                    const std::vector<std::size_t>& cols) -> long long {
            if (rows.empty()) return 0;
            std::vector<std::vector<long long>> sub(rows.size(),
                                                    std::vector<long long>(cols.size()));
            for (std::size_t a = 0; a < rows.size(); ++a) {
                for (std::size_t b = 0; b < cols.size(); ++b) sub[a][b] = weight[rows[a]][cols[b]];
            }
            return detail::assignment_max_weight(sub);
        };

        while (!free_vsps.empty()) {
            const std::size_t v = free_vsps.front();
            for (std::size_t pos = 0; pos < free_hsps.size(); ++pos) {
                const std::size_t h = free_hsps[pos];
                std::vector<std::size_t> rest_v(free_vsps.begin() + 1, free_vsps.end());
                std::vector<std::size_t> rest_h = free_hsps;
                rest_h.erase(rest_h.begin() + static_cast<std::ptrdiff_t>(pos));
                if (fixed_weight + weight[v][h] + residual_optimum(rest_v, rest_h) == best_total) {
                    chosen[v] = static_cast<int>(h);
                    fixed_weight += weight[v][h];
                    free_vsps.erase(free_vsps.begin());
                    free_hsps = std::move(rest_h);
                    break;
                }
            }
        }
    } else {
        long long maxw = 0;
        for (const auto& row : weight) {
            for (long long w : row) maxw = std::max(maxw, w);
        }
        std::vector<std::vector<long long>> cost(m, std::vector<long long>(m));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) cost[i][j] = maxw - weight[i][j];
        }
        chosen = detail::assignment_min_cost(cost);
    }

    std::vector<std::size_t> output_order(m);
    std::iota(output_order.begin(), output_order.end(), 0);
    std::sort(output_order.begin(), output_order.end(), [&](std::size_t a, std::size_t b) {
        if (vsp_ids[a].has_value() != vsp_ids[b].has_value()) return vsp_ids[a].has_value();
        if (vsp_ids[a].has_value()) return *vsp_ids[a] < *vsp_ids[b];
        return detail::id_order_less(hsp_ids[static_cast<std::size_t>(chosen[a])],
                                     hsp_ids[static_cast<std::size_t>(chosen[b])]);
    });

    std::vector<MatchedPair> pairs;
    pairs.reserve(m);
    for (std::size_t idx : output_order) {
        const auto h = static_cast<std::size_t>(chosen[idx]);
        MatchedPair p;
        p.vsp_id = vsp_ids[idx];
        p.hsp_id = hsp_ids[h];
        p.vsp_skills = vsp_sets[idx];
        p.hsp_skills = hsp_sets[h];
        p.weight = intersection_size(p.vsp_skills, p.hsp_skills);
        pairs.push_back(std::move(p));
    }
    return pairs;
}

struct ChainOrder {
    std::vector<std::size_t> order; // permutation of pair indices
    std::size_t cross_score = 0;    // sum of |B_i ∩ A_next| along the order
    bool heuristic = false;
};

/// Orders pairs to maximize the linking terms. Exhaustive (exact, first
/// permutation in lexicographic order among optima) up to 8 pairs; above
/// that a best-next-link greedy pass over all start pairs, flagged
/// heuristic.
inline ChainOrder best_chain_order(const std::vector<MatchedPair>& pairs) {
    const std::size_t n = pairs.size();
    if (n == 0) throw DomainError("chain ordering needs at least one pair");

    std::vector<std::vector<std::size_t>> cross(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) cross[i][j] = intersection_size(pairs[i].hsp_skills, pairs[j].vsp_skills);
        }
    }

    auto score_of = [&](const std::vector<std::size_t>& order) {
        std::size_t s = 0;
        for (std::size_t i = 0; i + 1 < order.size(); ++i) s += cross[order[i]][order[i + 1]];
        return s;
    };

    ChainOrder best;
    best.order.resize(n);
    std::iota(best.order.begin(), best.order.end(), 0);

    if (n <= 8) {
        std::vector<std::size_t> perm = best.order;
        best.cross_score = score_of(perm);
        while (std::next_permutation(perm.begin(), perm.end())) {
            const std::size_t s = score_of(perm);
            if (s > best.cross_score) {
                best.cross_score = s;
                best.order = perm;
            }
        }
        best.heuristic = false;
        return best;
    }

    best.cross_score = 0;
    bool have_best = false;
    for (std::size_t start = 0; start < n; ++start) {
        std::vector<std::size_t> order{start};
        std::vector<char> used(n, 0);
        used[start] = 1;
        while (order.size() < n) {
            std::size_t next = n;
            std::size_t best_link = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (used[j]) continue;
                const std::size_t link = cross[order.back()][j];
                if (next == n || link > best_link) {
                    next = j;
                    best_link = link;
                }
            }
            used[next] = 1;
            order.push_back(next);
        }
        const std::size_t s = score_of(order);
        if (!have_best || s > best.cross_score) {
            best.cross_score = s;
            best.order = order;
            have_best = true;
        }
    }
    best.heuristic = true;
    return best;
}

/// Developers split by professional class, ready for pairing. Order
/// follows the input profile.
struct GroupedDevelopers {
    std::vector<TeamMember> vsps;
    std::vector<TeamMember> hsps;
    std::vector<std::string> unclassified;
};

inline GroupedDevelopers group_developers(const std::vector<Developer>& developers,
                                          ClassificationThresholds thresholds = {}) {
    GroupedDevelopers g;
    for (const auto& d : developers) {
        switch (classify_professional(d, thresholds)) {
            case ProfessionalClass::VSP: g.vsps.push_back({d.id, d.skills()}); break;
            case ProfessionalClass::HSP: g.hsps.push_back({d.id, d.skills()}); break;
            case ProfessionalClass::Unclassified: g.unclassified.push_back(d.id); break;
        }
    }
    return g;
}

struct PairReport {
    MatchedPair pair;
    SetRelation relation = SetRelation::Disjoint;
    RiskLevel risk = RiskLevel::VeryHigh;
    std::size_t union_strength = 0; // |A ∪ B| via inclusion-exclusion
};

struct TeamPlan {
    std::vector<PairReport> pairs;
    std::vector<std::size_t> chain_order;
    std::size_t chain_score = 0;
    bool heuristic_chain = false;
    RiskLevel overall_risk = RiskLevel::VeryLow;
};

/// Builds the full team report: optimal pairing, chain order (optimized or
/// as listed), per-pair relation risk and union strength, and the overall
/// risk, which is the worst pair's.
inline TeamPlan team_risk_report(const std::vector<TeamMember>& vsps,
                                 const std::vector<TeamMember>& hsps,
                                 bool optimize_chain = true) {
    TeamPlan plan;
    std::vector<MatchedPair> pairs = best_pairing(vsps, hsps);

    ChainOrder co;
    if (optimize_chain) {
        co = best_chain_order(pairs);
    } else {
        co.order.resize(pairs.size());
        std::iota(co.order.begin(), co.order.end(), 0);
        for (std::size_t i = 0; i + 1 < co.order.size(); ++i) {
            co.cross_score += intersection_size(pairs[co.order[i]].hsp_skills,
                                                pairs[co.order[i + 1]].vsp_skills);
        }
        co.heuristic = false;
    }

    std::vector<SkillSet> ordered_vsp_sets, ordered_hsp_sets;
    for (std::size_t idx : co.order) {
        ordered_vsp_sets.push_back(pairs[idx].vsp_skills);
        ordered_hsp_sets.push_back(pairs[idx].hsp_skills);
    }
    plan.chain_score = chain_score(ordered_vsp_sets, ordered_hsp_sets);
    plan.chain_order = co.order;
    plan.heuristic_chain = co.heuristic;

    int worst = rank(RiskLevel::VeryLow);
    for (auto& p : pairs) {
        PairReport report;
        report.relation = relation(p.vsp_skills, p.hsp_skills);
        report.risk = relation_risk(report.relation);
        report.union_strength = inclusion_exclusion(p.vsp_skills, p.hsp_skills);
        worst = std::max(worst, rank(report.risk));
        report.pair = std::move(p);
        plan.pairs.push_back(std::move(report));
    }
    plan.overall_risk = static_cast<RiskLevel>(worst);
    return plan;
}

} // namespace riskchain
