#pragma once

#include "riskchain/errors.hpp"
#include "riskchain/riskmodel.hpp"
#include "riskchain/text.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace riskchain {

/// Finite set of normalized (lowercased, trimmed) skill identifiers.
class SkillSet {
public:
    SkillSet() = default;

    SkillSet(std::initializer_list<std::string_view> skills) {
        for (auto s : skills) insert(s);
    }

    void insert(std::string_view raw) {
        std::string key = normalize_key(raw);
        if (key.empty()) throw DomainError("skill identifier must be non-empty");
        skills_.insert(std::move(key));
    }

    bool contains(std::string_view skill) const { return skills_.count(normalize_key(skill)) > 0; }
    std::size_t size() const { return skills_.size(); }
    bool empty() const { return skills_.empty(); }

    auto begin() const { return skills_.begin(); }
    auto end() const { return skills_.end(); }

    bool operator==(const SkillSet&) const = default;

    bool is_subset_of(const SkillSet& other) const {
        return std::includes(other.skills_.begin(), other.skills_.end(), skills_.begin(),
                             skills_.end());
    }

    friend SkillSet intersect(const SkillSet& a, const SkillSet& b) {
        SkillSet out;
        std::set_intersection(a.skills_.begin(), a.skills_.end(), b.skills_.begin(),
                              b.skills_.end(), std::inserter(out.skills_, out.skills_.end()));
        return out;
    }

    friend SkillSet unite(const SkillSet& a, const SkillSet& b) {
        SkillSet out;
        std::set_union(a.skills_.begin(), a.skills_.end(), b.skills_.begin(), b.skills_.end(),
                       std::inserter(out.skills_, out.skills_.end()));
        return out;
    }

private:
    std::set<std::string> skills_;
};

inline std::size_t intersection_size(const SkillSet& a, const SkillSet& b) {
    return intersect(a, b).size();
}

/// |A ∪ B| computed as |A| + |B| - |A ∩ B|. Contract: equals the union
/// cardinality computed directly.
inline std::size_t inclusion_exclusion(const SkillSet& a, const SkillSet& b) {
    return a.size() + b.size() - intersection_size(a, b);
}

enum class Proficiency { Expert, Moderate };

inline std::string_view proficiency_name(Proficiency p) {
    return p == Proficiency::Expert ? "expert" : "moderate";
}

inline Proficiency parse_proficiency(std::string_view text) {
    const std::string key = normalize_key(text);
    if (key == "expert") return Proficiency::Expert;
    if (key == "moderate") return Proficiency::Moderate;
    throw ConfigError("unknown proficiency '" + std::string(text) + "' (expected expert|moderate)");
}

struct Developer {
    std::string id;
    std::map<std::string, Proficiency> proficiencies; // keys normalized

    SkillSet skills() const {
        SkillSet s;
        for (const auto& [skill, _] : proficiencies) s.insert(skill);
        return s;
    }
};

enum class ProfessionalClass { VSP, HSP, Unclassified };

inline std::string_view professional_class_name(ProfessionalClass c) {
    switch (c) {
        case ProfessionalClass::VSP: return "VSP";
        case ProfessionalClass::HSP: return "HSP";
        case ProfessionalClass::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

struct ClassificationThresholds {
    std::size_t vsp_min_expert = 1;   // VSP: at least this many expert skills
    std::size_t hsp_min_moderate = 2; // HSP: no experts, at least this many moderates
};

/// Vertical professionals are deep (expert somewhere), horizontal ones are
/// broad (no expert skill, several moderate ones).
inline ProfessionalClass classify_professional(const Developer& d,
                                               ClassificationThresholds t = {}) {
    std::size_t experts = 0, moderates = 0;
    for (const auto& [_, prof] : d.proficiencies) {
        (prof == Proficiency::Expert ? experts : moderates)++;
    }
    if (experts >= t.vsp_min_expert) return ProfessionalClass::VSP;
    if (moderates >= t.hsp_min_moderate) return ProfessionalClass::HSP;
    return ProfessionalClass::Unclassified;
}

enum class SetRelation { Equal, ProperSubset, ProperSuperset, Overlapping, Disjoint };

inline std::string_view set_relation_name(SetRelation r) {
    switch (r) {
        case SetRelation::Equal: return "Equal";
        case SetRelation::ProperSubset: return "ProperSubset";
        case SetRelation::ProperSuperset: return "ProperSuperset";
        case SetRelation::Overlapping: return "Overlapping";
        case SetRelation::Disjoint: return "Disjoint";
    }
    return "Disjoint";
}

/// Most specific relation wins: Equal, then proper containment (an empty
/// set is a proper subset of any non-empty one), then Disjoint, else
/// Overlapping. Exactly one relation holds per pair.
inline SetRelation relation(const SkillSet& a, const SkillSet& b) {
    if (a == b) return SetRelation::Equal;
    if (a.is_subset_of(b)) return SetRelation::ProperSubset;
    if (b.is_subset_of(a)) return SetRelation::ProperSuperset;
    if (intersection_size(a, b) == 0) return SetRelation::Disjoint;
    return SetRelation::Overlapping;
}

/// Relation-to-risk table: containment pairs the groups most safely, equal
/// or overlapping skill sets are low risk, disjoint teams share no talent
/// at all and rate very high.
inline RiskLevel relation_risk(SetRelation r) {
    switch (r) {
        case SetRelation::ProperSubset:
        case SetRelation::ProperSuperset: return RiskLevel::VeryLow;
        case SetRelation::Equal: return RiskLevel::Low;
        case SetRelation::Overlapping: return RiskLevel::Low;
        case SetRelation::Disjoint: return RiskLevel::VeryHigh;
    }
    return RiskLevel::VeryHigh;
}

/// Chain score over paired groups: sum of |A_i ∩ B_i| plus the linking
/// terms |B_i ∩ A_{i+1}|. Both lists must be the same non-zero length.
inline std::size_t chain_score(std::span<const SkillSet> vsps, std::span<const SkillSet> hsps) {
    if (vsps.empty() || vsps.size() != hsps.size()) {
        throw DomainError("chain score needs two equally sized non-empty groups");
    }
    std::size_t score = 0;
    for (std::size_t i = 0; i < vsps.size(); ++i) {
        score += intersection_size(vsps[i], hsps[i]);
        if (i + 1 < vsps.size()) score += intersection_size(hsps[i], vsps[i + 1]);
    }
    return score;
}

} // namespace riskchain
