#pragma once

#include "branchlab/branchlab.hpp"
#include "branchlab/cli.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>

namespace bltest {

using namespace branchlab;

struct Preset {
    std::shared_ptr<const LieAlgebra> g;
    std::shared_ptr<const RealFormData> rf;
    std::shared_ptr<const KStructure> ks;
};

inline const Preset& preset(const std::string& name) {
    static std::map<std::string, Preset> cache;
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    ThetaSpec spec = theta_preset(name);
    Preset p;
    p.g = build_lie_algebra(RootSystem(spec.cartan));
    p.rf = std::make_shared<const RealFormData>(build_real_form(p.g, spec));
    p.ks = std::make_shared<const KStructure>(build_k_structure(p.rf));
    return cache.emplace(name, p).first->second;
}

inline std::shared_ptr<const LieAlgebra> algebra(const std::string& type) {
    static std::map<std::string, std::shared_ptr<const LieAlgebra>> cache;
    auto it = cache.find(type);
    if (it != cache.end()) return it->second;
    return cache.emplace(type, build_lie_algebra(RootSystem(CartanMatrix::of_type(type)))).first->second;
}

/// Weyl orbit by breadth-first search over simple reflections.
inline std::set<IntVec> weyl_orbit(const RootSystem& rs, const IntVec& w) {
    std::set<IntVec> seen{w};
    std::vector<IntVec> queue{w};
    for (std::size_t k = 0; k < queue.size(); ++k)
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            IntVec r = rs.reflect_weight(queue[k], i);
            if (seen.insert(r).second) queue.push_back(r);
        }
    return seen;
}

/// Branching by repeatedly removing the weight multiset of the top k-type; independent of highest-vector kernels.
inline BranchingReport branch_by_characters(const HWModule& V, const KStructure& ks) {
    auto remaining = tk_weights_of(V, ks);
    BranchingReport rep;
    rep.lambda = V.highest_weight;
    rep.method = "characters";
    rep.dim_V = V.dim();
    while (!remaining.empty()) {
        const Vec* top = nullptr;
        for (const auto& [w, c] : remaining)
            if (!top || ks.is_positive_weight(w - *top)) top = &w;
        Vec hw = *top;
        KType Z = build_k_type(ks, hw);
        std::size_t mult = remaining.at(hw);
        for (const auto& w : Z.weights) {
            auto it = remaining.find(w);
            if (it == remaining.end() || it->second < mult) fail(ErrorKind::IdentityViolation, "character peeling went negative");
            it->second -= mult;
            if (it->second == 0) remaining.erase(it);
        }
        rep.entries.push_back({hw, Z.dim(), mult});
    }
    finalize_report(rep);
    return rep;
}

inline std::vector<IntVec> weights_with_dim_at_most(const RootSystem& rs, long dim_cap, long sum_cap) {
    std::vector<IntVec> out;
    for (const auto& w : dominant_weights_up_to(rs.rank(), sum_cap))
        if (rs.weyl_dimension(w) <= Rational(dim_cap)) out.push_back(w);
    return out;
}

}  // namespace bltest
