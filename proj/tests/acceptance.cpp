/// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace bltest;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string wstr(const IntVec& w) { return detail::weight_string(w); }

const std::vector<std::string> kSuiteForms{"sl2R", "sl3R", "su21", "sp4R"};

/// Weights with Weyl dimension at most 200 for the main branching suite.
std::vector<IntVec> suite_weights(const RootSystem& rs) { return weights_with_dim_at_most(rs, 200, rs.rank() == 1 ? 199 : 40); }

/// Smaller suite for the heavier per-weight checks.
std::vector<IntVec> light_weights(const RootSystem& rs) { return weights_with_dim_at_most(rs, 100, 3); }

Outcome criterion1() {
    Outcome o;
    std::size_t count = 0;
    for (const auto& name : kSuiteForms) {
        const Preset& p = preset(name);
        for (const auto& w : suite_weights(p.g->root_system())) {
            HWModule V = build_irrep(p.g, w);
            BranchingReport k = branch_kostant(V, *p.ks);
            BranchingReport c = branch_oracle(V, *p.ks);
            o.require(k.same_decomposition(c), name + " " + wstr(w) + ": kostant and oracle differ");
            o.require(k.checksum == V.dim(), name + " " + wstr(w) + ": checksum");
            ++count;
        }
    }
    if (o.ok) o.detail = std::to_string(count) + " weights";
    return o;
}

Outcome criterion2() {
    Outcome o;
    const Preset& p = preset("sl2R");
    for (long n = 0; n <= 8; ++n) {
        BranchingReport r = branch_kostant(build_irrep(p.g, {n}), *p.ks);
        std::vector<BranchEntry> expected;
        for (long m = -n; m <= n; m += 2) expected.push_back({Vec{Scalar(m)}, 1, 1});
        o.require(r.entries == expected, "n = " + std::to_string(n));
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    const Preset& p = preset("sl3R");
    for (const auto& w : dominant_weights_up_to(2, 6)) {
        std::size_t m = branch_oracle(build_irrep(p.g, w), *p.ks).multiplicity(Vec(p.ks->rank()));
        o.require(m == (is_spherical(w, *p.rf) ? 1u : 0u), wstr(w));
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (const auto& name : kSuiteForms) {
        const Preset& p = preset(name);
        for (const auto& w : suite_weights(p.g->root_system()))
            o.require(verify_annihilator(build_irrep(p.g, w), *p.rf, false, false).ok, name + " " + wstr(w));
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    for (const auto& name : preset_names())
        for (const auto& c : structure_identities(*preset(name).rf)) o.require(c.passed, name + ": " + c.name);
    return o;
}

Outcome criterion6() {
    Outcome o;
    for (const auto& name : preset_names()) {
        const RealFormData& rf = *preset(name).rf;
        std::set<std::string> seen;
        for (const auto& w : dominant_weights_up_to(rf.rank(), 5)) {
            FiberLabel l = fiber_label(w, rf);
            if (!seen.insert(l.to_string()).second) continue;
            FiberReport fr = fiber_enumerate(l, 5, rf);
            o.require(fr.equals_translate && fr.minimal_ok, name + " " + l.to_string());
            o.require(fiber_label(fr.minimal, rf) == l, name + " minimal " + l.to_string());
        }
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& name : kSuiteForms) {
        const Preset& p = preset(name);
        const RootSystem& rs = p.g->root_system();
        std::map<std::string, std::vector<IntVec>> fibers;
        for (const auto& w : dominant_weights_up_to(rs.rank(), 5))
            if (rs.weyl_dimension(w) <= Rational(200)) fibers[fiber_label(w, *p.rf).to_string()].push_back(w);
        for (const auto& [label, members] : fibers) {
            if (members.size() < 2) continue;
            for (const auto& lo : members)
                for (const auto& hi : members) {
                    IntVec diff = RootSystem::sub(hi, lo);
                    if (lo == hi || !RootSystem::is_dominant(diff)) continue;
                    BranchingReport upper = branch_kostant(build_irrep(p.g, hi), *p.ks);
                    BranchingReport lower = branch_kostant(build_irrep(p.g, lo), *p.ks);
                    o.require(spectrum_dominates(upper, lower), name + " " + wstr(lo) + " <= " + wstr(hi));
                    ++pairs;
                }
        }
    }
    if (o.ok) o.detail = std::to_string(pairs) + " pairs";
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (const auto& name : preset_names()) {
        const Preset& p = preset(name);
        const RootSystem& rs = p.g->root_system();
        for (const auto& w : light_weights(rs)) {
            PrincipalSeriesParams ps = ps_params(w, *p.rf);
            o.require(ps.xi_consistent, name + " " + wstr(w) + ": xi");
            o.require(dual_weight(rs, ps.lambda_c) == w, name + " " + wstr(w) + ": duality");
            o.require(verify_borel_weil_annihilation(w, *p.rf).ok, name + " " + wstr(w) + ": annihilation");
            o.require(ps_ktype_bound(build_irrep(p.g, w), *p.ks).ok, name + " " + wstr(w) + ": k-type bound");
        }
    }
    return o;
}

Outcome criterion9() {
    Outcome o;
    for (const auto& name : preset_names()) {
        const Preset& p = preset(name);
        if (p.rf->I_s.empty()) continue;
        for (const auto& w : light_weights(p.g->root_system())) {
            HWModule V = build_irrep(p.g, w);
            for (std::size_t i : p.rf->I_s) o.require(z_exponential_matches_parity(V, *p.rf, i), name + " " + wstr(w) + ": i = " + std::to_string(i + 1));
            o.require(k_type_parities_match(V, *p.ks), name + " " + wstr(w) + ": k-types");
        }
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"branching: kostant equals oracle, checksum equals dim V", criterion1},
        {"sl2R characters for n = 0..8", criterion2},
        {"sl3R trivial k-type iff spherical", criterion3},
        {"annihilator generators kill v_lambda", criterion4},
        {"structure identities on all presets", criterion5},
        {"fibers are spherical translates of their minimal element", criterion6},
        {"k-spectrum domination along fibers", criterion7},
        {"principal series embedding core", criterion8},
        {"integrality and parity of z_i for i in I_s", criterion9},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.ok) ++failures;
        std::printf("%s criterion %zu: %s%s (%.1fs)\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.empty() ? "" : ("  [" + o.detail + "]").c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
