#pragma once

#include "branchlab/branching.hpp"
#include "branchlab/hwmodule.hpp"
#include "branchlab/ideal.hpp"
#include "branchlab/io.hpp"
#include "branchlab/mstruct.hpp"
#include "branchlab/psembed.hpp"
#include "branchlab/realform.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace branchlab {

struct JobSpec {
    std::string command;
    std::string realform;
    std::optional<IntVec> weight;
    std::optional<long> bound;
    std::optional<std::string> zeta;
    std::optional<std::string> nu;
    std::string method = "kostant";
    std::string format = "table";
};

struct JobResult {
    int exit_code = 0;
    std::string output;
    std::string error;
};

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"branch", "verify", "spherical", "fiber", "minimal", "mstructure", "ps-params", "classify"};
    return names;
}

inline int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidLabel:
    case ErrorKind::NotDominant:
    case ErrorKind::NotIntegral:
    case ErrorKind::NotFiniteType: return 2;
    case ErrorKind::ResourceLimit: return 3;
    default: return 4;
    }
}

/// Comma-separated list of exact numbers; an empty string is the empty list.
inline Vec parse_scalar_list(const std::string& text) {
    Vec out;
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t.empty()) return out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Scalar::parse(item));
        } catch (const std::invalid_argument&) {
            fail(ErrorKind::ParseError, "cannot parse '" + item + "' as an exact number");
        }
    }
    return out;
}

inline IntVec parse_weight(const std::string& text) {
    IntVec out;
    for (const auto& s : parse_scalar_list(text)) {
        if (!s.is_integer()) fail(ErrorKind::ParseError, "weight coefficients must be integers");
        out.push_back(s.to_long());
    }
    return out;
}

inline std::vector<int> parse_zeta(const std::string& text) {
    std::vector<int> out;
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    std::stringstream ss(t);
    std::string item;
    while (!t.empty() && std::getline(ss, item, ',')) {
        if (item == "1" || item == "+1" || item == "+") out.push_back(1);
        else if (item == "-1" || item == "-") out.push_back(-1);
        else fail(ErrorKind::ParseError, "zeta entries must be +1 or -1");
    }
    return out;
}

namespace detail {

inline std::string weight_string(const IntVec& w) {
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
    return s + ")";
}

inline std::string vec_string(const Vec& w) {
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + w[k].to_string();
    return s + ")";
}

inline std::string index_string(const std::vector<std::size_t>& v) {
    std::string s = "{";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k] + 1);
    return s + "}";
}

inline Json job_json(const JobSpec& job) {
    Json j;
    j["command"] = job.command;
    j["realform"] = job.realform;
    j["weight"] = job.weight ? int_vec_json(*job.weight) : Json(nullptr);
    j["bound"] = job.bound ? Json(std::to_string(*job.bound)) : Json(nullptr);
    j["zeta"] = job.zeta ? Json(*job.zeta) : Json(nullptr);
    j["nu"] = job.nu ? Json(*job.nu) : Json(nullptr);
    j["method"] = job.method;
    return j;
}

inline IntVec require_weight(const JobSpec& job, const RealFormData& rf) {
    if (!job.weight) fail(ErrorKind::ParseError, "--weight is required for " + job.command);
    if (job.weight->size() != rf.rank())
        fail(ErrorKind::ParseError, "weight has " + std::to_string(job.weight->size()) + " entries, rank is " + std::to_string(rf.rank()));
    if (!RootSystem::is_dominant(*job.weight)) fail(ErrorKind::NotDominant, "weight must be dominant");
    return *job.weight;
}

inline long bound_or(const JobSpec& job, long fallback) {
    long b = job.bound.value_or(fallback);
    if (b < 0) fail(ErrorKind::ParseError, "bound must be nonnegative");
    return b;
}

inline std::string branching_table(const BranchingReport& r) {
    std::ostringstream os;
    os << "lambda = " << weight_string(r.lambda) << "   dim V = " << r.dim_V << "   method = " << r.method << "\n";
    os << "k-type highest weight (t_k coords)    dim   mult\n";
    for (const auto& e : r.entries) {
        std::string hw = vec_string(e.hw);
        os << "  " << hw << std::string(hw.size() < 36 ? 36 - hw.size() : 1, ' ') << e.dim << "     " << e.mult << "\n";
    }
    os << "checksum = " << r.checksum << "\n";
    return os.str();
}

/// One identity check per call; a thrown identity or structure error counts as a failure with its message.
inline void run_check(std::vector<IdentityCheck>& out, const std::string& name, const std::function<std::pair<bool, std::string>()>& f) {
    try {
        auto [ok, detail] = f();
        out.push_back({name, ok, detail});
    } catch (const Error& e) {
        if (exit_code_for(e.kind()) != 4) throw;
        out.push_back({name, false, e.what()});
    }
}

inline std::vector<IdentityCheck> weight_checks(const HWModule& V, const KStructure& ks, long bound) {
    const RealFormData& rf = *ks.rf;
    const std::string tag = weight_string(V.highest_weight);
    std::vector<IdentityCheck> out;
    run_check(out, "prv_annihilation " + tag, [&] { return std::pair{verify_prv_annihilation(V).ok, std::string()}; });
    run_check(out, "annihilator_generators " + tag, [&] {
        auto rep = verify_annihilator(V, rf, false);
        return std::pair{rep.ok, std::to_string(rep.entries.size()) + " generators"};
    });
    BranchingReport kost;
    run_check(out, "branching_equality " + tag, [&] {
        kost = branch_kostant(V, ks);
        BranchingReport orc = branch_oracle(V, ks);
        return std::pair{kost.same_decomposition(orc), "checksum " + std::to_string(kost.checksum)};
    });
    run_check(out, "n_invariants_equal_m_span " + tag, [&] { return std::pair{n_invariants_equal_m_span(V, rf), std::string()}; });
    run_check(out, "fiber_structure " + tag, [&] {
        FiberReport fr = fiber_enumerate(fiber_label(V.highest_weight, rf), std::max(bound, weight_sum(V.highest_weight)), rf);
        return std::pair{fr.equals_translate && fr.minimal_ok, std::to_string(fr.members.size()) + " members"};
    });
    run_check(out, "spectrum_domination " + tag, [&] {
        IntVec lmin = minimal_fiber_element(fiber_label(V.highest_weight, rf), rf);
        if (lmin == V.highest_weight) return std::pair{true, std::string("minimal element")};
        HWModule Vm = build_irrep(rf.g, lmin);
        return std::pair{spectrum_dominates(branch_kostant(V, ks), branch_kostant(Vm, ks)), "against " + weight_string(lmin)};
    });
    run_check(out, "borel_weil_core " + tag, [&] {
        auto bw = verify_borel_weil_annihilation(V.highest_weight, rf);
        auto kb = ps_ktype_bound(V, ks);
        return std::pair{bw.ok && kb.ok, "lambda^c = " + weight_string(bw.lambda_c)};
    });
    run_check(out, "z_parity " + tag, [&] {
        bool ok = k_type_parities_match(V, ks);
        for (std::size_t i : rf.I_s) ok = ok && z_exponential_matches_parity(V, rf, i);
        return std::pair{ok, std::string()};
    });
    return out;
}

}  // namespace detail

/// Runs one job and renders its output; library errors map to exit codes 2, 3 and 4.
inline JobResult run_job(const JobSpec& job) {
    JobResult res;
    try {
        if (job.format != "table" && job.format != "structured") fail(ErrorKind::ParseError, "format must be table or structured");
        if (std::find(command_names().begin(), command_names().end(), job.command) == command_names().end())
            fail(ErrorKind::ParseError, "unknown command " + job.command);
        if (job.realform.empty()) fail(ErrorKind::ParseError, "--realform is required");
        ThetaSpec spec = resolve_realform(job.realform);
        auto g = build_lie_algebra(RootSystem(spec.cartan));
        auto rf = std::make_shared<const RealFormData>(build_real_form(g, spec));
        Json results;
        std::vector<IdentityCheck> checks;
        std::ostringstream table;
        using namespace detail;

        if (job.command == "branch") {
            IntVec lambda = require_weight(job, *rf);
            KStructure ks = build_k_structure(rf);
            HWModule V = build_irrep(g, lambda);
            if (job.method != "kostant" && job.method != "oracle" && job.method != "both")
                fail(ErrorKind::ParseError, "method must be kostant, oracle or both");
            BranchingReport rep = job.method == "oracle" ? branch_oracle(V, ks) : branch_kostant(V, ks);
            results["branching"] = to_json(rep);
            table << branching_table(rep);
            if (job.method == "both") {
                BranchingReport orc = branch_oracle(V, ks);
                bool eq = rep.same_decomposition(orc);
                checks.push_back({"branching_equality " + weight_string(lambda), eq, ""});
                results["oracle"] = to_json(orc);
                table << "oracle agrees: " << (eq ? "yes" : "no") << "\n";
            }
        } else if (job.command == "verify") {
            for (const auto& c : structure_identities(*rf)) checks.push_back(c);
            KStructure ks = build_k_structure(rf);
            long bound = bound_or(job, 2);
            std::vector<IntVec> weights;
            if (job.weight) weights.push_back(require_weight(job, *rf));
            else
                for (const auto& w : dominant_weights_up_to(rf->rank(), bound))
                    if (g->root_system().weyl_dimension(w) <= Rational(static_cast<unsigned long>(default_dim_cap()))) weights.push_back(w);
            for (const auto& w : weights) {
                HWModule V = build_irrep(g, w);
                for (auto& c : weight_checks(V, ks, bound)) checks.push_back(std::move(c));
            }
            std::size_t passed = std::count_if(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
            results["weights_checked"] = std::to_string(weights.size());
            results["passed"] = std::to_string(passed);
            results["failed"] = std::to_string(checks.size() - passed);
            for (const auto& c : checks) table << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
            table << passed << "/" << checks.size() << " checks passed\n";
        } else if (job.command == "spherical") {
            IntVec lambda = require_weight(job, *rf);
            bool s = is_spherical(lambda, *rf);
            results["lambda"] = int_vec_json(lambda);
            results["spherical"] = s;
            table << (s ? "true" : "false") << "\n";
        } else if (job.command == "fiber") {
            FiberLabel label;
            if (job.weight) label = fiber_label(require_weight(job, *rf), *rf);
            else {
                label.zeta = parse_zeta(job.zeta.value_or(""));
                label.nu = parse_scalar_list(job.nu.value_or(""));
            }
            FiberReport fr = fiber_enumerate(label, bound_or(job, 5), *rf);
            results["label"] = to_json(label);
            results["minimal"] = int_vec_json(fr.minimal);
            Json members = Json::array();
            for (const auto& m : fr.members) members.push_back(int_vec_json(m));
            results["members"] = members;
            checks.push_back({"fiber_is_spherical_translate", fr.equals_translate, ""});
            checks.push_back({"fiber_minimality", fr.minimal_ok, ""});
            table << "label: " << label.to_string() << "\nminimal: " << weight_string(fr.minimal) << "\nmembers:";
            for (const auto& m : fr.members) table << " " << weight_string(m);
            table << "\n";
        } else if (job.command == "minimal") {
            FiberLabel label{parse_zeta(job.zeta.value_or("")), parse_scalar_list(job.nu.value_or(""))};
            IntVec lmin = minimal_fiber_element(label, *rf);
            results["label"] = to_json(label);
            results["minimal"] = int_vec_json(lmin);
            table << weight_string(lmin) << "\n";
        } else if (job.command == "mstructure") {
            MStructureData m = m_structure(*rf);
            results["ell_s"] = std::to_string(m.ell_s);
            results["I_s"] = index_list(m.I_s);
            results["center_dim"] = std::to_string(m.center_dim);
            results["split_rank"] = std::to_string(m.split_rank);
            results["h_m_dim"] = std::to_string(m.h_m_dim);
            results["summary"] = m.summary;
            table << m.summary << "\nell_s = " << m.ell_s << "  I_s = " << index_string(m.I_s) << "  center dim = " << m.center_dim
                  << "  split rank = " << m.split_rank << "  dim h_m = " << m.h_m_dim << "\n";
            if (job.weight) {
                IntVec lambda = require_weight(job, *rf);
                FiberLabel l = fiber_label(lambda, *rf);
                results["label"] = to_json(l);
                results["m_trivial"] = m_trivial(lambda, *rf);
                table << "lambda = " << weight_string(lambda) << "  " << l.to_string() << "  m-trivial: " << (m_trivial(lambda, *rf) ? "yes" : "no") << "\n";
            }
        } else if (job.command == "ps-params") {
            IntVec lambda = require_weight(job, *rf);
            PrincipalSeriesParams p = ps_params(lambda, *rf);
            results["lambda"] = int_vec_json(lambda);
            results["lambda_c"] = int_vec_json(p.lambda_c);
            results["delta"] = to_json(p.delta);
            results["nu_c"] = to_json(p.nu_c);
            results["xi"] = to_json(p.xi);
            checks.push_back({"xi_equals_minus_dual_on_a", p.xi_consistent, ""});
            table << "lambda^c = " << weight_string(p.lambda_c) << "\ndelta: " << p.delta.to_string() << "\nnu^c = " << vec_string(p.nu_c)
                  << "\nxi (on a basis) = " << vec_string(p.xi) << "\n";
        } else if (job.command == "classify") {
            checks = structure_identities(*rf);
            Json s = realform_summary(*rf);
            results = s;
            table << "real form " << rf->spec.name << ": dim g = " << g->dim() << ", dim k = " << rf->k_basis.size() << ", split rank = "
                  << rf->split_rank() << ", center dim = " << rf->center_dim() << "\n";
            table << "I_m = " << index_string(rf->I_m) << "  I_n = " << index_string(rf->I_n) << "  I_s = " << index_string(rf->I_s)
                  << "  I_nil = " << index_string(rf->I_nil) << "  I_1 = " << index_string(rf->I_1) << "  I_2 = " << index_string(rf->I_2) << "\n";
            table << "restricted roots: " << rf->restricted.size() << ", simple:";
            for (std::size_t k : rf->simple_restricted) table << " " << rvec_string(rf->restricted[k].coords);
            table << "\n";
            for (const auto& c : checks) table << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
        }

        bool all_ok = std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
        if (!all_ok) res.exit_code = 4;
        if (job.format == "structured") res.output = structured_document(job_json(job), *rf, results, checks).dump(2) + "\n";
        else res.output = table.str();
    } catch (const Error& e) {
        res.exit_code = exit_code_for(e.kind());
        res.error = e.what();
    }
    return res;
}

} // namespace branchlab
