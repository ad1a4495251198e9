#pragma once

#include "branching.hpp"
#include "mstruct.hpp"
#include "psembed.hpp"
#include "realform.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace branchlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// ---------------------------------------------------------------- scalars and vectors

inline Json to_json(const Scalar& s) { return s.to_string(); }

inline Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) fail(ErrorKind::ParseError, "expected an exact number as a string");
    return Scalar::parse(j.get<std::string>());
}

inline Json to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Vec vec_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorKind::ParseError, "expected an array of exact numbers");
    Vec v;
    for (const auto& x : j) v.push_back(scalar_from_json(x));
    return v;
}

inline Json int_vec_json(const IntVec& v) {
    Json a = Json::array();
    for (long x : v) a.push_back(std::to_string(x));
    return a;
}

inline IntVec int_vec_from_json(const Json& j) {
    IntVec out;
    for (const auto& x : j) {
        Scalar s = scalar_from_json(x);
        if (!s.is_integer()) fail(ErrorKind::ParseError, "expected an integer");
        out.push_back(s.to_long());
    }
    return out;
}

// ---------------------------------------------------------------- ThetaSpec documents

inline Json theta_spec_to_json(const ThetaSpec& s) {
    Json j;
    j["name"] = s.name;
    j["cartan_matrix"] = s.cartan.entries();
    j["root_map"] = s.root_map;
    Json sp = Json::array(), sm = Json::array();
    for (const auto& x : s.signs_plus) sp.push_back(x.to_string());
    for (const auto& x : s.signs_minus) sm.push_back(x.to_string());
    j["signs_plus"] = sp;
    j["signs_minus"] = sm;
    return j;
}

inline ThetaSpec theta_spec_from_json(const Json& j) {
    try {
        if (j.contains("preset")) return theta_preset(j.at("preset").get<std::string>());
        ThetaSpec s;
        s.name = j.value("name", std::string("custom"));
        if (j.contains("cartan_matrix")) s.cartan = CartanMatrix(j.at("cartan_matrix").get<IntMatrix>());
        else s.cartan = CartanMatrix::of_type(j.at("cartan_type").get<std::string>());
        s.root_map = j.at("root_map").get<IntMatrix>();
        const std::size_t l = s.cartan.rank();
        if (s.root_map.size() != l) fail(ErrorKind::ParseError, "root_map must be " + std::to_string(l) + " x " + std::to_string(l));
        for (const auto& row : s.root_map)
            if (row.size() != l) fail(ErrorKind::ParseError, "root_map must be square");
        for (const auto& x : j.at("signs_plus")) s.signs_plus.push_back(scalar_from_json(x));
        for (const auto& x : j.at("signs_minus")) s.signs_minus.push_back(scalar_from_json(x));
        if (s.signs_plus.size() != l || s.signs_minus.size() != l) fail(ErrorKind::ParseError, "one sign per simple root is required");
        return s;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("malformed real-form document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        fail(ErrorKind::ParseError, std::string("malformed real-form document: ") + e.what());
    }
}

inline Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
}

inline std::filesystem::path data_dir() {
    if (const char* env = std::getenv("BRANCHLAB_DATA_DIR")) return env;
#ifdef BRANCHLAB_DATA_DIR
    return BRANCHLAB_DATA_DIR;
#else
    return "data";
#endif
}

/// A preset name, a file path, or a bundled document under data/presets.
inline ThetaSpec resolve_realform(const std::string& ref) {
    namespace fs = std::filesystem;
    if (fs::is_regular_file(ref)) return theta_spec_from_json(read_json_file(ref));
    fs::path bundled = data_dir() / "presets" / (ref + ".json");
    if (fs::is_regular_file(bundled)) return theta_spec_from_json(read_json_file(bundled));
    return theta_preset(ref);
}

// ---------------------------------------------------------------- reports

inline Json to_json(const BranchingReport& r) {
    Json j;
    j["lambda"] = int_vec_json(r.lambda);
    j["method"] = r.method;
    j["dim_V"] = std::to_string(r.dim_V);
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"highest_weight", to_json(e.hw)}, {"dim", std::to_string(e.dim)}, {"multiplicity", std::to_string(e.mult)}});
    j["entries"] = entries;
    j["checksum"] = std::to_string(r.checksum);
    return j;
}

inline BranchingReport branching_report_from_json(const Json& j) {
    BranchingReport r;
    r.lambda = int_vec_from_json(j.at("lambda"));
    r.method = j.at("method").get<std::string>();
    r.dim_V = std::stoul(j.at("dim_V").get<std::string>());
    for (const auto& e : j.at("entries"))
        r.entries.push_back({vec_from_json(e.at("highest_weight")), std::stoul(e.at("dim").get<std::string>()),
                             std::stoul(e.at("multiplicity").get<std::string>())});
    r.checksum = std::stoul(j.at("checksum").get<std::string>());
    return r;
}

inline Json to_json(const FiberLabel& l) {
    Json z = Json::array();
    for (int s : l.zeta) z.push_back(s > 0 ? "1" : "-1");
    return {{"zeta", z}, {"nu", to_json(l.nu)}};
}

inline FiberLabel fiber_label_from_json(const Json& j) {
    FiberLabel l;
    for (const auto& z : j.at("zeta")) l.zeta.push_back(static_cast<int>(scalar_from_json(z).to_long()));
    l.nu = vec_from_json(j.at("nu"));
    return l;
}

inline Json to_json(const IdentityCheck& c) { return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

inline Json index_list(const std::vector<std::size_t>& v) {
    Json a = Json::array();
    for (std::size_t i : v) a.push_back(std::to_string(i + 1));
    return a;
}

inline Json realform_summary(const RealFormData& rf) {
    Json j;
    j["name"] = rf.spec.name;
    j["cartan_matrix"] = rf.spec.cartan.entries();
    j["dim_g"] = std::to_string(rf.g->dim());
    j["dim_k"] = std::to_string(rf.k_basis.size());
    j["split_rank"] = std::to_string(rf.split_rank());
    j["center_dim"] = std::to_string(rf.center_dim());
    j["I_m"] = index_list(rf.I_m);
    j["I_n"] = index_list(rf.I_n);
    j["I_s"] = index_list(rf.I_s);
    j["I_nil"] = index_list(rf.I_nil);
    j["I_1"] = index_list(rf.I_1);
    j["I_2"] = index_list(rf.I_2);
    Json pairs = Json::array();
    for (const auto& [i, ip] : rf.pairs) pairs.push_back({std::to_string(i + 1), std::to_string(ip + 1)});
    j["pairs"] = pairs;
    Json simple = Json::array();
    for (std::size_t k : rf.simple_restricted) simple.push_back(rvec_string(rf.restricted[k].coords));
    j["simple_restricted_roots"] = simple;
    j["restricted_root_count"] = std::to_string(rf.restricted.size());
    return j;
}

/// Single structured output document.
inline Json structured_document(const Json& job, const RealFormData& rf, const Json& results, const std::vector<IdentityCheck>& checks) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["job"] = job;
    doc["realform_summary"] = realform_summary(rf);
    doc["results"] = results;
    Json ids = Json::array();
    for (const auto& c : checks) ids.push_back(to_json(c));
    doc["identity_checks"] = ids;
    return doc;
}

} // namespace branchlab
