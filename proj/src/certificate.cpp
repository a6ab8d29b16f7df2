#include "diorec/certificate.hpp"

#include <stdexcept>

namespace diorec {

const char* const kToolVersion = "1.0.0";

namespace {

using nlohmann::ordered_json;

ordered_json tuple_json(const SolutionTuple& t) {
    ordered_json a = ordered_json::array();
    for (const Int& e : t) a.push_back(to_long(e));
    return a;
}

ordered_json tuple_list_json(const std::vector<SolutionTuple>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& t : v) a.push_back(tuple_json(t));
    return a;
}

ordered_json poly_json(const MultiPoly& P) {
    ordered_json terms = ordered_json::array();
    for (const auto& [exp, c] : P.terms()) {
        ordered_json t;
        t["exp"] = exp;
        t["coeff"] = c.get_str();
        terms.push_back(std::move(t));
    }
    ordered_json j;
    j["vars"] = P.variables();
    j["terms"] = std::move(terms);
    return j;
}

// defining polynomial (coefficient strings, constant first) + isolating
// interval + advisory double
ordered_json alg_json(const AlgebraicNumber& x) {
    ordered_json defining = ordered_json::array();
    for (long i = 0; i <= x.defining().degree(); ++i)
        defining.push_back(x.defining().coeff(static_cast<std::size_t>(i)).get_str());
    ordered_json j;
    j["defining"] = std::move(defining);
    j["interval"] = {rat_to_string(x.lo()), rat_to_string(x.hi())};
    j["approx"] = x.approx();
    return j;
}

// recursively drop the advisory floating-point fields
void strip_approx(ordered_json& j) {
    if (j.is_object()) {
        j.erase("approx");
        j.erase("inv_cuberoot_approx");
        for (auto& [key, value] : j.items()) strip_approx(value);
    } else if (j.is_array()) {
        for (auto& value : j) strip_approx(value);
    }
}

void diff_json(const std::string& path, const ordered_json& a, const ordered_json& b,
               std::vector<std::string>& out) {
    if (a == b) return;
    if (a.is_object() && b.is_object()) {
        for (const auto& [key, value] : a.items()) {
            std::string p = path + "/" + key;
            if (!b.contains(key))
                out.push_back(p + ": missing from the re-derived certificate");
            else
                diff_json(p, value, b.at(key), out);
        }
        for (const auto& [key, value] : b.items())
            if (!a.contains(key)) out.push_back(path + "/" + key + ": missing from the certificate");
        return;
    }
    if (a.is_array() && b.is_array()) {
        if (a.size() != b.size()) {
            out.push_back(path + ": " + std::to_string(a.size()) + " entries, re-derivation has " +
                          std::to_string(b.size()));
            return;
        }
        for (std::size_t i = 0; i < a.size(); ++i)
            diff_json(path + "/" + std::to_string(i), a[i], b[i], out);
        return;
    }
    out.push_back(path + ": " + a.dump() + " != " + b.dump());
}

}  // namespace

nlohmann::ordered_json derivation_json(const PipelineResult& pr) {
    ordered_json j;
    ordered_json rec;
    rec["order"] = pr.rec.order;
    ordered_json coeffs = ordered_json::array();
    for (const Int& c : pr.rec.coeffs) coeffs.push_back(to_long(c));
    rec["coeffs"] = std::move(coeffs);
    j["recurrence"] = std::move(rec);
    j["polynomial"] = poly_json(pr.P);
    j["invariance_verified"] = pr.invariance_verified;
    j["tool_version"] = kToolVersion;
    return j;
}

nlohmann::ordered_json certificate_json(const PipelineResult& pr) {
    if (pr.stage != Stage::solved)
        throw std::logic_error("certificates are only issued for completed decision runs");

    ordered_json j = derivation_json(pr);
    j.erase("tool_version");  // reattached last so field order stays stable

    const AdmissibilityReport& adm = *pr.admissibility;
    ordered_json aj;
    aj["irreducible"] = adm.irreducible;
    aj["dominant_root"] = alg_json(*adm.dominant_root);
    j["admissibility"] = std::move(aj);

    ordered_json regions = ordered_json::array();
    for (const MinReport& mr : pr.bound->per_region) {
        ordered_json r;
        ordered_json cons = ordered_json::array();
        for (const Constraint& c : mr.region.constraints) cons.push_back(c.to_string());
        r["constraints"] = std::move(cons);
        r["min"] = alg_json(mr.minimum);
        r["inv_cuberoot_approx"] = mr.minimum.nth_root(3).inverse().approx();
        if (mr.degenerate_critical_set) r["degenerate_critical_set"] = true;
        regions.push_back(std::move(r));
    }
    ordered_json red;
    red["regions"] = std::move(regions);
    red["search_limit"] = to_long(pr.bound->search_limit);
    red["method_ok"] = pr.bound->method_ok;
    j["reduction"] = std::move(red);

    j["solutions_below_bound"] = tuple_list_json(pr.solutions->solutions);
    j["generators"] = tuple_list_json(pr.generators->generators);
    j["tool_version"] = kToolVersion;
    return j;
}

std::string certificate_text(const nlohmann::ordered_json& cert) { return cert.dump(2) + "\n"; }

std::vector<std::string> recheck_certificate(const nlohmann::ordered_json& cert) {
    std::vector<std::string> out;
    if (!cert.is_object() || !cert.contains("recurrence") ||
        !cert["recurrence"].contains("coeffs") || !cert["recurrence"]["coeffs"].is_array()) {
        out.push_back("certificate carries no recurrence coefficients");
        return out;
    }
    std::vector<Int> coeffs;
    for (const auto& c : cert["recurrence"]["coeffs"]) {
        if (!c.is_number_integer()) {
            out.push_back("recurrence coefficients must be integers");
            return out;
        }
        coeffs.push_back(Int(c.get<long>()));
    }
    PipelineResult pr;
    try {
        pr = run_decision(coeffs);
    } catch (const std::exception& e) {
        out.push_back(std::string("the decision procedure rejects the embedded recurrence: ") +
                      e.what());
        return out;
    }
    if (pr.stage != Stage::solved) {
        out.push_back("the decision procedure does not complete for the embedded recurrence");
        return out;
    }
    ordered_json claimed = cert;
    ordered_json fresh = certificate_json(pr);
    strip_approx(claimed);
    strip_approx(fresh);
    diff_json("", claimed, fresh, out);
    return out;
}

}  // namespace diorec
