#include "superbc/json_io.hpp"

namespace superbc {

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const NaturalCoords& nc) {
    return json{{"b", nc.bosonic}, {"f", nc.fermionic}};
}

json to_json(const ExactPoly& f) {
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(json{{"exp", e}, {"coef", c.str()}});
    return json{{"vars", f.vars()}, {"terms", terms}};
}

json to_json(const InterpResult& r) {
    json out{
        {"mu", to_json(r.mu)},
        {"p", r.prof.p},
        {"q", r.prof.q},
        {"deformed", r.deformed},
        {"poly", to_json(r.poly)},
        {"solution_dim", r.solution_dim},
        {"normalization", r.normalization.str()},
        {"degenerate", r.degenerate},
        {"constraints", r.constraints},
    };
    if (r.deformed) {
        out["k"] = r.params.k.str();
        out["h"] = r.params.h.str();
    }
    return out;
}

json to_json(const VanishingReport& r, const SusyProfile&) {
    json fails = json::array();
    for (const Partition& p : r.failures) fails.push_back(to_json(p));
    return json{{"checked", r.checked}, {"failures", fails}};
}

json to_json(const MarkedWeight& w) {
    json chain = json::array();
    for (const ChainEntry& e : w.chain) chain.push_back(e.str());
    return json{{"chain", chain}, {"coeffs", w.coeffs}};
}

json to_json(const FdReport& r) {
    json trace = json::array();
    for (const MarkedWeight& w : r.trace) trace.push_back(to_json(w));
    json out{{"trace", trace},
             {"dominant", r.dominant},
             {"case_two", r.case_two},
             {"passed", r.passed()}};
    if (r.case_two) {
        out["tau1"] = r.tau1;
        out["l"] = r.l_count;
        out["tau1_matches"] = r.tau1_matches;
    }
    return out;
}

json to_json(const ShimuraVerification& v) {
    json fails = json::array();
    for (const Partition& p : v.vanishing_failures) fails.push_back(to_json(p));
    return json{{"gamma", to_json(v.gamma)},
                {"interp", to_json(v.interp)},
                {"c_mu", v.c_mu.str()},
                {"proportional", v.proportional},
                {"in_ring", v.in_ring},
                {"c_mu_from_leading_coeffs", v.degenerate_ratio},
                {"vanishing_failures", fails}};
}

json to_json(const QuasiSphericalReport& r) {
    return json{{"k_orbit_is_omega_prime_line", r.k_orbit_spans_omega_prime},
                {"omega_cyclic", r.omega_cyclic},
                {"degree2_annihilates", r.degree2_annihilates},
                {"enumerated", r.enumerated},
                {"g0_word_bound", r.g0_word_bound},
                {"failures", r.failures},
                {"passed", r.passed()}};
}

}  // namespace superbc
