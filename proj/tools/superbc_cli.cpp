// Command-line front end: exact computations in and around the ring of even
// supersymmetric polynomials and the enveloping algebra of gl(2|2).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "acceptance.hpp"
#include "superbc/borel.hpp"
#include "superbc/interp.hpp"
#include "superbc/json_io.hpp"
#include "superbc/kacrep.hpp"
#include "superbc/partition.hpp"
#include "superbc/shimura.hpp"
#include "superbc/superlie.hpp"
#include "superbc/susyring.hpp"

using namespace superbc;

namespace {

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(out_file);
        f << text;
        if (text.empty() || text.back() != '\n') f << "\n";
    }
}

std::string table_csv(const EvalTable& t) {
    std::ostringstream os;
    os << "mu\\lambda";
    for (const Partition& lam : t.index) os << "," << lam.str();
    os << "\n";
    for (size_t r = 0; r < t.index.size(); ++r) {
        os << t.index[r].str();
        for (const Scalar& e : t.entries[r]) os << "," << e.str();
        os << "\n";
    }
    return os.str();
}

std::string reflect_text(const FdReport& rep) {
    std::ostringstream os;
    for (const MarkedWeight& w : rep.trace) {
        for (size_t i = 0; i < w.chain.size(); ++i) os << w.chain[i].str() << "\t";
        os << "\n";
        for (int c : w.coeffs) os << c << "\t";
        os << "\n\n";
    }
    os << "dominant: " << (rep.dominant ? "yes" : "no") << "\n";
    if (rep.case_two)
        os << "case (ii): tau1 = " << rep.tau1 << ", l = " << rep.l_count << " ("
           << (rep.tau1_matches ? "match" : "MISMATCH") << ")\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for interpolation supersymmetric polynomials and gl(2|2)"};
    app.require_subcommand(1);
    app.fallthrough(); // --format/--out may follow the subcommand

    std::string out_file, format = "json", mu_str, lam_str, k_str, h_str;
    int p = 1, q = 1, slack = 3, table_d = -1, basis_d = 2, kac_a = 1, kac_b = 0;
    bool quasi = false, verify = false, check_table = false;
    app.add_option("--out", out_file, "write output to a file")->capture_default_str();
    app.add_option("--format", format, "json or text")->capture_default_str();

    CLI::App* interp = app.add_subcommand("interp", "solve an interpolation polynomial");
    interp->set_help_flag("--help", "print help"); // frees -h for the parameter below
    interp->add_option("--p", p)->capture_default_str();
    interp->add_option("--q", q)->capture_default_str();
    interp->add_option("--mu", mu_str, "partition, e.g. \"2,1\"");
    interp->add_option("--k", k_str, "deformation parameter (exact rational)");
    interp->add_option("--h", h_str, "deformation parameter (exact rational)");
    interp->add_option("--slack", slack, "extra-vanishing check slack")->capture_default_str();
    interp->add_option("--table", table_d, "emit the evaluation matrix up to size d as CSV");

    CLI::App* basis = app.add_subcommand("basis", "basis of the even supersymmetric ring");
    basis->set_help_flag("--help", "print help");
    basis->add_option("--p", p)->capture_default_str();
    basis->add_option("--q", q)->capture_default_str();
    basis->add_option("--d", basis_d, "degree bound 2d")->capture_default_str();
    basis->add_option("--k", k_str, "deformed ring parameter");
    basis->add_option("--h", h_str, "deformed ring parameter");

    CLI::App* reflect = app.add_subcommand("reflect", "odd-reflection trace for a hook");
    reflect->add_option("--p", p)->capture_default_str();
    reflect->add_option("--q", q)->capture_default_str();
    reflect->add_option("--lambda", lam_str, "partition");

    CLI::App* kac = app.add_subcommand("kac", "spherical data of a Kac module");
    kac->add_option("--a", kac_a)->required();
    kac->add_option("--b", kac_b)->required();
    kac->add_flag("--quasi", quasi, "run the quasi-sphericity check");

    CLI::App* shim = app.add_subcommand("shimura", "Gamma image of an invariant operator");
    shim->add_option("--mu", mu_str, "partition with |mu| <= 3");
    shim->add_flag("--verify", verify, "include ring membership and vanishing report");

    CLI::App* br = app.add_subcommand("brackets", "superbracket table check");
    br->add_flag("--check-table", check_table, "diff against the embedded table");

    app.add_subcommand("verify-all", "run the full verification suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (interp->parsed()) {
            SusyProfile prof{p, q};
            Partition mu = Partition::parse(mu_str);
            bool deformed = !k_str.empty();
            DeformedParams par{Scalar(1), Scalar(0)};
            if (deformed)
                par = DeformedParams{Scalar::parse(k_str),
                                     h_str.empty() ? Scalar(0) : Scalar::parse(h_str)};
            if (table_d >= 0) {
                EvalTable t = deformed ? evaluation_table(prof, par, table_d)
                                       : evaluation_table(prof, table_d);
                emit(table_csv(t), out_file);
                return 0;
            }
            InterpResult r =
                deformed ? solve_general(mu, prof, par) : solve_interpolation(mu, prof);
            json j = to_json(r);
            j["extra_vanishing"] = to_json(verify_extra_vanishing(r, mu, prof, slack), prof);
            j["extra_vanishing"]["slack"] = slack;
            emit(format == "text" ? r.poly.str() : j.dump(2), out_file);
            return 0;
        }
        if (basis->parsed()) {
            SusyProfile prof{p, q};
            RingBasis rb = k_str.empty()
                               ? lambda0_basis(prof, basis_d)
                               : lambda_rho_basis(prof,
                                                  DeformedParams{Scalar::parse(k_str),
                                                                 h_str.empty()
                                                                     ? Scalar(0)
                                                                     : Scalar::parse(h_str)},
                                                  basis_d);
            json arr = json::array();
            for (const ExactPoly& f : rb.elems) arr.push_back(to_json(f));
            json j{{"p", p}, {"q", q}, {"d", basis_d}, {"dimension", rb.elems.size()},
                   {"basis", arr}};
            if (format == "text") {
                std::ostringstream os;
                os << "dimension " << rb.elems.size() << "\n";
                for (const ExactPoly& f : rb.elems) os << f.str() << "\n";
                emit(os.str(), out_file);
            } else {
                emit(j.dump(2), out_file);
            }
            return 0;
        }
        if (reflect->parsed()) {
            HookProfile prof{p, q};
            Partition lam = Partition::parse(lam_str);
            FdReport rep = verify_fd(lam, prof);
            if (format == "text") {
                emit(reflect_text(rep), out_file);
            } else {
                json j = to_json(rep);
                j["lambda"] = to_json(lam);
                j["natural"] = to_json(lambda_natural(lam, prof));
                std::ostringstream os;
                os << reflect_text(rep) << "\n" << j.dump(2);
                emit(os.str(), out_file);
            }
            return rep.passed() ? 0 : 1;
        }
        if (kac->parsed()) {
            KacWeight hw = kac_weight_of_hook(kac_a, kac_b);
            KacModule km(hw);
            json j{{"a", kac_a},
                   {"b", kac_b},
                   {"highest_weight", {hw.a, hw.b, hw.c, hw.d}},
                   {"dim", km.dim()},
                   {"typical", typicality(hw)}};
            json sph = json::array();
            for (const KacVector& v : km.spherical_vectors()) {
                json coords = json::array();
                for (const auto& [key, c] : v)
                    coords.push_back(json{{"mask", key.mask},
                                          {"k", key.k},
                                          {"l", key.l},
                                          {"coef", c.str()}});
                sph.push_back(coords);
            }
            j["spherical_basis"] = sph;
            if (quasi) {
                if (kac_b != kac_a - 1) {
                    j["quasi"] = "only defined for the b = a-1 family";
                } else {
                    QuasiSphericalReport rep =
                        quasi_spherical_check(hw, quasi_spherical_candidate(km));
                    j["quasi"] = to_json(rep);
                }
            }
            emit(j.dump(2), out_file);
            return 0;
        }
        if (shim->parsed()) {
            Partition mu = Partition::parse(mu_str);
            if (verify) {
                ShimuraVerification v = verify_shimura(mu, 2);
                emit(to_json(v).dump(2), out_file);
                bool ok = v.proportional && v.in_ring && v.vanishing_failures.empty();
                return ok ? 0 : 1;
            }
            ExactPoly g = gamma_of_shimura(mu);
            json j{{"mu", to_json(mu)}, {"gamma", to_json(g)}};
            emit(format == "text" ? g.str() : j.dump(2), out_file);
            return 0;
        }
        if (br->parsed()) {
            (void)check_table;
            const auto& table = accept::expected_bracket_table();
            const SuperAlgebra& g = gl22::algebra();
            int pass = 0;
            std::ostringstream os;
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c) {
                    int rg = -1, cg = -1;
                    for (int i = 0; i < g.size(); ++i) {
                        if (g.gen(i).name == accept::bracket_row_names()[r]) rg = i;
                        if (g.gen(i).name == accept::bracket_col_names()[c]) cg = i;
                    }
                    std::string got = accept::bracket_entry_string(rg, cg);
                    bool ok = got == table[r][c];
                    pass += ok;
                    os << (ok ? "ok   " : "DIFF ") << "[" << accept::bracket_row_names()[r]
                       << "," << accept::bracket_col_names()[c] << "] = " << got;
                    if (!ok) os << "  (table: " << table[r][c] << ")";
                    os << "\n";
                }
            os << pass << "/64 pass\n";
            emit(os.str(), out_file);
            return pass == 64 ? 0 : 1;
        }
        // verify-all
        std::ostringstream os;
        auto results = accept::run_all(os);
        if (format == "json") {
            json checks = json::array();
            for (const auto& r : results)
                checks.push_back(json{{"id", r.id},
                                      {"status", r.passed ? "pass" : "fail"},
                                      {"expected", r.expected},
                                      {"actual", r.actual},
                                      {"seconds", r.seconds}});
            json rep{{"suite", "superbc verification"},
                     {"checks", checks},
                     {"passed", accept::all_passed(results)}};
            emit(rep.dump(2), out_file);
        } else {
            emit(os.str(), out_file);
        }
        return accept::all_passed(results) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
