#include "acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "superbc/borel.hpp"
#include "superbc/interp.hpp"
#include "superbc/kacrep.hpp"
#include "superbc/partition.hpp"
#include "superbc/shimura.hpp"
#include "superbc/superlie.hpp"
#include "superbc/susyring.hpp"

namespace superbc::accept {

namespace {

using Clock = std::chrono::steady_clock;

struct Failures {
    int checks = 0;
    std::vector<std::string> items;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) items.push_back(what);
    }
    std::string summary(const std::string& good) const {
        if (items.empty()) return good;
        std::string s = std::to_string(items.size()) + " failed: " + items.front();
        if (items.size() > 1) s += " (+" + std::to_string(items.size() - 1) + " more)";
        return s;
    }
};

}  // namespace

const std::array<const char*, 8>& bracket_row_names() {
    static std::array<const char*, 8> r{"eta11", "eta12", "eta21", "eta22",
                                        "X1",    "X2",    "Y1",    "Y2"};
    return r;
}

const std::array<const char*, 8>& bracket_col_names() {
    static std::array<const char*, 8> c{"xi11", "xi12", "xi21", "xi22", "X1", "X2", "Y1", "Y2"};
    return c;
}

const std::array<std::array<const char*, 8>, 8>& expected_bracket_table() {
    // rows eta11..eta22, X1, X2, Y1, Y2; columns xi11..xi22, X1, X2, Y1, Y2
    static std::array<std::array<const char*, 8>, 8> t{{
        {"d(1,0,1,0)", "X1", "Y2", "0", "0", "eta12", "-eta21", "0"},
        {"X2", "0", "d(1,0,0,1)", "X1", "0", "0", "-eta22", "eta11"},
        {"Y1", "d(0,1,1,0)", "0", "Y2", "-eta11", "eta22", "0", "0"},
        {"0", "X2", "Y1", "d(0,1,0,1)", "-eta12", "0", "0", "eta21"},
        {"-xi12", "0", "-xi22", "0", "0", "0", "d(1,-1,0,0)", "0"},
        {"0", "0", "xi11", "xi12", "0", "0", "0", "d(0,0,1,-1)"},
        {"0", "-xi11", "0", "-xi21", "d(-1,1,0,0)", "0", "0", "0"},
        {"xi21", "xi22", "0", "0", "0", "d(0,0,-1,1)", "0", "0"},
    }};
    return t;
}

std::string bracket_entry_string(int row_gen, int col_gen) {
    const SuperAlgebra& g = gl22::algebra();
    const auto& terms = g.bracket(row_gen, col_gen);
    if (terms.empty()) return "0";
    bool all_diag = true;
    for (const auto& [idx, c] : terms)
        if (idx < gl22::E11 || idx > gl22::E44) all_diag = false;
    if (all_diag) {
        Scalar d[4];
        for (const auto& [idx, c] : terms) d[idx - gl22::E11] = c;
        return "d(" + d[0].str() + "," + d[1].str() + "," + d[2].str() + "," + d[3].str() + ")";
    }
    std::string out;
    for (const auto& [idx, c] : terms) {
        std::string cs = c.str();
        if (cs == "1")
            out += (out.empty() ? "" : "+") + g.gen(idx).name;
        else if (cs == "-1")
            out += "-" + g.gen(idx).name;
        else
            out += (out.empty() || cs[0] == '-' ? "" : "+") + cs + "*" + g.gen(idx).name;
    }
    return out;
}

namespace {

int generator_by_name(const std::string& name) {
    const SuperAlgebra& g = gl22::algebra();
    for (int i = 0; i < g.size(); ++i)
        if (g.gen(i).name == name) return i;
    return -1;
}

// ---- criterion 1: superbracket table and super-Jacobi -----------------

Failures criterion_brackets() {
    Failures f;
    const SuperAlgebra& g = gl22::algebra();
    const auto& table = expected_bracket_table();
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c) {
            int rg = generator_by_name(bracket_row_names()[r]);
            int cg = generator_by_name(bracket_col_names()[c]);
            std::string got = bracket_entry_string(rg, cg);
            f.expect(got == table[r][c], std::string("[") + bracket_row_names()[r] + "," +
                                             bracket_col_names()[c] + "] = " + got +
                                             ", table says " + table[r][c]);
        }
    // super-Jacobi on all basis triples:
    // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
    int bad = 0;
    for (int a = 0; a < 16 && bad == 0; ++a)
        for (int b = 0; b < 16 && bad == 0; ++b)
            for (int c = 0; c < 16 && bad == 0; ++c) {
                SuperElt ea = SuperElt::from_word({(uint8_t)a});
                SuperElt eb = SuperElt::from_word({(uint8_t)b});
                SuperElt ec = SuperElt::from_word({(uint8_t)c});
                SuperElt lhs = g.super_commutator(ea, g.super_commutator(eb, ec));
                SuperElt rhs = g.super_commutator(g.super_commutator(ea, eb), ec);
                SuperElt cross = g.super_commutator(eb, g.super_commutator(ea, ec));
                if (g.odd(a) && g.odd(b)) cross = cross * Scalar(-1);
                if (!(lhs - rhs - cross).is_zero()) ++bad;
            }
    f.expect(bad == 0, "super-Jacobi fails on " + std::to_string(bad) + " triples");
    return f;
}

// ---- criterion 2: restricted root data --------------------------------

Failures criterion_roots() {
    Failures f;
    const PairRealization& pr = PairRealization::instance();
    auto find = [&](int cB, int cF) -> const RestrictedRoot* {
        for (const auto& r : pr.roots())
            if (r.cB == cB && r.cF == cF) return &r;
        return nullptr;
    };
    struct Expect { int cB, cF, de, dodd; };
    for (auto [cB, cF, de, dodd] : std::vector<Expect>{{2, 0, 1, 0},
                                                       {-2, 0, 1, 0},
                                                       {0, 2, 1, 0},
                                                       {0, -2, 1, 0},
                                                       {1, 1, 0, 2},
                                                       {1, -1, 0, 2},
                                                       {-1, 1, 0, 2},
                                                       {-1, -1, 0, 2}}) {
        const RestrictedRoot* r = find(cB, cF);
        std::ostringstream os;
        os << "root (" << cB << "," << cF << ")";
        f.expect(r && r->dim_even == de && r->dim_odd == dodd, os.str() + " superdimension");
    }
    f.expect(pr.roots().size() == 8, "exactly 8 nonzero restricted roots");
    auto [wb, wf] = pr.weyl_vector();
    f.expect(wb == Scalar(-1) && wf == Scalar(1), "Weyl vector (-1,1)");
    // deformed multiplicities: -1/2 on the long roots, +1 on the isotropics
    for (const auto& r : pr.roots()) {
        Scalar want = (r.dim_odd == 2) ? Scalar(1) : Scalar(-1, 2);
        f.expect(r.deformed_mult == want, "deformed multiplicity");
    }
    return f;
}

// ---- criterion 3: ring dimensions --------------------------------------

Failures criterion_dims() {
    Failures f;
    for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
        SusyProfile prof{p, q};
        for (int d = 0; d <= 3; ++d) {
            size_t hooks = enumerate_hooks(HookProfile{p, q}, d, EnumMode::UpToSize).size();
            size_t dim = lambda0_basis(prof, d).elems.size();
            std::ostringstream os;
            os << "(p,q)=(" << p << "," << q << ") d=" << d << ": dim " << dim << " vs |H_d| "
               << hooks;
            f.expect(dim == hooks, os.str());
        }
    }
    return f;
}

// ---- criterion 4: interpolation polynomials ----------------------------

Failures criterion_interp() {
    Failures f;
    SusyProfile pr11{1, 1};
    // I_(2) is a nonzero multiple of (x^2-y^2)(x^2-1), value 4 at (3,1)
    {
        InterpResult r = solve_interpolation(Partition::parse("2"), pr11);
        ExactPoly x = ExactPoly::variable(xy_vars(pr11), 0);
        ExactPoly y = ExactPoly::variable(xy_vars(pr11), 1);
        ExactPoly one = ExactPoly::constant(xy_vars(pr11), Scalar(1));
        ExactPoly target = (x * x - y * y) * (x * x - one);
        f.expect((r.poly * Scalar(16) - target).is_zero(), "I_(2) = (x^2-y^2)(x^2-1)/16");
        f.expect(r.poly.eval({Scalar(3), Scalar(1)}) == Scalar(4), "I_(2)(3,1) = 4");
        ExactPoly target11 = (x * x - y * y) * (one - y * y);
        InterpResult r11 = solve_interpolation(Partition::parse("1,1"), pr11);
        f.expect((r11.poly * Scalar(16) - target11).is_zero(), "I_(1,1) = (x^2-y^2)(1-y^2)/16");
    }
    // extra vanishing with slack 3
    auto sweep = [&](SusyProfile prof, int dmax) {
        for (const Partition& mu :
             enumerate_hooks(HookProfile{prof.p, prof.q}, dmax, EnumMode::UpToSize)) {
            InterpResult r = solve_interpolation(mu, prof);
            VanishingReport rep = verify_extra_vanishing(r, mu, prof, 3);
            std::ostringstream os;
            os << "extra vanishing, (p,q)=(" << prof.p << "," << prof.q << ") mu=" << mu.str()
               << ": " << rep.failures.size() << " failures";
            f.expect(rep.failures.empty(), os.str());
        }
    };
    sweep(pr11, 4);
    sweep(SusyProfile{2, 1}, 3);
    sweep(SusyProfile{1, 2}, 3);
    return f;
}

// ---- criterion 5: generic-parameter triangularity -----------------------

Failures criterion_triangular() {
    Failures f;
    SusyProfile pr{1, 1};
    for (Scalar k : {Scalar(-3), Scalar(-5, 7)}) {
        DeformedParams par{k, Scalar(2)};
        EvalTable t = evaluation_table(pr, par, 3);
        bool tri = true, diag = true;
        std::string cell;
        for (size_t r = 0; r < t.index.size(); ++r) {
            if (t.entries[r][r].is_zero()) {
                diag = false;
                cell = "diagonal J_" + t.index[r].str() + "(" + t.index[r].str() + "^nat) = 0";
            }
            for (size_t c = 0; c < r; ++c)
                if (!t.entries[r][c].is_zero()) tri = false;
        }
        std::ostringstream os;
        os << "k=" << k.str() << ", h=2: upper triangular with nonzero diagonal";
        if (!cell.empty()) os << " [" << cell << "]";
        f.expect(tri && diag, os.str());
    }
    return f;
}

// ---- criterion 6: finite-dimensionality engine ---------------------------

Failures criterion_fd() {
    Failures f;
    for (int p = 1; p <= 3; ++p)
        for (int q = 1; q <= 3; ++q) {
            HookProfile prof{p, q};
            for (const Partition& lam : enumerate_hooks(prof, 6, EnumMode::UpToSize)) {
                FdReport rep = verify_fd(lam, prof);
                std::ostringstream os;
                os << "verify_fd (p,q)=(" << p << "," << q << ") lambda=" << lam.str();
                f.expect(rep.passed(), os.str());
            }
        }
    for (int a = 1; a <= 5; ++a)
        for (int b = 0; b <= 4; ++b) {
            std::array<int, 4> got = kac_weight_11(a, b);
            std::array<int, 4> want = (b != a - 1)
                                          ? std::array<int, 4>{a, -a + 2, b - 1, -b - 1}
                                          : std::array<int, 4>{a, -b, b, -a};
            std::ostringstream os;
            os << "kac weight branch at (a,b)=(" << a << "," << b << ")";
            f.expect(got == want, os.str());
        }
    return f;
}

// ---- criterion 7: sphericity sweep ---------------------------------------

Failures criterion_sphericity() {
    Failures f;
    for (int a = 1; a <= 5; ++a)
        for (int b = 0; b <= 4; ++b) {
            KacWeight hw = kac_weight_of_hook(a, b);
            KacModule km(hw);
            auto sph = km.spherical_vectors();
            std::ostringstream tag;
            tag << "(a,b)=(" << a << "," << b << ")";
            if (b != a - 1) {
                f.expect(sph.size() == 1, tag.str() + " spherical space 1-dimensional");
                if (sph.size() == 1) {
                    bool shape = sph[0].size() == 1 &&
                                 sph[0].begin()->first.mask ==
                                     ((1u << gl22::xi11) | (1u << gl22::xi22));
                    f.expect(shape, tag.str() + " spherical vector is xi11^xi22 (x) v");
                }
                f.expect(typicality(hw), tag.str() + " typical");
            } else {
                f.expect(sph.empty(), tag.str() + " no spherical vector");
                QuasiSphericalReport rep =
                    quasi_spherical_check(hw, quasi_spherical_candidate(km));
                f.expect(rep.passed(), tag.str() + " quasi-spherical check");
                f.expect(!typicality(hw), tag.str() + " atypical");
            }
        }
    return f;
}

// ---- criterion 8: Gamma(D_mu) proportional to I_mu ------------------------

Failures criterion_main(std::vector<Scalar>* c_values = nullptr) {
    Failures f;
    for (const Partition& mu : enumerate_hooks(HookProfile{1, 1}, 3, EnumMode::UpToSize)) {
        ShimuraVerification v = verify_shimura(mu, 2);
        f.expect(v.in_ring, "Gamma(D_" + mu.str() + ") in the even supersymmetric ring");
        f.expect(v.proportional && !v.c_mu.is_zero(),
                 "Gamma(D_" + mu.str() + ") = c I_" + mu.str() + " with c != 0");
        f.expect(v.vanishing_failures.empty(), "Gamma(D_" + mu.str() + ") vanishing");
        if (c_values) c_values->push_back(v.c_mu);
    }
    return f;
}

// ---- criterion 9: eigenvalue consistency ----------------------------------

Failures criterion_eigen() {
    Failures f;
    ShimuraOp d1 = shimura_operator(Partition::parse("1"));
    ExactPoly gd1 = gamma_of_shimura(Partition::parse("1"));
    for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {3, 1}}) {
        KacWeight hw = kac_weight_of_hook(a, b);
        KacModule km(hw);
        auto sph = km.spherical_vectors();
        std::ostringstream tag;
        tag << "(a,b)=(" << a << "," << b << ")";
        if (sph.size() != 1) {
            f.expect(false, tag.str() + " spherical space 1-dimensional");
            continue;
        }
        KacVector img = km.act_elt(d1.element, sph[0]);
        Scalar scal;
        bool prop = kac_proportional(img, sph[0], scal);
        Scalar via_hc = gd1.eval({Scalar(2 * a - 1), Scalar(2 * b + 1)});
        f.expect(prop, tag.str() + " D_(1) acts by a scalar");
        f.expect(prop && scal == via_hc,
                 tag.str() + " module scalar " + scal.str() + " = Gamma value " + via_hc.str());
    }
    return f;
}

}  // namespace

std::vector<CheckResult> run_all(std::ostream& os) {
    std::vector<std::pair<std::string, std::function<Failures()>>> entries = {
        {"1. superbracket table (64 entries) and super-Jacobi (4096 triples)",
         [] { return criterion_brackets(); }},
        {"2. restricted root data and Weyl vector", [] { return criterion_roots(); }},
        {"3. ring dimensions match hook counts", [] { return criterion_dims(); }},
        {"4. interpolation polynomials and extra vanishing", [] { return criterion_interp(); }},
        {"5. generic-parameter triangularity (k=-3, k=-5/7; h=2)",
         [] { return criterion_triangular(); }},
        {"6. finite-dimensionality engine and Kac weight branches",
         [] { return criterion_fd(); }},
        {"7. sphericity and quasi-sphericity sweep (a<=5, b<=4)",
         [] { return criterion_sphericity(); }},
        {"8. Gamma(D_mu) = c_mu I_mu for |mu| <= 3", [] { return criterion_main(); }},
        {"9. eigenvalue consistency through the Kac module",
         [] { return criterion_eigen(); }},
    };
    std::vector<CheckResult> results;
    for (auto& [id, run] : entries) {
        auto t0 = Clock::now();
        Failures f;
        try {
            f = run();
        } catch (const std::exception& e) {
            f.expect(false, std::string("exception: ") + e.what());
        }
        auto t1 = Clock::now();
        CheckResult r;
        r.id = id;
        r.passed = f.items.empty();
        r.expected = std::to_string(f.checks) + " sub-checks pass";
        r.actual = f.summary("all " + std::to_string(f.checks) + " sub-checks pass");
        r.seconds = std::chrono::duration<double>(t1 - t0).count();
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " -- " << r.actual << "\n";
        results.push_back(std::move(r));
    }
    double total = 0;
    int passed = 0;
    for (const auto& r : results) {
        total += r.seconds;
        passed += r.passed;
    }
    os << passed << "/" << results.size() << " criteria passed";
    char buf[32];
    std::snprintf(buf, sizeof buf, " [%.2fs]", total);
    os << buf << "\n";
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace superbc::accept
