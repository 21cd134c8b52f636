#include "superbc/interp.hpp"

#include <stdexcept>

#include "superbc/linalg.hpp"

namespace superbc {

std::vector<Scalar> RhoVector::concat() const {
    std::vector<Scalar> v = bosonic;
    v.insert(v.end(), fermionic.begin(), fermionic.end());
    return v;
}

RhoVector rho(const SusyProfile& prof) {
    RhoVector r;
    for (int i = 1; i <= prof.p; ++i) r.bosonic.push_back(Scalar(rho_bosonic(prof, i)));
    for (int j = 1; j <= prof.q; ++j) r.fermionic.push_back(Scalar(rho_fermionic(prof, j)));
    return r;
}

namespace {
HookProfile hook_of(const SusyProfile& prof) { return HookProfile{prof.p, prof.q}; }
}  // namespace

std::vector<Scalar> eval_point(const Partition& lam, const SusyProfile& prof) {
    NaturalCoords nc = lambda_natural(lam, hook_of(prof));
    std::vector<Scalar> pt;
    for (int i = 0; i < prof.p; ++i)
        pt.push_back(Scalar(2 * nc.bosonic[i] + rho_bosonic(prof, i + 1)));
    for (int j = 0; j < prof.q; ++j)
        pt.push_back(Scalar(2 * nc.fermionic[j] + rho_fermionic(prof, j + 1)));
    return pt;
}

std::vector<Scalar> natural_point(const Partition& lam, const SusyProfile& prof) {
    NaturalCoords nc = lambda_natural(lam, hook_of(prof));
    std::vector<Scalar> pt;
    for (int v : nc.bosonic) pt.push_back(Scalar(v));
    for (int v : nc.fermionic) pt.push_back(Scalar(v));
    return pt;
}

Scalar normalization_value(const Partition& mu, const SusyProfile& prof) {
    if (!is_hook(mu, hook_of(prof)))
        throw std::invalid_argument("normalization_value: not a hook partition");
    Partition mt = mu.transpose();
    Scalar prod(1);
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i - 1); ++j) {
            long f1 = mu.part(i - 1) - j + mt.part(j - 1) - i + 1;
            long f2 = mu.part(i - 1) + j - mt.part(j - 1) - i + 2 * prof.p - 2 * prof.q;
            prod *= Scalar(f1) * Scalar(f2);
        }
    return prod;
}

Scalar general_normalization(const Partition& mu, const DeformedParams& par) {
    Partition mt = mu.transpose();
    Scalar prod(1);
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i - 1); ++j) {
            Scalar f1 = Scalar(mu.part(i - 1) - j + 1) - par.k * Scalar(mt.part(j - 1) - i);
            Scalar f2 = Scalar(mu.part(i - 1) + j - 1) + par.k * Scalar(mt.part(j - 1) + i) +
                        par.h * Scalar(2);
            prod *= f1 * f2;
        }
    return prod;
}

Scalar InterpResult::value_at(const Partition& lam) const {
    return poly.eval(deformed ? natural_point(lam, prof) : eval_point(lam, prof));
}

namespace {

struct SolveContext {
    const RingBasis& basis;
    bool deformed;
    const SusyProfile& prof;

    std::vector<Scalar> point(const Partition& lam) const {
        return deformed ? natural_point(lam, prof) : eval_point(lam, prof);
    }
    std::vector<Scalar> row_at(const Partition& lam) const {
        std::vector<Scalar> row;
        std::vector<Scalar> pt = point(lam);
        for (const ExactPoly& b : basis.elems) row.push_back(b.eval(pt));
        return row;
    }
};

InterpResult solve_core(const Partition& mu, const SusyProfile& prof, bool deformed,
                        const DeformedParams& par, const RingBasis& basis,
                        const Scalar& norm) {
    if (!is_hook(mu, HookProfile{prof.p, prof.q}))
        throw std::invalid_argument("interpolation solve: mu must be a hook partition");
    SolveContext ctx{basis, deformed, prof};
    int n = (int)basis.elems.size();
    InterpResult res;
    res.mu = mu;
    res.prof = prof;
    res.deformed = deformed;
    res.params = par;
    res.normalization = norm;

    ExactMatrix vanishing(0, n);
    int d = mu.size();
    std::vector<Partition> vanish_at;
    for (const Partition& lam : enumerate_hooks(HookProfile{prof.p, prof.q}, d, EnumMode::UpToSize))
        if (lam != mu) vanish_at.push_back(lam);
    for (const Partition& lam : vanish_at) vanishing.append_row(ctx.row_at(lam));
    res.constraints = "vanishing at " + std::to_string(vanish_at.size()) +
                      " points of size <= " + std::to_string(d);
    res.degenerate = norm.is_zero();

    // At the specialized parameters distinct small hooks can give
    // W0-equivalent points (e.g. the empty partition and a single box at
    // p=q=1), so the reduced set may underdetermine the solution. Extra
    // vanishing at hooks not containing mu cuts the space down again; a
    // failure after slack 3 is reported, never papered over.
    std::vector<Scalar> coeffs;
    int extra = 0;
    for (;;) {
        std::vector<std::vector<Scalar>> ker = nullspace(vanishing);
        if (ker.empty())
            throw std::runtime_error("interpolation solve: empty solution space for mu=" +
                                     mu.str());
        if (ker.size() == 1) {
            res.solution_dim = 1;
            if (res.degenerate) {
                coeffs = ker[0];
            } else {
                ExactMatrix sys = vanishing;
                sys.append_row(ctx.row_at(mu));
                std::vector<Scalar> rhs(sys.rows(), Scalar(0));
                rhs.back() = norm;
                SolveResult sol = solve(sys, rhs);
                if (sol.status != SolveResult::Status::Unique)
                    throw std::runtime_error(
                        "interpolation solve: inconsistent constraints for mu=" + mu.str());
                coeffs = sol.solution;
            }
            break;
        }
        if (extra == 3)
            throw std::runtime_error(
                "interpolation solve: solution space still " + std::to_string(ker.size()) +
                "-dimensional after extra-vanishing enlargement, mu=" + mu.str());
        ++extra;
        int added = 0;
        for (const Partition& lam :
             enumerate_hooks(HookProfile{prof.p, prof.q}, d + extra, EnumMode::ExactSize))
            if (!contains(lam, mu)) {
                vanishing.append_row(ctx.row_at(lam));
                ++added;
            }
        res.constraints += ", +" + std::to_string(added) + " extra points of size " +
                           std::to_string(d + extra);
    }

    if (res.degenerate) {
        // scale so the first nonzero coefficient over the ambient even basis is 1
        std::vector<Scalar> amb(basis.ambient.size(), Scalar(0));
        for (int m = 0; m < n; ++m)
            for (size_t t = 0; t < amb.size(); ++t) amb[t] += coeffs[m] * basis.coords[m][t];
        for (const Scalar& lead : amb)
            if (!lead.is_zero()) {
                Scalar inv = lead.inverse();
                for (Scalar& c : coeffs) c *= inv;
                break;
            }
    }

    ExactPoly f(basis.vars);
    for (int m = 0; m < n; ++m)
        if (!coeffs[m].is_zero()) f += basis.elems[m] * coeffs[m];
    res.poly = f;
    return res;
}

}  // namespace

InterpResult solve_interpolation(const Partition& mu, const SusyProfile& prof) {
    RingBasis basis = lambda0_basis(prof, mu.size());
    Scalar norm = normalization_value(mu, prof);
    return solve_core(mu, prof, false, DeformedParams{Scalar(1), Scalar(0)}, basis, norm);
}

InterpResult solve_general(const Partition& mu, const SusyProfile& prof,
                           const DeformedParams& par) {
    if (par.k.is_rational() && par.k.re() > 0)
        throw std::invalid_argument("solve_general: k must be generic (not a positive rational)");
    RingBasis basis = lambda_rho_basis(prof, par, mu.size());
    Scalar norm = general_normalization(mu, par);
    return solve_core(mu, prof, true, par, basis, norm);
}

VanishingReport verify_extra_vanishing(const InterpResult& res, const Partition& mu,
                                       const SusyProfile& prof, int slack) {
    VanishingReport rep;
    for (const Partition& lam :
         enumerate_hooks(HookProfile{prof.p, prof.q}, mu.size() + slack, EnumMode::UpToSize)) {
        if (contains(lam, mu)) continue;
        rep.checked++;
        if (!res.value_at(lam).is_zero()) rep.failures.push_back(lam);
    }
    return rep;
}

bool EvalTable::upper_triangular_nonzero_diagonal() const {
    for (size_t r = 0; r < index.size(); ++r) {
        if (entries[r][r].is_zero()) return false;
        for (size_t c = 0; c < r; ++c)
            if (!entries[r][c].is_zero()) return false;
    }
    return true;
}

namespace {
EvalTable table_core(const SusyProfile& prof, int d, bool deformed, const DeformedParams& par) {
    EvalTable t;
    t.index = enumerate_hooks(HookProfile{prof.p, prof.q}, d, EnumMode::UpToSize);
    for (const Partition& mu : t.index) {
        InterpResult r = deformed ? solve_general(mu, prof, par) : solve_interpolation(mu, prof);
        std::vector<Scalar> row;
        for (const Partition& lam : t.index) row.push_back(r.value_at(lam));
        t.entries.push_back(std::move(row));
    }
    return t;
}
}  // namespace

EvalTable evaluation_table(const SusyProfile& prof, int d) {
    return table_core(prof, d, false, DeformedParams{Scalar(1), Scalar(0)});
}

EvalTable evaluation_table(const SusyProfile& prof, const DeformedParams& par, int d) {
    return table_core(prof, d, true, par);
}

}  // namespace superbc
