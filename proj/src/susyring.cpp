#include "superbc/susyring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "superbc/linalg.hpp"
#include "superbc/partition.hpp"

namespace superbc {

std::vector<std::string> xy_vars(const SusyProfile& prof) {
    std::vector<std::string> v;
    for (int i = 1; i <= prof.p; ++i) v.push_back("x" + std::to_string(i));
    for (int j = 1; j <= prof.q; ++j) v.push_back("y" + std::to_string(j));
    return v;
}

std::vector<std::string> zw_vars(const SusyProfile& prof) {
    std::vector<std::string> v;
    for (int i = 1; i <= prof.p; ++i) v.push_back("z" + std::to_string(i));
    for (int j = 1; j <= prof.q; ++j) v.push_back("w" + std::to_string(j));
    return v;
}

int rho_bosonic(const SusyProfile& prof, int i) { return 2 * (prof.p - i) + 1 - 2 * prof.q; }
int rho_fermionic(const SusyProfile& prof, int j) { return 2 * (prof.q - j) + 1; }

Scalar varrho_bosonic(const DeformedParams& par, int i) {
    return -(par.h + par.k * Scalar(i));
}

Scalar varrho_fermionic(const SusyProfile& prof, const DeformedParams& par, int j) {
    Scalar inner = par.h + par.k * Scalar(1, 2) - Scalar(1, 2) + Scalar(j) + par.k * Scalar(prof.p);
    return -(inner / par.k);
}

namespace {

std::vector<Partition> partitions_up_to_length(int size, int max_len) {
    std::vector<Partition> out;
    for (const Partition& a : all_partitions(size))
        if (a.length() <= max_len) out.push_back(a);
    std::sort(out.begin(), out.end());
    return out;
}

// monomial symmetric polynomial m_a evaluated at squared shifted variables
// (vars[offset+i] - shift[i])^2, i < nvar
ExactPoly monomial_sym_sq(const std::vector<std::string>& vars, int offset, int nvar,
                          const Partition& a, const std::vector<Scalar>& shift) {
    ExactPoly out(vars);
    std::vector<int> expo(nvar, 0);
    for (int i = 0; i < a.length(); ++i) expo[i] = a.part(i);
    std::sort(expo.begin(), expo.end());
    // squared shifted variables, cached powers
    std::vector<std::vector<ExactPoly>> pw(nvar);
    auto sq_power = [&](int i, int e) -> const ExactPoly& {
        auto& cache = pw[i];
        if (cache.empty()) {
            ExactPoly lin = ExactPoly::variable(vars, offset + i);
            if (!shift[i].is_zero()) lin -= ExactPoly::constant(vars, shift[i]);
            cache.push_back(lin * lin);
        }
        while ((int)cache.size() < e) cache.push_back(cache.back() * cache[0]);
        return cache[e - 1];
    };
    do {
        ExactPoly term = ExactPoly::constant(vars, Scalar(1));
        for (int i = 0; i < nvar; ++i)
            if (expo[i] > 0) term = term * sq_power(i, expo[i]);
        out += term;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return out;
}

std::vector<ExactPoly> shifted_even_basis(const std::vector<std::string>& vars,
                                          const SusyProfile& prof, int d,
                                          const std::vector<Scalar>& shift_b,
                                          const std::vector<Scalar>& shift_f) {
    std::vector<ExactPoly> out;
    for (int k = 0; k <= d; ++k)
        for (int sa = k; sa >= 0; --sa) {
            int sb = k - sa;
            for (const Partition& a : partitions_up_to_length(sa, prof.p))
                for (const Partition& b : partitions_up_to_length(sb, prof.q)) {
                    ExactPoly fa = monomial_sym_sq(vars, 0, prof.p, a, shift_b);
                    ExactPoly fb = monomial_sym_sq(vars, prof.p, prof.q, b, shift_f);
                    out.push_back(fa * fb);
                }
        }
    return out;
}

ExactPoly substitute_one(const ExactPoly& f, int var, const AffineExpr& image) {
    std::vector<AffineExpr> assign;
    int n = f.nvars();
    for (int i = 0; i < n; ++i) {
        AffineExpr ax;
        ax.constant = Scalar(0);
        ax.coeffs.assign(n, Scalar(0));
        if (i == var)
            ax = image;
        else
            ax.coeffs[i] = Scalar(1);
        if ((int)ax.coeffs.size() != n) ax.coeffs.resize(n, Scalar(0));
        assign.push_back(ax);
    }
    return f.substitute(f.vars(), assign);
}

AffineExpr affine_const(int n, const Scalar& c) {
    AffineExpr ax;
    ax.constant = c;
    ax.coeffs.assign(n, Scalar(0));
    return ax;
}

AffineExpr affine_var(int n, int i, const Scalar& coeff, const Scalar& c) {
    AffineExpr ax = affine_const(n, c);
    ax.coeffs[i] = coeff;
    return ax;
}

// f(..., v_i + si, ..., v_j + sj, ...) for two distinct variables
ExactPoly shift_two(const ExactPoly& f, int i, const Scalar& si, int j, const Scalar& sj) {
    int n = f.nvars();
    std::vector<AffineExpr> assign;
    for (int v = 0; v < n; ++v) {
        AffineExpr ax = affine_var(n, v, Scalar(1), Scalar(0));
        if (v == i) ax.constant = si;
        if (v == j) ax.constant = sj;
        assign.push_back(ax);
    }
    return f.substitute(f.vars(), assign);
}

// translation-defect polynomial for the specialized ring: restricted to the
// hyperplane y_j = -x_i
ExactPoly lambda0_defect(const ExactPoly& f, const SusyProfile& prof, int i, int j) {
    int xi = i - 1, yj = prof.p + j - 1;
    ExactPoly g = shift_two(f, xi, Scalar(1), yj, Scalar(-1)) - f;
    return substitute_one(g, yj, affine_var(f.nvars(), xi, Scalar(-1), Scalar(0)));
}

// deformed defect: hyperplane (X - varrho, e_i - d_j) + (1+k)/2 = 0, with
// (e,e) = 1 and (d,d) = k, solved for z_i
ExactPoly lambda_rho_defect(const ExactPoly& f, const SusyProfile& prof,
                            const DeformedParams& par, int i, int j) {
    int zi = i - 1, wj = prof.p + j - 1;
    ExactPoly g = shift_two(f, zi, Scalar(1), wj, Scalar(-1)) - f;
    Scalar c = varrho_bosonic(par, i) - par.k * varrho_fermionic(prof, par, j) -
               (Scalar(1) + par.k) / Scalar(2);
    return substitute_one(g, zi, affine_var(f.nvars(), wj, par.k, c));
}

RingBasis build_ring_basis(const SusyProfile& prof, int d, bool deformed,
                           const DeformedParams& par) {
    RingBasis rb;
    rb.prof = prof;
    rb.deformed = deformed;
    rb.params = par;
    rb.vars = deformed ? zw_vars(prof) : xy_vars(prof);
    std::vector<Scalar> sb(prof.p, Scalar(0)), sf(prof.q, Scalar(0));
    if (deformed) {
        for (int i = 1; i <= prof.p; ++i) sb[i - 1] = varrho_bosonic(par, i);
        for (int j = 1; j <= prof.q; ++j) sf[j - 1] = varrho_fermionic(prof, par, j);
    }
    rb.ambient = shifted_even_basis(rb.vars, prof, d, sb, sf);
    int n = (int)rb.ambient.size();
    if (prof.p == 0 || prof.q == 0) {
        // no isotropic pair: the ring is the whole even-symmetric span
        for (int m = 0; m < n; ++m) {
            std::vector<Scalar> c(n, Scalar(0));
            c[m] = Scalar(1);
            rb.coords.push_back(c);
            rb.elems.push_back(rb.ambient[m]);
        }
        return rb;
    }
    // impose the (1,1) translation constraint on the span
    std::vector<ExactPoly> defect;
    std::map<ExactPoly::Exponents, int> row_of;
    for (int m = 0; m < n; ++m) {
        defect.push_back(deformed ? lambda_rho_defect(rb.ambient[m], prof, par, 1, 1)
                                  : lambda0_defect(rb.ambient[m], prof, 1, 1));
        for (const auto& [e, c] : defect.back().terms())
            row_of.emplace(e, (int)row_of.size());
    }
    ExactMatrix mat((int)row_of.size(), n);
    for (int m = 0; m < n; ++m)
        for (const auto& [e, c] : defect[m].terms()) mat.at(row_of[e], m) = c;
    rb.coords = nullspace(mat);
    for (const auto& c : rb.coords) {
        ExactPoly f(rb.vars);
        for (int m = 0; m < n; ++m)
            if (!c[m].is_zero()) f += rb.ambient[m] * c[m];
        rb.elems.push_back(f);
    }
    return rb;
}

}  // namespace

std::vector<ExactPoly> even_sym_basis(const SusyProfile& prof, int d) {
    std::vector<Scalar> sb(prof.p, Scalar(0)), sf(prof.q, Scalar(0));
    return shifted_even_basis(xy_vars(prof), prof, d, sb, sf);
}

RingBasis lambda0_basis(const SusyProfile& prof, int d) {
    return build_ring_basis(prof, d, false, DeformedParams{Scalar(1), Scalar(0)});
}

RingBasis lambda_rho_basis(const SusyProfile& prof, const DeformedParams& par, int d) {
    if (par.k.is_zero()) throw std::invalid_argument("lambda_rho_basis: k must be nonzero");
    return build_ring_basis(prof, d, true, par);
}

namespace {

bool shifted_w0_invariant(const ExactPoly& f, const SusyProfile& prof,
                          const std::vector<Scalar>& shifts) {
    int n = f.nvars();
    auto swap_vars = [&](int i, int j) {
        std::vector<AffineExpr> assign;
        for (int v = 0; v < n; ++v) {
            if (v == i)
                assign.push_back(affine_var(n, j, Scalar(1), shifts[i] - shifts[j]));
            else if (v == j)
                assign.push_back(affine_var(n, i, Scalar(1), shifts[j] - shifts[i]));
            else
                assign.push_back(affine_var(n, v, Scalar(1), Scalar(0)));
        }
        return f.substitute(f.vars(), assign);
    };
    for (int i = 0; i + 1 < prof.p; ++i)
        if (!(swap_vars(i, i + 1) == f)) return false;
    for (int j = 0; j + 1 < prof.q; ++j)
        if (!(swap_vars(prof.p + j, prof.p + j + 1) == f)) return false;
    for (int v = 0; v < n; ++v) {
        ExactPoly g = substitute_one(f, v, affine_var(n, v, Scalar(-1), Scalar(2) * shifts[v]));
        if (!(g == f)) return false;
    }
    return true;
}

}  // namespace

bool is_w0_invariant(const ExactPoly& f, const SusyProfile& prof) {
    std::vector<Scalar> shifts(prof.p + prof.q, Scalar(0));
    return shifted_w0_invariant(f, prof, shifts);
}

bool translation_holds(const ExactPoly& f, const SusyProfile& prof, int i, int j) {
    return lambda0_defect(f, prof, i, j).is_zero();
}

bool is_in_lambda0(const ExactPoly& f, const SusyProfile& prof) {
    if (!is_w0_invariant(f, prof)) return false;
    for (int i = 1; i <= prof.p; ++i)
        for (int j = 1; j <= prof.q; ++j)
            if (!translation_holds(f, prof, i, j)) return false;
    return true;
}

bool is_in_lambda_rho(const ExactPoly& f, const SusyProfile& prof, const DeformedParams& par) {
    std::vector<Scalar> shifts;
    for (int i = 1; i <= prof.p; ++i) shifts.push_back(varrho_bosonic(par, i));
    for (int j = 1; j <= prof.q; ++j) shifts.push_back(varrho_fermionic(prof, par, j));
    if (!shifted_w0_invariant(f, prof, shifts)) return false;
    for (int i = 1; i <= prof.p; ++i)
        for (int j = 1; j <= prof.q; ++j)
            if (!lambda_rho_defect(f, prof, par, i, j).is_zero()) return false;
    return true;
}

ExactPoly tau_map(const ExactPoly& f, const SusyProfile& prof) {
    if (f.nvars() != prof.p + prof.q)
        throw std::invalid_argument("tau_map: variable count mismatch");
    std::vector<std::string> target = xy_vars(prof);
    int n = prof.p + prof.q;
    std::vector<AffineExpr> assign;
    for (int i = 1; i <= prof.p; ++i)
        assign.push_back(affine_var(n, i - 1, Scalar(1, 2), Scalar(-rho_bosonic(prof, i), 2)));
    for (int j = 1; j <= prof.q; ++j)
        assign.push_back(
            affine_var(n, prof.p + j - 1, Scalar(1, 2), Scalar(-rho_fermionic(prof, j), 2)));
    return f.substitute(target, assign);
}

namespace {
// Bernoulli numbers, b_1 = -1/2 convention
const std::vector<mpq_class>& bernoulli_numbers(int n) {
    static std::vector<mpq_class> cache{mpq_class(1)};
    while ((int)cache.size() <= n) {
        int m = (int)cache.size();
        // sum_{j=0}^{m} C(m+1,j) b_j = 0
        mpq_class acc = 0;
        mpz_class binom = 1; // C(m+1, 0)
        for (int j = 0; j < m; ++j) {
            acc += binom * cache[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        cache.push_back(-acc / mpq_class(m + 1));
    }
    return cache;
}
}  // namespace

ExactPoly bernoulli_poly(int n) {
    const auto& b = bernoulli_numbers(n);
    ExactPoly f({"t"});
    mpz_class binom = 1;
    for (int k = 0; k <= n; ++k) {
        f.add_term({k}, Scalar(mpq_class(binom) * b[n - k]));
        binom = binom * (n - k) / (k + 1);
    }
    return f;
}

ExactPoly bernoulli_generator(int l, const SusyProfile& prof, const DeformedParams& par) {
    if (l < 1) throw std::invalid_argument("bernoulli_generator: l >= 1 required");
    if (par.k.is_zero()) throw std::invalid_argument("bernoulli_generator: k must be nonzero");
    ExactPoly b2l = bernoulli_poly(2 * l);
    std::vector<std::string> vars = zw_vars(prof);
    int n = prof.p + prof.q;
    ExactPoly out(vars);
    auto b_at = [&](const AffineExpr& arg) {
        return b2l.substitute(vars, {arg});
    };
    for (int i = 1; i <= prof.p; ++i) {
        Scalar c = par.h + par.k * Scalar(i) + Scalar(1, 2);
        out += b_at(affine_var(n, i - 1, Scalar(1), c)) - b_at(affine_const(n, c));
    }
    Scalar kinv = par.k.inverse();
    Scalar kpow(1); // k^(2l-1)
    for (int t = 0; t < 2 * l - 1; ++t) kpow *= par.k;
    for (int j = 1; j <= prof.q; ++j) {
        Scalar c = par.h * kinv - kinv * Scalar(1, 2) + Scalar(j) * kinv + Scalar(1 + prof.p);
        ExactPoly diff =
            b_at(affine_var(n, prof.p + j - 1, Scalar(1), c)) - b_at(affine_const(n, c));
        out += diff * kpow;
    }
    return out;
}

bool groupoid_equivalence_check(const ExactPoly& f, const SusyProfile& prof) {
    bool all_pairs = is_in_lambda0(f, prof);
    bool one_pair = is_w0_invariant(f, prof) &&
                    (prof.p == 0 || prof.q == 0 || translation_holds(f, prof, 1, 1));
    return all_pairs == one_pair;
}

}  // namespace superbc
