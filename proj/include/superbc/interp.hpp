// Interpolation polynomials of Type BC: the unique (suitably normalized)
// ring element of degree 2|mu| vanishing at the prescribed partition
// points. Specialized ring uses points 2*lambda^natural + rho; the deformed
// ring uses lambda^natural directly.
#ifndef SUPERBC_INTERP_HPP
#define SUPERBC_INTERP_HPP

#include <string>
#include <vector>

#include "superbc/partition.hpp"
#include "superbc/poly.hpp"
#include "superbc/susyring.hpp"

namespace superbc {

struct RhoVector {
    std::vector<Scalar> bosonic;   // 2(p-i)+1-2q
    std::vector<Scalar> fermionic; // 2(q-j)+1
    std::vector<Scalar> concat() const;
};

RhoVector rho(const SusyProfile& prof);

// 2*lambda^natural + rho, bosonic then fermionic; rejects non-hooks
std::vector<Scalar> eval_point(const Partition& lam, const SusyProfile& prof);

// lambda^natural as a point (deformed pipeline; no doubling, no shift)
std::vector<Scalar> natural_point(const Partition& lam, const SusyProfile& prof);

// product over boxes of mu: (mu_i - j + mu'_j - i + 1)(mu_i + j - mu'_j - i + 2p - 2q)
Scalar normalization_value(const Partition& mu, const SusyProfile& prof);

// deformed product: (mu_i - j - k(mu'_j - i) + 1)(mu_i + j + k(mu'_j + i) + 2h - 1)
Scalar general_normalization(const Partition& mu, const DeformedParams& par);

struct InterpResult {
    Partition mu;
    SusyProfile prof;
    bool deformed = false;
    DeformedParams params;
    ExactPoly poly;
    int solution_dim = 0;       // dimension of the vanishing-constraint nullspace
    Scalar normalization;       // the normalization product used (or found zero)
    bool degenerate = false;    // leading-coefficient scaling used instead
    std::string constraints;    // description of the constraint set
    // evaluation at the point associated with lam under this result's convention
    Scalar value_at(const Partition& lam) const;
};

InterpResult solve_interpolation(const Partition& mu, const SusyProfile& prof);

InterpResult solve_general(const Partition& mu, const SusyProfile& prof,
                           const DeformedParams& par);

struct VanishingReport {
    std::vector<Partition> failures; // hooks not containing mu where poly != 0
    int checked = 0;
};

// checks vanishing at every hook lam with lam not containing mu,
// |lam| <= |mu| + slack
VanishingReport verify_extra_vanishing(const InterpResult& res, const Partition& mu,
                                       const SusyProfile& prof, int slack);

// evaluation matrix [P_mu(point(lam))] over all |mu|,|lam| <= d in the fixed
// partition order; P = I (specialized) or J (deformed)
struct EvalTable {
    std::vector<Partition> index;
    std::vector<std::vector<Scalar>> entries; // entries[mu][lam]
    bool upper_triangular_nonzero_diagonal() const;
};

EvalTable evaluation_table(const SusyProfile& prof, int d);
EvalTable evaluation_table(const SusyProfile& prof, const DeformedParams& par, int d);

}  // namespace superbc

#endif
