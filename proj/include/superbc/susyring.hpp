// The ring of even supersymmetric polynomials: separately symmetric and
// sign-invariant in two variable groups, with translation invariance on
// the isotropic hyperplanes x_i + y_j = 0. Also its deformed analogue
// with parameters (k, h), where evenness holds in rho-shifted variables
// and the hyperplanes are deformed accordingly.
#ifndef SUPERBC_SUSYRING_HPP
#define SUPERBC_SUSYRING_HPP

#include <vector>

#include "superbc/poly.hpp"
#include "superbc/scalar.hpp"

namespace superbc {

struct SusyProfile {
    int p = 1;
    int q = 1; // q = 0 degenerates to one plain type-BC block
};

struct DeformedParams {
    Scalar k; // must be nonzero; generic means k not a positive rational
    Scalar h;
};

// variable name lists: x1..xp,y1..yq (specialized ring) and z1..zp,w1..wq
// (deformed ring)
std::vector<std::string> xy_vars(const SusyProfile& prof);
std::vector<std::string> zw_vars(const SusyProfile& prof);

// Weyl-vector components: rho_B(i) = 2(p-i)+1-2q, rho_F(j) = 2(q-j)+1
// (1-based i,j)
int rho_bosonic(const SusyProfile& prof, int i);
int rho_fermionic(const SusyProfile& prof, int j);

// shifts of the deformed ring: varrho_B(i) = -(h+k i),
// varrho_F(j) = -(h + k/2 - 1/2 + j + k p)/k
Scalar varrho_bosonic(const DeformedParams& par, int i);
Scalar varrho_fermionic(const SusyProfile& prof, const DeformedParams& par, int j);

// basis of sign- and permutation-invariant polynomials of degree <= 2d:
// products m_a(x^2) m_b(y^2) over partition pairs with len(a) <= p,
// len(b) <= q, |a|+|b| <= d; fixed deterministic order
std::vector<ExactPoly> even_sym_basis(const SusyProfile& prof, int d);

// a ring basis together with its coordinates over the ambient even basis;
// the ambient order is the normalization reference for degenerate solves
struct RingBasis {
    SusyProfile prof;
    std::vector<std::string> vars;
    bool deformed = false;
    DeformedParams params;
    std::vector<ExactPoly> ambient;
    std::vector<std::vector<Scalar>> coords; // coords[i] over ambient
    std::vector<ExactPoly> elems;
};

// basis of Lambda^0 intersected with degree <= 2d, obtained by imposing the
// translation constraint for the pair (1,1) on the even-symmetric span
RingBasis lambda0_basis(const SusyProfile& prof, int d);

// deformed analogue over z/w variables
RingBasis lambda_rho_basis(const SusyProfile& prof, const DeformedParams& par, int d);

// W0-invariance alone: symmetric in each group and even in every variable
bool is_w0_invariant(const ExactPoly& f, const SusyProfile& prof);

// translation condition for one isotropic pair (1-based i,j)
bool translation_holds(const ExactPoly& f, const SusyProfile& prof, int i, int j);

// full membership: W0-invariance plus translation for every pair (i,j)
bool is_in_lambda0(const ExactPoly& f, const SusyProfile& prof);

// deformed membership: shifted evenness plus deformed-hyperplane translation
bool is_in_lambda_rho(const ExactPoly& f, const SusyProfile& prof, const DeformedParams& par);

// change of variables z_i -> (x_i - rho_B(i))/2, w_j -> (y_j - rho_F(j))/2;
// satisfies f(lambda^natural) = tau(f)(2 lambda^natural + rho)
ExactPoly tau_map(const ExactPoly& f, const SusyProfile& prof);

// Bernoulli polynomial B_n(t) over the single variable "t", exact rationals
ExactPoly bernoulli_poly(int n);

// deformed power-sum generator built from even Bernoulli polynomials; lies
// in the deformed ring, and tau of it lies in Lambda^0 at k=-1, h=p-q+1/2
ExactPoly bernoulli_generator(int l, const SusyProfile& prof, const DeformedParams& par);

// agreement of the two membership characterizations: all-hyperplane
// translation vs the single (1,1) hyperplane (given W0-invariance)
bool groupoid_equivalence_check(const ExactPoly& f, const SusyProfile& prof);

}  // namespace superbc

#endif
