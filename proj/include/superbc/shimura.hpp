// Isotypic decomposition of the symmetric superalgebra on p^+ at p=q=1,
// dual bases under the supertrace pairing, the associated invariant
// operators D_mu in the enveloping algebra, and their Harish-Chandra images.
#ifndef SUPERBC_SHIMURA_HPP
#define SUPERBC_SHIMURA_HPP

#include <array>
#include <map>
#include <vector>

#include "superbc/interp.hpp"
#include "superbc/partition.hpp"
#include "superbc/superlie.hpp"

namespace superbc {

// supercommutative polynomial on a 4-generator block (two even, two odd);
// key = exponents in the fixed slot order, odd exponents <= 1
using SymKey = std::array<int, 4>;
using SymPoly = std::map<SymKey, Scalar>;

void sym_add(SymPoly& f, const SymKey& k, const Scalar& c);
SymPoly sym_scale(const SymPoly& f, const Scalar& c);

// which block a polynomial lives in
enum class Block { PPlus, PMinus };

// gl22 generator indices of the block slots, canonical order
const std::array<int, 4>& block_slots(Block b); // {X1,X2,eta12,xi12} / {Y1,Y2,eta21,xi21}

// superderivation action of a k-generator (gl22 index) on the block
SymPoly k_action(Block b, int gen, const SymPoly& f);

// supertrace pairing of a p^- monomial against a p^+ polynomial, extended as
// composed superderivations (monomial-factorial convention)
Scalar sym_pair(const SymKey& pminus_mono, const SymPoly& pplus);
Scalar sym_pair(const SymPoly& pminus, const SymPoly& pplus);

struct IsotypicComponent {
    Partition mu;
    std::vector<SymPoly> basis;      // of W_mu in S^d(p^+)
    std::vector<SymPoly> dual_basis; // of W_mu^* in S^d(p^-), pairing = delta
};

// decomposes S^d(p^+) into its hook-indexed components (d <= 3 supported);
// errors if a highest vector is missing or not unique
std::vector<IsotypicComponent> isotypic_decomposition(int d);

// dual basis in S^d(p^-) for a given W_mu basis, via Gram inversion against
// the mirrored component; errors on a singular Gram matrix
std::vector<SymPoly> dual_basis(const Partition& mu, const std::vector<SymPoly>& w_basis);

struct ShimuraOp {
    Partition mu;
    SuperElt element; // degree 2|mu|, k-invariant
};

ShimuraOp shimura_operator(const Partition& mu); // |mu| <= 3, (1,1)-hook

// Gamma of the operator; the result lies in the even supersymmetric ring
ExactPoly gamma_of_shimura(const Partition& mu);

struct ShimuraVerification {
    ExactPoly gamma;        // Gamma(D_mu)
    ExactPoly interp;       // I_mu from the interpolation solver
    Scalar c_mu;            // Gamma(D_mu) = c_mu * I_mu
    bool proportional = false;
    bool in_ring = false;   // membership in the even supersymmetric ring
    bool degenerate_ratio = false; // c_mu from leading coefficients
    std::vector<Partition> vanishing_failures;
};

// full per-mu verification: ring membership, vanishing, proportionality
ShimuraVerification verify_shimura(const Partition& mu, int extra_slack = 2);

}  // namespace superbc

#endif
