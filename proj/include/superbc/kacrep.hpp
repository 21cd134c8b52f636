// Kac modules for gl(2|2): the underlying gl(2)+gl(2) module with explicit
// ladder action, the induced module on the exterior algebra of the odd
// negative block, spherical-vector solving, and quasi-sphericity checks.
#ifndef SUPERBC_KACREP_HPP
#define SUPERBC_KACREP_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "superbc/superlie.hpp"

namespace superbc {

// highest weight (a, b | c, d) with a >= b, c >= d, standard Borel reading
struct KacWeight {
    int a, b, c, d;
    friend bool operator==(const KacWeight& x, const KacWeight& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    std::string str() const;
};

// basis key of the induced module: an exterior monomial in xi11,xi12,xi21,xi22
// (bit i of mask = generator gl22::xi11 + i present, factors in increasing
// order) tensor a ladder position (k, l) of the gl(2)+gl(2) module
struct KacKey {
    uint8_t mask;
    int k, l;
    friend bool operator<(const KacKey& x, const KacKey& y) {
        if (x.mask != y.mask) return x.mask < y.mask;
        if (x.k != y.k) return x.k < y.k;
        return x.l < y.l;
    }
    friend bool operator==(const KacKey& x, const KacKey& y) {
        return x.mask == y.mask && x.k == y.k && x.l == y.l;
    }
};

using KacVector = std::map<KacKey, Scalar>;

void kac_add(KacVector& v, const KacKey& key, const Scalar& c);
KacVector kac_scale(const KacVector& v, const Scalar& c);
bool kac_is_zero(const KacVector& v);
// v = c * w for some scalar c? returns true and sets c when proportional
bool kac_proportional(const KacVector& v, const KacVector& w, Scalar& c);

class KacModule {
  public:
    explicit KacModule(KacWeight hw);

    const KacWeight& highest_weight() const { return hw_; }
    int dim_w() const { return (ka_ + 1) * (lb_ + 1); } // underlying module
    int dim() const { return 16 * dim_w(); }

    // weight of a basis key in (e+, e-, d+, d-) coordinates
    std::array<int, 4> weight_of(const KacKey& key) const;

    // exact action of a natural-basis generator (gl22 index)
    KacVector act(int gen, const KacVector& v) const;
    // word acts rightmost letter first
    KacVector act_word(const Word& w, const KacVector& v) const;
    KacVector act_elt(const SuperElt& u, const KacVector& v) const;

    std::vector<KacKey> basis_keys() const;
    std::vector<KacKey> zero_weight_keys() const;

    // basis of the joint kernel of the eight k-generators on the zero-weight
    // subspace
    std::vector<KacVector> spherical_vectors() const;

    // ladder vector of a given weight in 1 tensor W, empty if absent
    KacVector weight_vector_in_w(const std::array<int, 4>& wt) const;

    std::string str(const KacVector& v) const;

  private:
    KacWeight hw_;
    int ka_, lb_; // ladder lengths a-b and c-d
};

// Kac highest weight of the hook (a, 1^b) at p=q=1, from the reflection path
KacWeight kac_weight_of_hook(int a, int b);

struct QuasiSphericalReport {
    bool k_orbit_spans_omega_prime = false; // k.omega = C omega'
    bool omega_cyclic = false;              // eta12.omega lands nonzero in 1(x)W
    bool degree2_annihilates = false;       // all enumerated u in U^2 kill omega'
    int enumerated = 0;                     // number of degree-2 elements applied
    std::string g0_word_bound;              // enumeration bound description
    std::vector<std::string> failures;
    bool passed() const {
        return k_orbit_spans_omega_prime && omega_cyclic && degree2_annihilates;
    }
};

// checks quasi-sphericity of omega = xi11 (x) v, v of weight (1,0|-1,0), in
// the Kac module of the b = a-1 family
QuasiSphericalReport quasi_spherical_check(const KacWeight& hw, const KacVector& omega);

// builds omega = xi11 (x) v for the b = a-1 family
KacVector quasi_spherical_candidate(const KacModule& km);

// (hw + weyl, alpha) != 0 for the four isotropic roots, supertrace form
bool typicality(const KacWeight& hw);

}  // namespace superbc

#endif
