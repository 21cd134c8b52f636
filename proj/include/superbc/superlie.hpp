// gl(m|n) structure constants from matrix realizations, enveloping-algebra
// arithmetic in a fixed PBW basis, and the Iwasawa-adapted machinery for the
// pair (gl(2|2), gl(1|1)+gl(1|1)): restricted roots, the decomposition
// n^- + a + k, and the Harish-Chandra projection/homomorphism.
#ifndef SUPERBC_SUPERLIE_HPP
#define SUPERBC_SUPERLIE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superbc/linalg.hpp"
#include "superbc/poly.hpp"
#include "superbc/scalar.hpp"

namespace superbc {

using Word = std::vector<uint8_t>; // generator indices in word order

struct Generator {
    std::string name;
    bool odd = false;
    ExactMatrix matrix; // realization in gl(m|n)
};

// element of the universal enveloping algebra: coefficient map over words
class SuperElt {
  public:
    struct WordCmp {
        bool operator()(const Word& a, const Word& b) const {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        }
    };
    using TermMap = std::map<Word, Scalar, WordCmp>;

    static SuperElt one() {
        SuperElt e;
        e.add(Word{}, Scalar(1));
        return e;
    }
    static SuperElt from_word(Word w, const Scalar& c = Scalar(1)) {
        SuperElt e;
        e.add(std::move(w), c);
        return e;
    }

    void add(Word w, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    SuperElt& operator+=(const SuperElt& o);
    SuperElt& operator-=(const SuperElt& o);
    friend SuperElt operator+(SuperElt a, const SuperElt& b) { return a += b; }
    friend SuperElt operator-(SuperElt a, const SuperElt& b) { return a -= b; }
    SuperElt operator*(const Scalar& c) const;
    friend bool operator==(const SuperElt& a, const SuperElt& b) { return a.terms_ == b.terms_; }

    int max_word_length() const;
    std::string str(const std::vector<Generator>& gens) const;

  private:
    TermMap terms_;
};

enum class RewriteStrategy { FirstViolation, LastViolation };

class SuperAlgebra {
  public:
    // gens must form a basis of gl(m|n); structure constants are computed
    // from the matrix realizations at construction
    SuperAlgebra(int m, int n, std::vector<Generator> gens);

    int size() const { return (int)gens_.size(); }
    int dim() const { return m_ + n_; }
    const Generator& gen(int i) const { return gens_[i]; }
    const std::vector<Generator>& gens() const { return gens_; }
    bool odd(int i) const { return gens_[i].odd; }
    bool word_odd(const Word& w) const;

    // supercommutator of two basis elements, expanded in the basis
    const std::vector<std::pair<int, Scalar>>& bracket(int i, int j) const {
        return brackets_[i][j];
    }
    SuperElt bracket_elt(int i, int j) const;

    // coordinates of an arbitrary matrix in this basis
    std::vector<Scalar> expand(const ExactMatrix& mat) const;

    // rewrites u into the PBW normal form for the generator order given by
    // rank (rank[i] = position of generator i); result is independent of the
    // rewrite strategy
    SuperElt normal_order(const SuperElt& u, const std::vector<int>& rank,
                          RewriteStrategy strategy = RewriteStrategy::FirstViolation) const;
    // normal form for the algebra's own generator order
    SuperElt normalize(const SuperElt& u) const { return normal_order(u, identity_rank()); }

    SuperElt mul(const SuperElt& a, const SuperElt& b) const;
    // [a, b] with per-word Koszul signs
    SuperElt super_commutator(const SuperElt& a, const SuperElt& b) const;

    std::vector<int> identity_rank() const;

  private:
    int m_, n_;
    std::vector<Generator> gens_;
    ExactMatrix expander_; // inverse of the column matrix of flattened gens
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> brackets_;
};

// the natural gl(2|2) basis in the block coordinates
//   [ .    X1   eta11 eta12 ]
//   [ Y1   .    eta21 eta22 ]
//   [ xi11 xi12 .     X2    ]
//   [ xi21 xi22 Y2    .     ]
// ordered xi < (X,Y,diag) < eta so that PBW normal form is adapted to the
// short grading g(-1) + g(0) + g(1)
namespace gl22 {
constexpr int xi11 = 0, xi12 = 1, xi21 = 2, xi22 = 3;
constexpr int X1 = 4, Y1 = 5, X2 = 6, Y2 = 7;
constexpr int E11 = 8, E22 = 9, E33 = 10, E44 = 11;
constexpr int eta11 = 12, eta12 = 13, eta21 = 14, eta22 = 15;

const SuperAlgebra& algebra();

SuperElt diag(long a, long b, long c, long d); // <abcd> as a degree-1 element
bool is_k_generator(int i);
const std::vector<int>& k_generators();      // 8 of them
const std::vector<int>& p_plus_generators();  // X1, X2, eta12, xi12
const std::vector<int>& p_minus_generators(); // Y1, Y2, eta21, xi21
}  // namespace gl22

struct RestrictedRoot {
    int cB, cF;        // root = cB*alpha_B + cF*alpha_F
    int dim_even, dim_odd;
    Scalar deformed_mult; // -1/2 (dim_even - dim_odd)
};

// the Iwasawa-adapted realization of the pair at p = q = 1
class PairRealization {
  public:
    static const PairRealization& instance();

    const SuperAlgebra& gl() const { return *gl_; }
    const SuperAlgebra& iwasawa() const { return iw_; }

    const std::vector<RestrictedRoot>& roots() const { return roots_; }
    // Weyl vector from even/odd multiplicities, in (alpha_B, alpha_F) coords
    std::pair<Scalar, Scalar> weyl_vector() const;

    int a_begin() const { return a_begin_; } // iwasawa blocks: [0,a) n^-, [a,k) a, [k,16) k
    int k_begin() const { return k_begin_; }

    SuperElt to_iwasawa(const SuperElt& u_gl) const;

    bool is_k_invariant(const SuperElt& u_gl) const;

    // pure-a component after straightening in the n^- < a < k order, as a
    // polynomial in the coordinates dual to (x1, y1)
    ExactPoly hc_projection(const SuperElt& u_iwasawa) const;

    // Harish-Chandra homomorphism on k-invariants: rho-shifted projection;
    // rejects non-invariant input
    ExactPoly gamma(const SuperElt& u_gl) const;

  private:
    PairRealization();
    const SuperAlgebra* gl_;
    std::vector<RestrictedRoot> roots_; // filled while building iw_, keep first
    SuperAlgebra iw_;
    std::vector<std::vector<std::pair<int, Scalar>>> gl_to_iw_;
    int a_begin_ = 6, k_begin_ = 8;
};

}  // namespace superbc

#endif
