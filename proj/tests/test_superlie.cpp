#include <doctest.h>

#include "superbc/superlie.hpp"

using namespace superbc;
using namespace superbc::gl22;

namespace {
SuperElt drop_g1(const SuperElt& u) {
    // quotient by U g1: drop normal words containing an eta
    SuperElt out;
    for (const auto& [w, c] : u.terms()) {
        bool has_eta = false;
        for (uint8_t g : w)
            if (g >= eta11) has_eta = true;
        if (!has_eta) out.add(w, c);
    }
    return out;
}
}  // namespace

TEST_CASE("named superbrackets") {
    const SuperAlgebra& g = algebra();
    CHECK(g.bracket_elt(eta11, xi11) == diag(1, 0, 1, 0));
    CHECK(g.bracket_elt(eta12, xi11) == SuperElt::from_word({X2}));
    CHECK(g.bracket_elt(eta11, eta11).is_zero());
    CHECK(g.bracket_elt(X1, Y1) == diag(1, -1, 0, 0));
    CHECK(g.bracket_elt(eta21, xi12) == diag(0, 1, 1, 0));
    CHECK(g.bracket_elt(Y2, xi11) == SuperElt::from_word({xi21}));
    CHECK(g.bracket_elt(X1, xi11) == SuperElt::from_word({xi12}) * Scalar(-1));
}

TEST_CASE("parities") {
    const SuperAlgebra& g = algebra();
    CHECK(g.odd(xi11));
    CHECK(g.odd(eta22));
    CHECK_FALSE(g.odd(X1));
    CHECK_FALSE(g.odd(E33));
    CHECK(g.word_odd({xi11, X1}));
    CHECK_FALSE(g.word_odd({xi11, eta12}));
}

TEST_CASE("straightening the motivating word") {
    const SuperAlgebra& g = algebra();
    // eta12.xi11 = X2 - xi11.eta12
    SuperElt nf = g.normalize(SuperElt::from_word({eta12, xi11}));
    SuperElt expect = SuperElt::from_word({X2});
    expect.add({xi11, eta12}, Scalar(-1));
    CHECK(nf == expect);
    // an ordered monomial is untouched
    SuperElt ordered = SuperElt::from_word({xi11, X1, eta12});
    CHECK(g.normalize(ordered) == ordered);
}

TEST_CASE("the degree-2 annihilation identities hold in the enveloping algebra") {
    const SuperAlgebra& g = algebra();
    // eta11.xi11.xi22 = xi22.<1010> mod U g1
    SuperElt lhs = g.normalize(SuperElt::from_word({eta11, xi11, xi22}));
    SuperElt rhs = g.mul(SuperElt::from_word({xi22}), diag(1, 0, 1, 0));
    CHECK(drop_g1(lhs) == drop_g1(rhs));
    // eta22.xi11.xi22 = -xi11.<0101> mod U g1
    SuperElt lhs2 = g.normalize(SuperElt::from_word({eta22, xi11, xi22}));
    SuperElt rhs2 = g.mul(SuperElt::from_word({xi11}), diag(0, 1, 0, 1)) * Scalar(-1);
    CHECK(drop_g1(lhs2) == drop_g1(rhs2));
    // eta21.eta12.xi11.xi22 = <0110> + Y2.X2 - Y1.X1 mod U g1
    SuperElt lhs3 = g.normalize(SuperElt::from_word({eta21, eta12, xi11, xi22}));
    SuperElt rhs3 = diag(0, 1, 1, 0);
    rhs3.add({Y2, X2}, Scalar(1));
    rhs3.add({Y1, X1}, Scalar(-1));
    CHECK(drop_g1(lhs3) == drop_g1(g.normalize(rhs3)));
}

TEST_CASE("normal ordering is strategy independent and idempotent") {
    const SuperAlgebra& g = algebra();
    // pseudo-random degree <= 4 words
    unsigned long seed = 12345;
    auto next = [&seed](int n) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        return (int)((seed >> 33) % (unsigned long)n);
    };
    for (int trial = 0; trial < 40; ++trial) {
        int len = 1 + next(4);
        Word w;
        for (int i = 0; i < len; ++i) w.push_back((uint8_t)next(16));
        SuperElt u = SuperElt::from_word(w, Scalar(next(5) - 2, 1 + next(3)));
        SuperElt first = g.normal_order(u, g.identity_rank(), RewriteStrategy::FirstViolation);
        SuperElt last = g.normal_order(u, g.identity_rank(), RewriteStrategy::LastViolation);
        CHECK(first == last);
        CHECK(g.normalize(first) == first);
    }
}

TEST_CASE("normal ordering under a permuted rank") {
    const SuperAlgebra& g = algebra();
    // order with eta before xi reverses the motivating identity
    std::vector<int> rank = g.identity_rank();
    std::swap(rank[xi11], rank[eta12]);
    SuperElt u = SuperElt::from_word({xi11, eta12});
    SuperElt nf = g.normal_order(u, rank);
    // xi11.eta12 = [xi11, eta12] - eta12.xi11; and [xi11,eta12] = [eta12,xi11] = X2
    SuperElt expect = SuperElt::from_word({X2});
    expect.add({eta12, xi11}, Scalar(-1));
    CHECK(nf == expect);
}

TEST_CASE("the short grading by ad J") {
    // J = diag(1,-1,1,-1)/2 has eigenvalue +1 on p^+, -1 on p^-, 0 on k
    const SuperAlgebra& g = algebra();
    ExactMatrix J(4, 4);
    J.at(0, 0) = Scalar(1, 2);
    J.at(1, 1) = Scalar(-1, 2);
    J.at(2, 2) = Scalar(1, 2);
    J.at(3, 3) = Scalar(-1, 2);
    auto ad_eigen = [&](int gen, const Scalar& want) {
        const ExactMatrix& m = g.gen(gen).matrix;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                Scalar br(0);
                for (int k = 0; k < 4; ++k)
                    br += J.at(r, k) * m.at(k, c) - m.at(r, k) * J.at(k, c);
                CHECK(br == want * m.at(r, c));
            }
    };
    for (int gen : p_plus_generators()) ad_eigen(gen, Scalar(1));
    for (int gen : p_minus_generators()) ad_eigen(gen, Scalar(-1));
    for (int gen : k_generators()) ad_eigen(gen, Scalar(0));
}

TEST_CASE("iwasawa blocks fill the algebra") {
    const PairRealization& pr = PairRealization::instance();
    CHECK(pr.a_begin() == 6);  // dim n^- = 6
    CHECK(pr.k_begin() == 8);  // dim a = 2, dim k = 8
    CHECK(pr.iwasawa().size() == 16);
}

TEST_CASE("restricted root data") {
    const PairRealization& pr = PairRealization::instance();
    CHECK(pr.roots().size() == 8);
    int isotropic = 0;
    for (const RestrictedRoot& r : pr.roots())
        if (r.dim_odd == 2) {
            ++isotropic;
            CHECK(r.deformed_mult == Scalar(1));
        }
    CHECK(isotropic == 4);
    auto [b, f] = pr.weyl_vector();
    CHECK(b == Scalar(-1));
    CHECK(f == Scalar(1));
}

TEST_CASE("harish-chandra projection") {
    const PairRealization& pr = PairRealization::instance();
    int x1 = pr.a_begin(), y1 = pr.a_begin() + 1;
    // a pure a-monomial passes through
    ExactPoly p = pr.hc_projection(SuperElt::from_word({(uint8_t)x1, (uint8_t)x1, (uint8_t)y1}));
    CHECK(p.coeff({2, 1}) == Scalar(1));
    CHECK(p.terms().size() == 1);
    // anything ending in a k generator projects to zero
    for (int kg = pr.k_begin(); kg < 16; ++kg) {
        SuperElt u = SuperElt::from_word({(uint8_t)x1, (uint8_t)kg});
        CHECK(pr.hc_projection(u).is_zero());
    }
    // anything starting with an n^- generator projects to zero
    unsigned long seed = 999;
    auto next = [&seed](int n) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        return (int)((seed >> 33) % (unsigned long)n);
    };
    for (int trial = 0; trial < 30; ++trial) {
        Word w{(uint8_t)next(pr.a_begin())}; // an n^- letter
        int len = next(3);
        for (int i = 0; i < len; ++i) w.push_back((uint8_t)next(16));
        CHECK(pr.hc_projection(SuperElt::from_word(w)).is_zero());
    }
    // hc_projection(u x) = 0 for a k-generator x and arbitrary u of degree <= 3
    for (int trial = 0; trial < 30; ++trial) {
        Word w;
        int len = next(3);
        for (int i = 0; i < len; ++i) w.push_back((uint8_t)next(16));
        w.push_back((uint8_t)(pr.k_begin() + next(16 - pr.k_begin())));
        CHECK(pr.hc_projection(SuperElt::from_word(w)).is_zero());
    }
}

TEST_CASE("pi of the cross term has degree at most 2") {
    const PairRealization& pr = PairRealization::instance();
    SuperElt u = SuperElt::from_word({xi21, eta12});
    ExactPoly p = pr.hc_projection(pr.to_iwasawa(u));
    CHECK(p.degree() <= 2);
}

TEST_CASE("gamma on invariants") {
    const PairRealization& pr = PairRealization::instance();
    CHECK(pr.gamma(SuperElt::one()) == ExactPoly::constant({"x1", "y1"}, Scalar(1)));
    // a non-invariant element is rejected
    CHECK_THROWS(pr.gamma(SuperElt::from_word({X1})));
}

TEST_CASE("iwasawa conversion is a homomorphism into the same algebra") {
    const PairRealization& pr = PairRealization::instance();
    const SuperAlgebra& g = algebra();
    // compare conversion of a product with the product of conversions
    SuperElt a = SuperElt::from_word({eta12, xi11});
    SuperElt b = SuperElt::from_word({Y1});
    SuperElt lhs = pr.to_iwasawa(g.mul(a, b));
    SuperElt rhs = pr.iwasawa().mul(pr.to_iwasawa(a), pr.to_iwasawa(b));
    CHECK(lhs == rhs);
}
