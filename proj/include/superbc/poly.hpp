// Multivariate polynomials with exact Scalar coefficients, keyed by
// exponent vectors. No zero coefficients are ever stored.
#ifndef SUPERBC_POLY_HPP
#define SUPERBC_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "superbc/scalar.hpp"

namespace superbc {

// constant + sum(coeffs[i] * target_var[i]); target variable set is implied
// by the substitution call site
struct AffineExpr {
    Scalar constant;
    std::vector<Scalar> coeffs;
};

class ExactPoly {
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Scalar>;

    ExactPoly() = default;
    explicit ExactPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static ExactPoly constant(std::vector<std::string> vars, const Scalar& c);
    static ExactPoly variable(std::vector<std::string> vars, int index, int power = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return (int)vars_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // total degree; -1 for the zero polynomial

    Scalar coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Scalar& c);

    ExactPoly& operator+=(const ExactPoly& o);
    ExactPoly& operator-=(const ExactPoly& o);
    friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
    ExactPoly operator*(const Scalar& c) const;
    ExactPoly operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const ExactPoly& a, const ExactPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Scalar eval(const std::vector<Scalar>& point) const;

    // substitutes var i by assignment[i] (an affine expression over new_vars);
    // assignment must cover every variable of this polynomial
    ExactPoly substitute(const std::vector<std::string>& new_vars,
                         const std::vector<AffineExpr>& assignment) const;

    std::string str() const; // human-readable, deterministic term order

  private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace superbc

#endif
