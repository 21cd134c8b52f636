// Exact scalars for the whole toolkit: Gaussian rationals Q(i).
// A Scalar with im == 0 is an ordinary rational; equality is structural
// and values are kept canonical (lowest terms, positive denominator)
// by GMP's mpq layer.
#ifndef SUPERBC_SCALAR_HPP
#define SUPERBC_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace superbc {

class Scalar {
  public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long n) : re_(n), im_(0) {}
    Scalar(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
    Scalar(const mpq_class& re) : re_(re), im_(0) {}
    Scalar(const mpq_class& re, const mpq_class& im) : re_(re), im_(im) {}

    // parses "n", "n/d", "n/d+a/b*i", "n/d-a/b*i", "a/b*i"
    static Scalar parse(const std::string& s);
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }
    bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    // structural order, used only as a deterministic map key
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    Scalar inverse() const;

    // exact string, never decimal: "3", "-1/2", "1/2+3*i", "-i"
    std::string str() const;

  private:
    mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rat_str(const mpq_class& q);

}  // namespace superbc

#endif
