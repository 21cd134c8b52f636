#include "superbc/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace superbc {

Scalar& Scalar::operator*=(const Scalar& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Scalar::str() const {
    if (im_ == 0) return rat_str(re_);
    mpq_class ai = abs(im_);
    std::string impart = (ai == 1) ? "i" : rat_str(ai) + "*i";
    if (re_ == 0) return (im_ < 0 ? "-" : "") + impart;
    return rat_str(re_) + (im_ < 0 ? "-" : "+") + impart;
}

namespace {
mpq_class parse_rat(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}
}  // namespace

Scalar Scalar::parse(const std::string& s) {
    // split at the last '+' or '-' that is not at position 0
    if (!s.empty() && s.back() == 'i') {
        std::string body = s.substr(0, s.size() - 1);
        if (!body.empty() && body.back() == '*') body.pop_back();
        // find split point for a real part
        for (size_t k = body.size(); k-- > 1;) {
            if (body[k] == '+' || body[k] == '-') {
                if (body[k - 1] == '/' ) continue;
                std::string re = body.substr(0, k);
                std::string im = body.substr(k);
                if (im == "+" || im == "-") im += "1";
                return Scalar(parse_rat(re), parse_rat(im));
            }
        }
        if (body.empty() || body == "-") body += "1";
        return Scalar(mpq_class(0), parse_rat(body));
    }
    return Scalar(parse_rat(s));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace superbc
