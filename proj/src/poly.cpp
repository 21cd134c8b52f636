#include "superbc/poly.hpp"

#include <numeric>
#include <stdexcept>

namespace superbc {

ExactPoly ExactPoly::constant(std::vector<std::string> vars, const Scalar& c) {
    ExactPoly f(std::move(vars));
    f.add_term(Exponents(f.nvars(), 0), c);
    return f;
}

ExactPoly ExactPoly::variable(std::vector<std::string> vars, int index, int power) {
    ExactPoly f(std::move(vars));
    if (index < 0 || index >= f.nvars()) throw std::out_of_range("ExactPoly::variable");
    Exponents e(f.nvars(), 0);
    e[index] = power;
    f.add_term(e, Scalar(1));
    return f;
}

int ExactPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

Scalar ExactPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void ExactPoly::add_term(const Exponents& e, const Scalar& c) {
    if (c.is_zero()) return;
    if ((int)e.size() != nvars()) throw std::invalid_argument("ExactPoly: exponent arity");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("ExactPoly: variable mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) {
    if (vars_ != o.vars_) throw std::invalid_argument("ExactPoly: variable mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("ExactPoly: variable mismatch");
    ExactPoly out(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExactPoly::Exponents e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

ExactPoly ExactPoly::operator*(const Scalar& c) const {
    ExactPoly out(vars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

Scalar ExactPoly::eval(const std::vector<Scalar>& point) const {
    if ((int)point.size() != nvars())
        throw std::invalid_argument("ExactPoly::eval: point arity mismatch");
    Scalar acc(0);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

ExactPoly ExactPoly::substitute(const std::vector<std::string>& new_vars,
                                const std::vector<AffineExpr>& assignment) const {
    if ((int)assignment.size() != nvars())
        throw std::invalid_argument("ExactPoly::substitute: assignment must cover all vars");
    // affine image of each variable as a polynomial over new_vars
    std::vector<ExactPoly> image;
    for (const AffineExpr& ax : assignment) {
        if (ax.coeffs.size() != new_vars.size())
            throw std::invalid_argument("ExactPoly::substitute: affine arity mismatch");
        ExactPoly g = constant(new_vars, ax.constant);
        for (size_t j = 0; j < new_vars.size(); ++j)
            if (!ax.coeffs[j].is_zero())
                g += variable(new_vars, (int)j) * ax.coeffs[j];
        image.push_back(g);
    }
    // cache powers per variable as needed
    std::vector<std::vector<ExactPoly>> powers(nvars());
    ExactPoly out(new_vars);
    for (const auto& [e, c] : terms_) {
        ExactPoly t = constant(new_vars, c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(image[i]);
            while ((int)pw.size() < e[i]) pw.push_back(pw.back() * image[i]);
            t = t * pw[e[i] - 1];
        }
        out += t;
    }
    return out;
}

std::string ExactPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string cs = c.str();
        bool simple_coeff = c.is_rational() || mono.empty();
        if (mono.empty())
            out += cs;
        else if (cs == "1")
            out += mono;
        else if (cs == "-1")
            out += "-" + mono;
        else
            out += (simple_coeff ? cs : "(" + cs + ")") + "*" + mono;
    }
    return out;
}

}  // namespace superbc
