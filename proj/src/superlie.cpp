#include "superbc/superlie.hpp"

#include <algorithm>
#include <stdexcept>

namespace superbc {

void SuperElt::add(Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperElt& SuperElt::operator+=(const SuperElt& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

SuperElt& SuperElt::operator-=(const SuperElt& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

SuperElt SuperElt::operator*(const Scalar& c) const {
    SuperElt out;
    if (c.is_zero()) return out;
    for (const auto& [w, v] : terms_) out.terms_.emplace(w, v * c);
    return out;
}

int SuperElt::max_word_length() const {
    return terms_.empty() ? 0 : (int)terms_.begin()->first.size();
}

std::string SuperElt::str(const std::vector<Generator>& gens) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (uint8_t g : w) {
            if (!mono.empty()) mono += ".";
            mono += gens[g].name;
        }
        if (mono.empty()) mono = "1";
        std::string cs = c.str();
        out += (cs == "1" ? mono : (c.is_rational() ? cs : "(" + cs + ")") + "*" + mono);
    }
    return out;
}

namespace {

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

ExactMatrix super_bracket_mat(const ExactMatrix& a, bool a_odd, const ExactMatrix& b,
                              bool b_odd) {
    ExactMatrix ab = mat_mul(a, b);
    ExactMatrix ba = mat_mul(b, a);
    Scalar sign = (a_odd && b_odd) ? Scalar(1) : Scalar(-1);
    ExactMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = ab.at(i, j) + ba.at(i, j) * sign;
    return out;
}

std::vector<Scalar> flatten(const ExactMatrix& m) {
    std::vector<Scalar> v;
    v.reserve(m.rows() * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

}  // namespace

SuperAlgebra::SuperAlgebra(int m, int n, std::vector<Generator> gens)
    : m_(m), n_(n), gens_(std::move(gens)) {
    int d = m_ + n_, N = (int)gens_.size();
    if (N != d * d) throw std::invalid_argument("SuperAlgebra: need a full gl(m|n) basis");
    ExactMatrix cols(d * d, N);
    for (int j = 0; j < N; ++j) {
        std::vector<Scalar> f = flatten(gens_[j].matrix);
        for (int i = 0; i < d * d; ++i) cols.at(i, j) = f[i];
    }
    expander_ = inverse(cols);
    brackets_.assign(N, std::vector<std::vector<std::pair<int, Scalar>>>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            ExactMatrix br =
                super_bracket_mat(gens_[i].matrix, gens_[i].odd, gens_[j].matrix, gens_[j].odd);
            std::vector<Scalar> coords = expand(br);
            for (int g = 0; g < N; ++g)
                if (!coords[g].is_zero()) brackets_[i][j].push_back({g, coords[g]});
        }
}

bool SuperAlgebra::word_odd(const Word& w) const {
    bool odd = false;
    for (uint8_t g : w) odd ^= gens_[g].odd;
    return odd;
}

SuperElt SuperAlgebra::bracket_elt(int i, int j) const {
    SuperElt out;
    for (const auto& [g, c] : brackets_[i][j]) out.add(Word{(uint8_t)g}, c);
    return out;
}

std::vector<Scalar> SuperAlgebra::expand(const ExactMatrix& mat) const {
    return expander_.apply(flatten(mat));
}

std::vector<int> SuperAlgebra::identity_rank() const {
    std::vector<int> r(size());
    for (int i = 0; i < size(); ++i) r[i] = i;
    return r;
}

namespace {
int find_violation(const Word& w, const std::vector<int>& rank,
                   const std::vector<Generator>& gens, RewriteStrategy strategy) {
    auto bad = [&](int k) {
        if (w[k] == w[k + 1]) return gens[w[k]].odd;
        return rank[w[k]] > rank[w[k + 1]];
    };
    int n = (int)w.size();
    if (strategy == RewriteStrategy::FirstViolation) {
        for (int k = 0; k + 1 < n; ++k)
            if (bad(k)) return k;
    } else {
        for (int k = n - 2; k >= 0; --k)
            if (bad(k)) return k;
    }
    return -1;
}
}  // namespace

SuperElt SuperAlgebra::normal_order(const SuperElt& u, const std::vector<int>& rank,
                                    RewriteStrategy strategy) const {
    if ((int)rank.size() != size()) throw std::invalid_argument("normal_order: bad rank array");
    SuperElt::TermMap work(u.terms().begin(), u.terms().end());
    SuperElt out;
    auto push = [&work](Word w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = work.emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) work.erase(it);
        }
    };
    while (!work.empty()) {
        auto it = work.begin();
        Word w = it->first;
        Scalar c = it->second;
        work.erase(it);
        int k = find_violation(w, rank, gens_, strategy);
        if (k < 0) {
            out.add(std::move(w), c);
            continue;
        }
        int a = w[k], b = w[k + 1];
        if (a == b) {
            // odd square: xx = [x,x]/2
            for (const auto& [g, cg] : brackets_[a][a]) {
                Word nw(w.begin(), w.begin() + k);
                nw.push_back((uint8_t)g);
                nw.insert(nw.end(), w.begin() + k + 2, w.end());
                push(std::move(nw), c * cg * Scalar(1, 2));
            }
        } else {
            Scalar sign = (gens_[a].odd && gens_[b].odd) ? Scalar(-1) : Scalar(1);
            Word sw = w;
            std::swap(sw[k], sw[k + 1]);
            push(std::move(sw), c * sign);
            for (const auto& [g, cg] : brackets_[a][b]) {
                Word nw(w.begin(), w.begin() + k);
                nw.push_back((uint8_t)g);
                nw.insert(nw.end(), w.begin() + k + 2, w.end());
                push(std::move(nw), c * cg);
            }
        }
    }
    return out;
}

SuperElt SuperAlgebra::mul(const SuperElt& a, const SuperElt& b) const {
    SuperElt prod;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            prod.add(std::move(w), ca * cb);
        }
    return normalize(prod);
}

SuperElt SuperAlgebra::super_commutator(const SuperElt& a, const SuperElt& b) const {
    SuperElt prod;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word ab = wa;
            ab.insert(ab.end(), wb.begin(), wb.end());
            prod.add(std::move(ab), ca * cb);
            Word ba = wb;
            ba.insert(ba.end(), wa.begin(), wa.end());
            Scalar sign = (word_odd(wa) && word_odd(wb)) ? Scalar(1) : Scalar(-1);
            prod.add(std::move(ba), ca * cb * sign);
        }
    return normalize(prod);
}

// ---------------------------------------------------------------------------
// the concrete gl(2|2) basis

namespace gl22 {

namespace {
ExactMatrix unit(int r, int c) {
    ExactMatrix m(4, 4);
    m.at(r, c) = Scalar(1);
    return m;
}

std::vector<Generator> natural_basis() {
    auto E = [](int r, int c) { return unit(r - 1, c - 1); };
    bool const O = true, Ev = false;
    return {
        {"xi11", O, E(3, 1)},  {"xi12", O, E(3, 2)},  {"xi21", O, E(4, 1)},
        {"xi22", O, E(4, 2)},  {"X1", Ev, E(1, 2)},   {"Y1", Ev, E(2, 1)},
        {"X2", Ev, E(3, 4)},   {"Y2", Ev, E(4, 3)},   {"E11", Ev, E(1, 1)},
        {"E22", Ev, E(2, 2)},  {"E33", Ev, E(3, 3)},  {"E44", Ev, E(4, 4)},
        {"eta11", O, E(1, 3)}, {"eta12", O, E(1, 4)}, {"eta21", O, E(2, 3)},
        {"eta22", O, E(2, 4)},
    };
}
}  // namespace

const SuperAlgebra& algebra() {
    static SuperAlgebra alg(2, 2, natural_basis());
    return alg;
}

SuperElt diag(long a, long b, long c, long d) {
    SuperElt e;
    e.add(Word{E11}, Scalar(a));
    e.add(Word{E22}, Scalar(b));
    e.add(Word{E33}, Scalar(c));
    e.add(Word{E44}, Scalar(d));
    return e;
}

const std::vector<int>& k_generators() {
    static std::vector<int> k{eta11, xi11, eta22, xi22, E11, E22, E33, E44};
    return k;
}

bool is_k_generator(int i) {
    const auto& k = k_generators();
    return std::find(k.begin(), k.end(), i) != k.end();
}

const std::vector<int>& p_plus_generators() {
    static std::vector<int> v{X1, X2, eta12, xi12};
    return v;
}

const std::vector<int>& p_minus_generators() {
    static std::vector<int> v{Y1, Y2, eta21, xi21};
    return v;
}

}  // namespace gl22

// ---------------------------------------------------------------------------
// Iwasawa realization at p = q = 1

namespace {

// 16x16 matrix of ad(x) on the natural-basis coordinate space, x even
ExactMatrix ad_matrix(const SuperAlgebra& gl, const ExactMatrix& x) {
    int N = gl.size();
    ExactMatrix ad(N, N);
    for (int j = 0; j < N; ++j) {
        ExactMatrix br = mat_mul(x, gl.gen(j).matrix);
        ExactMatrix xb = mat_mul(gl.gen(j).matrix, x);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) br.at(r, c) -= xb.at(r, c);
        std::vector<Scalar> coords = gl.expand(br);
        for (int i = 0; i < N; ++i) ad.at(i, j) = coords[i];
    }
    return ad;
}

ExactMatrix combo_matrix(const SuperAlgebra& gl, const std::vector<Scalar>& coords) {
    ExactMatrix m(4, 4);
    for (int g = 0; g < gl.size(); ++g) {
        if (coords[g].is_zero()) continue;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) m.at(r, c) += gl.gen(g).matrix.at(r, c) * coords[g];
    }
    return m;
}

}  // namespace

PairRealization::PairRealization() : gl_(&gl22::algebra()), iw_(2, 2, [this] {
    using namespace gl22;
    const SuperAlgebra& g = *gl_;
    Scalar I = Scalar::i();

    // a = span{ x1 = i(X1 - Y1), y1 = i(X2 - Y2) }
    ExactMatrix x1(4, 4), y1(4, 4);
    auto axpy = [&](ExactMatrix& m, int gen, const Scalar& c) {
        for (int r = 0; r < 4; ++r)
            for (int cc = 0; cc < 4; ++cc) m.at(r, cc) += g.gen(gen).matrix.at(r, cc) * c;
    };
    axpy(x1, X1, I);
    axpy(x1, Y1, -I);
    axpy(y1, X2, I);
    axpy(y1, Y2, -I);

    ExactMatrix adx = ad_matrix(g, x1), ady = ad_matrix(g, y1);

    std::vector<int> even_idx, odd_idx;
    for (int i = 0; i < g.size(); ++i) (g.odd(i) ? odd_idx : even_idx).push_back(i);

    auto root_space = [&](int cB, int cF, const std::vector<int>& block) {
        ExactMatrix sys(2 * g.size(), (int)block.size());
        for (size_t jj = 0; jj < block.size(); ++jj) {
            int j = block[jj];
            for (int t = 0; t < g.size(); ++t) {
                sys.at(t, (int)jj) = adx.at(t, j) - (t == j ? Scalar(cB) : Scalar(0));
                sys.at(g.size() + t, (int)jj) = ady.at(t, j) - (t == j ? Scalar(cF) : Scalar(0));
            }
        }
        std::vector<std::vector<Scalar>> ker = nullspace(sys);
        std::vector<std::vector<Scalar>> full;
        for (const auto& v : ker) {
            std::vector<Scalar> w(g.size(), Scalar(0));
            for (size_t jj = 0; jj < block.size(); ++jj) w[block[jj]] = v[jj];
            full.push_back(std::move(w));
        }
        return full;
    };

    int total = 0;
    std::vector<Generator> neg;
    for (int cB = -2; cB <= 2; ++cB)
        for (int cF = -2; cF <= 2; ++cF) {
            if (cB == 0 && cF == 0) continue;
            auto ev = root_space(cB, cF, even_idx);
            auto od = root_space(cB, cF, odd_idx);
            if (ev.empty() && od.empty()) continue;
            roots_.push_back({cB, cF, (int)ev.size(), (int)od.size(),
                              Scalar(-(int)ev.size() + (int)od.size(), 2)});
            total += (int)(ev.size() + od.size());
            bool negative = cB < 0 || (cB == 0 && cF < 0);
            if (!negative) continue;
            int tag = 0;
            std::string base =
                "n(" + std::to_string(cB) + "," + std::to_string(cF) + ")";
            for (const auto& v : ev)
                neg.push_back({base + (char)('a' + tag++), false, combo_matrix(g, v)});
            for (const auto& v : od)
                neg.push_back({base + (char)('a' + tag++), true, combo_matrix(g, v)});
        }
    int centralizer = (int)(root_space(0, 0, even_idx).size() + root_space(0, 0, odd_idx).size());
    if (total + centralizer != g.size() || neg.size() != 6)
        throw std::runtime_error("PairRealization: adjoint action of a is not semisimple");

    std::vector<Generator> gens = std::move(neg);
    gens.push_back({"x1", false, x1});
    gens.push_back({"y1", false, y1});
    for (int kg : {eta11, xi11, eta22, xi22, E11, E22, E33, E44})
        gens.push_back(g.gen(kg));
    return gens;
}()) {
    gl_to_iw_.resize(gl_->size());
    for (int i = 0; i < gl_->size(); ++i) {
        std::vector<Scalar> coords = iw_.expand(gl_->gen(i).matrix);
        for (int j = 0; j < iw_.size(); ++j)
            if (!coords[j].is_zero()) gl_to_iw_[i].push_back({j, coords[j]});
    }
}

const PairRealization& PairRealization::instance() {
    static PairRealization inst;
    return inst;
}

std::pair<Scalar, Scalar> PairRealization::weyl_vector() const {
    Scalar b(0), f(0);
    for (const RestrictedRoot& r : roots_) {
        bool positive = r.cB > 0 || (r.cB == 0 && r.cF > 0);
        if (!positive) continue;
        Scalar m(r.dim_even - r.dim_odd);
        b += m * Scalar(r.cB, 2);
        f += m * Scalar(r.cF, 2);
    }
    return {b, f};
}

SuperElt PairRealization::to_iwasawa(const SuperElt& u_gl) const {
    SuperElt out;
    for (const auto& [w, c] : u_gl.terms()) {
        SuperElt prod = SuperElt::one();
        for (uint8_t letter : w) {
            SuperElt image;
            for (const auto& [j, coef] : gl_to_iw_[letter]) image.add(Word{(uint8_t)j}, coef);
            prod = iw_.mul(prod, image);
        }
        out += prod * c;
    }
    return out;
}

bool PairRealization::is_k_invariant(const SuperElt& u_gl) const {
    for (int kg : gl22::k_generators()) {
        SuperElt x = SuperElt::from_word(Word{(uint8_t)kg});
        if (!gl_->super_commutator(x, u_gl).is_zero()) return false;
    }
    return true;
}

ExactPoly PairRealization::hc_projection(const SuperElt& u_iwasawa) const {
    SuperElt nf = iw_.normalize(u_iwasawa);
    ExactPoly out({"x1", "y1"});
    for (const auto& [w, c] : nf.terms()) {
        int ex = 0, ey = 0;
        bool pure_a = true;
        for (uint8_t g : w) {
            if (g == a_begin_)
                ++ex;
            else if (g == a_begin_ + 1)
                ++ey;
            else {
                pure_a = false;
                break;
            }
        }
        if (pure_a) out.add_term({ex, ey}, c);
    }
    return out;
}

ExactPoly PairRealization::gamma(const SuperElt& u_gl) const {
    if (!is_k_invariant(u_gl))
        throw std::invalid_argument("gamma: element is not k-invariant");
    ExactPoly pi = hc_projection(to_iwasawa(u_gl));
    auto [rb, rf] = weyl_vector();
    AffineExpr ax{-rb, {Scalar(1), Scalar(0)}};
    AffineExpr ay{-rf, {Scalar(0), Scalar(1)}};
    return pi.substitute(pi.vars(), {ax, ay});
}

}  // namespace superbc
