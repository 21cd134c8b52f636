#include "superbc/kacrep.hpp"

#include <stdexcept>

#include "superbc/borel.hpp"

namespace superbc {

std::string KacWeight::str() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "|" + std::to_string(c) + "," +
           std::to_string(d) + ")";
}

void kac_add(KacVector& v, const KacKey& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

KacVector kac_scale(const KacVector& v, const Scalar& c) {
    KacVector out;
    if (c.is_zero()) return out;
    for (const auto& [k, x] : v) out.emplace(k, x * c);
    return out;
}

bool kac_is_zero(const KacVector& v) { return v.empty(); }

bool kac_proportional(const KacVector& v, const KacVector& w, Scalar& c) {
    if (v.empty()) {
        c = Scalar(0);
        return true;
    }
    if (w.empty()) return false;
    if (v.size() != w.size()) return false;
    auto iv = v.begin();
    auto iw = w.begin();
    if (!(iv->first == iw->first)) return false;
    c = iv->second / iw->second;
    for (; iv != v.end(); ++iv, ++iw) {
        if (!(iv->first == iw->first)) return false;
        if (iv->second != iw->second * c) return false;
    }
    return true;
}

KacModule::KacModule(KacWeight hw) : hw_(hw), ka_(hw.a - hw.b), lb_(hw.c - hw.d) {
    if (ka_ < 0 || lb_ < 0)
        throw std::invalid_argument("KacModule: weight must be dominant (a>=b, c>=d)");
}

std::array<int, 4> KacModule::weight_of(const KacKey& key) const {
    // xi weights in (e+, e-, d+, d-) coordinates
    static const int xiw[4][4] = {
        {-1, 0, 1, 0}, // xi11
        {0, -1, 1, 0}, // xi12
        {-1, 0, 0, 1}, // xi21
        {0, -1, 0, 1}, // xi22
    };
    std::array<int, 4> w{hw_.b + key.k, hw_.a - key.k, hw_.d + key.l, hw_.c - key.l};
    for (int bit = 0; bit < 4; ++bit)
        if (key.mask & (1u << bit))
            for (int t = 0; t < 4; ++t) w[t] += xiw[bit][t];
    return w;
}

namespace {
int bits_below(uint8_t mask, int bit) {
    int n = 0;
    for (int b = 0; b < bit; ++b)
        if (mask & (1u << b)) ++n;
    return n;
}
}  // namespace

KacVector KacModule::act(int gen, const KacVector& v) const {
    const SuperAlgebra& g = gl22::algebra();
    KacVector out;
    for (const auto& [key, c] : v) {
        if (gen >= gl22::xi11 && gen <= gl22::xi22) {
            // wedge on the left
            int bit = gen;
            if (key.mask & (1u << bit)) continue;
            Scalar sign((bits_below(key.mask, bit) % 2) ? -1 : 1);
            kac_add(out, {(uint8_t)(key.mask | (1u << bit)), key.k, key.l}, c * sign);
        } else if (gen >= gl22::X1 && gen <= gl22::E44) {
            // even: derivation on the exterior factors plus the ladder action
            for (int s = 0; s < 4; ++s) {
                if (!(key.mask & (1u << s))) continue;
                uint8_t rest = (uint8_t)(key.mask & ~(1u << s));
                for (const auto& [b, cb] : g.bracket(gen, s)) {
                    if (b < gl22::xi11 || b > gl22::xi22)
                        throw std::logic_error("KacModule: even action left g(-1)");
                    if (rest & (1u << b)) continue;
                    int sgn = (bits_below(key.mask, s) + bits_below(rest, b)) % 2 ? -1 : 1;
                    kac_add(out, {(uint8_t)(rest | (1u << b)), key.k, key.l},
                            c * cb * Scalar(sgn));
                }
            }
            switch (gen) {
                case gl22::X1:
                    if (key.k + 1 <= ka_) kac_add(out, {key.mask, key.k + 1, key.l}, c);
                    break;
                case gl22::Y1:
                    if (key.k > 0)
                        kac_add(out, {key.mask, key.k - 1, key.l},
                                c * Scalar((long)key.k * (ka_ + 1 - key.k)));
                    break;
                case gl22::X2:
                    if (key.l + 1 <= lb_) kac_add(out, {key.mask, key.k, key.l + 1}, c);
                    break;
                case gl22::Y2:
                    if (key.l > 0)
                        kac_add(out, {key.mask, key.k, key.l - 1},
                                c * Scalar((long)key.l * (lb_ + 1 - key.l)));
                    break;
                case gl22::E11:
                    kac_add(out, key, c * Scalar(hw_.b + key.k));
                    break;
                case gl22::E22:
                    kac_add(out, key, c * Scalar(hw_.a - key.k));
                    break;
                case gl22::E33:
                    kac_add(out, key, c * Scalar(hw_.d + key.l));
                    break;
                case gl22::E44:
                    kac_add(out, key, c * Scalar(hw_.c - key.l));
                    break;
                default:
                    break;
            }
        } else {
            // eta: zero on 1 (x) W, otherwise commute through the first factor
            if (key.mask == 0) continue;
            int s1 = 0;
            while (!(key.mask & (1u << s1))) ++s1;
            uint8_t rest = (uint8_t)(key.mask & ~(1u << s1));
            KacVector sub{{KacKey{rest, key.k, key.l}, c}};
            for (const auto& [b, cb] : g.bracket(gen, s1)) {
                KacVector piece = act(b, kac_scale(sub, cb));
                for (const auto& [kk, cc] : piece) kac_add(out, kk, cc);
            }
            KacVector tail = act(gen, sub);
            KacVector wedged = act(s1, tail);
            for (const auto& [kk, cc] : wedged) kac_add(out, kk, -cc);
        }
    }
    return out;
}

KacVector KacModule::act_word(const Word& w, const KacVector& v) const {
    KacVector cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act(*it, cur);
    return cur;
}

KacVector KacModule::act_elt(const SuperElt& u, const KacVector& v) const {
    KacVector out;
    for (const auto& [w, c] : u.terms()) {
        KacVector piece = act_word(w, v);
        for (const auto& [kk, cc] : piece) kac_add(out, kk, cc * c);
    }
    return out;
}

std::vector<KacKey> KacModule::basis_keys() const {
    std::vector<KacKey> keys;
    for (int mask = 0; mask < 16; ++mask)
        for (int k = 0; k <= ka_; ++k)
            for (int l = 0; l <= lb_; ++l) keys.push_back({(uint8_t)mask, k, l});
    return keys;
}

std::vector<KacKey> KacModule::zero_weight_keys() const {
    std::vector<KacKey> keys;
    for (const KacKey& key : basis_keys()) {
        std::array<int, 4> w = weight_of(key);
        if (w[0] == 0 && w[1] == 0 && w[2] == 0 && w[3] == 0) keys.push_back(key);
    }
    return keys;
}

std::vector<KacVector> KacModule::spherical_vectors() const {
    std::vector<KacKey> zw = zero_weight_keys();
    if (zw.empty()) return {};
    // stack the actions of the eight k-generators
    std::map<std::pair<int, KacKey>, int> row_of;
    std::vector<KacVector> images((size_t)zw.size() * 8);
    for (size_t col = 0; col < zw.size(); ++col) {
        KacVector e{{zw[col], Scalar(1)}};
        for (size_t gi = 0; gi < gl22::k_generators().size(); ++gi) {
            int gen = gl22::k_generators()[gi];
            KacVector img = act(gen, e);
            images[col * 8 + gi] = img;
            for (const auto& [key, c] : img) row_of.emplace(std::make_pair((int)gi, key), 0);
        }
    }
    int r = 0;
    for (auto& [key, idx] : row_of) idx = r++;
    ExactMatrix m(r, (int)zw.size());
    for (size_t col = 0; col < zw.size(); ++col)
        for (size_t gi = 0; gi < 8; ++gi)
            for (const auto& [key, c] : images[col * 8 + gi])
                m.at(row_of[{(int)gi, key}], (int)col) += c;
    std::vector<KacVector> out;
    for (const auto& coords : nullspace(m)) {
        KacVector v;
        for (size_t col = 0; col < zw.size(); ++col) kac_add(v, zw[col], coords[col]);
        out.push_back(std::move(v));
    }
    return out;
}

KacVector KacModule::weight_vector_in_w(const std::array<int, 4>& wt) const {
    int k = wt[0] - hw_.b, l = wt[2] - hw_.d;
    if (k < 0 || k > ka_ || l < 0 || l > lb_) return {};
    if (hw_.a - k != wt[1] || hw_.c - l != wt[3]) return {};
    return {{KacKey{0, k, l}, Scalar(1)}};
}

std::string KacModule::str(const KacVector& v) const {
    if (v.empty()) return "0";
    const char* names[4] = {"xi11", "xi12", "xi21", "xi22"};
    std::string out;
    for (const auto& [key, c] : v) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int b = 0; b < 4; ++b)
            if (key.mask & (1u << b)) {
                if (!mono.empty()) mono += "^";
                mono += names[b];
            }
        if (!mono.empty()) mono += " ";
        out += c.str() + "*" + mono + "(" + std::to_string(key.k) + "," +
               std::to_string(key.l) + ")";
    }
    return out;
}

KacWeight kac_weight_of_hook(int a, int b) {
    std::array<int, 4> t = kac_weight_11(a, b);
    return KacWeight{t[0], t[1], t[2], t[3]};
}

KacVector quasi_spherical_candidate(const KacModule& km) {
    KacVector v = km.weight_vector_in_w({1, 0, -1, 0});
    if (v.empty())
        throw std::invalid_argument("quasi_spherical_candidate: weight (1,0|-1,0) absent");
    KacKey key = v.begin()->first;
    return {{KacKey{1u << gl22::xi11, key.k, key.l}, Scalar(1)}};
}

QuasiSphericalReport quasi_spherical_check(const KacWeight& hw, const KacVector& omega) {
    KacModule km(hw);
    QuasiSphericalReport rep;
    if (omega.size() != 1 || omega.begin()->first.mask != (1u << gl22::xi11))
        throw std::invalid_argument("quasi_spherical_check: omega must be xi11 (x) v");
    KacKey base = omega.begin()->first;
    {
        std::array<int, 4> w = km.weight_of(base);
        if (w != std::array<int, 4>{0, 0, 0, 0})
            throw std::invalid_argument("quasi_spherical_check: omega must have weight zero");
    }
    KacVector omega_prime{{KacKey{(1u << gl22::xi11) | (1u << gl22::xi22), base.k, base.l},
                           Scalar(1)}};

    // k.omega must be exactly the omega' line
    bool some_nonzero = false, all_in_line = true;
    for (int gen : gl22::k_generators()) {
        KacVector img = km.act(gen, omega);
        if (kac_is_zero(img)) continue;
        Scalar c;
        if (!kac_proportional(img, omega_prime, c)) {
            all_in_line = false;
            rep.failures.push_back("k-generator " + gl22::algebra().gen(gen).name +
                                   " maps omega outside the omega' line");
        } else if (!c.is_zero()) {
            some_nonzero = true;
        }
    }
    rep.k_orbit_spans_omega_prime = all_in_line && some_nonzero;

    // cyclicity: eta12.omega = 1 (x) X2 v, nonzero
    KacVector cyc = km.act(gl22::eta12, omega);
    rep.omega_cyclic = !kac_is_zero(cyc) && cyc.begin()->first.mask == 0;

    // degree-2 annihilation of omega': PBW elements xi^A X^B eta^C with
    // |C| - |A| = 2, g0 words of length <= 2
    std::vector<Word> g0_words{{}};
    for (int x = gl22::X1; x <= gl22::E44; ++x) g0_words.push_back({(uint8_t)x});
    for (int x = gl22::X1; x <= gl22::E44; ++x)
        for (int y = x; y <= gl22::E44; ++y) g0_words.push_back({(uint8_t)x, (uint8_t)y});
    rep.g0_word_bound = "g0 words of length <= 2 (" + std::to_string(g0_words.size()) + ")";

    std::vector<std::pair<Word, Word>> xa_etac; // (xi^A, eta^C) with |C|-|A| = 2
    auto subsets = [](int size, int from, int to) {
        std::vector<Word> out;
        std::vector<uint8_t> range;
        for (int v = from; v <= to; ++v) range.push_back((uint8_t)v);
        int n = (int)range.size();
        for (int bits = 0; bits < (1 << n); ++bits) {
            if (__builtin_popcount((unsigned)bits) != size) continue;
            Word w;
            for (int t = 0; t < n; ++t)
                if (bits & (1 << t)) w.push_back(range[t]);
            out.push_back(w);
        }
        return out;
    };
    for (int asize = 0; asize <= 2; ++asize)
        for (const Word& A : subsets(asize, gl22::xi11, gl22::xi22))
            for (const Word& C : subsets(asize + 2, gl22::eta11, gl22::eta22))
                xa_etac.push_back({A, C});

    rep.degree2_annihilates = true;
    for (const auto& [A, C] : xa_etac)
        for (const Word& B : g0_words) {
            Word u = A;
            u.insert(u.end(), B.begin(), B.end());
            u.insert(u.end(), C.begin(), C.end());
            ++rep.enumerated;
            if (!kac_is_zero(km.act_word(u, omega_prime))) {
                rep.degree2_annihilates = false;
                rep.failures.push_back("degree-2 element does not annihilate omega'");
            }
        }
    return rep;
}

bool typicality(const KacWeight& hw) {
    // 2(hw + weyl) with weyl = (-1,-3,3,1)/2; supertrace signs (+,+,-,-)
    int v1 = 2 * hw.a - 1, v2 = 2 * hw.b - 3, v3 = 2 * hw.c + 3, v4 = 2 * hw.d + 1;
    return (v1 + v3) != 0 && (v1 + v4) != 0 && (v2 + v3) != 0 && (v2 + v4) != 0;
}

}  // namespace superbc
