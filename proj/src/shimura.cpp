#include "superbc/shimura.hpp"

#include <algorithm>
#include <stdexcept>

#include "superbc/linalg.hpp"

namespace superbc {

void sym_add(SymPoly& f, const SymKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = f.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) f.erase(it);
    }
}

SymPoly sym_scale(const SymPoly& f, const Scalar& c) {
    SymPoly out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : f) out.emplace(k, v * c);
    return out;
}

const std::array<int, 4>& block_slots(Block b) {
    static const std::array<int, 4> plus{gl22::X1, gl22::X2, gl22::eta12, gl22::xi12};
    static const std::array<int, 4> minus{gl22::Y1, gl22::Y2, gl22::eta21, gl22::xi21};
    return b == Block::PPlus ? plus : minus;
}

namespace {

bool slot_odd(int slot) { return slot >= 2; } // slots 2,3 are the odd generators

int slot_of(Block b, int gl_index) {
    const auto& s = block_slots(b);
    for (int i = 0; i < 4; ++i)
        if (s[i] == gl_index) return i;
    return -1;
}

std::vector<int> key_to_word(const SymKey& k) {
    std::vector<int> w;
    for (int slot = 0; slot < 4; ++slot)
        for (int t = 0; t < k[slot]; ++t) w.push_back(slot);
    return w;
}

// sorts a slot word into canonical order; returns false when two equal odd
// slots collide, otherwise accumulates the odd-odd transposition sign
bool sort_word(std::vector<int>& w, int& sign) {
    for (size_t i = 1; i < w.size(); ++i)
        for (size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
            if (slot_odd(w[j]) && slot_odd(w[j - 1])) sign = -sign;
            std::swap(w[j], w[j - 1]);
        }
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1] && slot_odd(w[i])) return false;
    return true;
}

SymKey word_to_key(const std::vector<int>& w) {
    SymKey k{0, 0, 0, 0};
    for (int slot : w) k[slot]++;
    return k;
}

Scalar supertrace(const ExactMatrix& m) {
    return m.at(0, 0) + m.at(1, 1) - m.at(2, 2) - m.at(3, 3);
}

// pairing value between single generators, b(u in p^-, v in p^+) = str(M_v M_u)
const Scalar& pair_value(int slot_minus, int slot_plus) {
    static std::array<std::array<Scalar, 4>, 4> table = [] {
        std::array<std::array<Scalar, 4>, 4> t;
        const SuperAlgebra& g = gl22::algebra();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                ExactMatrix mv = g.gen(block_slots(Block::PPlus)[j]).matrix;
                ExactMatrix mu = g.gen(block_slots(Block::PMinus)[i]).matrix;
                ExactMatrix prod(4, 4);
                for (int r = 0; r < 4; ++r)
                    for (int c = 0; c < 4; ++c)
                        for (int k = 0; k < 4; ++k)
                            prod.at(r, c) += mv.at(r, k) * mu.at(k, c);
                t[i][j] = supertrace(prod);
            }
        return t;
    }();
    return table[slot_minus][slot_plus];
}

}  // namespace

SymPoly k_action(Block b, int gen, const SymPoly& f) {
    const SuperAlgebra& g = gl22::algebra();
    bool gen_odd = g.odd(gen);
    SymPoly out;
    for (const auto& [key, c] : f) {
        std::vector<int> w = key_to_word(key);
        for (size_t t = 0; t < w.size(); ++t) {
            int prefix_odd = 0;
            for (size_t s = 0; s < t; ++s)
                if (slot_odd(w[s])) prefix_odd ^= 1;
            Scalar koszul((gen_odd && prefix_odd) ? -1 : 1);
            for (const auto& [target, cb] : g.bracket(gen, block_slots(b)[w[t]])) {
                int slot = slot_of(b, target);
                if (slot < 0)
                    throw std::logic_error("k_action: bracket left the block");
                std::vector<int> nw = w;
                nw[t] = slot;
                int sign = 1;
                if (sort_word(nw, sign))
                    sym_add(out, word_to_key(nw), c * cb * koszul * Scalar(sign));
            }
        }
    }
    return out;
}

Scalar sym_pair(const SymKey& pminus_mono, const SymPoly& pplus) {
    // apply the monomial letters as superderivations, rightmost first
    std::vector<int> letters = key_to_word(pminus_mono);
    SymPoly cur = pplus;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        int lm = *it;
        bool lm_odd = slot_odd(lm);
        SymPoly next;
        for (const auto& [key, c] : cur) {
            std::vector<int> w = key_to_word(key);
            for (size_t t = 0; t < w.size(); ++t) {
                const Scalar& bv = pair_value(lm, w[t]);
                if (bv.is_zero()) continue;
                int prefix_odd = 0;
                for (size_t s = 0; s < t; ++s)
                    if (slot_odd(w[s])) prefix_odd ^= 1;
                Scalar koszul((lm_odd && prefix_odd) ? -1 : 1);
                std::vector<int> nw = w;
                nw.erase(nw.begin() + (long)t);
                sym_add(next, word_to_key(nw), c * bv * koszul);
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(SymKey{0, 0, 0, 0});
    return it == cur.end() ? Scalar(0) : it->second;
}

Scalar sym_pair(const SymPoly& pminus, const SymPoly& pplus) {
    Scalar acc(0);
    for (const auto& [k, c] : pminus) acc += c * sym_pair(k, pplus);
    return acc;
}

namespace {

std::vector<SymKey> degree_monomials(int d) {
    std::vector<SymKey> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) {
            int rest = d - a - b;
            if (rest > 2) continue;
            for (int e = std::min(rest, 1); e >= 0; --e) {
                int f = rest - e;
                if (f > 1) continue;
                out.push_back({a, b, e, f});
            }
        }
    return out;
}

std::array<int, 4> monomial_weight(Block blk, const SymKey& k) {
    // generator weights in (e+, e-, d+, d-) coordinates
    static const int wplus[4][4] = {
        {1, -1, 0, 0}, // X1
        {0, 0, 1, -1}, // X2
        {1, 0, 0, -1}, // eta12
        {0, -1, 1, 0}, // xi12
    };
    static const int wminus[4][4] = {
        {-1, 1, 0, 0}, // Y1
        {0, 0, -1, 1}, // Y2
        {-1, 0, 0, 1}, // eta21
        {0, 1, -1, 0}, // xi21
    };
    std::array<int, 4> w{0, 0, 0, 0};
    for (int slot = 0; slot < 4; ++slot)
        for (int t = 0; t < 4; ++t)
            w[t] += k[slot] * (blk == Block::PPlus ? wplus[slot][t] : wminus[slot][t]);
    return w;
}

std::vector<Scalar> poly_coords(const SymPoly& f, const std::vector<SymKey>& monos) {
    std::vector<Scalar> v(monos.size(), Scalar(0));
    for (const auto& [k, c] : f) {
        auto it = std::find(monos.begin(), monos.end(), k);
        if (it == monos.end()) throw std::logic_error("poly_coords: monomial outside space");
        v[it - monos.begin()] = c;
    }
    return v;
}

// closes a seed under the two lowering operators, tracking the span exactly
std::vector<SymPoly> lowering_closure(Block blk, const SymPoly& seed,
                                      const std::array<int, 2>& lowering, int d) {
    std::vector<SymKey> monos = degree_monomials(d);
    std::vector<SymPoly> basis;
    ExactMatrix rows(0, (int)monos.size());
    auto try_add = [&](const SymPoly& f) {
        if (f.empty()) return false;
        ExactMatrix test = rows;
        test.append_row(poly_coords(f, monos));
        if (test.rank() == rows.rows()) return false;
        rows = std::move(test);
        basis.push_back(f);
        return true;
    };
    try_add(seed);
    for (size_t i = 0; i < basis.size(); ++i)
        for (int gen : lowering) try_add(k_action(blk, gen, basis[i]));
    return basis;
}

// highest vector of the component: the given weight, killed by both raisers
SymPoly highest_vector(Block blk, const std::array<int, 4>& weight,
                       const std::array<int, 2>& raising, int d, const Partition& mu) {
    std::vector<SymKey> monos = degree_monomials(d);
    std::vector<SymKey> wspace;
    for (const SymKey& k : monos)
        if (monomial_weight(blk, k) == weight) wspace.push_back(k);
    if (wspace.empty())
        throw std::runtime_error("isotypic_decomposition: no weight space for mu=" + mu.str());
    std::map<SymKey, int> row_of;
    std::vector<std::vector<std::pair<SymKey, Scalar>>> cols(wspace.size());
    for (size_t j = 0; j < wspace.size(); ++j)
        for (int r = 0; r < 2; ++r) {
            SymPoly img = k_action(blk, raising[r], SymPoly{{wspace[j], Scalar(1)}});
            for (const auto& [k, c] : img) {
                SymKey tagged = k;
                tagged[0] += 1000 * r; // separate the two operators' blocks
                row_of.emplace(tagged, (int)row_of.size());
                cols[j].push_back({tagged, c});
            }
        }
    ExactMatrix m((int)row_of.size(), (int)wspace.size());
    for (size_t j = 0; j < wspace.size(); ++j)
        for (const auto& [k, c] : cols[j]) m.at(row_of[k], (int)j) += c;
    auto ker = nullspace(m);
    if (ker.size() != 1)
        throw std::runtime_error("isotypic_decomposition: highest vector space for mu=" +
                                 mu.str() + " has dimension " + std::to_string(ker.size()));
    SymPoly hw;
    for (size_t j = 0; j < wspace.size(); ++j) sym_add(hw, wspace[j], ker[0][j]);
    return hw;
}

}  // namespace

std::vector<IsotypicComponent> isotypic_decomposition(int d) {
    if (d < 0 || d > 3)
        throw std::invalid_argument("isotypic_decomposition: supported range is d <= 3");
    std::vector<IsotypicComponent> out;
    int total = 0;
    for (const Partition& mu : enumerate_hooks(HookProfile{1, 1}, d, EnumMode::ExactSize)) {
        IsotypicComponent comp;
        comp.mu = mu;
        if (d == 0) {
            comp.basis = {SymPoly{{SymKey{0, 0, 0, 0}, Scalar(1)}}};
            comp.dual_basis = comp.basis;
            out.push_back(std::move(comp));
            ++total;
            continue;
        }
        NaturalCoords nc = lambda_natural(mu, HookProfile{1, 1});
        std::array<int, 4> wt{nc.bosonic[0], -nc.bosonic[0], nc.fermionic[0], -nc.fermionic[0]};
        SymPoly hw = highest_vector(Block::PPlus, wt, {gl22::eta11, gl22::xi22}, d, mu);
        comp.basis = lowering_closure(Block::PPlus, hw, {gl22::xi11, gl22::eta22}, d);
        comp.dual_basis = dual_basis(mu, comp.basis);
        total += (int)comp.basis.size();
        out.push_back(std::move(comp));
    }
    int expect = (int)degree_monomials(d).size();
    if (total != expect)
        throw std::runtime_error("isotypic_decomposition: dimensions sum to " +
                                 std::to_string(total) + ", expected " + std::to_string(expect));
    return out;
}

std::vector<SymPoly> dual_basis(const Partition& mu, const std::vector<SymPoly>& w_basis) {
    int d = mu.size();
    std::vector<SymPoly> cands;
    if (d == 0) {
        cands = {SymPoly{{SymKey{0, 0, 0, 0}, Scalar(1)}}};
    } else {
        NaturalCoords nc = lambda_natural(mu, HookProfile{1, 1});
        std::array<int, 4> wt{-nc.bosonic[0], nc.bosonic[0], -nc.fermionic[0], nc.fermionic[0]};
        SymPoly hw = highest_vector(Block::PMinus, wt, {gl22::xi11, gl22::eta22}, d, mu);
        cands = lowering_closure(Block::PMinus, hw, {gl22::eta11, gl22::xi22}, d);
    }
    if (cands.size() != w_basis.size())
        throw std::runtime_error("dual_basis: mirrored component dimension mismatch for mu=" +
                                 mu.str());
    int n = (int)w_basis.size();
    ExactMatrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram.at(i, j) = sym_pair(cands[i], w_basis[j]);
    ExactMatrix ginv = inverse(gram); // throws on singular pairing
    std::vector<SymPoly> duals;
    for (int l = 0; l < n; ++l) {
        SymPoly f;
        for (int i = 0; i < n; ++i)
            for (const auto& [k, c] : cands[i]) sym_add(f, k, c * ginv.at(l, i));
        duals.push_back(std::move(f));
    }
    return duals;
}

namespace {
SuperElt to_enveloping(Block blk, const SymPoly& f) {
    SuperElt out;
    for (const auto& [key, c] : f) {
        Word w;
        for (int slot = 0; slot < 4; ++slot)
            for (int t = 0; t < key[slot]; ++t) w.push_back((uint8_t)block_slots(blk)[slot]);
        out.add(std::move(w), c);
    }
    return out;
}
}  // namespace

ShimuraOp shimura_operator(const Partition& mu) {
    if (!is_hook(mu, HookProfile{1, 1}) || mu.size() > 3)
        throw std::invalid_argument("shimura_operator: need a (1,1)-hook with |mu| <= 3");
    const SuperAlgebra& g = gl22::algebra();
    std::vector<IsotypicComponent> dec = isotypic_decomposition(mu.size());
    const IsotypicComponent* comp = nullptr;
    for (const auto& c : dec)
        if (c.mu == mu) comp = &c;
    if (!comp) throw std::logic_error("shimura_operator: component not found");
    SuperElt d;
    for (size_t l = 0; l < comp->basis.size(); ++l)
        d += g.mul(to_enveloping(Block::PMinus, comp->dual_basis[l]),
                   to_enveloping(Block::PPlus, comp->basis[l]));
    ShimuraOp op{mu, d};
    if (!PairRealization::instance().is_k_invariant(op.element))
        throw std::runtime_error("shimura_operator: element is not k-invariant for mu=" +
                                 mu.str());
    return op;
}

ExactPoly gamma_of_shimura(const Partition& mu) {
    ShimuraOp op = shimura_operator(mu);
    ExactPoly g = PairRealization::instance().gamma(op.element);
    if (g.is_zero())
        throw std::runtime_error("gamma_of_shimura: zero image for mu=" + mu.str());
    return g;
}

ShimuraVerification verify_shimura(const Partition& mu, int extra_slack) {
    SusyProfile prof{1, 1};
    ShimuraVerification v;
    v.gamma = gamma_of_shimura(mu);
    v.in_ring = is_in_lambda0(v.gamma, prof);
    InterpResult ir = solve_interpolation(mu, prof);
    v.interp = ir.poly;

    // proportionality constant: evaluation at the top point, or the ratio of
    // leading coefficients when the normalization evaluation is zero there
    Scalar top = ir.value_at(mu);
    if (!top.is_zero()) {
        v.c_mu = v.gamma.eval(eval_point(mu, prof)) / top;
    } else {
        v.degenerate_ratio = true;
        for (const auto& [e, c] : ir.poly.terms()) {
            Scalar g = v.gamma.coeff(e);
            v.c_mu = g / c;
            break;
        }
    }
    v.proportional = !v.c_mu.is_zero() && (v.gamma - ir.poly * v.c_mu).is_zero();

    // vanishing at all eval points of hooks != mu with |lam| <= |mu|, plus
    // the inherited extra vanishing
    for (const Partition& lam :
         enumerate_hooks(HookProfile{1, 1}, mu.size() + extra_slack, EnumMode::UpToSize)) {
        bool must_vanish = (lam.size() <= mu.size() && lam != mu) || !contains(lam, mu);
        if (!must_vanish) continue;
        if (!v.gamma.eval(eval_point(lam, prof)).is_zero()) v.vanishing_failures.push_back(lam);
    }
    return v;
}

}  // namespace superbc
