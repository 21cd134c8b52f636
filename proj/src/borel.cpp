#include "superbc/borel.hpp"

#include <algorithm>
#include <stdexcept>

namespace superbc {

std::string ChainEntry::str() const {
    std::string s = (marker == Marker::Epsilon) ? "e" : "d";
    s += std::to_string(index);
    s += (sign > 0) ? "+" : "-";
    return s;
}

std::string MarkedWeight::str() const {
    std::string out = "(";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += " ";
        out += (chain[i].marker == Marker::Epsilon) ? "." : "x";
        out += std::to_string(coeffs[i]);
    }
    return out + ")";
}

std::vector<std::pair<ChainEntry, int>> MarkedWeight::character() const {
    std::vector<std::pair<ChainEntry, int>> v;
    for (size_t i = 0; i < chain.size(); ++i) v.push_back({chain[i], coeffs[i]});
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        auto key = [](const ChainEntry& e) {
            return std::tuple<int, int, int>((int)e.marker, e.sign, e.index);
        };
        return key(a.first) < key(b.first);
    });
    return v;
}

MarkedWeight odd_reflect(const MarkedWeight& w, int pos) {
    if (pos < 0 || pos + 1 >= (int)w.chain.size())
        throw std::out_of_range("odd_reflect: position out of range");
    if (w.chain[pos].marker == w.chain[pos + 1].marker)
        throw std::invalid_argument(
            "odd_reflect: adjacent pair has equal markers (an even simple root)");
    MarkedWeight out = w;
    std::swap(out.chain[pos], out.chain[pos + 1]);
    int u = w.coeffs[pos], v = w.coeffs[pos + 1];
    if (u == -v) {
        out.coeffs[pos] = v;
        out.coeffs[pos + 1] = u;
    } else {
        out.coeffs[pos] = v + 1;
        out.coeffs[pos + 1] = u - 1;
    }
    return out;
}

bool is_dominant(const MarkedWeight& w) {
    int last_eps = 0, last_del = 0;
    bool have_eps = false, have_del = false;
    for (size_t i = 0; i < w.chain.size(); ++i) {
        if (w.chain[i].marker == Marker::Epsilon) {
            if (have_eps && w.coeffs[i] > last_eps) return false;
            last_eps = w.coeffs[i];
            have_eps = true;
        } else {
            if (have_del && w.coeffs[i] > last_del) return false;
            last_del = w.coeffs[i];
            have_del = true;
        }
    }
    return true;
}

MarkedWeight opposite_natural_weight(const Partition& lam, const HookProfile& prof) {
    NaturalCoords nc = lambda_natural(lam, prof);
    MarkedWeight w;
    for (int i = 1; i <= prof.p; ++i) {
        w.chain.push_back({Marker::Epsilon, -1, i});
        w.coeffs.push_back(nc.bosonic[i - 1]);
    }
    for (int j = 1; j <= prof.q; ++j) {
        w.chain.push_back({Marker::Delta, -1, j});
        w.coeffs.push_back(nc.fermionic[j - 1]);
    }
    for (int j = prof.q; j >= 1; --j) {
        w.chain.push_back({Marker::Delta, +1, j});
        w.coeffs.push_back(-nc.fermionic[j - 1]);
    }
    for (int i = prof.p; i >= 1; --i) {
        w.chain.push_back({Marker::Epsilon, +1, i});
        w.coeffs.push_back(-nc.bosonic[i - 1]);
    }
    return w;
}

FdReport verify_fd(const Partition& lam, const HookProfile& prof) {
    FdReport rep;
    MarkedWeight w = opposite_natural_weight(lam, prof);
    rep.trace.push_back(w);
    // move ep+ from position p+2q left to position p
    for (int t = prof.p + 2 * prof.q; t > prof.p; --t) {
        w = odd_reflect(w, t - 1);
        rep.trace.push_back(w);
    }
    rep.dominant = is_dominant(w);
    int lam_p = lam.part(prof.p - 1);
    rep.case_two = lam_p < prof.q;
    if (rep.case_two) {
        NaturalCoords nc = lambda_natural(lam, prof);
        rep.l_count = (int)std::count_if(nc.fermionic.begin(), nc.fermionic.end(),
                                         [](int v) { return v > 0; });
        rep.tau1 = w.coeffs[prof.p];
        rep.tau1_matches = (rep.tau1 == rep.l_count);
    }
    return rep;
}

MarkedWeight kac_weight(const Partition& lam, const HookProfile& prof) {
    MarkedWeight w = opposite_natural_weight(lam, prof);
    // settle ep+, ..., e1+ one by one just past the epsilon-minus block
    for (int k = 0; k < prof.p; ++k)
        for (int t = prof.p + k + 2 * prof.q; t > prof.p + k; --t) w = odd_reflect(w, t - 1);
    return w;
}

std::array<int, 4> kac_weight_11(int a, int b) {
    if (a < 1 || b < 0) throw std::invalid_argument("kac_weight_11: need a >= 1, b >= 0");
    std::vector<int> parts{a};
    parts.insert(parts.end(), b, 1);
    MarkedWeight w = kac_weight(Partition(parts), HookProfile{1, 1});
    return {w.coeffs[0], w.coeffs[1], w.coeffs[2], w.coeffs[3]};
}

bool is_guaranteed_spherical(const Partition& lam, const HookProfile& prof) {
    if (!is_hook(lam, prof)) throw std::invalid_argument("is_guaranteed_spherical: not a hook");
    int lam_p = lam.part(prof.p - 1);
    int col = std::max(lam.transpose().part(0) - prof.p, 0);
    return lam_p > col;
}

}  // namespace superbc
