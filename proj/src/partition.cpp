#include "superbc/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superbc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(parts);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
    std::vector<int> t;
    if (parts_.empty()) return Partition();
    t.resize(parts_[0], 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j) t[j]++;
    return Partition(t);
}

bool operator<(const Partition& a, const Partition& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts_ > b.parts_; // larger first part comes earlier
}

std::string Partition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

bool is_hook(const Partition& lam, const HookProfile& prof) {
    return lam.part(prof.p) <= prof.q;
}

NaturalCoords lambda_natural(const Partition& lam, const HookProfile& prof) {
    if (!is_hook(lam, prof)) throw std::invalid_argument("lambda_natural: not a hook partition");
    NaturalCoords nc;
    Partition t = lam.transpose();
    for (int i = 0; i < prof.p; ++i) nc.bosonic.push_back(lam.part(i));
    for (int j = 0; j < prof.q; ++j) nc.fermionic.push_back(std::max(t.part(j) - prof.p, 0));
    return nc;
}

bool contains(const Partition& lam, const Partition& mu) {
    for (int i = 0; i < mu.length(); ++i)
        if (lam.part(i) < mu.part(i)) return false;
    return true;
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        cur.push_back(next);
        gen_partitions(remaining - next, next, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> all_partitions(int d) {
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(d, d == 0 ? 1 : d, cur, out);
    return out;
}

std::vector<Partition> enumerate_hooks(const HookProfile& prof, int d, EnumMode mode) {
    std::vector<Partition> out;
    int lo = (mode == EnumMode::ExactSize) ? d : 0;
    for (int s = lo; s <= d; ++s)
        for (const Partition& lam : all_partitions(s))
            if (is_hook(lam, prof)) out.push_back(lam);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace superbc
