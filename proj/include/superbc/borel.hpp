// epsilon-delta chains, marked weights, odd reflections, dominance, and the
// finite-dimensionality bookkeeping for the hook-indexed modules.
#ifndef SUPERBC_BOREL_HPP
#define SUPERBC_BOREL_HPP

#include <array>
#include <string>
#include <vector>

#include "superbc/partition.hpp"

namespace superbc {

enum class Marker { Epsilon, Delta }; // displayed as a dot / cross

struct ChainEntry {
    Marker marker;
    int sign;  // +1 or -1
    int index; // 1-based within its family
    friend bool operator==(const ChainEntry& a, const ChainEntry& b) {
        return a.marker == b.marker && a.sign == b.sign && a.index == b.index;
    }
    std::string str() const; // e.g. "e1+", "d2-"
};

struct MarkedWeight {
    std::vector<ChainEntry> chain;
    std::vector<int> coeffs; // aligned with chain
    std::string str() const; // e.g. "(.3 x1 x-1 .-3)" with markers

    // total weight as a character vector, keyed by chain entry identity;
    // entries follow a fixed (marker, sign, index) enumeration order
    std::vector<std::pair<ChainEntry, int>> character() const;
};

// swaps the adjacent opposite-marker pair at (pos, pos+1); coefficients
// follow the two-case rule: plain swap when left = -right, otherwise
// (right+1, left-1). Rejects same-marker pairs.
MarkedWeight odd_reflect(const MarkedWeight& w, int pos);

// weak decrease of the coefficients along the epsilon subsequence and along
// the delta subsequence of the chain
bool is_dominant(const MarkedWeight& w);

// -lambda^natural over the chain [e1- .. ep- | d1- .. dq- dq+ .. d1+ | ep+ .. e1+]
MarkedWeight opposite_natural_weight(const Partition& lam, const HookProfile& prof);

struct FdReport {
    std::vector<MarkedWeight> trace; // weight after each of the 2q reflections
    bool dominant = false;
    bool case_two = false;   // lambda_p < q
    int tau1 = 0, l_count = 0;
    bool tau1_matches = true; // tau1 == l in case (ii)
    bool passed() const { return dominant && tau1_matches; }
};

// runs the 2q reflections that move ep+ left through the delta block and
// checks dominance of the resulting weight, plus the tau1 = l claim when
// lambda_p < q
FdReport verify_fd(const Partition& lam, const HookProfile& prof);

// full 2pq-reflection path from the opposite-natural chain to the
// distinguished chain [e1- .. ep- ep+ .. e1+ | d1- .. dq- dq+ .. d1+]
MarkedWeight kac_weight(const Partition& lam, const HookProfile& prof);

// p = q = 1 convenience: the four coefficients of the Kac highest weight for
// lam = (a, 1^b), in standard-chain reading order
std::array<int, 4> kac_weight_11(int a, int b);

// lambda_p > max(lambda'_1 - p, 0): high-enough sphericity guarantee
bool is_guaranteed_spherical(const Partition& lam, const HookProfile& prof);

}  // namespace superbc

#endif
