// Integer partitions, (p,q)-hook membership and the natural coordinate map
// that bisects a hook partition at row p.
#ifndef SUPERBC_PARTITION_HPP
#define SUPERBC_PARTITION_HPP

#include <string>
#include <vector>

namespace superbc {

struct HookProfile {
    int p = 1;
    int q = 1;
};

// bosonic block = first p rows, fermionic block = column lengths past row p
struct NaturalCoords {
    std::vector<int> bosonic;   // p entries
    std::vector<int> fermionic; // q entries
};

class Partition {
  public:
    Partition() = default;
    // trims trailing zeros; rejects increasing or negative part lists
    explicit Partition(std::vector<int> parts);

    static Partition parse(const std::string& s); // "3,1,1" or "" for empty

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i < (int)parts_.size() ? parts_[i] : 0; } // 0-based
    int length() const { return (int)parts_.size(); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    Partition transpose() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    // size first, then lexicographic with larger first part earlier:
    // (2) precedes (1,1). Refines size as required for triangular solves.
    friend bool operator<(const Partition& a, const Partition& b);

    std::string str() const; // "(3,1,1)" / "()"

  private:
    std::vector<int> parts_;
};

bool is_hook(const Partition& lam, const HookProfile& prof);

// lam_i for i <= p, max(lam'_j - p, 0) for j <= q; rejects non-hooks
NaturalCoords lambda_natural(const Partition& lam, const HookProfile& prof);

// mu contained in lam: lam_i >= mu_i for all i
bool contains(const Partition& lam, const Partition& mu);

enum class EnumMode { ExactSize, UpToSize };

// all hook partitions with |lam| = d (or <= d), in the fixed total order
std::vector<Partition> enumerate_hooks(const HookProfile& prof, int d, EnumMode mode);

// all partitions of size exactly d (no hook filter); used as enumeration oracle
std::vector<Partition> all_partitions(int d);

}  // namespace superbc

#endif
