/**
 * @file combinat.hpp
 * @brief Partitions, r-partitions and integer statistics on the interleaved
 *        index set M = {(k,i)}.
 *
 * Positions are 0-based internally: (k,i) with 1-based k, i sits at
 * (i-1)*r + (k-1).
 */
#pragma once

#include "mpk/poly.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mpk {

class Partition {
public:
    Partition() = default;
    /// Validates weak decrease and nonnegativity; trims trailing zeros.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    /// Part i (0-based), zero past the length.
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    bool empty() const { return parts_.empty(); }
    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

class RPartition {
public:
    RPartition() = default;
    explicit RPartition(std::vector<Partition> comps);

    int r() const { return static_cast<int>(comps_.size()); }
    int size() const;
    const Partition& operator[](int k) const { return comps_[k]; }
    const std::vector<Partition>& components() const { return comps_; }
    /// Largest component length.
    int max_length() const;
    bool empty() const { return size() == 0; }
    std::string str() const;

    friend auto operator<=>(const RPartition&, const RPartition&) = default;

private:
    std::vector<Partition> comps_;
};

/// Integer vector over M (entries may be negative).
using Composition = std::vector<long>;

inline int pos_of(int r, int k, int i) { return (i - 1) * r + (k - 1); }
/// 1-based component of a 0-based position.
inline int comp_of(int r, int p) { return p % r + 1; }
/// 1-based row of a 0-based position.
inline int row_of(int r, int p) { return p / r + 1; }
/// Cyclic reduction of a component index into 1..r.
inline int cyc(int r, int k) { return ((k - 1) % r + r) % r + 1; }

std::vector<Partition> gen_partitions(int n);
/// All r-partitions of n, descending in the total order.
std::vector<RPartition> gen_rpartitions(int n, int r);

Composition c_map(const RPartition& lam, int m);
/// Inverse of c_map for a composition whose groups are weakly decreasing
/// and nonnegative.
RPartition from_c(const Composition& c, int r);
/// Sorts each component group descending; nullopt if any entry is negative.
std::optional<RPartition> sort_composition(const Composition& c, int r);

bool dominance_leq(const RPartition& a, const RPartition& b);
/// Descending lexicographic comparison of c-vectors.
std::strong_ordering total_order_cmp(const RPartition& a, const RPartition& b);

long n_stat(const Composition& xi);
long a_stat(const RPartition& lam);

/// Poincare polynomial of S_k in variable @p var of @p ring.
Poly v_poly(int k, const RingPtr& ring, std::size_t var);
/// Largest position with a nonzero entry of c(lam); lam must be nonempty.
int nu0(const RPartition& lam, int m);
/// prod_k v_{lam'_k}(t_k), lam'_k = #{i <= m : (k,i) > nu0}.
Poly v_prime(const RPartition& lam, int m, const RingPtr& tring);
/// max(l(lam^(r)) - p, 0) with p the largest row index at which some
/// component k < r is nonzero.
int j0_exponent(const RPartition& lam);

struct DeltaSets {
    std::vector<int> delta0, delta1;  // 0-based positions
};
DeltaSets delta_sets(const RPartition& lam, int m);

Partition parse_partition(const std::string& text);
RPartition parse_rpartition(const std::string& text);

}  // namespace mpk
