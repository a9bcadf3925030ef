/**
 * @file kostka.hpp
 * @brief Kostka functions K+-(t1..tr): transition-matrix tables, the
 *        partition-function formulas, stability and reductions across r.
 */
#pragma once

#include "mpk/hl.hpp"

#include "json.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace mpk {

/// Weighted partition function over a restricted set of positive roots
/// e_p - e_q (p < q) of Z^M. Values live in weight_ring(r).
class PartitionFunction {
public:
    /// slot[p][q] = -1 if e_p - e_q is not admissible, k-1 for weight t_k,
    /// r for weight t0.
    PartitionFunction(int r, std::vector<std::vector<int>> slot, bool memo = true);
    PartitionFunction(PartitionFunction&& o) noexcept;

    /// Roots with b(nu') = b(nu) -+ 1 (cyclic), weight t_{b(nu)-c}.
    static PartitionFunction plain(int r, int M, Sign sign, bool memo = true);
    /// Roots A1, A0 determined by the Delta-sets of mu.
    static PartitionFunction for_mu(const RPartition& mu, int m, bool memo = true);

    int r() const { return r_; }
    int size() const { return static_cast<int>(slot_.size()); }
    /// Value at xi (sum must be zero, length M); zero when undecomposable.
    Poly operator()(const Composition& xi) const;

private:
    Poly solve(int p, std::vector<long>& need) const;

    int r_;
    std::vector<std::vector<int>> slot_;
    std::vector<std::vector<int>> targets_;
    RingPtr ring_;
    bool memo_;
    mutable std::mutex mutex_;
    mutable std::vector<std::map<std::vector<long>, Poly>> cache_;
};

/// The staircase m-i at position (k,i).
Composition component_staircase(int r, int m);

/// Signed sum over S_m^r of L(w^{-1}(c(lam)+d) - (c(mu)+d)) with the
/// per-component staircase d; result in weight_ring(r).
Poly signed_pf_sum(const RPartition& lam, const RPartition& mu, int m, const PartitionFunction& L);

/// Default padding: the largest component length of lam and mu (at least 1).
int pf_padding(const RPartition& lam, const RPartition& mu);

Poly kostka_minus_pf(const RPartition& lam, const RPartition& mu, const Params& params, int m = 0);
/// Uses the plain L+.
Poly kostka_plus_pf(const RPartition& lam, const RPartition& mu, const Params& params, int m = 0);
/// Uses L^mu_+ exactly as defined by its root classes A1, A0.
Poly kostka_plus_pf_mu(const RPartition& lam, const RPartition& mu, const Params& params, int m = 0);

/// L+-(c(lam) - c(mu)) with m = pf_padding.
Poly stable_kostka(const RPartition& lam, const RPartition& mu, Sign sign, const Params& params);
/// lam + theta with theta_i = n (M+1) 2^{m-i} added to rows i <= m of every component.
RPartition theta_shift(const RPartition& lam, int n, int m);

/// Rewrites a pair supported in the last r-a components as an (r-a)-pair
/// plus the parameter images that express K at r in terms of K at r-a.
struct Reduction {
    RPartition lam, mu;
    Params params;
};
Reduction reduce_r(const RPartition& lam, const RPartition& mu, int a);

enum class Method { Solve, PF, GramSchmidt, Raising };
std::string method_name(Method m);
Method parse_method(const std::string& s);

struct KostkaTable {
    int n = 0, r = 0;
    Sign sign = Sign::Minus;
    Method method = Method::Solve;
    std::string params;  // canonical assignment text
    RingPtr ring;
    std::vector<RPartition> order;
    PolyMatrix k;
    std::string source;  // provenance for specialized tables

    const Poly& at(const RPartition& lam, const RPartition& mu) const;
};

/// K = M(P+-, s)^{-1} from the production families.
KostkaTable kostka_by_solve(const SymContext& ctx, Sign sign);
/// Entry-wise partition-function formulas ("+" uses the plain L+); each pair
/// is padded to at least @p m_min rows.
KostkaTable kostka_by_pf(const SymContext& ctx, Sign sign, int m_min = 0);
/// K from the Gram-Schmidt families.
KostkaTable kostka_by_gram_schmidt(const SymContext& ctx, Sign sign);
/// "+": the raising product; "-": the closed symmetrized formula.
KostkaTable kostka_by_raising(const SymContext& ctx, Sign sign);
KostkaTable kostka_table(const SymContext& ctx, Sign sign, Method method);

/// Inverse of a unitriangular table of P-rows.
PolyMatrix kostka_from_P(const PolyMatrix& p);

/// Parses "v=expr,..." over the variables of @p src. Unassigned variables map
/// to themselves. The target ring lists surviving source variables first, then
/// new names in sorted order.
std::pair<RingPtr, std::vector<Poly>> parse_assignment(const RingPtr& src, const std::string& spec);

/// Substitutes every entry; @p assignment is "t1=...,..." over the table ring.
KostkaTable specialize(const KostkaTable& table, const std::string& assignment);

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j, const RingPtr& ring);
nlohmann::json table_to_json(const KostkaTable& t);
KostkaTable table_from_json(const nlohmann::json& j);
std::string table_to_csv(const KostkaTable& t);
KostkaTable table_from_csv(const std::string& text);

/// Loads a cached table or computes and stores it. Empty dir disables caching.
KostkaTable cached_table(const SymContext& ctx, Sign sign, Method method, const std::string& dir);

}  // namespace mpk
