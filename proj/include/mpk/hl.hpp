/**
 * @file hl.hpp
 * @brief Multi-parameter Hall-Littlewood functions P+-, Q+-.
 *
 * Production: Q+ from the raising-operator product, Q- by duality with P+.
 * Oracles: closed symmetrized formulas R+-, R#, and Gram-Schmidt.
 * Every result is a row of Schur coordinates over the SymContext index.
 */
#pragma once

#include "mpk/symfunc.hpp"

#include <map>
#include <vector>

namespace mpk {

/// Raising operator R_{p,pp} (0-based positions, p < pp) with its role.
/// weight == -1: numerator factor (1 - R); 1..r: 1/(1 - t_weight R);
/// 0: 1/(1 - t0 R).
struct Root {
    int p, pp;
    int weight;
};

/// Same-component numerators, b(nu') = b(nu)+1 denominators weighted t_{b(nu)}.
std::vector<Root> roots_plus(int r, int m);
/// The literal root data of the "-" product built from the Delta-sets of lam.
std::vector<Root> roots_minus_literal(const RPartition& lam, int m);

/// Coefficient of each reachable nonnegative composition, as a polynomial in
/// the weight ring (t1..tr, t0), before any parameter substitution.
using RaisingTerms = std::map<Composition, Poly>;
RaisingTerms raising_expand(const RPartition& lam, int m, const std::vector<Root>& roots);
/// The weight ring used by raising_expand for r components.
RingPtr weight_ring(int r);
/// Images of the weight ring variables under @p params.
std::vector<Poly> weight_images(const Params& params);

/// Q+_lam in the q+ basis (coordinates over the context index).
std::vector<Poly> raising_Q_plus_q(const SymContext& ctx, const RPartition& lam);
/// Q+_lam in the s basis.
std::vector<Poly> raising_Q_plus_s(const SymContext& ctx, const RPartition& lam);
/// The literal "-" raising product applied to q-_lam, in the s basis. Rows in
/// Delta0 use the one-parameter q(x^(r); t0). Diagnostic only: it is not Q-.
std::vector<Poly> raising_Q_minus_literal_s(const SymContext& ctx, const RPartition& lam);

/// Both families at once; rows are Schur coordinates, b holds the Schur
/// diagonals of Q.
struct HLTables {
    PolyMatrix q_plus, q_minus, p_plus, p_minus;
    std::vector<Poly> b_plus, b_minus;
    const PolyMatrix& Q(Sign s) const { return s == Sign::Plus ? q_plus : q_minus; }
    const PolyMatrix& P(Sign s) const { return s == Sign::Plus ? p_plus : p_minus; }
};
HLTables hl_tables(const SymContext& ctx);

/// R+-_lam in the s basis by antisymmetrization (m = ctx m).
std::vector<Poly> closed_R_s(const SymContext& ctx, const RPartition& lam, Sign sign);
/// (1 - t0)^j0 R-_lam / v'_lam.
std::vector<Poly> closed_Q_minus_s(const SymContext& ctx, const RPartition& lam);
/// R#_lam in the s basis.
std::vector<Poly> sharp_R_s(const SymContext& ctx, const RPartition& lam);
/// f_lam(t) = prod_{i<r} t_i^{A_i} in Z[t1..tr].
Poly sharp_f(const RPartition& lam, int m);
/// R#_lam / (v'_lam f_lam).
std::vector<Poly> sharp_Q_s(const SymContext& ctx, const RPartition& lam);

/// Schur coordinates of sum_w w(N / Vandermonde) for an x-polynomial N.
std::vector<Poly> antisymmetrize_s(const Poly& num, const SymContext& ctx);

/// Gram-Schmidt families from the bilinear form alone.
struct GramSchmidt {
    PolyMatrix p_plus, p_minus, q_plus, q_minus;
    std::vector<Poly> b;
};
/// @p order lists index positions from largest to smallest; empty means the
/// default total order. Throws InexactDivision on a broken invariant.
GramSchmidt gram_schmidt_PQ(const SymContext& ctx, const std::vector<std::size_t>& order = {});
/// A dominance-compatible total order that breaks ties the opposite way
/// from the default one.
std::vector<std::size_t> alternate_order(const Index& index);

/// sum_lam P+_lam(x) Q-_lam(y) against the kernel.
CauchyResult cauchy_check_PQ(const SymContext& ctx, const HLTables& tables);

/// Divides each entry of @p row by @p d exactly.
std::vector<Poly> divide_row(const std::vector<Poly>& row, const Poly& d);

}  // namespace mpk
