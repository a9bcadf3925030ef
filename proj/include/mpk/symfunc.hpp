/**
 * @file symfunc.hpp
 * @brief Symmetric functions in r groups of m variables: bases indexed by
 *        r-partitions, transition matrices and the bilinear form.
 *
 * All expansions are degree-homogeneous with m = n variables per group
 * unless a caller passes a larger m.
 */
#pragma once

#include "mpk/combinat.hpp"
#include "mpk/matrix.hpp"
#include "mpk/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace mpk {

enum class Sign { Plus, Minus };
enum class Basis { S, M, H, QPlus, QMinus, PPlus, PMinus, HLQPlus, HLQMinus };

std::string sign_name(Sign s);
Sign parse_sign(const std::string& s);
std::string basis_name(Basis b);

/// Values of the parameters t_1..t_r inside a coefficient ring.
struct Params {
    RingPtr ring;
    std::vector<Poly> t;

    int r() const { return static_cast<int>(t.size()); }
    /// t_k with k read cyclically.
    const Poly& tk(int k) const { return t[cyc(r(), k) - 1]; }
    /// t_1 * ... * t_r.
    Poly t0() const;
    /// Canonical text, e.g. "t1=t,t2=t".
    std::string key() const;

    /// t_k -> t_k in Z[t1..tr].
    static Params generic(int r);
    /// t_k -> t in Z[t].
    static Params uniform(int r);
    /// Parses "t1=...,t2=..." with right sides over the variables they mention.
    static Params parse(int r, const std::string& spec);
};

/// r-partitions of n in descending total order with reverse lookup.
class Index {
public:
    Index(int n, int r);
    int n() const { return n_; }
    int r() const { return r_; }
    std::size_t size() const { return parts_.size(); }
    const RPartition& operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<RPartition>& parts() const { return parts_; }
    /// Position of lam; throws if absent.
    std::size_t find(const RPartition& lam) const;

private:
    int n_, r_;
    std::vector<RPartition> parts_;
    std::map<RPartition, std::size_t> pos_;
};
using IndexPtr = std::shared_ptr<const Index>;

template <class C>
struct SymElem {
    IndexPtr index;
    Basis basis;
    std::vector<C> coords;
};
using SymPoly = SymElem<Poly>;
using SymFrac = SymElem<Frac>;

/// Polynomial ring in x^(k)_i (k = 1..r, i = 1..m) followed by the
/// coefficient variables of a Params.
class XSpace {
public:
    XSpace(int r, int m, Params params);
    int r() const { return r_; }
    int m() const { return m_; }
    const RingPtr& ring() const { return ring_; }
    const Params& params() const { return params_; }
    std::size_t nx() const { return static_cast<std::size_t>(r_) * m_; }
    /// Variable slot of x^(k)_i (1-based k, i; k cyclic).
    std::size_t xvar(int k, int i) const { return static_cast<std::size_t>(cyc(r_, k) - 1) * m_ + (i - 1); }
    Poly x(int k, int i) const { return Poly::variable(ring_, xvar(k, i)); }
    /// Lifts a coefficient-ring polynomial.
    Poly lift(const Poly& c) const;
    /// Projects a polynomial free of x onto the coefficient ring.
    Poly project(const Poly& p) const;
    Poly t(int k) const { return lift(params_.tk(k)); }
    Poly one() const { return Poly::constant(ring_, 1); }
    Poly zero() const { return Poly(ring_); }

    /// Complete and elementary symmetric polynomials of group k.
    Poly h(int k, int a) const;
    Poly e(int k, int b) const;

private:
    int r_, m_;
    Params params_;
    RingPtr ring_;
    std::size_t coeff_offset_;
    std::vector<Poly> to_coeff_images_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<int, int>, Poly> h_cache_, e_cache_;
};

/// SSYT count of shape lam and content mu.
Int kostka_number(const Partition& lam, const Partition& mu);
/// K_{lam,mu} = prod_k K_{lam^(k), mu^(k)}.
Int kostka_number(const RPartition& lam, const RPartition& mu);
/// Monomial symmetric polynomial m_mu(x) in the x-variables.
Poly monomial_x(const RPartition& mu, const XSpace& xs);
/// Schur polynomial via Kostka numbers.
Poly schur_x(const RPartition& lam, const XSpace& xs);
/// Schur polynomial as a_{lam+delta} / a_delta per group (small m only).
Poly schur_alternant_x(const RPartition& lam, const XSpace& xs);

/// Reads the m-basis coordinates of an x-polynomial symmetric in each group.
/// Throws std::domain_error on asymmetry or inhomogeneity.
SymPoly expand_to_m(const Poly& f, const IndexPtr& index, const XSpace& xs);
/// Reads m-coordinates without the symmetry check (caller guarantees it).
std::vector<Poly> m_coords_unchecked(const Poly& f, const Index& index, const XSpace& xs);

/// q^(k)_{s,+-}(x; t) = sum_{a+b=s} h_a(x^(k)) (-t)^b e_b(x^(k-+1)).
Poly q_func_x(int k, int s, Sign sign, const Poly& t, const XSpace& xs);
/// Product of q-functions over an r-composition (zero if any entry < 0).
Poly q_basis_x(const Composition& beta, Sign sign, const XSpace& xs);
/// The direct rational form of q^(k)_{s,+-} evaluated at a point (oracle).
Rat q_func_rational(int k, int s, Sign sign, const Rat& t, int r, int m,
                    const std::vector<std::vector<Rat>>& x);

/// Shared transition data for one (n, r, params).
class SymContext {
public:
    SymContext(int n, int r, Params params, unsigned jobs = 1);

    int n() const { return index_->n(); }
    int r() const { return index_->r(); }
    const IndexPtr& index() const { return index_; }
    const XSpace& xs() const { return xs_; }
    const Params& params() const { return xs_.params(); }
    const RingPtr& ring() const { return xs_.params().ring; }
    unsigned jobs() const { return jobs_; }

    /// M(s,m): row lam = Schur function in the m-basis.
    const IntMatrix& kostka() const;
    const IntMatrix& kostka_inverse() const;
    /// M(q+-, s): row lam = q+-_lam in the s-basis.
    const PolyMatrix& q_to_s(Sign sign) const;
    /// s-coordinates of an x-polynomial.
    std::vector<Poly> s_coords(const Poly& f) const;

private:
    IndexPtr index_;
    XSpace xs_;
    unsigned jobs_;
    mutable std::once_flag k_once_, q_once_[2];
    mutable IntMatrix k_, kinv_;
    mutable PolyMatrix q_[2];
};

/// <f, g> for f, g in s-coordinates: f in q+ coordinates paired with g in
/// m coordinates.
Frac bilinear_form(const SymContext& ctx, const std::vector<Poly>& f, const std::vector<Poly>& g);

/// Which identity cauchy_check compares against the kernel.
enum class CauchyKind { Plus, Minus, PQ };

struct CauchyResult {
    bool ok;
    std::string witness;
};

/// Coefficient of m_mu(x) m_nu(y) in the degree-n part of the kernel,
/// by direct series expansion with m = n.
PolyMatrix cauchy_kernel_mm(const SymContext& ctx);
/// Compares sum_lam F_lam(x) G_lam(y) with the kernel; F, G rows in
/// s-coordinates.
CauchyResult cauchy_compare(const SymContext& ctx, const PolyMatrix& f_s, const PolyMatrix& g_s);
/// Plus: q+ against m; Minus: m against q-.
CauchyResult cauchy_check(const SymContext& ctx, CauchyKind which);

/// Classical Hall-Littlewood P_lam(y_1..y_m; t) by symmetrization, as an
/// x-polynomial over the ring of XSpace(1, m, Params::uniform(1)).
Poly classical_hl_x(const Partition& lam, const XSpace& xs);
/// Classical P_lam in the s-basis of partitions of |lam|.
std::vector<Poly> classical_hl_s(const Partition& lam);
/// Classical Kostka-Foulkes polynomial K_{lam,mu}(t) over Z[t].
Poly classical_kostka(const Partition& lam, const Partition& mu);

/// Left side of the symmetrization identity for x^(a)..x^(b) at a point;
/// x[k-1][i-1] is x^(k)_i and t[k-1] is t_k.
Rat symmetrized_product_lhs(int m, int a, int b, const std::vector<std::vector<Rat>>& x, const std::vector<Rat>& t);
/// (m-1)!^(b-a).
Rat symmetrized_product_rhs(int m, int a, int b);
Rat symmetrized_mixed_lhs(int m, const std::vector<Rat>& x, const std::vector<Rat>& y, const std::vector<Rat>& z,
                const Rat& t1, const Rat& t3);
Rat symmetrized_mixed_rhs(int m, const std::vector<Rat>& y, const std::vector<Rat>& z, const Rat& t1, const Rat& t3);

/// Classical q_s(y; t) from its symmetrized rational form, at a point.
Rat classical_q_rational(int s, const Rat& t, const std::vector<Rat>& y);

/// Modified q-function without the x^(k-+1)_1 factor (generating-function
/// form); sign Minus uses group r against group 1, Plus uses group k against k-1.
Poly tilde_q_x(int k, int s, Sign sign, const Poly& t, const XSpace& xs);
/// Same function from its interpolation (rational) form, at a point.
Rat tilde_q_rational(int k, int s, Sign sign, const Rat& t, int r, int m,
                     const std::vector<std::vector<Rat>>& x);

}  // namespace mpk
