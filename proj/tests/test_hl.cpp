#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mpk/hl.hpp"
#include "mpk/kostka.hpp"

using namespace mpk;

namespace {

RPartition rp(const char* s) { return parse_rpartition(s); }

std::vector<Poly> unit(const SymContext& ctx, const RPartition& lam) {
    std::vector<Poly> v(ctx.index()->size(), Poly(ctx.ring()));
    v[ctx.index()->find(lam)] = Poly::constant(ctx.ring(), 1);
    return v;
}

std::vector<Poly> at_zero(const SymContext& ctx, const std::vector<Poly>& row) {
    std::vector<Poly> zeros(ctx.ring()->size(), Poly(ctx.ring()));
    std::vector<Poly> out;
    for (const auto& p : row) out.push_back(p.substitute(zeros, ctx.ring()));
    return out;
}

std::vector<Poly> scaled(const std::vector<Poly>& row, const Poly& c) {
    std::vector<Poly> out;
    for (const auto& p : row) out.push_back(p * c);
    return out;
}

// Classical Q_(2)(y; t) = (1 - t) (m_2 + (1 - t) m_11) in the last group, t = t1...tr.
std::vector<Poly> classical_Q2_last_group(const SymContext& ctx) {
    const XSpace& xs = ctx.xs();
    int r = ctx.r();
    Poly t = xs.lift(ctx.params().t0()), one = xs.one();
    Poly y1 = xs.x(r, 1), y2 = xs.x(r, 2);
    Poly p = y1 * y1 + y2 * y2 + (one - t) * y1 * y2;
    return ctx.s_coords((one - t) * p);
}

}  // namespace

TEST_CASE("raising expansion basics") {
    SymContext ctx(3, 2, Params::generic(2));
    const Index& idx = *ctx.index();
    CHECK(raising_Q_plus_q(ctx, rp("([3],[])")) == unit(ctx, rp("([3],[])")));
    for (std::size_t i = 0; i < idx.size(); ++i) {
        auto q = raising_Q_plus_q(ctx, idx[i]);
        CHECK(q[i].is_one());
        for (std::size_t j = i + 1; j < idx.size(); ++j) CHECK(q[j].is_zero());
    }
    auto roots = roots_plus(2, 2);
    int numer = 0, denom = 0;
    for (const auto& g : roots) (g.weight < 0 ? numer : denom)++;
    CHECK(numer == 2);
    CHECK(denom == 4);
    RaisingTerms t = raising_expand(rp("([],[1])"), 1, roots_plus(2, 1));
    REQUIRE(t.size() == 2);
    CHECK(t.at({0, 1}).is_one());
    CHECK(t.at({1, 0}) == Poly::variable(weight_ring(2), 0));
}

TEST_CASE("Hall-Littlewood tables, n = 2, r = 2") {
    SymContext ctx(2, 2, Params::generic(2));
    HLTables h = hl_tables(ctx);
    const Index& idx = *ctx.index();
    std::size_t N = idx.size();
    Poly one = Poly::constant(ctx.ring(), 1), t1 = ctx.params().t[0], t2 = ctx.params().t[1];
    for (std::size_t i = 0; i < N; ++i)
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            CHECK(h.P(s)(i, i).is_one());
            CHECK(at_zero(ctx, h.P(s).row(i)) == unit(ctx, idx[i]));
            for (std::size_t j = 0; j < N; ++j)
                if (!h.Q(s)(i, j).is_zero()) CHECK(dominance_leq(idx[j], idx[i]));
        }
    // Q of a pair in the last component is the classical Q in t1 t2
    auto lam = rp("([],[2])");
    std::size_t i = idx.find(lam);
    CHECK(h.q_minus.row(i) == classical_Q2_last_group(ctx));
    CHECK(h.q_plus.row(i) == classical_Q2_last_group(ctx));
    CHECK(h.b_minus[i] == one - t1 * t2);
    // the minimal element is a Schur function
    CHECK(h.p_plus.row(N - 1) == unit(ctx, idx[N - 1]));
    CHECK(h.p_minus.row(N - 1) == unit(ctx, idx[N - 1]));
    // Schur diagonals of Q
    CHECK(h.b_plus[idx.find(rp("([1,1],[])"))] == one - t1 * t2);
    CHECK(h.b_plus[idx.find(rp("([],[1,1])"))] == (one - t1 * t2) * (one - (t1 * t2).pow(2)));
    CHECK(h.b_plus[idx.find(rp("([1],[1])"))].is_one());
}

TEST_CASE("Hall-Littlewood functions at r = 3 in P^(r-1) are classical") {
    SymContext ctx(2, 3, Params::generic(3));
    HLTables h = hl_tables(ctx);
    std::size_t i = ctx.index()->find(rp("([],[],[2])"));
    CHECK(h.q_minus.row(i) == classical_Q2_last_group(ctx));
    CHECK(h.q_plus.row(i) == classical_Q2_last_group(ctx));
    CHECK(sharp_Q_s(ctx, rp("([],[],[2])")) == classical_Q2_last_group(ctx));
}

TEST_CASE("removing an empty first component") {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        SymContext big(n, r, Params::generic(r));
        HLTables hb = hl_tables(big);
        const Index& ib = *big.index();
        Reduction red = reduce_r(ib[ib.size() - 1], ib[ib.size() - 1], 1);
        SymContext small(n, r - 1, red.params);
        HLTables hs = hl_tables(small);
        const Index& is = *small.index();
        for (std::size_t i = 0; i < ib.size(); ++i) {
            if (!ib[i][0].empty()) continue;
            Reduction ri = reduce_r(ib[i], ib[i], 1);
            std::size_t si = is.find(ri.lam);
            for (std::size_t j = 0; j < ib.size(); ++j) {
                if (!ib[j][0].empty()) {
                    CHECK(hb.q_plus(i, j).is_zero());
                    CHECK(hb.q_minus(i, j).is_zero());
                    continue;
                }
                std::size_t sj = is.find(reduce_r(ib[j], ib[j], 1).lam);
                CHECK(hb.q_plus(i, j) == hs.q_plus(si, sj));
                CHECK(hb.q_minus(i, j) == hs.q_minus(si, sj));
            }
        }
    }
}

TEST_CASE("closed symmetrized formulas") {
    SymContext ctx(2, 2, Params::generic(2));
    const Index& idx = *ctx.index();
    HLTables h = hl_tables(ctx);
    int m = ctx.xs().m();
    for (Sign s : {Sign::Plus, Sign::Minus}) {
        auto lam = rp("([2],[])");
        Poly vp = v_prime(lam, m, t_ring(2)).substitute(ctx.params().t, ctx.ring());
        CHECK(closed_R_s(ctx, lam, s) == scaled(ctx.q_to_s(s).row(idx.find(lam)), vp));
        for (std::size_t i = 0; i < idx.size(); ++i) CHECK(at_zero(ctx, closed_R_s(ctx, idx[i], s)) == unit(ctx, idx[i]));
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
        CHECK(closed_Q_minus_s(ctx, idx[i]) == h.q_minus.row(i));
        CHECK(sharp_Q_s(ctx, idx[i]) == h.q_plus.row(i));
    }
    CHECK(sharp_f(rp("([],[1])"), 1).is_one());
}

TEST_CASE("closed minus formula breaks down at n = 3, r = 3") {
    SymContext ctx(3, 3, Params::generic(3));
    HLTables h = hl_tables(ctx);
    auto lam = rp("([1],[1,1],[])");
    std::size_t i = ctx.index()->find(lam);
    CHECK(closed_Q_minus_s(ctx, lam) != h.q_minus.row(i));
}

TEST_CASE("the literal minus raising product is not Q-") {
    SymContext ctx(2, 2, Params::generic(2));
    HLTables h = hl_tables(ctx);
    auto lam = rp("([],[1])");
    SymContext c1(1, 2, Params::generic(2));
    CHECK(raising_Q_minus_literal_s(c1, lam) == hl_tables(c1).q_minus.row(c1.index()->find(lam)));
    lam = rp("([1,1],[])");
    CHECK(raising_Q_minus_literal_s(ctx, lam) != h.q_minus.row(ctx.index()->find(lam)));
}

TEST_CASE("Gram-Schmidt oracle") {
    for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {3, 2}, {2, 3}}) {
        SymContext ctx(n, r, Params::generic(r));
        HLTables h = hl_tables(ctx);
        GramSchmidt g = gram_schmidt_PQ(ctx);
        CHECK(g.p_plus == h.p_plus);
        CHECK(g.p_minus == h.p_minus);
        CHECK(g.q_plus == h.q_plus);
        CHECK(g.q_minus == h.q_minus);
        CHECK(g.b == h.b_plus);
        CHECK(g.b == h.b_minus);
        GramSchmidt a = gram_schmidt_PQ(ctx, alternate_order(*ctx.index()));
        CHECK(a.p_plus == g.p_plus);
        CHECK(a.p_minus == g.p_minus);
        std::size_t N = ctx.index()->size();
        Poly one = Poly::constant(ctx.ring(), 1);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                Frac d = bilinear_form(ctx, g.p_plus.row(i), g.q_minus.row(j));
                CHECK(d == (i == j ? Frac(one) : Frac(Poly(ctx.ring()))));
                if (i != j) CHECK(bilinear_form(ctx, g.p_plus.row(i), g.p_minus.row(j)).is_zero());
            }
    }
    SymContext c(3, 2, Params::generic(2));
    auto order = alternate_order(*c.index());
    std::vector<std::size_t> identity(order.size());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
    CHECK(order != identity);
}

TEST_CASE("Cauchy identity for P+ and Q-") {
    SymContext ctx(2, 2, Params::generic(2));
    CHECK(cauchy_check_PQ(ctx, hl_tables(ctx)).ok);
    SymContext c3(2, 3, Params::generic(3));
    CHECK(cauchy_check_PQ(c3, hl_tables(c3)).ok);
}
