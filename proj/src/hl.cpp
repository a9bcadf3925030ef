#include "mpk/hl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mpk {

std::vector<Root> roots_plus(int r, int m) {
    std::vector<Root> out;
    int M = r * m;
    for (int p = 0; p < M; ++p)
        for (int pp = p + 1; pp < M; ++pp) {
            int k = comp_of(r, p), kk = comp_of(r, pp);
            if (k == kk) out.push_back({p, pp, -1});
            if (kk == cyc(r, k + 1)) out.push_back({p, pp, k});
        }
    return out;
}

std::vector<Root> roots_minus_literal(const RPartition& lam, int m) {
    int r = lam.r(), M = r * m;
    DeltaSets d = delta_sets(lam, m);
    std::vector<char> in0(M, 0), in1(M, 0);
    for (int p : d.delta0) in0[p] = 1;
    for (int p : d.delta1) in1[p] = 1;
    std::vector<Root> out;
    for (int p = 0; p < M; ++p)
        for (int pp = p + 1; pp < M; ++pp) {
            int k = comp_of(r, p), i = row_of(r, p), kk = comp_of(r, pp);
            if (k == kk && in1[p]) out.push_back({p, pp, -1});
            int km = cyc(r, k - 1);
            if (kk == km && in1[p] && in1[pos_of(r, km, i)]) out.push_back({p, pp, km});
            if (k == kk && in0[p]) {
                out.push_back({p, pp, -1});
                out.push_back({p, pp, 0});
            }
        }
    return out;
}

RingPtr weight_ring(int r) {
    std::vector<std::string> names;
    for (int k = 1; k <= r; ++k) names.push_back("t" + std::to_string(k));
    names.push_back("t0");
    return make_ring(names);
}

std::vector<Poly> weight_images(const Params& params) {
    std::vector<Poly> img = params.t;
    img.push_back(params.t0());
    return img;
}

RaisingTerms raising_expand(const RPartition& lam, int m, const std::vector<Root>& roots_in) {
    int r = lam.r();
    // Group by the subtracted position, descending: once a group is done its
    // entry is final, so multiplicities never need to exceed it.
    std::vector<Root> roots = roots_in;
    std::stable_sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
        return a.pp != b.pp ? a.pp > b.pp : a.p < b.p;
    });
    // Layered expansion: equal compositions are merged after every root.
    using Coeffs = std::map<std::vector<Exp>, Int>;
    std::map<Composition, Coeffs> acc;
    acc[c_map(lam, m)][std::vector<Exp>(r + 1, 0)] = 1;
    for (const Root& g : roots) {
        std::map<Composition, Coeffs> next;
        std::size_t slot = g.weight == 0 ? r : g.weight - 1;
        for (auto& [vec, coeffs] : acc) {
            long cap = vec[g.pp];
            if (g.weight < 0) {
                auto& same = next[vec];
                for (auto& [e, c] : coeffs) same[e] += c;
                if (cap >= 1) {
                    Composition v = vec;
                    ++v[g.p];
                    --v[g.pp];
                    auto& dst = next[v];
                    for (auto& [e, c] : coeffs) dst[e] -= c;
                }
                continue;
            }
            Composition v = vec;
            for (long k = 0; k <= cap; ++k) {
                auto& dst = next[v];
                for (auto& [e, c] : coeffs) {
                    std::vector<Exp> ee = e;
                    ee[slot] += static_cast<Exp>(k);
                    dst[ee] += c;
                }
                ++v[g.p];
                --v[g.pp];
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            std::erase_if(it->second, [](const auto& kv) { return kv.second == 0; });
            it = it->second.empty() ? next.erase(it) : std::next(it);
        }
        acc = std::move(next);
    }
    RingPtr ring = weight_ring(r);
    RaisingTerms out;
    for (auto& [beta, terms] : acc) {
        std::vector<Exp> ex;
        std::vector<Int> co;
        for (auto& [e, c] : terms) {
            if (c == 0) continue;
            ex.insert(ex.end(), e.begin(), e.end());
            co.push_back(c);
        }
        Poly p = Poly::from_terms(ring, std::move(ex), std::move(co));
        if (!p.is_zero()) out.emplace(beta, std::move(p));
    }
    return out;
}

std::vector<Poly> raising_Q_plus_q(const SymContext& ctx, const RPartition& lam) {
    int r = ctx.r(), m = ctx.xs().m();
    RaisingTerms terms = raising_expand(lam, m, roots_plus(r, m));
    std::vector<Poly> img = weight_images(ctx.params());
    std::vector<Poly> out(ctx.index()->size(), Poly(ctx.ring()));
    for (const auto& [beta, c] : terms) {
        RPartition key = from_c(beta, r);
        out[ctx.index()->find(key)] += c.substitute(img, ctx.ring());
    }
    return out;
}

std::vector<Poly> raising_Q_plus_s(const SymContext& ctx, const RPartition& lam) {
    std::vector<Poly> q = raising_Q_plus_q(ctx, lam);
    const PolyMatrix& a = ctx.q_to_s(Sign::Plus);
    std::size_t N = q.size();
    std::vector<Poly> out(N, Poly(ctx.ring()));
    for (std::size_t i = 0; i < N; ++i) {
        if (q[i].is_zero()) continue;
        for (std::size_t j = 0; j < N; ++j)
            if (!a(i, j).is_zero()) out[j] += q[i] * a(i, j);
    }
    return out;
}

namespace {

Poly one_param_q(int k, int s, const Poly& t, const XSpace& xs) {
    if (s == 0) return xs.one();
    Poly f = xs.zero(), pw = xs.one();
    for (int b = 0; b <= s && b <= xs.m(); ++b) {
        if (b > 0) pw *= -t;
        f += xs.h(k, s - b) * pw * xs.e(k, b);
    }
    return f;
}

}  // namespace

std::vector<Poly> raising_Q_minus_literal_s(const SymContext& ctx, const RPartition& lam) {
    const XSpace& xs = ctx.xs();
    int r = ctx.r(), m = xs.m();
    RaisingTerms terms = raising_expand(lam, m, roots_minus_literal(lam, m));
    DeltaSets d = delta_sets(lam, m);
    std::vector<char> in0(static_cast<std::size_t>(r) * m, 0);
    for (int p : d.delta0) in0[p] = 1;
    std::vector<Poly> img = weight_images(ctx.params());
    Poly t0 = xs.lift(ctx.params().t0());
    Poly total = xs.zero();
    for (const auto& [beta, c] : terms) {
        Poly f = xs.lift(c.substitute(img, ctx.ring()));
        for (std::size_t p = 0; p < beta.size(); ++p) {
            if (beta[p] == 0) continue;
            int k = comp_of(r, static_cast<int>(p));
            int s = static_cast<int>(beta[p]);
            f *= in0[p] ? one_param_q(k, s, t0, xs) : q_func_x(k, s, Sign::Minus, ctx.params().tk(k), xs);
        }
        total += f;
    }
    return ctx.s_coords(total);
}

std::vector<Poly> divide_row(const std::vector<Poly>& row, const Poly& d) {
    std::vector<Poly> out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(exact_divide(x, d));
    return out;
}

HLTables hl_tables(const SymContext& ctx) {
    const Index& index = *ctx.index();
    std::size_t N = index.size();
    HLTables t;
    t.q_plus = PolyMatrix(N, N, Poly(ctx.ring()));
    ctx.q_to_s(Sign::Plus);
    parallel_for(N, ctx.jobs(), [&](std::size_t i) { t.q_plus.set_row(i, raising_Q_plus_s(ctx, index[i])); });
    t.p_plus = PolyMatrix(N, N, Poly(ctx.ring()));
    for (std::size_t i = 0; i < N; ++i) {
        t.b_plus.push_back(t.q_plus(i, i));
        t.p_plus.set_row(i, divide_row(t.q_plus.row(i), t.b_plus[i]));
    }
    // <P+_lam, Q-_mu> = delta with <m, q-> = delta gives Q- = M(P+,m)^{-T} q-.
    PolyMatrix pm = mul(t.p_plus, ctx.kostka());
    PolyMatrix y = unitriangular_inverse(pm).transpose();
    t.q_minus = mul(y, ctx.q_to_s(Sign::Minus));
    t.p_minus = PolyMatrix(N, N, Poly(ctx.ring()));
    for (std::size_t i = 0; i < N; ++i) {
        t.b_minus.push_back(t.q_minus(i, i));
        t.p_minus.set_row(i, divide_row(t.q_minus.row(i), t.b_minus[i]));
    }
    return t;
}

// ---------------------------------------------------------------------------

std::vector<Poly> antisymmetrize_s(const Poly& num, const SymContext& ctx) {
    const XSpace& xs = ctx.xs();
    const Index& index = *ctx.index();
    int r = xs.r(), m = xs.m();
    std::vector<TermAccumulator> acc;
    acc.reserve(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) acc.emplace_back(ctx.ring(), 8);
    std::vector<int> g(m);
    std::vector<Partition> comps(r);
    for (std::size_t t = 0; t < num.size(); ++t) {
        const Exp* e = num.exps(t);
        int sign = 1;
        bool ok = true;
        for (int k = 1; k <= r && ok; ++k) {
            for (int i = 1; i <= m; ++i) g[i - 1] = e[xs.xvar(k, i)];
            for (int a = 0; a < m && ok; ++a)
                for (int b = a + 1; b < m; ++b) {
                    if (g[a] == g[b]) {
                        ok = false;
                        break;
                    }
                    if (g[a] < g[b]) sign = -sign;
                }
            if (!ok) break;
            std::sort(g.begin(), g.end(), std::greater<>());
            for (int i = 0; i < m; ++i) g[i] -= m - 1 - i;
            comps[k - 1] = Partition(g);
        }
        if (!ok) continue;
        RPartition mu(comps);
        if (mu.size() != index.n()) throw std::domain_error("antisymmetrized numerator has the wrong degree");
        acc[index.find(mu)].add(e + xs.nx(), sign * num.coef(t));
    }
    std::vector<Poly> out;
    for (auto& a : acc) out.push_back(a.finish());
    return out;
}

namespace {

Poly params_image(const Poly& p_in_t, const Params& params) { return p_in_t.substitute(params.t, params.ring); }

}  // namespace

std::vector<Poly> closed_R_s(const SymContext& ctx, const RPartition& lam, Sign sign) {
    const XSpace& xs = ctx.xs();
    int r = xs.r(), m = xs.m();
    int p0 = nu0(lam, m);
    int c = sign == Sign::Plus ? 1 : 0;
    Poly num = xs.one();
    for (int k = 1; k <= r; ++k) {
        int ko = sign == Sign::Plus ? k - 1 : k + 1;
        Poly tc = xs.t(k - c);
        for (int i = 1; i <= m; ++i) {
            int part = lam[k - 1][i - 1];
            int eps = 0;
            if (part != 0) eps = sign == Sign::Plus ? (k == 1) : (k != r);
            for (int a = 0; a < part - eps; ++a) num *= xs.x(k, i);
            int p = pos_of(r, k, i);
            if (p <= p0) {
                for (int j = 1; j <= m; ++j) {
                    bool take = part != 0 ? pos_of(r, cyc(r, ko), j) > p : j > i;
                    if (take) num *= xs.x(k, i) - tc * xs.x(ko, j);
                }
            } else {
                for (int j = i + 1; j <= m; ++j) num *= xs.x(k, i) - xs.t(k) * xs.x(k, j);
            }
        }
    }
    return antisymmetrize_s(num, ctx);
}

std::vector<Poly> closed_Q_minus_s(const SymContext& ctx, const RPartition& lam) {
    int m = ctx.xs().m();
    Poly v = params_image(v_prime(lam, m, t_ring(ctx.r())), ctx.params());
    std::vector<Poly> row = divide_row(closed_R_s(ctx, lam, Sign::Minus), v);
    Poly f = (Poly::constant(ctx.ring(), 1) - ctx.params().t0()).pow(j0_exponent(lam));
    for (auto& x : row) x *= f;
    return row;
}

namespace {

std::vector<int> ladder(const RPartition& lam) {
    int r = lam.r();
    std::vector<int> mk(r + 1, 0);
    for (int k = 1; k <= r; ++k) mk[k] = std::max(mk[k - 1], lam[k - 1].length());
    return mk;
}

}  // namespace

Poly sharp_f(const RPartition& lam, int m) {
    int r = lam.r();
    RingPtr ring = t_ring(r);
    int i0 = row_of(r, nu0(lam, m));
    std::vector<int> mk = ladder(lam);
    Poly f = Poly::constant(ring, 1);
    for (int i = 1; i < r; ++i) {
        long a = 0;
        for (int s = m - i0; s <= m - mk[i] - 1; ++s) a += s;
        f *= Poly::variable(ring, i - 1).pow(static_cast<unsigned>(a));
    }
    return f;
}

std::vector<Poly> sharp_R_s(const SymContext& ctx, const RPartition& lam) {
    const XSpace& xs = ctx.xs();
    int r = xs.r(), m = xs.m();
    int p0 = nu0(lam, m);
    std::vector<int> mk = ladder(lam);
    Poly num = xs.one();
    for (int k = 1; k <= r; ++k) {
        for (int i = 1; i <= m; ++i) {
            int eps = (i > mk[k - 1] && i <= mk[k]) ? 1 : 0;
            for (int a = 0; a < lam[k - 1][i - 1] - eps; ++a) num *= xs.x(k, i);
            bool low = pos_of(r, k, i) <= p0;
            for (int j = i + 1; j <= m; ++j) {
                if (low && k >= 2) num *= xs.x(k, i) - xs.t(k - 1) * xs.x(k - 1, j);
                if (!low) num *= xs.x(k, i) - xs.t(k) * xs.x(k, j);
            }
        }
    }
    for (int a = 1; a <= r; ++a) {
        if (mk[a - 1] == mk[a]) continue;
        Poly ta = xs.t(r);
        for (int b = 1; b < a; ++b) ta *= xs.t(b);
        for (int i = mk[a - 1] + 1; i <= mk[a]; ++i)
            for (int j = i; j <= m; ++j) num *= xs.x(a, i) - ta * xs.x(r, j);
    }
    return antisymmetrize_s(num, ctx);
}

std::vector<Poly> sharp_Q_s(const SymContext& ctx, const RPartition& lam) {
    int m = ctx.xs().m();
    Poly d = params_image(v_prime(lam, m, t_ring(ctx.r())) * sharp_f(lam, m), ctx.params());
    return divide_row(sharp_R_s(ctx, lam), d);
}

// ---------------------------------------------------------------------------

GramSchmidt gram_schmidt_PQ(const SymContext& ctx, const std::vector<std::size_t>& order_in) {
    std::size_t N = ctx.index()->size();
    std::vector<std::size_t> o = order_in;
    if (o.empty()) {
        o.resize(N);
        std::iota(o.begin(), o.end(), 0);
    }
    // Inverse Gram matrix of the Schur basis: <s_lam, s_mu>^{-1} = K^{-T} M(q+, s).
    PolyMatrix b = mul(ctx.kostka_inverse().transpose(), ctx.q_to_s(Sign::Plus));
    PolyMatrix w(N, N, Poly(ctx.ring()));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t c = 0; c < N; ++c) w(a, c) = b(o[a], o[c]);
    // Doolittle w = L D U; pivots are b_lam, U rows are P+, L columns are P-.
    Poly zero(ctx.ring()), one = Poly::constant(ctx.ring(), 1);
    PolyMatrix l(N, N, zero), u(N, N, zero);
    std::vector<Poly> d(N, zero);
    for (std::size_t k = 0; k < N; ++k) {
        l(k, k) = one;
        u(k, k) = one;
        Poly s = w(k, k);
        for (std::size_t j = 0; j < k; ++j)
            if (!l(k, j).is_zero() && !u(j, k).is_zero()) s -= l(k, j) * d[j] * u(j, k);
        if (s.is_zero()) throw InexactDivision("vanishing pivot in the Gram-Schmidt recursion");
        d[k] = s;
        for (std::size_t i = k + 1; i < N; ++i) {
            Poly sl = w(i, k), su = w(k, i);
            for (std::size_t j = 0; j < k; ++j) {
                if (!l(i, j).is_zero() && !u(j, k).is_zero()) sl -= l(i, j) * d[j] * u(j, k);
                if (!l(k, j).is_zero() && !u(j, i).is_zero()) su -= l(k, j) * d[j] * u(j, i);
            }
            l(i, k) = exact_divide(sl, d[k]);
            u(k, i) = exact_divide(su, d[k]);
        }
    }
    GramSchmidt g;
    g.p_plus = PolyMatrix(N, N, zero);
    g.p_minus = PolyMatrix(N, N, zero);
    g.q_plus = PolyMatrix(N, N, zero);
    g.q_minus = PolyMatrix(N, N, zero);
    g.b.assign(N, zero);
    for (std::size_t k = 0; k < N; ++k) {
        g.b[o[k]] = d[k];
        for (std::size_t i = 0; i < N; ++i) {
            g.p_plus(o[k], o[i]) = u(k, i);
            g.p_minus(o[k], o[i]) = l(i, k);
            g.q_plus(o[k], o[i]) = d[k] * u(k, i);
            g.q_minus(o[k], o[i]) = d[k] * l(i, k);
        }
    }
    return g;
}

std::vector<std::size_t> alternate_order(const Index& index) {
    std::size_t N = index.size();
    std::vector<char> placed(N, 0);
    std::vector<std::size_t> out;
    while (out.size() < N) {
        // Among the maximal remaining elements pick the last in default order.
        std::size_t pick = N;
        for (std::size_t a = N; a-- > 0;) {
            if (placed[a]) continue;
            bool maximal = true;
            for (std::size_t c = 0; c < N && maximal; ++c)
                if (!placed[c] && c != a && dominance_leq(index[a], index[c])) maximal = false;
            if (maximal) {
                pick = a;
                break;
            }
        }
        placed[pick] = 1;
        out.push_back(pick);
    }
    return out;
}

CauchyResult cauchy_check_PQ(const SymContext& ctx, const HLTables& tables) {
    return cauchy_compare(ctx, tables.p_plus, tables.q_minus);
}

}  // namespace mpk
