#include "mpk/verify.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mpk {

namespace {

using Suite = std::function<std::vector<CheckResult>(const VerifyOptions&)>;

std::string tag(int n, int r) { return "n=" + std::to_string(n) + ",r=" + std::to_string(r); }

std::string pair_str(const RPartition& lam, const RPartition& mu) { return lam.str() + " " + mu.str(); }

// Runs body and turns exceptions into a failed check.
CheckResult guarded(const std::string& name, const std::function<CheckResult()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

// Accumulates one named check over many cases, keeping the first witness.
struct Tally {
    explicit Tally(std::string n) : name(std::move(n)) {}
    std::string name;
    long cases = 0, failures = 0;
    std::string witness;

    void add(bool ok, const std::function<std::string()>& describe) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) witness = describe();
    }
    CheckResult result() const {
        if (failures == 0) return {name, true, std::to_string(cases) + " cases"};
        return {name, false, std::to_string(failures) + "/" + std::to_string(cases) + " failed; first: " + witness};
    }
};

// The top total-degree part of p is a single monomial with coefficient 1.
bool monic(const Poly& p) {
    long d = p.degree();
    int count = 0;
    bool unit = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::vector<Exp> e = p.exponent(i);
        long s = 0;
        for (Exp x : e) s += x;
        if (s == d) {
            ++count;
            unit = p.coef(i) == 1;
        }
    }
    return count == 1 && unit;
}

std::vector<std::pair<int, int>> sweep(const VerifyOptions& opt, int n_cap = 1000, int r_min = 1) {
    std::vector<std::pair<int, int>> out;
    for (int r : opt.r_values)
        if (r >= r_min)
            for (int n = 1; n <= std::min(opt.n_max, n_cap); ++n) out.emplace_back(n, r);
    return out;
}

}  // namespace

std::string table_diff(const KostkaTable& a, const KostkaTable& b) {
    if (a.order != b.order) return "different index orders";
    for (std::size_t i = 0; i < a.order.size(); ++i)
        for (std::size_t j = 0; j < a.order.size(); ++j)
            if (a.k(i, j) != b.k(i, j))
                return pair_str(a.order[i], a.order[j]) + ": " + method_name(a.method) + " " + a.k(i, j).to_string() +
                       " vs " + method_name(b.method) + " " + b.k(i, j).to_string();
    return {};
}

std::vector<CheckResult> verify_kostka_threeway(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (auto [n, r] : sweep(opt)) {
        std::string name = "kostka-threeway " + tag(n, r);
        out.push_back(guarded(name, [&] {
            SymContext ctx(n, r, Params::generic(r), opt.jobs);
            KostkaTable s = kostka_by_solve(ctx, Sign::Minus);
            KostkaTable p = kostka_by_pf(ctx, Sign::Minus);
            KostkaTable g = kostka_by_gram_schmidt(ctx, Sign::Minus);
            std::string d = table_diff(s, p);
            if (d.empty()) d = table_diff(s, g);
            if (!d.empty()) return CheckResult{name, false, d};
            return CheckResult{name, true, std::to_string(s.order.size()) + "x" + std::to_string(s.order.size())};
        }));
    }
    return out;
}

std::vector<CheckResult> verify_plus_twoway(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (auto [n, r] : sweep(opt)) {
        std::string name = "plus-twoway " + tag(n, r);
        out.push_back(guarded(name, [&] {
            SymContext ctx(n, r, Params::generic(r), opt.jobs);
            KostkaTable s = kostka_by_solve(ctx, Sign::Plus);
            KostkaTable p = kostka_by_pf(ctx, Sign::Plus);
            std::size_t N = s.order.size(), bad = 0;
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) bad += s.k(i, j) != p.k(i, j);
            if (bad == 0) return CheckResult{name, true, std::to_string(N) + "x" + std::to_string(N)};
            return CheckResult{name, false, std::to_string(bad) + "/" + std::to_string(N * N) + " entries differ; first " + table_diff(s, p)};
        }));
    }
    return out;
}

std::vector<CheckResult> verify_classical(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= opt.n_max; ++n) {
        std::string name = "classical " + tag(n, 1);
        out.push_back(guarded(name, [&] {
            SymContext ctx(n, 1, Params::uniform(1), opt.jobs);
            Tally t{name};
            for (Sign sign : {Sign::Minus, Sign::Plus}) {
                for (Method method : {Method::Solve, Method::PF, Method::GramSchmidt}) {
                    KostkaTable k = kostka_table(ctx, sign, method);
                    for (std::size_t i = 0; i < k.order.size(); ++i)
                        for (std::size_t j = 0; j < k.order.size(); ++j) {
                            Poly want = classical_kostka(k.order[i][0], k.order[j][0]);
                            t.add(k.k(i, j) == want, [&] {
                                return sign_name(sign) + "/" + method_name(method) + " " + pair_str(k.order[i], k.order[j]) +
                                       ": " + k.k(i, j).to_string() + " vs classical " + want.to_string();
                            });
                        }
                }
            }
            return t.result();
        }));
    }
    return out;
}

std::vector<CheckResult> verify_specialization(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (auto [n, r] : sweep(opt)) {
        std::string name = "specialization " + tag(n, r);
        out.push_back(guarded(name, [&] {
            SymContext gen(n, r, Params::generic(r), opt.jobs);
            SymContext uni(n, r, Params::uniform(r), opt.jobs);
            std::string assignment;
            for (int k = 1; k <= r; ++k) assignment += (k > 1 ? "," : "") + std::string("t") + std::to_string(k) + "=t";
            for (Sign sign : {Sign::Minus, Sign::Plus}) {
                KostkaTable a = specialize(kostka_by_solve(gen, sign), assignment);
                KostkaTable b = kostka_by_solve(uni, sign);
                for (std::size_t i = 0; i < a.order.size(); ++i)
                    for (std::size_t j = 0; j < a.order.size(); ++j)
                        if (a.k(i, j) != b.k(i, j))
                            return CheckResult{name, false,
                                               sign_name(sign) + " " + pair_str(a.order[i], a.order[j]) + ": " +
                                                   a.k(i, j).to_string() + " vs " + b.k(i, j).to_string()};
            }
            return CheckResult{name, true, "both signs"};
        }));
    }
    return out;
}

std::vector<CheckResult> verify_cross_r(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (auto [n, r] : sweep(opt, 1000, 2)) {
        std::string name = "cross-r " + tag(n, r);
        out.push_back(guarded(name, [&] {
            Tally t{name};
            SymContext gen(n, r, Params::generic(r), opt.jobs);
            SymContext uni(n, r, Params::uniform(r), opt.jobs);
            for (Sign sign : {Sign::Minus, Sign::Plus}) {
                KostkaTable ku = kostka_by_solve(uni, sign);
                std::vector<Poly> tr{Poly::variable(uni.ring(), 0).pow(r)};
                for (std::size_t i = 0; i < ku.order.size(); ++i)
                    for (std::size_t j = 0; j < ku.order.size(); ++j) {
                        const RPartition &lam = ku.order[i], &mu = ku.order[j];
                        if (lam[r - 1].size() != n || mu[r - 1].size() != n) continue;
                        Poly want = classical_kostka(lam[r - 1], mu[r - 1]).substitute(tr, uni.ring());
                        t.add(ku.k(i, j) == want, [&] {
                            return sign_name(sign) + " uniform " + pair_str(lam, mu) + ": " + ku.k(i, j).to_string() +
                                   " vs " + want.to_string();
                        });
                    }
                KostkaTable kg = kostka_by_solve(gen, sign);
                for (int a = 1; a < r; ++a) {
                    const Index& idx = *gen.index();
                    std::unique_ptr<SymContext> sub;
                    KostkaTable ks;
                    for (std::size_t i = 0; i < idx.size(); ++i)
                        for (std::size_t j = 0; j < idx.size(); ++j) {
                            bool lead_empty = true;
                            for (int k = 0; k < a; ++k) lead_empty = lead_empty && idx[i][k].empty() && idx[j][k].empty();
                            if (!lead_empty) continue;
                            Reduction red = reduce_r(idx[i], idx[j], a);
                            if (!sub) {
                                sub = std::make_unique<SymContext>(n, r - a, red.params, opt.jobs);
                                ks = kostka_by_solve(*sub, sign);
                            }
                            const Poly& want = ks.at(red.lam, red.mu);
                            t.add(kg.k(i, j) == want, [&] {
                                return sign_name(sign) + " a=" + std::to_string(a) + " " + pair_str(idx[i], idx[j]) + ": " +
                                       kg.k(i, j).to_string() + " vs " + want.to_string();
                            });
                        }
                }
            }
            return t.result();
        }));
    }
    return out;
}

std::vector<CheckResult> verify_positivity(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (auto [n, r] : sweep(opt)) {
        std::string name = "positivity " + tag(n, r);
        out.push_back(guarded(name, [&] {
            SymContext ctx(n, r, Params::generic(r), opt.jobs);
            KostkaTable k = kostka_by_solve(ctx, Sign::Minus);
            Tally t{name};
            for (std::size_t i = 0; i < k.order.size(); ++i)
                for (std::size_t j = 0; j < k.order.size(); ++j) {
                    bool ok = true;
                    for (std::size_t q = 0; q < k.k(i, j).size(); ++q) ok = ok && k.k(i, j).coef(q) >= 0;
                    t.add(ok, [&] { return pair_str(k.order[i], k.order[j]) + ": " + k.k(i, j).to_string(); });
                }
            return t.result();
        }));
    }
    return out;
}

std::vector<CheckResult> verify_degree(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (auto [n, r] : sweep(opt)) {
        SymContext ctx(n, r, Params::generic(r), opt.jobs);
        for (Sign sign : {Sign::Minus, Sign::Plus}) {
            if (sign == Sign::Plus && r < 3) continue;
            bool minus = sign == Sign::Minus;
            std::string name = std::string(minus ? "degree K- monic" : "degree K+ below a-difference") + " " + tag(n, r);
            out.push_back(guarded(name, [&] {
                KostkaTable k = kostka_by_solve(ctx, sign);
                Tally t{name};
                for (std::size_t i = 0; i < k.order.size(); ++i)
                    for (std::size_t j = 0; j < k.order.size(); ++j) {
                        const Poly& p = k.k(i, j);
                        if (i == j || p.is_zero()) continue;
                        const RPartition &lam = k.order[i], &mu = k.order[j];
                        long want = a_stat(mu) - a_stat(lam);
                        bool ok = minus ? p.degree() == want && monic(p) : p.degree() < want;
                        t.add(ok, [&] {
                            return pair_str(lam, mu) + ": " + p.to_string() + ", a-difference " + std::to_string(want);
                        });
                    }
                return t.result();
            }));
        }
    }
    return out;
}

std::vector<CheckResult> verify_stability(const VerifyOptions& opt) {
    const int r = 2, pairs = 20;
    int n_cap = std::max(1, std::min(opt.n_max, 3));
    std::string name = "stability n<=" + std::to_string(n_cap) + ",r=2";
    return {guarded(name, [&] {
        std::mt19937 rng(opt.seed);
        Params params = Params::generic(r);
        Tally t{name};
        for (int c = 0; c < pairs; ++c) {
            int n = std::uniform_int_distribution<int>(1, n_cap)(rng);
            std::vector<RPartition> all = gen_rpartitions(n, r);
            std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
            RPartition lam = all[pick(rng)], mu = all[pick(rng)];
            int m = pf_padding(lam, mu);
            RPartition lt = theta_shift(lam, n, m), mt = theta_shift(mu, n, m);
            for (Sign sign : {Sign::Minus, Sign::Plus}) {
                Poly shifted = sign == Sign::Minus ? kostka_minus_pf(lt, mt, params, m) : kostka_plus_pf(lt, mt, params, m);
                Poly stable = stable_kostka(lam, mu, sign, params);
                t.add(shifted == stable, [&] {
                    return sign_name(sign) + " " + pair_str(lam, mu) + ": shifted " + shifted.to_string() + " vs stable " +
                           stable.to_string();
                });
            }
        }
        return t.result();
    })};
}

std::vector<CheckResult> verify_cauchy(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    for (auto [n, r] : sweep(opt)) {
        SymContext ctx(n, r, Params::generic(r), opt.jobs);
        for (CauchyKind kind : {CauchyKind::Plus, CauchyKind::Minus, CauchyKind::PQ}) {
            std::string label = kind == CauchyKind::Plus ? "q+m" : kind == CauchyKind::Minus ? "mq-" : "P+Q-";
            std::string name = "cauchy " + label + " " + tag(n, r);
            out.push_back(guarded(name, [&] {
                CauchyResult c = kind == CauchyKind::PQ ? cauchy_check_PQ(ctx, hl_tables(ctx)) : cauchy_check(ctx, kind);
                return CheckResult{name, c.ok, c.ok ? "kernel matches" : c.witness};
            }));
        }
    }
    return out;
}

std::vector<CheckResult> verify_structural(const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    Tally duality{"duality <P+,Q-> = delta"}, tri{"dominance triangularity"}, diag{"closed R diagonal = v'"},
        zero{"P(x;0) = s"}, qp{"Q = (1-t0)^j0 P"};
    for (auto [n, r] : sweep(opt)) {
        auto fail_all = [&](const std::string& what) {
            for (Tally* t : {&duality, &tri, &diag, &zero, &qp}) t->add(false, [&] { return tag(n, r) + " " + what; });
        };
        try {
            SymContext ctx(n, r, Params::generic(r), opt.jobs);
            HLTables h = hl_tables(ctx);
            const Index& idx = *ctx.index();
            std::size_t N = idx.size();
            int m = ctx.xs().m();
            std::vector<Poly> zeros(r, Poly(ctx.ring()));
            std::vector<Poly> images = ctx.params().t;
            Poly t0 = ctx.params().t0();
            Poly one = Poly::constant(ctx.ring(), 1);
            KostkaTable km = kostka_by_solve(ctx, Sign::Minus), kp = kostka_by_solve(ctx, Sign::Plus);
            for (std::size_t i = 0; i < N; ++i) {
                for (std::size_t j = 0; j < N; ++j) {
                    Frac f = bilinear_form(ctx, h.p_plus.row(i), h.q_minus.row(j));
                    bool ok = i == j ? f == Frac(one) : f.is_zero();
                    duality.add(ok, [&] { return tag(n, r) + " " + pair_str(idx[i], idx[j]) + ": " + f.to_string(); });
                    bool below = dominance_leq(idx[j], idx[i]);
                    for (Sign s : {Sign::Plus, Sign::Minus}) {
                        const Poly& pe = h.P(s)(i, j);
                        const Poly& ke = (s == Sign::Plus ? kp : km).k(i, j);
                        bool good = i == j ? pe.is_one() && ke.is_one() : below || (pe.is_zero() && ke.is_zero());
                        tri.add(good, [&] {
                            return tag(n, r) + " " + sign_name(s) + " " + pair_str(idx[i], idx[j]) + ": P " + pe.to_string() +
                                   ", K " + ke.to_string();
                        });
                        Poly at0 = pe.substitute(std::vector<Poly>(zeros), ctx.ring());
                        zero.add(at0 == (i == j ? one : Poly(ctx.ring())), [&] {
                            return tag(n, r) + " " + sign_name(s) + " " + pair_str(idx[i], idx[j]) + ": " + at0.to_string();
                        });
                    }
                }
                Poly vp = v_prime(idx[i], m, t_ring(r)).substitute(images, ctx.ring());
                for (Sign s : {Sign::Plus, Sign::Minus}) {
                    Poly d = closed_R_s(ctx, idx[i], s)[i];
                    diag.add(d == vp, [&] {
                        return tag(n, r) + " " + sign_name(s) + " " + idx[i].str() + ": diagonal " + d.to_string() + ", v' " +
                               vp.to_string();
                    });
                }
                Poly want = (one - t0).pow(static_cast<unsigned>(j0_exponent(idx[i])));
                for (Sign s : {Sign::Plus, Sign::Minus}) {
                    const Poly& b = s == Sign::Plus ? h.b_plus[i] : h.b_minus[i];
                    qp.add(b == want, [&] {
                        return tag(n, r) + " " + sign_name(s) + " " + idx[i].str() + ": b " + b.to_string() +
                               ", (1-t0)^j0 " + want.to_string();
                    });
                }
            }
        } catch (const std::exception& e) {
            fail_all(std::string("exception: ") + e.what());
        }
    }
    for (Tally* t : {&duality, &tri, &diag, &zero, &qp}) out.push_back(t->result());
    return out;
}

std::vector<CheckResult> verify_oracles(const VerifyOptions& opt) {
    Tally closed{"closed Q- = Q-"}, sharp{"sharp Q = Q+"}, gs{"Gram-Schmidt = production P+-"},
        order{"Gram-Schmidt order independence"}, pad{"K- independent of m (m vs m+1)"}, memo{"L memo transparency"};
    for (auto [n, r] : sweep(opt)) {
        try {
            SymContext ctx(n, r, Params::generic(r), opt.jobs);
            HLTables h = hl_tables(ctx);
            const Index& idx = *ctx.index();
            std::size_t N = idx.size();
            GramSchmidt g = gram_schmidt_PQ(ctx);
            GramSchmidt ga = gram_schmidt_PQ(ctx, alternate_order(idx));
            gs.add(g.p_plus == h.p_plus && g.p_minus == h.p_minus, [&] { return tag(n, r); });
            order.add(ga.p_plus == g.p_plus && ga.p_minus == g.p_minus && ga.b == g.b, [&] { return tag(n, r); });
            for (std::size_t i = 0; i < N; ++i) {
                std::vector<Poly> c = closed_Q_minus_s(ctx, idx[i]);
                closed.add(c == h.q_minus.row(i), [&] { return tag(n, r) + " " + idx[i].str(); });
                std::vector<Poly> s = sharp_Q_s(ctx, idx[i]);
                sharp.add(s == h.q_plus.row(i), [&] { return tag(n, r) + " " + idx[i].str(); });
                if (n <= 2)
                    for (std::size_t j = 0; j < N; ++j) {
                        int m = pf_padding(idx[i], idx[j]);
                        Poly a = kostka_minus_pf(idx[i], idx[j], ctx.params(), m);
                        Poly b = kostka_minus_pf(idx[i], idx[j], ctx.params(), m + 1);
                        pad.add(a == b, [&] { return tag(n, r) + " " + pair_str(idx[i], idx[j]); });
                    }
            }
        } catch (const std::exception& e) {
            for (Tally* t : {&closed, &sharp, &gs, &order, &pad})
                t->add(false, [&] { return tag(n, r) + " exception: " + e.what(); });
        }
    }
    std::mt19937 rng(opt.seed);
    for (int c = 0; c < 100; ++c) {
        int r = std::uniform_int_distribution<int>(1, 3)(rng), m = std::uniform_int_distribution<int>(1, 3)(rng);
        int M = r * m;
        Composition xi(M, 0);
        for (int s = 0; s < 4; ++s) {
            int p = std::uniform_int_distribution<int>(0, M - 1)(rng), q = std::uniform_int_distribution<int>(0, M - 1)(rng);
            ++xi[std::min(p, q)];
            --xi[std::max(p, q)];
        }
        Sign sign = c % 2 ? Sign::Plus : Sign::Minus;
        Poly with = PartitionFunction::plain(r, M, sign, true)(xi);
        Poly without = PartitionFunction::plain(r, M, sign, false)(xi);
        memo.add(with == without, [&] {
            std::ostringstream os;
            for (long v : xi) os << v << ' ';
            return "xi = " + os.str();
        });
    }
    std::vector<CheckResult> out;
    for (Tally* t : {&closed, &sharp, &gs, &order, &pad, &memo}) out.push_back(t->result());
    return out;
}

std::vector<CheckResult> verify_rational_identities(const VerifyOptions& opt) {
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> coord(-30, 30);
    auto distinct = [&](int m) {
        std::set<int> seen;
        std::vector<Rat> v;
        while (static_cast<int>(v.size()) < m) {
            int x = coord(rng);
            if (seen.insert(x).second) v.emplace_back(x);
        }
        return v;
    };
    std::vector<CheckResult> out;
    for (int m : {2, 3}) {
        Tally a{"symmetrized product identity m=" + std::to_string(m)};
        Tally b{"symmetrized mixed identity m=" + std::to_string(m)};
        for (int c = 0; c < 50; ++c) {
            std::vector<std::vector<Rat>> x{distinct(m), distinct(m), distinct(m)};
            std::vector<Rat> t{Rat(coord(rng)), Rat(coord(rng)), Rat(coord(rng))};
            Rat l = symmetrized_product_lhs(m, 1, 3, x, t), r = symmetrized_product_rhs(m, 1, 3);
            a.add(l == r, [&] { return "lhs " + l.get_str() + " rhs " + r.get_str(); });
            std::vector<Rat> xs = distinct(m), ys = distinct(m), zs = distinct(m);
            Rat t1(coord(rng)), t3(coord(rng));
            Rat l2 = symmetrized_mixed_lhs(m, xs, ys, zs, t1, t3), r2 = symmetrized_mixed_rhs(m, ys, zs, t1, t3);
            b.add(l2 == r2, [&] { return "lhs " + l2.get_str() + " rhs " + r2.get_str(); });
        }
        out.push_back(a.result());
        out.push_back(b.result());
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"kostka-threeway", "plus-twoway", "classical", "specialization", "cross-r", "positivity", "degree",
            "stability",       "cauchy",      "structural", "oracles",       "rational-identities",  "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    static const std::vector<std::pair<std::string, Suite>> table{
        {"kostka-threeway", verify_kostka_threeway}, {"plus-twoway", verify_plus_twoway},
        {"classical", verify_classical},             {"specialization", verify_specialization},
        {"cross-r", verify_cross_r},                 {"positivity", verify_positivity},
        {"degree", verify_degree},                   {"stability", verify_stability},
        {"cauchy", verify_cauchy},                   {"structural", verify_structural},
        {"oracles", verify_oracles},                 {"rational-identities", verify_rational_identities}};
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : table) {
        if (suite != "all" && suite != name) continue;
        auto part = fn(opt);
        out.insert(out.end(), part.begin(), part.end());
        if (suite == name) return out;
    }
    if (suite != "all") throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

nlohmann::json report_to_json(const std::string& suite, const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    for (const auto& c : results) {
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        all = all && c.ok;
    }
    return {{"suite", suite}, {"ok", all}, {"checks", checks}};
}

}  // namespace mpk
