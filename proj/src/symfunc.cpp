#include "mpk/symfunc.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mpk {

std::string sign_name(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

Sign parse_sign(const std::string& s) {
    if (s == "plus" || s == "+") return Sign::Plus;
    if (s == "minus" || s == "-") return Sign::Minus;
    throw std::invalid_argument("sign must be plus or minus, got '" + s + "'");
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::S: return "s";
        case Basis::M: return "m";
        case Basis::H: return "h";
        case Basis::QPlus: return "q+";
        case Basis::QMinus: return "q-";
        case Basis::PPlus: return "P+";
        case Basis::PMinus: return "P-";
        case Basis::HLQPlus: return "Q+";
        case Basis::HLQMinus: return "Q-";
    }
    return "?";
}

// ---------------------------------------------------------------------------

Poly Params::t0() const {
    Poly p = Poly::constant(ring, 1);
    for (const auto& x : t) p *= x;
    return p;
}

std::string Params::key() const {
    std::string s;
    for (int k = 1; k <= r(); ++k) {
        if (k > 1) s += ",";
        s += "t" + std::to_string(k) + "=" + t[k - 1].to_string();
    }
    return s;
}

Params Params::generic(int r) {
    Params p;
    p.ring = t_ring(r);
    for (int k = 0; k < r; ++k) p.t.push_back(Poly::variable(p.ring, k));
    return p;
}

Params Params::uniform(int r) {
    Params p;
    p.ring = make_ring({"t"});
    p.t.assign(r, Poly::variable(p.ring, 0));
    return p;
}

Params Params::parse(int r, const std::string& spec) {
    std::vector<std::string> rhs(r);
    std::vector<bool> given(r, false);
    std::stringstream ss(spec);
    std::string item;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("assignment '" + item + "' lacks '='");
        std::string lhs = trim(item.substr(0, eq));
        if (lhs.size() < 2 || lhs[0] != 't') throw std::invalid_argument("bad parameter name '" + lhs + "'");
        int k;
        try {
            k = std::stoi(lhs.substr(1));
        } catch (...) {
            throw std::invalid_argument("bad parameter name '" + lhs + "'");
        }
        if (k < 1 || k > r) throw std::invalid_argument("parameter " + lhs + " out of range");
        if (given[k - 1]) throw std::invalid_argument("parameter " + lhs + " assigned twice");
        given[k - 1] = true;
        rhs[k - 1] = trim(item.substr(eq + 1));
        if (rhs[k - 1].empty()) throw std::invalid_argument("empty value for " + lhs);
    }
    for (int k = 0; k < r; ++k)
        if (!given[k]) rhs[k] = "t" + std::to_string(k + 1);
    // Collect identifiers in order of first appearance.
    std::vector<std::string> names;
    for (const auto& s : rhs) {
        for (std::size_t i = 0; i < s.size();) {
            if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
                std::size_t j = i;
                while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
                std::string id = s.substr(i, j - i);
                if (std::find(names.begin(), names.end(), id) == names.end()) names.push_back(id);
                i = j;
            } else {
                ++i;
            }
        }
    }
    std::sort(names.begin(), names.end());
    Params p;
    p.ring = make_ring(names);
    for (const auto& s : rhs) p.t.push_back(parse_poly(s, p.ring));
    return p;
}

// ---------------------------------------------------------------------------

Index::Index(int n, int r) : n_(n), r_(r), parts_(gen_rpartitions(n, r)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) pos_.emplace(parts_[i], i);
}

std::size_t Index::find(const RPartition& lam) const {
    auto it = pos_.find(lam);
    if (it == pos_.end()) throw std::out_of_range("r-partition " + lam.str() + " not in index");
    return it->second;
}

// ---------------------------------------------------------------------------

XSpace::XSpace(int r, int m, Params params) : r_(r), m_(m), params_(std::move(params)) {
    if (params_.r() != r) throw std::invalid_argument("parameter count differs from r");
    std::vector<std::string> names;
    for (int k = 1; k <= r; ++k)
        for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(k) + "_" + std::to_string(i));
    for (const auto& n : params_.ring->names()) names.push_back(n);
    ring_ = make_ring(names);
    coeff_offset_ = nx();
}

Poly XSpace::lift(const Poly& c) const {
    std::size_t nc = params_.ring->size();
    std::vector<Exp> ex(c.size() * ring_->size(), 0);
    std::vector<Int> co;
    co.reserve(c.size());
    for (std::size_t t = 0; t < c.size(); ++t) {
        for (std::size_t j = 0; j < nc; ++j) ex[t * ring_->size() + coeff_offset_ + j] = c.exps(t)[j];
        co.push_back(c.coef(t));
    }
    return Poly::from_terms(ring_, std::move(ex), std::move(co));
}

Poly XSpace::project(const Poly& p) const {
    std::size_t nc = params_.ring->size();
    std::vector<Exp> ex(p.size() * nc, 0);
    std::vector<Int> co;
    for (std::size_t t = 0; t < p.size(); ++t) {
        for (std::size_t j = 0; j < coeff_offset_; ++j)
            if (p.exps(t)[j]) throw std::domain_error("polynomial still contains x-variables");
        for (std::size_t j = 0; j < nc; ++j) ex[t * nc + j] = p.exps(t)[coeff_offset_ + j];
        co.push_back(p.coef(t));
    }
    return Poly::from_terms(params_.ring, std::move(ex), std::move(co));
}

Poly XSpace::h(int k, int a) const {
    k = cyc(r_, k);
    if (a < 0) return zero();
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = h_cache_.find({k, a});
        if (it != h_cache_.end()) return it->second;
    }
    TermAccumulator acc(ring_);
    std::vector<Exp> e(ring_->size(), 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == m_) {
            if (rem == 0) acc.add(e.data(), 1);
            return;
        }
        for (int c = rem; c >= 0; --c) {
            e[xvar(k, i + 1)] = static_cast<Exp>(c);
            self(self, i + 1, rem - c);
        }
        e[xvar(k, i + 1)] = 0;
    };
    rec(rec, 0, a);
    Poly p = acc.finish();
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return h_cache_.emplace(std::make_pair(k, a), p).first->second;
}

Poly XSpace::e(int k, int b) const {
    k = cyc(r_, k);
    if (b < 0 || b > m_) return zero();
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = e_cache_.find({k, b});
        if (it != e_cache_.end()) return it->second;
    }
    TermAccumulator acc(ring_);
    std::vector<Exp> e(ring_->size(), 0);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (rem == 0) {
            acc.add(e.data(), 1);
            return;
        }
        if (m_ - i < rem) return;
        e[xvar(k, i + 1)] = 1;
        self(self, i + 1, rem - 1);
        e[xvar(k, i + 1)] = 0;
        self(self, i + 1, rem);
    };
    rec(rec, 0, b);
    Poly p = acc.finish();
    std::lock_guard<std::mutex> lock(cache_mutex_);
    return e_cache_.emplace(std::make_pair(k, b), p).first->second;
}

// ---------------------------------------------------------------------------

Int kostka_number(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) return 0;
    // Fill value v as a horizontal strip of size mu_v.
    std::vector<int> shape(lam.length() + 1, 0);
    std::function<Int(int)> rec = [&](int v) -> Int {
        if (v == mu.length()) return 1;
        Int total = 0;
        int need = mu[v];
        // Choose how many boxes to add in each row, bounded by the row above
        // in the old shape and by lam.
        std::vector<int> old = shape;
        auto place = [&](auto&& self, int row, int rem) -> void {
            if (row == lam.length()) {
                if (rem == 0) total += rec(v + 1);
                return;
            }
            int cap = lam[row] - old[row];
            if (row > 0) cap = std::min(cap, old[row - 1] - old[row]);
            for (int c = std::min(cap, rem); c >= 0; --c) {
                shape[row] = old[row] + c;
                self(self, row + 1, rem - c);
            }
            shape[row] = old[row];
        };
        place(place, 0, need);
        return total;
    };
    return rec(0);
}

Int kostka_number(const RPartition& lam, const RPartition& mu) {
    if (lam.r() != mu.r()) throw std::invalid_argument("kostka_number: r mismatch");
    Int k = 1;
    for (int c = 0; c < lam.r() && k != 0; ++c) k *= kostka_number(lam[c], mu[c]);
    return k;
}

namespace {

Poly monomial_group(const Partition& p, int k, const XSpace& xs) {
    if (p.length() > xs.m()) return xs.zero();
    std::vector<int> v(xs.m(), 0);
    for (int i = 0; i < p.length(); ++i) v[i] = p[i];
    std::sort(v.begin(), v.end());
    TermAccumulator acc(xs.ring());
    std::vector<Exp> e(xs.ring()->size(), 0);
    do {
        for (int i = 0; i < xs.m(); ++i) e[xs.xvar(k, i + 1)] = static_cast<Exp>(v[i]);
        acc.add(e.data(), 1);
    } while (std::next_permutation(v.begin(), v.end()));
    return acc.finish();
}

int perm_sign(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++inv;
    return inv % 2 ? -1 : 1;
}

Poly alternant_group(const std::vector<int>& expo, int k, const XSpace& xs) {
    int m = xs.m();
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 0);
    TermAccumulator acc(xs.ring());
    std::vector<Exp> e(xs.ring()->size(), 0);
    do {
        for (int i = 0; i < m; ++i) e[xs.xvar(k, w[i] + 1)] = static_cast<Exp>(expo[i]);
        acc.add(e.data(), perm_sign(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return acc.finish();
}

}  // namespace

Poly monomial_x(const RPartition& mu, const XSpace& xs) {
    Poly f = xs.one();
    for (int k = 1; k <= mu.r(); ++k) f *= monomial_group(mu[k - 1], k, xs);
    return f;
}

Poly schur_x(const RPartition& lam, const XSpace& xs) {
    Poly f = xs.one();
    for (int k = 1; k <= lam.r(); ++k) {
        const Partition& p = lam[k - 1];
        Poly g = xs.zero();
        for (const auto& nu : gen_partitions(p.size())) {
            Int c = kostka_number(p, nu);
            if (c != 0) g += monomial_group(nu, k, xs) * c;
        }
        f *= g;
    }
    return f;
}

Poly schur_alternant_x(const RPartition& lam, const XSpace& xs) {
    int m = xs.m();
    Poly f = xs.one();
    std::vector<int> delta(m), top(m);
    for (int i = 0; i < m; ++i) delta[i] = m - 1 - i;
    for (int k = 1; k <= lam.r(); ++k) {
        if (lam[k - 1].length() > m) return xs.zero();
        for (int i = 0; i < m; ++i) top[i] = lam[k - 1][i] + delta[i];
        f *= exact_divide(alternant_group(top, k, xs), alternant_group(delta, k, xs));
    }
    return f;
}

// ---------------------------------------------------------------------------

namespace {

Poly swap_vars(const Poly& f, std::size_t a, std::size_t b) {
    std::size_t nv = f.nvars();
    std::vector<Exp> ex(f.size() * nv);
    std::vector<Int> co;
    co.reserve(f.size());
    for (std::size_t t = 0; t < f.size(); ++t) {
        std::copy(f.exps(t), f.exps(t) + nv, ex.begin() + t * nv);
        std::swap(ex[t * nv + a], ex[t * nv + b]);
        co.push_back(f.coef(t));
    }
    return Poly::from_terms(f.ring(), std::move(ex), std::move(co));
}

}  // namespace

std::vector<Poly> m_coords_unchecked(const Poly& f, const Index& index, const XSpace& xs) {
    int r = xs.r(), m = xs.m();
    std::size_t nc = xs.params().ring->size();
    std::size_t off = xs.nx();
    std::vector<TermAccumulator> acc;
    acc.reserve(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) acc.emplace_back(xs.params().ring, 8);
    std::vector<Partition> comps(r);
    std::vector<int> g(m);
    for (std::size_t t = 0; t < f.size(); ++t) {
        const Exp* e = f.exps(t);
        bool dominant = true;
        for (int k = 1; k <= r && dominant; ++k)
            for (int i = 1; i < m; ++i)
                if (e[xs.xvar(k, i)] < e[xs.xvar(k, i + 1)]) {
                    dominant = false;
                    break;
                }
        if (!dominant) continue;
        for (int k = 1; k <= r; ++k) {
            for (int i = 1; i <= m; ++i) g[i - 1] = e[xs.xvar(k, i)];
            comps[k - 1] = Partition(g);
        }
        RPartition mu(comps);
        if (mu.size() != index.n()) throw std::domain_error("polynomial is not homogeneous of degree n");
        acc[index.find(mu)].add(e + off, f.coef(t));
    }
    (void)nc;
    std::vector<Poly> out;
    out.reserve(index.size());
    for (auto& a : acc) out.push_back(a.finish());
    return out;
}

SymPoly expand_to_m(const Poly& f, const IndexPtr& index, const XSpace& xs) {
    if (xs.m() < index->n()) throw std::invalid_argument("expand_to_m needs m >= n");
    for (std::size_t t = 0; t < f.size(); ++t) {
        long d = 0;
        for (std::size_t j = 0; j < xs.nx(); ++j) d += f.exps(t)[j];
        if (d != index->n()) throw std::domain_error("polynomial is not homogeneous of degree n in x");
    }
    for (int k = 1; k <= xs.r(); ++k)
        for (int i = 1; i < xs.m(); ++i)
            if (swap_vars(f, xs.xvar(k, i), xs.xvar(k, i + 1)) != f)
                throw std::domain_error("polynomial is not symmetric in group " + std::to_string(k));
    return SymPoly{index, Basis::M, m_coords_unchecked(f, *index, xs)};
}

// ---------------------------------------------------------------------------

Poly q_func_x(int k, int s, Sign sign, const Poly& t, const XSpace& xs) {
    if (s < 0) return xs.zero();
    if (s == 0) return xs.one();
    int partner = sign == Sign::Plus ? k - 1 : k + 1;
    Poly tt = xs.lift(t);
    Poly f = xs.zero();
    Poly mt = -tt;
    Poly pw = xs.one();
    for (int b = 0; b <= s; ++b) {
        if (b > 0) pw *= mt;
        if (b > xs.m()) break;
        f += xs.h(k, s - b) * pw * xs.e(partner, b);
    }
    return f;
}

Poly q_basis_x(const Composition& beta, Sign sign, const XSpace& xs) {
    int r = xs.r();
    if (beta.size() % r) throw std::invalid_argument("composition length");
    std::map<std::pair<int, long>, Poly> cache;
    Poly f = xs.one();
    for (std::size_t p = 0; p < beta.size(); ++p) {
        if (beta[p] < 0) return xs.zero();
        if (beta[p] == 0) continue;
        int k = comp_of(r, static_cast<int>(p));
        auto key = std::make_pair(k, beta[p]);
        auto it = cache.find(key);
        if (it == cache.end()) {
            const Poly& t = sign == Sign::Plus ? xs.params().tk(k - 1) : xs.params().tk(k);
            it = cache.emplace(key, q_func_x(k, static_cast<int>(beta[p]), sign, t, xs)).first;
        }
        f *= it->second;
    }
    return f;
}

Rat q_func_rational(int k, int s, Sign sign, const Rat& t, int r, int m,
                    const std::vector<std::vector<Rat>>& x) {
    if (s == 0) return 1;
    const auto& xk = x[cyc(r, k) - 1];
    const auto& xp = x[cyc(r, sign == Sign::Plus ? k - 1 : k + 1) - 1];
    Rat sum = 0;
    for (int i = 0; i < m; ++i) {
        Rat term = 1;
        for (int a = 0; a < s - 1; ++a) term *= xk[i];
        for (int j = 0; j < m; ++j) term *= xk[i] - t * xp[j];
        for (int j = 0; j < m; ++j)
            if (j != i) term /= xk[i] - xk[j];
        sum += term;
    }
    return sum;
}

// ---------------------------------------------------------------------------

SymContext::SymContext(int n, int r, Params params, unsigned jobs)
    : index_(std::make_shared<const Index>(n, r)), xs_(r, std::max(n, 1), std::move(params)), jobs_(jobs) {}

const IntMatrix& SymContext::kostka() const {
    std::call_once(k_once_, [this] {
        std::size_t N = index_->size();
        k_ = IntMatrix(N, N, Int(0));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) k_(i, j) = kostka_number((*index_)[i], (*index_)[j]);
        kinv_ = unitriangular_inverse(k_);
    });
    return k_;
}

const IntMatrix& SymContext::kostka_inverse() const {
    kostka();
    return kinv_;
}

std::vector<Poly> SymContext::s_coords(const Poly& f) const {
    auto mc = m_coords_unchecked(f, *index_, xs_);
    const IntMatrix& kinv = kostka_inverse();
    std::size_t N = index_->size();
    std::vector<Poly> out(N, Poly(ring()));
    for (std::size_t j = 0; j < N; ++j) {
        if (mc[j].is_zero()) continue;
        for (std::size_t l = 0; l < N; ++l)
            if (kinv(j, l) != 0) out[l] += mc[j] * kinv(j, l);
    }
    return out;
}

const PolyMatrix& SymContext::q_to_s(Sign sign) const {
    int which = sign == Sign::Plus ? 0 : 1;
    std::call_once(q_once_[which], [this, sign, which] {
        kostka();
        std::size_t N = index_->size();
        PolyMatrix q(N, N, Poly(ring()));
        parallel_for(N, jobs_, [&](std::size_t i) {
            Poly f = q_basis_x(c_map((*index_)[i], xs_.m()), sign, xs_);
            q.set_row(i, s_coords(f));
        });
        q_[which] = std::move(q);
    });
    return q_[which];
}

Frac bilinear_form(const SymContext& ctx, const std::vector<Poly>& f, const std::vector<Poly>& g) {
    const PolyMatrix& a = ctx.q_to_s(Sign::Plus);
    auto [d, y] = solve_left(a, f);
    const IntMatrix& k = ctx.kostka();
    std::size_t N = ctx.index()->size();
    Poly num(ctx.ring());
    for (std::size_t nu = 0; nu < N; ++nu) {
        if (y[nu].is_zero()) continue;
        Poly gm(ctx.ring());
        for (std::size_t l = 0; l < N; ++l)
            if (!g[l].is_zero() && k(l, nu) != 0) gm += g[l] * k(l, nu);
        if (!gm.is_zero()) num += y[nu] * gm;
    }
    return Frac(num, d);
}

// ---------------------------------------------------------------------------

PolyMatrix cauchy_kernel_mm(const SymContext& ctx) {
    int n = ctx.n(), r = ctx.r(), m = ctx.xs().m();
    const Params& par = ctx.params();
    std::vector<std::string> names;
    for (char c : {'x', 'y'})
        for (int k = 1; k <= r; ++k)
            for (int i = 1; i <= m; ++i)
                names.push_back(std::string(1, c) + std::to_string(k) + "_" + std::to_string(i));
    std::size_t off = names.size();
    for (const auto& s : par.ring->names()) names.push_back(s);
    RingPtr ring = make_ring(names);
    auto xv = [&](int k, int i) { return static_cast<std::size_t>(cyc(r, k) - 1) * m + (i - 1); };
    auto yv = [&](int k, int i) { return static_cast<std::size_t>(r * m) + xv(k, i); };
    std::vector<Poly> tl;
    for (int k = 1; k <= r; ++k) {
        std::vector<Poly> images;
        for (std::size_t j = 0; j < par.ring->size(); ++j) images.push_back(Poly::variable(ring, off + j));
        tl.push_back(par.t[k - 1].substitute(images, ring));
    }
    std::vector<SeriesFactor> factors;
    Poly one = Poly::constant(ring, 1);
    for (int k = 1; k <= r; ++k)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                Poly xy = Poly::variable(ring, xv(k, i)) * Poly::variable(ring, yv(k, j));
                factors.push_back({one, -xy, true});
                Poly xy1 = Poly::variable(ring, xv(k, i)) * Poly::variable(ring, yv(k + 1, j));
                factors.push_back({one, -(tl[k - 1] * xy1), false});
            }
    USeries s = series_from_factors(ring, factors, n);
    const Poly& omega = s[n];
    const Index& index = *ctx.index();
    std::size_t N = index.size();
    std::vector<std::vector<TermAccumulator>> acc(N);
    for (auto& row : acc)
        for (std::size_t j = 0; j < N; ++j) row.emplace_back(par.ring, 4);
    std::vector<int> g(m);
    auto read = [&](const Exp* e, std::size_t base, RPartition& out) {
        std::vector<Partition> comps;
        for (int k = 1; k <= r; ++k) {
            for (int i = 1; i <= m; ++i) g[i - 1] = e[base + xv(k, i)];
            for (int i = 1; i < m; ++i)
                if (g[i - 1] < g[i]) return false;
            comps.emplace_back(g);
        }
        out = RPartition(comps);
        return true;
    };
    for (std::size_t t = 0; t < omega.size(); ++t) {
        const Exp* e = omega.exps(t);
        RPartition mu, nu;
        if (!read(e, 0, mu) || !read(e, static_cast<std::size_t>(r * m), nu)) continue;
        acc[index.find(mu)][index.find(nu)].add(e + off, omega.coef(t));
    }
    PolyMatrix out(N, N, Poly(par.ring));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out(i, j) = acc[i][j].finish();
    return out;
}

CauchyResult cauchy_compare(const SymContext& ctx, const PolyMatrix& f_s, const PolyMatrix& g_s) {
    const IntMatrix& k = ctx.kostka();
    PolyMatrix fm = mul(f_s, k), gm = mul(g_s, k);
    PolyMatrix lhs = mul(fm.transpose(), gm);
    PolyMatrix rhs = cauchy_kernel_mm(ctx);
    const Index& index = *ctx.index();
    for (std::size_t i = 0; i < index.size(); ++i)
        for (std::size_t j = 0; j < index.size(); ++j)
            if (lhs(i, j) != rhs(i, j))
                return {false, "coefficient of m" + index[i].str() + "(x) m" + index[j].str() +
                                   "(y): sum gives " + lhs(i, j).to_string() + ", kernel gives " +
                                   rhs(i, j).to_string()};
    return {true, ""};
}

CauchyResult cauchy_check(const SymContext& ctx, CauchyKind which) {
    PolyMatrix minv = to_poly(ctx.kostka_inverse(), ctx.ring());
    switch (which) {
        case CauchyKind::Plus: return cauchy_compare(ctx, ctx.q_to_s(Sign::Plus), minv);
        case CauchyKind::Minus: return cauchy_compare(ctx, minv, ctx.q_to_s(Sign::Minus));
        case CauchyKind::PQ: break;
    }
    throw std::invalid_argument("the P/Q form of the kernel identity needs Hall-Littlewood families");
}

// ---------------------------------------------------------------------------

Poly classical_hl_x(const Partition& lam, const XSpace& xs) {
    if (xs.r() != 1) throw std::invalid_argument("classical_hl_x needs r = 1");
    int m = xs.m();
    if (lam.length() > m) return xs.zero();
    Poly t = xs.t(1);
    Poly f = xs.one();
    for (int i = 1; i <= m; ++i)
        for (int a = 0; a < lam[i - 1]; ++a) f *= xs.x(1, i);
    Poly vand = xs.one();
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            f *= xs.x(1, i) - t * xs.x(1, j);
            vand *= xs.x(1, i) - xs.x(1, j);
        }
    // Antisymmetrize f over S_m.
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 0);
    TermAccumulator acc(xs.ring(), f.size() * 4);
    std::size_t nv = xs.ring()->size();
    std::vector<Exp> e(nv);
    do {
        int sg = perm_sign(w);
        for (std::size_t term = 0; term < f.size(); ++term) {
            std::copy(f.exps(term), f.exps(term) + nv, e.begin());
            for (int i = 0; i < m; ++i) e[xs.xvar(1, w[i] + 1)] = f.exps(term)[xs.xvar(1, i + 1)];
            acc.add(e.data(), sg * f.coef(term));
        }
    } while (std::next_permutation(w.begin(), w.end()));
    Poly sym = exact_divide(acc.finish(), vand);
    // v_lam(t) = prod over multiplicities (zeros included) of v_{m_i}(t).
    std::map<int, int> mult;
    for (int i = 0; i < m; ++i) ++mult[lam[i]];
    Poly v = xs.one();
    for (auto [part, count] : mult) {
        (void)part;
        v *= xs.lift(v_poly(count, xs.params().ring, 0));
    }
    return exact_divide(sym, v);
}

std::vector<Poly> classical_hl_s(const Partition& lam) {
    int n = lam.size();
    SymContext ctx(n, 1, Params::uniform(1));
    Poly f = classical_hl_x(lam, ctx.xs());
    return ctx.s_coords(f);
}

Poly classical_kostka(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size()) return Poly(make_ring({"t"}));
    int n = lam.size();
    static std::mutex mutex;
    static std::map<int, std::pair<std::shared_ptr<Index>, PolyMatrix>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        auto index = std::make_shared<Index>(n, 1);
        std::size_t N = index->size();
        RingPtr ring;
        PolyMatrix p;
        for (std::size_t i = 0; i < N; ++i) {
            auto row = classical_hl_s((*index)[i][0]);
            if (i == 0) {
                ring = row[0].ring();
                p = PolyMatrix(N, N, Poly(ring));
            }
            p.set_row(i, row);
        }
        it = cache.emplace(n, std::make_pair(index, unitriangular_inverse(p))).first;
    }
    const auto& [index, k] = it->second;
    return k(index->find(RPartition({lam})), index->find(RPartition({mu})));
}

// ---------------------------------------------------------------------------

Rat symmetrized_product_lhs(int m, int a, int b, const std::vector<std::vector<Rat>>& x, const std::vector<Rat>& t) {
    int levels = b - a;
    std::vector<std::vector<int>> perms;
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 0);
    do perms.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    std::vector<std::size_t> choice(levels, 0);
    Rat total = 0;
    while (true) {
        // value of x^(k)_i after permuting groups a..b-1
        auto val = [&](int k, int i) -> const Rat& {
            if (k >= a && k < b) return x[k - 1][perms[choice[k - a]][i]];
            return x[k - 1][i];
        };
        Rat term = 1;
        for (int k = a; k < b; ++k)
            for (int j = 1; j < m; ++j) term *= (val(k, 0) - t[k - 1] * val(k + 1, j)) / (val(k, 0) - val(k, j));
        total += term;
        int pos = 0;
        while (pos < levels && ++choice[pos] == perms.size()) choice[pos++] = 0;
        if (pos == levels) break;
    }
    return total;
}

Rat symmetrized_product_rhs(int m, int a, int b) {
    Int f = 1;
    for (int i = 2; i < m; ++i) f *= i;
    Int p = 1;
    for (int k = a; k < b; ++k) p *= f;
    return Rat(p);
}

Rat symmetrized_mixed_lhs(int m, const std::vector<Rat>& x, const std::vector<Rat>& y, const std::vector<Rat>& z,
                const Rat& t1, const Rat& t3) {
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 0);
    Rat total = 0;
    do {
        const Rat& x1 = x[w[0]];
        Rat term = 1;
        for (int j = 1; j < m; ++j) term *= (x1 - t1 * y[j]) * (z[0] - t3 * x[w[j]]) / (x1 - x[w[j]]);
        total += term;
    } while (std::next_permutation(w.begin(), w.end()));
    return total;
}

Rat symmetrized_mixed_rhs(int m, const std::vector<Rat>& y, const std::vector<Rat>& z, const Rat& t1, const Rat& t3) {
    Rat f = 1;
    for (int i = 2; i < m; ++i) f *= i;
    for (int j = 1; j < m; ++j) f *= z[0] - t1 * t3 * y[j];
    return f;
}

Rat classical_q_rational(int s, const Rat& t, const std::vector<Rat>& y) {
    if (s == 0) return 1;
    std::size_t m = y.size();
    Rat sum = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Rat term = 1;
        for (int a = 0; a < s; ++a) term *= y[i];
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) term *= (y[i] - t * y[j]) / (y[i] - y[j]);
        sum += term;
    }
    return (1 - t) * sum;
}

Poly tilde_q_x(int k, int s, Sign sign, const Poly& t, const XSpace& xs) {
    int partner = sign == Sign::Plus ? k - 1 : k + 1;
    Poly tt = xs.lift(t);
    std::vector<SeriesFactor> factors;
    for (int i = 2; i <= xs.m(); ++i) factors.push_back({xs.one(), -(tt * xs.x(partner, i)), false});
    for (int i = 1; i <= xs.m(); ++i) factors.push_back({xs.one(), -xs.x(k, i), true});
    return series_from_factors(xs.ring(), factors, s)[s];
}

Rat tilde_q_rational(int k, int s, Sign sign, const Rat& t, int r, int m,
                     const std::vector<std::vector<Rat>>& x) {
    const auto& xk = x[cyc(r, k) - 1];
    const auto& xp = x[cyc(r, sign == Sign::Plus ? k - 1 : k + 1) - 1];
    Rat sum = 0;
    for (int i = 0; i < m; ++i) {
        Rat term = 1;
        for (int a = 0; a < s; ++a) term *= xk[i];
        for (int j = 1; j < m; ++j) term *= xk[i] - t * xp[j];
        for (int j = 0; j < m; ++j)
            if (j != i) term /= xk[i] - xk[j];
        sum += term;
    }
    return sum;
}

}  // namespace mpk
