#include "mpk/kostka.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mpk {

using nlohmann::json;

PartitionFunction::PartitionFunction(int r, std::vector<std::vector<int>> slot, bool memo)
    : r_(r), slot_(std::move(slot)), ring_(weight_ring(r)), memo_(memo), cache_(slot_.size()) {
    targets_.resize(slot_.size());
    for (std::size_t p = 0; p < slot_.size(); ++p)
        for (std::size_t q = p + 1; q < slot_.size(); ++q)
            if (slot_[p][q] >= 0) targets_[p].push_back(static_cast<int>(q));
}

PartitionFunction::PartitionFunction(PartitionFunction&& o) noexcept
    : r_(o.r_),
      slot_(std::move(o.slot_)),
      targets_(std::move(o.targets_)),
      ring_(std::move(o.ring_)),
      memo_(o.memo_),
      cache_(std::move(o.cache_)) {}

PartitionFunction PartitionFunction::plain(int r, int M, Sign sign, bool memo) {
    std::vector<std::vector<int>> slot(M, std::vector<int>(M, -1));
    for (int p = 0; p < M; ++p)
        for (int q = p + 1; q < M; ++q) {
            int k = comp_of(r, p), kk = comp_of(r, q);
            if (sign == Sign::Minus && kk == cyc(r, k + 1)) slot[p][q] = k - 1;
            if (sign == Sign::Plus && kk == cyc(r, k - 1)) slot[p][q] = cyc(r, k - 1) - 1;
        }
    return PartitionFunction(r, std::move(slot), memo);
}

PartitionFunction PartitionFunction::for_mu(const RPartition& mu, int m, bool memo) {
    int r = mu.r(), M = r * m;
    DeltaSets d = delta_sets(mu, m);
    std::vector<char> in0(M, 0), in1(M, 0);
    for (int p : d.delta0) in0[p] = 1;
    for (int p : d.delta1) in1[p] = 1;
    std::vector<std::vector<int>> slot(M, std::vector<int>(M, -1));
    for (int p = 0; p < M; ++p)
        for (int q = p + 1; q < M; ++q) {
            int k = comp_of(r, p), i = row_of(r, p), kk = comp_of(r, q);
            int km = cyc(r, k - 1);
            if (kk == km && in1[p] && in1[pos_of(r, km, i)]) slot[p][q] = km - 1;
            if (in0[p] && k == r && kk == r) slot[p][q] = r;
        }
    return PartitionFunction(r, std::move(slot), memo);
}

Poly PartitionFunction::operator()(const Composition& xi) const {
    if (static_cast<int>(xi.size()) != size()) throw std::invalid_argument("partition function: length mismatch");
    long s = 0;
    for (long v : xi) {
        s += v;
        if (s < 0) return Poly(ring_);
    }
    if (s != 0) throw std::invalid_argument("partition function: entries must sum to zero");
    std::vector<long> need(xi.begin(), xi.end());
    return solve(0, need);
}

Poly PartitionFunction::solve(int p, std::vector<long>& need) const {
    int M = size();
    if (p == M) return Poly::constant(ring_, 1);
    long out = need[p];
    if (out < 0) return Poly(ring_);
    if (p == M - 1) return out == 0 ? Poly::constant(ring_, 1) : Poly(ring_);
    std::vector<long> key;
    if (memo_) {
        key.assign(need.begin() + p, need.end());
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_[p].find(key);
        if (it != cache_[p].end()) return it->second;
    }
    const auto& tg = targets_[p];
    Poly total(ring_);
    if (tg.empty()) {
        if (out == 0) total = solve(p + 1, need);
    } else {
        std::vector<Exp> w(ring_->size(), 0);
        auto rec = [&](auto&& self, std::size_t j, long rem) -> void {
            int q = tg[j];
            if (j + 1 == tg.size()) {
                int sl = slot_[p][q];
                need[q] += rem;
                w[sl] += static_cast<Exp>(rem);
                Poly sub = solve(p + 1, need);
                if (!sub.is_zero()) total += sub.mul_term(w.data(), 1);
                w[sl] -= static_cast<Exp>(rem);
                need[q] -= rem;
                return;
            }
            int sl = slot_[p][q];
            for (long c = 0; c <= rem; ++c) {
                need[q] += c;
                w[sl] += static_cast<Exp>(c);
                self(self, j + 1, rem - c);
                w[sl] -= static_cast<Exp>(c);
                need[q] -= c;
            }
        };
        rec(rec, 0, out);
    }
    if (memo_) {
        std::lock_guard<std::mutex> lock(mutex_);
        cache_[p].emplace(std::move(key), total);
    }
    return total;
}

Composition component_staircase(int r, int m) {
    Composition d(static_cast<std::size_t>(r) * m);
    for (int p = 0; p < r * m; ++p) d[p] = m - row_of(r, p);
    return d;
}

Poly signed_pf_sum(const RPartition& lam, const RPartition& mu, int m, const PartitionFunction& L) {
    int r = lam.r(), M = r * m;
    Composition d = component_staircase(r, m);
    Composition v = c_map(lam, m), base = c_map(mu, m);
    for (int p = 0; p < M; ++p) {
        v[p] += d[p];
        base[p] += d[p];
    }
    RingPtr ring = weight_ring(r);
    Poly total(ring);
    Composition xi(M);
    std::vector<std::vector<char>> used(r, std::vector<char>(m, 0));
    std::vector<std::vector<int>> perm(r);
    auto rec = [&](auto&& self, int p, long prefix) -> void {
        if (p == M) {
            int inv = 0;
            for (const auto& w : perm)
                for (int a = 0; a < m; ++a)
                    for (int b = a + 1; b < m; ++b)
                        if (w[a] > w[b]) ++inv;
            Poly val = L(xi);
            if (!val.is_zero()) total += inv % 2 ? -val : val;
            return;
        }
        int k = comp_of(r, p);
        for (int j = 1; j <= m; ++j) {
            if (used[k - 1][j - 1]) continue;
            long x = v[pos_of(r, k, j)] - base[p];
            if (prefix + x < 0) continue;
            used[k - 1][j - 1] = 1;
            perm[k - 1].push_back(j);
            xi[p] = x;
            self(self, p + 1, prefix + x);
            perm[k - 1].pop_back();
            used[k - 1][j - 1] = 0;
        }
    };
    rec(rec, 0, 0);
    return total;
}

int pf_padding(const RPartition& lam, const RPartition& mu) {
    return std::max({lam.max_length(), mu.max_length(), 1});
}

namespace {

Poly to_params(const Poly& w, const Params& params) { return w.substitute(weight_images(params), params.ring); }

}  // namespace

Poly kostka_minus_pf(const RPartition& lam, const RPartition& mu, const Params& params, int m) {
    if (m <= 0) m = pf_padding(lam, mu);
    auto L = PartitionFunction::plain(lam.r(), lam.r() * m, Sign::Minus);
    return to_params(signed_pf_sum(lam, mu, m, L), params);
}

Poly kostka_plus_pf(const RPartition& lam, const RPartition& mu, const Params& params, int m) {
    if (m <= 0) m = pf_padding(lam, mu);
    auto L = PartitionFunction::plain(lam.r(), lam.r() * m, Sign::Plus);
    return to_params(signed_pf_sum(lam, mu, m, L), params);
}

Poly kostka_plus_pf_mu(const RPartition& lam, const RPartition& mu, const Params& params, int m) {
    if (m <= 0) m = pf_padding(lam, mu);
    auto L = PartitionFunction::for_mu(mu, m);
    return to_params(signed_pf_sum(lam, mu, m, L), params);
}

Poly stable_kostka(const RPartition& lam, const RPartition& mu, Sign sign, const Params& params) {
    int m = pf_padding(lam, mu), r = lam.r();
    Composition a = c_map(lam, m), b = c_map(mu, m);
    for (std::size_t p = 0; p < a.size(); ++p) a[p] -= b[p];
    auto L = PartitionFunction::plain(r, r * m, sign);
    return to_params(L(a), params);
}

RPartition theta_shift(const RPartition& lam, int n, int m) {
    int r = lam.r();
    long M = static_cast<long>(r) * m;
    std::vector<Partition> comps;
    for (int k = 0; k < r; ++k) {
        std::vector<int> parts(m);
        for (int i = 1; i <= m; ++i) parts[i - 1] = lam[k][i - 1] + static_cast<int>(n * (M + 1) * (1L << (m - i)));
        comps.emplace_back(parts);
    }
    return RPartition(comps);
}

Reduction reduce_r(const RPartition& lam, const RPartition& mu, int a) {
    int r = lam.r();
    if (a < 0 || a >= r) throw std::invalid_argument("reduce_r needs 0 <= a < r");
    for (int k = 0; k < a; ++k)
        if (!lam[k].empty() || !mu[k].empty())
            throw std::invalid_argument("reduce_r: the first " + std::to_string(a) + " components must be empty");
    Params gen = Params::generic(r);
    if (a == 0) return {lam, mu, gen};
    int rr = r - a;
    std::vector<Partition> lc(lam.components().begin() + a, lam.components().end());
    std::vector<Partition> mc(mu.components().begin() + a, mu.components().end());
    Params p;
    p.ring = gen.ring;
    for (int j = 1; j < rr; ++j) p.t.push_back(gen.t[a + j - 1]);
    Poly last = gen.t[r - 1];
    for (int b = 1; b <= a; ++b) last *= gen.t[b - 1];
    p.t.push_back(last);
    return {RPartition(lc), RPartition(mc), p};
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Solve: return "solve";
        case Method::PF: return "pf";
        case Method::GramSchmidt: return "gram-schmidt";
        case Method::Raising: return "raising";
    }
    return "?";
}

Method parse_method(const std::string& s) {
    if (s == "solve") return Method::Solve;
    if (s == "pf") return Method::PF;
    if (s == "gram-schmidt") return Method::GramSchmidt;
    if (s == "raising") return Method::Raising;
    throw std::invalid_argument("unknown method '" + s + "'");
}

const Poly& KostkaTable::at(const RPartition& lam, const RPartition& mu) const {
    auto i = std::find(order.begin(), order.end(), lam) - order.begin();
    auto j = std::find(order.begin(), order.end(), mu) - order.begin();
    if (i == static_cast<long>(order.size()) || j == static_cast<long>(order.size()))
        throw std::out_of_range("pair not in table");
    return k(i, j);
}

PolyMatrix kostka_from_P(const PolyMatrix& p) { return unitriangular_inverse(p); }

namespace {

KostkaTable shell(const SymContext& ctx, Sign sign, Method method) {
    KostkaTable t;
    t.n = ctx.n();
    t.r = ctx.r();
    t.sign = sign;
    t.method = method;
    t.params = ctx.params().key();
    t.ring = ctx.ring();
    t.order = ctx.index()->parts();
    return t;
}

}  // namespace

KostkaTable kostka_by_solve(const SymContext& ctx, Sign sign) {
    KostkaTable t = shell(ctx, sign, Method::Solve);
    t.k = kostka_from_P(hl_tables(ctx).P(sign));
    return t;
}

KostkaTable kostka_by_pf(const SymContext& ctx, Sign sign, int m_min) {
    KostkaTable t = shell(ctx, sign, Method::PF);
    const Index& index = *ctx.index();
    std::size_t N = index.size();
    int r = ctx.r();
    std::vector<std::unique_ptr<PartitionFunction>> pf;
    for (int m = 0; m <= std::max({ctx.n(), m_min, 1}); ++m)
        pf.push_back(std::make_unique<PartitionFunction>(PartitionFunction::plain(r, r * std::max(m, 1), sign)));
    t.k = PolyMatrix(N, N, Poly(ctx.ring()));
    parallel_for(N, ctx.jobs(), [&](std::size_t i) {
        for (std::size_t j = 0; j < N; ++j) {
            int m = std::max(pf_padding(index[i], index[j]), m_min);
            t.k(i, j) = to_params(signed_pf_sum(index[i], index[j], m, *pf[m]), ctx.params());
        }
    });
    return t;
}

KostkaTable kostka_by_gram_schmidt(const SymContext& ctx, Sign sign) {
    KostkaTable t = shell(ctx, sign, Method::GramSchmidt);
    GramSchmidt g = gram_schmidt_PQ(ctx);
    t.k = kostka_from_P(sign == Sign::Plus ? g.p_plus : g.p_minus);
    return t;
}

KostkaTable kostka_by_raising(const SymContext& ctx, Sign sign) {
    KostkaTable t = shell(ctx, sign, Method::Raising);
    const Index& index = *ctx.index();
    std::size_t N = index.size();
    PolyMatrix p(N, N, Poly(ctx.ring()));
    parallel_for(N, ctx.jobs(), [&](std::size_t i) {
        std::vector<Poly> q = sign == Sign::Plus ? raising_Q_plus_s(ctx, index[i]) : closed_Q_minus_s(ctx, index[i]);
        p.set_row(i, divide_row(q, q[i]));
    });
    t.k = kostka_from_P(p);
    return t;
}

KostkaTable kostka_table(const SymContext& ctx, Sign sign, Method method) {
    switch (method) {
        case Method::Solve: return kostka_by_solve(ctx, sign);
        case Method::PF: return kostka_by_pf(ctx, sign);
        case Method::GramSchmidt: return kostka_by_gram_schmidt(ctx, sign);
        case Method::Raising: return kostka_by_raising(ctx, sign);
    }
    throw std::invalid_argument("unknown method");
}

// ---------------------------------------------------------------------------

std::pair<RingPtr, std::vector<Poly>> parse_assignment(const RingPtr& src, const std::string& spec) {
    auto trim = [](const std::string& s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::vector<std::string> rhs(src->size());
    std::vector<bool> given(src->size(), false);
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("assignment '" + item + "' lacks '='");
        std::string lhs = trim(item.substr(0, eq));
        auto idx = src->index(lhs);
        if (!idx) throw std::invalid_argument("unknown variable '" + lhs + "'");
        if (given[*idx]) throw std::invalid_argument("variable '" + lhs + "' assigned twice");
        given[*idx] = true;
        rhs[*idx] = trim(item.substr(eq + 1));
        if (rhs[*idx].empty()) throw std::invalid_argument("empty value for '" + lhs + "'");
    }
    for (std::size_t i = 0; i < rhs.size(); ++i)
        if (!given[i]) rhs[i] = src->name(i);
    std::set<std::string> ids;
    for (const auto& s : rhs)
        for (std::size_t i = 0; i < s.size();) {
            if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
                std::size_t j = i;
                while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
                ids.insert(s.substr(i, j - i));
                i = j;
            } else {
                ++i;
            }
        }
    std::vector<std::string> names;
    for (const auto& n : src->names())
        if (ids.erase(n)) names.push_back(n);
    names.insert(names.end(), ids.begin(), ids.end());
    RingPtr target = make_ring(names);
    std::vector<Poly> images;
    for (const auto& s : rhs) images.push_back(parse_poly(s, target));
    return {target, images};
}

KostkaTable specialize(const KostkaTable& table, const std::string& assignment) {
    auto [ring, images] = parse_assignment(table.ring, assignment);
    KostkaTable t = table;
    t.ring = ring;
    std::size_t N = table.order.size();
    t.k = PolyMatrix(N, N, Poly(ring));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) t.k(i, j) = table.k(i, j).substitute(images, ring);
    std::string composed;
    for (std::size_t v = 0; v < images.size(); ++v) {
        if (v) composed += ",";
        composed += table.ring->name(v) + "=" + images[v].to_string();
    }
    t.params = table.params.empty() ? composed : table.params + " then " + composed;
    return t;
}

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (std::size_t t = 0; t < p.size(); ++t) {
        json term;
        term["e"] = std::vector<int>(p.exps(t), p.exps(t) + p.nvars());
        term["c"] = p.coef(t).get_str();
        arr.push_back(term);
    }
    return arr;
}

Poly poly_from_json(const json& j, const RingPtr& ring) {
    std::vector<Exp> ex;
    std::vector<Int> co;
    for (const auto& term : j) {
        auto e = term.at("e").get<std::vector<int>>();
        if (e.size() != ring->size()) throw std::invalid_argument("exponent vector length mismatch");
        for (int x : e) {
            if (x < 0) throw std::invalid_argument("negative exponent");
            ex.push_back(static_cast<Exp>(x));
        }
        co.emplace_back(term.at("c").get<std::string>());
    }
    return Poly::from_terms(ring, std::move(ex), std::move(co));
}

json table_to_json(const KostkaTable& t) {
    json j;
    j["n"] = t.n;
    j["r"] = t.r;
    j["sign"] = sign_name(t.sign);
    j["method"] = method_name(t.method);
    j["params"] = t.params;
    j["vars"] = t.ring->names();
    if (!t.source.empty()) j["source"] = t.source;
    json order = json::array();
    for (const auto& l : t.order) order.push_back(l.str());
    j["order"] = order;
    json entries = json::array();
    for (std::size_t a = 0; a < t.order.size(); ++a)
        for (std::size_t b = 0; b < t.order.size(); ++b) {
            if (t.k(a, b).is_zero()) continue;
            entries.push_back({{"lambda", t.order[a].str()}, {"mu", t.order[b].str()}, {"poly", poly_to_json(t.k(a, b))}});
        }
    j["entries"] = entries;
    return j;
}

KostkaTable table_from_json(const json& j) {
    KostkaTable t;
    t.n = j.at("n").get<int>();
    t.r = j.at("r").get<int>();
    t.sign = parse_sign(j.at("sign").get<std::string>());
    t.method = parse_method(j.at("method").get<std::string>());
    t.params = j.value("params", std::string());
    t.source = j.value("source", std::string());
    t.ring = j.contains("vars") ? make_ring(j.at("vars").get<std::vector<std::string>>()) : t_ring(t.r);
    std::map<RPartition, std::size_t> pos;
    for (const auto& s : j.at("order")) {
        pos.emplace(parse_rpartition(s.get<std::string>()), t.order.size());
        t.order.push_back(parse_rpartition(s.get<std::string>()));
    }
    std::size_t N = t.order.size();
    t.k = PolyMatrix(N, N, Poly(t.ring));
    for (const auto& e : j.at("entries")) {
        auto a = pos.at(parse_rpartition(e.at("lambda").get<std::string>()));
        auto b = pos.at(parse_rpartition(e.at("mu").get<std::string>()));
        t.k(a, b) = poly_from_json(e.at("poly"), t.ring);
    }
    return t;
}

std::string table_to_csv(const KostkaTable& t) {
    std::ostringstream os;
    os << "# n=" << t.n << " r=" << t.r << " sign=" << sign_name(t.sign) << " method=" << method_name(t.method)
       << " vars=";
    for (std::size_t v = 0; v < t.ring->size(); ++v) os << (v ? ";" : "") << t.ring->name(v);
    if (!t.params.empty()) os << " params=" << t.params;
    os << "\n";
    if (!t.source.empty()) os << "# source=" << t.source << "\n";
    os << "lambda,mu,poly\n";
    for (std::size_t a = 0; a < t.order.size(); ++a)
        for (std::size_t b = 0; b < t.order.size(); ++b) {
            if (t.k(a, b).is_zero()) continue;
            os << '"' << t.order[a].str() << "\",\"" << t.order[b].str() << "\"," << t.k(a, b).to_string() << "\n";
        }
    return os.str();
}

KostkaTable table_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    KostkaTable t;
    if (!std::getline(is, line) || line.rfind("# ", 0) != 0) throw std::invalid_argument("csv: missing header comment");
    // params is last and may contain spaces
    std::string head = line.substr(2);
    if (auto at = head.find(" params="); at != std::string::npos) {
        t.params = head.substr(at + 8);
        head.resize(at);
    }
    std::istringstream hs(head);
    std::string kv;
    std::vector<std::string> vars;
    while (hs >> kv) {
        auto eq = kv.find('=');
        std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
        if (k == "n") t.n = std::stoi(v);
        else if (k == "r") t.r = std::stoi(v);
        else if (k == "sign") t.sign = parse_sign(v);
        else if (k == "method") t.method = parse_method(v);
        else if (k == "vars") {
            std::stringstream vs(v);
            std::string name;
            while (std::getline(vs, name, ';')) vars.push_back(name);
        }
    }
    t.ring = make_ring(vars);
    t.order = gen_rpartitions(t.n, t.r);
    std::size_t N = t.order.size();
    std::map<RPartition, std::size_t> pos;
    for (std::size_t i = 0; i < N; ++i) pos.emplace(t.order[i], i);
    t.k = PolyMatrix(N, N, Poly(t.ring));
    while (std::getline(is, line) && line.rfind("# ", 0) == 0)
        if (line.rfind("# source=", 0) == 0) t.source = line.substr(9);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto q1 = line.find("\",\"");
        auto q2 = line.find("\",", q1 + 3);
        if (line[0] != '"' || q1 == std::string::npos || q2 == std::string::npos)
            throw std::invalid_argument("csv: malformed row '" + line + "'");
        auto a = pos.at(parse_rpartition(line.substr(1, q1 - 1)));
        auto b = pos.at(parse_rpartition(line.substr(q1 + 3, q2 - q1 - 3)));
        t.k(a, b) = parse_poly(line.substr(q2 + 2), t.ring);
    }
    return t;
}

KostkaTable cached_table(const SymContext& ctx, Sign sign, Method method, const std::string& dir) {
    if (dir.empty()) return kostka_table(ctx, sign, method);
    std::string key = ctx.params().key();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream name;
    name << method_name(method) << "-" << sign_name(sign) << "-n" << ctx.n() << "-r" << ctx.r() << "-" << std::hex << h
         << ".json";
    std::filesystem::path path = std::filesystem::path(dir) / name.str();
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        json j = json::parse(in, nullptr, false);
        if (!j.is_discarded() && j.value("params", std::string()) == key) {
            KostkaTable t = table_from_json(j);
            if (t.method == method && t.sign == sign && t.n == ctx.n() && t.r == ctx.r()) return t;
        }
    }
    KostkaTable t = kostka_table(ctx, sign, method);
    std::filesystem::create_directories(dir);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << table_to_json(t).dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path);
    return t;
}

}  // namespace mpk
