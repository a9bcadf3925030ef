#include "mpk/combinat.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace mpk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative part");
        if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("parts not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

RPartition::RPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("r-partition needs r >= 1");
}

int RPartition::size() const {
    int s = 0;
    for (const auto& p : comps_) s += p.size();
    return s;
}

int RPartition::max_length() const {
    int m = 0;
    for (const auto& p : comps_) m = std::max(m, p.length());
    return m;
}

std::string RPartition::str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < comps_.size(); ++k) {
        if (k) s += ",";
        s += comps_[k].str();
    }
    return s + ")";
}

std::vector<Partition> gen_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<RPartition> gen_rpartitions(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("gen_rpartitions needs n >= 0, r >= 1");
    std::vector<std::vector<Partition>> by_size(n + 1);
    for (int s = 0; s <= n; ++s) by_size[s] = gen_partitions(s);
    std::vector<RPartition> out;
    std::vector<Partition> cur;
    auto rec = [&](auto&& self, int k, int rem) -> void {
        if (k == r - 1) {
            for (const auto& p : by_size[rem]) {
                cur.push_back(p);
                out.emplace_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (int s = 0; s <= rem; ++s)
            for (const auto& p : by_size[s]) {
                cur.push_back(p);
                self(self, k + 1, rem - s);
                cur.pop_back();
            }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end(),
              [](const RPartition& a, const RPartition& b) { return total_order_cmp(a, b) > 0; });
    return out;
}

Composition c_map(const RPartition& lam, int m) {
    if (lam.max_length() > m) throw std::invalid_argument("padding m smaller than a component length");
    int r = lam.r();
    Composition c(static_cast<std::size_t>(r) * m, 0);
    for (int k = 1; k <= r; ++k)
        for (int i = 1; i <= lam[k - 1].length(); ++i) c[pos_of(r, k, i)] = lam[k - 1][i - 1];
    return c;
}

RPartition from_c(const Composition& c, int r) {
    auto s = sort_composition(c, r);
    if (!s) throw std::invalid_argument("composition has negative entries");
    return *s;
}

std::optional<RPartition> sort_composition(const Composition& c, int r) {
    if (c.size() % r) throw std::invalid_argument("composition length not a multiple of r");
    int m = static_cast<int>(c.size()) / r;
    std::vector<Partition> comps;
    comps.reserve(r);
    std::vector<int> g(m);
    for (int k = 1; k <= r; ++k) {
        for (int i = 1; i <= m; ++i) {
            long v = c[pos_of(r, k, i)];
            if (v < 0) return std::nullopt;
            g[i - 1] = static_cast<int>(v);
        }
        std::sort(g.begin(), g.end(), std::greater<>());
        comps.emplace_back(g);
    }
    return RPartition(std::move(comps));
}

namespace {
void check_same(const RPartition& a, const RPartition& b) {
    if (a.r() != b.r()) throw std::invalid_argument("r-partitions with different r");
    if (a.size() != b.size()) throw std::invalid_argument("r-partitions of different size");
}
}  // namespace

bool dominance_leq(const RPartition& a, const RPartition& b) {
    check_same(a, b);
    int m = std::max({a.max_length(), b.max_length(), 1});
    auto ca = c_map(a, m), cb = c_map(b, m);
    long sa = 0, sb = 0;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        sa += ca[i];
        sb += cb[i];
        if (sa > sb) return false;
    }
    return true;
}

std::strong_ordering total_order_cmp(const RPartition& a, const RPartition& b) {
    check_same(a, b);
    int m = std::max({a.max_length(), b.max_length(), 1});
    auto ca = c_map(a, m), cb = c_map(b, m);
    return ca <=> cb;
}

long n_stat(const Composition& xi) {
    long s = 0;
    for (std::size_t i = 0; i < xi.size(); ++i) s += static_cast<long>(i) * xi[i];
    return s;
}

long a_stat(const RPartition& lam) {
    long nl = 0;
    long extra = 0;
    for (int k = 0; k < lam.r(); ++k) {
        const auto& p = lam[k];
        for (int i = 0; i < p.length(); ++i) nl += static_cast<long>(i) * p[i];
        extra += static_cast<long>(k) * p.size();
    }
    return lam.r() * nl + extra;
}

Poly v_poly(int k, const RingPtr& ring, std::size_t var) {
    // prod_{i=1}^{k} (1 + t + ... + t^{i-1})
    Poly v = Poly::constant(ring, 1);
    Poly t = Poly::variable(ring, var);
    Poly geo = Poly::constant(ring, 1);
    Poly tp = Poly::constant(ring, 1);
    for (int i = 1; i <= k; ++i) {
        if (i > 1) {
            tp *= t;
            geo += tp;
        }
        v *= geo;
    }
    return v;
}

int nu0(const RPartition& lam, int m) {
    auto c = c_map(lam, m);
    for (int p = static_cast<int>(c.size()) - 1; p >= 0; --p)
        if (c[p]) return p;
    throw std::invalid_argument("nu0 undefined for the empty r-partition");
}

Poly v_prime(const RPartition& lam, int m, const RingPtr& tring) {
    int r = lam.r();
    int p0 = nu0(lam, m);
    Poly v = Poly::constant(tring, 1);
    for (int k = 1; k <= r; ++k) {
        int cnt = 0;
        for (int i = 1; i <= m; ++i)
            if (pos_of(r, k, i) > p0) ++cnt;
        v *= v_poly(cnt, tring, k - 1);
    }
    return v;
}

int j0_exponent(const RPartition& lam) {
    int r = lam.r();
    int p = 0;
    for (int k = 0; k + 1 < r; ++k) p = std::max(p, lam[k].length());
    return std::max(lam[r - 1].length() - p, 0);
}

DeltaSets delta_sets(const RPartition& lam, int m) {
    int r = lam.r();
    auto c = c_map(lam, m);
    DeltaSets d;
    for (int p = 0; p < static_cast<int>(c.size()); ++p) {
        if (!c[p]) continue;
        int k = comp_of(r, p), i = row_of(r, p);
        bool in0 = false;
        if (k == r) {
            in0 = true;
            for (int kk = 1; kk < r; ++kk)
                if (lam[kk - 1][i - 1] != 0) in0 = false;
        }
        (in0 ? d.delta0 : d.delta1).push_back(p);
    }
    return d;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    void skip() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("cannot parse '" + s + "': " + why);
    }
    Partition partition() {
        skip();
        if (eat('-')) return Partition();
        if (!eat('[')) fail("expected '['");
        std::vector<int> parts;
        if (eat(']')) return Partition();
        while (true) {
            skip();
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) fail("expected a part");
            parts.push_back(std::stoi(s.substr(start, pos - start)));
            if (eat(']')) break;
            if (!eat(',')) fail("expected ',' or ']'");
        }
        return Partition(parts);
    }
};

}  // namespace

Partition parse_partition(const std::string& text) {
    Cursor c{text};
    Partition p = c.partition();
    c.skip();
    if (c.pos != text.size()) c.fail("trailing characters");
    return p;
}

RPartition parse_rpartition(const std::string& text) {
    Cursor c{text};
    if (!c.eat('(')) c.fail("expected '('");
    std::vector<Partition> comps;
    while (true) {
        comps.push_back(c.partition());
        if (c.eat(')')) break;
        if (!c.eat(',')) c.fail("expected ',' or ')'");
    }
    c.skip();
    if (c.pos != text.size()) c.fail("trailing characters");
    return RPartition(std::move(comps));
}

}  // namespace mpk
