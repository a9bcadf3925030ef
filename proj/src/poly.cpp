#include "mpk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mpk {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!lookup_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate variable name " + names_[i]);
    }
}

std::optional<std::size_t> Ring::index(const std::string& name) const {
    auto it = lookup_.find(name);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const Ring>(std::move(names));
}

RingPtr t_ring(int r) {
    std::vector<std::string> v;
    for (int k = 1; k <= r; ++k) v.push_back("t" + std::to_string(k));
    return make_ring(std::move(v));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->names() == b->names();
}

namespace {

// Descending graded-lex comparison: negative if a precedes b.
int cmp_exp(const Exp* a, const Exp* b, std::size_t nv) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < nv; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? -1 : 1;
    for (std::size_t i = 0; i < nv; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

std::uint64_t hash_exp(const Exp* e, std::size_t nv) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < nv; ++i) {
        h ^= e[i];
        h *= 1099511628211ull;
    }
    return h ^ (h >> 29);
}

}  // namespace

Poly::Poly(RingPtr ring) : ring_(std::move(ring)), nv_(ring_ ? ring_->size() : 0) {}

Poly Poly::constant(RingPtr ring, const Int& c) {
    Poly p(std::move(ring));
    if (c != 0) {
        p.exps_.assign(p.nv_, 0);
        p.coef_.push_back(c);
    }
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t i) {
    Poly p(std::move(ring));
    if (i >= p.nv_) throw std::out_of_range("variable index");
    p.exps_.assign(p.nv_, 0);
    p.exps_[i] = 1;
    p.coef_.push_back(1);
    return p;
}

Poly Poly::monomial(RingPtr ring, const std::vector<Exp>& e, const Int& c) {
    Poly p(std::move(ring));
    if (e.size() != p.nv_) throw std::invalid_argument("exponent length");
    if (c != 0) {
        p.exps_ = e;
        p.coef_.push_back(c);
    }
    return p;
}

bool Poly::is_one() const {
    if (coef_.size() != 1 || coef_[0] != 1) return false;
    return std::all_of(exps_.begin(), exps_.end(), [](Exp x) { return x == 0; });
}

bool Poly::is_constant() const {
    if (coef_.empty()) return true;
    if (coef_.size() != 1) return false;
    return std::all_of(exps_.begin(), exps_.end(), [](Exp x) { return x == 0; });
}

std::vector<Exp> Poly::exponent(std::size_t term) const {
    return std::vector<Exp>(exps(term), exps(term) + nv_);
}

long Poly::degree() const {
    if (coef_.empty()) return -1;
    long d = 0;
    for (std::size_t i = 0; i < nv_; ++i) d += exps_[i];
    return d;
}

long Poly::degree_in(std::size_t var) const {
    long d = coef_.empty() ? -1 : 0;
    for (std::size_t t = 0; t < coef_.size(); ++t) d = std::max<long>(d, exps(t)[var]);
    return d;
}

Int Poly::coefficient(const std::vector<Exp>& e) const {
    if (e.size() != nv_) throw std::invalid_argument("exponent length");
    std::size_t lo = 0, hi = coef_.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        int c = cmp_exp(exps(mid), e.data(), nv_);
        if (c == 0) return coef_[mid];
        if (c < 0) lo = mid + 1;
        else hi = mid;
    }
    return 0;
}

Int Poly::constant_term() const {
    if (coef_.empty()) return 0;
    const Exp* last = exps(coef_.size() - 1);
    for (std::size_t i = 0; i < nv_; ++i)
        if (last[i]) return 0;
    return coef_.back();
}

void Poly::check_ring(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomials over different rings");
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

Poly Poly::add_scaled(const Poly& o, int sign) const {
    check_ring(o);
    Poly r(ring_);
    r.exps_.reserve(exps_.size() + o.exps_.size());
    r.coef_.reserve(coef_.size() + o.coef_.size());
    std::size_t i = 0, j = 0;
    auto push = [&](const Exp* e, Int c) {
        r.exps_.insert(r.exps_.end(), e, e + nv_);
        r.coef_.push_back(std::move(c));
    };
    while (i < coef_.size() || j < o.coef_.size()) {
        int c;
        if (i == coef_.size()) c = 1;
        else if (j == o.coef_.size()) c = -1;
        else c = cmp_exp(exps(i), o.exps(j), nv_);
        if (c < 0) {
            push(exps(i), coef_[i]);
            ++i;
        } else if (c > 0) {
            push(o.exps(j), sign > 0 ? Int(o.coef_[j]) : Int(-o.coef_[j]));
            ++j;
        } else {
            Int s = sign > 0 ? Int(coef_[i] + o.coef_[j]) : Int(coef_[i] - o.coef_[j]);
            if (s != 0) push(exps(i), std::move(s));
            ++i;
            ++j;
        }
    }
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!ring_) return *this = o;
    if (o.is_zero()) return *this;
    return *this = add_scaled(o, 1);
}

Poly& Poly::operator-=(const Poly& o) {
    if (!ring_) return *this = -o;
    if (o.is_zero()) return *this;
    return *this = add_scaled(o, -1);
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    if (b.size() == 1) return a.mul_term(b.exps(0), b.coef(0));
    if (a.size() == 1) return b.mul_term(a.exps(0), a.coef(0));
    TermAccumulator acc(a.ring_, a.size() * b.size());
    Int c;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_mul(c.get_mpz_t(), a.coef_[i].get_mpz_t(), b.coef_[j].get_mpz_t());
            acc.add_product(a.exps(i), b.exps(j), c);
        }
    return acc.finish();
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Int& c) {
    if (c == 0) {
        exps_.clear();
        coef_.clear();
    } else {
        for (auto& x : coef_) x *= c;
    }
    return *this;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.coef_.size() != b.coef_.size()) return false;
    if (a.is_zero()) return true;
    a.check_ring(b);
    return a.exps_ == b.exps_ && a.coef_ == b.coef_;
}

Poly Poly::pow(unsigned k) const {
    Poly result = constant(ring_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Poly Poly::mul_term(const Exp* e, const Int& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    r.exps_ = exps_;
    r.coef_.reserve(coef_.size());
    for (std::size_t t = 0; t < coef_.size(); ++t) {
        Exp* row = r.exps_.data() + t * nv_;
        for (std::size_t i = 0; i < nv_; ++i) row[i] += e[i];
        r.coef_.push_back(coef_[t] * c);
    }
    return r;
}

Int Poly::content() const {
    Int g = 0;
    for (const auto& c : coef_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::div_int(const Int& d) const {
    Poly r = *this;
    for (auto& c : r.coef_) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw InexactDivision("integer content");
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

Rat Poly::eval(const std::vector<Rat>& at) const {
    if (at.size() != nv_) throw std::invalid_argument("evaluation point length");
    Rat sum = 0;
    for (std::size_t t = 0; t < coef_.size(); ++t) {
        Rat term = coef_[t];
        const Exp* e = exps(t);
        for (std::size_t i = 0; i < nv_; ++i) {
            if (!e[i]) continue;
            Rat p;
            mpz_pow_ui(p.get_num_mpz_t(), at[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(p.get_den_mpz_t(), at[i].get_den_mpz_t(), e[i]);
            p.canonicalize();
            term *= p;
        }
        sum += term;
    }
    return sum;
}

Poly Poly::substitute(const std::vector<Poly>& images, const RingPtr& target) const {
    if (images.size() != nv_) throw std::invalid_argument("substitution arity");
    Poly result(target);
    // Cache powers per variable.
    std::vector<std::vector<Poly>> powers(nv_);
    auto power = [&](std::size_t v, Exp k) -> const Poly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Poly::constant(target, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * images[v]);
        return cache[k];
    };
    TermAccumulator acc(target, coef_.size());
    for (std::size_t t = 0; t < coef_.size(); ++t) {
        Poly term = Poly::constant(target, coef_[t]);
        const Exp* e = exps(t);
        for (std::size_t i = 0; i < nv_; ++i)
            if (e[i]) term *= power(i, e[i]);
        acc.add_poly(term);
    }
    return acc.finish();
}

Poly Poly::rebase(const RingPtr& target) const {
    if (same_ring(ring_, target)) {
        Poly r = *this;
        r.ring_ = target;
        return r;
    }
    std::vector<std::size_t> map(nv_);
    std::vector<bool> used(nv_, false);
    for (std::size_t t = 0; t < coef_.size(); ++t)
        for (std::size_t i = 0; i < nv_; ++i)
            if (exps(t)[i]) used[i] = true;
    for (std::size_t i = 0; i < nv_; ++i) {
        if (!used[i]) continue;
        auto j = target->index(ring_->name(i));
        if (!j) throw std::invalid_argument("variable " + ring_->name(i) + " missing from target ring");
        map[i] = *j;
    }
    std::vector<Exp> ex(coef_.size() * target->size(), 0);
    for (std::size_t t = 0; t < coef_.size(); ++t)
        for (std::size_t i = 0; i < nv_; ++i)
            if (exps(t)[i]) ex[t * target->size() + map[i]] = exps(t)[i];
    return from_terms(target, std::move(ex), coef_);
}

std::string Poly::to_string() const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t t = 0; t < coef_.size(); ++t) {
        const Int& c = coef_[t];
        const Exp* e = exps(t);
        bool has_var = std::any_of(e, e + nv_, [](Exp x) { return x != 0; });
        Int a = abs(c);
        if (t == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool wrote = false;
        if (a != 1 || !has_var) {
            os << a.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < nv_; ++i) {
            if (!e[i]) continue;
            if (wrote) os << "*";
            os << ring_->name(i);
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

Poly Poly::from_terms(RingPtr ring, std::vector<Exp> exps, std::vector<Int> coefs) {
    TermAccumulator acc(ring, coefs.size());
    std::size_t nv = ring->size();
    for (std::size_t t = 0; t < coefs.size(); ++t) acc.add(exps.data() + t * nv, coefs[t]);
    return acc.finish();
}

// ---------------------------------------------------------------------------

TermAccumulator::TermAccumulator(RingPtr ring, std::size_t reserve)
    : ring_(std::move(ring)), nv_(ring_->size()), scratch_(nv_) {
    std::size_t cap = 16;
    while (cap < 2 * reserve && cap < (1u << 22)) cap <<= 1;
    table_.assign(cap, UINT32_MAX);
}

void TermAccumulator::grow() {
    std::vector<std::uint32_t> fresh(table_.size() * 2, UINT32_MAX);
    std::size_t mask = fresh.size() - 1;
    for (std::uint32_t id = 0; id < coef_.size(); ++id) {
        std::size_t slot = hash_exp(exps_.data() + id * nv_, nv_) & mask;
        while (fresh[slot] != UINT32_MAX) slot = (slot + 1) & mask;
        fresh[slot] = id;
    }
    table_.swap(fresh);
}

std::size_t TermAccumulator::find_or_insert(const Exp* e, std::uint64_t h) {
    if (2 * (coef_.size() + 1) > table_.size()) grow();
    std::size_t mask = table_.size() - 1;
    std::size_t slot = h & mask;
    while (true) {
        std::uint32_t id = table_[slot];
        if (id == UINT32_MAX) {
            table_[slot] = static_cast<std::uint32_t>(coef_.size());
            exps_.insert(exps_.end(), e, e + nv_);
            coef_.emplace_back(0);
            return coef_.size() - 1;
        }
        if (std::equal(e, e + nv_, exps_.data() + std::size_t(id) * nv_)) return id;
        slot = (slot + 1) & mask;
    }
}

void TermAccumulator::add(const Exp* e, const Int& c) {
    if (c == 0) return;
    std::size_t id = find_or_insert(e, hash_exp(e, nv_));
    coef_[id] += c;
}

void TermAccumulator::add_product(const Exp* e1, const Exp* e2, const Int& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < nv_; ++i) scratch_[i] = e1[i] + e2[i];
    std::size_t id = find_or_insert(scratch_.data(), hash_exp(scratch_.data(), nv_));
    coef_[id] += c;
}

void TermAccumulator::add_poly(const Poly& p) {
    if (p.is_zero()) return;
    if (!same_ring(p.ring(), ring_)) throw std::invalid_argument("accumulator ring mismatch");
    for (std::size_t t = 0; t < p.size(); ++t) add(p.exps(t), p.coef(t));
}

Poly TermAccumulator::finish() {
    std::vector<std::uint32_t> order;
    order.reserve(coef_.size());
    for (std::uint32_t id = 0; id < coef_.size(); ++id)
        if (coef_[id] != 0) order.push_back(id);
    const Exp* base = exps_.data();
    std::size_t nv = nv_;
    std::sort(order.begin(), order.end(), [base, nv](std::uint32_t a, std::uint32_t b) {
        return cmp_exp(base + std::size_t(a) * nv, base + std::size_t(b) * nv, nv) < 0;
    });
    Poly p(ring_);
    p.exps_.reserve(order.size() * nv_);
    p.coef_.reserve(order.size());
    for (auto id : order) {
        p.exps_.insert(p.exps_.end(), base + std::size_t(id) * nv_, base + std::size_t(id + 1) * nv_);
        p.coef_.push_back(std::move(coef_[id]));
    }
    exps_.clear();
    coef_.clear();
    std::fill(table_.begin(), table_.end(), UINT32_MAX);
    return p;
}

// ---------------------------------------------------------------------------

std::optional<Poly> try_divide(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.is_zero()) return Poly(q.ring());
    if (q.is_one()) return p;
    std::size_t nv = q.nvars();
    const Exp* lq = q.exps(0);
    const Int& lc = q.coef(0);
    Poly rem = p;
    TermAccumulator quot(q.ring(), p.size());
    std::vector<Exp> e(nv);
    while (!rem.is_zero()) {
        const Exp* lr = rem.exps(0);
        for (std::size_t i = 0; i < nv; ++i) {
            if (lr[i] < lq[i]) return std::nullopt;
            e[i] = lr[i] - lq[i];
        }
        if (!mpz_divisible_p(rem.coef(0).get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        Int c;
        mpz_divexact(c.get_mpz_t(), rem.coef(0).get_mpz_t(), lc.get_mpz_t());
        quot.add(e.data(), c);
        rem -= q.mul_term(e.data(), c);
    }
    return quot.finish();
}

Poly exact_divide(const Poly& p, const Poly& q) {
    auto r = try_divide(p, q);
    if (!r) throw InexactDivision("(" + p.to_string() + ") / (" + q.to_string() + ") is not exact");
    return *r;
}

namespace {

// Coefficients of p as a polynomial in variable v (index = degree).
std::vector<Poly> coeffs_in(const Poly& p, std::size_t v) {
    long d = p.degree_in(v);
    std::vector<TermAccumulator> acc;
    acc.reserve(d + 1);
    for (long k = 0; k <= d; ++k) acc.emplace_back(p.ring(), 8);
    std::vector<Exp> e(p.nvars());
    for (std::size_t t = 0; t < p.size(); ++t) {
        std::copy(p.exps(t), p.exps(t) + p.nvars(), e.begin());
        Exp k = e[v];
        e[v] = 0;
        acc[k].add(e.data(), p.coef(t));
    }
    std::vector<Poly> out;
    for (auto& a : acc) out.push_back(a.finish());
    return out;
}

Poly var_power(const RingPtr& ring, std::size_t v, long k) {
    std::vector<Exp> e(ring->size(), 0);
    e[v] = static_cast<Exp>(k);
    return Poly::monomial(ring, e, 1);
}

Poly from_coeffs(const std::vector<Poly>& c, std::size_t v, const RingPtr& ring) {
    Poly r(ring);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (!c[k].is_zero()) r += c[k] * var_power(ring, v, static_cast<long>(k));
    return r;
}

Poly normalize_sign(Poly p) {
    if (!p.is_zero() && p.coef(0) < 0) p = -p;
    return p;
}

std::optional<std::size_t> first_var(const Poly& p) {
    std::optional<std::size_t> best;
    for (std::size_t t = 0; t < p.size(); ++t)
        for (std::size_t i = 0; i < p.nvars(); ++i)
            if (p.exps(t)[i] && (!best || i < *best)) best = i;
    return best;
}

Poly content_in(const Poly& p, std::size_t v) {
    Poly g(p.ring());
    for (const auto& c : coeffs_in(p, v)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_one()) break;
    }
    return g;
}

// Primitive-PRS gcd of two primitive polynomials in variable v.
Poly prs_gcd(Poly a, Poly b, std::size_t v) {
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero() && b.degree_in(v) > 0) {
        // pseudo-remainder of a by b in v
        auto bc = coeffs_in(b, v);
        long db = static_cast<long>(bc.size()) - 1;
        const Poly& lb = bc.back();
        Poly r = a;
        while (!r.is_zero() && r.degree_in(v) >= db) {
            auto rc = coeffs_in(r, v);
            long dr = static_cast<long>(rc.size()) - 1;
            r = r * lb - rc.back() * var_power(r.ring(), v, dr - db) * b;
        }
        if (r.is_zero()) return b;
        Poly c = content_in(r, v);
        r = exact_divide(r, c);
        a = std::move(b);
        b = std::move(r);
    }
    if (b.is_zero()) return a;
    return Poly::constant(a.ring(), 1);  // b is a nonzero constant in v
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    auto va = first_var(a), vb = first_var(b);
    if (!va && !vb) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.coef(0).get_mpz_t(), b.coef(0).get_mpz_t());
        return Poly::constant(a.ring(), g);
    }
    std::size_t v = std::min(va.value_or(SIZE_MAX), vb.value_or(SIZE_MAX));
    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly cg = gcd(ca, cb);
    if (a.degree_in(v) == 0 || b.degree_in(v) == 0) return cg;
    Poly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
    Poly g = prs_gcd(pa, pb, v);
    if (g.degree_in(v) > 0) g = exact_divide(g, content_in(g, v));
    return normalize_sign(cg * g);
}

// ---------------------------------------------------------------------------

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("cannot parse polynomial '" + text + "': " + why);
    };
    TermAccumulator acc(ring);
    std::vector<Exp> e(ring->size());
    skip();
    if (text.substr(pos) == "0") return Poly(ring);
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size()) break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            fail("expected sign");
        }
        first = false;
        std::fill(e.begin(), e.end(), 0);
        Int c = 1;
        bool any = false;
        while (true) {
            skip();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                c *= Int(text.substr(start, pos - start));
            } else if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                std::size_t start = pos;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                    ++pos;
                std::string name = text.substr(start, pos - start);
                auto idx = ring->index(name);
                if (!idx) fail("unknown variable " + name);
                long k = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    std::size_t s2 = pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                    if (s2 == pos) fail("missing exponent");
                    k = std::stol(text.substr(s2, pos - s2));
                }
                e[*idx] = static_cast<Exp>(e[*idx] + k);
            } else {
                fail("unexpected character");
            }
            any = true;
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        acc.add(e.data(), sign * c);
    }
    return acc.finish();
}

// ---------------------------------------------------------------------------

Frac::Frac(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.ring(), 1)) {}

Frac::Frac(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

void Frac::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.ring(), 1);
        return;
    }
    if (!den_.is_one()) {
        if (auto q = try_divide(num_, den_)) {
            num_ = std::move(*q);
            den_ = Poly::constant(den_.ring(), 1);
            return;
        }
        Int g = num_.content();
        Int h = den_.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
        if (den_.coef(0) < 0) g = -g;
        if (g != 1) {
            num_ = num_.div_int(g);
            den_ = den_.div_int(g);
        }
    }
}

Frac operator+(const Frac& a, const Frac& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Frac(a.num_ + b.num_, a.den_);
    return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Frac operator-(const Frac& a, const Frac& b) { return a + (-b); }

Frac operator*(const Frac& a, const Frac& b) {
    if (a.is_zero() || b.is_zero()) return Frac(Poly(a.num_.ring()));
    if (a.den_.is_one() && b.den_.is_one()) return Frac(a.num_ * b.num_);
    return Frac(a.num_ * b.num_, a.den_ * b.den_);
}

Frac operator/(const Frac& a, const Frac& b) { return a * b.inverse(); }

bool operator==(const Frac& a, const Frac& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Frac Frac::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero fraction");
    return Frac(den_, num_);
}

Rat Frac::at_zero() const {
    Int d = den_.constant_term();
    if (d == 0) throw std::domain_error("denominator vanishes at t = 0");
    Rat v(num_.constant_term(), d);
    v.canonicalize();
    return v;
}

Frac Frac::substitute(const std::vector<Poly>& images, const RingPtr& target) const {
    return Frac(num_.substitute(images, target), den_.substitute(images, target));
}

Frac Frac::reduced() const {
    if (num_.is_zero() || den_.is_one()) return *this;
    Poly g = gcd(num_, den_);
    return Frac(exact_divide(num_, g), exact_divide(den_, g));
}

std::string Frac::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------

USeries::USeries(RingPtr ring, int order) : ring_(std::move(ring)) {
    if (order < 0) throw std::invalid_argument("negative series order");
    c_.assign(order + 1, Poly(ring_));
    c_[0] = Poly::constant(ring_, 1);
}

USeries operator*(const USeries& a, const USeries& b) {
    int n = std::min(a.order(), b.order());
    USeries r(a.ring_, n);
    r.c_[0] = Poly(a.ring_);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            if (!a.c_[i].is_zero() && !b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    return r;
}

void USeries::mul_numerator(const Poly& a) {
    for (int s = order(); s >= 1; --s)
        if (!c_[s - 1].is_zero()) c_[s] -= a * c_[s - 1];
}

void USeries::mul_denominator(const Poly& a) {
    // f / (1 - a u): g_s = f_s + a g_{s-1}
    for (int s = 1; s <= order(); ++s)
        if (!c_[s - 1].is_zero()) c_[s] += a * c_[s - 1];
}

USeries series_from_factors(const RingPtr& ring, const std::vector<SeriesFactor>& factors, int order) {
    USeries s(ring, order);
    for (const auto& f : factors) {
        if (f.denominator) {
            if (!f.c.is_constant() || f.c.is_zero() || abs(f.c.coef(0)) != 1)
                throw std::domain_error("denominator factor needs a unit constant term");
            // 1/(c + a u) = c * 1/(1 - (-c a) u) for c = +-1
            const Int& c = f.c.coef(0);
            s.mul_denominator(f.a * Int(-c));
            if (c < 0)
                for (int k = 0; k <= order; ++k) s[k] = -s[k];
        } else {
            // (c + a u) f: g_s = c f_s + a f_{s-1}
            for (int k = order; k >= 0; --k) {
                Poly next = f.c.is_zero() ? Poly(ring) : f.c * s[k];
                if (k > 0 && !s[k - 1].is_zero()) next += f.a * s[k - 1];
                s[k] = std::move(next);
            }
        }
    }
    return s;
}

}  // namespace mpk
