#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mpk/kostka.hpp"

#include <filesystem>
#include <random>

using namespace mpk;

namespace {

RPartition rp(const char* s) { return parse_rpartition(s); }

Composition eps(int M, int p, int q) {
    Composition x(M, 0);
    x[p] = 1;
    x[q] = -1;
    return x;
}

Poly W(const std::string& s, int r) { return parse_poly(s, weight_ring(r)); }

}  // namespace

TEST_CASE("restricted partition function") {
    auto L = PartitionFunction::plain(2, 4, Sign::Minus);
    CHECK(L(Composition(4, 0)).is_one());
    CHECK(L(eps(4, 0, 1)) == W("t1", 2));
    CHECK(L(eps(4, 0, 2)) == W("t1*t2", 2));
    CHECK(L(eps(4, 1, 0)).is_zero());
    auto Lp = PartitionFunction::plain(2, 4, Sign::Plus);
    CHECK(Lp(eps(4, 1, 2)) == W("t1", 2));
    CHECK(Lp(eps(4, 0, 1)) == W("t2", 2));

    auto Lmu = PartitionFunction::for_mu(rp("([],[1,1])"), 2);
    CHECK(Lmu(eps(4, 1, 3)) == W("t0", 2));
    CHECK(Lmu(Composition(4, 0)).is_one());

    // memoized and direct evaluation agree
    for (int r : {2, 3}) {
        int M = 3 * r;
        for (Sign s : {Sign::Minus, Sign::Plus}) {
            auto a = PartitionFunction::plain(r, M, s, true);
            auto b = PartitionFunction::plain(r, M, s, false);
            std::mt19937 rng(r * 10 + (s == Sign::Plus));
            std::uniform_int_distribution<int> d(-2, 2);
            for (int i = 0; i < 50; ++i) {
                Composition x(M, 0);
                long sum = 0;
                for (int p = 0; p + 1 < M; ++p) sum += x[p] = d(rng);
                x[M - 1] = -sum;
                CHECK(a(x) == b(x));
            }
        }
    }
}

TEST_CASE("Kostka functions from the partition-function formulas") {
    Params p = Params::generic(2);
    Poly t1 = p.t[0], t2 = p.t[1];
    CHECK(kostka_minus_pf(rp("([1],[])"), rp("([],[1])"), p, 1) == t1);
    CHECK(kostka_minus_pf(rp("([2],[1])"), rp("([2],[1])"), p).is_one());
    CHECK(kostka_plus_pf(rp("([2],[1])"), rp("([2],[1])"), p).is_one());
    CHECK(stable_kostka(rp("([1],[])"), rp("([],[1])"), Sign::Minus, p) == t1);
    CHECK(stable_kostka(rp("([1],[1])"), rp("([1],[1])"), Sign::Plus, p).is_one());
    // independent of the padding
    for (const auto& lam : gen_rpartitions(2, 2))
        for (const auto& mu : gen_rpartitions(2, 2)) {
            CHECK(kostka_minus_pf(lam, mu, p) == kostka_minus_pf(lam, mu, p, 3));
            CHECK(kostka_plus_pf(lam, mu, p) == kostka_plus_pf(lam, mu, p, 3));
        }
    // stable value through an explicit shift
    auto lam = rp("([2],[])"), mu = rp("([],[1,1])");
    CHECK(stable_kostka(lam, mu, Sign::Minus, p).to_string() == "t1^3*t2 + t1^2");
    int m = pf_padding(lam, mu);
    auto ls = theta_shift(lam, 2, m), ms = theta_shift(mu, 2, m);
    CHECK(kostka_minus_pf(ls, ms, p, m) == stable_kostka(lam, mu, Sign::Minus, p));
    CHECK(kostka_minus_pf(lam, mu, p) != stable_kostka(lam, mu, Sign::Minus, p));
}

TEST_CASE("tables agree across methods at r = 2") {
    for (int n = 1; n <= 3; ++n) {
        SymContext ctx(n, 2, Params::generic(2));
        for (Sign s : {Sign::Minus, Sign::Plus}) {
            auto a = kostka_by_solve(ctx, s);
            auto b = kostka_by_pf(ctx, s);
            auto c = kostka_by_gram_schmidt(ctx, s);
            CHECK(a.k == b.k);
            CHECK(a.k == c.k);
            for (std::size_t i = 0; i < a.order.size(); ++i) {
                CHECK(a.k(i, i).is_one());
                for (std::size_t j = 0; j < a.order.size(); ++j)
                    if (!dominance_leq(a.order[j], a.order[i])) CHECK(a.k(i, j).is_zero());
            }
        }
    }
    SymContext ctx(2, 2, Params::generic(2));
    auto t = kostka_by_solve(ctx, Sign::Minus);
    CHECK(t.order.size() == 5);
    CHECK(t.at(rp("([1,1],[])"), rp("([],[1,1])")).to_string() == "t1^2");
    CHECK(t.at(rp("([1],[1])"), rp("([],[1,1])")).to_string() == "t1^2*t2 + t1");
    CHECK(kostka_by_raising(ctx, Sign::Plus).k == kostka_by_solve(ctx, Sign::Plus).k);
}

TEST_CASE("one component is the classical case") {
    SymContext ctx(2, 1, Params::generic(1));
    auto t = kostka_by_solve(ctx, Sign::Minus);
    CHECK(t.at(rp("([2])"), rp("([1,1])")).to_string() == "t1");
}

TEST_CASE("dropping empty leading components") {
    auto lam = rp("([],[2])"), mu = rp("([],[1,1])");
    Reduction red = reduce_r(lam, mu, 1);
    CHECK(red.lam == rp("([2])"));
    CHECK(red.mu == rp("([1,1])"));
    SymContext small(2, 1, red.params);
    Poly k = kostka_by_solve(small, Sign::Minus).at(red.lam, red.mu);
    CHECK(k.to_string() == "t1*t2");
    auto [ring, images] = parse_assignment(k.ring(), "t1=t,t2=t");
    CHECK(k.substitute(images, ring).to_string() == "t^2");
    SymContext big(2, 2, Params::generic(2));
    CHECK(kostka_by_solve(big, Sign::Minus).at(lam, mu) == k);

    Reduction id = reduce_r(lam, mu, 0);
    CHECK(id.lam == lam);
    CHECK(id.mu == mu);
    CHECK_THROWS(reduce_r(rp("([1],[1])"), rp("([1],[1])"), 1));
}

TEST_CASE("serialization round trips") {
    SymContext ctx(2, 2, Params::generic(2));
    auto t = kostka_by_solve(ctx, Sign::Minus);
    auto j = table_to_json(t);
    CHECK(j["order"].size() == 5);
    CHECK(j["sign"] == "minus");
    auto back = table_from_json(j);
    CHECK(back.k == t.k);
    CHECK(back.order == t.order);
    CHECK(table_to_json(back) == j);
    auto csv = table_from_csv(table_to_csv(t));
    CHECK(csv.k == t.k);
    CHECK(table_to_json(csv) == j);
}

TEST_CASE("specialization") {
    SymContext ctx(2, 2, Params::generic(2));
    auto t = kostka_by_solve(ctx, Sign::Minus);
    auto same = specialize(t, "t1=t1,t2=t2");
    CHECK(table_to_json(same)["entries"] == table_to_json(t)["entries"]);
    auto uni = specialize(t, "t1=t,t2=t");
    SymContext one(2, 2, Params::uniform(2));
    CHECK(table_to_json(uni)["entries"] == table_to_json(kostka_by_solve(one, Sign::Minus))["entries"]);
    auto twice = specialize(uni, "t=t");
    twice.source = "in dir/table.json";
    CHECK(table_to_json(table_from_csv(table_to_csv(twice))) == table_to_json(twice));
    CHECK_THROWS(specialize(t, "t1=("));
    CHECK_THROWS(specialize(t, "t9=t"));
}

TEST_CASE("disk cache") {
    auto dir = std::filesystem::temp_directory_path() / "mpk_test_cache";
    std::filesystem::remove_all(dir);
    SymContext ctx(2, 2, Params::generic(2));
    auto a = cached_table(ctx, Sign::Minus, Method::PF, dir.string());
    CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 1);
    auto b = cached_table(ctx, Sign::Minus, Method::PF, dir.string());
    CHECK(a.k == b.k);
    auto c = cached_table(ctx, Sign::Minus, Method::Solve, dir.string());
    CHECK(c.method == Method::Solve);
    CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 2);
    std::filesystem::remove_all(dir);
}
