#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lrc/constructions.hpp"

using namespace lrc;

namespace {

bool has_condition(const std::vector<std::string>& conditions, const std::string& needle) {
    return std::find(conditions.begin(), conditions.end(), needle) != conditions.end();
}

Polynomial linear_factor(const FiniteField& f, uint32_t root) {
    return Polynomial::x(f) - Polynomial::constant(FieldElement(f, root));
}

std::vector<SearchRow> rows_of_kind(const std::vector<SearchRow>& rows, KindTag tag) {
    std::vector<SearchRow> out;
    for (const SearchRow& row : rows)
        if (row.kind == tag) out.push_back(row);
    return out;
}

}  // namespace

TEST_CASE("singleton_bound fixtures and the delta = 2 specialization") {
    CHECK(singleton_bound(5, 2, 3, 3) == 4);
    CHECK(singleton_bound(27, 10, 4, 6) == 8);
    // With delta = 2 the bound is the classical n - k + 1 minus one per
    // extra local group beyond the first.
    for (uint32_t n : {6u, 12u, 24u})
        for (uint32_t k = 1; k <= n - 1; ++k)
            for (uint32_t r = 1; r <= k; ++r)
                CHECK(singleton_bound(n, k, r, 2) ==
                      int64_t(n) - k + 1 - ((k + r - 1) / r - 1));
    CHECK_THROWS_WITH_AS(singleton_bound(5, 0, 3, 3), doctest::Contains("InvalidParams"), Error);
    CHECK_THROWS_WITH_AS(singleton_bound(5, 6, 3, 3), doctest::Contains("InvalidParams"), Error);
    CHECK_THROWS_WITH_AS(singleton_bound(5, 2, 0, 3), doctest::Contains("InvalidParams"), Error);
    CHECK_THROWS_WITH_AS(singleton_bound(5, 2, 3, 1), doctest::Contains("InvalidParams"), Error);
}

TEST_CASE("kind names round-trip and reject garbage") {
    for (KindTag tag : {KindTag::T1, KindTag::T2, KindTag::T3, KindTag::Remark3, KindTag::T4}) {
        auto back = kind_from_name(kind_name(tag));
        REQUIRE(back);
        CHECK(*back == tag);
    }
    CHECK(kind_from_name("t1"));
    CHECK(kind_from_name("remark3"));
    CHECK(!kind_from_name("t5"));
    CHECK(!kind_from_name(""));
}

TEST_CASE("precondition violations come back by name") {
    auto conds = [](uint64_t q, uint32_t n, uint32_t r, uint32_t delta, KindTag tag,
                    uint32_t d = 0) {
        return check_preconditions({q, n, r, delta}, {tag, d});
    };
    CHECK(conds(11, 5, 3, 3, KindTag::T1).empty());
    CHECK(conds(19, 27, 4, 6, KindTag::T2).empty());
    CHECK(conds(7, 30, 4, 3, KindTag::T3).empty());
    CHECK(conds(7, 30, 4, 3, KindTag::Remark3, 5).empty());
    CHECK(conds(13, 21, 5, 3, KindTag::T4).empty());

    CHECK(has_condition(conds(12, 5, 3, 3, KindTag::T1), "q must be a prime power"));
    CHECK(has_condition(conds(11, 0, 3, 3, KindTag::T1), "n must be >= 1"));
    CHECK(has_condition(conds(11, 5, 0, 3, KindTag::T1), "r must be >= 1"));
    CHECK(has_condition(conds(11, 5, 3, 1, KindTag::T1), "delta must be >= 2"));
    CHECK(has_condition(conds(11, 7, 3, 3, KindTag::T1), "(r+delta-1) must divide n"));
    CHECK(has_condition(conds(11, 11, 3, 3, KindTag::T1), "gcd(n,q) != 1"));
    CHECK(has_condition(conds(11, 5, 1, 5, KindTag::T1), "r must be >= 2"));
    CHECK(has_condition(conds(7, 5, 3, 3, KindTag::T1), "(r+delta-1) must divide q-1"));

    CHECK(has_condition(conds(19, 12, 2, 3, KindTag::T2), "r must be >= 3"));
    CHECK(has_condition(conds(11, 25, 3, 3, KindTag::T2),
                        "gcd(rho, r+delta-1) must divide delta"));

    CHECK(has_condition(conds(7, 30, 3, 3, KindTag::T3), "r must be >= delta+1"));
    CHECK(has_condition(conds(11, 25, 3, 3, KindTag::T3), "gcd(rho, r+delta-1) must be 1"));

    CHECK(has_condition(conds(7, 30, 4, 3, KindTag::Remark3, 3),
                        "d must lie in [delta+1, 2*delta]"));
    CHECK(has_condition(conds(7, 30, 4, 3, KindTag::Remark3, 7),
                        "d must lie in [delta+1, 2*delta]"));
    CHECK(has_condition(conds(7, 12, 2, 3, KindTag::Remark3, 6), "r must be >= d-delta+1"));

    CHECK(has_condition(conds(13, 12, 4, 2, KindTag::T4), "delta must be 3"));
    CHECK(has_condition(conds(13, 15, 3, 3, KindTag::T4), "r must be >= 4"));
    CHECK(has_condition(conds(5, 12, 4, 3, KindTag::T4), "n must be odd"));
    CHECK(has_condition(conds(13, 33, 9, 3, KindTag::T4), "(r+delta-1) must divide q+1"));
    CHECK(has_condition(conds(5, 9, 4, 3, KindTag::T4), "(r+delta-1) must divide n"));

    CHECK_THROWS_WITH_AS(make_context({11, 7, 3, 3}, {KindTag::T1, 0}),
                         doctest::Contains("PreconditionFailed"), Error);
}

TEST_CASE("context arithmetic: splitting degree, bezout pair, gamma scaling") {
    ConstructionContext t2 = make_context({19, 27, 4, 6}, {KindTag::T2, 0});
    CHECK(t2.s == 3);
    CHECK(t2.bezout_target == 6);
    CHECK(t2.bezout_a == 2);
    CHECK(t2.bezout_b == 0);
    REQUIRE(t2.gamma);
    CHECK(*t2.gamma == t2.alpha.pow(2));
    // gamma^rho picks up exactly alpha^delta because the group-size part
    // of the exponent dies on alpha.
    CHECK(t2.gamma->pow(t2.params.rho()) == t2.alpha.pow(t2.params.delta));

    ConstructionContext t3 = make_context({7, 30, 4, 3}, {KindTag::T3, 0});
    CHECK(t3.s == 4);
    CHECK(t3.bezout_target == 1);
    CHECK(t3.bezout_a == 5);
    CHECK(t3.bezout_b == -4);
    CHECK(t3.gamma->pow(t3.params.rho()) == t3.alpha);

    ConstructionContext t4 = make_context({13, 21, 5, 3}, {KindTag::T4, 0});
    CHECK(t4.s == 2);
    CHECK(t4.bezout_a == 5);
    CHECK(t4.bezout_b == -2);
    CHECK(t4.gamma->pow(t4.params.rho()) == t4.alpha);

    ConstructionContext t1 = make_context({11, 5, 3, 3}, {KindTag::T1, 0});
    CHECK(t1.s == 1);
    CHECK(!t1.gamma);
    CHECK(t1.xi.code() == 4);
    CHECK(t1.alpha == t1.xi);  // rho = 1

    for (const ConstructionContext* ctx : {&t2, &t3, &t4}) {
        int64_t m = ctx->params.group_size();
        CHECK(ctx->bezout_a * ctx->params.rho() + ctx->bezout_b * m ==
              int64_t(ctx->bezout_target));
        CHECK(0 <= ctx->bezout_a);
        CHECK(ctx->bezout_a < m);
    }
}

TEST_CASE("t1 over GF(11): generator, zeros, dimension") {
    const FiniteField& f = build_field(11, 1);
    CyclicCode code = construct({11, 5, 3, 3}, {KindTag::T1, 0});
    CHECK(code.generator().codes() == std::vector<uint32_t>{2, 7, 1, 1});
    CHECK(code.generator() ==
          linear_factor(f, 1) * linear_factor(f, 4) * linear_factor(f, 5));
    CHECK(code.dimension() == 2);
    CHECK(code.zero_exponents() == std::vector<uint32_t>{0, 1, 2});

    // Same family at n = 10: rho = 2, so the factors are binomials in
    // x^2 and the splitting field is still GF(11).
    CyclicCode big = construct({11, 10, 3, 3}, {KindTag::T1, 0});
    FieldElement alpha(f, 4);  // 2^2 for xi = 2
    Polynomial expect = linear_factor(f, 1) * sparse_binomial(2, alpha) *
                        sparse_binomial(2, alpha.pow(2));
    CHECK(big.generator() == expect);
    CHECK(big.dimension() == 5);
    CHECK(big.zero_exponents() == std::vector<uint32_t>{0, 1, 2, 6, 7});
}

TEST_CASE("t2 over GF(19), n = 27") {
    CyclicCode code = construct({19, 27, 4, 6}, {KindTag::T2, 0});
    CHECK(code.dimension() == 10);
    CHECK(code.zero_exponents() ==
          std::vector<uint32_t>{0, 1, 2, 3, 4, 5, 6, 10, 11, 12, 13, 14, 19, 20, 21, 22, 23});
    CHECK(code.splitting_degree() == 3);
    // 17 zeros in the complete defining set force degree 17: the extra
    // factor x - gamma drags its whole conjugacy class into the code.
    CHECK(code.generator().degree() == 17);
}

TEST_CASE("t3 over GF(7), n = 30") {
    CyclicCode code = construct({7, 30, 4, 3}, {KindTag::T3, 0});
    CHECK(code.dimension() == 17);
    CHECK(code.zero_exponents() ==
          std::vector<uint32_t>{0, 1, 2, 7, 8, 10, 13, 14, 15, 19, 20, 25, 26});
    CHECK(bch_lower_bound(code) >= 4);
}

TEST_CASE("remark3 interpolates between its endpoints") {
    for (uint32_t d = 4; d <= 6; ++d) {
        CyclicCode code = construct({7, 30, 4, 3}, {KindTag::Remark3, d});
        CHECK(code.dimension() == 20 - (d - 3));
    }
    // At d = 2*delta the generator coincides with the t3 one.
    CyclicCode top = construct({7, 30, 4, 3}, {KindTag::Remark3, 6});
    CyclicCode t3 = construct({7, 30, 4, 3}, {KindTag::T3, 0});
    CHECK(top.generator() == t3.generator());
    // At d = delta+1 the extra-factor product is empty, so the bottom
    // endpoint is the t1 generator itself; gamma^delta joins at d+1.
    CyclicCode bottom = construct({7, 30, 4, 3}, {KindTag::Remark3, 4});
    CyclicCode t1 = construct({7, 30, 4, 3}, {KindTag::T1, 0});
    CHECK(bottom.generator() == t1.generator());
    CyclicCode next = construct({7, 30, 4, 3}, {KindTag::Remark3, 5});
    CHECK(next.generator().degree() == t1.generator().degree() + 1);
}

TEST_CASE("t4 over GF(13): n = 21 and the rho = 1 edge at n = 7") {
    CyclicCode code = construct({13, 21, 5, 3}, {KindTag::T4, 0});
    CHECK(code.dimension() == 12);
    CHECK(code.zero_exponents() ==
          std::vector<uint32_t>{0, 1, 6, 8, 9, 12, 13, 15, 20});

    ConstructionContext ctx = make_context({13, 21, 5, 3}, {KindTag::T4, 0});
    Polynomial up = generator_over_extension(ctx);
    CHECK(up.degree() == 9);
    for (size_t i = 0; i < up.codes().size(); ++i) {
        FieldElement c = up.coeff(i);
        CHECK(c.pow(13) == c);
    }

    CyclicCode small = construct({13, 7, 5, 3}, {KindTag::T4, 0});
    CHECK(small.dimension() == 2);
    CHECK(small.zero_exponents() == std::vector<uint32_t>{0, 1, 2, 5, 6});
    DistanceResult d = min_distance_exact(small, 7);
    REQUIRE(d.distance);
    CHECK(*d.distance == 6);
    REQUIRE(d.enumerated);
    CHECK(bch_lower_bound(small) == 6);
}

TEST_CASE("a tower construction over GF(4)") {
    LrcReport report = verify({4, 9, 2, 2}, {KindTag::T1, 0});
    CHECK(report.k == 5);
    REQUIRE(report.d_exact);
    CHECK(*report.d_exact == 3);
    CHECK(report.bound == 3);
    CHECK(report.optimal);
    CHECK(report.code.splitting_field().size() == 64);
    CHECK(&report.code.base_field() == &build_field(2, 2));
}

TEST_CASE("defining-set locality holds on constructed codes with the frozen witness") {
    CyclicCode t1 = construct({11, 5, 3, 3}, {KindTag::T1, 0});
    DefiningSetWitness w = locality_check_defining_set(t1, 3, 3);
    CHECK(w.holds);
    CHECK(w.ells == std::vector<uint32_t>{1, 2});
    CHECK(w.b == 1);
    CHECK(defining_set_witness_holds(t1, 3, 3, {1, 2}, 1));

    CyclicCode t2 = construct({19, 27, 4, 6}, {KindTag::T2, 0});
    CHECK(locality_check_defining_set(t2, 4, 6).holds);
    CHECK(defining_set_witness_holds(t2, 4, 6, {1, 2, 3, 4, 5}, 1));

    CyclicCode t4 = construct({13, 21, 5, 3}, {KindTag::T4, 0});
    DefiningSetWitness w4 = locality_check_defining_set(t4, 5, 3);
    CHECK(w4.holds);
    CHECK(w4.b == 2);
    CHECK(w4.ells == std::vector<uint32_t>{6, 1});
    CHECK(defining_set_witness_holds(t4, 5, 3, {-1, 1}, 2));
    // The same residues under an invalid step, or residues whose classes
    // are not all inside the defining set, must fail.
    CHECK(!defining_set_witness_holds(t4, 5, 3, {-1, 1}, 3));
    CHECK(!defining_set_witness_holds(t4, 5, 3, {2, 4}, 2));
    CHECK(!defining_set_witness_holds(t1, 3, 3, {1, 2}, 5));
}

TEST_CASE("defining-set check is inconclusive when groups cannot tile the length") {
    const FiniteField& f = build_field(11, 1);
    CyclicCode code = CyclicCode::from_generator(f, 5, linear_factor(f, 1));
    CHECK(!locality_check_defining_set(code, 2, 2).holds);
    CHECK_THROWS_WITH_AS(locality_check_defining_set(code, 0, 2),
                         doctest::Contains("InvalidParams"), Error);
}

TEST_CASE("defining-set check fails honestly on a dividing length without locality") {
    const FiniteField& f = build_field(7, 1);
    CyclicCode code = CyclicCode::from_generator(f, 6, linear_factor(f, 1));
    // Z = {0}: no residue class mod 3 lies inside it.
    CHECK(!locality_check_defining_set(code, 2, 2).holds);
}

TEST_CASE("direct locality test separates real locality from its absence") {
    CHECK(locality_check_direct(construct({11, 5, 3, 3}, {KindTag::T1, 0}), 3, 3));
    CHECK(locality_check_direct(construct({13, 21, 5, 3}, {KindTag::T4, 0}), 5, 3));

    const FiniteField& f = build_field(11, 1);
    CyclicCode parity = CyclicCode::from_generator(f, 5, linear_factor(f, 1));
    // [5,4,2] has no (2,2) locality: no 3 coordinates give a punctured
    // code of distance 2, since the dual is a single full-weight word.
    CHECK(!locality_check_direct(parity, 2, 2));

    // A repetition code is (1, 2)-local: any pair of coordinates is a
    // repair set of punctured distance 2.
    Polynomial g = Polynomial::one(f);
    for (uint32_t e = 1; e < 5; ++e) {
        FieldElement root = primitive_nth_root(f, 5).pow(e);
        g = g * (Polynomial::x(f) - Polynomial::constant(root));
    }
    CyclicCode rep = CyclicCode::from_generator(f, 5, g);
    CHECK(locality_check_direct(rep, 1, 2));
}

TEST_CASE("verify assembles the full report on the flagship fixtures") {
    LrcReport t1 = verify({11, 5, 3, 3}, {KindTag::T1, 0});
    CHECK(t1.k == 2);
    REQUIRE(t1.d_exact);
    CHECK(*t1.d_exact == 4);
    CHECK(t1.bound == 4);
    CHECK(t1.bch_lower == 4);
    CHECK(t1.d_ceiling == 5);
    CHECK(t1.defining_set.holds);
    CHECK(t1.direct_locality);
    CHECK(t1.optimal);

    LrcReport wide = verify({11, 10, 3, 3}, {KindTag::T1, 0});
    CHECK(wide.k == 5);
    REQUIRE(wide.d_exact);
    CHECK(*wide.d_exact == 4);
    CHECK(wide.bound == 4);
    CHECK(wide.optimal);

    LrcReport r3 = verify({7, 30, 4, 3}, {KindTag::Remark3, 4});
    CHECK(r3.k == 19);
    REQUIRE(r3.d_exact);
    CHECK(*r3.d_exact == 4);
    CHECK(r3.bound == 4);
    CHECK(r3.optimal);
}

TEST_CASE("search enumerates admissible parameter rows in order") {
    std::vector<SearchRow> rows = search_params(11, 60, 3, 3, 3, 3);
    std::vector<uint32_t> t1_lengths;
    for (const SearchRow& row : rows_of_kind(rows, KindTag::T1)) t1_lengths.push_back(row.n);
    // Multiples of 5 coprime to 11; n = 55 collides with the field size.
    CHECK(t1_lengths == std::vector<uint32_t>{5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 60});

    for (const SearchRow& row : rows) {
        CHECK(check_preconditions({11, row.n, row.r, row.delta},
                                  {row.kind, row.kind == KindTag::Remark3 ? row.d_min : 0})
                  .empty());
        CHECK(row.rho == row.n / (row.r + row.delta - 1));
        if (row.kind == KindTag::Remark3) {
            CHECK(row.d_min == 4);
            // The reachable top is capped by r >= d-delta+1, here at 5.
            CHECK(row.d_max == 5);
        } else {
            CHECK(row.d_min == row.d_max);
        }
    }

    // rho = 5 shares a factor with the group size 5, which kills t2 (the
    // gcd must divide delta = 3) and t3/remark3 (the gcd must be 1).
    for (const SearchRow& row : rows)
        if (row.n == 25) CHECK(row.kind == KindTag::T1);

    std::vector<SearchRow> seven = search_params(7, 30, 4, 4, 3, 3);
    bool has_t3_30 = false, has_t3_6 = false;
    for (const SearchRow& row : rows_of_kind(seven, KindTag::T3)) {
        has_t3_30 |= row.n == 30;
        has_t3_6 |= row.n == 6;
    }
    CHECK(has_t3_30);
    CHECK(has_t3_6);

    CHECK(search_params(2, 3, 1, 3, 2, 3).empty());
    CHECK(search_params(11, 0, 3, 3, 3, 3).empty());

    // q = 5, delta = 3 admits no t4 at any length: the group size 6 must
    // divide n while n stays odd, which is impossible.
    CHECK(rows_of_kind(search_params(5, 100, 4, 4, 3, 3), KindTag::T4).empty());

    std::vector<SearchRow> sorted = rows;
    std::stable_sort(sorted.begin(), sorted.end(), [](const SearchRow& a, const SearchRow& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.r != b.r) return a.r < b.r;
        if (a.delta != b.delta) return a.delta < b.delta;
        return int(a.kind) < int(b.kind);
    });
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == sorted[i].n);
        CHECK(rows[i].kind == sorted[i].kind);
    }
}

TEST_CASE("construct refuses what check_preconditions refuses, verbosely") {
    try {
        construct({5, 12, 4, 3}, {KindTag::T4, 0});
        FAIL("expected PreconditionFailed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionFailed);
        CHECK(std::string(e.what()).find("n must be odd") != std::string::npos);
        CHECK(std::string(e.what()).find("gcd(rho, r+delta-1) must be 1") != std::string::npos);
    }
}

TEST_CASE("target_distance reports the design distance per kind") {
    LrcParams p{7, 30, 4, 3};
    CHECK(target_distance(p, {KindTag::T1, 0}) == 4);
    CHECK(target_distance(p, {KindTag::T2, 0}) == 5);
    CHECK(target_distance(p, {KindTag::T3, 0}) == 6);
    CHECK(target_distance(p, {KindTag::Remark3, 5}) == 5);
    CHECK(target_distance({13, 21, 5, 3}, {KindTag::T4, 0}) == 6);
}
