/*
   Copyright 2026 The mrdcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "mrd/moore.hpp"
#include "mrd/verify.hpp"

using namespace mrd;

namespace {

using Support = std::vector<std::uint32_t>;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

TEST_CASE("gcd filter") {
    CHECK_FALSE(gcd_filter(Support{0, 3}, 6, 2));
    CHECK(gcd_filter(Support{0, 1, 3}, 7, 3));
    CHECK(gcd_filter(Support{0, 2, 4}, 6, 3));

    auto t6 = make_tower(2, 1, 6);
    const SupportCode c(t6, {0, 3});
    const auto w = gcd_witness(c);
    REQUIRE(w);
    CHECK(kernel_dim(*w) == 3);
    CHECK_FALSE(gcd_witness(SupportCode(t6, {0, 1})));

    // {0,2,4} passes the filter but contains Tr_{q^6/q^2}, which has q^4 roots.
    const auto cert = exhaustive_scan(SupportCode(t6, {0, 2, 4}), {.budget = 1u << 20, .workers = 1});
    CHECK(cert.verdict == Verdict::not_mrd);
    CHECK(self_validate(cert));
    LinPoly tr(t6);
    for (std::uint32_t i : {0u, 2u, 4u}) tr.set_coeff(i, t6->one());
    CHECK(kernel_dim(tr) == 4);
}

TEST_CASE("exhaustive scan") {
    auto t7 = make_tower(2, 1, 7);
    const auto c7 = named_family("C7", t7);
    const auto cert = exhaustive_scan(c7, {.workers = 1});
    REQUIRE(cert.verdict == Verdict::not_mrd);
    REQUIRE(cert.witness);
    CHECK(kernel_dim(*cert.witness) == 3);
    CHECK(self_validate(cert));
    // The first witness does not depend on the number of workers.
    CHECK(exhaustive_scan(c7, {.workers = 4}).witness == cert.witness);
    // X + X^q + X^{q^3} is itself a witness.
    LinPoly f(t7);
    for (std::uint32_t i : {0u, 1u, 3u}) f.set_coeff(i, t7->one());
    CHECK(kernel_dim(f) == 3);

    auto t6 = make_tower(2, 1, 6);
    const auto g = exhaustive_scan(gabidulin(t6, 3, 1), {.workers = 2});
    CHECK(g.verdict == Verdict::mrd);
    CHECK(g.scanned == 1 + 64 + 64 * 64);

    CHECK(exhaustive_scan(c7, {.budget = 1000}).verdict == Verdict::unknown);
    CHECK(exhaustive_scan(SupportCode(t7, {3}), {.budget = 1}).verdict == Verdict::mrd);
}

TEST_CASE("progressions are MRD under the scan") {
    const std::pair<std::uint32_t, std::uint32_t> towers[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
    for (auto [p, e] : towers) {
        for (std::uint32_t n = 2; n <= 6; ++n) {
            auto t = make_tower(p, e, n);
            for (std::uint32_t k = 1; k < n; ++k) {
                const auto count = projective_count(t->q(), n, k);
                if (!count || *count > (1u << 16)) continue;
                for (std::uint32_t s = 1; s < n; ++s) {
                    if (std::gcd(s, n) != 1) continue;
                    const auto cert = exhaustive_scan(gabidulin(t, k, s), {.workers = 1});
                    CHECK(cert.verdict == Verdict::mrd);
                    CHECK(cert.scanned == *count);
                }
            }
        }
    }
}

TEST_CASE("trinomial criterion") {
    auto t27 = make_tower(2, 1, 7);
    const auto a = trinomial_criterion(t27, {.workers = 1});
    CHECK(a.verdict == Verdict::not_mrd);
    CHECK(self_validate(a));
    CHECK(kernel_dim(*a.witness) >= 3);

    auto t29 = make_tower(2, 1, 9);
    const auto b = trinomial_criterion(t29, {.workers = 2});
    CHECK(b.verdict == Verdict::not_mrd);
    CHECK(self_validate(b));
    LinPoly f(t29);
    f.set_coeff(3, t29->one());
    f.set_coeff(0, t29->neg(t29->one()));
    CHECK(kernel_dim(f) == 3);

    auto t37 = make_tower(3, 1, 7);
    const auto c = trinomial_criterion(t37, {.workers = 1});
    CHECK(c.verdict == Verdict::mrd);
    CHECK(c.scanned == 2187);

    auto t48 = make_tower(2, 2, 8);
    const auto d = trinomial_criterion(t48, {});
    CHECK(d.verdict == Verdict::mrd);
    CHECK(d.scanned == 65536);

    for (auto [p, e] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{5u, 1u}}) {
        const auto r = trinomial_criterion(make_tower(p, e, 8), {});
        CHECK(r.verdict == Verdict::not_mrd);
        CHECK(self_validate(r));
    }
    CHECK(trinomial_criterion(t37, {.budget = 100}).verdict == Verdict::unknown);
    CHECK_THROWS_AS(trinomial_criterion(make_tower(2, 1, 3), {}), std::invalid_argument);
}

TEST_CASE("engines agree on small cases") {
    for (auto [p, n] : {std::pair{2u, 4u}, std::pair{2u, 5u}, std::pair{3u, 4u}, std::pair{2u, 6u}, std::pair{3u, 5u}}) {
        auto t = make_tower(p, 1, n);
        const SupportCode c(t, {0, 1, 3});
        const auto scan = exhaustive_scan(c, {});
        const auto tri = trinomial_criterion(t, {});
        CHECK(scan.verdict == tri.verdict);
        if (p == 2 && n <= 5) CHECK(mrd_by_moore(c).verdict == scan.verdict);
    }
}

TEST_CASE("n = 9 witnesses") {
    for (std::uint32_t p : {2u, 3u}) {
        auto t = make_tower(p, 1, 9);
        const auto c = n9_parameter(*t);
        REQUIRE(c);
        CHECK(t->frobenius_q(*c, 3) == *c);
        const Fel u = t->inv(*c);
        const Fel tr = t->add(u, t->add(t->frobenius_q(u, 1), t->frobenius_q(u, 2)));
        const Fel nm = t->mul(u, t->mul(t->frobenius_q(u, 1), t->frobenius_q(u, 2)));
        CHECK(tr == t->from_int(-2));
        CHECK(nm == t->from_int(-1));
        if (p == 2) {
            CHECK(tr.is_zero());
            CHECK(nm == t->one());
        }
        for (std::uint32_t s : {1u, 4u, 7u}) {
            const auto cert = n9_witness(t, s);
            CHECK(cert.verdict == Verdict::not_mrd);
            CHECK(cert.method == "witness");
            REQUIRE(cert.witness);
            CHECK(rank(*cert.witness) == 5);
            CHECK(kernel_dim(*cert.witness) == 4);
            CHECK(self_validate(cert));
            CHECK(cert.details["conjugation_matches"].get<bool>());
        }
        // The s = 4 codeword, written out.
        const LinPoly f4 = n9_polynomial(t, *c, 4);
        const Fel m1 = t->neg(t->one());
        CHECK(f4.coeff(0) == m1);
        CHECK(f4.coeff(4) == t->add(t->one(), t->inv(t->frobenius_q(*c, 1))));
        CHECK(f4.coeff(8) == *c);
        CHECK(f4.coeff(7) == m1);
    }
    auto t2 = make_tower(2, 1, 9);
    const auto K = n9_conjugator(*t2);
    CHECK(K(1, 7) == t2->one());
    CHECK(K(4, 1) == t2->one());
    CHECK(K(8, 2) == t2->one());
    CHECK_THROWS_AS(n9_witness(t2, 2), std::invalid_argument);
}

TEST_CASE("shift equivalence") {
    const Support dual7{2, 4, 5, 6}, c7p{0, 3, 5, 6};
    CHECK(shift_canonical(dual7, 7) == shift_canonical(c7p, 7));
    CHECK(shift_equivalent(dual7, c7p, 7) == 1u);
    CHECK(shift_canonical(dual7, 7) == Support{0, 1, 2, 5});
    CHECK_FALSE(shift_equivalent(Support{0, 1, 2}, Support{0, 1, 3}, 7));
    for (const Support& T : {Support{0, 1, 3}, Support{2, 5}, Support{1}})
        CHECK(shift_equivalent(T, T, 7) == 0u);
    CHECK(progression_step(Support{0, 2, 4}, 7) == 2u);
    CHECK(progression_step(Support{1, 4}, 7) == 3u);
    CHECK_FALSE(progression_step(Support{0, 1, 3}, 7));
    CHECK_FALSE(progression_step(Support{0, 3, 6}, 9));
    CHECK(progression_step(Support{0, 1, 2, 3}, 4) == 1u);
}

TEST_CASE("engine selection") {
    auto t6 = make_tower(2, 1, 6);
    const auto g = verify_code(SupportCode(t6, {0, 3}));
    CHECK(g.verdict == Verdict::not_mrd);
    CHECK(g.method == "gcd");
    CHECK(self_validate(g));

    auto t7 = make_tower(2, 1, 7);
    for (const Support& T : {Support{0, 1, 3}, Support{1, 2, 4}, Support{0, 4, 6}, Support{0, 1, 5}}) {
        const auto c = verify_code(SupportCode(t7, T));
        CHECK(c.verdict == Verdict::not_mrd);
        CHECK(c.method == "trinomial");
        CHECK(self_validate(c));
    }
    auto t37 = make_tower(3, 1, 7);
    const auto m = verify_code(SupportCode(t37, {0, 4, 6}));
    CHECK(m.verdict == Verdict::mrd);
    CHECK(m.method == "trinomial");

    auto t9 = make_tower(2, 1, 9);
    const auto d = verify_code(SupportCode(t9, {1, 5, 8, 0}));
    CHECK(d.verdict == Verdict::not_mrd);
    CHECK(d.method == "witness");
    CHECK(self_validate(d));

    CHECK(verify_code(gabidulin(t9, 4, 2)).method == "gabidulin");
    CHECK(verify_code(SupportCode(t6, {0, 2, 4})).method == "scan");
}

TEST_CASE("classification at q = 2") {
    for (std::uint32_t n = 2; n <= 6; ++n) {
        auto t = make_tower(2, 1, n);
        for (std::size_t k = 1; k <= n; ++k) {
            const auto list = classify(t, k);
            CHECK(list.n == n);
            // Shift-dedup completeness.
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
                Support T;
                for (std::uint32_t i = 0; i < n; ++i)
                    if (mask >> i & 1) T.push_back(i);
                const auto canon = shift_canonical(T, n);
                CHECK(std::count_if(list.entries.begin(), list.entries.end(),
                                    [&](const CandidateEntry& e) { return e.T == canon; }) == 1);
            }
            for (const auto& e : list.entries) {
                CHECK(e.verdict != Verdict::unknown);
                if (e.verdict == Verdict::mrd) CHECK(e.progression.has_value());
                if (e.progression) CHECK(e.verdict == Verdict::mrd);
                if (e.certificate) CHECK(self_validate(*e.certificate));
            }
        }
    }

    auto t7 = make_tower(2, 1, 7);
    const auto list = classify(t7, 3);
    std::vector<Support> survivors;
    for (const auto& e : list.entries)
        if (!e.progression && !e.reduced_to) survivors.push_back(e.T);
    CHECK(survivors == std::vector<Support>{{0, 1, 3}});
    for (const auto& e : list.entries) {
        if (e.T == Support{0, 1, 3}) CHECK(e.verdict == Verdict::not_mrd);
        if (e.T == Support{0, 1, 5}) {
            CHECK(e.removed_by_adjoint);
            CHECK(e.reduced_to == Support{0, 1, 3});
        }
    }
}

TEST_CASE("Hasse-Weil gap") {
    // Independent 128-bit evaluation.
    auto oracle = [](std::uint64_t q, std::uint32_t n) {
        using u128 = unsigned __int128;
        const u128 qn = ipow(q, n);
        const u128 sub = q * (q - 1) * (q * q + 2);
        if (qn + 1 <= sub) return false;
        const u128 l = qn + 1 - sub;
        const u128 g = q * (q - 1) * (q * q * q - 2 * q - 2) / 2 + 1;
        return l * l > 4 * g * g * qn;
    };
    for (std::uint64_t q = 2; q <= 9; ++q)
        for (std::uint32_t n = 1; n <= 20; ++n) CHECK(hasse_weil_gap(q, n) == oracle(q, n));
    CHECK(hasse_weil_gap(2, 10));
    CHECK(hasse_weil_gap(9, 10));
    CHECK_FALSE(hasse_weil_gap(9, 3));
}
