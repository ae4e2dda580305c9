#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "dickson/ff_core.hpp"

using namespace dickson;
using u64 = std::uint64_t;
using u32 = std::uint32_t;

namespace {

// ---- test-only oracles, independent of the library paths they check ----

// trial division by every monic polynomial of lower degree
using P = std::vector<u32>;

P oracle_polymod(P a, const P& f, u64 p) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const u64 lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i < df; ++i)
            a[shift + i] = static_cast<u32>((a[shift + i] + (p - lead * f[i] % p)) % p);
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

bool oracle_irreducible(const P& f, u64 p) {
    const std::size_t m = f.size() - 1;
    if (m < 1) return false;
    for (std::size_t d = 1; d < m; ++d) {
        // all monic divisor candidates of degree d
        std::vector<u32> digits(d, 0);
        for (;;) {
            P g(digits);
            g.push_back(1);
            if (oracle_polymod(f, g, p).empty()) return false;
            std::size_t i = d;
            while (i > 0 && digits[i - 1] == p - 1) digits[--i] = 0;
            if (i == 0) break;
            ++digits[i - 1];
        }
    }
    return true;
}

u64 oracle_element_order(const ExtensionField& F, const FieldElement& a) {
    FieldElement x = a;
    u64 t = 1;
    while (!(x == F.one())) {
        x = F.mul(x, a);
        ++t;
    }
    return t;
}

}  // namespace

TEST_CASE("factorize matches its multiply-back oracle") {
    CHECK(factorize(8) == std::vector<u64>{2, 2, 2});
    CHECK(factorize(1).empty());
    CHECK(factorize(9 - 1) == std::vector<u64>{2, 2, 2});  // q^n - 1 for (3,2)

    // 13^6 - 1 = 4826808; oracle is integer multiplication
    const std::vector<u64> f13 = factorize(4826808);
    CHECK(f13 == std::vector<u64>{2, 2, 2, 3, 3, 7, 61, 157});
    u64 prod = 1;
    for (u64 v : f13) {
        CHECK(is_prime(v));
        prod *= v;
    }
    CHECK(prod == 4826808);

    for (u64 n = 1; n <= 2000; ++n) {
        const auto fs = factorize(n);
        u64 back = 1;
        for (u64 v : fs) {
            CHECK(is_prime(v));
            back *= v;
        }
        CHECK(back == n);
    }
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("find_irreducible returns the lex-smallest monic irreducible") {
    // the degree-2 scan over Z_3: (0,0), (0,1), (0,2) reducible, (1,0) not
    CHECK_FALSE(oracle_irreducible({0, 0, 1}, 3));
    CHECK_FALSE(oracle_irreducible({0, 1, 1}, 3));
    CHECK_FALSE(oracle_irreducible({0, 2, 1}, 3));
    CHECK(oracle_irreducible({1, 0, 1}, 3));
    CHECK(find_irreducible(3, 2) == Polynomial(3, {1, 0, 1}));

    CHECK(find_irreducible(2, 2) == Polynomial(2, {1, 1, 1}));  // the only one
    for (u64 p : {2, 3, 5, 7}) CHECK(find_irreducible(p, 1) == Polynomial(p, {0, 1}));

    for (u64 p : {2ull, 3ull, 5ull}) {
        for (unsigned m = 2; m <= 4; ++m) {
            const Polynomial f = find_irreducible(p, m);
            REQUIRE(f.degree() == static_cast<int>(m));
            REQUIRE(f.is_monic());
            CHECK(oracle_irreducible(f.coeffs(), p));
            // nothing lex-smaller may be irreducible
            std::vector<u32> digits(m, 0);
            bool reached = false;
            for (;;) {
                P cand(digits);
                cand.push_back(1);
                if (cand == f.coeffs()) {
                    reached = true;
                    break;
                }
                CHECK_FALSE(oracle_irreducible(cand, p));
                std::size_t i = m;
                while (i > 0 && digits[i - 1] == p - 1) digits[--i] = 0;
                if (i == 0) break;
                ++digits[i - 1];
            }
            CHECK(reached);
        }
    }
    CHECK(is_irreducible(Polynomial(3, {1, 0, 1})));
    CHECK_FALSE(is_irreducible(Polynomial(3, {2, 0, 1})));  // x^2 + 2 = (x+1)(x+2)
}

TEST_CASE("GF(9) arithmetic pins the worked values") {
    const ExtensionField F(3, 2);
    auto E = [&](u32 a, u32 b) { return F.element({a, b}); };
    const FieldElement beta = E(0, 1);

    CHECK(F.order() == 9);
    CHECK(F.modulus() == Polynomial(3, {1, 0, 1}));

    // addition is componentwise mod 3
    CHECK(F.add(E(1, 1), E(2, 2)) == E(0, 0));
    CHECK(F.add(E(2, 1), E(2, 1)) == E(1, 2));
    for (u64 c = 0; c < 9; ++c) {
        const FieldElement a = F.element_from_code(c);
        CHECK(F.add(a, F.zero()) == a);
    }

    // beta is a zero of x^2 + 1, so beta^2 = -1 = 2
    CHECK(F.mul(beta, beta) == E(2, 0));
    CHECK(F.mul(E(1, 1), E(1, 1)) == E(0, 2));
    for (u64 c = 0; c < 9; ++c) {
        const FieldElement a = F.element_from_code(c);
        CHECK(F.mul(a, F.one()) == a);
    }

    CHECK(F.inv(F.one()) == F.one());
    CHECK(F.inv(E(2, 0)) == E(2, 0));  // 2*2 = 4 = 1 mod 3
    for (u64 c = 1; c < 9; ++c) {
        const FieldElement a = F.element_from_code(c);
        CHECK(F.mul(a, F.inv(a)) == F.one());
        CHECK(F.inv(F.inv(a)) == a);
    }

    CHECK(F.pow(E(1, 1), 2) == E(0, 2));
    for (u64 c = 1; c < 9; ++c) {
        const FieldElement a = F.element_from_code(c);
        CHECK(F.pow(a, 0) == F.one());
        CHECK(F.pow(a, 8) == F.one());
        CHECK(F.pow(a, -1) == F.inv(a));
    }
}

TEST_CASE("find_primitive picks the lex-smallest generator") {
    const ExtensionField F9(3, 2);
    CHECK(F9.generator() == F9.element({1, 1}));  // beta and 2*beta have order 4
    CHECK(oracle_element_order(F9, F9.element({0, 1})) == 4);
    CHECK(oracle_element_order(F9, F9.element({0, 2})) == 4);
    CHECK(oracle_element_order(F9, F9.element({1, 1})) == 8);

    const ExtensionField F3(3, 1);
    CHECK(F3.generator() == F3.element({2}));

    for (u64 p : {2ull, 5ull, 7ull}) {
        for (unsigned m = 1; m <= 2; ++m) {
            const ExtensionField F(p, m);
            const FieldElement g = F.generator();
            CHECK(oracle_element_order(F, g) == F.unit_order());
            // certificate form
            std::set<u64> primes(F.unit_order_factors().begin(), F.unit_order_factors().end());
            for (u64 r : primes)
                CHECK_FALSE(F.pow(g, static_cast<std::int64_t>(F.unit_order() / r)) == F.one());
            // minimality against the brute-force order oracle
            for (u64 t = 1; t < F.order(); ++t) {
                const FieldElement cand = F.lex_element(t);
                if (cand == g) break;
                CHECK(oracle_element_order(F, cand) < F.unit_order());
            }
        }
    }
}

TEST_CASE("dlog round-trips and both backends agree") {
    const ExtensionField F(3, 2);
    CHECK(F.dlog(F.one()) == 0);
    CHECK(F.dlog(F.generator()) == 1);
    CHECK(F.dlog(F.element({2, 0})) == 4);  // (1+beta)^4 = 2

    for (u64 p : {2ull, 3ull, 5ull, 7ull}) {
        for (unsigned m = 1; m <= 3; ++m) {
            const ExtensionField K(p, m);
            REQUIRE(K.has_dlog_table());
            for (u64 c = 1; c < K.order(); ++c) {
                const FieldElement a = K.element_from_code(c);
                const u64 e = K.dlog(a);
                CHECK(K.pow(K.generator(), static_cast<std::int64_t>(e)) == a);
                CHECK(K.dlog_via_bsgs(a) == K.dlog_via_table(a));
            }
        }
    }
    CHECK_THROWS_AS(F.dlog(F.zero()), std::domain_error);
}

TEST_CASE("BSGS-only backend above the table threshold") {
    const ExtensionField F(2, 17);  // 131072 elements, no full table
    CHECK_FALSE(F.has_dlog_table());
    CHECK(F.dlog(F.one()) == 0);
    CHECK(F.dlog(F.generator()) == 1);
    std::uint64_t e = 12345;
    for (int i = 0; i < 200; ++i) {
        e = (e * 2862933555777941757ull + 3037000493ull) % F.unit_order();
        const FieldElement a = F.pow(F.generator(), static_cast<std::int64_t>(e));
        CHECK(F.dlog(a) == e);
    }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{
             {2, 3}, {3, 2}, {5, 2}, {3, 3}, {7, 2}, {2, 6}}) {
        const ExtensionField F(p, m);
        const u64 Q = F.order();
        std::vector<FieldElement> el;
        el.reserve(Q);
        for (u64 c = 0; c < Q; ++c) el.push_back(F.element_from_code(c));
        for (u64 a = 0; a < Q; ++a)
            for (u64 b = 0; b < Q; ++b) {
                CHECK(F.add(el[a], el[b]) == F.add(el[b], el[a]));
                CHECK(F.mul(el[a], el[b]) == F.mul(el[b], el[a]));
                for (u64 c = 0; c < Q; ++c) {
                    CHECK(F.add(F.add(el[a], el[b]), el[c]) == F.add(el[a], F.add(el[b], el[c])));
                    CHECK(F.mul(F.mul(el[a], el[b]), el[c]) == F.mul(el[a], F.mul(el[b], el[c])));
                    CHECK(F.mul(F.add(el[a], el[b]), el[c]) ==
                          F.add(F.mul(el[a], el[c]), F.mul(el[b], el[c])));
                }
            }
    }
}

TEST_CASE("frobenius is the p-power automorphism") {
    const ExtensionField F9(3, 2);
    const FieldElement beta = F9.element({0, 1});
    CHECK(F9.frobenius(beta, 1) == F9.element({0, 2}));  // beta^3 = 2*beta
    for (u64 c = 0; c < 9; ++c) {
        const FieldElement a = F9.element_from_code(c);
        CHECK(F9.frobenius(a, 0) == a);
        CHECK(F9.frobenius(a, 2) == a);
        CHECK(F9.frobenius(a, 1) == F9.pow(a, 3));
        for (u64 d = 0; d < 9; ++d) {
            const FieldElement b = F9.element_from_code(d);
            CHECK(F9.frobenius(F9.add(a, b), 1) ==
                  F9.add(F9.frobenius(a, 1), F9.frobenius(b, 1)));
            CHECK(F9.frobenius(F9.mul(a, b), 1) ==
                  F9.mul(F9.frobenius(a, 1), F9.frobenius(b, 1)));
        }
    }

    // the fixed field of x -> x^(p^j) is GF(p^gcd(j,m)), and the map is a bijection
    for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{3, 4}, {2, 6}, {5, 2}, {7, 3}}) {
        const ExtensionField F(p, m);
        for (unsigned j = 0; j < m; ++j) {
            u64 fixed = 0;
            std::set<u64> image;
            for (u64 c = 0; c < F.order(); ++c) {
                const FieldElement a = F.element_from_code(c);
                const FieldElement fa = F.frobenius(a, j);
                image.insert(F.code(fa));
                if (fa == a) ++fixed;
            }
            CHECK(image.size() == F.order());
            u64 expect = 1;
            for (u64 i = 0; i < std::gcd<u64>(j, m); ++i) expect *= p;
            CHECK(fixed == expect);
        }
    }
}

TEST_CASE("construction re-certifies its inputs and rejects bad ones") {
    CHECK_THROWS_AS(ExtensionField(4, 2), std::invalid_argument);  // p not prime
    CHECK_THROWS_AS(ExtensionField(3, 2, Polynomial(3, {2, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(ExtensionField(3, 2, Polynomial(3, {1, 0, 1}),
                                   FieldElement{{0, 1}}),  // beta has order 4
                    std::invalid_argument);
    // an explicit primitive generator other than the default is accepted
    const ExtensionField F(3, 2, Polynomial(3, {1, 0, 1}), FieldElement{{1, 2}});
    CHECK(F.generator() == F.element({1, 2}));
    CHECK(oracle_element_order(F, F.generator()) == 8);
}

TEST_CASE("element and argument validation") {
    const ExtensionField F(3, 2);
    CHECK_THROWS_AS(F.element({1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(F.element({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(F.add(F.one(), FieldElement{{1}}), std::invalid_argument);
    CHECK_THROWS_AS(F.inv(F.zero()), std::domain_error);
    CHECK_THROWS_AS(F.pow(F.zero(), -1), std::domain_error);
    CHECK(F.pow(F.zero(), 0) == F.one());
    CHECK(F.pow(F.zero(), 5) == F.zero());

    CHECK(to_string(F.element({1, 2})) == "1:2");
    CHECK(parse_element("1:2") == FieldElement{{1, 2}});
    CHECK_THROWS_AS(parse_element("1:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("a:b"), std::invalid_argument);
}

TEST_CASE("element_order agrees with the brute-force oracle") {
    const ExtensionField F(3, 2);
    CHECK(F.element_order(F.element({0, 1})) == 4);
    CHECK(F.element_order(F.element({2, 0})) == 2);
    CHECK(F.element_order(F.generator()) == 8);
    for (u64 c = 1; c < 9; ++c) {
        const FieldElement a = F.element_from_code(c);
        CHECK(F.element_order(a) == oracle_element_order(F, a));
    }
}
