/*
   Copyright 2026 The selfdual Authors

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

#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace selfdual;

namespace {

std::vector<u64> odd_primes_up_to(u64 limit) {
    std::vector<u64> out;
    for (u64 p = 3; p <= limit; p += 2)
        if (oracle::is_prime(p)) out.push_back(p);
    return out;
}

std::vector<std::pair<u64, unsigned>> as_pairs(const Factorization& f) {
    std::vector<std::pair<u64, unsigned>> out;
    for (const auto& t : f.terms) out.emplace_back(t.prime, t.exponent);
    return out;
}

}  // namespace

TEST(Factorize, Examples) {
    EXPECT_TRUE(factorize(1).terms.empty());
    EXPECT_EQ(as_pairs(factorize(15)), (std::vector<std::pair<u64, unsigned>>{{3, 1}, {5, 1}}));
    EXPECT_EQ(as_pairs(factorize(43046720)),
              (std::vector<std::pair<u64, unsigned>>{{2, 6}, {5, 1}, {17, 1}, {41, 1}, {193, 1}}));
}

TEST(Factorize, MatchesTrialDivision) {
    std::mt19937_64 rng(11);
    for (u64 n = 1; n <= 5000; ++n) ASSERT_EQ(as_pairs(factorize(n)), oracle::trial_factor(n)) << n;
    for (int i = 0; i < 200; ++i) {
        const u64 n = 1 + rng() % (u64{1} << 36);
        const Factorization f = factorize(n);
        ASSERT_EQ(f.product(), n);
        for (std::size_t j = 0; j < f.terms.size(); ++j) {
            ASSERT_TRUE(oracle::is_prime(f.terms[j].prime)) << n;
            if (j) {
                ASSERT_LT(f.terms[j - 1].prime, f.terms[j].prime);
            }
        }
    }
    // product of two primes near 2^20
    const Factorization semi = factorize(u64{1048573} * 1048571);
    EXPECT_EQ(as_pairs(semi), (std::vector<std::pair<u64, unsigned>>{{1048571, 1}, {1048573, 1}}));
}

TEST(Factorize, Errors) {
    EXPECT_EQ(oracle::error_of([] { factorize((u64{1} << 40) + 1); }), ErrorCode::GuardExceeded);
    EXPECT_EQ(oracle::error_of([] { factorize(0); }), ErrorCode::MalformedInput);
    EXPECT_EQ(oracle::error_of([] { factorize(u64{1} << 40); }), std::nullopt);
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(0, 7), 0);
    for (u64 p : odd_primes_up_to(100)) EXPECT_EQ(legendre(1, p), 1) << p;
    EXPECT_EQ(legendre(2, 7), 1);
    EXPECT_EQ(legendre(3, 7), -1);
    EXPECT_EQ(legendre(-1, 7), -1);
    EXPECT_EQ(legendre(-1, 13), 1);
}

TEST(Legendre, MatchesSquareEnumeration) {
    for (u64 p : odd_primes_up_to(200))
        for (i64 a = -static_cast<i64>(p); a < 2 * static_cast<i64>(p); ++a)
            ASSERT_EQ(legendre(a, p), oracle::legendre_by_squares(a, p)) << a << " mod " << p;
}

TEST(Legendre, RejectsNonOddPrimes) {
    for (u64 m : {0u, 1u, 2u, 9u, 15u})
        EXPECT_EQ(oracle::error_of([m] { legendre(1, m); }), ErrorCode::NotOddPrime) << m;
}

TEST(Legendre, CompletelyMultiplicative) {
    std::mt19937_64 rng(5);
    for (u64 p : odd_primes_up_to(200))
        for (int i = 0; i < 50; ++i) {
            const i64 a = static_cast<i64>(rng() % 10000) - 5000, b = static_cast<i64>(rng() % 10000) - 5000;
            ASSERT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
        }
}

TEST(Legendre, QuadraticReciprocity) {
    const auto primes = odd_primes_up_to(200);
    for (u64 p : primes)
        for (u64 r : primes) {
            if (p == r) continue;
            const int expected = ((p - 1) / 2 * ((r - 1) / 2)) % 2 == 0 ? 1 : -1;
            ASSERT_EQ(legendre(static_cast<i64>(p), r) * legendre(static_cast<i64>(r), p), expected) << p << " " << r;
            // one of them is 1 mod 4: the symbols agree; both 3 mod 4: they differ
            if (p % 4 == 1 || r % 4 == 1) {
                ASSERT_EQ(legendre(static_cast<i64>(p), r), legendre(static_cast<i64>(r), p));
            } else {
                ASSERT_EQ(legendre(static_cast<i64>(p), r), -legendre(static_cast<i64>(r), p));
            }
        }
}

TEST(Jacobi, Examples) {
    for (i64 m : {-5, 0, 1, 2, 1000}) EXPECT_EQ(jacobi(m, 1), 1);
    EXPECT_EQ(jacobi(2, 15), 1);
    // yet 2 is not a square mod 15
    std::set<u64> squares;
    for (u64 x = 0; x < 15; ++x) squares.insert(x * x % 15);
    EXPECT_EQ(squares.count(2), 0u);
}

TEST(Jacobi, AgreesWithLegendreOnPrimes) {
    for (u64 p : odd_primes_up_to(200))
        for (i64 m = 0; m < static_cast<i64>(p); ++m) ASSERT_EQ(jacobi(m, p), legendre(m, p));
}

TEST(Jacobi, MatchesDefinitionalProduct) {
    for (u64 n = 1; n <= 999; n += 2)
        for (i64 m = -20; m <= 60; ++m) ASSERT_EQ(jacobi(m, n), oracle::jacobi_by_definition(m, n)) << m << "/" << n;
}

TEST(Jacobi, SquaresHaveSymbolOne) {
    for (u64 n = 3; n <= 500; n += 2) {
        std::set<u64> squares;
        for (u64 x = 1; x < n; ++x)
            if (std::gcd(x, n) == 1) squares.insert(x * x % n);
        for (u64 m : squares) ASSERT_EQ(jacobi(static_cast<i64>(m), n), 1) << m << "/" << n;
    }
}

TEST(Jacobi, RejectsEvenModulus) {
    for (u64 n : {0u, 2u, 10u}) EXPECT_EQ(oracle::error_of([n] { jacobi(3, n); }), ErrorCode::EvenModulus);
}

TEST(GammaSolvability, Examples) {
    const auto a = euclidean_gamma_solvability(13, 1, 3);
    EXPECT_TRUE(a.solvable);
    EXPECT_EQ(a.which, SolvabilityCase::QEquiv1Mod4);
    const auto b = euclidean_gamma_solvability(7, 1, 3);
    EXPECT_TRUE(b.solvable);
    EXPECT_EQ(b.which, SolvabilityCase::QEquiv3Mod4OddSum);
    EXPECT_EQ(b.odd_sum, 1u);
    const auto c = euclidean_gamma_solvability(11, 1, 5);
    EXPECT_FALSE(c.solvable);
    EXPECT_EQ(c.which, SolvabilityCase::QEquiv3Mod4EvenSum);
    EXPECT_EQ(c.odd_sum, 0u);
    const auto d = euclidean_gamma_solvability(2, 4, 15);
    EXPECT_TRUE(d.solvable);
    EXPECT_EQ(d.which, SolvabilityCase::Char2);
    EXPECT_EQ(to_string(c.which), "QEquiv3Mod4-EvenSum");
}

TEST(GammaSolvability, Errors) {
    EXPECT_EQ(oracle::error_of([] { euclidean_gamma_solvability(7, 1, 2); }), ErrorCode::EvenN);
    EXPECT_EQ(oracle::error_of([] { euclidean_gamma_solvability(7, 1, 5); }), ErrorCode::NotDivisor);
    EXPECT_EQ(oracle::error_of([] { euclidean_gamma_solvability(9, 1, 1); }), ErrorCode::NotPrime);
    EXPECT_EQ(oracle::error_of([] { euclidean_gamma_solvability(3, 0, 1); }), ErrorCode::DegreeZero);
}

TEST(GammaSolvability, AgreesWithBruteForce) {
    for (const auto& pp : oracle::prime_powers(343, true)) {
        const GaloisField f = make_field(pp.p, pp.t);
        for (u64 n = 1; n <= pp.q - 1; n += 2) {
            if ((pp.q - 1) % n) continue;
            const auto v = euclidean_gamma_solvability(pp.p, pp.t, n);
            ASSERT_EQ(v.solvable, oracle::brute_gamma_exists(f, n)) << "q=" << pp.q << " n=" << n;
            ASSERT_EQ(v.which == SolvabilityCase::QEquiv1Mod4, pp.q % 4 == 1);
        }
    }
}

TEST(GammaSolvability, CaseConsistency) {
    for (const auto& pp : oracle::prime_powers(2000, false)) {
        for (u64 n = 1; n <= pp.q - 1; n += 2) {
            if ((pp.q - 1) % n) continue;
            const auto v = euclidean_gamma_solvability(pp.p, pp.t, n);
            u64 odd_sum = 0;
            for (auto [r, e] : oracle::trial_factor(n))
                if (r % 4 == 3) odd_sum += e;
            ASSERT_EQ(v.odd_sum, odd_sum);
            if (pp.p == 2) {
                ASSERT_EQ(v.which, SolvabilityCase::Char2);
            } else if (pp.q % 4 == 1) {
                ASSERT_EQ(v.which, SolvabilityCase::QEquiv1Mod4);
            } else {
                ASSERT_EQ(v.which, odd_sum % 2 ? SolvabilityCase::QEquiv3Mod4OddSum : SolvabilityCase::QEquiv3Mod4EvenSum);
            }
            ASSERT_EQ(v.solvable, v.which != SolvabilityCase::QEquiv3Mod4EvenSum);
        }
    }
}

TEST(MultiplicativeOrder, MatchesEnumeration) {
    for (u64 m = 2; m <= 200; ++m)
        for (u64 a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) {
                ASSERT_EQ(oracle::error_of([&] { multiplicative_order(a, m); }), ErrorCode::NotCoprime);
                continue;
            }
            u64 k = 1, x = a;
            while (x != 1) {
                x = x * a % m;
                ++k;
            }
            ASSERT_EQ(multiplicative_order(a, m), k);
        }
}
