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

#ifndef SELFDUAL_NUMBER_THEORY_HPP
#define SELFDUAL_NUMBER_THEORY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace selfdual {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kFactorizationGuard = u64{1} << 40;

namespace detail {

using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Least non-negative residue of a (possibly negative) integer.
inline u64 mod_floor(i64 a, u64 m) {
    const i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

inline u64 checked_pow(u64 base, unsigned exp, u64 limit) {
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return 0;
        result *= base;
    }
    return result > limit ? 0 : result;
}

inline u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        u64 r = 1;
        const auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min<u64>(128, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += 128;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

}  // namespace detail

/// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

struct PrimePower {
    u64 prime;
    unsigned exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization with ascending primes.
struct Factorization {
    std::vector<PrimePower> terms;

    u64 product() const {
        u64 v = 1;
        for (const auto& [p, e] : terms)
            for (unsigned i = 0; i < e; ++i) v *= p;
        return v;
    }
    std::vector<u64> primes() const {
        std::vector<u64> out;
        for (const auto& t : terms) out.push_back(t.prime);
        return out;
    }
    bool operator==(const Factorization&) const = default;
};

namespace detail {

inline void collect_prime_factors(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const u64 d = pollard_brent(n);
    collect_prime_factors(d, out);
    collect_prime_factors(n / d, out);
}

inline Factorization factorize_unguarded(u64 n) {
    std::vector<u64> primes;
    for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    collect_prime_factors(n, primes);
    std::sort(primes.begin(), primes.end());
    Factorization f;
    for (u64 p : primes) {
        if (!f.terms.empty() && f.terms.back().prime == p)
            ++f.terms.back().exponent;
        else
            f.terms.push_back({p, 1});
    }
    return f;
}

inline Factorization merge(const Factorization& a, const Factorization& b) {
    std::vector<PrimePower> all = a.terms;
    for (const auto& t : b.terms) {
        auto it = std::find_if(all.begin(), all.end(), [&](const PrimePower& x) { return x.prime == t.prime; });
        if (it == all.end())
            all.push_back(t);
        else
            it->exponent += t.exponent;
    }
    std::sort(all.begin(), all.end(), [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
    return Factorization{std::move(all)};
}

}  // namespace detail

/// Trial division followed by Brent's variant of Pollard rho.
inline Factorization factorize(u64 n, u64 guard = kFactorizationGuard) {
    if (n == 0) throw Error(ErrorCode::MalformedInput, "cannot factorize 0");
    if (n > guard) throw Error(ErrorCode::GuardExceeded, "factorization input " + std::to_string(n) + " above guard");
    return detail::factorize_unguarded(n);
}

/// Least m >= 1 with a^m = 1 (mod modulus); requires gcd(a, modulus) = 1.
inline u64 multiplicative_order(u64 a, u64 modulus) {
    if (modulus == 1) return 1;
    a %= modulus;
    if (std::gcd(a, modulus) != 1) throw Error(ErrorCode::NotCoprime, "order of a non-unit");
    u64 phi = modulus;
    for (const auto& t : detail::factorize_unguarded(modulus).terms) phi = phi / t.prime * (t.prime - 1);
    u64 order = phi;
    for (const auto& t : detail::factorize_unguarded(phi).terms) {
        while (order % t.prime == 0 && detail::pow_mod(a, order / t.prime, modulus) == 1) order /= t.prime;
    }
    return order;
}

/// Legendre symbol by Euler's criterion.
inline int legendre(i64 a, u64 p) {
    if (p == 2 || !is_prime(p)) throw Error(ErrorCode::NotOddPrime, std::to_string(p) + " is not an odd prime");
    const u64 r = detail::mod_floor(a, p);
    if (r == 0) return 0;
    return detail::pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Jacobi symbol (m/n) for odd n >= 1, binary reciprocity algorithm.
inline int jacobi(i64 m, u64 n) {
    if (n == 0 || n % 2 == 0) throw Error(ErrorCode::EvenModulus, "Jacobi symbol needs an odd positive modulus");
    u64 a = detail::mod_floor(m, n);
    int sign = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const u64 r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

enum class SolvabilityCase { Char2, QEquiv1Mod4, QEquiv3Mod4OddSum, QEquiv3Mod4EvenSum };

constexpr std::string_view to_string(SolvabilityCase c) noexcept {
    switch (c) {
        case SolvabilityCase::Char2: return "Char2";
        case SolvabilityCase::QEquiv1Mod4: return "QEquiv1Mod4";
        case SolvabilityCase::QEquiv3Mod4OddSum: return "QEquiv3Mod4-OddSum";
        case SolvabilityCase::QEquiv3Mod4EvenSum: return "QEquiv3Mod4-EvenSum";
    }
    return "Unknown";
}

/// Whether 1 + gamma^2 n = 0 has a root gamma in GF(p^t), decided from q mod 4 and the
/// exponents of the prime factors of n that are 3 mod 4.
struct GammaSolvability {
    bool solvable;
    SolvabilityCase which;
    u64 odd_sum;  // sum of e_i over primes p_i | n with p_i = 3 (mod 4)
};

inline GammaSolvability euclidean_gamma_solvability(u64 p, unsigned t, u64 n) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (t == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be positive");
    const u64 q = detail::checked_pow(p, t, u64{1} << 62);
    if (q == 0) throw Error(ErrorCode::SizeGuardExceeded, "p^t too large");
    if (n % 2 == 0) throw Error(ErrorCode::EvenN, "n must be odd");
    if ((q - 1) % n != 0) throw Error(ErrorCode::NotDivisor, std::to_string(n) + " does not divide q-1");

    u64 odd_sum = 0;
    for (const auto& [prime, e] : detail::factorize_unguarded(n).terms)
        if (prime % 4 == 3) odd_sum += e;

    if (p == 2) return {true, SolvabilityCase::Char2, odd_sum};
    if (q % 4 == 1) return {true, SolvabilityCase::QEquiv1Mod4, odd_sum};
    if (odd_sum % 2 == 1) return {true, SolvabilityCase::QEquiv3Mod4OddSum, odd_sum};
    return {false, SolvabilityCase::QEquiv3Mod4EvenSum, odd_sum};
}

}  // namespace selfdual

#endif
