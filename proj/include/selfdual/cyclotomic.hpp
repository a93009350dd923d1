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

#ifndef SELFDUAL_CYCLOTOMIC_HPP
#define SELFDUAL_CYCLOTOMIC_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace selfdual {

/// Exponents of the roots of a (consta)cyclic code.
///
/// Cyclic codes of length n use modulus n and step 1. A lambda-constacyclic code of length n with
/// ord(lambda) = r uses modulus r*n and step r; its exponents then lie in {1 + r j : 0 <= j < n}.
struct DefiningSet {
    u64 modulus = 1;
    u64 step = 1;
    std::vector<u64> elements;  // sorted, unique

    static DefiningSet cyclic(u64 n, std::vector<u64> elems) { return make(n, 1, std::move(elems)); }
    static DefiningSet constacyclic(u64 r, u64 n, std::vector<u64> elems) { return make(r * n, r, std::move(elems)); }

    /// {from, from+1, ..., to} modulo n.
    static DefiningSet interval(u64 n, u64 from, u64 to) {
        std::vector<u64> e;
        for (u64 i = from; i <= to; ++i) e.push_back(i % n);
        return cyclic(n, std::move(e));
    }

    static DefiningSet make(u64 modulus, u64 step, std::vector<u64> elems) {
        if (modulus == 0 || step == 0 || modulus % step != 0)
            throw Error(ErrorCode::MalformedInput, "defining set modulus must be a positive multiple of its step");
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        for (u64 x : elems) {
            if (x >= modulus) throw Error(ErrorCode::MalformedInput, "defining set element out of range");
            if (step > 1 && x % step != 1)
                throw Error(ErrorCode::MalformedInput, "constacyclic exponent not congruent to 1 mod r");
        }
        return DefiningSet{modulus, step, std::move(elems)};
    }

    /// Code length: n for both cyclic and constacyclic sets.
    u64 length() const noexcept { return modulus / step; }
    std::size_t size() const noexcept { return elements.size(); }
    bool contains(u64 x) const { return std::binary_search(elements.begin(), elements.end(), x); }

    /// Residues a root exponent may take: Z_n \ {0} for cyclic sets, O_{r,n} for constacyclic ones.
    std::vector<u64> ambient() const {
        std::vector<u64> out;
        if (step == 1) {
            for (u64 i = 1; i < modulus; ++i) out.push_back(i);
        } else {
            for (u64 j = 0; j < length(); ++j) out.push_back(1 + step * j);
        }
        return out;
    }

    bool operator==(const DefiningSet&) const = default;
};

/// Orbit of i under multiplication by base modulo n.
inline std::vector<u64> cyclotomic_coset(u64 i, u64 n, u64 base) {
    if (std::gcd(n, base % n) != 1 && n != 1) throw Error(ErrorCode::NotCoprime, "coset base not coprime to modulus");
    std::vector<u64> orbit;
    u64 x = i % n;
    do {
        orbit.push_back(x);
        x = detail::mul_mod(x, base % n, n);
    } while (x != i % n);
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

/// Multiplier mu_a on a defining set. Negative multipliers are taken modulo the set's modulus.
inline DefiningSet multiplier_image(const DefiningSet& set, i64 a) {
    const u64 m = set.modulus;
    const u64 an = detail::mod_floor(a, m);
    if (std::gcd(an, m) != 1 && m != 1) throw Error(ErrorCode::NotCoprime, "multiplier not coprime to modulus");
    std::vector<u64> image;
    image.reserve(set.size());
    for (u64 x : set.elements) image.push_back(detail::mul_mod(x, an, m));
    return DefiningSet::make(m, set.step, std::move(image));
}

struct SplittingReport {
    i64 multiplier = 0;
    u64 normalized_multiplier = 0;
    u64 coset_base = 0;
    DefiningSet s1, s2;
    bool is_splitting = false;
    /// For an overlap, a*x for the least x in S1 whose image falls back into S1; otherwise the
    /// least element violating the first failed condition.
    std::optional<u64> witness;
    std::optional<u64> witness_preimage;
    std::string failure;  // empty when is_splitting
};

/// Checks that S1 = set and S2 = a*S1 partition the ambient residues, are swapped by mu_a and are
/// closed under multiplication by coset_base.
inline SplittingReport check_duadic_splitting(const DefiningSet& set, i64 a, u64 coset_base) {
    const u64 m = set.modulus;
    if (set.step == 1 && set.contains(0)) throw Error(ErrorCode::ZeroInSet, "0 in a splitting half");
    if (m > 1 && std::gcd(coset_base % m, m) != 1) throw Error(ErrorCode::NotCoprime, "coset base not coprime");

    SplittingReport rep;
    rep.multiplier = a;
    rep.normalized_multiplier = detail::mod_floor(a, m);
    rep.coset_base = coset_base;
    rep.s1 = set;
    rep.s2 = multiplier_image(set, a);
    const u64 an = rep.normalized_multiplier;
    const u64 qn = coset_base % m;

    const auto fail = [&](std::string why, u64 w, std::optional<u64> pre = std::nullopt) {
        rep.is_splitting = false;
        rep.failure = std::move(why);
        rep.witness = w;
        rep.witness_preimage = pre;
        return rep;
    };

    for (u64 x : set.elements) {
        const u64 y = detail::mul_mod(x, an, m);
        if (set.contains(y)) return fail("overlap", y, x);
    }
    for (u64 x : set.ambient()) {
        if (!set.contains(x) && !rep.s2.contains(x)) return fail("not-covering", x);
    }
    for (u64 x : rep.s2.elements) {
        if (!set.contains(detail::mul_mod(x, an, m))) return fail("not-swapped", x);
    }
    std::vector<u64> bad;
    for (const DefiningSet* s : {&rep.s1, &rep.s2})
        for (u64 x : s->elements)
            if (!s->contains(detail::mul_mod(x, qn, m))) bad.push_back(x);
    if (!bad.empty()) return fail("not-coset-closed", *std::min_element(bad.begin(), bad.end()));

    rep.is_splitting = true;
    return rep;
}

/// Longest run x, x+step, ..., x+(L-1)*step (mod modulus) inside the set. The BCH bound turns a
/// run of length L into d >= L + 1.
inline u64 consecutive_run(const DefiningSet& set) {
    u64 best = 0;
    for (u64 x : set.elements) {
        u64 len = 0;
        u64 y = x;
        while (len < set.size() && set.contains(y)) {
            ++len;
            y = (y + set.step) % set.modulus;
        }
        best = std::max(best, len);
    }
    return best;
}

/// Whether a cyclic code of length n over GF(q^2) with Hermitian self-dual extension can exist:
/// for every prime r | n, ord_r(q) is odd or ord_r(q^2) is even.
inline bool hermitian_extended_duadic_exists(u64 n, u64 q) {
    if (std::gcd(n, q) != 1) throw Error(ErrorCode::NotCoprime, "n and q must be coprime");
    if (n == 1) return true;
    for (u64 r : detail::factorize_unguarded(n).primes()) {
        const u64 o1 = multiplicative_order(q % r, r);
        const u64 o2 = multiplicative_order(detail::mul_mod(q, q, r), r);
        if (o1 % 2 == 0 && o2 % 2 == 1) return false;
    }
    return true;
}

}  // namespace selfdual

#endif
