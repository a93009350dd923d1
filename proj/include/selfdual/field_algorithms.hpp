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

#ifndef SELFDUAL_FIELD_ALGORITHMS_HPP
#define SELFDUAL_FIELD_ALGORITHMS_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace selfdual {

/// A field element is its canonical integer encoding. For GF(p^t) this is sum c_i p^i over the
/// polynomial-basis coefficients; for a quadratic extension a + b*y it is enc(a) + enc(b)*q.
/// Elements only make sense together with the field that produced them.
struct Element {
    u64 value = 0;
    constexpr auto operator<=>(const Element&) const = default;
};

template <class F>
concept FiniteField = requires(const F& f, Element a, Element b, i64 z) {
    { f.size() } -> std::convertible_to<u64>;
    { f.characteristic() } -> std::convertible_to<u64>;
    { f.zero() } -> std::same_as<Element>;
    { f.one() } -> std::same_as<Element>;
    { f.add(a, b) } -> std::same_as<Element>;
    { f.sub(a, b) } -> std::same_as<Element>;
    { f.neg(a) } -> std::same_as<Element>;
    { f.mul(a, b) } -> std::same_as<Element>;
    { f.inv(a) } -> std::same_as<Element>;
    { f.from_integer(z) } -> std::same_as<Element>;
    { f.group_order_factorization() } -> std::convertible_to<const Factorization&>;
    { f.primitive_element() } -> std::same_as<Element>;
};

/// Fields carrying an order-2 automorphism x -> x^q over a distinguished subfield.
template <class F>
concept ConjugateField = FiniteField<F> && requires(const F& f, Element a) {
    { f.frobenius(a) } -> std::same_as<Element>;
    { f.base_size() } -> std::convertible_to<u64>;
};

template <FiniteField F>
Element pow(const F& f, Element x, u64 exp) {
    Element result = f.one();
    while (exp) {
        if (exp & 1) result = f.mul(result, x);
        x = f.mul(x, x);
        exp >>= 1;
    }
    return result;
}

namespace detail {

/// Order of x in a cyclic group of the given order, reduced prime by prime.
template <FiniteField F>
u64 order_in_group(const F& f, Element x, u64 group_order, const Factorization& fac) {
    u64 m = group_order;
    for (const auto& term : fac.terms) {
        while (m % term.prime == 0 && pow(f, x, m / term.prime) == f.one()) m /= term.prime;
    }
    return m;
}

}  // namespace detail

template <FiniteField F>
u64 element_order(const F& f, Element x) {
    if (x == f.zero()) throw Error(ErrorCode::ZeroElement, "zero has no multiplicative order");
    return detail::order_in_group(f, x, f.size() - 1, f.group_order_factorization());
}

/// Canonically least generator of the multiplicative group. Fields cache this at construction;
/// this function performs the search from scratch.
template <FiniteField F>
Element find_primitive_element(const F& f) {
    const u64 order = f.size() - 1;
    const Factorization& fac = f.group_order_factorization();
    u64 start = 1;
    // base-field elements encode below Q and never generate
    if constexpr (requires { f.base_size(); }) start = f.base_size();
    for (u64 v = start; v < f.size(); ++v) {
        const Element g{v};
        bool generator = true;
        for (const auto& term : fac.terms) {
            if (pow(f, g, order / term.prime) == f.one()) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw Error(ErrorCode::PreconditionFailed, "no primitive element found");
}

template <FiniteField F>
Element nth_root_of_unity(const F& f, u64 n) {
    if (n == 0 || (f.size() - 1) % n != 0)
        throw Error(ErrorCode::OrderDoesNotDivide, std::to_string(n) + " does not divide " + std::to_string(f.size() - 1));
    return pow(f, f.primitive_element(), (f.size() - 1) / n);
}

template <FiniteField F>
bool is_square(const F& f, Element a) {
    if (a == f.zero() || f.characteristic() == 2) return true;
    return pow(f, a, (f.size() - 1) / 2) == f.one();
}

template <FiniteField F>
Element least_nonsquare(const F& f) {
    if (f.characteristic() == 2) throw Error(ErrorCode::PreconditionFailed, "every element is a square in characteristic 2");
    for (u64 v = 1; v < f.size(); ++v)
        if (!is_square(f, Element{v})) return Element{v};
    throw Error(ErrorCode::PreconditionFailed, "no non-square found");
}

/// Absolute trace to GF(2); characteristic 2 only.
template <FiniteField F>
bool absolute_trace_is_one(const F& f, Element a) {
    Element acc = f.zero();
    Element term = a;
    for (u64 s = 1; s < f.size(); s *= 2) {
        acc = f.add(acc, term);
        term = f.mul(term, term);
    }
    return acc == f.one();
}

/// Square root returning the canonically least of the two roots, or nothing for a non-square.
template <FiniteField F>
std::optional<Element> sqrt_in_field(const F& f, Element a) {
    if (a == f.zero()) return f.zero();
    const u64 q = f.size();
    if (f.characteristic() == 2) return pow(f, a, q / 2);
    if (!is_square(f, a)) return std::nullopt;

    Element root;
    if (q % 4 == 3) {
        root = pow(f, a, (q + 1) / 4);
    } else {
        // Tonelli-Shanks with q - 1 = 2^s * m.
        u64 m = q - 1;
        unsigned s = 0;
        while (m % 2 == 0) {
            m /= 2;
            ++s;
        }
        Element c = pow(f, least_nonsquare(f), m);
        Element x = pow(f, a, (m + 1) / 2);
        Element b = pow(f, a, m);
        unsigned e = s;
        while (b != f.one()) {
            unsigned i = 0;
            Element b2 = b;
            while (b2 != f.one()) {
                b2 = f.mul(b2, b2);
                ++i;
            }
            Element w = c;
            for (unsigned j = 0; j + i + 1 < e; ++j) w = f.mul(w, w);
            x = f.mul(x, w);
            c = f.mul(w, w);
            b = f.mul(b, c);
            e = i;
        }
        root = x;
    }
    const Element other = f.neg(root);
    return other < root ? other : root;
}

namespace detail {

/// Discrete log/antilog tables over encodings, built from a raw multiplication.
struct LogTables {
    std::vector<std::uint32_t> exp;  // length 2(q-1)
    std::vector<std::uint32_t> log;  // length q, log[0] unused

    template <class Mul>
    static LogTables build(u64 q, Element generator, Mul&& raw_mul) {
        LogTables t;
        t.exp.resize(2 * (q - 1));
        t.log.assign(q, 0);
        Element cur{1};
        for (u64 i = 0; i < q - 1; ++i) {
            t.exp[i] = static_cast<std::uint32_t>(cur.value);
            t.exp[i + q - 1] = static_cast<std::uint32_t>(cur.value);
            t.log[cur.value] = static_cast<std::uint32_t>(i);
            cur = raw_mul(cur, generator);
        }
        return t;
    }
};

}  // namespace detail

}  // namespace selfdual

#endif
