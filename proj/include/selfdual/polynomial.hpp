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

#ifndef SELFDUAL_POLYNOMIAL_HPP
#define SELFDUAL_POLYNOMIAL_HPP

#include <span>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field_algorithms.hpp"

namespace selfdual::poly {

// Coefficient vectors over a field, constant term first.
using Poly = std::vector<Element>;

template <FiniteField F>
void trim(const F& f, Poly& a) {
    while (!a.empty() && a.back() == f.zero()) a.pop_back();
}

template <FiniteField F>
Poly mul(const F& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    trim(f, r);
    return r;
}

/// Quotient and remainder; the divisor must be nonzero.
template <FiniteField F>
std::pair<Poly, Poly> divmod(const F& f, Poly a, Poly b) {
    trim(f, a);
    trim(f, b);
    if (b.empty()) throw Error(ErrorCode::MalformedInput, "division by the zero polynomial");
    if (a.size() < b.size()) return {Poly{}, a};
    const Element lead_inv = f.inv(b.back());
    Poly quot(a.size() - b.size() + 1, f.zero());
    for (std::size_t k = a.size(); k-- >= b.size();) {
        const Element c = f.mul(a[k], lead_inv);
        const std::size_t shift = k - (b.size() - 1);
        quot[shift] = c;
        if (c == f.zero()) continue;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        if (k == 0) break;
    }
    trim(f, a);
    trim(f, quot);
    return {quot, a};
}

template <FiniteField F>
Element evaluate(const F& f, std::span<const Element> a, Element x) {
    Element acc = f.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

/// x^n - lambda
template <FiniteField F>
Poly binomial(const F& f, std::size_t n, Element lambda) {
    Poly p(n + 1, f.zero());
    p[0] = f.neg(lambda);
    p[n] = f.add(p[n], f.one());
    trim(f, p);
    return p;
}

}  // namespace selfdual::poly

#endif
