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

#ifndef SELFDUAL_QUADRATIC_EXTENSION_HPP
#define SELFDUAL_QUADRATIC_EXTENSION_HPP

#include <memory>
#include <string>
#include <utility>

#include "error.hpp"
#include "field_algorithms.hpp"
#include "galois_field.hpp"
#include "number_theory.hpp"

namespace selfdual {

/// GF(Q^2) = Base[y] / (y^2 + c1 y + c0), elements a + b*y encoded as enc(a) + enc(b)*Q.
///
/// The embedding Base -> GF(Q^2) is the identity on encodings, so a base element is simply an
/// encoding below Q. Frobenius is x -> x^Q.
template <FiniteField Base>
class QuadraticExtension {
   public:
    static constexpr u64 kTableLimit = u64{1} << 20;
    static constexpr u64 kDiscreteLogLimit = u64{1} << 20;

    /// Canonical modulus: y^2 - delta with delta the least non-square for odd Q; in
    /// characteristic 2 the least-encoded irreducible y^2 + y + c0.
    explicit QuadraticExtension(Base base) {
        Element c0, c1;
        if (base.characteristic() != 2) {
            c1 = base.zero();
            c0 = base.neg(least_nonsquare(base));
        } else {
            c1 = base.one();
            c0 = base.zero();
            for (u64 v = 1; v < base.size(); ++v) {
                if (absolute_trace_is_one(base, Element{v})) {
                    c0 = Element{v};
                    break;
                }
            }
        }
        init(std::move(base), c0, c1);
    }

    /// Extension by an explicit monic quadratic y^2 + c1 y + c0, checked for irreducibility.
    QuadraticExtension(Base base, Element c0, Element c1) {
        if (c0.value >= base.size() || c1.value >= base.size())
            throw Error(ErrorCode::MalformedInput, "modulus coefficient outside the base field");
        if (!irreducible(base, c0, c1)) throw Error(ErrorCode::NotIrreducible, "quadratic has a root in the base field");
        init(std::move(base), c0, c1);
    }

    static bool irreducible(const Base& base, Element c0, Element c1) {
        if (base.characteristic() != 2) {
            // discriminant c1^2 - 4 c0 must be a non-square
            const Element disc = base.sub(base.mul(c1, c1), base.mul(base.from_integer(4), c0));
            return disc != base.zero() && !is_square(base, disc);
        }
        if (c1 == base.zero()) return false;
        const Element ci = base.inv(c1);
        return absolute_trace_is_one(base, base.mul(c0, base.mul(ci, ci)));
    }

    const Base& base() const noexcept { return impl_->base; }
    u64 base_size() const noexcept { return impl_->q; }
    u64 size() const noexcept { return impl_->q * impl_->q; }
    u64 characteristic() const noexcept { return impl_->base.characteristic(); }
    Element modulus_constant() const noexcept { return impl_->c0; }
    Element modulus_linear() const noexcept { return impl_->c1; }

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }
    Element from_integer(i64 z) const noexcept { return impl_->base.from_integer(z); }
    Element embed(Element a) const noexcept { return a; }
    bool in_base(Element x) const noexcept { return x.value < impl_->q; }
    Element generator() const noexcept { return make(impl_->base.zero(), impl_->base.one()); }

    Element make(Element a, Element b) const noexcept { return Element{a.value + b.value * impl_->q}; }
    std::pair<Element, Element> components(Element x) const noexcept {
        return {Element{x.value % impl_->q}, Element{x.value / impl_->q}};
    }

    Element add(Element x, Element y) const noexcept {
        const auto [a, b] = components(x);
        const auto [c, d] = components(y);
        const Base& f = impl_->base;
        return make(f.add(a, c), f.add(b, d));
    }
    Element neg(Element x) const noexcept {
        const auto [a, b] = components(x);
        return make(impl_->base.neg(a), impl_->base.neg(b));
    }
    Element sub(Element x, Element y) const noexcept { return add(x, neg(y)); }

    Element mul(Element x, Element y) const noexcept {
        if (x.value == 0 || y.value == 0) return zero();
        if (!impl_->tables.exp.empty()) {
            const auto& tb = impl_->tables;
            return Element{tb.exp[tb.log[x.value] + tb.log[y.value]]};
        }
        return raw_mul(*impl_, x, y);
    }

    /// x^Q; fixes exactly the embedded base field.
    Element frobenius(Element x) const noexcept {
        const auto [a, b] = components(x);
        const auto [s, t] = components(impl_->frobenius_y);
        const Base& f = impl_->base;
        return make(f.add(a, f.mul(b, s)), f.mul(b, t));
    }

    /// x^(Q+1), always a base element.
    Element norm(Element x) const noexcept { return mul(x, frobenius(x)); }

    Element inv(Element x) const {
        if (x.value == 0) throw Error(ErrorCode::ZeroElement, "inverse of zero");
        if (!impl_->tables.exp.empty()) {
            const auto& tb = impl_->tables;
            const u64 order = size() - 1;
            return Element{tb.exp[(order - tb.log[x.value]) % order]};
        }
        const Element conj = frobenius(x);
        const Element ninv = impl_->base.inv(mul(x, conj));
        const auto [a, b] = components(conj);
        return make(impl_->base.mul(a, ninv), impl_->base.mul(b, ninv));
    }

    Element primitive_element() const noexcept { return impl_->primitive; }
    const Factorization& group_order_factorization() const noexcept { return impl_->group_factorization; }

    friend bool operator==(const QuadraticExtension& a, const QuadraticExtension& b) noexcept {
        return a.impl_ == b.impl_ ||
               (a.impl_->base == b.impl_->base && a.impl_->c0 == b.impl_->c0 && a.impl_->c1 == b.impl_->c1);
    }

   private:
    struct Impl {
        Base base;
        u64 q = 0;
        Element c0, c1;
        Element frobenius_y;
        Factorization group_factorization;
        Element primitive;
        detail::LogTables tables;
    };

    explicit QuadraticExtension(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    static Element raw_mul(const Impl& impl, Element x, Element y) noexcept {
        const Base& f = impl.base;
        const Element a{x.value % impl.q}, b{x.value / impl.q};
        const Element c{y.value % impl.q}, d{y.value / impl.q};
        const Element bd = f.mul(b, d);
        // y^2 = -c1 y - c0
        const Element re = f.sub(f.mul(a, c), f.mul(bd, impl.c0));
        const Element im = f.sub(f.add(f.mul(a, d), f.mul(b, c)), f.mul(bd, impl.c1));
        return Element{re.value + im.value * impl.q};
    }

    void init(Base base, Element c0, Element c1) {
        auto impl = std::make_shared<Impl>(Impl{std::move(base), 0, c0, c1, {}, {}, {}, {}});
        impl->q = impl->base.size();
        const u64 q = impl->q;
        if (q > (u64{1} << 31)) throw Error(ErrorCode::SizeGuardExceeded, "quadratic extension of a field above 2^31");
        impl->group_factorization =
            detail::merge(detail::factorize_unguarded(q - 1), detail::factorize_unguarded(q + 1));
        const QuadraticExtension bootstrap(impl);
        impl->frobenius_y = pow(bootstrap, bootstrap.generator(), q);
        impl->primitive = find_primitive_element(bootstrap);
        if (q * q <= kTableLimit) {
            const Impl& raw = *impl;
            impl->tables = detail::LogTables::build(q * q, impl->primitive,
                                                    [&raw](Element a, Element b) { return raw_mul(raw, a, b); });
        }
        impl_ = std::move(impl);
    }

    std::shared_ptr<const Impl> impl_;
};

using Tower = QuadraticExtension<GaloisField>;

inline Tower quadratic_extension(const GaloisField& base) { return Tower(base); }

template <FiniteField Base>
Element frobenius(const QuadraticExtension<Base>& ext, Element x) {
    return ext.frobenius(x);
}

/// Solves v^(Q+1) = u for a nonzero base element u.
///
/// For Q <= 2^20 the answer is g^e with g the canonical primitive element of the extension and e the
/// least discrete log of u to the base g^(Q+1). Beyond that, odd Q falls back to the least-encoded
/// solution of the norm form a^2 - delta b^2 = u (canonical modulus only).
template <FiniteField Base>
Element solve_norm(const QuadraticExtension<Base>& ext, Element u) {
    const u64 q = ext.base_size();
    if (u == ext.zero()) throw Error(ErrorCode::ZeroElement, "norm equation with u = 0");
    if (!ext.in_base(u)) throw Error(ErrorCode::MalformedInput, "norm target must lie in the base field");
    const Base& f = ext.base();
    if (q <= QuadraticExtension<Base>::kDiscreteLogLimit) {
        const Element g = ext.primitive_element();
        const Element step = ext.norm(g);
        Element cur = ext.one();
        for (u64 e = 0; e < q - 1; ++e) {
            if (cur == u) return pow(ext, g, e);
            cur = f.mul(cur, step);
        }
        throw Error(ErrorCode::PreconditionFailed, "norm map failed to reach u");
    }
    if (f.characteristic() != 2 && ext.modulus_linear() == f.zero()) {
        const Element delta = f.neg(ext.modulus_constant());
        for (u64 bv = 0; bv < q; ++bv) {
            const Element b{bv};
            const Element rhs = f.add(u, f.mul(delta, f.mul(b, b)));
            if (auto a = sqrt_in_field(f, rhs)) return ext.make(*a, b);
        }
    }
    throw Error(ErrorCode::DiscreteLogGuardExceeded, "norm equation above the discrete-log guard");
}

}  // namespace selfdual

#endif
