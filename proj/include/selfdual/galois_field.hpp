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

#ifndef SELFDUAL_GALOIS_FIELD_HPP
#define SELFDUAL_GALOIS_FIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "field_algorithms.hpp"
#include "number_theory.hpp"

namespace selfdual {

namespace detail::zp {

// Dense polynomials over Z/p, constant term first, no trailing zeros (zero polynomial is empty).
using Poly = std::vector<u64>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Poly mod(Poly a, const Poly& f, u64 p) {
    trim(a);
    const std::size_t d = f.size() - 1;
    const u64 lead_inv = pow_mod(f.back(), p - 2, p);
    while (a.size() > d) {
        const u64 c = mul_mod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - d;
        for (std::size_t i = 0; i <= d; ++i) a[shift + i] = (a[shift + i] + p - mul_mod(c, f[i], p)) % p;
        trim(a);
    }
    return a;
}

inline Poly mul_mod_poly(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    return mod(std::move(r), f, p);
}

inline Poly pow_mod_poly(Poly base, u64 e, const Poly& f, u64 p) {
    Poly result{1};
    base = mod(std::move(base), f, p);
    while (e) {
        if (e & 1) result = mul_mod_poly(result, base, f, p);
        base = mul_mod_poly(base, base, f, p);
        e >>= 1;
    }
    return result;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin's test: f of degree t is irreducible iff x^(p^t) = x mod f and
/// gcd(x^(p^(t/l)) - x, f) = 1 for every prime l | t.
inline bool is_irreducible(const Poly& f, u64 p) {
    const std::size_t t = f.size() - 1;
    if (t == 0) return false;
    if (t == 1) return true;
    std::vector<Poly> frob(t + 1);
    frob[0] = mod(Poly{0, 1}, f, p);
    for (std::size_t i = 1; i <= t; ++i) frob[i] = pow_mod_poly(frob[i - 1], p, f, p);
    const Poly x = mod(Poly{0, 1}, f, p);
    if (frob[t] != x) return false;
    for (u64 l : factorize_unguarded(t).primes()) {
        const Poly g = gcd(f, sub(frob[t / l], x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace detail::zp

/// GF(p^t) in a polynomial basis over GF(p), elements encoded as sum c_i p^i.
///
/// Copies share one immutable implementation. Fields up to 2^20 elements use log/antilog tables;
/// larger ones multiply polynomials directly.
namespace detail {

/// Division by a fixed d < 2^32 of numerators below 2^32, by a 64-bit reciprocal (Lemire et al.).
struct FastDivider {
    u64 d = 1, m = 0;
    FastDivider() = default;
    explicit FastDivider(u64 divisor) : d(divisor), m(~u64{0} / divisor + 1) {}
    u64 div(u64 a) const noexcept { return static_cast<u64>((static_cast<unsigned __int128>(m) * a) >> 64); }
    u64 mod(u64 a) const noexcept { return static_cast<u64>((static_cast<unsigned __int128>(m * a) * d) >> 64); }
};

}  // namespace detail

class GaloisField {
   public:
    static constexpr u64 kMaxOrder = u64{1} << 31;
    static constexpr u64 kTableLimit = u64{1} << 20;

    /// Field with an explicitly given monic irreducible modulus (constant term first, length t+1).
    GaloisField(u64 p, std::vector<u64> modulus) {
        if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        if (modulus.size() < 2) throw Error(ErrorCode::DegreeZero, "modulus must have degree at least 1");
        if (modulus.back() != 1) throw Error(ErrorCode::MalformedInput, "modulus must be monic");
        for (u64 c : modulus)
            if (c >= p) throw Error(ErrorCode::MalformedInput, "modulus coefficient out of range");
        const unsigned t = static_cast<unsigned>(modulus.size() - 1);
        const u64 q = detail::checked_pow(p, t, kMaxOrder);
        if (q == 0) throw Error(ErrorCode::SizeGuardExceeded, "p^t exceeds 2^31");
        if (!detail::zp::is_irreducible(modulus, p)) throw Error(ErrorCode::NotIrreducible, "modulus is reducible");
        init(p, std::move(modulus), q);
    }

    u64 characteristic() const noexcept { return impl_->p; }
    unsigned degree() const noexcept { return impl_->t; }
    u64 size() const noexcept { return impl_->q; }
    const std::vector<u64>& modulus() const noexcept { return impl_->modulus; }

    Element zero() const noexcept { return Element{0}; }
    Element one() const noexcept { return Element{1}; }
    bool contains(Element a) const noexcept { return a.value < impl_->q; }

    /// Image of an integer under Z -> GF(p).
    Element from_integer(i64 z) const noexcept { return Element{detail::mod_floor(z, impl_->p)}; }

    Element from_coefficients(std::span<const u64> coeffs) const {
        if (coeffs.size() != impl_->t) throw Error(ErrorCode::MalformedInput, "element needs exactly t coefficients");
        u64 v = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i] >= impl_->p) throw Error(ErrorCode::MalformedInput, "coefficient out of range");
            v = v * impl_->p + coeffs[i];
        }
        return Element{v};
    }

    std::vector<u64> coefficients(Element a) const {
        std::vector<u64> c(impl_->t);
        for (auto& x : c) {
            x = a.value % impl_->p;
            a.value /= impl_->p;
        }
        return c;
    }

    Element add(Element a, Element b) const noexcept {
        const u64 p = impl_->p;
        if (impl_->t == 1) return Element{a.value + b.value >= p ? a.value + b.value - p : a.value + b.value};
        if (p == 2) return Element{a.value ^ b.value};
        const auto& fd = impl_->divider;
        u64 r = 0, scale = 1;
        for (unsigned i = 0; i < impl_->t; ++i) {
            const u64 qa = fd.div(a.value), qb = fd.div(b.value);
            u64 s = (a.value - qa * p) + (b.value - qb * p);
            if (s >= p) s -= p;
            r += s * scale;
            scale *= p;
            a.value = qa;
            b.value = qb;
        }
        return Element{r};
    }

    Element neg(Element a) const noexcept {
        const u64 p = impl_->p;
        if (p == 2) return a;
        if (impl_->t == 1) return Element{a.value == 0 ? 0 : p - a.value};
        const auto& fd = impl_->divider;
        u64 r = 0, scale = 1;
        for (unsigned i = 0; i < impl_->t; ++i) {
            const u64 q = fd.div(a.value);
            const u64 d = a.value - q * p;
            r += (d == 0 ? 0 : p - d) * scale;
            scale *= p;
            a.value = q;
        }
        return Element{r};
    }

    Element sub(Element a, Element b) const noexcept {
        const u64 p = impl_->p;
        if (p == 2) return Element{a.value ^ b.value};
        if (impl_->t == 1) return Element{a.value >= b.value ? a.value - b.value : a.value + p - b.value};
        const auto& fd = impl_->divider;
        u64 r = 0, scale = 1;
        for (unsigned i = 0; i < impl_->t; ++i) {
            const u64 qa = fd.div(a.value), qb = fd.div(b.value);
            const u64 da = a.value - qa * p, db = b.value - qb * p;
            r += (da >= db ? da - db : da + p - db) * scale;
            scale *= p;
            a.value = qa;
            b.value = qb;
        }
        return Element{r};
    }

    Element mul(Element a, Element b) const noexcept {
        if (a.value == 0 || b.value == 0) return zero();
        if (!impl_->tables.exp.empty()) {
            const auto& tb = impl_->tables;
            return Element{tb.exp[tb.log[a.value] + tb.log[b.value]]};
        }
        return raw_mul(*impl_, a, b);
    }

    Element inv(Element a) const {
        if (a.value == 0) throw Error(ErrorCode::ZeroElement, "inverse of zero");
        if (!impl_->tables.exp.empty()) {
            const auto& tb = impl_->tables;
            return Element{tb.exp[(impl_->q - 1 - tb.log[a.value]) % (impl_->q - 1)]};
        }
        if (impl_->t == 1) return Element{detail::pow_mod(a.value, impl_->p - 2, impl_->p)};
        return raw_inv(*impl_, a);
    }

    Element primitive_element() const noexcept { return impl_->primitive; }
    const Factorization& group_order_factorization() const noexcept { return impl_->group_factorization; }

    friend bool operator==(const GaloisField& a, const GaloisField& b) noexcept {
        return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
    }

   private:
    struct Impl {
        u64 p = 0;
        unsigned t = 0;
        u64 q = 0;
        std::vector<u64> modulus;
        std::vector<u64> neg_modulus;
        detail::FastDivider divider;
        bool small_sums = false;
        Factorization group_factorization;
        Element primitive;
        detail::LogTables tables;
    };

    explicit GaloisField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    // For t > 1, p^2 <= 2^31, so unreduced sums of at most 2t products stay far below 2^64; when
    // they also stay below 2^32 (small_sums) the reciprocal replaces the hardware remainder.
    static Element raw_mul(const Impl& f, Element a, Element b) noexcept {
        const u64 p = f.p;
        if (f.t == 1) return Element{a.value * b.value % p};
        const unsigned t = f.t;
        const auto& fd = f.divider;
        const auto reduce = [&](u64 v) { return f.small_sums ? fd.mod(v) : v % p; };
        std::array<u64, 32> x{}, y{};
        std::array<u64, 64> r{};
        for (unsigned i = 0; i < t; ++i) {
            const u64 qa = fd.div(a.value), qb = fd.div(b.value);
            x[i] = a.value - qa * p;
            y[i] = b.value - qb * p;
            a.value = qa;
            b.value = qb;
        }
        for (unsigned i = 0; i < t; ++i) {
            if (x[i] == 0) continue;
            for (unsigned j = 0; j < t; ++j) r[i + j] += x[i] * y[j];
        }
        // x^t = sum (p - m_i) x^i
        for (unsigned k = 2 * t - 2; k >= t; --k) {
            const u64 c = reduce(r[k]);
            if (c == 0) continue;
            for (unsigned i = 0; i < t; ++i) r[k - t + i] += c * f.neg_modulus[i];
        }
        u64 v = 0;
        for (unsigned i = t; i-- > 0;) v = v * p + reduce(r[i]);
        return Element{v};
    }

    /// Inverse by the extended Euclidean algorithm on coefficient arrays.
    static Element raw_inv(const Impl& f, Element a) {
        const u64 p = f.p;
        const auto& fd = f.divider;
        using Coeffs = std::array<u64, 33>;
        // degree -1 marks the zero polynomial
        Coeffs r0{}, r1{}, s0{}, s1{};
        int d0 = static_cast<int>(f.t), d1 = -1, e0 = -1, e1 = 0;
        for (unsigned i = 0; i <= f.t; ++i) r0[i] = f.modulus[i];
        for (unsigned i = 0; i < f.t; ++i) {
            const u64 q = fd.div(a.value);
            r1[i] = a.value - q * p;
            if (r1[i] != 0) d1 = static_cast<int>(i);
            a.value = q;
        }
        s1[0] = 1;
        const auto inv_mod = [&](u64 c) { return detail::pow_mod(c, p - 2, p); };
        while (d1 >= 0) {
            // r0 -= c x^shift r1 and s0 -= c x^shift s1 until deg r0 < deg r1
            const u64 lead_inv = inv_mod(r1[static_cast<unsigned>(d1)]);
            while (d0 >= d1) {
                const unsigned shift = static_cast<unsigned>(d0 - d1);
                const u64 c = fd.mod(r0[static_cast<unsigned>(d0)] * lead_inv);
                const u64 nc = p - c;
                for (int i = 0; i <= d1; ++i) r0[shift + i] = fd.mod(r0[shift + i] + nc * r1[i]);
                for (int i = 0; i <= e1; ++i) s0[shift + i] = fd.mod(s0[shift + i] + nc * s1[i]);
                e0 = std::max(e0, e1 + static_cast<int>(shift));
                while (d0 >= 0 && r0[static_cast<unsigned>(d0)] == 0) --d0;
            }
            while (e0 >= 0 && s0[static_cast<unsigned>(e0)] == 0) --e0;
            std::swap(r0, r1);
            std::swap(d0, d1);
            std::swap(s0, s1);
            std::swap(e0, e1);
        }
        // r0 is a nonzero constant
        const u64 scale = inv_mod(r0[0]);
        u64 v = 0;
        for (int i = std::min(e0, static_cast<int>(f.t) - 1); i >= 0; --i) v = v * p + fd.mod(s0[i] * scale);
        return Element{v};
    }

    void init(u64 p, std::vector<u64> modulus, u64 q) {
        auto impl = std::make_shared<Impl>();
        impl->p = p;
        impl->t = static_cast<unsigned>(modulus.size() - 1);
        impl->q = q;
        impl->modulus = std::move(modulus);
        for (u64 c : impl->modulus) impl->neg_modulus.push_back((p - c) % p);
        impl->divider = detail::FastDivider(p);
        impl->small_sums = (p - 1) * (p - 1) * 2 * impl->t < (u64{1} << 32);
        impl->group_factorization = q > 2 ? detail::factorize_unguarded(q - 1) : Factorization{};
        const GaloisField bootstrap(impl);
        impl->primitive = find_primitive_element(bootstrap);
        if (q <= kTableLimit && q > 2) {
            const Impl& raw = *impl;
            impl->tables =
                detail::LogTables::build(q, impl->primitive, [&raw](Element a, Element b) { return raw_mul(raw, a, b); });
        }
        impl_ = std::move(impl);
    }

    std::shared_ptr<const Impl> impl_;

    friend GaloisField make_field(u64 p, unsigned t);
};

/// GF(p^t) with the canonical modulus: the monic irreducible of degree t whose lower coefficients
/// have the least encoding sum c_i p^i. For t = 1 this is the polynomial x.
inline GaloisField make_field(u64 p, unsigned t) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (t == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be positive");
    const u64 q = detail::checked_pow(p, t, GaloisField::kMaxOrder);
    if (q == 0) throw Error(ErrorCode::SizeGuardExceeded, "p^t exceeds 2^31");
    for (u64 e = 0; e < q; ++e) {
        if (t > 1 && e % p == 0) continue;  // divisible by x
        std::vector<u64> m(t + 1);
        u64 v = e;
        for (unsigned i = 0; i < t; ++i) {
            m[i] = v % p;
            v /= p;
        }
        m[t] = 1;
        if (!detail::zp::is_irreducible(m, p)) continue;
        GaloisField f(std::shared_ptr<const GaloisField::Impl>{});
        f.init(p, std::move(m), q);
        return f;
    }
    throw Error(ErrorCode::NotIrreducible, "no irreducible polynomial found");
}

}  // namespace selfdual

#endif
