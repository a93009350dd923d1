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

#ifndef SELFDUAL_CONSTRUCTIONS_HPP
#define SELFDUAL_CONSTRUCTIONS_HPP

#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codes.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "galois_field.hpp"
#include "number_theory.hpp"
#include "quadratic_extension.hpp"

namespace selfdual {

enum class Construction {
    EuclideanDuadic,   // extended duadic code over GF(q), T = {1..(n-1)/2}
    GrsHermitian,      // generalized Reed-Solomon code over GF(q^2), points in GF(q)
    Constacyclic,      // lambda-constacyclic code over GF(q^2), T = {1 + r j}
    Negacyclic,        // the r = 2 case of the above
    HermitianDuadic,   // extended duadic code over GF(q^2), n | q - 1
    HermitianLength6,  // extended duadic code over GF(q^2), n = 5, T = {2, 3}
};

constexpr std::string_view to_string(Construction c) noexcept {
    switch (c) {
        case Construction::EuclideanDuadic: return "euclidean-duadic";
        case Construction::GrsHermitian: return "grs-hermitian";
        case Construction::Constacyclic: return "constacyclic";
        case Construction::Negacyclic: return "negacyclic";
        case Construction::HermitianDuadic: return "hermitian-duadic";
        case Construction::HermitianLength6: return "hermitian-n5";
    }
    return "unknown";
}

enum class VChoice { Norm, Square };

struct ConstructionOptions {
    Guards guards{};
    MdsMode mds_mode = MdsMode::Auto;
    VChoice v_choice = VChoice::Norm;
    std::optional<std::vector<Element>> points;  // GRS evaluation points, base-field encodings
};

/// A code together with how it was built and the checks it passed.
template <FiniteField F>
struct ConstructionResult {
    Construction construction;
    LinearCode<F> code;
    std::optional<Element> gamma;
    std::optional<CyclicSpec<F>> spec;
    std::optional<SplittingReport> splitting;
    std::optional<u64> bch_bound;  // of the underlying (consta)cyclic code
    VerificationReport report;
    bool dispatched = false;
    // GRS only
    std::vector<Element> points, u, v;
};

namespace detail {

inline u64 field_order(u64 p, unsigned t) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (t == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be positive");
    const u64 q = checked_pow(p, t, GaloisField::kMaxOrder);
    if (q == 0) throw Error(ErrorCode::SizeGuardExceeded, "p^t exceeds 2^31");
    return q;
}

[[noreturn]] inline void precondition(const std::string& what) { throw Error(ErrorCode::PreconditionFailed, what); }

inline unsigned two_adic_valuation(u64 x) {
    unsigned a = 0;
    while (x != 0 && x % 2 == 0) {
        x /= 2;
        ++a;
    }
    return a;
}

inline std::vector<u64> range_set(u64 from, u64 to) {
    std::vector<u64> v;
    for (u64 i = from; i <= to; ++i) v.push_back(i);
    return v;
}

inline void require_certified(const MdsVerdict& mds) {
    if (mds.certified() || mds.status == MdsStatus::MonteCarlo) return;
    throw Error(ErrorCode::VerificationFailed, "MDS check " + std::string(to_string(mds.status)) + " via " + mds.method);
}

}  // namespace detail

/// Least gamma with 1 + gamma^2 n = 0.
template <FiniteField F>
Element solve_gamma_euclidean(const F& field, u64 n) {
    const Element nn = field.from_integer(static_cast<i64>(n % field.characteristic()));
    if (nn == field.zero()) throw Error(ErrorCode::CharDividesN, "n is zero in the field");
    const Element target = field.neg(field.inv(nn));
    auto root = sqrt_in_field(field, target);
    if (!root) throw Error(ErrorCode::NoSolution, "-1/n is not a square");
    return *root;
}

/// gamma with 1 + gamma^(Q+1) n = 0, from the norm equation.
template <FiniteField Base>
Element solve_gamma_hermitian(const QuadraticExtension<Base>& ext, u64 n) {
    const Base& f = ext.base();
    const Element nn = f.from_integer(static_cast<i64>(n % f.characteristic()));
    if (nn == f.zero()) throw Error(ErrorCode::CharDividesN, "n is zero in the field");
    return solve_norm(ext, f.neg(f.inv(nn)));
}

/// Extension of the duadic code with T = {1, ..., (n-1)/2} by the root of 1 + gamma^2 n = 0:
/// an [n+1, (n+1)/2, (n+3)/2] Euclidean self-dual code over GF(p^t).
inline ConstructionResult<GaloisField> build_euclidean_duadic_extended(u64 p, unsigned t, u64 n,
                                                                       const ConstructionOptions& opt = {}) {
    const u64 q = detail::field_order(p, t);
    if (n % 2 == 0) detail::precondition("n must be odd");
    if (n < 3) detail::precondition("n must be at least 3");
    if (std::gcd(n, p) != 1) throw Error(ErrorCode::NotCoprime, "gcd(n, q) != 1");
    if ((q - 1) % n != 0) detail::precondition("n must divide q - 1");

    const GaloisField field = make_field(p, t);
    const DefiningSet set = DefiningSet::cyclic(n, detail::range_set(1, (n - 1) / 2));
    auto spec = generator_from_defining_set(field, n, field.one(), set);
    const LinearCode<GaloisField> odd_like = cyclic_generator_matrix(field, spec);

    Element gamma;
    try {
        gamma = solve_gamma_euclidean(field, n);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoSolution)
            throw Error(ErrorCode::NoGamma, "1 + gamma^2 n = 0 has no solution in GF(q)");
        throw;
    }

    auto splitting = check_duadic_splitting(set, -1, q);
    if (!splitting.is_splitting) throw Error(ErrorCode::SplittingFailed, "mu_{-1} does not split Z_n");
    const u64 bch = consecutive_run(set) + 1;
    if (bch < (n + 1) / 2) throw Error(ErrorCode::VerificationFailed, "odd-like code below its designed distance");

    LinearCode<GaloisField> code = extend_code(odd_like, gamma);
    auto report = verify_code(code, opt.mds_mode, opt.guards, BchCertificate{set, true});
    if (!report.euclidean_self_dual) throw Error(ErrorCode::VerificationFailed, "extended code is not Euclidean self-dual");
    detail::require_certified(report.mds);
    return ConstructionResult<GaloisField>{.construction = Construction::EuclideanDuadic,
                                           .code = std::move(code),
                                           .gamma = gamma,
                                           .spec = std::move(spec),
                                           .splitting = std::move(splitting),
                                           .bch_bound = bch,
                                           .report = std::move(report)};
}

/// GRS_{n/2}(alpha, v) over GF(q^2) with alpha_i in GF(q) and v_i^(q+1) = u_i (or v_i^2 = u_i with
/// VChoice::Square), u_i = prod_{j != i} (alpha_i - alpha_j)^-1.
inline ConstructionResult<Tower> build_grs_hermitian(u64 p, unsigned t, u64 n, const ConstructionOptions& opt = {}) {
    const u64 q = detail::field_order(p, t);
    if (n % 2 != 0) throw Error(ErrorCode::OddLength, "length must be even");
    if (n < 2) detail::precondition("length must be at least 2");
    if (n > q) throw Error(ErrorCode::TooLong, "length exceeds q");

    const GaloisField base = make_field(p, t);
    const Tower ext(base);

    std::vector<Element> points;
    if (opt.points) {
        points = *opt.points;
        if (points.size() != n) detail::precondition("need exactly n evaluation points");
        for (auto a : points)
            if (a.value >= q) throw Error(ErrorCode::MalformedInput, "evaluation point outside GF(q)");
        auto sorted = points;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorCode::DuplicatePoints, "evaluation points must be distinct");
    } else {
        for (u64 i = 0; i < n; ++i) points.push_back(Element{i});
    }

    std::vector<Element> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        Element prod = base.one();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod = base.mul(prod, base.sub(points[i], points[j]));
        u[i] = base.inv(prod);
        if (opt.v_choice == VChoice::Norm) {
            v[i] = solve_norm(ext, u[i]);
        } else {
            auto s = sqrt_in_field(ext, u[i]);
            if (!s) throw Error(ErrorCode::NoSolution, "u_i has no square root in GF(q^2)");
            v[i] = *s;
        }
    }

    const std::size_t k = n / 2;
    Matrix g(k, n);
    for (std::size_t j = 0; j < n; ++j) {
        Element power = ext.one();
        for (std::size_t l = 0; l < k; ++l) {
            g(l, j) = ext.mul(v[j], power);
            power = ext.mul(power, points[j]);
        }
    }
    LinearCode<Tower> code(ext, std::move(g));
    auto report = verify_code(code, opt.mds_mode, opt.guards);
    if (!report.hermitian_self_dual.value_or(false))
        throw Error(ErrorCode::VerificationFailed, "GRS code is not Hermitian self-dual");
    detail::require_certified(report.mds);
    if (report.mds.status == MdsStatus::MonteCarlo) report.mds.status = MdsStatus::CertifiedStructural;
    return ConstructionResult<Tower>{.construction = Construction::GrsHermitian,
                                     .code = std::move(code),
                                     .report = std::move(report),
                                     .points = std::move(points),
                                     .u = std::move(u),
                                     .v = std::move(v)};
}

/// lambda-constacyclic code over GF(q^2) with ord(lambda) = r and T = {1 + r j : j < n/2}.
inline ConstructionResult<Tower> build_constacyclic_hermitian(u64 p, unsigned t, u64 n, u64 r,
                                                              const ConstructionOptions& opt = {}) {
    const u64 q = detail::field_order(p, t);
    const unsigned a = detail::two_adic_valuation(n), b = detail::two_adic_valuation(r);
    if (n == 0 || a == 0) detail::precondition("n = 2^a n' needs a > 0");
    if (r == 0 || b == 0) detail::precondition("r = 2^b r' needs b > 0");
    if (std::gcd(n, p) != 1) detail::precondition("gcd(n, q) = 1 fails");
    const u64 rn = r * n;
    if ((q * q - 1) % rn != 0) detail::precondition("r n must divide q^2 - 1");
    if ((2 * (q + 1)) % rn != 0) detail::precondition("r n must divide 2(q + 1)");
    if (a + b >= 63 || (q + 1) % (u64{1} << (a + b)) == 0)
        detail::precondition("q = -1 (mod 2^(a+b)) excluded");

    const GaloisField base = make_field(p, t);
    const Tower ext(base);
    const Element alpha = nth_root_of_unity(ext, rn);
    const Element lambda = pow(ext, alpha, n);
    std::vector<u64> exps;
    for (u64 j = 0; j < n / 2; ++j) exps.push_back(1 + r * j);
    const DefiningSet set = DefiningSet::constacyclic(r, n, exps);
    auto spec = generator_from_defining_set(ext, n, lambda, set);

    auto splitting = check_duadic_splitting(set, -static_cast<i64>(q), q * q);
    if (!splitting.is_splitting) throw Error(ErrorCode::SplittingFailed, "(-q)T meets T");

    LinearCode<Tower> code = cyclic_generator_matrix(ext, spec);
    const u64 bch = consecutive_run(set) + 1;
    auto report = verify_code(code, opt.mds_mode, opt.guards, BchCertificate{set, false});
    if (!report.hermitian_self_dual.value_or(false))
        throw Error(ErrorCode::VerificationFailed, "constacyclic code is not Hermitian self-dual");
    detail::require_certified(report.mds);
    return ConstructionResult<Tower>{.construction = Construction::Constacyclic,
                                     .code = std::move(code),
                                     .spec = std::move(spec),
                                     .splitting = std::move(splitting),
                                     .bch_bound = bch,
                                     .report = std::move(report)};
}

/// Negacyclic special case, under q = -1 (mod 2^a n') and q = 2^a - 1 (mod 2^(a+1)).
inline ConstructionResult<Tower> build_negacyclic_hermitian(u64 p, unsigned t, u64 n, const ConstructionOptions& opt = {}) {
    const u64 q = detail::field_order(p, t);
    const unsigned a = detail::two_adic_valuation(n);
    if (n == 0 || a == 0) detail::precondition("n = 2^a n' needs a > 0");
    if (a >= 62) detail::precondition("n too large");
    if ((q + 1) % n != 0) detail::precondition("q = -1 (mod 2^a n'') fails for every odd multiple n'' of n'");
    const u64 m = u64{1} << (a + 1);
    if (q % m != (u64{1} << a) - 1) detail::precondition("q = 2^a - 1 (mod 2^(a+1)) fails");
    auto res = build_constacyclic_hermitian(p, t, n, 2, opt);
    res.construction = Construction::Negacyclic;
    return res;
}

namespace detail {

/// Shared tail of the two Hermitian extended-duadic constructions.
inline ConstructionResult<Tower> hermitian_extended(Construction tag, u64 p, unsigned t, u64 n, const DefiningSet& set,
                                                    const ConstructionOptions& opt) {
    const u64 q = field_order(p, t);
    const GaloisField base = make_field(p, t);
    const Tower ext(base);
    auto splitting = check_duadic_splitting(set, -static_cast<i64>(q), q * q);
    if (!splitting.is_splitting) throw Error(ErrorCode::SplittingFailed, "mu_{-q} does not give a splitting");
    auto spec = generator_from_defining_set(ext, n, ext.one(), set);
    const LinearCode<Tower> odd_like = cyclic_generator_matrix(ext, spec);
    const Element gamma = solve_gamma_hermitian(ext, n);
    LinearCode<Tower> code = extend_code(odd_like, gamma);
    const u64 bch = consecutive_run(set) + 1;
    auto report = verify_code(code, opt.mds_mode, opt.guards, BchCertificate{set, true});
    if (!report.hermitian_self_dual.value_or(false))
        throw Error(ErrorCode::VerificationFailed, "extended code is not Hermitian self-dual");
    require_certified(report.mds);
    return ConstructionResult<Tower>{.construction = tag,
                                     .code = std::move(code),
                                     .gamma = gamma,
                                     .spec = std::move(spec),
                                     .splitting = std::move(splitting),
                                     .bch_bound = bch,
                                     .report = std::move(report)};
}

}  // namespace detail

/// Extended duadic code over GF(q^2) with T = {1..(n-1)/2}, n | q - 1, gcd(n, q + 1) = 1.
inline ConstructionResult<Tower> build_hermitian_extended_duadic(u64 p, unsigned t, u64 n,
                                                                 const ConstructionOptions& opt = {}) {
    const u64 q = detail::field_order(p, t);
    if (n < 3) detail::precondition("n must be at least 3");
    if ((q - 1) % n != 0) detail::precondition("n must divide q - 1");
    if (std::gcd(n, q + 1) != 1) detail::precondition("gcd(n, q + 1) = " + std::to_string(std::gcd(n, q + 1)) + " != 1");
    return detail::hermitian_extended(Construction::HermitianDuadic, p, t, n,
                                      DefiningSet::cyclic(n, detail::range_set(1, (n - 1) / 2)), opt);
}

/// [6, 3, 4] Hermitian self-dual code: n = 5, T = {2, 3}, whenever 5 | q^2 + 1.
inline ConstructionResult<Tower> build_hermitian_n5(u64 p, unsigned t, const ConstructionOptions& opt = {}) {
    const u64 q = detail::field_order(p, t);
    if (q % 2 == 0) detail::precondition("q must be odd");
    if ((q * q + 1) % 5 != 0) detail::precondition("5 does not divide q^2 + 1");
    return detail::hermitian_extended(Construction::HermitianLength6, p, t, 5, DefiningSet::cyclic(5, {2, 3}), opt);
}

/// Tests whether T = {(n+3)/4, ..., (3n-3)/4} is split by mu_{-q} over GF(q^2) for n | q^2 + 1.
inline SplittingReport check_interval_duadic_splitting(u64 p, unsigned t, u64 n) {
    const u64 q = detail::field_order(p, t);
    if (n % 2 == 0) detail::precondition("n must be odd");
    if (n % 4 != 1) detail::precondition("n must be 1 mod 4");
    if ((q * q + 1) % n != 0) detail::precondition("n must divide q^2 + 1");
    const DefiningSet set = DefiningSet::cyclic(n, detail::range_set((n + 3) / 4, (3 * n - 3) / 4));
    return check_duadic_splitting(set, -static_cast<i64>(q), q * q);
}

/// Some MDS Hermitian self-dual code of every even length n <= q + 1: GRS up to q, constacyclic at q + 1.
inline ConstructionResult<Tower> exists_hermitian_dispatch(u64 p, unsigned t, u64 n, const ConstructionOptions& opt = {}) {
    const u64 q = detail::field_order(p, t);
    if (n % 2 != 0 || n == 0) throw Error(ErrorCode::OddLength, "length must be even and positive");
    if (n > q + 1) throw Error(ErrorCode::TooLong, "length exceeds q + 1");
    auto res = n <= q ? build_grs_hermitian(p, t, n, opt) : build_constacyclic_hermitian(p, t, n, 2, opt);
    res.dispatched = true;
    return res;
}

}  // namespace selfdual

#endif
