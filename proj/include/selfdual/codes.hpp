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

#ifndef SELFDUAL_CODES_HPP
#define SELFDUAL_CODES_HPP

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cyclotomic.hpp"
#include "error.hpp"
#include "field_algorithms.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "quadratic_extension.hpp"

namespace selfdual {

/// A k-dimensional subspace of F^n given by a full-rank k x n generator matrix.
template <FiniteField F>
class LinearCode {
   public:
    LinearCode(F field, Matrix generator) : field_(std::move(field)), g_(std::move(generator)) {
        for (std::size_t i = 0; i < g_.rows(); ++i)
            for (auto e : g_.row(i))
                if (e.value >= field_.size()) throw Error(ErrorCode::MalformedInput, "generator entry outside the field");
        if (selfdual::rank(field_, g_) != g_.rows())
            throw Error(ErrorCode::MalformedInput, "generator rows are linearly dependent");
    }

    const F& field() const noexcept { return field_; }
    std::size_t length() const noexcept { return g_.cols(); }
    std::size_t dimension() const noexcept { return g_.rows(); }
    const Matrix& generator() const noexcept { return g_; }
    std::span<const Element> row(std::size_t i) const noexcept { return g_.row(i); }

   private:
    F field_;
    Matrix g_;
};

/// Ideal <g(x)> of F[x]/(x^n - lambda) with g = prod_{i in T} (x - alpha^i), ord(alpha) = r n.
template <FiniteField F>
struct CyclicSpec {
    u64 n = 0;
    Element lambda;
    u64 r = 1;  // multiplicative order of lambda
    DefiningSet defining_set;
    poly::Poly generator;  // constant term first, monic
};

namespace detail {

/// Generator polynomial when every alpha^i lies in K. lambda is a K-encoding.
template <FiniteField K>
poly::Poly split_generator(const K& field, u64 n, Element lambda, const DefiningSet& set) {
    const u64 rn = set.modulus;
    const Element alpha0 = nth_root_of_unity(field, rn);
    // pick alpha = alpha0^j, gcd(j, rn) = 1, with alpha^n = lambda
    std::optional<Element> alpha;
    for (u64 j = 1; j <= rn && !alpha; ++j) {
        if (std::gcd(j, rn) != 1) continue;
        const Element a = pow(field, alpha0, j);
        if (pow(field, a, n) == lambda) alpha = a;
    }
    if (!alpha) throw Error(ErrorCode::RootsNotInField, "no root of x^n - lambda of order r n");
    poly::Poly g{field.one()};
    for (u64 i : set.elements) g = poly::mul(field, g, poly::Poly{field.neg(pow(field, *alpha, i)), field.one()});
    return g;
}

}  // namespace detail

/// Builds the generator polynomial of the (consta)cyclic code with the given defining set.
///
/// Roots normally lie in F itself. When they only live in the quadratic extension of F, the
/// defining set must be closed under multiplication by |F|, and g is computed there and descended.
template <FiniteField F>
CyclicSpec<F> generator_from_defining_set(const F& field, u64 n, Element lambda, const DefiningSet& set) {
    if (std::gcd(n, field.characteristic()) != 1)
        throw Error(ErrorCode::NotCoprime, "length shares a factor with the characteristic");
    const u64 r = element_order(field, lambda);
    if (set.step != r || set.modulus != r * n)
        throw Error(ErrorCode::MalformedInput, "defining set must live modulo ord(lambda) * n");

    CyclicSpec<F> spec{n, lambda, r, set, {}};
    const u64 rn = r * n;
    if ((field.size() - 1) % rn == 0) {
        spec.generator = detail::split_generator(field, n, lambda, set);
    } else {
        const u64 qn = field.size() % rn;
        for (u64 x : set.elements)
            if (!set.contains(detail::mul_mod(x, qn, rn)))
                throw Error(ErrorCode::RootsNotInField, "defining set not closed under the field-size coset");
        if (field.size() > (u64{1} << 31) || (field.size() * field.size() - 1) % rn != 0)
            throw Error(ErrorCode::RootsNotInField, "roots need an extension beyond degree 2");
        const QuadraticExtension<F> lift(field);
        const poly::Poly g = detail::split_generator(lift, n, lambda, set);
        for (auto c : g) {
            if (!lift.in_base(c)) throw Error(ErrorCode::RootsNotInField, "generator coefficient outside the field");
        }
        spec.generator = g;
    }
    const auto [quot, rem] = poly::divmod(field, poly::binomial(field, n, lambda), spec.generator);
    if (!rem.empty()) throw Error(ErrorCode::NotDividing, "generator does not divide x^n - lambda");
    return spec;
}

/// Rows x^i g(x) mod (x^n - lambda) for i < k = n - deg g.
template <FiniteField F>
LinearCode<F> cyclic_generator_matrix(const F& field, const CyclicSpec<F>& spec) {
    const std::size_t n = spec.n;
    const std::size_t deg = spec.generator.size() - 1;
    const std::size_t k = n - deg;
    Matrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j <= deg; ++j) {
            const std::size_t pos = i + j;
            Element c = spec.generator[j];
            if (pos >= n) c = field.mul(c, spec.lambda);  // x^n = lambda
            g(i, pos % n) = field.add(g(i, pos % n), c);
        }
    }
    return LinearCode<F>(field, std::move(g));
}

/// Whether the polynomial of every generator row (first n coordinates) is a multiple of g(x).
template <FiniteField F>
bool rows_in_cyclic_code(const LinearCode<F>& code, const CyclicSpec<F>& spec) {
    const F& f = code.field();
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        const auto row = code.row(i);
        poly::Poly c(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(spec.n));
        if (!poly::divmod(f, std::move(c), spec.generator).second.empty()) return false;
    }
    return true;
}

template <FiniteField F>
Matrix conjugate(const F& f, const Matrix& m) {
    if constexpr (ConjugateField<F>) {
        Matrix out = m;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = f.frobenius(m(i, j));
        return out;
    } else {
        (void)f;
        (void)m;
        throw Error(ErrorCode::NotOverTower, "Hermitian form needs a quadratic extension field");
    }
}

template <FiniteField F>
LinearCode<F> euclidean_dual(const LinearCode<F>& code) {
    return LinearCode<F>(code.field(), null_space(code.field(), code.generator()));
}

template <FiniteField F>
bool is_euclidean_self_dual(const LinearCode<F>& code) {
    if (2 * code.dimension() != code.length()) return false;
    return multiply_transpose(code.field(), code.generator(), code.generator()).is_zero();
}

/// Dual under <x, y> = sum x_i y_i^Q.
template <FiniteField F>
LinearCode<F> hermitian_dual(const LinearCode<F>& code) {
    return LinearCode<F>(code.field(), null_space(code.field(), conjugate(code.field(), code.generator())));
}

template <FiniteField F>
bool is_hermitian_self_dual(const LinearCode<F>& code) {
    const Matrix conj = conjugate(code.field(), code.generator());
    if (2 * code.dimension() != code.length()) return false;
    return multiply_transpose(code.field(), code.generator(), conj).is_zero();
}

/// Appends c_inf = -gamma * sum(c_i) to every generator row.
template <FiniteField F>
LinearCode<F> extend_code(const LinearCode<F>& code, Element gamma) {
    const F& f = code.field();
    Matrix g(code.dimension(), code.length() + 1);
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        Element sum = f.zero();
        for (std::size_t j = 0; j < code.length(); ++j) {
            g(i, j) = code.row(i)[j];
            sum = f.add(sum, g(i, j));
        }
        g(i, code.length()) = f.neg(f.mul(gamma, sum));
    }
    return LinearCode<F>(f, std::move(g));
}

struct Guards {
    u64 max_codewords = 10'000'000;    // hard limit for min_distance_exhaustive
    u64 auto_codewords = 1'000'000;    // automatic tier picks exhaustive distance below this
    u64 max_column_subsets = 1'000'000;
    u64 monte_carlo_trials = 1000;

    /// Reads SELFDUAL_GUARD_OVERRIDE="codewords=N,auto=N,columns=N,trials=N" (any subset).
    static Guards from_environment() {
        Guards g;
        const char* env = std::getenv("SELFDUAL_GUARD_OVERRIDE");
        if (env == nullptr) return g;
        std::istringstream items(env);
        std::string item;
        while (std::getline(items, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = item.substr(0, eq);
            const u64 value = std::strtoull(item.c_str() + eq + 1, nullptr, 10);
            if (key == "codewords") g.max_codewords = value;
            else if (key == "auto") g.auto_codewords = value;
            else if (key == "columns") g.max_column_subsets = value;
            else if (key == "trials") g.monte_carlo_trials = value;
        }
        return g;
    }
};

namespace detail {

/// base^exp, or nothing once it exceeds limit.
inline std::optional<u64> bounded_power(u64 base, u64 exp, u64 limit) {
    u64 v = 1;
    for (u64 i = 0; i < exp; ++i) {
        if (base != 0 && v > limit / base) return std::nullopt;
        v *= base;
    }
    if (v > limit) return std::nullopt;
    return v;
}

inline std::optional<u64> bounded_binomial(u64 n, u64 k, u64 limit) {
    k = std::min(k, n - k);
    u64 v = 1;
    for (u64 i = 1; i <= k; ++i) {
        const unsigned __int128 next = static_cast<unsigned __int128>(v) * (n - k + i) / i;
        if (next > limit) return std::nullopt;
        v = static_cast<u64>(next);
    }
    return v;
}

}  // namespace detail

struct DistanceResult {
    u64 distance;
    std::vector<Element> witness;  // a nonzero codeword of minimum weight
};

/// Exact minimum distance by enumerating every nonzero codeword.
template <FiniteField F>
DistanceResult min_distance_exhaustive(const LinearCode<F>& code, const Guards& guards = {}) {
    const F& f = code.field();
    const std::size_t n = code.length(), k = code.dimension();
    if (k == 0) throw Error(ErrorCode::PreconditionFailed, "the zero code has no nonzero codewords");
    if (!detail::bounded_power(f.size(), k, guards.max_codewords))
        throw Error(ErrorCode::GuardExceeded, "q^k exceeds the codeword guard");

    const u64 q = f.size();
    std::vector<u64> digits(k, 0);
    std::vector<Element> word(n, f.zero());
    DistanceResult best{n + 1, {}};
    // Odometer over message vectors; stepping digit j from e to e+1 adds (e+1 - e) * row_j.
    while (true) {
        std::size_t j = 0;
        while (j < k && digits[j] == q - 1) {
            const Element top{q - 1};
            for (std::size_t c = 0; c < n; ++c) word[c] = f.sub(word[c], f.mul(top, code.row(j)[c]));
            digits[j] = 0;
            ++j;
        }
        if (j == k) break;
        const Element delta = f.sub(Element{digits[j] + 1}, Element{digits[j]});
        for (std::size_t c = 0; c < n; ++c) word[c] = f.add(word[c], f.mul(delta, code.row(j)[c]));
        ++digits[j];
        const u64 w = static_cast<u64>(std::count_if(word.begin(), word.end(), [&](Element e) { return e != f.zero(); }));
        if (w < best.distance) {
            best.distance = w;
            best.witness = word;
        }
    }
    return best;
}

enum class MdsMode { Auto, ExhaustiveDistance, ExhaustiveColumns, MonteCarlo, Bch };
enum class MdsStatus { CertifiedExact, CertifiedBch, CertifiedStructural, MonteCarlo, Refuted, Guarded, Inconclusive };

constexpr std::string_view to_string(MdsStatus s) noexcept {
    switch (s) {
        case MdsStatus::CertifiedExact: return "certified-exact";
        case MdsStatus::CertifiedBch: return "certified-bch";
        case MdsStatus::CertifiedStructural: return "certified-structural";
        case MdsStatus::MonteCarlo: return "monte-carlo";
        case MdsStatus::Refuted: return "refuted";
        case MdsStatus::Guarded: return "guarded";
        case MdsStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

constexpr std::string_view to_string(MdsMode m) noexcept {
    switch (m) {
        case MdsMode::Auto: return "auto";
        case MdsMode::ExhaustiveDistance: return "exhaustive";
        case MdsMode::ExhaustiveColumns: return "columns";
        case MdsMode::MonteCarlo: return "monte-carlo";
        case MdsMode::Bch: return "bch";
    }
    return "unknown";
}

struct MdsVerdict {
    MdsStatus status = MdsStatus::Inconclusive;
    std::string method;
    std::optional<u64> exact_distance;
    std::optional<u64> distance_lower_bound;
    u64 trials = 0, passes = 0;
    std::vector<std::size_t> witness_columns;  // singular k-subset when refuted by columns
    std::vector<Element> witness_word;         // low-weight codeword when refuted by distance
    std::string warning;

    bool certified() const noexcept {
        return status == MdsStatus::CertifiedExact || status == MdsStatus::CertifiedBch ||
               status == MdsStatus::CertifiedStructural;
    }
    bool refuted() const noexcept { return status == MdsStatus::Refuted; }
};

/// Defining set of the (consta)cyclic code the checked code lies in; `extended` marks the code as
/// its extension by a nonzero gamma, which requires a cyclic set.
struct BchCertificate {
    DefiningSet set;
    bool extended = false;
};

/// Lower bound on the minimum distance from consecutive root exponents.
///
/// An extended codeword either has c_inf != 0, adding one to a weight of at least run(T) + 1, or
/// lies in the even-like subcode with defining set T u {0}.
inline u64 bch_distance_bound(const BchCertificate& cert) {
    const u64 plain = consecutive_run(cert.set) + 1;
    if (!cert.extended) return plain;
    if (cert.set.step != 1) throw Error(ErrorCode::NoCyclicStructure, "extension bound needs a cyclic defining set");
    auto with_zero = cert.set.elements;
    with_zero.push_back(0);
    const DefiningSet even = DefiningSet::cyclic(cert.set.modulus, std::move(with_zero));
    return std::min(plain + 1, consecutive_run(even) + 1);
}

namespace detail {

template <FiniteField F>
bool columns_nonsingular(const LinearCode<F>& code, const std::vector<std::size_t>& cols) {
    const std::size_t k = code.dimension();
    Matrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = code.row(i)[cols[j]];
    return rank(code.field(), std::move(sub)) == k;
}

}  // namespace detail

/// MDS verification at the requested strength. Guard overruns yield a Guarded verdict, not an error.
template <FiniteField F>
MdsVerdict mds_check(const LinearCode<F>& code, MdsMode mode, const Guards& guards = {},
                     const std::optional<BchCertificate>& bch = std::nullopt) {
    const F& f = code.field();
    const std::size_t n = code.length(), k = code.dimension();
    const u64 singleton = n - k + 1;
    MdsVerdict v;

    if (mode == MdsMode::Auto) {
        if (k > 0 && detail::bounded_power(f.size(), k, guards.auto_codewords))
            mode = MdsMode::ExhaustiveDistance;
        else if (detail::bounded_binomial(n, k, guards.max_column_subsets))
            mode = MdsMode::ExhaustiveColumns;
        else if (bch)
            mode = MdsMode::Bch;
        else
            mode = MdsMode::MonteCarlo;
    }
    v.method = std::string(to_string(mode));
    if (bch && (!bch->extended || bch->set.step == 1)) v.distance_lower_bound = bch_distance_bound(*bch);

    if (k == 0 || k == n) {
        // zero code and whole space meet the Singleton bound trivially
        v.status = MdsStatus::CertifiedExact;
        v.exact_distance = singleton;
        return v;
    }

    switch (mode) {
        case MdsMode::ExhaustiveDistance: {
            if (!detail::bounded_power(f.size(), k, guards.max_codewords)) {
                v.status = MdsStatus::Guarded;
                v.warning = "q^k exceeds the codeword guard; exhaustive distance skipped";
                return v;
            }
            auto d = min_distance_exhaustive(code, guards);
            v.exact_distance = d.distance;
            if (d.distance == singleton) {
                v.status = MdsStatus::CertifiedExact;
            } else {
                v.status = MdsStatus::Refuted;
                v.witness_word = std::move(d.witness);
            }
            return v;
        }
        case MdsMode::ExhaustiveColumns: {
            if (!detail::bounded_binomial(n, k, guards.max_column_subsets)) {
                v.status = MdsStatus::Guarded;
                v.warning = "C(n,k) exceeds the column-subset guard; exhaustive columns skipped";
                return v;
            }
            std::vector<std::size_t> cols(k);
            std::iota(cols.begin(), cols.end(), 0);
            while (true) {
                if (!detail::columns_nonsingular(code, cols)) {
                    v.status = MdsStatus::Refuted;
                    v.witness_columns = cols;
                    return v;
                }
                std::size_t i = k;
                while (i > 0 && cols[i - 1] == n - k + (i - 1)) --i;
                if (i == 0) break;
                ++cols[i - 1];
                for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
            }
            v.status = MdsStatus::CertifiedExact;
            v.exact_distance = singleton;
            return v;
        }
        case MdsMode::MonteCarlo: {
            std::mt19937_64 rng(0x5eedULL ^ (u64{n} * 1000003ULL) ^ (u64{k} << 32) ^ (f.size() * 0x9e3779b97f4a7c15ULL));
            std::vector<std::size_t> perm(n);
            v.trials = guards.monte_carlo_trials;
            for (u64 t = 0; t < v.trials; ++t) {
                std::iota(perm.begin(), perm.end(), 0);
                for (std::size_t i = 0; i < k; ++i) std::swap(perm[i], perm[i + rng() % (n - i)]);
                std::vector<std::size_t> cols(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
                std::sort(cols.begin(), cols.end());
                if (!detail::columns_nonsingular(code, cols)) {
                    v.status = MdsStatus::Refuted;
                    v.witness_columns = cols;
                    return v;
                }
                ++v.passes;
            }
            v.status = MdsStatus::MonteCarlo;
            return v;
        }
        case MdsMode::Bch: {
            if (!bch) throw Error(ErrorCode::NoCyclicStructure, "bch mode needs a defining set");
            const u64 bound = bch_distance_bound(*bch);
            v.distance_lower_bound = bound;
            if (bound >= singleton) {
                v.status = MdsStatus::CertifiedBch;
                v.exact_distance = singleton;
            } else {
                v.status = MdsStatus::Inconclusive;
                v.warning = "BCH bound below the Singleton bound";
            }
            return v;
        }
        case MdsMode::Auto: break;
    }
    return v;
}

struct VerificationReport {
    std::size_t n = 0, k = 0;
    bool euclidean_self_dual = false;
    std::optional<bool> hermitian_self_dual;
    MdsVerdict mds;
};

template <FiniteField F>
VerificationReport verify_code(const LinearCode<F>& code, MdsMode mode = MdsMode::Auto, const Guards& guards = {},
                               const std::optional<BchCertificate>& bch = std::nullopt) {
    VerificationReport r;
    r.n = code.length();
    r.k = code.dimension();
    r.euclidean_self_dual = is_euclidean_self_dual(code);
    if constexpr (ConjugateField<F>) r.hermitian_self_dual = is_hermitian_self_dual(code);
    r.mds = mds_check(code, mode, guards, bch);
    return r;
}

}  // namespace selfdual

#endif
