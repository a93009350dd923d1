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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"

using namespace selfdual;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// Collects failures for one criterion; the first few are printed.
struct Check {
    std::vector<std::string> failures;
    u64 cases = 0;

    void expect(bool ok, const std::string& what) {
        ++cases;
        if (!ok) failures.push_back(what);
    }
};

bool hermitian_self_dual_by_powers(const LinearCode<Tower>& code) {
    const Tower& ext = code.field();
    if (2 * code.dimension() != code.length()) return false;
    for (std::size_t i = 0; i < code.dimension(); ++i)
        for (std::size_t l = 0; l < code.dimension(); ++l) {
            Element acc = ext.zero();
            for (std::size_t j = 0; j < code.length(); ++j)
                acc = ext.add(acc, ext.mul(code.row(i)[j], oracle::brute_pow(ext, code.row(l)[j], ext.base_size())));
            if (acc != ext.zero()) return false;
        }
    return true;
}

std::string label(u64 q, u64 n) { return "q=" + std::to_string(q) + " n=" + std::to_string(n); }

template <class Fn>
void guarded(Check& c, const std::string& what, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        c.expect(false, what + ": " + std::string(to_string(e.code())) + " " + e.detail());
    }
}

// 1. Table reproduction.
void table_reproduction(Check& c, std::string& note) {
    const auto start = Clock::now();
    const auto rows = run_table();
    const double secs = seconds_since(start);
    std::set<std::pair<u64, u64>> exhaustive;
    for (const auto& o : rows) {
        const std::string name = "(" + std::to_string(o.entry.code_length) + ", " + std::to_string(o.q) + ")";
        c.expect(o.matches_manifest(), name + " verdict " + std::string(to_string(o.verdict)));
        if (o.verdict != TableVerdict::Confirmed) continue;
        c.expect(o.report && o.report->euclidean_self_dual, name + " self-duality");
        const u64 k = o.entry.code_length / 2;
        if (detail::bounded_power(o.q, k, 1'000'000)) {
            const bool exact = o.report->mds.method == "exhaustive" &&
                               o.report->mds.exact_distance == o.entry.code_length / 2 + 1;
            c.expect(exact, name + " exhaustive distance");
            if (exact) exhaustive.insert({o.entry.code_length, o.q});
        } else {
            c.expect(o.report->mds.certified(), name + " MDS certificate");
        }
    }
    for (auto pair : std::vector<std::pair<u64, u64>>{{4, 4}, {4, 7}, {6, 16}, {8, 8}, {6, 81}})
        c.expect(exhaustive.count(pair) == 1, "(" + std::to_string(pair.first) + ", " + std::to_string(pair.second) +
                                                  ") measured exhaustively");
    c.expect(secs < 120.0, "runtime " + std::to_string(secs) + " s");
    std::ostringstream s;
    s << rows.size() << " pairs, " << exhaustive.size() << " with exhaustive distance, " << secs << " s";
    note = s.str();
}

// 2. Counterexample fixtures through the command line.
void counterexamples(Check& c, std::string& note) {
    const auto witness = [&](const std::string& q, const std::string& a) -> json {
        std::istringstream in;
        std::ostringstream out, err;
        const int code = cli::run_cli({"splitting", "--n", "25", "--q", q, "--multiplier", a, "--set-from", "7", "--set-to", "18"},
                                      in, out, err);
        c.expect(code == 1, "exit code for q=" + q);
        return json::parse(out.str()).at("witness");
    };
    const json w1 = witness("49", "-7"), w2 = witness("1849", "-43");
    c.expect(w1 == 12, "q=49 witness " + w1.dump());
    c.expect(w2 == 13, "q=1849 witness " + w2.dump());
    note = "witnesses " + w1.dump() + " and " + w2.dump();
}

// 3. Solvability verdict against brute force.
void solvability_oracle(Check& c, std::string& note) {
    const auto start = Clock::now();
    for (const auto& pp : oracle::prime_powers(343, true)) {
        const GaloisField f = make_field(pp.p, pp.t);
        for (u64 n = 3; n < pp.q; n += 2) {
            if ((pp.q - 1) % n) continue;
            c.expect(euclidean_gamma_solvability(pp.p, pp.t, n).solvable == oracle::brute_gamma_exists(f, n),
                     label(pp.q, n));
        }
    }
    const double secs = seconds_since(start);
    c.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
    note = std::to_string(c.cases - 1) + " (q, n) pairs in " + std::to_string(secs) + " s";
}

const std::vector<std::pair<u64, unsigned>> kSmallFields{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}};

// 4. GRS suite.
void grs_suite(Check& c, std::string& note) {
    u64 exhaustive = 0, sampled = 0;
    for (auto [p, t] : kSmallFields) {
        const GaloisField base = make_field(p, t);
        for (u64 n = 2; n <= base.size(); n += 2)
            guarded(c, label(base.size(), n), [&] {
                const auto res = build_grs_hermitian(p, t, n);
                c.expect(hermitian_self_dual_by_powers(res.code), label(base.size(), n) + " self-duality");
                for (u64 m = 0; m + 2 <= n; ++m) {
                    Element acc = base.zero();
                    for (std::size_t i = 0; i < n; ++i)
                        acc = base.add(acc, base.mul(res.u[i], oracle::brute_pow(base, res.points[i], m)));
                    c.expect(acc == base.zero(), label(base.size(), n) + " identity m=" + std::to_string(m));
                }
                const auto& mds = res.report.mds;
                if (mds.method == "exhaustive" || mds.method == "columns") {
                    c.expect(mds.status == MdsStatus::CertifiedExact, label(base.size(), n) + " MDS");
                    ++exhaustive;
                } else {
                    c.expect(mds.trials == 1000 && mds.passes == 1000, label(base.size(), n) + " Monte-Carlo");
                    ++sampled;
                }
            });
    }
    note = std::to_string(exhaustive + sampled) + " codes, " + std::to_string(exhaustive) + " checked exhaustively";
}

// 5. Every even length up to q + 1.
void dispatch_coverage(Check& c, std::string& note) {
    u64 codes = 0, constacyclic = 0;
    for (auto [p, t] : kSmallFields) {
        const u64 q = detail::checked_pow(p, t, u64{1} << 40);
        for (u64 n = 2; n <= q + 1; n += 2)
            guarded(c, label(q, n), [&] {
                const auto res = exists_hermitian_dispatch(p, t, n);
                c.expect(res.code.length() == n && res.code.dimension() == n / 2, label(q, n) + " parameters");
                c.expect(hermitian_self_dual_by_powers(res.code), label(q, n) + " self-duality");
                c.expect(res.report.mds.certified(), label(q, n) + " MDS");
                c.expect((n == q + 1) == (res.construction == Construction::Constacyclic), label(q, n) + " path");
                ++codes;
                constacyclic += res.construction == Construction::Constacyclic;
            });
    }
    guarded(c, "GF(49) length 8", [&] {
        const auto res = exists_hermitian_dispatch(7, 1, 8);
        c.expect(res.report.mds.exact_distance == 5u, "[8, 4, 5] over GF(49)");
    });
    note = std::to_string(codes) + " codes, " + std::to_string(constacyclic) + " via the constacyclic path";
}

// 6. Length-6 and extended duadic Hermitian codes.
void hermitian_duadic_suite(Check& c, std::string& note) {
    std::vector<u64> n5_fields;
    for (const auto& pp : oracle::prime_powers(49, true)) {
        if ((pp.q * pp.q + 1) % 5) continue;
        n5_fields.push_back(pp.q);
        guarded(c, "n5 q=" + std::to_string(pp.q), [&] {
            const auto res = build_hermitian_n5(pp.p, pp.t);
            c.expect(res.code.length() == 6 && res.code.dimension() == 3, "n5 parameters q=" + std::to_string(pp.q));
            c.expect(res.report.mds.exact_distance == 4u && res.report.mds.certified(), "n5 distance q=" + std::to_string(pp.q));
            c.expect(hermitian_self_dual_by_powers(res.code), "n5 self-duality q=" + std::to_string(pp.q));
        });
    }
    for (u64 q : {3u, 7u, 13u, 43u, 47u})
        c.expect(std::find(n5_fields.begin(), n5_fields.end(), q) != n5_fields.end(), "q=" + std::to_string(q) + " covered");

    u64 duadic = 0;
    for (const auto& pp : oracle::prime_powers(49, false))
        for (u64 n = 3; n < pp.q; ++n) {
            if ((pp.q - 1) % n || std::gcd(n, pp.q + 1) != 1) continue;
            guarded(c, label(pp.q, n), [&] {
                const auto res = build_hermitian_extended_duadic(pp.p, pp.t, n);
                c.expect(res.code.length() == n + 1 && res.code.dimension() == (n + 1) / 2, label(pp.q, n) + " parameters");
                c.expect(res.report.hermitian_self_dual == true && res.report.mds.certified(), label(pp.q, n) + " verified");
                ++duadic;
            });
        }
    std::ostringstream s;
    s << n5_fields.size() << " [6, 3, 4] codes (q in {";
    for (std::size_t i = 0; i < n5_fields.size(); ++i) s << (i ? ", " : "") << n5_fields[i];
    s << "}), " << duadic << " extended duadic codes";
    note = s.str();
}

// 7. Property suites.
void property_suites(Check& c, std::string& note) {
    std::mt19937_64 rng(2026);
    // dual involution
    for (auto [p, t] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}})
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::size_t k = 1; k <= n; ++k) {
                const GaloisField f = make_field(p, t);
                const Tower ext(f);
                Matrix g(k, n), h(k, n);
                do {
                    for (std::size_t i = 0; i < k; ++i)
                        for (std::size_t j = 0; j < n; ++j) g(i, j) = Element{rng() % f.size()};
                } while (rank(f, g) != k);
                do {
                    for (std::size_t i = 0; i < k; ++i)
                        for (std::size_t j = 0; j < n; ++j) h(i, j) = Element{rng() % ext.size()};
                } while (rank(ext, h) != k);
                const LinearCode<GaloisField> cf(f, g);
                const LinearCode<Tower> ct(ext, h);
                c.expect(same_row_space(f, euclidean_dual(euclidean_dual(cf)).generator(), g), "Euclidean involution");
                c.expect(same_row_space(ext, hermitian_dual(hermitian_dual(ct)).generator(), h), "Hermitian involution");
            }
    // Frobenius homomorphism
    for (auto [p, t] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 2}, {7, 1}, {5, 3}, {31, 1}}) {
        const Tower ext(make_field(p, t));
        for (int i = 0; i < 200; ++i) {
            const Element x{rng() % ext.size()}, y{rng() % ext.size()};
            c.expect(ext.frobenius(ext.mul(x, y)) == ext.mul(ext.frobenius(x), ext.frobenius(y)), "Frobenius product");
            c.expect(ext.frobenius(ext.add(x, y)) == ext.add(ext.frobenius(x), ext.frobenius(y)), "Frobenius sum");
            c.expect(ext.frobenius(x) == oracle::brute_pow(ext, x, ext.base_size()), "Frobenius power");
        }
    }
    // norm surjectivity
    for (const auto& pp : oracle::prime_powers(13, false)) {
        const Tower ext(make_field(pp.p, pp.t));
        std::set<u64> image;
        for (u64 v = 1; v < ext.size(); ++v) image.insert(oracle::brute_pow(ext, Element{v}, pp.q + 1).value);
        c.expect(image.size() == pp.q - 1 && !image.count(0) && *image.rbegin() < pp.q, "norm onto q=" + std::to_string(pp.q));
        for (u64 u = 1; u < pp.q; ++u)
            c.expect(oracle::brute_pow(ext, solve_norm(ext, Element{u}), pp.q + 1) == Element{u}, "solve_norm");
    }
    // BCH soundness and the c_inf property on every extended duadic instance small enough to scan
    u64 bch_instances = 0, cinf_instances = 0;
    for (const auto& pp : oracle::prime_powers(343, false)) {
        if (pp.p == 2 && pp.q > 256) continue;
        const GaloisField f = make_field(pp.p, pp.t);
        for (u64 n = 3; n < pp.q; n += 2) {
            if ((pp.q - 1) % n || !detail::bounded_power(pp.q, (n + 1) / 2, 1'000'000)) continue;
            const DefiningSet set = DefiningSet::interval(n, 1, (n - 1) / 2);
            const auto d1 = cyclic_generator_matrix(f, generator_from_defining_set(f, n, f.one(), set));
            const auto scan = oracle::scan_min_weight_sums(d1);
            c.expect(scan.distance >= bch_distance_bound({set, false}), "BCH " + label(pp.q, n));
            c.expect(scan.min_words > 0 && scan.zero_sum_min_words == 0, "c_inf " + label(pp.q, n));
            ++bch_instances;
            ++cinf_instances;
            if (euclidean_gamma_solvability(pp.p, pp.t, n).solvable) {
                const auto ext = extend_code(d1, solve_gamma_euclidean(f, n));
                c.expect(min_distance_exhaustive(ext).distance >= bch_distance_bound({set, true}), "extended BCH " + label(pp.q, n));
                ++bch_instances;
            }
        }
    }
    note = std::to_string(bch_instances) + " BCH-bound instances, " + std::to_string(cinf_instances) + " c_inf instances";
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Check&, std::string&)> run;
    };
    const std::vector<Criterion> criteria{
        {"table reproduction", table_reproduction},
        {"counterexample fixtures", counterexamples},
        {"solvability oracle", solvability_oracle},
        {"GRS Hermitian suite", grs_suite},
        {"even lengths up to q+1", dispatch_coverage},
        {"length-6 and extended duadic Hermitian codes", hermitian_duadic_suite},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        std::string note;
        const auto start = Clock::now();
        try {
            criteria[i].run(check, note);
        } catch (const std::exception& e) {
            check.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool pass = check.failures.empty();
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].name << " (" << check.cases
                  << " checks, " << seconds_since(start) << " s)";
        if (!note.empty()) std::cout << ": " << note;
        std::cout << '\n';
        for (std::size_t f = 0; f < check.failures.size() && f < 10; ++f) std::cout << "      " << check.failures[f] << '\n';
    }
    return failed == 0 ? 0 : 1;
}
