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

#ifndef SELFDUAL_TABLE_HPP
#define SELFDUAL_TABLE_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <future>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "codes.hpp"
#include "constructions.hpp"
#include "error.hpp"

namespace selfdual {

enum class TableVerdict { Confirmed, Unsupported, Guarded };

constexpr std::string_view to_string(TableVerdict v) noexcept {
    switch (v) {
        case TableVerdict::Confirmed: return "CONFIRMED";
        case TableVerdict::Unsupported: return "UNSUPPORTED";
        case TableVerdict::Guarded: return "GUARDED";
    }
    return "unknown";
}

/// One (self-dual length, q = p^t) pair of the published table with its expected outcome.
struct TableEntry {
    u64 code_length;
    u64 p;
    unsigned t;
    TableVerdict expected;
    std::optional<ErrorCode> expected_reason;
};

// The published list of MDS Euclidean self-dual codes built from extended duadic codes.
inline constexpr std::array<TableEntry, 22> kEuclideanTable{{
    {4, 2, 2, TableVerdict::Confirmed, std::nullopt},
    {4, 7, 1, TableVerdict::Confirmed, std::nullopt},
    {6, 2, 4, TableVerdict::Confirmed, std::nullopt},
    {6, 3, 4, TableVerdict::Confirmed, std::nullopt},
    {8, 2, 3, TableVerdict::Confirmed, std::nullopt},
    {8, 3, 6, TableVerdict::Confirmed, std::nullopt},
    {10, 2, 6, TableVerdict::Confirmed, std::nullopt},
    {10, 5, 6, TableVerdict::Confirmed, std::nullopt},
    {12, 3, 5, TableVerdict::Confirmed, std::nullopt},
    {14, 2, 12, TableVerdict::Confirmed, std::nullopt},
    {14, 3, 6, TableVerdict::Confirmed, std::nullopt},
    {16, 31, 1, TableVerdict::Confirmed, std::nullopt},
    {16, 31, 2, TableVerdict::Confirmed, std::nullopt},
    {16, 31, 3, TableVerdict::Confirmed, std::nullopt},
    {18, 3, 16, TableVerdict::Confirmed, std::nullopt},
    {20, 5, 9, TableVerdict::Confirmed, std::nullopt},
    {22, 5, 6, TableVerdict::Confirmed, std::nullopt},
    {24, 3, 11, TableVerdict::Confirmed, std::nullopt},
    {26, 7, 4, TableVerdict::Confirmed, std::nullopt},
    {28, 7, 9, TableVerdict::Confirmed, std::nullopt},
    {30, 59, 1, TableVerdict::Unsupported, ErrorCode::NoGamma},
    {156, 5, 4, TableVerdict::Unsupported, ErrorCode::NotCoprime},
}};

struct TableOutcome {
    TableEntry entry;
    u64 q = 0;
    TableVerdict verdict = TableVerdict::Guarded;
    std::optional<ErrorCode> reason;
    std::string message;
    std::optional<VerificationReport> report;
    std::optional<u64> gamma;  // integer encoding
    double seconds = 0;

    bool matches_manifest() const noexcept { return verdict == entry.expected && reason == entry.expected_reason; }
};

/// Runs one pair through the extended duadic construction with duadic length code_length - 1.
inline TableOutcome run_table_entry(const TableEntry& e, const Guards& guards = {}) {
    TableOutcome out{.entry = e};
    const auto start = std::chrono::steady_clock::now();
    out.q = detail::checked_pow(e.p, e.t, u64{1} << 62);
    ConstructionOptions opt;
    opt.guards = guards;
    try {
        auto res = build_euclidean_duadic_extended(e.p, e.t, e.code_length - 1, opt);
        out.gamma = res.gamma ? std::optional<u64>(res.gamma->value) : std::nullopt;
        out.verdict = res.report.euclidean_self_dual && res.report.mds.certified() ? TableVerdict::Confirmed
                                                                                  : TableVerdict::Guarded;
        out.report = std::move(res.report);
    } catch (const Error& err) {
        out.reason = err.code();
        out.message = err.detail();
        out.verdict = err.code() == ErrorCode::GuardExceeded ? TableVerdict::Guarded : TableVerdict::Unsupported;
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

/// All pairs on a pool of `workers` threads; results keep manifest order.
inline std::vector<TableOutcome> run_table(const Guards& guards = {}, unsigned workers = 0) {
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    std::vector<TableOutcome> out(kEuclideanTable.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < kEuclideanTable.size(); i = next++) out[i] = run_table_entry(kEuclideanTable[i], guards);
        }));
    for (auto& f : pool) f.get();
    return out;
}

}  // namespace selfdual

#endif
