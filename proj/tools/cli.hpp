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

#ifndef SELFDUAL_TOOLS_CLI_HPP
#define SELFDUAL_TOOLS_CLI_HPP

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <selfdual/selfdual.hpp>

namespace selfdual::cli {

enum Exit : int { kOk = 0, kDomainFailure = 1, kMalformed = 2 };

struct Settings {
    bool pretty = false;

    // construct
    std::string kind;
    u64 p = 0, n = 0, r = 2;
    unsigned t = 1;
    std::string v_choice = "norm";
    std::vector<u64> points;
    std::string mds = "auto";

    // verify
    std::string input = "-";
    std::string dual = "auto";

    // table
    unsigned threads = 0;

    // splitting
    u64 q = 0;
    i64 multiplier = 0;
    u64 set_from = 0, set_to = 0;
};

inline MdsMode parse_mds(const std::string& s) {
    static const std::map<std::string, MdsMode> modes{{"auto", MdsMode::Auto},
                                                       {"exhaustive", MdsMode::ExhaustiveDistance},
                                                       {"columns", MdsMode::ExhaustiveColumns},
                                                       {"monte-carlo", MdsMode::MonteCarlo},
                                                       {"bch", MdsMode::Bch}};
    return modes.at(s);
}

inline void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

inline int report_error(std::ostream& out, const Error& e, int code, bool pretty) {
    emit(out, json{{"error", std::string(to_string(e.code()))}, {"message", e.detail()}}, pretty);
    return code;
}

inline int cmd_construct(const Settings& s, std::ostream& out) {
    ConstructionOptions opt;
    opt.guards = Guards::from_environment();
    opt.mds_mode = parse_mds(s.mds);
    opt.v_choice = s.v_choice == "square" ? VChoice::Square : VChoice::Norm;
    if (!s.points.empty()) {
        std::vector<Element> pts;
        for (u64 x : s.points) pts.push_back(Element{x});
        opt.points = std::move(pts);
    }
    try {
        json j;
        if (s.kind == "euclidean-duadic")
            j = to_json(build_euclidean_duadic_extended(s.p, s.t, s.n, opt));
        else if (s.kind == "grs-hermitian")
            j = to_json(build_grs_hermitian(s.p, s.t, s.n, opt));
        else if (s.kind == "constacyclic")
            j = to_json(build_constacyclic_hermitian(s.p, s.t, s.n, s.r, opt));
        else if (s.kind == "negacyclic")
            j = to_json(build_negacyclic_hermitian(s.p, s.t, s.n, opt));
        else if (s.kind == "hermitian-duadic")
            j = to_json(build_hermitian_extended_duadic(s.p, s.t, s.n, opt));
        else if (s.kind == "hermitian-n5")
            j = to_json(build_hermitian_n5(s.p, s.t, opt));
        else
            j = to_json(exists_hermitian_dispatch(s.p, s.t, s.n, opt));
        emit(out, j, s.pretty);
        return kOk;
    } catch (const Error& e) {
        const bool failed_check = e.code() == ErrorCode::VerificationFailed || e.code() == ErrorCode::SplittingFailed ||
                                  e.code() == ErrorCode::MalformedInput;
        return report_error(out, e, failed_check ? kMalformed : kDomainFailure, s.pretty);
    }
}

template <class F>
int verify_imported(const Settings& s, const LinearCode<F>& code, const CodeMetadata& meta, std::ostream& out) {
    const MdsMode mode = parse_mds(s.mds);
    std::optional<BchCertificate> cert = certificate_from_metadata(code, meta);
    std::string dual = s.dual;
    if (dual == "auto") dual = ConjugateField<F> ? "hermitian" : "euclidean";
    if (dual == "hermitian" && !ConjugateField<F>)
        throw Error(ErrorCode::NotOverTower, "Hermitian duality needs a code over GF(q^2)");

    VerificationReport report;
    if (mode == MdsMode::Bch && !cert) {
        report.n = code.length();
        report.k = code.dimension();
        report.euclidean_self_dual = is_euclidean_self_dual(code);
        if constexpr (ConjugateField<F>) report.hermitian_self_dual = is_hermitian_self_dual(code);
        report.mds.method = "bch";
        report.mds.warning = "metadata does not certify a (consta)cyclic structure for this generator";
    } else {
        report = verify_code(code, mode, Guards::from_environment(), cert);
    }
    json j = to_json(code.field(), report);
    const bool dual_ok = dual == "none" || (dual == "euclidean" ? report.euclidean_self_dual
                                                                : report.hermitian_self_dual.value_or(false));
    const bool mds_ok = report.mds.certified() || report.mds.status == MdsStatus::MonteCarlo ||
                        report.mds.status == MdsStatus::Guarded;
    j["dual"] = dual;
    if (!meta.construction.empty()) j["construction"] = meta.construction;
    j["ok"] = dual_ok && mds_ok;
    emit(out, j, s.pretty);
    return dual_ok && mds_ok ? kOk : kDomainFailure;
}

inline int cmd_verify(const Settings& s, std::istream& in, std::ostream& out) {
    json doc;
    try {
        if (s.input == "-") {
            doc = json::parse(in);
        } else {
            std::ifstream file(s.input);
            if (!file) throw Error(ErrorCode::MalformedInput, "cannot open " + s.input);
            doc = json::parse(file);
        }
    } catch (const json::exception& e) {
        return report_error(out, Error(ErrorCode::MalformedInput, e.what()), kMalformed, s.pretty);
    } catch (const Error& e) {
        return report_error(out, e, kMalformed, s.pretty);
    }
    try {
        ImportedCode imported = code_from_json(doc);
        return std::visit([&](const auto& code) { return verify_imported(s, code, imported.meta, out); }, imported.code);
    } catch (const Error& e) {
        const bool malformed = e.code() == ErrorCode::MalformedInput || e.code() == ErrorCode::NotPrime ||
                               e.code() == ErrorCode::NotIrreducible || e.code() == ErrorCode::DegreeZero;
        return report_error(out, e, malformed ? kMalformed : kDomainFailure, s.pretty);
    } catch (const json::exception& e) {
        return report_error(out, Error(ErrorCode::MalformedInput, e.what()), kMalformed, s.pretty);
    }
}

inline json table_row_json(const TableOutcome& o) {
    json j{{"length", o.entry.code_length}, {"p", o.entry.p},     {"t", o.entry.t},
           {"q", o.q},                      {"verdict", std::string(to_string(o.verdict))},
           {"expected", std::string(to_string(o.entry.expected))},
           {"matches_manifest", o.matches_manifest()}};
    if (o.reason) {
        j["reason"] = std::string(to_string(*o.reason));
        j["message"] = o.message;
    }
    if (o.gamma) j["gamma"] = *o.gamma;
    if (o.report) {
        j["euclidean_self_dual"] = o.report->euclidean_self_dual;
        j["mds"] = json{{"status", std::string(to_string(o.report->mds.status))}, {"method", o.report->mds.method}};
        if (o.report->mds.exact_distance) j["distance"] = *o.report->mds.exact_distance;
    }
    j["seconds"] = o.seconds;
    return j;
}

inline int cmd_table(const Settings& s, std::ostream& out) {
    const auto start = std::chrono::steady_clock::now();
    const auto rows = run_table(Guards::from_environment(), s.threads);
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::size_t confirmed = 0, unsupported = 0, guarded = 0, mismatches = 0;
    for (const auto& o : rows) {
        confirmed += o.verdict == TableVerdict::Confirmed;
        unsupported += o.verdict == TableVerdict::Unsupported;
        guarded += o.verdict == TableVerdict::Guarded;
        mismatches += !o.matches_manifest();
    }
    if (s.pretty) {
        out << std::left << std::setw(8) << "length" << std::setw(12) << "q" << std::setw(13) << "verdict"
            << std::setw(20) << "detail" << "seconds\n";
        for (const auto& o : rows) {
            std::string q = std::to_string(o.entry.p) + (o.entry.t > 1 ? "^" + std::to_string(o.entry.t) : "");
            std::string detail = o.reason ? std::string(to_string(*o.reason))
                                          : (o.report ? std::string(to_string(o.report->mds.status)) : "");
            std::ostringstream secs;
            secs << std::fixed << std::setprecision(3) << o.seconds;
            out << std::setw(8) << o.entry.code_length << std::setw(12) << q << std::setw(13)
                << to_string(o.verdict) << std::setw(20) << detail << secs.str()
                << (o.matches_manifest() ? "" : "  MISMATCH") << '\n';
        }
        out << confirmed << " confirmed, " << unsupported << " unsupported, " << guarded << " guarded, " << mismatches
            << " mismatches in " << std::fixed << std::setprecision(2) << total << " s\n";
    } else {
        for (const auto& o : rows) emit(out, table_row_json(o), false);
        emit(out,
             json{{"summary",
                   {{"pairs", rows.size()},
                    {"confirmed", confirmed},
                    {"unsupported", unsupported},
                    {"guarded", guarded},
                    {"mismatches", mismatches},
                    {"seconds", total}}}},
             false);
    }
    return mismatches == 0 ? kOk : kDomainFailure;
}

inline int cmd_splitting(const Settings& s, std::ostream& out) {
    try {
        if (s.n < 2 || s.set_from == 0 || s.set_from > s.set_to || s.set_to >= s.n)
            throw Error(ErrorCode::MalformedInput, "need 1 <= set-from <= set-to < n");
        if (s.q < 2) throw Error(ErrorCode::MalformedInput, "q must be at least 2");
        const auto report = check_duadic_splitting(DefiningSet::interval(s.n, s.set_from, s.set_to), s.multiplier, s.q);
        emit(out, to_json(report), s.pretty);
        return report.is_splitting ? kOk : kDomainFailure;
    } catch (const Error& e) {
        return report_error(out, e, e.code() == ErrorCode::MalformedInput ? kMalformed : kDomainFailure, s.pretty);
    }
}

inline int cmd_solvability(const Settings& s, std::ostream& out) {
    try {
        emit(out, selfdual::to_json(euclidean_gamma_solvability(s.p, s.t, s.n)), s.pretty);
        return kOk;
    } catch (const Error& e) {
        return report_error(out, e, kDomainFailure, s.pretty);
    }
}

inline int cmd_interval_splitting(const Settings& s, std::ostream& out) {
    try {
        const auto report = check_interval_duadic_splitting(s.p, s.t, s.n);
        emit(out, to_json(report), s.pretty);
        return report.is_splitting ? kOk : kDomainFailure;
    } catch (const Error& e) {
        return report_error(out, e, kDomainFailure, s.pretty);
    }
}

/// Entry point shared by the executable and the in-process tests. args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Construct and verify MDS self-dual codes over finite fields", "selfdual"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--pretty", s.pretty, "Human-readable output");

    auto* construct = app.add_subcommand("construct", "Build a code and print it with its verification report");
    construct
        ->add_option("kind", s.kind, "Construction")
        ->required()
        ->check(CLI::IsMember({"euclidean-duadic", "grs-hermitian", "constacyclic", "negacyclic", "hermitian-duadic",
                               "hermitian-n5", "dispatch"}));
    construct->add_option("--p", s.p, "Characteristic")->required();
    construct->add_option("--t", s.t, "Extension degree")->capture_default_str();
    construct->add_option("--n", s.n, "Length parameter");
    construct->add_option("--r", s.r, "Order of lambda (constacyclic)")->capture_default_str();
    construct->add_option("--v-choice", s.v_choice, "GRS column multipliers: v^(q+1) = u or v^2 = u")
        ->check(CLI::IsMember({"norm", "square"}))
        ->capture_default_str();
    construct->add_option("--points", s.points, "GRS evaluation points as GF(q) encodings")->delimiter(',');
    construct->add_option("--mds", s.mds, "MDS tier")
        ->check(CLI::IsMember({"auto", "exhaustive", "columns", "monte-carlo", "bch"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Check self-duality and MDS of a code read as JSON");
    verify->add_option("file", s.input, "Code file, or - for stdin")->capture_default_str();
    verify->add_option("--mds", s.mds, "MDS tier")
        ->check(CLI::IsMember({"auto", "exhaustive", "columns", "monte-carlo", "bch"}))
        ->capture_default_str();
    verify->add_option("--dual", s.dual, "Duality to require")
        ->check(CLI::IsMember({"auto", "euclidean", "hermitian", "none"}))
        ->capture_default_str();

    auto* table = app.add_subcommand("table", "Rebuild the published list of MDS Euclidean self-dual codes");
    table->add_option("--threads", s.threads, "Worker threads (0 = hardware)");

    auto* splitting = app.add_subcommand("splitting", "Test whether a multiplier splits an interval defining set");
    splitting->add_option("--n", s.n, "Modulus")->required();
    splitting->add_option("--q", s.q, "Cyclotomic coset base")->required();
    splitting->add_option("--multiplier", s.multiplier, "Multiplier a (may be negative)")->required();
    splitting->add_option("--set-from", s.set_from, "First element of T")->required();
    splitting->add_option("--set-to", s.set_to, "Last element of T")->required();

    auto* solvability = app.add_subcommand("solvability", "Decide whether 1 + gamma^2 n = 0 has a root in GF(p^t)");
    solvability->add_option("--p", s.p, "Characteristic")->required();
    solvability->add_option("--t", s.t, "Extension degree")->capture_default_str();
    solvability->add_option("--n", s.n, "Odd divisor of q - 1")->required();

    auto* interval = app.add_subcommand("interval-splitting",
                                        "Test T = {(n+3)/4..(3n-3)/4} against mu_{-q} for n | q^2 + 1");
    interval->add_option("--p", s.p, "Characteristic")->required();
    interval->add_option("--t", s.t, "Extension degree")->capture_default_str();
    interval->add_option("--n", s.n, "Length")->required();

    std::vector<const char*> argv{"selfdual"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kMalformed;
    }

    if (construct->parsed()) {
        if (s.kind != "hermitian-n5" && construct->count("--n") == 0) {
            err << "--n is required for " << s.kind << '\n';
            return kMalformed;
        }
        return cmd_construct(s, out);
    }
    if (verify->parsed()) return cmd_verify(s, in, out);
    if (table->parsed()) return cmd_table(s, out);
    if (splitting->parsed()) return cmd_splitting(s, out);
    if (solvability->parsed()) return cmd_solvability(s, out);
    return cmd_interval_splitting(s, out);
}

}  // namespace selfdual::cli

#endif
