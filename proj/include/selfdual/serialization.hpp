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

#ifndef SELFDUAL_SERIALIZATION_HPP
#define SELFDUAL_SERIALIZATION_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "codes.hpp"
#include "constructions.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "galois_field.hpp"
#include "number_theory.hpp"
#include "quadratic_extension.hpp"

namespace selfdual {

using json = nlohmann::json;

// Fields and elements. Base elements are coefficient arrays (constant term first); extension
// elements are [a, b] pairs of base coefficient arrays meaning a + b*y.

inline json to_json(const GaloisField& f) {
    return json{{"p", f.characteristic()}, {"t", f.degree()}, {"modulus", f.modulus()}};
}

inline json to_json(const Tower& ext) {
    const GaloisField& b = ext.base();
    return json{{"base", to_json(b)},
                {"ext_modulus",
                 json::array({b.coefficients(ext.modulus_constant()), b.coefficients(ext.modulus_linear()),
                              b.coefficients(b.one())})}};
}

inline json element_to_json(const GaloisField& f, Element e) { return f.coefficients(e); }

inline json element_to_json(const Tower& ext, Element e) {
    const auto [a, b] = ext.components(e);
    return json::array({ext.base().coefficients(a), ext.base().coefficients(b)});
}

inline Element element_from_json(const GaloisField& f, const json& j) {
    return f.from_coefficients(j.get<std::vector<u64>>());
}

inline Element element_from_json(const Tower& ext, const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::MalformedInput, "extension element must be [a, b]");
    return ext.make(element_from_json(ext.base(), j[0]), element_from_json(ext.base(), j[1]));
}

inline GaloisField galois_field_from_json(const json& j) {
    const auto p = j.at("p").get<u64>();
    const auto t = j.at("t").get<unsigned>();
    auto modulus = j.at("modulus").get<std::vector<u64>>();
    if (modulus.size() != t + 1) throw Error(ErrorCode::MalformedInput, "modulus length must be t + 1");
    return GaloisField(p, std::move(modulus));
}

inline Tower tower_from_json(const json& j) {
    GaloisField base = galois_field_from_json(j.at("base"));
    const json& m = j.at("ext_modulus");
    if (!m.is_array() || m.size() != 3) throw Error(ErrorCode::MalformedInput, "ext_modulus must have three entries");
    if (element_from_json(base, m[2]) != base.one()) throw Error(ErrorCode::MalformedInput, "ext_modulus must be monic");
    const Element c0 = element_from_json(base, m[0]);
    const Element c1 = element_from_json(base, m[1]);
    return Tower(std::move(base), c0, c1);
}

inline json to_json(const DefiningSet& s) {
    return json{{"modulus", s.modulus}, {"step", s.step}, {"elements", s.elements}};
}

inline DefiningSet defining_set_from_json(const json& j) {
    return DefiningSet::make(j.at("modulus").get<u64>(), j.at("step").get<u64>(), j.at("elements").get<std::vector<u64>>());
}

inline json to_json(const SplittingReport& r) {
    json j{{"multiplier", r.multiplier},
           {"normalized_multiplier", r.normalized_multiplier},
           {"coset_base", r.coset_base},
           {"s1", to_json(r.s1)},
           {"s2", to_json(r.s2)},
           {"is_splitting", r.is_splitting}};
    j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
    if (r.witness_preimage) j["witness_preimage"] = *r.witness_preimage;
    if (!r.is_splitting) j["failure"] = r.failure;
    return j;
}

inline json to_json(const GammaSolvability& v) {
    return json{{"solvable", v.solvable}, {"case", std::string(to_string(v.which))}, {"odd_sum", v.odd_sum}};
}

template <class F>
json mds_to_json(const F& field, const MdsVerdict& m) {
    json j{{"status", std::string(to_string(m.status))}, {"method", m.method}};
    if (m.status == MdsStatus::MonteCarlo || m.trials > 0) {
        j["trials"] = m.trials;
        j["passes"] = m.passes;
    }
    if (!m.witness_columns.empty()) j["witness_columns"] = m.witness_columns;
    if (!m.witness_word.empty()) {
        json w = json::array();
        for (auto e : m.witness_word) w.push_back(element_to_json(field, e));
        j["witness_word"] = w;
    }
    if (!m.warning.empty()) j["warning"] = m.warning;
    return j;
}

template <class F>
json to_json(const F& field, const VerificationReport& r) {
    json j{{"n", r.n}, {"k", r.k}, {"euclidean_self_dual", r.euclidean_self_dual}};
    if (r.hermitian_self_dual) j["hermitian_self_dual"] = *r.hermitian_self_dual;
    if (r.mds.exact_distance)
        j["distance"] = json{{"exact", *r.mds.exact_distance}};
    else if (r.mds.distance_lower_bound)
        j["distance"] = json{{"lower_bound", *r.mds.distance_lower_bound}};
    j["mds"] = mds_to_json(field, r.mds);
    return j;
}

/// Optional provenance attached to an exported code.
struct CodeMetadata {
    std::string construction;
    std::optional<Element> gamma;
    std::optional<DefiningSet> defining_set;
    std::optional<Element> lambda;
};

template <class F>
json code_to_json(const LinearCode<F>& code, const CodeMetadata& meta = {}) {
    const F& f = code.field();
    json gen = json::array();
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        json row = json::array();
        for (auto e : code.row(i)) row.push_back(element_to_json(f, e));
        gen.push_back(std::move(row));
    }
    json md{{"construction", meta.construction}};
    if (meta.gamma) md["gamma"] = element_to_json(f, *meta.gamma);
    if (meta.defining_set) md["defining_set"] = to_json(*meta.defining_set);
    if (meta.lambda) md["lambda"] = element_to_json(f, *meta.lambda);
    return json{{"field", to_json(f)}, {"n", code.length()}, {"k", code.dimension()}, {"generator", gen}, {"metadata", md}};
}

template <class F>
json to_json(const ConstructionResult<F>& res) {
    CodeMetadata meta{std::string(to_string(res.construction)), res.gamma, std::nullopt, std::nullopt};
    if (res.spec) {
        meta.defining_set = res.spec->defining_set;
        meta.lambda = res.spec->lambda;
    }
    json j = code_to_json(res.code, meta);
    const F& f = res.code.field();
    if (!res.points.empty()) {
        json pts = json::array(), us = json::array(), vs = json::array();
        for (auto e : res.points) pts.push_back(element_to_json(f, e));
        for (auto e : res.u) us.push_back(element_to_json(f, e));
        for (auto e : res.v) vs.push_back(element_to_json(f, e));
        j["metadata"]["points"] = pts;
        j["metadata"]["u"] = us;
        j["metadata"]["v"] = vs;
    }
    j["theorem"] = std::string(to_string(res.construction));
    j["dispatched"] = res.dispatched;
    const std::size_t n = res.code.length(), k = res.code.dimension();
    j["parameters"] = json::array({n, k, n - k + 1});
    if (res.splitting) j["splitting"] = to_json(*res.splitting);
    if (res.bch_bound) j["bch_bound"] = *res.bch_bound;
    j["verification"] = to_json(f, res.report);
    return j;
}

/// A code read back from JSON, over whichever field its description names.
struct ImportedCode {
    std::variant<LinearCode<GaloisField>, LinearCode<Tower>> code;
    CodeMetadata meta;
};

namespace detail {

template <class F>
ImportedCode import_code(const F& field, const json& j) {
    const auto n = j.at("n").get<std::size_t>();
    const auto k = j.at("k").get<std::size_t>();
    const json& gen = j.at("generator");
    if (!gen.is_array() || gen.size() != k) throw Error(ErrorCode::MalformedInput, "generator must have k rows");
    Matrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        if (!gen[i].is_array() || gen[i].size() != n) throw Error(ErrorCode::MalformedInput, "generator rows must have n entries");
        for (std::size_t c = 0; c < n; ++c) g(i, c) = element_from_json(field, gen[i][c]);
    }
    CodeMetadata meta;
    if (j.contains("metadata")) {
        const json& md = j.at("metadata");
        if (md.contains("construction")) meta.construction = md.at("construction").get<std::string>();
        if (md.contains("gamma")) meta.gamma = element_from_json(field, md.at("gamma"));
        if (md.contains("defining_set")) meta.defining_set = defining_set_from_json(md.at("defining_set"));
        if (md.contains("lambda")) meta.lambda = element_from_json(field, md.at("lambda"));
    }
    return ImportedCode{LinearCode<F>(field, std::move(g)), std::move(meta)};
}

}  // namespace detail

/// Parses a code document; json library errors surface as MalformedInput.
inline ImportedCode code_from_json(const json& j) {
    try {
        const json& fj = j.at("field");
        if (fj.contains("base")) return detail::import_code(tower_from_json(fj), j);
        return detail::import_code(galois_field_from_json(fj), j);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedInput, e.what());
    }
}

/// Certificate for the bch tier, available only when the code provably lies in the (consta)cyclic
/// code named by its metadata (and, for length n + 1, is its gamma-extension).
template <class F>
std::optional<BchCertificate> certificate_from_metadata(const LinearCode<F>& code, const CodeMetadata& meta) {
    if (!meta.defining_set) return std::nullopt;
    const F& f = code.field();
    const DefiningSet& set = *meta.defining_set;
    const u64 n = set.length();
    const bool extended = code.length() == n + 1;
    if (!extended && code.length() != n) return std::nullopt;
    const Element lambda = meta.lambda.value_or(f.one());
    CyclicSpec<F> spec;
    try {
        spec = generator_from_defining_set(f, n, lambda, set);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (!rows_in_cyclic_code(code, spec)) return std::nullopt;
    if (extended) {
        if (!meta.gamma || *meta.gamma == f.zero() || set.step != 1) return std::nullopt;
        for (std::size_t i = 0; i < code.dimension(); ++i) {
            Element sum = f.zero();
            for (std::size_t c = 0; c < n; ++c) sum = f.add(sum, code.row(i)[c]);
            if (code.row(i)[n] != f.neg(f.mul(*meta.gamma, sum))) return std::nullopt;
        }
    }
    return BchCertificate{set, extended};
}

}  // namespace selfdual

#endif
