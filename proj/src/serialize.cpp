#include "mvd/serialize.hpp"

#include <stdexcept>

#include "mvd/matrix_io.hpp"

namespace mvd {

json structure_to_json(const CanonicalStructure& s) {
    json blocks = json::array();
    for (const CanonicalBlock& b : s.blocks) {
        json jb;
        jb["kind"] = to_string(b.kind);
        switch (b.kind) {
            case BlockKind::H:
                jb["m"] = b.size;
                jb["lambda"] = {{"re", b.lambda.real()}, {"im", b.lambda.imag()}};
                break;
            case BlockKind::Gamma: jb["n"] = b.size; break;
            case BlockKind::JordanZero: jb["k"] = b.size; break;
        }
        blocks.push_back(std::move(jb));
    }
    return json{{"blocks", std::move(blocks)}};
}

CanonicalStructure structure_from_json(const json& j) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array())
        throw std::invalid_argument("structure JSON must be an object with a \"blocks\" array");
    CanonicalStructure s;
    for (const json& jb : j["blocks"]) {
        if (!jb.is_object() || !jb.contains("kind"))
            throw std::invalid_argument("each block needs a \"kind\"");
        const std::string kind = jb["kind"].get<std::string>();
        if (kind == "H") {
            if (!jb.contains("m") || !jb.contains("lambda"))
                throw std::invalid_argument("H block needs \"m\" and \"lambda\"");
            const json& jl = jb["lambda"];
            cplx lambda;
            if (jl.is_number()) {
                lambda = cplx(jl.get<double>(), 0.0);
            } else if (jl.is_object() && jl.contains("re")) {
                lambda = cplx(jl["re"].get<double>(),
                              jl.contains("im") ? jl["im"].get<double>() : 0.0);
            } else {
                throw std::invalid_argument("lambda must be a number or {\"re\":..,\"im\":..}");
            }
            s.blocks.push_back(CanonicalBlock::h(jb["m"].get<int>(), lambda));
        } else if (kind == "Gamma") {
            if (!jb.contains("n")) throw std::invalid_argument("Gamma block needs \"n\"");
            s.blocks.push_back(CanonicalBlock::gamma(jb["n"].get<int>()));
        } else if (kind == "J0") {
            if (!jb.contains("k")) throw std::invalid_argument("J0 block needs \"k\"");
            s.blocks.push_back(CanonicalBlock::jordan_zero(jb["k"].get<int>()));
        } else {
            throw std::invalid_argument("unknown block kind '" + kind +
                                        "' (expected H, Gamma, or J0)");
        }
    }
    if (s.blocks.empty()) throw std::invalid_argument("structure must contain at least one block");
    // blocks are validated individually; ordering is the caller's concern
    // (canonicalize() sorts, validate() enforces)
    for (const CanonicalBlock& b : s.blocks) b.validate();
    return s;
}

json pattern_to_json(const StarPattern& p) {
    json stars = json::array();
    for (const auto& [i, j] : p.stars()) stars.push_back(json::array({i, j}));
    return json{{"rows", p.rows()}, {"cols", p.cols()}, {"stars", std::move(stars)}};
}

StarPattern pattern_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("stars"))
        throw std::invalid_argument("pattern JSON needs \"rows\", \"cols\", and \"stars\"");
    StarPattern p(j["rows"].get<int>(), j["cols"].get<int>());
    for (const json& star : j["stars"]) {
        if (!star.is_array() || star.size() != 2)
            throw std::invalid_argument("each star must be a [row, col] pair");
        p.add(star[0].get<int>(), star[1].get<int>());
    }
    return p;
}

json report_to_json(const TransversalityReport& r) {
    return json{{"dim", r.dim},
                {"tangent_rank", r.tangent_rank},
                {"pattern_stars", r.pattern_stars},
                {"combined_rank", r.combined_rank},
                {"verdict", to_string(r.verdict)},
                {"warnings", r.warnings}};
}

json trace_record_to_json(const TraceRecord& r) {
    return json{{"k", r.k},
                {"norm_m", r.norm_m},
                {"masked_norm_m", r.masked_norm_m},
                {"norm_c", r.norm_c},
                {"delta_bound", r.delta_bound},
                {"tau_bound", r.tau_bound}};
}

json result_to_json(const ReductionResult& r) {
    json trace = json::array();
    for (const TraceRecord& rec : r.trace.records) trace.push_back(trace_record_to_json(rec));
    return json{{"converged", r.converged},
                {"iterations", r.trace.iterations},
                {"in_certified_basin", r.in_certified_basin},
                {"eps", r.eps},
                {"residual", r.residual},
                {"s", write_matrix_text(r.s)},
                {"d", write_matrix_text(r.d)},
                {"trace", std::move(trace)}};
}

} // namespace mvd
