#include "goeritz/json_io.hpp"

namespace goeritz {

ordered_json json_int(const Int& x) {
    static const Int kMin = std::numeric_limits<long long>::min();
    static const Int kMax = std::numeric_limits<long long>::max();
    if (x >= kMin && x <= kMax) return static_cast<long long>(x);
    return x.str();
}

ordered_json json_report(const ValidationReport& rep, const Diagram& d) {
    ordered_json j;
    j["ok"] = rep.ok;
    j["errors"] = ordered_json::array();
    for (const auto& e : rep.errors)
        j["errors"].push_back({{"code", e.code}, {"message", e.message}, {"location", e.location}});
    ordered_json pieces = ordered_json::array();
    for (const auto& p : d.pieces) {
        ordered_json pj;
        pj["name"] = p.name;
        pj["free_loop"] = p.free_loop;
        pj["crossings"] = p.crossings.size();
        if (rep.ok) {
            pj["edges"] = p.free_loop ? 1 : 2 * p.crossings.size();
            pj["faces"] = piece_local_face_count(p);
        }
        pieces.push_back(pj);
    }
    j["pieces"] = pieces;
    return j;
}

ordered_json json_group(const FgAbelianGroup& g) {
    ordered_json j;
    j["invariant_factors"] = ordered_json::array();
    for (const Int& f : g.invariant_factors) j["invariant_factors"].push_back(json_int(f));
    j["free_rank"] = g.free_rank;
    j["name"] = g.to_string();
    return j;
}

ordered_json json_goeritz(const Diagram& d, const Shading& s, const GoeritzMatrix& g) {
    ordered_json j;
    j["face_order"] = g.face_order;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < g.matrix.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < g.matrix.cols; ++k) row.push_back(json_int(g.matrix.at(i, k)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    ordered_json eta = ordered_json::array();
    for (size_t c = 0; c < d.crossings.size(); ++c)
        eta.push_back(goeritz_index(d, s, static_cast<int>(c)));
    j["eta"] = eta;
    j["beta"] = beta_count(d, s);
    ordered_json sigma = ordered_json::array();
    for (auto v : s.sigma) sigma.push_back(static_cast<int>(v));
    j["sigma"] = sigma;
    j["ref_face"] = s.ref_face;
    j["ref_value"] = s.ref_value;
    return j;
}

ordered_json json_coloring_report(const ColoringReport& rep) {
    ordered_json j;
    j["diagram"] = {{"pieces", rep.pieces},     {"crossings", rep.crossings},
                    {"edges", rep.edges},       {"arcs", rep.arcs},
                    {"faces", rep.faces},       {"components", rep.components}};
    j["shading"] = {{"ref_face", rep.shading.ref_face},
                    {"ref_value", rep.shading.ref_value},
                    {"beta", rep.beta}};
    ordered_json sigma = ordered_json::array();
    for (auto v : rep.shading.sigma) sigma.push_back(static_cast<int>(v));
    j["shading"]["sigma"] = sigma;

    ordered_json gj;
    gj["face_order"] = rep.goeritz.face_order;
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < rep.goeritz.matrix.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int k = 0; k < rep.goeritz.matrix.cols; ++k)
            row.push_back(json_int(rep.goeritz.matrix.at(i, k)));
        rows.push_back(row);
    }
    gj["matrix"] = rows;
    gj["eta"] = rep.eta;
    j["goeritz"] = gj;

    ordered_json snf;
    snf["diag"] = ordered_json::array();
    for (const Int& x : rep.snf.diag) snf["diag"].push_back(json_int(x));
    snf["rank"] = rep.snf.rank;
    j["snf"] = snf;

    j["coefficient_group"] = json_group(rep.coefficient);
    j["kernel"] = json_group(rep.kernel);
    j["fox_group"] = json_group(rep.fox);
    j["dehn_group"] = json_group(rep.dehn);

    ordered_json counts = ordered_json::object();
    for (const auto& mc : rep.counts) {
        ordered_json cj;
        cj["fox_predicted"] = json_int(mc.fox_predicted);
        cj["dehn_predicted"] = json_int(mc.dehn_predicted);
        if (mc.fox_enumerated)
            cj["fox_enumerated"] = json_int(*mc.fox_enumerated);
        else
            cj["fox_enumerated"] = nullptr;
        if (mc.dehn_enumerated)
            cj["dehn_enumerated"] = json_int(*mc.dehn_enumerated);
        else
            cj["dehn_enumerated"] = nullptr;
        if (!mc.fox_enumerated || !mc.dehn_enumerated)
            cj["note"] = "enumeration cap exceeded; predicted counts are exact";
        counts[std::to_string(mc.modulus)] = cj;
    }
    j["counts"] = counts;
    return j;
}

ordered_json json_verify(const VerifyReport& rep, const std::string& subject) {
    ordered_json j;
    j["subject"] = subject;
    j["all_pass"] = rep.all_pass();
    j["failed"] = rep.failed_count();
    j["skipped"] = rep.skipped_count();
    ordered_json rows = ordered_json::array();
    for (const auto& r : rep.rows) {
        ordered_json rj;
        rj["check"] = r.check;
        if (r.shading >= 0) rj["shading"] = r.shading;
        if (r.modulus > 0) rj["m"] = r.modulus;
        if (r.skipped) {
            rj["skipped"] = true;
            rj["note"] = r.note;
        } else {
            rj["expected"] = r.expected;
            rj["actual"] = r.actual;
            rj["pass"] = r.pass;
        }
        rows.push_back(rj);
    }
    j["checks"] = rows;
    return j;
}

}  // namespace goeritz
