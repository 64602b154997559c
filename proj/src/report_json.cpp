#include "ricci/report_json.hpp"

namespace ricci {

Json rational_json(const Rational& r, bool decimal) {
    if (!decimal) return r.str();
    Json j;
    j["value"] = r.str();
    j["approximate"] = r.approx();
    return j;
}

Json graph_json(const Graph& g) {
    Json j;
    j["vertices"] = g.vertex_count();
    j["edge_count"] = g.edge_count();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back(Json::array({e.first, e.second}));
    j["edges"] = std::move(edges);
    return j;
}

Json affine_form_json(int level, const AffineForm& f) {
    Json j;
    j["level"] = level;
    j["slope"] = f.slope.str();
    j["constant"] = f.constant.str();
    j["form"] = f.str();
    return j;
}

Json transport_json(const TransportResult& r, bool decimal) {
    Json j;
    j["value"] = rational_json(r.value, decimal);
    Json plan = Json::array();
    for (const auto& [xy, mass] : r.plan.entries) {
        Json entry;
        entry["from"] = xy.first;
        entry["to"] = xy.second;
        entry["mass"] = mass.str();
        plan.push_back(std::move(entry));
    }
    j["plan"] = std::move(plan);
    Json pot = Json::array();
    for (const auto& [v, phi] : r.certificate.potential) {
        Json entry;
        entry["vertex"] = v;
        entry["potential"] = phi.str();
        pot.push_back(std::move(entry));
    }
    j["certificate"] = std::move(pot);
    return j;
}

Json curvature_report_json(const CurvatureReport& report, bool decimal) {
    Json j;
    j["diameter"] = report.diameter;
    j["min_kappa_lly"] = rational_json(report.min_curvature, decimal);
    Json edges = Json::array();
    for (const EdgeCurvature& ec : report.edges) {
        Json entry;
        entry["edge"] = Json::array({ec.edge.first, ec.edge.second});
        entry["idleness_used"] = ec.idleness_used.str();
        entry["kappa_p"] = rational_json(ec.kappa_p, decimal);
        entry["kappa_lly"] = rational_json(ec.kappa_lly, decimal);
        edges.push_back(std::move(entry));
    }
    j["edges"] = std::move(edges);
    return j;
}

Json sharpness_json(const SharpnessVerdict& v, bool decimal) {
    Json j;
    j["is_sharp"] = v.is_sharp;
    j["min_curvature"] = rational_json(v.min_curvature, decimal);
    j["diameter"] = v.diameter;
    j["bound"] = rational_json(v.bound, decimal);
    j["witness_edge"] = Json::array({v.witness_edge.first, v.witness_edge.second});
    return j;
}

Json classification_json(const ClassificationReport& report) {
    Json j;
    j["n"] = report.n;
    j["graphs_scanned"] = report.graphs_scanned;
    j["diameter2_count"] = report.diameter2_count;
    j["sharp_count"] = report.sharp_count;
    j["sharp_masks"] = report.sharp_masks;
    j["mismatch_masks"] = report.mismatch_masks;
    return j;
}

Json lemma_report_json(const LemmaReport& report) {
    Json j;
    Json edges = Json::array();
    for (const EdgeLemmaChecks& c : report.edges) {
        Json entry;
        entry["edge"] = Json::array({c.edge.first, c.edge.second});
        entry["mass_moved_ok"] = c.mass_moved_ok;
        entry["same_degree_ok"] = c.same_degree_ok;
        entry["diff_degree_ok"] = c.diff_degree_ok;
        edges.push_back(std::move(entry));
    }
    j["edges"] = std::move(edges);
    j["all_pass"] = report.all_pass;
    return j;
}

Json scan_json(const ScanResult& result, bool decimal) {
    Json j;
    j["diameter"] = result.diameter;
    switch (result.outcome) {
        case ScanResult::Outcome::Family: j["outcome"] = "family"; break;
        case ScanResult::Outcome::FiniteList: j["outcome"] = "finite-list"; break;
        case ScanResult::Outcome::Empty: j["outcome"] = "empty"; break;
    }
    if (!result.trace.empty()) {
        Json trace = Json::array();
        for (size_t k = 0; k < result.trace.size(); ++k)
            trace.push_back(affine_form_json(static_cast<int>(k + 1), result.trace[k]));
        j["trace"] = std::move(trace);
        j["admissible_t"] = result.admissible.str();
    }
    if (!result.region.empty()) {
        Json region = Json::array();
        for (const ScanCandidate& cand : result.region) {
            Json entry;
            entry["sequence"] = cand.seq.str();
            entry["sharp"] = cand.sharp;
            entry["min_curvature"] = rational_json(cand.min_curvature, decimal);
            region.push_back(std::move(entry));
        }
        j["region"] = std::move(region);
    }
    Json sols = Json::array();
    for (const AntitreeSequence& seq : result.solutions) sols.push_back(seq.str());
    j["solutions"] = std::move(sols);
    return j;
}

Json family_lemma_json(const FamilyLemmaReport& report) {
    Json j;
    Json entries = Json::array();
    for (const FamilyCheck& c : report.entries) {
        Json entry;
        entry["t"] = c.t;
        entry["diam4_sharp"] = c.diam4_sharp;
        entry["diam6_sharp"] = c.diam6_sharp;
        entry["perturbations_not_sharp"] = c.perturbations_not_sharp;
        entry["lp_checked"] = c.lp_checked;
        if (c.lp_checked) entry["lp_agrees"] = c.lp_agrees;
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    j["all_pass"] = report.all_pass;
    return j;
}

Json cross_validation_json(const CrossValidationReport& report) {
    Json j;
    j["sequences_checked"] = report.sequences_checked;
    j["edges_checked"] = report.edges_checked;
    j["disagreements"] = report.disagreements;
    j["all_agree"] = report.all_agree;
    return j;
}

}  // namespace ricci
