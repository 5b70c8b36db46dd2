#include "pinchgeo/app/report_json.hpp"

#include <cmath>

namespace pinchgeo::app {

namespace {

using nlohmann::json;

/// Non-finite values become null so the document stays valid JSON.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

json vector_json(const std::vector<double>& v) {
    json out = json::array();
    for (double x : v) {
        out.push_back(number(x));
    }
    return out;
}

json matrix_rows(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(number(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

const char* bound_name(BoundDirection b) {
    return b == BoundDirection::LowerBoundOnMax ? "lower_bound_on_max" : "upper_bound_on_min";
}

json ambient_json(const AmbientSpec& a) {
    json out;
    if (a.is_space_form()) {
        out["mode"] = "space_form";
        out["c"] = number(a.c());
    } else {
        out["mode"] = "bounds";
    }
    out["kmin"] = number(a.kmin());
    out["kmax"] = number(a.kmax());
    return out;
}

json search_json(const SearchResult& s) {
    json out;
    out["value"] = number(s.value);
    out["bound"] = bound_name(s.bound);
    out["restarts"] = s.restarts;
    out["seed"] = s.seed;
    out["evaluations"] = s.evaluations;
    out["converged"] = s.converged;
    out["lambda"] = optional_number(s.lambda);
    out["frame"] = matrix_rows(s.frame);
    return out;
}

}  // namespace

nlohmann::json to_json(const EntryAnalysis& analysis) {
    const PinchingReport& rep = analysis.report;
    json out;
    out["label"] = rep.label;
    out["source"] = rep.source;
    out["n"] = rep.n;
    out["p"] = rep.p;
    out["ambient"] = ambient_json(rep.ambient);
    out["point_count"] = rep.point_count;
    out["S"] = {{"min", number(rep.S_min)}, {"max", number(rep.S_max)}};
    out["H"] = {{"min", number(rep.H_min)}, {"max", number(rep.H_max)}};
    out["lambda_M"] = optional_number(rep.lambda_M);
    out["mu_M"] = optional_number(rep.mu_M);
    out["extrema_kind"] = rep.source == "sampled" ? "sampled extremum" : "exact";
    out["ricci_3d_lower_bound"] = optional_number(rep.ricci_3d_lower_bound);

    json hyps = json::array();
    for (const auto& h : rep.hypotheses) {
        json j;
        j["id"] = h.id;
        j["condition"] = h.condition;
        j["kind"] = h.kind;
        j["status"] = to_string(h.status);
        j["holds"] = h.holds();
        if (h.status == HypothesisStatus::NotApplicable) {
            j["margin"] = nullptr;
            j["worst_point"] = nullptr;
        } else {
            j["margin"] = number(h.margin);
            json wp;
            wp["index"] = h.worst_point;
            wp["u"] = h.worst_point < analysis.points.size() ? vector_json(analysis.points[h.worst_point].u)
                                                               : json::array();
            j["worst_point"] = std::move(wp);
        }
        j["note"] = h.note;
        hyps.push_back(std::move(j));
    }
    out["hypotheses"] = std::move(hyps);

    json sc = json::array();
    for (const auto& s : analysis.stable_currents) {
        json j;
        j["q"] = s.entry.q;
        j["max_value"] = number(s.entry.max_value);
        j["threshold"] = number(s.entry.threshold);
        j["margin"] = number(s.entry.margin);
        j["holds"] = s.entry.holds;
        j["point"] = s.point;
        j["search"] = search_json(s.entry.search);
        sc.push_back(std::move(j));
    }
    out["stable_currents"] = std::move(sc);

    if (analysis.four_frame) {
        const auto& ff = *analysis.four_frame;
        json j;
        j["min_value"] = number(ff.check.search.value);
        j["lambda"] = optional_number(ff.check.search.lambda);
        j["point"] = ff.point;
        j["analytic_lower_bound"] = optional_number(ff.check.analytic_lower_bound);
        j["certified_positive"] = ff.check.certified_positive;
        j["search"] = search_json(ff.check.search);
        out["four_frame"] = std::move(j);
    } else {
        out["four_frame"] = nullptr;
    }
    return out;
}

nlohmann::json to_json(const ViolationReport& report) {
    json out;
    out["suite"] = report.suite;
    out["seed"] = report.seed;
    out["trials"] = report.trials;
    out["checks"] = report.checks;
    out["passed"] = report.passed();
    out["violation_count"] = report.violations.size();
    out["min_slack"] = number(report.min_slack);
    out["min_tight_slack"] = optional_number(report.min_tight_slack);
    out["min_slack_at"] = vector_json(report.min_slack_at);
    json vs = json::array();
    for (const auto& v : report.violations) {
        if (vs.size() == kMaxListedViolations) {
            break;
        }
        json j;
        j["trial"] = v.trial;
        j["step"] = v.step;
        j["lhs"] = number(v.lhs);
        j["rhs"] = number(v.rhs);
        j["n"] = v.n;
        j["p"] = v.p;
        j["q"] = v.q;
        j["c"] = number(v.c);
        j["lambda"] = optional_number(v.lambda);
        j["witness"] = vector_json(v.witness);
        vs.push_back(std::move(j));
    }
    out["violations"] = std::move(vs);
    return out;
}

}  // namespace pinchgeo::app
