#include "pinchgeo/app/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "pinchgeo/parallel.hpp"

namespace pinchgeo::app {

namespace {

using nlohmann::json;

struct SampledEntry {
    std::string label;
    std::string source;
    int n = 0;
    int p = 0;
    AmbientSpec ambient = AmbientSpec::space_form(0.0);
    std::vector<SecondFundamentalForm> forms;
    std::vector<std::vector<double>> coords;
};

SampledEntry from_immersion(const ImmersionSpec& spec, const FileOptions& options, std::string label) {
    SampledEntry out;
    out.label = std::move(label);
    out.source = "sampled";
    out.n = spec.n();
    out.p = spec.p();
    out.ambient = spec.ambient();
    SampleOptions so;
    so.step = options.step;
    for (auto& pt : sample_manifold(spec, so)) {
        out.coords.emplace_back(pt.u.data(), pt.u.data() + pt.u.size());
        out.forms.push_back(std::move(pt.h));
    }
    return out;
}

SampledEntry resolve(const ManifoldEntry& entry, const FileOptions& options) {
    if (const auto* model = std::get_if<ModelEntry>(&entry)) {
        if (model->numeric) {
            return from_immersion(as_immersion(model->model, model->grid), options, model_name(model->model));
        }
        ExactModel exact = exact_h(model->model);
        SampledEntry out;
        out.label = model_name(model->model);
        out.source = "closed_form";
        out.n = exact.h.n();
        out.p = exact.h.p();
        out.ambient = exact.ambient;
        out.forms.push_back(std::move(exact.h));
        out.coords.emplace_back();
        return out;
    }
    const auto& spec = std::get<ImmersionSpec>(entry);
    return from_immersion(spec, options, spec.name().empty() ? "immersion" : spec.name());
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

/// Values within the boundary tolerance of zero print as 0.
double snap(double v, double scale) { return std::abs(v) <= kBoundaryTol * std::max(1.0, scale) ? 0.0 : v; }

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot write " + path);
    }
    f << text;
}

}  // namespace

EntryAnalysis analyze_entry(const ManifoldEntry& entry, const FileOptions& options) {
    const SampledEntry s = resolve(entry, options);
    SearchBudget budget;
    budget.restarts = options.budget;
    budget.seed = options.seed;

    EntryAnalysis out;
    std::vector<CurvatureTensor> tensors;
    for (std::size_t i = 0; i < s.forms.size(); ++i) {
        const SecondFundamentalForm& h = s.forms[i];
        tensors.push_back(gauss_curvature(h, s.ambient));
        out.points.push_back({s.coords[i], squared_norm_S(h), mean_curvature_H(h), scalar_curvature(tensors.back())});
    }
    const double tol = s.source == "sampled" ? kSampledBoundaryTol : kBoundaryTol;
    out.report = build_pinching_report(s.label, s.source, s.n, s.p, s.ambient, out.points, tol);

    for (std::size_t i = 0; i < s.forms.size(); ++i) {
        const auto entries = stable_current_condition(s.forms[i], s.ambient, budget);
        for (std::size_t k = 0; k < entries.size(); ++k) {
            if (out.stable_currents.size() <= k) {
                out.stable_currents.push_back({entries[k], i});
            } else if (entries[k].margin < out.stable_currents[k].entry.margin) {
                out.stable_currents[k] = {entries[k], i};
            }
        }
        if (s.n >= 4) {
            const SamplePoint& pt = out.points[i];
            BrendleCheck check = brendle_condition(tensors[i], pt.S, pt.H, s.ambient, budget);
            if (!out.four_frame || check.search.value < out.four_frame->check.search.value) {
                out.four_frame = FourFrameSummary{std::move(check), i};
            }
        }
    }
    return out;
}

nlohmann::json analyze(const ManifoldFile& file, const AnalyzeOverrides& overrides) {
    FileOptions options = file.options;
    if (overrides.step) {
        options.step = *overrides.step;
    }
    if (overrides.seed) {
        options.seed = *overrides.seed;
    }
    if (overrides.budget) {
        options.budget = *overrides.budget;
    }
    if (options.budget < 1 || options.step < 0.0) {
        throw UsageError("budget must be >= 1 and step >= 0");
    }

    std::vector<json> slots(file.entries.size());
    parallel_for(file.entries.size(),
                 [&](std::size_t i) { slots[i] = to_json(analyze_entry(file.entries[i], options)); });

    json doc;
    doc["schema"] = kReportSchema;
    doc["options"] = {{"seed", options.seed}, {"budget", options.budget}, {"step", options.step}};
    doc["reports"] = json::array();
    for (auto& r : slots) {
        doc["reports"].push_back(std::move(r));
    }
    return doc;
}

std::vector<double> param_grid(double min, double max, int steps) {
    if (steps < 1 || !(min <= max) || !std::isfinite(min) || !std::isfinite(max)) {
        throw UsageError("parameter grid needs steps >= 1 and finite min <= max");
    }
    if (steps == 1) {
        return {min};
    }
    std::vector<double> out;
    for (int k = 0; k < steps; ++k) {
        out.push_back(min + (max - min) * k / (steps - 1));
    }
    return out;
}

std::string sweep_csv(const SweepOptions& options) {
    if (options.family != "clifford" && options.family != "cylinder") {
        throw UsageError("family must be clifford or cylinder");
    }
    if (options.values.empty()) {
        throw UsageError("sweep needs at least one parameter value");
    }
    std::ostringstream csv;
    csv << kSweepHeader << '\n';
    for (double v : options.values) {
        ModelId model = options.family == "clifford" ? ModelId{CliffordProduct{options.n, v}}
                                                     : ModelId{SphericalCylinder{options.n, v}};
        try {
            validate(model);
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
        const ExactModel exact = exact_h(model);
        const int n = options.n;
        const double c = exact.ambient.c();
        const double S = squared_norm_S(exact.h);
        const double H = mean_curvature_H(exact.h);
        const double R = scalar_curvature(gauss_curvature(exact.h, exact.ambient));
        const std::vector<SamplePoint> pts{{{}, S, H, R}};
        const PinchingReport rep = build_pinching_report(model_name(model), "closed_form", n, 1, exact.ambient, pts);

        const ShapePoint shape{S, H};
        const ScalarPoint scalar{R, H};
        csv << options.family << ',' << n << ',' << format_real(v) << ',' << format_real(S) << ','
            << format_real(H) << ',' << format_real(snap(lambda_pinch({&shape, 1}, n, c), S)) << ','
            << format_real(snap(mu_pinch({&scalar, 1}, n, c), S)) << ','
            << format_real(snap(space_form_margin(S, H, c, n), S)) << ','
            << format_real(snap(alpha_margin(S, H, c, n), S)) << ','
            << to_string(rep.find("scalar_pinching")->status) << '\n';
    }
    return csv.str();
}

VerifyOutcome verify(const VerifyOptions& options) {
    std::vector<std::string> suites = options.suites.empty() ? suite_names() : options.suites;
    for (const auto& s : suites) {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end()) {
            throw UsageError("unknown suite '" + s + "'");
        }
    }
    if (options.trials && *options.trials < 1) {
        throw UsageError("--trials must be >= 1");
    }

    VerifyOutcome out;
    out.passed = true;
    json doc;
    doc["schema"] = kVerifySchema;
    doc["seed"] = options.seed;
    doc["tol"] = options.tol;
    doc["scale"] = options.scale;
    doc["suites"] = json::array();
    for (const auto& s : suites) {
        TrialConfig cfg;
        cfg.seed = options.seed;
        cfg.tol = options.tol;
        cfg.scale = options.scale;
        cfg.trials = options.trials.value_or(default_trials(s));
        try {
            cfg.validate();
        } catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
        const ViolationReport rep = run_suite(s, cfg);
        out.passed = out.passed && rep.passed();
        doc["suites"].push_back(to_json(rep));
    }
    doc["passed"] = out.passed;
    out.document = std::move(doc);
    return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curvature pinching analysis for submanifolds of space forms"};
    app.require_subcommand(1);

    std::string analyze_file;
    std::string out_path;
    std::optional<double> step;
    std::optional<std::uint64_t> seed;
    std::optional<int> budget;
    auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate every pinching hypothesis for a manifold file");
    analyze_cmd->add_option("file", analyze_file, "Manifold file (JSON)")->required();
    analyze_cmd->add_option("--step", step, "Finite-difference step (0 = per-immersion default)");
    analyze_cmd->add_option("--seed", seed, "Seed for the frame searches");
    analyze_cmd->add_option("--budget", budget, "Multistart restarts for the frame searches");
    analyze_cmd->add_option("--out", out_path, "Write the JSON report here instead of stdout");

    SweepOptions sweep_opts;
    std::optional<double> pmin;
    std::optional<double> pmax;
    int psteps = 1;
    std::vector<double> values;
    auto* sweep_cmd = app.add_subcommand("sweep", "Closed-form margins over a model family");
    sweep_cmd->add_option("--family", sweep_opts.family, "clifford or cylinder")->required();
    sweep_cmd->add_option("--n", sweep_opts.n, "Dimension")->required();
    sweep_cmd->add_option("--param-min", pmin, "Smallest lambda (clifford) or H0 (cylinder)");
    sweep_cmd->add_option("--param-max", pmax, "Largest parameter");
    sweep_cmd->add_option("--param-steps", psteps, "Number of evenly spaced values");
    sweep_cmd->add_option("--values", values, "Explicit parameter values")->delimiter(',');
    sweep_cmd->add_option("--out", out_path, "Write the CSV here instead of stdout");

    VerifyOptions verify_opts;
    std::optional<int> trials;
    auto* verify_cmd = app.add_subcommand("verify", "Randomized checks of the curvature inequalities");
    verify_cmd->add_option("--suite", verify_opts.suites, "Suite to run (repeatable; default all)");
    verify_cmd->add_option("--trials", trials, "Trials per suite (default per suite)");
    verify_cmd->add_option("--seed", verify_opts.seed, "Base seed");
    verify_cmd->add_option("--tol", verify_opts.tol, "Relative tolerance");
    verify_cmd->add_option("--scale", verify_opts.scale, "Coefficient scale");
    verify_cmd->add_option("--out", out_path, "Write the JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) {
            const ManifoldFile file = load_manifold_file(analyze_file);
            const json doc = analyze(file, {step, seed, budget});
            write_output(doc.dump(2) + "\n", out_path, out);
            return 0;
        }
        if (*sweep_cmd) {
            if (!values.empty()) {
                if (pmin || pmax) {
                    throw UsageError("use either --values or --param-min/--param-max");
                }
                sweep_opts.values = values;
            } else {
                if (!pmin) {
                    throw UsageError("sweep needs --values or --param-min");
                }
                sweep_opts.values = param_grid(*pmin, pmax.value_or(*pmin), psteps);
            }
            write_output(sweep_csv(sweep_opts), out_path, out);
            return 0;
        }
        verify_opts.trials = trials;
        const VerifyOutcome res = verify(verify_opts);
        write_output(res.document.dump(2) + "\n", out_path, out);
        return res.passed ? 0 : 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const EmptyFileError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const FileError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const PointError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace pinchgeo::app
