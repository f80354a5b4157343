// hyperlab command-line front end: constitutive checkers, homogeneous
// deformation traces as CSV, linearization, and figure-reproduction presets.
#include "hyperlab/bvp.hpp"
#include "hyperlab/conditions.hpp"
#include "hyperlab/errors.hpp"
#include "hyperlab/models.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hyperlab;
using nlohmann::json;

namespace {

constexpr const char* kReportSchema = "hyperlab-report/1";
constexpr const char* kManifestSchema = "hyperlab-manifest/1";

struct ModelSpec {
    std::string name;
    ParamMap params;
    double domain_clip = 0.99;
};

// Any of the three model kinds; at most one pointer is set.
struct LoadedModel {
    ModelSpec spec;
    std::unique_ptr<EnergyModel> energy;
    std::unique_ptr<CauchyLaw> law;
    std::unique_ptr<PrincipalStretchModel> principal;
};

json params_to_json(const ParamMap& p) {
    json j = json::object();
    for (const auto& [k, v] : p) {
        if (v.size() == 1)
            j[k] = v.front();
        else
            j[k] = v;
    }
    return j;
}

ModelSpec spec_from_json(const json& j) {
    ModelSpec spec;
    if (!j.contains("model") || !j["model"].is_string())
        throw BadParams("spec file: missing string field 'model'");
    spec.name = j["model"].get<std::string>();
    if (j.contains("params")) {
        for (const auto& [k, v] : j["params"].items()) {
            if (v.is_number())
                spec.params[k] = {v.get<double>()};
            else if (v.is_array())
                spec.params[k] = v.get<std::vector<double>>();
            else
                throw BadParams("spec file: parameter '" + k + "' must be number or array");
        }
    }
    if (j.contains("domain_clip")) spec.domain_clip = j["domain_clip"].get<double>();
    return spec;
}

json spec_to_json(const ModelSpec& spec) {
    return {{"model", spec.name},
            {"params", params_to_json(spec.params)},
            {"domain_clip", spec.domain_clip}};
}

LoadedModel load_model(const ModelSpec& spec) {
    LoadedModel m;
    m.spec = spec;
    if (is_energy_model(spec.name))
        m.energy = make_energy_model(spec.name, spec.params);
    else if (is_cauchy_law(spec.name))
        m.law = make_cauchy_law(spec.name, spec.params);
    else if (is_principal_model(spec.name))
        m.principal = make_principal_model(spec.name, spec.params);
    else
        throw BadParams("unknown model '" + spec.name + "'");
    return m;
}

std::string format_full(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17e", x);
    return buf;
}

json report_to_json(const ConditionReport& r) {
    json j;
    j["check"] = r.condition;
    j["verdict"] = to_string(r.verdict);
    j["worst_margin"] = r.worst_margin;
    j["samples"] = r.samples;
    j["skipped"] = r.skipped;
    if (r.has_witness) {
        const Vec6 c = to_basis6(r.witness_logV);
        j["witness"]["logV_basis6"] = c;
        j["witness"]["K"] = {r.witness_K.K1, r.witness_K.K2, r.witness_K.K3};
    }
    if (r.has_rank_one_witness) {
        j["witness"]["F"] = r.witness_F.a;
        j["witness"]["a"] = {r.witness_a.x, r.witness_a.y, r.witness_a.z};
        j["witness"]["b"] = {r.witness_b.x, r.witness_b.y, r.witness_b.z};
    }
    if (!std::isnan(r.witness_control)) j["witness"]["control"] = r.witness_control;
    return j;
}

std::vector<double> parse_grid(const std::string& s) {
    double lo, hi;
    int n;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2 || !(hi > lo))
        throw BadParams("grid must be 'lo:hi:n' with n >= 2 and hi > lo, got '" + s + "'");
    return linspace(lo, hi, n);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + path + "'");
    out << content;
}

std::string trace_to_csv(const Trace& t, int* failures = nullptr) {
    std::ostringstream os;
    const bool uniaxial = t.program != "shear";
    const bool shear = t.program == "shear";
    os << "control";
    if (uniaxial) os << ",lambda2";
    os << ",sigma11,sigma22";
    if (shear) os << ",sigma12";
    os << ",energy\n";
    int bad = 0;
    auto cell = [&](double v, bool lead_comma = true) {
        if (lead_comma) os << ",";
        if (!std::isnan(v)) os << format_full(v);
    };
    for (const TraceRow& r : t.rows) {
        if (!r.ok) ++bad;
        os << format_full(r.control);
        if (uniaxial) cell(r.lambda2);
        cell(r.s11);
        cell(r.s22);
        if (shear) cell(r.s12);
        cell(r.energy);
        os << "\n";
    }
    if (failures) *failures = bad;
    return os.str();
}

// ---------------------------------------------------------------------------

struct CheckOptions {
    std::vector<std::string> checks;
    int samples = 1000;
    double radius = 2.0;
    double lh_radius = 3.0;
    int lh_states = 200;
    int lh_directions = 32;
    std::uint64_t seed = 20240601;
    std::string out_path;
};

int cmd_check(const LoadedModel& m, const CheckOptions& opt) {
    SamplingPlan plan;
    plan.count = opt.samples;
    plan.radius = opt.radius;
    plan.seed = opt.seed;
    if (m.energy) {
        const double safe = m.energy->safe_logv_radius(m.spec.domain_clip);
        if (safe < plan.radius) plan.radius = safe;
    }
    FSamplingPlan fplan;
    fplan.states = opt.lh_states;
    fplan.directions = opt.lh_directions;
    fplan.radius = std::min(opt.lh_radius,
                            m.energy ? m.energy->safe_logv_radius(m.spec.domain_clip)
                                     : opt.lh_radius);
    fplan.seed = opt.seed;

    std::vector<std::string> checks = opt.checks;
    if (checks.empty()) {
        if (m.energy)
            checks = {"poly", "tstsm", "tstsm-numeric", "tstsm-plus", "hill", "lh"};
        else if (m.law)
            checks = {"tstsm-numeric", "tstsm-plus"};
        else
            checks = {"ball"};
    }

    json out;
    out["schema"] = kReportSchema;
    out["model"] = spec_to_json(m.spec);
    out["seed"] = opt.seed;
    out["plan"] = {{"samples", plan.count}, {"radius", plan.radius},
                   {"lh_states", fplan.states}, {"lh_directions", fplan.directions},
                   {"lh_radius", fplan.radius}};
    out["checks"] = json::array();

    bool any_fail = false;
    for (const std::string& c : checks) {
        ConditionReport rep;
        if (m.energy) {
            if (c == "poly")
                rep = check_polyconvex_sufficient(*m.energy, plan);
            else if (c == "tstsm")
                rep = check_tstsm_sufficient(*m.energy, plan);
            else if (c == "tstsm-numeric")
                rep = check_tstsm_numeric(*m.energy, plan);
            else if (c == "tstsm-plus")
                rep = check_tstsm_plus(*m.energy, plan);
            else if (c == "hill")
                rep = check_hill(*m.energy, plan);
            else if (c == "hill-inc")
                rep = check_hill_sufficient_incompressible(*m.energy, plan);
            else if (c == "lh")
                rep = check_legendre_hadamard(*m.energy, fplan);
            else
                throw BadParams("unknown check '" + c + "' for an energy model");
        } else if (m.law) {
            if (c == "tstsm-numeric")
                rep = check_tstsm_numeric(*m.law, plan);
            else if (c == "tstsm-plus")
                rep = check_tstsm_plus(*m.law, plan);
            else
                throw BadParams("check '" + c + "' needs a strain-energy model");
        } else {
            if (c == "ball")
                rep = check_ball_potential(*m.principal, linspace(-2.0, 2.0, 201));
            else
                throw BadParams("check '" + c + "' does not apply to a principal-stretch model");
        }
        if (rep.verdict == ConditionReport::Verdict::fail) any_fail = true;
        out["checks"].push_back(report_to_json(rep));
    }

    const std::string text = out.dump(2) + "\n";
    if (opt.out_path.empty())
        std::cout << text;
    else
        write_file(opt.out_path, text);
    return any_fail ? 2 : 0;
}

int cmd_trace(const LoadedModel& m, const std::string& program, std::string grid_spec,
              const std::string& out_path) {
    if (grid_spec.empty()) {
        if (program == "uniaxial")
            grid_spec = "-2:4:401";
        else if (program == "shear")
            grid_spec = "-8:8:401";
        else
            grid_spec = "-2:2:401";
    }
    const std::vector<double> grid = parse_grid(grid_spec);
    TraceResult res;
    if (program == "uniaxial") {
        if (!m.energy) throw BadParams("trace uniaxial needs a strain-energy model");
        res = trace_uniaxial(*m.energy, grid);
    } else if (program == "shear") {
        if (m.energy)
            res = trace_shear(*m.energy, grid);
        else if (m.law)
            res = trace_shear(*m.law, grid);
        else
            throw BadParams("trace shear needs an energy model or a Cauchy law");
    } else if (program == "uniaxial-incompressible") {
        if (!m.principal)
            throw BadParams("trace uniaxial-incompressible needs a principal-stretch model");
        res = trace_uniaxial_incompressible(*m.principal, grid);
    } else {
        throw BadParams("unknown trace program '" + program + "'");
    }
    int failures = 0;
    const std::string csv = trace_to_csv(res.trace, &failures);
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);
    if (failures > 0)
        std::cerr << "warning: " << failures << " rows with solver failures\n";
    return 0;
}

int cmd_linearize(const LoadedModel& m) {
    LinearizedConstants c;
    if (m.energy)
        c = linearize(*m.energy);
    else if (m.law)
        c = linearize(*m.law);
    else
        throw BadParams("linearize needs an energy model or a Cauchy law");
    std::printf("mu=%.12g lambda=%.12g kappa=%.12g nu=%.12g proper=%s\n", c.mu, c.lambda,
                c.kappa, c.nu, c.proper ? "true" : "false");
    return 0;
}

int cmd_reproduce(const std::string& figure, const std::string& outdir,
                  std::uint64_t seed) {
    json manifest;
    manifest["schema"] = kManifestSchema;
    manifest["figure"] = figure;
    manifest["seed"] = seed;
    if (figure == "fig1") {
        const std::vector<double> alphas = {0.0, 0.25, 0.5, 0.75};
        const std::string grid = "-2:4:401";
        manifest["model"] = "uniaxial_family";
        manifest["alphas"] = alphas;
        manifest["grid"] = grid;
        manifest["columns"] = "control = log lambda1";
        for (double a : alphas) {
            const auto model = uniaxial_family(a);
            const auto res = trace_uniaxial(*model, parse_grid(grid));
            char name[64];
            std::snprintf(name, sizeof name, "fig1_uniaxial_alpha_%.2f.csv", a);
            write_file(outdir + "/" + name, trace_to_csv(res.trace));
            manifest["files"].push_back(name);
        }
    } else if (figure == "fig2") {
        const std::vector<double> alphas = {0.25, 0.5, 0.75};
        const double beta = 1.0;
        const std::string grid = "-8:8:401";
        manifest["model"] = "shear_family";
        manifest["alphas"] = alphas;
        manifest["beta"] = beta;
        manifest["grid"] = grid;
        manifest["columns"] = "control = amount of shear gamma";
        for (double a : alphas) {
            const auto model = shear_family(a, beta);
            const auto res = trace_shear(*model, parse_grid(grid));
            char name[64];
            std::snprintf(name, sizeof name, "fig2_shear_alpha_%.2f.csv", a);
            write_file(outdir + "/" + name, trace_to_csv(res.trace));
            manifest["files"].push_back(name);
        }
    } else {
        throw BadParams("unknown figure '" + figure + "' (expected fig1 or fig2)");
    }
    write_file(outdir + "/manifest.json", manifest.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperlab: invariant-based hyperelasticity checkers and "
                 "homogeneous-deformation traces"};
    app.require_subcommand(1);

    // Model selection flags shared by the subcommands.
    std::string model_name, spec_path;
    std::map<std::string, double> scalar_flags;
    std::string mus_list, alphas_list;
    auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("--model", model_name, "model constructor name");
        cmd->add_option("--spec", spec_path, "model spec file (JSON)");
        for (const char* key : {"alpha", "beta", "gamma", "mu", "lambda"})
            cmd->add_option("--" + std::string(key), scalar_flags[key],
                            std::string(key) + " parameter");
        cmd->add_option("--mus", mus_list, "comma list of mu_p (ogden)");
        cmd->add_option("--alphas", alphas_list, "comma list of alpha_p (ogden)");
    };

    auto parse_list = [](const std::string& s) {
        std::vector<double> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
        return out;
    };

    auto build_spec = [&](CLI::App* cmd) {
        if (!spec_path.empty()) {
            if (!model_name.empty())
                throw BadParams("give either --model or --spec, not both");
            std::ifstream in(spec_path);
            if (!in) throw BadParams("cannot read spec file '" + spec_path + "'");
            json j;
            in >> j;
            return spec_from_json(j);
        }
        if (model_name.empty()) throw BadParams("missing --model (or --spec)");
        ModelSpec spec;
        spec.name = model_name;
        for (const auto& [k, v] : scalar_flags)
            if (cmd->count("--" + k) > 0) spec.params[k] = {v};
        if (!mus_list.empty()) spec.params["mu"] = parse_list(mus_list);
        if (!alphas_list.empty()) spec.params["alpha"] = parse_list(alphas_list);
        return spec;
    };

    // check
    CheckOptions copt;
    std::string checks_csv;
    CLI::App* check = app.add_subcommand("check", "run constitutive checkers");
    add_model_flags(check);
    check->add_option("--checks", checks_csv,
                      "comma list: poly,tstsm,tstsm-numeric,tstsm-plus,hill,hill-inc,lh,ball");
    check->add_option("--samples", copt.samples, "sample count for logV plans");
    check->add_option("--radius", copt.radius, "|logV| sampling radius");
    check->add_option("--lh-radius", copt.lh_radius, "log-stretch radius for LH states");
    check->add_option("--lh-states", copt.lh_states, "LH deformation-gradient count");
    check->add_option("--lh-directions", copt.lh_directions, "LH directions per state");
    check->add_option("--seed", copt.seed, "rng seed");
    check->add_option("--out", copt.out_path, "report file (default stdout)");

    // trace
    std::string program, grid_spec, trace_out;
    CLI::App* trace = app.add_subcommand("trace", "tabulate a deformation program as CSV");
    trace->add_option("program", program, "uniaxial | shear | uniaxial-incompressible")
        ->required();
    add_model_flags(trace);
    trace->add_option("--grid", grid_spec, "control grid 'lo:hi:n'");
    trace->add_option("--out", trace_out, "CSV file (default stdout)");

    // linearize
    CLI::App* lin = app.add_subcommand("linearize", "small-strain constants at identity");
    add_model_flags(lin);

    // reproduce
    std::string figure, outdir = ".";
    std::uint64_t rep_seed = 20240601;
    CLI::App* rep = app.add_subcommand("reproduce", "emit figure-reproduction CSV presets");
    rep->add_option("figure", figure, "fig1 | fig2")->required();
    rep->add_option("--outdir", outdir, "output directory (must exist)");
    rep->add_option("--seed", rep_seed, "rng seed recorded in the manifest");

    CLI11_PARSE(app, argc, argv);

    if (const char* env_seed = std::getenv("HYPERLAB_SEED")) {
        copt.seed = std::strtoull(env_seed, nullptr, 10);
        rep_seed = copt.seed;
    }

    try {
        if (check->parsed()) {
            if (!checks_csv.empty()) {
                std::stringstream ss(checks_csv);
                std::string item;
                while (std::getline(ss, item, ',')) copt.checks.push_back(item);
            }
            return cmd_check(load_model(build_spec(check)), copt);
        }
        if (trace->parsed())
            return cmd_trace(load_model(build_spec(trace)), program, grid_spec, trace_out);
        if (lin->parsed()) return cmd_linearize(load_model(build_spec(lin)));
        if (rep->parsed()) return cmd_reproduce(figure, outdir, rep_seed);
    } catch (const BadParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
