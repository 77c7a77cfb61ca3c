// Command-line front end: runs the optical-data -> dispersion -> Lifshitz
// pipeline and writes plot-ready tables.
//
// Subcommands:
//   fit      Drude parameters from the low-frequency window of each table
//   epsilon  eps''(omega) model curve and eps(i xi) cache per material
//   eta      reduction-factor curve eta_E(L), eta_F(L) per material
//   force    sphere-plane force via the proximity-force mapping
//   certify  oracle cross-checks; nonzero exit if any case fails
//
// Configuration comes from a flat key=value file (--config) overridden by
// command-line flags.  Outputs are byte-stable for a fixed config/dataset.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/dispersion.hpp"
#include "casimir/error.hpp"
#include "casimir/kernels.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/oracle.hpp"

namespace {

using casimir::DielectricModel;
using casimir::DrudeFit;
using casimir::ErrorCode;
using casimir::EtaCurve;
using casimir::HighFreqClosure;
using casimir::Mirror;
using casimir::MirrorPair;
using casimir::OpticalTable;
using casimir::PhysicalConstants;
using casimir::QuadratureSpec;

struct MaterialRef {
    std::string name;
    std::string file;  // path or builtin:perfect / builtin:drude:WP:GAMMA
};

struct RunConfig {
    std::vector<MaterialRef> materials;
    std::string units = "auto";
    std::string columns = "auto";
    double fit_window_lo = 0.1;
    double fit_window_hi = 1.0;
    std::string closure = "power_law";
    double eps_tol = 1e-8;
    int eps_ppd = 16;
    int xi_nodes = 64;
    int kappa_nodes = 64;
    double tol = 1e-6;
    std::string scheme = "adaptive";
    double lmin = 0.6;
    double lmax = 6.0;
    int lpoints = 20;
    bool log_spacing = true;
    std::string geometry = "plane-plane";
    double radius_cm = 10.0;
    double reference_eta = 0.78;
    double reference_l = 0.6;
    double xi_min = 1e-3;
    double xi_max = 1e3;
    int xi_points = 121;
    std::string probe_l = "0.6,2.0";
    std::string out_dir = "out";
    double hbar_c_override = 0.0;  // certify validation hook; 0 = off

    std::string canonical() const;
    uint64_t hash() const;
};

std::string RunConfig::canonical() const {
    std::ostringstream ss;
    char buf[64];
    auto put = [&](const char* key, const std::string& v) { ss << key << "=" << v << "\n"; };
    auto putd = [&](const char* key, double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        put(key, buf);
    };
    for (const auto& m : materials) put("material", m.name + "=" + m.file);
    put("units", units);
    put("columns", columns);
    putd("fit_window_lo", fit_window_lo);
    putd("fit_window_hi", fit_window_hi);
    put("closure", closure);
    putd("eps_tol", eps_tol);
    put("eps_ppd", std::to_string(eps_ppd));
    put("xi_nodes", std::to_string(xi_nodes));
    put("kappa_nodes", std::to_string(kappa_nodes));
    putd("tol", tol);
    put("scheme", scheme);
    putd("lmin", lmin);
    putd("lmax", lmax);
    put("lpoints", std::to_string(lpoints));
    put("log_spacing", log_spacing ? "true" : "false");
    put("geometry", geometry);
    putd("radius_cm", radius_cm);
    putd("reference_eta", reference_eta);
    putd("reference_l", reference_l);
    putd("xi_min", xi_min);
    putd("xi_max", xi_max);
    put("xi_points", std::to_string(xi_points));
    put("probe_l", probe_l);
    putd("hbar_c_override", hbar_c_override);
    return ss.str();
}

uint64_t RunConfig::hash() const {
    // FNV-1a 64
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void apply_config_line(RunConfig& cfg, const std::string& key, const std::string& value,
                       const std::string& context) {
    auto bad = [&](const std::string& what) {
        casimir::fail(ErrorCode::invalid_argument, context + ": " + what);
    };
    auto as_double = [&](const std::string& v) {
        try {
            size_t pos = 0;
            double d = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return d;
        } catch (const std::exception&) {
            bad("bad number '" + v + "' for key '" + key + "'");
        }
        return 0.0;
    };
    auto as_int = [&](const std::string& v) { return static_cast<int>(as_double(v)); };

    if (key == "material") {
        auto eq = value.find('=');
        if (eq == std::string::npos) bad("material needs NAME=FILE");
        cfg.materials.push_back({value.substr(0, eq), value.substr(eq + 1)});
    } else if (key == "units") cfg.units = value;
    else if (key == "columns") cfg.columns = value;
    else if (key == "fit_window_lo") cfg.fit_window_lo = as_double(value);
    else if (key == "fit_window_hi") cfg.fit_window_hi = as_double(value);
    else if (key == "closure") cfg.closure = value;
    else if (key == "eps_tol") cfg.eps_tol = as_double(value);
    else if (key == "eps_ppd") cfg.eps_ppd = as_int(value);
    else if (key == "xi_nodes") cfg.xi_nodes = as_int(value);
    else if (key == "kappa_nodes") cfg.kappa_nodes = as_int(value);
    else if (key == "tol") cfg.tol = as_double(value);
    else if (key == "scheme") cfg.scheme = value;
    else if (key == "lmin") cfg.lmin = as_double(value);
    else if (key == "lmax") cfg.lmax = as_double(value);
    else if (key == "lpoints") cfg.lpoints = as_int(value);
    else if (key == "log_spacing") cfg.log_spacing = (value == "true" || value == "1");
    else if (key == "geometry") cfg.geometry = value;
    else if (key == "radius_cm") cfg.radius_cm = as_double(value);
    else if (key == "reference_eta") cfg.reference_eta = as_double(value);
    else if (key == "reference_l") cfg.reference_l = as_double(value);
    else if (key == "xi_min") cfg.xi_min = as_double(value);
    else if (key == "xi_max") cfg.xi_max = as_double(value);
    else if (key == "xi_points") cfg.xi_points = as_int(value);
    else if (key == "probe_l") cfg.probe_l = value;
    else if (key == "out") cfg.out_dir = value;
    else bad("unknown config key '" + key + "'");
}

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) casimir::fail(ErrorCode::io_error, "cannot open config '" + path + "'");
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
            if (blank) continue;
            casimir::fail(ErrorCode::invalid_argument,
                          path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        auto trim = [](std::string s) {
            const char* ws = " \t\r";
            s.erase(0, s.find_first_not_of(ws));
            auto last = s.find_last_not_of(ws);
            s.erase(last == std::string::npos ? 0 : last + 1);
            return s;
        };
        apply_config_line(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)),
                          path + ":" + std::to_string(line_no));
    }
}

QuadratureSpec quad_from(const RunConfig& cfg) {
    QuadratureSpec q;
    q.xi_nodes = cfg.xi_nodes;
    q.kappa_nodes = cfg.kappa_nodes;
    q.target_rel_tol = cfg.tol;
    if (cfg.scheme == "adaptive") q.scheme = QuadratureSpec::Scheme::adaptive;
    else if (cfg.scheme == "gauss_legendre_mapped")
        q.scheme = QuadratureSpec::Scheme::gauss_legendre_mapped;
    else casimir::fail(ErrorCode::invalid_argument, "unknown scheme '" + cfg.scheme + "'");
    q.validate();
    return q;
}

PhysicalConstants constants_from(const RunConfig& cfg) {
    PhysicalConstants pc;
    if (cfg.hbar_c_override > 0.0) {
        // hc_ev_um() == c * 1e6 / ev_to_radps, so steer it via ev_to_radps
        pc.ev_to_radps = pc.c * 1e6 / cfg.hbar_c_override;
    }
    return pc;
}

std::vector<double> distance_grid(const RunConfig& cfg) {
    if (cfg.lpoints < 1 || !(cfg.lmin > 0.0) || !(cfg.lmin <= cfg.lmax))
        casimir::fail(ErrorCode::invalid_argument, "bad L grid");
    std::vector<double> grid(cfg.lpoints);
    if (cfg.lpoints == 1) {
        grid[0] = cfg.lmin;
        return grid;
    }
    for (int i = 0; i < cfg.lpoints; ++i) {
        const double s = static_cast<double>(i) / (cfg.lpoints - 1);
        grid[i] = cfg.log_spacing ? cfg.lmin * std::pow(cfg.lmax / cfg.lmin, s)
                                  : cfg.lmin + (cfg.lmax - cfg.lmin) * s;
    }
    return grid;
}

std::vector<double> parse_probe_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

// Loaded material with everything downstream steps need.
struct Prepared {
    MaterialRef ref;
    bool perfect = false;
    std::optional<OpticalTable> table;
    std::optional<DrudeFit> fit;
    std::optional<DielectricModel> model;
    std::optional<Mirror> mirror;
};

OpticalTable load_declared_table(const RunConfig& cfg, const MaterialRef& ref,
                                 const PhysicalConstants& pc) {
    std::ifstream in(ref.file);
    if (!in) casimir::fail(ErrorCode::io_error, "cannot open '" + ref.file + "'");
    OpticalTable t;
    if (cfg.units == "auto" && cfg.columns == "auto") {
        t = casimir::parse_table_auto(in, ref.name, pc);
    } else if (cfg.units != "auto" && cfg.columns != "auto") {
        t = casimir::parse_table(in, casimir::frequency_unit_from_string(cfg.units),
                                 casimir::column_layout_from_string(cfg.columns), ref.name, pc);
    } else {
        casimir::fail(ErrorCode::invalid_argument,
                      "units and columns must both be declared or both be auto");
    }
    if (t.source.empty()) t.source = ref.file;
    else t.source += " (" + ref.file + ")";
    return t;
}

Prepared prepare_material(const RunConfig& cfg, const MaterialRef& ref,
                          const PhysicalConstants& pc, bool build_mirror,
                          double L_lo, double L_hi, const QuadratureSpec& quad) {
    Prepared p;
    p.ref = ref;
    if (ref.file == "builtin:perfect") {
        p.perfect = true;
        if (build_mirror) p.mirror = Mirror::perfect();
        return p;
    }
    if (ref.file.rfind("builtin:drude:", 0) == 0) {
        auto rest = ref.file.substr(std::string("builtin:drude:").size());
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            casimir::fail(ErrorCode::invalid_argument, "builtin:drude needs WP:GAMMA");
        casimir::DrudeParams dp{std::stod(rest.substr(0, colon)),
                                std::stod(rest.substr(colon + 1))};
        p.fit = DrudeFit{dp, 0.0, 0};
        p.model = DielectricModel::pure_drude(dp);
        if (build_mirror) {
            const auto range = casimir::required_xi_range(L_lo, L_hi, quad, pc);
            p.mirror = Mirror::from_model(*p.model, range.lo, range.hi, cfg.eps_ppd, cfg.eps_tol);
        }
        return p;
    }
    p.table = load_declared_table(cfg, ref, pc);
    p.fit = casimir::fit_drude(*p.table, {cfg.fit_window_lo, cfg.fit_window_hi});
    const auto closure = cfg.closure == "truncate" ? HighFreqClosure::truncate
                                                   : HighFreqClosure::power_law_decay;
    p.model = DielectricModel::from_table(*p.table, p.fit->params, closure);
    if (build_mirror) {
        const auto range = casimir::required_xi_range(L_lo, L_hi, quad, pc);
        p.mirror = Mirror::from_model(*p.model, range.lo, range.hi, cfg.eps_ppd, cfg.eps_tol);
    }
    return p;
}

std::vector<std::string> provenance_comments(const RunConfig& cfg, const Prepared& p) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "0x%016llx",
                  static_cast<unsigned long long>(cfg.hash()));
    std::vector<std::string> out;
    out.push_back("config_hash: " + std::string(buf));
    if (p.perfect) out.push_back("source: ideal mirror (r^2 = 1)");
    else if (p.table) out.push_back("source: " + p.table->source);
    else out.push_back("source: " + p.ref.file);
    return out;
}

void write_meta_sidecar(const RunConfig& cfg, const Prepared& p, const QuadratureSpec& quad,
                        const std::string& path) {
    nlohmann::json j;
    j["material"] = p.ref.name;
    j["dataset"] = p.ref.file;
    if (p.table) j["provenance"] = p.table->source;
    if (p.fit) {
        j["drude"]["omega_p_eV"] = p.fit->params.omega_p;
        j["drude"]["gamma_eV"] = p.fit->params.gamma;
        j["drude"]["rms_log_residual"] = p.fit->rms_log_residual;
        j["drude"]["fit_window_eV"] = {cfg.fit_window_lo, cfg.fit_window_hi};
    }
    j["quadrature"]["xi_nodes"] = quad.xi_nodes;
    j["quadrature"]["kappa_nodes"] = quad.kappa_nodes;
    j["quadrature"]["target_rel_tol"] = quad.target_rel_tol;
    j["quadrature"]["scheme"] =
        quad.scheme == QuadratureSpec::Scheme::adaptive ? "adaptive" : "gauss_legendre_mapped";
    j["distances_um"] = {{"min", cfg.lmin}, {"max", cfg.lmax}, {"points", cfg.lpoints}};
    j["kernel"] = casimir::kernels::active_kernel_name();
    char buf[32];
    std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(cfg.hash()));
    j["config_hash"] = buf;
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

std::filesystem::path ensure_out_dir(const RunConfig& cfg) {
    std::filesystem::path dir(cfg.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) casimir::fail(ErrorCode::io_error, "cannot create output dir " + cfg.out_dir);
    return dir;
}

// ------------------------------------------------------------- subcommands

int cmd_fit(const RunConfig& cfg) {
    if (cfg.materials.empty())
        casimir::fail(ErrorCode::invalid_argument, "no materials given (use --material)");
    const auto pc = constants_from(cfg);
    for (const auto& ref : cfg.materials) {
        auto p = prepare_material(cfg, ref, pc, false, 0, 0, {});
        if (!p.fit) {
            std::printf("%s: no Drude fit (builtin material)\n", ref.name.c_str());
            continue;
        }
        std::printf("%s: omega_p = %.9e eV  gamma = %.9e eV  rms_log_residual = %.3e  "
                    "samples = %d  window = [%g, %g] eV\n",
                    ref.name.c_str(), p.fit->params.omega_p, p.fit->params.gamma,
                    p.fit->rms_log_residual, p.fit->samples_used, cfg.fit_window_lo,
                    cfg.fit_window_hi);
    }
    return 0;
}

int cmd_epsilon(const RunConfig& cfg) {
    if (cfg.materials.empty())
        casimir::fail(ErrorCode::invalid_argument, "no materials given (use --material)");
    const auto pc = constants_from(cfg);
    const auto dir = ensure_out_dir(cfg);
    for (const auto& ref : cfg.materials) {
        auto p = prepare_material(cfg, ref, pc, false, 0, 0, {});
        if (!p.model)
            casimir::fail(ErrorCode::invalid_argument,
                          "epsilon needs a dielectric model; '" + ref.file + "' has none");
        const int n = cfg.xi_points;
        const double w_hi = p.model->omega_max();
        const double w_lo = 1e-3;
        std::ofstream out(dir / (ref.name + "_eps.csv"));
        for (const auto& c : provenance_comments(cfg, p)) out << "# " << c << "\n";
        out << "omega_eV eps2 xi_eV eps_ixi\n";
        char buf[160];
        for (int i = 0; i < n; ++i) {
            const double s = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
            const double w = w_lo * std::pow(w_hi / w_lo, s);
            const double xi = cfg.xi_min * std::pow(cfg.xi_max / cfg.xi_min, s);
            const double e2 = p.model->eps2(w);
            const double ei = casimir::eps_imag_axis(*p.model, xi, cfg.eps_tol);
            std::snprintf(buf, sizeof(buf), "%.8e %.8e %.8e %.8e\n", w, e2, xi, ei);
            out << buf;
        }
    }
    return 0;
}

int cmd_eta(const RunConfig& cfg) {
    if (cfg.materials.empty())
        casimir::fail(ErrorCode::invalid_argument, "no materials given (use --material)");
    const auto pc = constants_from(cfg);
    const auto quad = quad_from(cfg);
    const auto dir = ensure_out_dir(cfg);
    const auto grid = distance_grid(cfg);
    const double L_lo = std::min(cfg.lmin, cfg.reference_l);
    const double L_hi = std::max(cfg.lmax, cfg.reference_l);

    struct Ran {
        Prepared prep;
        EtaCurve curve;
        double eta_at_ref = 0.0;
    };
    std::vector<Ran> runs;
    for (const auto& ref : cfg.materials) {
        Ran r;
        r.prep = prepare_material(cfg, ref, pc, true, L_lo, L_hi, quad);
        const MirrorPair pair = MirrorPair::identical(*r.prep.mirror);
        r.curve = casimir::eta_curve(pair, grid, quad, pc);
        r.curve.label = ref.name;
        r.eta_at_ref = casimir::eta_E(pair, cfg.reference_l, quad, pc).eta;
        runs.push_back(std::move(r));
    }

    for (const auto& r : runs) {
        std::ofstream out(dir / (r.prep.ref.name + "_eta.csv"));
        auto comments = provenance_comments(cfg, r.prep);
        for (const auto& w : r.curve.warnings) comments.push_back("warning: " + w);
        casimir::write_eta_curve_csv(r.curve, out, comments);
        write_meta_sidecar(cfg, r.prep, quad,
                           (dir / (r.prep.ref.name + "_eta_meta.json")).string());
    }

    if (runs.size() >= 2) {
        std::ofstream out(dir / "eta_comparison.csv");
        for (const auto& c : provenance_comments(cfg, runs[0].prep)) out << "# " << c << "\n";
        out << "L_um eta_" << runs[0].prep.ref.name << " eta_" << runs[1].prep.ref.name
            << " rel_diff\n";
        char buf[160];
        for (size_t i = 0; i < grid.size(); ++i) {
            const auto& ea = runs[0].curve.entries[i];
            const auto& eb = runs[1].curve.entries[i];
            if (ea.failed || eb.failed) {
                out << "# FAILED L = " << grid[i] << "\n";
                continue;
            }
            std::snprintf(buf, sizeof(buf), "%.8e %.8e %.8e %.8e\n", grid[i], ea.eta_E,
                          eb.eta_E, std::abs(ea.eta_E - eb.eta_E) / ea.eta_E);
            out << buf;
        }
    }

    if (cfg.reference_eta > 0.0) {
        std::ofstream out(dir / "reference_comparison.txt");
        for (const auto& c : provenance_comments(cfg, runs[0].prep)) out << "# " << c << "\n";
        out << "material L_um eta_E reference excess_percent\n";
        char buf[160];
        for (const auto& r : runs) {
            const double excess = (r.eta_at_ref / cfg.reference_eta - 1.0) * 100.0;
            std::snprintf(buf, sizeof(buf), "%s %.8e %.8e %.8e %.8e\n",
                          r.prep.ref.name.c_str(), cfg.reference_l, r.eta_at_ref,
                          cfg.reference_eta, excess);
            out << buf;
        }
    }

    for (const auto& r : runs)
        for (const auto& w : r.curve.warnings)
            std::fprintf(stderr, "warning [%s]: %s\n", r.prep.ref.name.c_str(), w.c_str());
    return 0;
}

int cmd_force(const RunConfig& cfg) {
    if (cfg.materials.empty())
        casimir::fail(ErrorCode::invalid_argument, "no materials given (use --material)");
    if (!(cfg.radius_cm > 0.0))
        casimir::fail(ErrorCode::invalid_argument, "sphere-plane geometry needs radius_cm > 0");
    const auto pc = constants_from(cfg);
    const auto quad = quad_from(cfg);
    const auto dir = ensure_out_dir(cfg);
    const auto grid = distance_grid(cfg);
    for (const auto& ref : cfg.materials) {
        auto p = prepare_material(cfg, ref, pc, true, cfg.lmin, cfg.lmax, quad);
        const MirrorPair pair = MirrorPair::identical(*p.mirror);
        std::ofstream out(dir / (ref.name + "_force_sphere.csv"));
        for (const auto& c : provenance_comments(cfg, p)) out << "# " << c << "\n";
        char rbuf[64];
        std::snprintf(rbuf, sizeof(rbuf), "# sphere radius R = %.8e cm\n", cfg.radius_cm);
        out << rbuf;
        out << "L_um F_sp_N eta geometry_warning\n";
        char buf[160];
        for (double L : grid) {
            const auto r = casimir::force_sphere_plane(pair, L, cfg.radius_cm, quad, pc);
            std::snprintf(buf, sizeof(buf), "%.8e %.8e %.8e %d\n", L, r.force_N, r.eta,
                          r.geometry_warning ? 1 : 0);
            out << buf;
        }
        write_meta_sidecar(cfg, p, quad, (dir / (ref.name + "_force_meta.json")).string());
    }
    return 0;
}

int cmd_certify(const RunConfig& cfg) {
    const auto pc = constants_from(cfg);
    const auto quad = quad_from(cfg);
    const auto probes = parse_probe_list(cfg.probe_l);

    std::vector<MirrorPair> pairs;
    if (!probes.empty()) {
        const double L_lo = *std::min_element(probes.begin(), probes.end());
        const double L_hi = *std::max_element(probes.begin(), probes.end());
        // always include a pure-Drude reference material (closed-form eps)
        pairs.push_back(
            MirrorPair::identical(Mirror::drude_closed_form({9.0, 0.035}, "drude-ref")));
        for (const auto& ref : cfg.materials) {
            auto p = prepare_material(cfg, ref, pc, true, 0.99 * L_lo, 1.01 * L_hi, quad);
            if (p.perfect) continue;  // perfect-mirror cases are built in
            pairs.push_back(MirrorPair::identical(*p.mirror));
        }
    }

    const auto reports = casimir::oracle::run_certification_suite(pairs, probes, quad, pc);
    casimir::oracle::write_report(reports, std::cout);
    return casimir::oracle::all_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir energy/force reduction factors from tabulated optical data"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    std::vector<std::string> material_flags;
    // flag staging: only apply values the user actually passed (flag > config)
    double lmin = 0, lmax = 0, tol = 0, radius = 0, hbarc = 0;
    int lpoints = 0;
    std::string out_flag;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value config file");
        sub->add_option("--material", material_flags,
                        "NAME=FILE (repeatable; FILE may be builtin:perfect or "
                        "builtin:drude:WP:GAMMA)");
        sub->add_option("--lmin", lmin, "smallest distance, um");
        sub->add_option("--lmax", lmax, "largest distance, um");
        sub->add_option("--lpoints", lpoints, "number of distances");
        sub->add_option("--radius-cm", radius, "sphere radius, cm");
        sub->add_option("--tol", tol, "quadrature relative tolerance");
        sub->add_option("--out", out_flag, "output directory");
        sub->add_option("--hbar-c", hbarc, "override hbar*c in eV um (validation hook)");
    };

    auto* fit = app.add_subcommand("fit", "Drude fit of the low-frequency window");
    auto* eps = app.add_subcommand("epsilon", "dielectric tables on both axes");
    auto* eta = app.add_subcommand("eta", "reduction-factor curves");
    auto* force = app.add_subcommand("force", "sphere-plane force (proximity mapping)");
    auto* certify = app.add_subcommand("certify", "oracle cross-checks");
    for (auto* sub : {fit, eps, eta, force, certify}) add_common(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) load_config_file(cfg, config_path);
        for (const auto& m : material_flags) apply_config_line(cfg, "material", m, "--material");
        if (lmin > 0) cfg.lmin = lmin;
        if (lmax > 0) cfg.lmax = lmax;
        if (lpoints > 0) cfg.lpoints = lpoints;
        if (tol > 0) cfg.tol = tol;
        if (radius > 0) cfg.radius_cm = radius;
        if (hbarc > 0) cfg.hbar_c_override = hbarc;
        if (!out_flag.empty()) cfg.out_dir = out_flag;

        if (fit->parsed()) return cmd_fit(cfg);
        if (eps->parsed()) return cmd_epsilon(cfg);
        if (eta->parsed()) return cmd_eta(cfg);
        if (force->parsed()) return cmd_force(cfg);
        if (certify->parsed()) return cmd_certify(cfg);
    } catch (const casimir::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case ErrorCode::malformed_row:
            case ErrorCode::negative_value:
            case ErrorCode::empty_table:
            case ErrorCode::non_monotonic:
            case ErrorCode::too_few_samples:
            case ErrorCode::invalid_argument:
            case ErrorCode::io_error:
                return 2;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
