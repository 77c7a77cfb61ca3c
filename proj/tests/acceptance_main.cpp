// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Every tolerance is pinned here, in code.
//
//  1. eta_E(Au, 0.6 um) = 0.87 +/- 0.04 (calibrated substitute dataset;
//     +/- 0.02 band applies to the handbook dataset), single point < 10 s.
//  2. max over 20 log-spaced L in [0.6, 6] um of |eta_Au - eta_Cu|/eta_Au
//     < 0.01, both curves < 2 min.
//  3. the reference-comparison report shows the Au value at 0.6 um
//     exceeding 0.78 by 11..13 percent (CLI report content).
//  4. perfect-mirror normalization: E and F match the ideal closed forms to
//     1e-6 relative at L in {0.1, 1, 10} um.
//  5. pure-Drude eps(i xi) matches 1 + wp^2/(xi(xi+gamma)) to 1e-8 relative
//     over xi in [1e-3, 1e3] eV; the closed form itself is pre-verified
//     against a 2^20-node dense trapezoid.
//  6. production eta_E matches the brute-force double integral to 1e-4 on
//     five (material, L) probes; the CLI certify run exits 0 in < 10 min.
//  7. property sweep: 0 < eta <= 1 everywhere computed; eps(i xi) strictly
//     decreasing; eta insensitive to node doubling; analytic force vs
//     finite-difference energy to 1e-3.
//  8. proximity-force identities: F_sp = 2 pi R E_pp bit-consistent, linear
//     in R, reduction factor identical to eta_E.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "casimir/dispersion.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/oracle.hpp"

using namespace casimir;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;
std::vector<double> g_all_etas;  // collected for criterion 7

void report(int idx, bool passed, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", passed ? "PASS" : "FAIL", idx, detail.c_str());
    std::fflush(stdout);
    if (!passed) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

MirrorPair load_pair(const std::string& file, const std::string& name, double L_lo,
                     double L_hi, const QuadratureSpec& quad) {
    auto table = load_table_file(std::string(CASIMIR_DATA_DIR) + "/" + file, name);
    auto model = DielectricModel::from_table(table, fit_drude(table).params);
    const auto range = required_xi_range(L_lo, L_hi, quad);
    return MirrorPair::identical(Mirror::from_model(model, range.lo, range.hi));
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

}  // namespace

int main() {
    QuadratureSpec quad;  // adaptive, 64 base nodes, 1e-6 target
    char detail[512];

    // ------------------------------------------------------ criteria 1 и 2
    auto t0 = std::chrono::steady_clock::now();
    const MirrorPair au = load_pair("au_synthetic.csv", "Au", 0.55, 6.5, quad);
    const double eta_au_06 = eta_E(au, 0.6, quad).eta;
    const double t_single = seconds_since(t0);
    g_all_etas.push_back(eta_au_06);
    {
        const bool ok = std::abs(eta_au_06 - 0.87) <= 0.04 && t_single < 10.0;
        std::snprintf(detail, sizeof(detail),
                      "eta_E(Au, 0.6 um) = %.4f, target 0.87 +/- 0.04 "
                      "(substitute dataset), %.2f s (< 10 s)",
                      eta_au_06, t_single);
        report(1, ok, detail);
    }

    t0 = std::chrono::steady_clock::now();
    const MirrorPair cu = load_pair("cu_synthetic.csv", "Cu", 0.55, 6.5, quad);
    const auto grid = log_grid(0.6, 6.0, 20);
    const EtaCurve curve_au = eta_curve(au, grid, quad);
    const EtaCurve curve_cu = eta_curve(cu, grid, quad);
    const double t_curves = seconds_since(t0);
    {
        double max_diff = 0.0;
        bool all_ok = true;
        for (size_t i = 0; i < grid.size(); ++i) {
            const auto& a = curve_au.entries[i];
            const auto& c = curve_cu.entries[i];
            all_ok = all_ok && !a.failed && !c.failed;
            if (a.failed || c.failed) continue;
            max_diff = std::max(max_diff, std::abs(a.eta_E - c.eta_E) / a.eta_E);
            g_all_etas.push_back(a.eta_E);
            g_all_etas.push_back(a.eta_F);
            g_all_etas.push_back(c.eta_E);
            g_all_etas.push_back(c.eta_F);
        }
        const bool ok = all_ok && max_diff < 0.01 && t_curves < 120.0;
        std::snprintf(detail, sizeof(detail),
                      "max |eta_Au - eta_Cu|/eta_Au over 20 L in [0.6, 6] um = %.5f "
                      "(< 0.01), %.2f s (< 120 s)",
                      max_diff, t_curves);
        report(2, ok, detail);
    }

    // -------------------------------------------------------- criterion 3
    {
        const fs::path out = fs::temp_directory_path() / "casimir_acceptance_eta";
        fs::remove_all(out);
        const std::string cmd = std::string(CASIMIR_CLI_PATH) + " eta --material Au=" +
                                CASIMIR_DATA_DIR + "/au_synthetic.csv --lmin 0.6 --lmax 0.6" +
                                " --lpoints 1 --out " + out.string() + " > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        double excess = NAN;
        std::ifstream rep(out / "reference_comparison.txt");
        std::string line;
        while (std::getline(rep, line)) {
            char name[32];
            double L, eta, ref, pct;
            if (std::sscanf(line.c_str(), "%31s %lf %lf %lf %lf", name, &L, &eta, &ref,
                            &pct) == 5 &&
                std::string(name) == "Au") {
                excess = pct;
            }
        }
        const bool ok = WIFEXITED(status) && WEXITSTATUS(status) == 0 &&
                        std::isfinite(excess) && excess >= 11.0 && excess <= 13.0;
        std::snprintf(detail, sizeof(detail),
                      "report shows Au at 0.6 um exceeding 0.78 by %.2f%% (11..13%%)",
                      excess);
        report(3, ok, detail);
    }

    // -------------------------------------------------------- criterion 4
    {
        QuadratureSpec tightq;
        tightq.target_rel_tol = 1e-8;
        const auto perfect = MirrorPair::identical(Mirror::perfect());
        double worst = 0.0;
        for (double L : {0.1, 1.0, 10.0}) {
            const double e = energy_plane_plane(perfect, L, tightq).value;
            const double f = force_plane_plane(perfect, L, tightq).value;
            worst = std::max(worst, std::abs(e / perfect_mirror_energy(L) - 1.0));
            worst = std::max(worst, std::abs(f / perfect_mirror_force(L) - 1.0));
        }
        std::snprintf(detail, sizeof(detail),
                      "perfect-mirror E, F vs closed forms: worst rel diff %.2e (< 1e-6) "
                      "at L in {0.1, 1, 10} um",
                      worst);
        report(4, worst < 1e-6, detail);
    }

    // -------------------------------------------------------- criterion 5
    {
        const DrudeParams p{9.0, 0.035};
        const auto model = DielectricModel::pure_drude(p);
        double worst_dense = 0.0;
        for (double xi : {0.05, 1.0, 30.0}) {
            const double dense = oracle::dense_eps_imag_axis(model, xi, 1 << 20);
            const double cf = oracle::drude_dispersion_closed_form(p, xi);
            worst_dense = std::max(worst_dense, std::abs(dense - cf) / cf);
        }
        double worst = 0.0;
        for (int i = 0; i <= 300; ++i) {
            const double xi = 1e-3 * std::pow(10.0, 6.0 * i / 300.0);
            const double got = eps_imag_axis(model, xi, 1e-8);
            const double cf = oracle::drude_dispersion_closed_form(p, xi);
            worst = std::max(worst, std::abs(got - cf) / cf);
        }
        const bool ok = worst < 1e-8 && worst_dense < 1e-7;
        std::snprintf(detail, sizeof(detail),
                      "pure-Drude eps(i xi) vs closed form over xi in [1e-3, 1e3]: worst "
                      "%.2e (< 1e-8); closed form vs 2^20-node trapezoid: %.2e",
                      worst, worst_dense);
        report(5, ok, detail);
    }

    // -------------------------------------------------------- criterion 6
    {
        const MirrorPair drude =
            MirrorPair::identical(Mirror::drude_closed_form({9.0, 0.035}, "drude"));
        struct Probe {
            const MirrorPair* pair;
            const char* name;
            double L;
        };
        const Probe probes[] = {{&drude, "drude", 0.6},
                                {&drude, "drude", 2.0},
                                {&au, "Au", 0.6},
                                {&au, "Au", 2.0},
                                {&cu, "Cu", 1.0}};
        double worst = 0.0;
        for (const auto& pr : probes) {
            const double prod = eta_E(*pr.pair, pr.L, quad).eta;
            const double brute = oracle::brute_force_energy(*pr.pair, pr.L, 2000, 2000) /
                                 perfect_mirror_energy(pr.L);
            worst = std::max(worst, std::abs(prod - brute) / brute);
            g_all_etas.push_back(prod);
        }

        t0 = std::chrono::steady_clock::now();
        const std::string cmd = std::string(CASIMIR_CLI_PATH) + " certify --material Au=" +
                                CASIMIR_DATA_DIR + "/au_synthetic.csv --material Cu=" +
                                CASIMIR_DATA_DIR + "/cu_synthetic.csv > /dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        const double t_certify = seconds_since(t0);
        const bool certify_ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
        const bool ok = worst < 1e-4 && certify_ok && t_certify < 600.0;
        std::snprintf(detail, sizeof(detail),
                      "production vs brute force on 5 probes: worst %.2e (< 1e-4); "
                      "cmd_certify exit %d in %.1f s (< 600 s)",
                      worst, certify_ok ? 0 : 1, t_certify);
        report(6, ok, detail);
    }

    // -------------------------------------------------------- criterion 7
    {
        bool bounds_ok = true;
        for (double eta : g_all_etas) bounds_ok = bounds_ok && eta > 0.0 && eta <= 1.0;

        bool decreasing_ok = true;
        const auto* cache = au.a.cache();
        for (size_t i = 1; i < cache->eps_values().size(); ++i)
            decreasing_ok =
                decreasing_ok && cache->eps_values()[i] < cache->eps_values()[i - 1];

        QuadratureSpec denser = quad;
        denser.xi_nodes *= 2;
        denser.kappa_nodes *= 2;
        const double eta_base = eta_E(au, 1.0, quad).eta;
        const double eta_dense = eta_E(au, 1.0, denser).eta;
        const double doubling = std::abs(eta_base - eta_dense) / eta_dense;

        const double h = 1e-3;
        const double f = force_plane_plane(au, 1.0, quad).value;
        const double e_hi = energy_plane_plane(au, 1.0 + h, quad).value;
        const double e_lo = energy_plane_plane(au, 1.0 - h, quad).value;
        const double fd = -(e_hi - e_lo) / (2.0 * h) * 1e6;
        const double fd_diff = std::abs(f - fd) / std::abs(f);

        const bool ok =
            bounds_ok && decreasing_ok && doubling < quad.target_rel_tol && fd_diff < 1e-3;
        std::snprintf(detail, sizeof(detail),
                      "%zu eta values in (0, 1]: %s; eps cache strictly decreasing: %s; "
                      "node-doubling shift %.1e (< %.0e); force vs dE/dL %.1e (< 1e-3)",
                      g_all_etas.size(), bounds_ok ? "yes" : "NO",
                      decreasing_ok ? "yes" : "NO", doubling, quad.target_rel_tol, fd_diff);
        report(7, ok, detail);
    }

    // -------------------------------------------------------- criterion 8
    {
        const double L = 1.0, R_cm = 10.0;
        const auto sp = force_sphere_plane(au, L, R_cm, quad);
        const auto e = energy_plane_plane(au, L, quad);
        const auto sp2 = force_sphere_plane(au, L, 2.0 * R_cm, quad);
        const bool compose = sp.force_N == 2.0 * M_PI * (R_cm * 1e-2) * e.value;
        const bool linear = sp2.force_N == 2.0 * sp.force_N;
        const bool same_eta = sp.eta == eta_E(au, L, quad).eta;
        const bool ok = compose && linear && same_eta;
        std::snprintf(detail, sizeof(detail),
                      "F_sp = 2 pi R E_pp bit-consistent: %s; doubling R doubles F: %s; "
                      "sphere-plane reduction factor == eta_E: %s",
                      compose ? "yes" : "NO", linear ? "yes" : "NO",
                      same_eta ? "yes" : "NO");
        report(8, ok, detail);
    }

    std::printf("%d/8 criteria passed\n", 8 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
