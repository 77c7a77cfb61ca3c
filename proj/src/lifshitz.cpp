#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>
#include <thread>

#include "casimir/error.hpp"
#include "casimir/kernels.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

void QuadratureSpec::validate() const {
    if (xi_nodes < 8 || kappa_nodes < 8)
        fail(ErrorCode::invalid_argument, "node counts must be >= 8");
    if (!(target_rel_tol >= 1e-10 && target_rel_tol <= 1e-3))
        fail(ErrorCode::invalid_argument, "target_rel_tol must lie in [1e-10, 1e-3]");
    if (max_nodes < 2 * std::max(xi_nodes, kappa_nodes))
        fail(ErrorCode::invalid_argument, "max_nodes too small for one doubling");
}

// ---------------------------------------------------------------- Mirror

struct Mirror::Impl {
    enum class Kind { tabulated, drude, perfect } kind = Kind::perfect;
    std::string label;
    DielectricModel model{DielectricModel::pure_drude({1.0, 0.1})};
    EpsImagAxis cache;
    DrudeParams drude;
};

Mirror Mirror::from_model(DielectricModel model, double xi_lo, double xi_hi,
                          int points_per_decade, double tol) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::tabulated;
    impl->label = model.material().empty() ? "material" : model.material();
    impl->cache = build_eps_cache(model, xi_lo, xi_hi, points_per_decade, tol);
    impl->model = std::move(model);
    Mirror m;
    m.impl_ = std::move(impl);
    return m;
}

Mirror Mirror::drude_closed_form(DrudeParams params, std::string label) {
    if (!params.valid()) fail(ErrorCode::invalid_argument, "invalid Drude parameters");
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::drude;
    impl->label = std::move(label);
    impl->drude = params;
    Mirror m;
    m.impl_ = std::move(impl);
    return m;
}

Mirror Mirror::perfect() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::perfect;
    impl->label = "perfect";
    Mirror m;
    m.impl_ = std::move(impl);
    return m;
}

double Mirror::eps_minus_one(double xi) const {
    switch (impl_->kind) {
        case Impl::Kind::tabulated: return impl_->cache.eval_minus_one(xi);
        case Impl::Kind::drude: {
            const auto& d = impl_->drude;
            return d.omega_p * d.omega_p / (xi * (xi + d.gamma));
        }
        case Impl::Kind::perfect: break;
    }
    fail(ErrorCode::invalid_argument, "perfect mirror has no dielectric function");
}

double Mirror::eps(double xi) const { return 1.0 + eps_minus_one(xi); }

bool Mirror::is_perfect() const { return impl_->kind == Impl::Kind::perfect; }

const std::string& Mirror::label() const { return impl_->label; }

const EpsImagAxis* Mirror::cache() const {
    return impl_->kind == Impl::Kind::tabulated ? &impl_->cache : nullptr;
}

const DielectricModel* Mirror::model() const {
    return impl_->kind == Impl::Kind::tabulated ? &impl_->model : nullptr;
}

std::string MirrorPair::label() const {
    return a.label() == b.label() ? a.label() : a.label() + "/" + b.label();
}

XiRange required_xi_range(double L_min_um, double L_max_um, const QuadratureSpec& quad,
                          const PhysicalConstants& pc) {
    quad.validate();
    if (!(L_min_um > 0.0 && L_min_um <= L_max_um))
        fail(ErrorCode::invalid_argument, "bad distance range");
    const int cap = quad.scheme == QuadratureSpec::Scheme::adaptive
                        ? quad.max_nodes
                        : 2 * quad.xi_nodes;
    const auto& rule = gauss_legendre(cap);
    const double t_lo = rule.x.front(), t_hi = rule.x.back();
    const double hc = pc.hc_ev_um();
    XiRange r;
    r.lo = 0.5 * (hc / (2.0 * L_max_um)) * 2.0 * t_lo / (1.0 - t_lo);
    r.hi = 2.0 * (hc / (2.0 * L_min_um)) * 2.0 * t_hi / (1.0 - t_hi);
    return r;
}

// ---------------------------------------------------------------- core sums

namespace {

// Reduced double sums over the mapped unit square.  For perfect mirrors the
// energy sum converges to -2 pi^4/45 and the force sum to +2 pi^4/15.
struct ReducedSums {
    double energy = 0.0;
    double force = 0.0;
};

ReducedSums reduced_sums(const MirrorPair& mirrors, double L_um, int n_xi, int n_kappa,
                         const PhysicalConstants& pc) {
    const auto& outer = gauss_legendre(n_xi);
    const kernels::InnerGrid grid = kernels::make_inner_grid(gauss_legendre(n_kappa));
    const double half_hcl = pc.hc_ev_um() / (2.0 * L_um);
    const bool perfect = mirrors.a.is_perfect() || mirrors.b.is_perfect();
    if (perfect && !(mirrors.a.is_perfect() && mirrors.b.is_perfect()))
        fail(ErrorCode::invalid_argument, "mixed perfect/material pairs are not supported");

    ReducedSums acc;
    for (int i = 0; i < n_xi; ++i) {
        const double t = outer.x[i];
        const double om = 1.0 - t;
        const double tau = 2.0 * t / om;
        kernels::InnerParams p;
        p.tau = tau;
        p.exp_tau = std::exp(-tau);
        p.half_hcl = half_hcl;
        p.perfect = perfect;
        if (!perfect) {
            const double xi = half_hcl * tau;
            p.xi2 = xi * xi;
            p.da = mirrors.a.eps_minus_one(xi);
            p.db = mirrors.b.eps_minus_one(xi);
            p.ca = p.da * p.xi2;
            p.cb = p.db * p.xi2;
        }
        const auto sums = kernels::inner_sums(grid, p);
        const double wmap = 2.0 * outer.w[i] / (om * om);
        acc.energy += wmap * sums.energy;
        acc.force += wmap * sums.force;
    }
    return acc;
}

struct PlanePair {
    Converged energy;  // J/m^2
    Converged force;   // N/m^2
};

PlanePair evaluate_plane(const MirrorPair& mirrors, double L_um, const QuadratureSpec& quad,
                         const PhysicalConstants& pc) {
    quad.validate();
    if (!(L_um > 0.0)) fail(ErrorCode::invalid_argument, "L must be positive");

    const double hc = pc.hc_ev_um();
    const double half_hcl = hc / (2.0 * L_um);
    const double cube = half_hcl * half_hcl * half_hcl;
    // eV^3 -> J/m^2 and eV^3/um -> N/m^2
    const double k_energy = 1e12 * pc.e_charge() / (4.0 * M_PI * M_PI * hc * hc) * cube;
    const double k_force = 1e18 * pc.e_charge() / (4.0 * M_PI * M_PI * hc * hc) * cube / L_um;

    int n_xi = quad.xi_nodes, n_kappa = quad.kappa_nodes;
    ReducedSums coarse = reduced_sums(mirrors, L_um, n_xi, n_kappa, pc);
    while (true) {
        const ReducedSums fine = reduced_sums(mirrors, L_um, 2 * n_xi, 2 * n_kappa, pc);
        const double err_e =
            std::abs(fine.energy - coarse.energy) / std::max(std::abs(fine.energy), 1e-300);
        const double err_f =
            std::abs(fine.force - coarse.force) / std::max(std::abs(fine.force), 1e-300);
        if (std::max(err_e, err_f) <= quad.target_rel_tol) {
            PlanePair out;
            out.energy = {k_energy * fine.energy, err_e, 2 * n_xi, 2 * n_kappa};
            out.force = {-k_force * fine.force, err_f, 2 * n_xi, 2 * n_kappa};
            return out;
        }
        if (quad.scheme != QuadratureSpec::Scheme::adaptive || 4 * n_xi > quad.max_nodes ||
            4 * n_kappa > quad.max_nodes)
            fail(ErrorCode::tolerance_not_reached,
                 "node doubling estimate stuck above target_rel_tol at " +
                     std::to_string(2 * n_xi) + " nodes");
        n_xi *= 2;
        n_kappa *= 2;
        coarse = fine;
    }
}

unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : std::min(n, 8u);
}

}  // namespace

Converged energy_plane_plane(const MirrorPair& mirrors, double L_um,
                             const QuadratureSpec& quad, const PhysicalConstants& pc) {
    return evaluate_plane(mirrors, L_um, quad, pc).energy;
}

Converged force_plane_plane(const MirrorPair& mirrors, double L_um,
                            const QuadratureSpec& quad, const PhysicalConstants& pc) {
    return evaluate_plane(mirrors, L_um, quad, pc).force;
}

EtaResult eta_E(const MirrorPair& mirrors, double L_um, const QuadratureSpec& quad,
                const PhysicalConstants& pc) {
    const Converged e = energy_plane_plane(mirrors, L_um, quad, pc);
    return {e.value / perfect_mirror_energy(L_um, pc), e};
}

EtaResult eta_F(const MirrorPair& mirrors, double L_um, const QuadratureSpec& quad,
                const PhysicalConstants& pc) {
    const Converged f = force_plane_plane(mirrors, L_um, quad, pc);
    return {f.value / perfect_mirror_force(L_um, pc), f};
}

SphereForceResult force_sphere_plane(const MirrorPair& mirrors, double L_um, double R_cm,
                                     const QuadratureSpec& quad,
                                     const PhysicalConstants& pc) {
    if (!(R_cm > 0.0)) fail(ErrorCode::invalid_argument, "sphere radius must be positive");
    const Converged e = energy_plane_plane(mirrors, L_um, quad, pc);
    SphereForceResult out;
    out.energy = e;
    const double R_m = R_cm * 1e-2;
    out.force_N = 2.0 * M_PI * R_m * e.value;
    out.eta = e.value / perfect_mirror_energy(L_um, pc);
    out.geometry_warning = (R_cm * 1e4 / L_um) < 100.0;  // R in um over L
    return out;
}

EtaCurve eta_curve(const MirrorPair& mirrors, std::span<const double> L_grid_um,
                   const QuadratureSpec& quad, const PhysicalConstants& pc) {
    for (size_t i = 0; i + 1 < L_grid_um.size(); ++i)
        if (!(L_grid_um[i] < L_grid_um[i + 1]))
            fail(ErrorCode::invalid_argument, "L grid must be sorted ascending");
    if (!L_grid_um.empty() && !(L_grid_um.front() > 0.0))
        fail(ErrorCode::invalid_argument, "distances must be positive");

    EtaCurve curve;
    curve.label = mirrors.label();
    curve.entries.resize(L_grid_um.size());

    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next.fetch_add(1); i < L_grid_um.size(); i = next.fetch_add(1)) {
            EtaEntry& entry = curve.entries[i];
            entry.L_um = L_grid_um[i];
            try {
                const PlanePair pp = evaluate_plane(mirrors, L_grid_um[i], quad, pc);
                entry.E_pp = pp.energy.value;
                entry.eta_E = pp.energy.value / perfect_mirror_energy(L_grid_um[i], pc);
                entry.F_pp = pp.force.value;
                entry.eta_F = pp.force.value / perfect_mirror_force(L_grid_um[i], pc);
                entry.est_rel_error =
                    std::max(pp.energy.est_rel_error, pp.force.est_rel_error);
            } catch (const std::exception& ex) {
                entry.failed = true;
                entry.error = ex.what();
            }
        }
    };
    const unsigned workers =
        std::min<size_t>(worker_count(), std::max<size_t>(L_grid_um.size(), 1));
    std::vector<std::future<void>> futs;
    for (unsigned w = 1; w < workers; ++w) futs.push_back(std::async(std::launch::async, work));
    work();
    for (auto& f : futs) f.get();

    const bool all_failed =
        !curve.entries.empty() &&
        std::all_of(curve.entries.begin(), curve.entries.end(),
                    [](const EtaEntry& e) { return e.failed; });
    if (all_failed)
        fail(ErrorCode::domain_error, "every curve entry failed: " + curve.entries[0].error);

    for (size_t i = 0; i + 1 < curve.entries.size(); ++i) {
        const auto& a = curve.entries[i];
        const auto& b = curve.entries[i + 1];
        if (!a.failed && !b.failed && a.eta_E > b.eta_E) {
            curve.warnings.push_back("eta_E not monotone between L = " +
                                     std::to_string(a.L_um) + " and " +
                                     std::to_string(b.L_um) + " um");
        }
    }
    return curve;
}

void write_eta_curve_csv(const EtaCurve& curve, std::ostream& out,
                         const std::vector<std::string>& header_comments) {
    for (const auto& c : header_comments) out << "# " << c << "\n";
    out << "L_um E_pp_J_per_m2 eta_E F_pp_N_per_m2 eta_F est_rel_error\n";
    char buf[160];
    for (const auto& e : curve.entries) {
        if (e.failed) {
            out << "# FAILED L = " << e.L_um << ": " << e.error << "\n";
            continue;
        }
        std::snprintf(buf, sizeof(buf), "%.8e %.8e %.8e %.8e %.8e %.8e\n", e.L_um, e.E_pp,
                      e.eta_E, e.F_pp, e.eta_F, e.est_rel_error);
        out << buf;
    }
}

}  // namespace casimir
