// Command-line front end: spectral sphere-plane Casimir/van der Waals
// energies and forces, image-dipole and parallel-plate references.
//
// Exit codes: 0 success, 1 configuration error (arguments, files, unknown
// material), 2 numerical error (the message names the offending z/a, m, L).

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "casimir/analysis.hpp"
#include "casimir/dipolar.hpp"
#include "casimir/planes.hpp"
#include "casimir/spectral.hpp"

using namespace casimir;

namespace {

// ---------------------------------------------------------------- output ---

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

class CsvWriter {
  public:
    explicit CsvWriter(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParseError("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
    void header(const std::vector<std::string>& cols) { write_row(cols); }
    void row(const std::vector<double>& vals) {
        std::vector<std::string> cells;
        cells.reserve(vals.size());
        for (const double v : vals) cells.push_back(fmt(v));
        write_row(cells);
    }
    void write_row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out() << ',';
            out() << cells[i];
        }
        out() << '\n';
    }

  private:
    std::ofstream file_;
};

// ---------------------------------------------------------------- config ---

struct GridOpts {
    double zmin = 0.1;
    double zmax = 10.0;
    int points = 40;
    bool linear = false;

    std::vector<double> build() const {
        if (linear) {
            if (points < 1 || !(zmin > 0.0) || zmax < zmin) {
                throw std::domain_error("invalid grid specification");
            }
            if (zmin == zmax || points == 1) return {zmin};
            std::vector<double> g(points);
            for (int i = 0; i < points; ++i) {
                g[i] = zmin + (zmax - zmin) * i / (points - 1);
            }
            return g;
        }
        return log_grid(zmin, zmax, points);
    }
};

void add_grid_options(CLI::App* cmd, GridOpts& grid, const std::string& what) {
    cmd->add_option("--zmin", grid.zmin, "smallest " + what)
        ->capture_default_str();
    cmd->add_option("--zmax", grid.zmax, "largest " + what)
        ->capture_default_str();
    cmd->add_option("--points", grid.points, "number of grid points")
        ->capture_default_str();
    cmd->add_flag("--linear", grid.linear,
                  "linear grid spacing (default logarithmic)");
}

struct Config {
    std::string materials_path;
    std::string sphere_name = "Au";
    std::string plane_model = "conductor";
    std::string plane_name;
    double plane_eps = 0.0;
    double radius = 0.0;   // > 0 switches physical columns on
    int L = 20;
    bool auto_L = false;
    double tol = 1e-6;
    int L_max = 120;
    std::string output;

    std::optional<MaterialTable> table;

    const MaterialTable& materials() {
        if (!table) {
            std::string path = materials_path;
            if (path.empty()) {
                if (const char* env = std::getenv("CASIMIR_MATERIALS")) {
                    path = env;
                }
            }
            if (path.empty()) path = CASIMIR_DEFAULT_MATERIALS;
            table = load_materials(path);
        }
        return *table;
    }

    const Material& sphere() { return lookup(sphere_name); }

    const Material& lookup(const std::string& name) {
        const Material& m = materials().get(name);
        if (m.damping_suspect()) {
            std::cerr << "warning: material " << m.name << " damping ratio "
                      << m.damping_ratio
                      << " >= 0.1; real-frequency mode formula unreliable\n";
        }
        return m;
    }

    // Constant contrast factor of the configured plane (conductor or
    // dielectric); the drude model has no constant contrast and is rejected.
    double constant_fc() {
        if (plane_model == "conductor") {
            return contrast_factor(PerfectConductor{}, 0.0);
        }
        if (plane_model == "dielectric") {
            return contrast_factor(StaticDielectric{plane_eps}, 0.0);
        }
        throw std::domain_error(
            "this subcommand needs a constant-contrast plane "
            "(--plane-model conductor|dielectric); the drude plane is served "
            "by the 'dissimilar' and 'modes' subcommands");
    }

    int cutoff_for(double t) {
        return auto_L ? convergence_scan(t, constant_fc(), tol, L_max).L : L;
    }
};

void add_common_options(CLI::App* cmd, Config& cfg, bool with_cutoff = true) {
    cmd->add_option("--materials", cfg.materials_path,
                    "materials table (overrides $CASIMIR_MATERIALS and the "
                    "built-in default)");
    cmd->add_option("-o,--output", cfg.output, "output CSV file (default stdout)");
    if (with_cutoff) {
        cmd->add_option("-L,--L", cfg.L, "multipole cutoff")
            ->capture_default_str();
    }
}

void add_plane_options(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--sphere", cfg.sphere_name, "sphere material name")
        ->capture_default_str();
    cmd->add_option("--plane-model", cfg.plane_model,
                    "plane response: conductor | dielectric | drude")
        ->check(CLI::IsMember({"conductor", "dielectric", "drude"}))
        ->capture_default_str();
    cmd->add_option("--plane-eps", cfg.plane_eps,
                    "static dielectric constant (with --plane-model dielectric)");
    cmd->add_option("--plane", cfg.plane_name,
                    "plane material name (with --plane-model drude)");
}

void add_radius_option(CLI::App* cmd, Config& cfg) {
    cmd->add_option("--radius", cfg.radius,
                    "sphere radius in your length unit; adds physical columns "
                    "(z in that unit, energies in eV, forces in eV per unit)");
}

void add_auto_L_options(CLI::App* cmd, Config& cfg) {
    cmd->add_flag("--auto-L", cfg.auto_L,
                  "pick L per point by energy convergence scan");
    cmd->add_option("--tol", cfg.tol, "convergence tolerance for --auto-L")
        ->capture_default_str();
    cmd->add_option("--Lmax", cfg.L_max, "cutoff cap for --auto-L")
        ->capture_default_str();
}

// ------------------------------------------------------------- commands ---

int run_energy(Config& cfg, const GridOpts& grid) {
    const double fc = cfg.constant_fc();
    const auto t = grid.build();
    const bool physical = cfg.radius > 0.0;
    const double wp = physical ? cfg.sphere().plasma_ev : 0.0;
    CsvWriter csv(cfg.output);
    std::vector<std::string> cols{"z_over_a", "E_tilde", "L"};
    if (physical) {
        cols.push_back("z");
        cols.push_back("E_eV");
    }
    csv.header(cols);
    const SweepResult s = cfg.auto_L ? sweep_auto_L(t, fc, cfg.tol, cfg.L_max)
                                     : sweep(t, fc, cfg.L);
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<double> row{t[i], s.energy[i], double(s.L_used[i])};
        if (physical) {
            row.push_back(t[i] * cfg.radius);
            row.push_back(wp * s.energy[i]);
        }
        csv.row(row);
    }
    return 0;
}

int run_force(Config& cfg, const GridOpts& grid) {
    const double fc = cfg.constant_fc();
    const auto t = grid.build();
    const bool physical = cfg.radius > 0.0;
    const double wp = physical ? cfg.sphere().plasma_ev : 0.0;
    CsvWriter csv(cfg.output);
    std::vector<std::string> cols{"z_over_a", "aF_tilde", "aF_tilde_fd", "L"};
    if (physical) {
        cols.push_back("z");
        cols.push_back("F_eV_per_unit");
    }
    csv.header(cols);
    for (const double ti : t) {
        const int L = cfg.cutoff_for(ti);
        const ForceResult f = force(ti, fc, L);
        std::vector<double> row{ti, f.analytic, f.finite_difference, double(L)};
        if (physical) {
            row.push_back(ti * cfg.radius);
            row.push_back(f.analytic * wp / cfg.radius);
        }
        csv.row(row);
    }
    return 0;
}

int run_sweep(Config& cfg, const GridOpts& grid) {
    const double fc = cfg.constant_fc();
    const auto t = grid.build();
    const bool physical = cfg.radius > 0.0;
    const double wp = physical ? cfg.sphere().plasma_ev : 0.0;
    const SweepResult s = cfg.auto_L ? sweep_auto_L(t, fc, cfg.tol, cfg.L_max)
                                     : sweep(t, fc, cfg.L);
    CsvWriter csv(cfg.output);
    std::vector<std::string> cols{"z_over_a", "E_tilde", "aF_tilde", "L"};
    if (physical) {
        cols.push_back("z");
        cols.push_back("E_eV");
        cols.push_back("F_eV_per_unit");
    }
    csv.header(cols);
    for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<double> row{t[i], s.energy[i], s.force[i],
                                double(s.L_used[i])};
        if (physical) {
            row.push_back(t[i] * cfg.radius);
            row.push_back(wp * s.energy[i]);
            row.push_back(s.force[i] * wp / cfg.radius);
        }
        csv.row(row);
    }
    return 0;
}

int run_convergence(Config& cfg, const GridOpts& grid) {
    const double fc = cfg.constant_fc();
    const auto t = grid.build();
    CsvWriter csv(cfg.output);
    csv.header({"z_over_a", "L", "E_tilde", "capped"});
    std::vector<ConvergenceResult> results(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        results[i] = convergence_scan(t[i], fc, cfg.tol, cfg.L_max);
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        csv.row({t[i], double(results[i].L), results[i].energy,
                 double(results[i].capped ? 1 : 0)});
    }
    return 0;
}

int run_truncation(Config& cfg, const GridOpts& grid, int L_high, int L_low) {
    const double fc = cfg.constant_fc();
    const TruncationResult tr =
        truncation_difference(L_high, L_low, grid.build(), fc);
    CsvWriter csv(cfg.output);
    csv.header({"z_over_a", "aF_high", "aF_low", "rel_diff"});
    for (std::size_t i = 0; i < tr.t.size(); ++i) {
        csv.row({tr.t[i], tr.force_high[i], tr.force_low[i], tr.rel_diff[i]});
    }
    return 0;
}

int run_dissimilar(Config& cfg, const GridOpts& grid) {
    if (cfg.plane_name.empty()) {
        throw std::domain_error("dissimilar needs --plane <material>");
    }
    const Material& a = cfg.sphere();
    const Material& b = cfg.lookup(cfg.plane_name);
    const DissimilarSweep d = dissimilar_difference(a, b, grid.build(), cfg.L);
    std::cerr << "asymptotic delta_F limit for " << a.name << "/" << b.name
              << ": " << fmt(asymptotic_delta(a, b)) << "\n";
    CsvWriter csv(cfg.output);
    csv.header({"z_over_a", "E_AB_eV", "E_BA_eV", "aF_AB_eV", "aF_BA_eV",
                "delta_E", "delta_F"});
    for (std::size_t i = 0; i < d.t.size(); ++i) {
        csv.row({d.t[i], d.energy_ab[i], d.energy_ba[i], d.force_ab[i],
                 d.force_ba[i], d.delta_energy[i], d.delta_force[i]});
    }
    return 0;
}

int run_modes(Config& cfg, const GridOpts& grid, int only_m, bool frequencies) {
    const auto t = grid.build();
    const Material& sphere = cfg.sphere();
    const bool drude = cfg.plane_model == "drude";
    double r = 1.0;
    if (drude) {
        const std::string plane = cfg.plane_name.empty() ? cfg.sphere_name
                                                         : cfg.plane_name;
        const double ratio = cfg.lookup(plane).plasma_ev / sphere.plasma_ev;
        r = ratio * ratio;
    }
    const double fc = drude ? 0.0 : cfg.constant_fc();

    std::vector<int> ms;
    if (only_m >= 0) {
        if (only_m > cfg.L) throw std::domain_error("--m exceeds the cutoff L");
        ms.push_back(only_m);
    } else {
        for (int m = 0; m <= cfg.L; ++m) ms.push_back(m);
    }

    // Column layout is fixed by (m, branch index); m >= 1 blocks stand for a
    // degenerate +-m pair.
    std::vector<std::string> cols{"z_over_a"};
    for (const int m : ms) {
        const int n = cfg.L - std::max(1, m) + 1;
        const int branches = drude ? 2 * n : n;
        for (int s = 0; s < branches; ++s) {
            cols.push_back("m" + std::to_string(m) + "_s" + std::to_string(s));
        }
    }
    if (frequencies && !drude) cols.push_back("valid");
    CsvWriter csv(cfg.output);
    csv.header(cols);

    for (const double ti : t) {
        const double x = x_from_gap_ratio(ti);
        std::vector<double> row{ti};
        bool all_valid = true;
        for (const int m : ms) {
            if (drude) {
                for (const double lam : dissimilar_modes(m, cfg.L, x, r)) {
                    row.push_back(frequencies ? std::sqrt(lam) : lam);
                }
            } else {
                const SpectralBlock b = eigen_block(m, cfg.L, x, fc);
                if (frequencies) {
                    const ModeSet set = mode_frequencies(b, sphere);
                    all_valid = all_valid && set.valid;
                    for (const auto& w : set.omega_over_wp) {
                        row.push_back(w.real());
                    }
                } else {
                    for (int i = 0; i < b.eigenvalues.size(); ++i) {
                        row.push_back(b.eigenvalues[i]);
                    }
                }
            }
        }
        if (frequencies && !drude) row.push_back(all_valid ? 1.0 : 0.0);
        csv.row(row);
    }
    return 0;
}

int run_planes(Config& cfg, const GridOpts& grid) {
    const auto kz = grid.build();
    CsvWriter csv(cfg.output);
    csv.header({"kz", "omega_plus_over_wp", "omega_minus_over_wp"});
    for (const double k : kz) {
        const PlateModes m = plate_modes(k);
        csv.row({k, m.omega_plus, m.omega_minus});
    }
    return 0;
}

int run_proximity(Config& cfg, const GridOpts& grid) {
    if (!(cfg.radius > 0.0)) {
        throw std::domain_error("proximity needs --radius");
    }
    const Material& m = cfg.sphere();
    const auto t = grid.build();
    CsvWriter csv(cfg.output);
    csv.header({"z_over_a", "z", "V_eV_per_area", "F_pt_eV_per_unit",
                "F_exact_eV_per_unit", "rel_diff"});
    for (const double ti : t) {
        const double z = ti * cfg.radius;
        const double v = plate_energy_per_area(m, z);
        const double f_pt = proximity_force(m, cfg.radius, z);
        // Exact self-consistent sphere-plane force for the same material pair;
        // dissimilar_force returns a*F in eV, so divide by the radius.
        const double f_exact = dissimilar_force(m, m, ti, cfg.L) / cfg.radius;
        csv.row({ti, z, v, f_pt, f_exact,
                 std::abs(f_pt - f_exact) / std::abs(f_exact)});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Casimir/van der Waals interaction of a metallic sphere above a plane "
        "by exact diagonalization of the multipolar surface-plasmon coupling.\n"
        "All subcommands write CSV (12 significant digits, header row, one row "
        "per grid point) to stdout or -o FILE. Output is byte-identical for "
        "any OMP_NUM_THREADS."};
    app.require_subcommand(1);

    Config cfg;
    GridOpts grid;
    int L_high = 80, L_low = 2, only_m = -1;
    bool frequencies = false;

    auto* energy = app.add_subcommand(
        "energy", "zero-point energy E~ = E/(hbar wp) vs z/a\n"
                  "columns: z_over_a,E_tilde,L[,z,E_eV]");
    auto* force_cmd = app.add_subcommand(
        "force", "force aF~ (analytic, with finite-difference cross-check)\n"
                 "columns: z_over_a,aF_tilde,aF_tilde_fd,L[,z,F_eV_per_unit]");
    auto* sweep_cmd = app.add_subcommand(
        "sweep", "energy and force over a z/a grid\n"
                 "columns: z_over_a,E_tilde,aF_tilde,L[,z,E_eV,F_eV_per_unit]");
    auto* convergence = app.add_subcommand(
        "convergence", "smallest L meeting the energy tolerance per point\n"
                       "columns: z_over_a,L,E_tilde,capped");
    auto* truncation = app.add_subcommand(
        "truncation", "force error of a low cutoff against a reference cutoff\n"
                      "columns: z_over_a,aF_high,aF_low,rel_diff");
    auto* dissimilar = app.add_subcommand(
        "dissimilar", "material-swap asymmetry, self-consistent Drude plane\n"
                      "columns: z_over_a,E_AB_eV,E_BA_eV,aF_AB_eV,aF_BA_eV,"
                      "delta_E,delta_F");
    auto* modes = app.add_subcommand(
        "modes", "surface-mode branches vs z/a, one column per (m, branch)\n"
                 "columns: z_over_a,m{m}_s{i}...[,valid]");
    auto* planes = app.add_subcommand(
        "planes", "coupled two-plate mode branches vs kz\n"
                  "columns: kz,omega_plus_over_wp,omega_minus_over_wp");
    auto* proximity = app.add_subcommand(
        "proximity", "proximity-theorem force from the plate energy, compared "
                     "with the exact spectral path\ncolumns: z_over_a,z,"
                     "V_eV_per_area,F_pt_eV_per_unit,F_exact_eV_per_unit,rel_diff");

    for (auto* cmd : {energy, force_cmd, sweep_cmd, convergence, truncation,
                      dissimilar, modes, proximity}) {
        add_common_options(cmd, cfg);
        add_plane_options(cmd, cfg);
        add_grid_options(cmd, grid, "gap ratio z/a");
    }
    add_common_options(planes, cfg, false);
    add_grid_options(planes, grid, "dimensionless wavevector kz");

    for (auto* cmd : {energy, force_cmd, sweep_cmd}) {
        add_radius_option(cmd, cfg);
        add_auto_L_options(cmd, cfg);
    }
    add_radius_option(proximity, cfg);
    convergence->add_option("--tol", cfg.tol, "energy convergence tolerance")
        ->capture_default_str();
    convergence->add_option("--Lmax", cfg.L_max, "largest cutoff tried")
        ->capture_default_str();
    truncation->add_option("--LH", L_high, "reference cutoff")
        ->capture_default_str();
    truncation->add_option("--LW", L_low, "truncated cutoff")
        ->capture_default_str();
    modes->add_option("--m", only_m, "restrict to one azimuthal block");
    modes->add_flag("--frequencies", frequencies,
                    "emit mode frequencies Re(omega)/wp instead of squared "
                    "eigenvalues; adds a 'valid' column for damped materials");

    CLI11_PARSE(app, argc, argv);

    try {
        // A material named on the command line must exist even when the run
        // only needs dimensionless results; a typo must not pass silently.
        for (auto* cmd : {energy, force_cmd, sweep_cmd, convergence, truncation,
                          dissimilar, modes, proximity}) {
            if (!cmd->parsed()) continue;
            if (cmd->count("--sphere")) cfg.materials().get(cfg.sphere_name);
            if (cmd->count("--plane")) cfg.materials().get(cfg.plane_name);
        }
        if (*energy) return run_energy(cfg, grid);
        if (*force_cmd) return run_force(cfg, grid);
        if (*sweep_cmd) return run_sweep(cfg, grid);
        if (*convergence) return run_convergence(cfg, grid);
        if (*truncation) return run_truncation(cfg, grid, L_high, L_low);
        if (*dissimilar) return run_dissimilar(cfg, grid);
        if (*modes) return run_modes(cfg, grid, only_m, frequencies);
        if (*planes) return run_planes(cfg, grid);
        if (*proximity) return run_proximity(cfg, grid);
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
