#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

// Drude metal: plasma energy in eV, damping as a fraction of the plasma
// frequency (gamma = damping_ratio * omega_p).
struct Material {
    std::string name;
    double plasma_ev = 0.0;
    double damping_ratio = 0.0;

    // Large damping makes the real-frequency mode formula unreliable.
    bool damping_suspect() const { return damping_ratio >= 0.1; }
};

// Immutable after load.
class MaterialTable {
  public:
    explicit MaterialTable(std::vector<Material> entries);

    const Material& get(const std::string& name) const;
    bool contains(const std::string& name) const;
    const std::vector<Material>& entries() const { return entries_; }
    const std::string& source_path() const { return source_path_; }

    friend MaterialTable load_materials(const std::string& path);

  private:
    std::vector<Material> entries_;
    std::string source_path_;
};

// Plain-text table, one "name plasma_eV damping_ratio" per line, '#' comments.
// Duplicate names and malformed rows raise ParseError with the line number.
MaterialTable load_materials(const std::string& path);

// Dielectric function of a Drude metal at real frequency ratio w = omega/omega_p.
// lossless: eps = 1 - 1/w^2 (real); damped: eps = 1 - 1/(w(w + i*gamma)).
std::complex<double> drude_epsilon(const Material& m, double omega_ratio,
                                   bool lossless);

// Spectral variable u(omega) = 1/(1 - eps). Satisfies u*(1 - eps) = 1; for a
// lossless Drude metal u = (omega/omega_p)^2.
std::complex<double> spectral_u(const Material& m, double omega_ratio,
                                bool lossless);

// How the half-space below the sphere responds.
struct PerfectConductor {};
struct StaticDielectric {
    double epsilon;
};
struct DrudeLossless {
    Material material;
};
using PlaneModel = std::variant<PerfectConductor, StaticDielectric, DrudeLossless>;

// Image-coupling contrast factor f_c of the plane, evaluated at the squared
// frequency ratio lambda = (omega/omega_p_sphere)^2 of the sphere material.
//   PerfectConductor  -> -1
//   StaticDielectric  -> (1 - eps)/(1 + eps), lambda ignored
//   DrudeLossless     -> r/(2*lambda - r), r = (wp_plane/wp_sphere)^2
// The Drude kind needs the sphere material for r and has a pole at
// lambda = r/2 (PoleError within 1e-12 of it).
double contrast_factor(const PlaneModel& plane, double lambda,
                       const Material* sphere = nullptr);

} // namespace casimir
