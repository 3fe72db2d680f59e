#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace casimir {

MaterialTable::MaterialTable(std::vector<Material> entries)
    : entries_(std::move(entries)) {
    for (const auto& m : entries_) {
        if (m.plasma_ev <= 0.0) {
            throw std::domain_error("material '" + m.name +
                                    "': plasma energy must be positive");
        }
        if (m.damping_ratio < 0.0) {
            throw std::domain_error("material '" + m.name +
                                    "': damping ratio must be non-negative");
        }
    }
}

const Material& MaterialTable::get(const std::string& name) const {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const Material& m) { return m.name == name; });
    if (it == entries_.end()) {
        throw MaterialNotFoundError("material '" + name + "' not found in " +
                                    (source_path_.empty() ? "built-in table"
                                                          : source_path_));
    }
    return *it;
}

bool MaterialTable::contains(const std::string& name) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Material& m) { return m.name == name; });
}

MaterialTable load_materials(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open materials file: " + path);
    }
    std::vector<Material> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        Material m;
        if (!(row >> m.name)) continue;   // blank line
        if (!(row >> m.plasma_ev >> m.damping_ratio)) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 'name plasma_eV damping_ratio'");
        }
        std::string extra;
        if (row >> extra) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": trailing token '" + extra + "'");
        }
        if (std::any_of(entries.begin(), entries.end(),
                        [&](const Material& e) { return e.name == m.name; })) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": duplicate material '" + m.name + "'");
        }
        entries.push_back(std::move(m));
    }
    MaterialTable table(std::move(entries));
    table.source_path_ = path;
    return table;
}

std::complex<double> drude_epsilon(const Material& m, double omega_ratio,
                                   bool lossless) {
    if (omega_ratio <= 0.0) {
        throw std::domain_error("drude_epsilon: omega/omega_p must be positive");
    }
    const std::complex<double> w(omega_ratio, 0.0);
    if (lossless) {
        return 1.0 - 1.0 / (w * w);
    }
    return 1.0 - 1.0 / (w * (w + std::complex<double>(0.0, m.damping_ratio)));
}

std::complex<double> spectral_u(const Material& m, double omega_ratio,
                                bool lossless) {
    // u = 1/(1 - eps) reduces algebraically to w(w + i gamma); evaluating the
    // product form keeps u*(1 - eps) = 1 exact in floating point.
    if (omega_ratio <= 0.0) {
        throw std::domain_error("spectral_u: omega/omega_p must be positive");
    }
    if (lossless) {
        return {omega_ratio * omega_ratio, 0.0};
    }
    const std::complex<double> w(omega_ratio, 0.0);
    return w * (w + std::complex<double>(0.0, m.damping_ratio));
}

double contrast_factor(const PlaneModel& plane, double lambda,
                       const Material* sphere) {
    if (std::holds_alternative<PerfectConductor>(plane)) {
        return -1.0;
    }
    if (const auto* d = std::get_if<StaticDielectric>(&plane)) {
        if (d->epsilon < 1.0) {
            throw std::domain_error("static dielectric requires eps >= 1");
        }
        return (1.0 - d->epsilon) / (1.0 + d->epsilon);
    }
    const auto& drude = std::get<DrudeLossless>(plane);
    if (sphere == nullptr) {
        throw std::domain_error(
            "Drude-plane contrast needs the sphere material for r");
    }
    const double ratio = drude.material.plasma_ev / sphere->plasma_ev;
    const double r = ratio * ratio;
    if (std::abs(2.0 * lambda - r) < 1e-12 * r) {
        throw PoleError("contrast factor pole: 2*lambda = r");
    }
    return r / (2.0 * lambda - r);
}

} // namespace casimir
