#include "disklab/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace disklab::geometry {

double ang_diff(double a, double b) {
    double d = std::fmod(a - b, 2.0 * std::numbers::pi);
    if (d <= -std::numbers::pi) d += 2.0 * std::numbers::pi;
    if (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    return d;
}

Cone::Cone(complex xi, double M) : vertex(xi), opening(M) {
    if (std::abs(xi) == 0.0 || std::abs(xi) > 1.0 + 1e-12)
        throw std::invalid_argument("cone vertex must satisfy 0 < |xi| <= 1");
    if (M <= 0.0) throw std::invalid_argument("cone opening must be positive");
}

bool Cone::contains(complex z) const {
    double zm = std::abs(z);
    double vm = std::abs(vertex);
    if (zm >= vm) return false;
    if (zm == 0.0) return vm > 0.0; // arg 0 := arg xi
    return std::abs(ang_diff(std::arg(z), std::arg(vertex))) < opening * (vm - zm);
}

double boundary_arc_length(complex z, double M) {
    double len = 2.0 * M * (1.0 - std::abs(z));
    return std::min(len, 2.0 * std::numbers::pi);
}

ConePartition::ConePartition(complex xi, double M, int n) : cone_(xi, M), n_(n) {
    if (n < 1) throw std::invalid_argument("partition resolution must be >= 1");
}

complex ConePartition::lattice_vertex(int j, int k) const {
    double vm = cone_.vertex_mod();
    double ang = cone_.opening * vm * double(k) / n_;
    return cone_.vertex * (double(n_ - j) / n_) * std::polar(1.0, ang);
}

bool ConePartition::in_F(int j, int k, complex z) const {
    if (!Cone(lattice_vertex(j, k), cone_.opening).contains(z)) return false;
    for (int l = j + 1; l < n_; ++l)
        for (int i = -l; i <= l; ++i)
            if (Cone(lattice_vertex(l, i), cone_.opening).contains(z)) return false;
    return true;
}

bool ConePartition::in_E(int j, int k, complex z) const {
    if (!in_F(j, k, z)) return false;
    for (int i = -(std::abs(k) - 1); i <= std::abs(k) - 1; ++i)
        if (in_F(j, i, z)) return false;
    return true;
}

std::optional<std::pair<int, int>> ConePartition::locate(complex z) const {
    if (!cone_.contains(z)) return std::nullopt;
    // deepest lattice level whose cone still contains z
    for (int j = n_ - 1; j >= 0; --j) {
        bool found_level = false;
        for (int k = -j; k <= j && !found_level; ++k)
            if (Cone(lattice_vertex(j, k), cone_.opening).contains(z)) found_level = true;
        if (!found_level) continue;
        // within the level, the cell of minimal |k|
        for (int a = 0; a <= j; ++a)
            for (int k : {a, -a}) {
                if (k == 0 && a != 0) continue;
                if (in_F(j, k, z)) return std::make_pair(j, k);
            }
        return std::nullopt; // unreachable for z in the cone
    }
    return std::nullopt;
}

CarlesonSquare::CarlesonSquare(complex a) : inducing(a) {
    double m = std::abs(a);
    if (m <= 0.0 || m >= 1.0)
        throw std::invalid_argument("Carleson square needs 0 < |a| < 1");
}

bool CarlesonSquare::contains(complex z) const {
    if (std::abs(z) < std::abs(inducing)) return false;
    return std::abs(ang_diff(std::arg(z), std::arg(inducing))) <= arc_halfwidth();
}

std::vector<CarlesonSquare> carleson_squares_containing(complex z,
                                                        const std::vector<complex>& a_grid) {
    std::vector<CarlesonSquare> out;
    for (complex a : a_grid) {
        CarlesonSquare s(a);
        if (s.contains(z)) out.push_back(s);
    }
    return out;
}

PseudoDisc::PseudoDisc(complex z, double r) : center_hyp(z), radius_hyp(r) {
    if (std::abs(z) >= 1.0) throw std::invalid_argument("pseudodisc center must be in the disc");
    if (r <= 0.0 || r >= 1.0) throw std::invalid_argument("pseudodisc radius must be in (0,1)");
}

complex PseudoDisc::euclidean_center() const {
    double zz = std::norm(center_hyp), rr = radius_hyp * radius_hyp;
    return (1.0 - rr) / (1.0 - zz * rr) * center_hyp;
}

double PseudoDisc::euclidean_radius() const {
    double zz = std::norm(center_hyp), rr = radius_hyp * radius_hyp;
    return (1.0 - zz) / (1.0 - zz * rr) * radius_hyp;
}

bool PseudoDisc::contains(complex zeta) const {
    complex phi = (center_hyp - zeta) / (1.0 - std::conj(center_hyp) * zeta);
    return std::abs(phi) < radius_hyp;
}

} // namespace disklab::geometry
