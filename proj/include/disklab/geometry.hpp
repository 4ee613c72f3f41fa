#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace disklab::geometry {

using complex = std::complex<double>;

/// Angular difference taken modulo 2pi into (-pi, pi].
double ang_diff(double a, double b);

/// Nontangential approach region with vertex xi (0 < |xi| <= 1) and opening M:
/// { z : |arg z - arg xi| < M(|xi| - |z|) }. Membership of z = 0 uses the
/// convention arg 0 := arg xi, so 0 belongs whenever |xi| > 0.
struct Cone {
    complex vertex;
    double opening = 1.0;

    Cone(complex xi, double M);
    bool contains(complex z) const;
    double vertex_mod() const { return std::abs(vertex); }
    double vertex_arg() const { return std::arg(vertex); }
};

/// Arc length of boundary vertices whose unit cone contains z:
/// |I(z)| = 2 M (1-|z|), clamped to 2pi.
double boundary_arc_length(complex z, double M);

/// Partition of Gamma_M(xi) into cells E^n_{j,k} built from the vertex
/// lattice xi^n_{j,k} = xi (n-j)/n e^{i M |xi| k/n}. Cells are evaluated
/// lazily as predicates.
class ConePartition {
public:
    ConePartition(complex xi, double M, int n);

    complex lattice_vertex(int j, int k) const;
    bool in_F(int j, int k, complex z) const;
    bool in_E(int j, int k, complex z) const;

    /// The unique cell containing z, or nullopt when z is outside Gamma_M(xi).
    std::optional<std::pair<int, int>> locate(complex z) const;

    int resolution() const { return n_; }
    const Cone& cone() const { return cone_; }

private:
    Cone cone_;
    int n_;
};

/// Carleson square S(a) over the arc I_a of half-width (1-|a|)/2.
struct CarlesonSquare {
    complex inducing;

    explicit CarlesonSquare(complex a);
    bool contains(complex z) const;
    double arc_halfwidth() const { return (1.0 - std::abs(inducing)) / 2.0; }
};

std::vector<CarlesonSquare> carleson_squares_containing(complex z,
                                                        const std::vector<complex>& a_grid);

/// Pseudohyperbolic disc Delta(z, r) = { zeta : |(z-zeta)/(1-conj(z) zeta)| < r },
/// a Euclidean disc D(center, radius).
struct PseudoDisc {
    complex center_hyp;
    double radius_hyp;

    PseudoDisc(complex z, double r);
    complex euclidean_center() const;
    double euclidean_radius() const;
    bool contains(complex zeta) const;
};

} // namespace disklab::geometry
