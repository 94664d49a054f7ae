#pragma once

#include <vector>

// Coordinate systems and actions on the crown (perimeter-P boundary with n
// bordered cusps) and on the cusped disc.

namespace crownvol {

/// Cusp projection positions 0 < Delta_1 < ... < Delta_{n-1} < P on the
/// perimeter circle; Delta_0 = 0 and Delta_n = P are implicit.
struct CrownConfig {
    double perimeter = 0.0;
    std::vector<double> cusp_pos;

    int cusp_count() const { return static_cast<int>(cusp_pos.size()) + 1; }
    void validate() const;  // throws std::invalid_argument on bad data
};

/// Gaps delta_i = Delta_i - Delta_{i-1} > 0, i = 1..n, summing to P.
/// Indices are cyclic: delta_{i+n} = delta_i.
struct DeltaGaps {
    std::vector<double> delta;

    int cusp_count() const { return static_cast<int>(delta.size()); }
    double perimeter() const;
    void validate() const;
};

/// Decoration-independent x_i = sinh(Delta_i/2)/sinh(P/2 - Delta_i/2),
/// strictly increasing and positive.
struct XCoords {
    std::vector<double> x;
};

/// Differences xi_1 = x_1, xi_i = x_i - x_{i-1}; all positive.
struct XiCoords {
    std::vector<double> xi;
};

/// Fat-graph shear coordinates: y_i standard (sum = P), alpha_i the
/// decoration-dependent extended coordinates (cancel out of the action).
struct ShearCoords {
    double perimeter = 0.0;
    std::vector<double> y;
    std::vector<double> alpha;  // may be empty; never enters invariants
};

/// Euclidean horocycle radii r_0..r_{n-1} in the kissing gauge, with the
/// quasiperiodic continuation r_{i+n} = r_i e^P.
struct HoroRadii {
    double perimeter = 0.0;
    std::vector<double> r;
};

/// Disc cusp positions: z_2 < ... < z_{n-2} in (0,1) with z_1 = 0,
/// z_{n-1} = 1, z_0 = infinity fixed by the SL(2,R) gauge.
struct DiscConfig {
    int n = 0;
    std::vector<double> z;  // interior entries z_2..z_{n-2}

    void validate() const;
};

/// log(e^a - 1) through a cancellation-free kernel; finite for a <= ~700.
double log_expm1(double a);

DeltaGaps gaps_from_config(const CrownConfig& c);
CrownConfig config_from_gaps(const DeltaGaps& g);

/// kappa * [ sum_i log(e^{delta_i + delta_{i+1}} - 1) - sum_i log(e^{delta_i} - 1) ].
double crown_action(const DeltaGaps& g, double kappa);

/// Solves the kissing conditions 2 sqrt(r_{i-1} r_i) = e^{Delta_i} - e^{Delta_{i-1}}
/// (cyclic, with the e^P shift on the wraparound) for the horocycle radii.
/// Odd n only; the cyclic system is singular for even n.
HoroRadii kissing_radii(const CrownConfig& c);

/// Horocycle arc lengths s_i = (e^{Delta_{i+1}} - e^{Delta_{i-1}}) / (2 sqrt(r_{i-1} r_{i+1}))
/// in the kissing gauge, i = 1..n with quasiperiodic continuation.
std::vector<double> s_lengths(const CrownConfig& c, const HoroRadii& radii);

/// kappa * (P/2 + sum_i log s_i): the action recomputed from the kissing
/// construction. The P/2 restores the perimeter normalization carried by the
/// wraparound radii (r_{i+n} = r_i e^P scales the fundamental-domain arc
/// product by e^{-P/2}); with it the result equals crown_action exactly.
double action_from_geometry(const CrownConfig& c, double kappa);

XCoords x_from_delta(const CrownConfig& c);
CrownConfig delta_from_x(const XCoords& x, double P);
XiCoords xi_from_x(const XCoords& x);
XCoords x_from_xi(const XiCoords& xi);

/// kappa * sum_i log(e^{y_i/2} + e^{-y_i/2}); requires |sum y_i - P| <= 1e-9.
/// Independent of the alpha decoration coordinates.
double shear_action(const ShearCoords& s, double kappa);

/// xi_i = e^{y_1/2} mu_1 / (mu_i mu_{i+1} e^{y_{i+1}/2}) with
/// mu_i = e^{-(y_{i+1}+...+y_n)/2} (1 + e^{y_{i+1}} + ... + e^{y_{i+1}+...+y_n})
/// and mu_n = 1 (empty sum). Composite identity, exact up to roundoff:
///   crown_action(chain(y), kappa) = shear_action(y, kappa) + kappa*P/2,
/// the same perimeter normalization constant as in action_from_geometry.
XiCoords xi_from_shear(const ShearCoords& s);

/// log[z_3 (z_4-z_2) ... (z_{n-2}-z_{n-4}) (1-z_{n-3})]
///  - log[z_2 (z_3-z_2) ... (1-z_{n-2})], with the full z-array convention
/// z_1 = 0, z_{n-1} = 1 covering the degenerate n = 4 case.
double disc_action(const DiscConfig& d);

/// 1 / [ z_2 (z_3-z_2) ... (z_{n-2}-z_{n-3}) (1-z_{n-2}) ].
double disc_measure_density(const DiscConfig& d);

} // namespace crownvol
