#pragma once

#include <array>
#include <vector>

#include "qcp2/masked_series.hpp"

namespace qcp2 {

/// The quantum potential: the generating series of all characteristic
/// numbers,
///
///   N = sum over d >= 1 and a+b+2c = 3d-1 of
///       N_d(a,b,c) * y2^a y4^b y5^c / (a! b! c!) * exp(d*y1 + (2d-2)*y3),
///
/// truncated by total degree. The y0 direction is absent (string
/// equation). Undeterminable keys leave their whole monomial block masked.
struct QuantumPotential {
  MaskedSeries series;
  int order;
  int d_max;                     // largest degree reaching below the order
  std::vector<CharKey> skipped;  // in-range keys the store cannot determine
};

/// Degrees contribute from total degree ceil((3d-1)/2), so only
/// d <= (2*order+1)/3 appear at a given truncation order.
int quantum_potential_d_max(int order);

QuantumPotential build_quantum_potential(int order, const CharNumEngine& eng);

/// Throws MissingBaseData listing exactly the absent base keys if any
/// in-range coefficient is undetermined.
void require_complete(const QuantumPotential& n);

/// The ramification potential of the fiberwise double covers, in closed
/// form:
///
///   R = { z3^2/2 * (y4^2 + y5) + z3*z4*y4 + z3*z5/2 + z4^2/4 } * exp(2*y3).
///
/// Quadratic in z, with no z0, z1, z2.
TruncatedSeries build_ramification_potential(int order);

/// The contact potential K = 2 * sum_s dN/dy_s * dR/dz_{5-s}, linear in z.
/// Since dN/dy0 = 0 and R has no z0, z1, z2, only s = 1, 2 survive, and
/// K lies in the span of z3, z4, z5 — checked at build time.
///
/// z_slice[k] holds dK/dz_k as a pure y-series carried at order D-1 (one
/// better than reading it off the assembled z-carrying series); `full` is
/// the assembled series at truncation D-1.
struct ContactPotential {
  MaskedSeries full;
  std::array<MaskedSeries, 6> z_slice;
  int order;  // the requested truncation D
};

ContactPotential build_contact_potential(const QuantumPotential& n);

/// Structure constant series K_{ijk} = d^3 K / dy_i dy_j dz_k for
/// i, j in 0..2 and k in 0..5, carried to order D-3. K is z-linear, so the
/// z_k-derivative is the z_k-slice; identically zero for k in {0,1,2}
/// (closure into the plane's cohomology) and for i or j = 0.
MaskedSeries structure_constant(int i, int j, int k,
                                const ContactPotential& kpot);

}  // namespace qcp2
