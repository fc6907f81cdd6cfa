#pragma once

#include <string>
#include <vector>

#include "qcp2/products.hpp"

namespace qcp2 {

/// Outcome of one verification run. Verifiers never silently skip: every
/// undeterminable coefficient is enumerated together with the base keys
/// whose absence blocks it. `order` is the order to which the identity is
/// guaranteed and was compared (three potential derivatives cost three
/// orders, so a build at D compares to D-3).
struct Report {
  struct Skip {
    std::string monomial;
    std::vector<CharKey> missing;
  };
  struct Failure {
    std::string monomial;
    std::string lhs;
    std::string rhs;
  };

  std::string check;
  int order = 0;
  bool pass = true;
  long checked = 0;
  std::vector<Skip> skipped;
  std::vector<Failure> failures;

  bool nothing_checked() const { return checked == 0; }
  /// {"check": ..., "order": ..., "status": "pass|fail", "checked": ...,
  ///  "skipped": [...], "failures": [...]}
  std::string json() const;
  std::string summary() const;
};

/// Compares two masked series coefficient-by-coefficient up to `order`,
/// appending to the report. Masked coefficients are skipped (listed with
/// their missing keys) unless determinable_only is false, in which case
/// they fail. Monomial labels are prefixed with `where`.
void compare_series(Report& report, const std::string& where,
                    const MaskedSeries& lhs, const MaskedSeries& rhs,
                    int order, bool determinable_only = true);

/// ((x*y)*z - x*(y*z)) == 0 through T-order t_order for all basis triples
/// of the plane, with * the quantum product deformed by delta.
Report verify_quantum_associativity(int t_order, const ClassP2& delta,
                                    const PointCountProvider& n_d =
                                        default_point_counts());

/// (T_i*T_j)*T_k == T_i*(T_j*T_k) as y-series identities for all
/// i,j,k in {0,1,2}, compared to the guaranteed order D-3, plus the scalar
/// identity obtained by equating the identity-component coefficients of
/// (T1*T1)*T2 = T1*(T1*T2):
///   K114*K125 + K225 + K113*K225 = K115*K124 + K125*K123.
Report verify_contact_associativity(int order, const CharNumEngine& eng);
Report verify_contact_associativity(const ContactAlgebra& algebra);

enum class PdeRestriction {
  none,       // full five-variable identity
  no_y3_y5,   // y3 = y5 = 0: the point/line-conditions form
  no_y3_y4_y5 // y3 = y4 = y5 = 0: the point-conditions form
};

/// The quantum potential solves
///   N222 = exp(2y3) * ( N112^2 - N111*N122
///          + 2y4*(N112*N122 - N111*N222)
///          + (2y4^2 + 2y5)*(N122^2 - N112*N222) ).
/// Compares both sides to order D-3 on the requested slice.
Report verify_pde(int order, const CharNumEngine& eng,
                  PdeRestriction restriction = PdeRestriction::none,
                  bool determinable_only = true);

/// Solves the differential equation for a single characteristic number
/// with a >= 3 by matching the coefficient of y2^(a-3) y4^b y5^c at
/// y1 = y3 = 0: the right-hand side references only lower degrees, so this
/// is an oracle for the recursion, sharing no code path with it.
/// Throws MissingBaseData when blocked, InvalidKey / invalid_argument on
/// bad keys.
Rational pde_extract_charnum(const CharKey& key, const CharNumEngine& eng);

/// Coefficients of the cubic relation h*h*h = xi2*(h*h) + xi1*h + xi0 that
/// presents the deformed cohomology over the series ring; all three are
/// guaranteed to order D-3.
struct RingPresentation {
  MaskedSeries xi0;
  MaskedSeries xi1;
  MaskedSeries xi2;
  int order;  // guaranteed order of the xi series
};

RingPresentation ring_presentation(int order, const CharNumEngine& eng);
RingPresentation ring_presentation(const QuantumPotential& n);

/// Checks the cubic relation residual h*h*h - xi2*(h*h) - xi1*h - xi0
/// against zero to the guaranteed order.
Report verify_presentation(int order, const CharNumEngine& eng);
Report verify_presentation(const ContactAlgebra& algebra);

}  // namespace qcp2
