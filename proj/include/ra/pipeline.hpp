#pragma once

#include "ra/symbol.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace ra {

enum class Setting { Dim4 = 4, Dim6 = 6 };

inline int setting_dim(Setting s) { return static_cast<int>(s); }
Setting setting_from_dim(int n);

enum class CaseId { aI, aII, aIII, b, c };

std::string case_name(CaseId c);
std::optional<CaseId> case_from_name(const std::string& s);

// One boundary case (r, ell, j, k, |alpha|): left symbol of order r carries
// the Clifford factor and j normal x-derivatives before the projection;
// the right symbol of order ell takes k normal x-derivatives and j+1 normal
// xi-derivatives.
struct CaseSpec {
  CaseId id;
  int left_order = 0;
  int right_order = 0;
  int j = 0;
  int k = 0;
  int alpha = 0;
};

// Derived from the order-counting constraint
//   left + right - j - k - |alpha| = 1 - n
// with both orders in {top, top-1} and at most one derivative weight.
std::vector<CaseSpec> enumerate_cases(Setting s);

// Exact value of one boundary case: coefficient polynomial carrying the pi
// and Omega atoms. Memoized.
Poly boundary_case(Setting s, int l, CaseId c);
Poly boundary_total(Setting s, int l);

// Exact interior contribution (carries pi^{n/2} and the curvature atom).
Poly interior_term(Setting s, int l);

// Contraction polynomials.
Poly g_pair(int n, int i, int j);
Poly bracket_pairing(int n, int l);  // full signed-pairing contraction W_l
Poly bracket_quartic(int n);         // g12 g34 - g13 g24 + g14 g23
Poly bracket_sextic_reference(int n);  // the reference table's 15-term bracket

// Reference values transcribed from the published tables. Boundary keys are
// (dim, case-or-"total", l); interior and closed keys are (dim, l).
struct ReferenceTables {
  std::map<std::tuple<int, std::string, int>, Poly> boundary;
  std::map<std::pair<int, int>, Poly> interior;
  std::map<std::pair<int, int>, Poly> closed;

  static ReferenceTables standard();
  // JSON override, e.g.
  //   {"boundary":[{"dim":4,"case":"aIII","l":2,"coef_h1":"1/8","coef_dxn":"0"}]}
  // The bracket defaults to the standard one for (dim, l): pair / quartic /
  // sextic; value = (coef_h1 * h' * K + coef_dxn * d_xn K) * pi * Omega.
  void apply_overrides(const std::string& json_path);
};

// Exact trace identities for l-fold Clifford products.
struct TraceIdentity {
  std::string id;
  int n = 0;
  Poly engine;
  Poly expected;
  std::string note;
};
std::vector<TraceIdentity> trace_identity_checks();

// Intermediate symbolic checkpoints: sphere-averaged scalar traces compared
// against the published rational functions, with the case prefactor used for
// contour adjudication when they disagree.
struct Checkpoint {
  std::string id;
  Setting setting = Setting::Dim4;
  int l = 2;
  BoundarySymbol engine;
  BoundarySymbol reference;
  ExactScalar pref;                // integral prefactor
  std::optional<CaseId> case_id;   // set when the integral is a full case value
  std::string note;
};
std::vector<Checkpoint> audit_checkpoints();

}  // namespace ra
