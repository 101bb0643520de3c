#pragma once

#include <string>
#include <vector>

#include "blocklab/cyclotomic.hpp"
#include "blocklab/fusion.hpp"

namespace blocklab {

/// Cartan matrix of the major sub-block b_z: scale * inner.
struct CartanMatrix {
  long long scale = 1;
  std::vector<std::vector<long long>> inner;
  bool degenerate = false;  // case bb: l(b_z) = 1

  std::size_t dim() const { return inner.size(); }
  long long entry(std::size_t i, std::size_t j) const { return scale * inner[i][j]; }
  BigInt determinant() const;
  bool positive_definite() const;
  bool symmetric() const;
};

CartanMatrix cartan_case(const GroupParams& params, FusionCase c);

using DecompRow = std::vector<Cyclotomic>;
using CycloMatrix = std::vector<std::vector<Cyclotomic>>;

/// 2^{n+m-1} D C^{-1} conj(D)^T by exact matrix arithmetic.
CycloMatrix contributions(const std::vector<DecompRow>& rows, const CartanMatrix& c, const GroupParams& params);

/// The same entry from the expanded formulas for the two Cartan shapes.
Cyclotomic contribution_closed_form_ab(const DecompRow& chi, const DecompRow& psi, int n);
Cyclotomic contribution_closed_form_aa(const DecompRow& chi, const DecompRow& psi, int n);

struct HeightResult {
  enum class Kind { height, contradiction, undetermined };
  Kind kind = Kind::undetermined;
  int height = -1;
  Cyclotomic m_diag;
  Valuation diag;
  Valuation cross;  // only for the cross-term rule
  std::string reason;
};

/// Height of the character with decomposition row `row` (case aa or ab):
/// unit diagonal -> 0, diagonal 4 -> 1, otherwise nu of the cross
/// contribution against the height-zero reference row (0,1) / (0,0,1).
/// 0 < nu(m_chichi) <= 1 is reported as a contradiction.
HeightResult height_classify(const DecompRow& row, const GroupParams& params, FusionCase c);

/// Synthetic row system for given counts of the three column patterns.
struct RowSystem {
  int alpha = 0, beta = 0, gamma = 0;
  std::vector<DecompRow> rows;
};

RowSystem synthetic_rows(const GroupParams& params, FusionCase c, int alpha, int beta);

struct CensusPoint {
  int alpha = 0, beta = 0, gamma = 0;
  long long k = 0, k0 = 0, k1 = 0, kn2 = 0;
  long long bound = 0;  // the inequality-chain bound at (alpha, beta)
  bool cartan_ok = false;
  bool trace_ok = false;
  bool classified = false;  // every row got a height, no contradictions
};

struct CensusReport {
  std::vector<CensusPoint> points;  // admissible points, k0 budget respected
  long long max_k = 0;
  long long target_k = 0;
  bool height1_constant_on_optimum = false;
  long long height1_on_optimum = 0;
  bool pass() const;
  std::string to_string() const;
};

CensusReport census_check(const GroupParams& params, FusionCase c);

/// The four excluded ab shapes (e z^j, e z^j +- e z^k), (0, e z^j +- e z^k) over Q(zeta_{2^m}).
std::vector<DecompRow> forbidden_ab_rows(const GroupParams& params, long j, long k, int eps);

}  // namespace blocklab
