#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "isogeo/exact.hpp"
#include "isogeo/family.hpp"
#include "isogeo/models.hpp"
#include "isogeo/quadric.hpp"
#include "isogeo/residual.hpp"

namespace isogeo::homog6 {

using exact::Surd;
using numkit::RealMat;
using Triple = std::array<int, 3>;  // 0-based, sorted

// alpha in the e-frame for (g, m) = (6, 1) or (6, 2). Index a belongs to D_{a mod 6};
// for m = 2 the bar index of i is i + 6.
struct AlphaTable {
  int m = 1;
  std::string model_name;
  std::map<Triple, Surd> entries;         // nonzero values only
  std::map<Triple, std::string> sources;  // expressions as stored in the data file

  int n() const { return 6 * m; }
  int label(int a) const { return a % 6; }
  Surd value(int i, int j, int k) const;  // any order, 0-based
  double value_d(int i, int j, int k) const { return value(i, j, k).to_double(); }
  // Canonical 1-based key, bar indices written as e.g. "1b".
  static std::string key(const Triple& t, int m);

  static AlphaTable from_model(const models::ModelSpec& spec);
};

AlphaTable load_alpha_table(int m);

// Invariant set of a tabulated model: ghat = I, B0 = diag(exp(2 i theta_a)).
quadric::InvariantSet table_invariants(const AlphaTable& table);

struct FrameConversion {
  int m = 1;
  std::vector<Surd> lambda;  // cot(theta) per index
  std::vector<Surd> scale;   // e_a = scale_a f_a
  std::map<Triple, Surd> alpha_f;
  // Lambda_{i,j}^k = alpha(f_i, f_j, f_k) / (lambda_j - lambda_k)
  Surd christoffel(int i, int j, int k) const;
  // nonzero Lambda values, keyed by (i, j, k) unsorted
  std::map<Triple, Surd> christoffels() const;
};

FrameConversion frame_convert(const AlphaTable& table, const family::AngleData& angles);

struct IsoFamily {
  enum class Shape { linear, conjugated };
  Shape shape = Shape::linear;
  int j = 6;       // focal index, 1-based
  int normal = 6;  // 1-based table index used as the second normal
  int m = 1;
  std::vector<int> indices;  // table indices of the rows (0-based)
  std::vector<Surd> L0_exact;
  std::vector<std::vector<Surd>> L1_exact;
  RealMat L0, L1;
  RealMat K;  // skew generator for the conjugated shape

  RealMat at(double s) const;
};

// Coefficients of L1 for the pair of table indices (a, b): the displayed pattern
// for j = 6, the general expression otherwise. Both are exact.
Surd l1_coefficient(int j, int dist_a, int dist_b);
Surd l1_coefficient_general(int j, int dist_a, int dist_b);

IsoFamily build_isospectral_family(const AlphaTable& table, int j = 6, int normal = -1);
// L(s) = R(s) L0 R(s)^T with a rotation that moves the kernel; isospectral but not homogeneous.
IsoFamily rotating_kernel_family(double rate = 1.0);

Residual isospectral_scan(const IsoFamily& fam, int s_count = 64, double tol = 1e-9);
Residual kernel_constancy(const IsoFamily& fam, int s_count = 64, double tol = 1e-8);

struct CriterionReport {
  std::string criterion;  // "i", "ii", "iii", "iv", "v", "vi"
  double residual = 0.0;
  bool pass = false;
  std::string note;
};

std::vector<CriterionReport> homogeneity_criteria(const AlphaTable& table, bool with_kernel = true);

// Copy of the table with one extra entry alpha(0, 3, 1) = value, which breaks criterion (i).
AlphaTable violating_table(const AlphaTable& base, const Surd& value = Surd(1));

}  // namespace isogeo::homog6
