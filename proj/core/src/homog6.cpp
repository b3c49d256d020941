#include "isogeo/homog6.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isogeo/errors.hpp"

namespace isogeo::homog6 {

using exact::ExactComplex;

namespace {

Triple sorted(int i, int j, int k) {
  Triple t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<Triple> permutations(const Triple& t) {
  std::vector<Triple> out;
  Triple p = t;
  std::sort(p.begin(), p.end());
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int mod6(int k) { return ((k % 6) + 6) % 6; }

// 0-based distribution d has angle (2d + 1) pi / 12
Surd lambda_of(int d) { return exact::cot_pi12(2 * d + 1); }
Surd sigma_of(int d) { return exact::sqrt2_sin_pi12(2 * d + 1); }

double cabs(const ExactComplex& z) { return std::hypot(z.re.to_double(), z.im.to_double()); }

}  // namespace

Surd AlphaTable::value(int i, int j, int k) const {
  if (std::min({i, j, k}) < 0 || std::max({i, j, k}) >= n()) throw InputError("AlphaTable: index out of range");
  auto it = entries.find(sorted(i, j, k));
  return it == entries.end() ? Surd() : it->second;
}

std::string AlphaTable::key(const Triple& t, int m) {
  std::string s;
  for (int a : t) {
    if (!s.empty()) s += ",";
    s += m == 2 && a >= 6 ? std::to_string(a - 5) + "b" : std::to_string(a + 1);
  }
  return s;
}

AlphaTable AlphaTable::from_model(const models::ModelSpec& spec) {
  if (spec.kind != models::Kind::tabulated) throw InputError("AlphaTable: model '" + spec.name + "' is not tabulated");
  AlphaTable t;
  t.m = spec.table_m;
  t.model_name = spec.name;
  for (const auto& e : spec.alpha_entries) {
    Triple key = sorted(e.i - 1, e.j - 1, e.k - 1);
    if (key[0] < 0 || key[2] >= t.n()) throw InputError("AlphaTable: index out of range in " + spec.name);
    Surd v = Surd::parse(e.value_expression);
    auto it = t.entries.find(key);
    if (it != t.entries.end() && it->second != v)
      throw ModelConsistencyError("AlphaTable: conflicting values for " + AlphaTable::key(key, t.m));
    if (!v.is_zero()) {
      t.entries[key] = v;
      t.sources[key] = e.value_expression;
    }
  }
  return t;
}

AlphaTable load_alpha_table(int m) {
  if (m != 1 && m != 2) throw InputError("load_alpha_table: m must be 1 or 2");
  return AlphaTable::from_model(*models::registry_get("g6-hom-m" + std::to_string(m)));
}

quadric::InvariantSet table_invariants(const AlphaTable& table) {
  quadric::InvariantSet inv;
  const int n = table.n();
  inv.angles = family::AngleData::standard(6, std::vector<int>(6, table.m));
  for (int a = 0; a < n; ++a) {
    inv.labels.push_back(table.label(a));
    inv.lambdas.push_back(inv.angles.lambdas[table.label(a)]);
  }
  inv.ghat = RealMat::Identity(n, n);
  inv.alpha = numkit::Tensor3(n);
  for (const auto& [t, v] : table.entries)
    for (const Triple& p : permutations(t)) inv.alpha(p[0], p[1], p[2]) = v.to_double();
  quadric::complete_algebraic_part(inv);
  return inv;
}

Surd FrameConversion::christoffel(int i, int j, int k) const {
  const int n = static_cast<int>(lambda.size());
  if (std::min({i, j, k}) < 0 || std::max({i, j, k}) >= n) throw InputError("christoffel: index out of range");
  if (lambda[j] == lambda[k])
    throw UndefinedEntryError("christoffel: Lambda_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}^" +
                              std::to_string(k + 1) + " needs distinct principal curvatures");
  auto it = alpha_f.find(sorted(i, j, k));
  const Surd a = it == alpha_f.end() ? Surd() : it->second;
  return a / (lambda[j] - lambda[k]);
}

std::map<Triple, Surd> FrameConversion::christoffels() const {
  std::map<Triple, Surd> out;
  for (const auto& [t, v] : alpha_f)
    for (const Triple& p : permutations(t))
      if (lambda[p[1]] != lambda[p[2]]) out[p] = christoffel(p[0], p[1], p[2]);
  return out;
}

FrameConversion frame_convert(const AlphaTable& table, const family::AngleData& angles) {
  if (angles.g != 6 || std::abs(angles.phi - M_PI / 12) > 1e-12)
    throw InputError("frame_convert: needs the standard g = 6 angle data");
  FrameConversion fc;
  fc.m = table.m;
  for (int a = 0; a < table.n(); ++a) {
    fc.lambda.push_back(lambda_of(table.label(a)));
    fc.scale.push_back(sigma_of(table.label(a)));
    if (std::abs(fc.lambda.back().to_double() - angles.lambdas[table.label(a)]) > 1e-12)
      throw ModelConsistencyError("frame_convert: angle data disagree with the exact curvatures");
  }
  for (const auto& [t, v] : table.entries)
    fc.alpha_f[t] = v / (fc.scale[t[0]] * fc.scale[t[1]] * fc.scale[t[2]]);
  return fc;
}

Surd l1_coefficient_general(int j, int dist_a, int dist_b) {
  const int dj = j - 1;
  if (dist_a == dj || dist_b == dj || dist_a == dist_b) throw InputError("l1_coefficient: indices must differ");
  // sin(theta_a) / (sin(theta_a - theta_j) (lambda_j - lambda_b) sigma_a sigma_j sigma_b)
  const Surd s = exact::sqrt2_sin_pi12(2 * (dist_a - dj));
  return Surd(1) / (s * (lambda_of(dj) - lambda_of(dist_b)) * sigma_of(dj) * sigma_of(dist_b));
}

Surd l1_coefficient(int j, int dist_a, int dist_b) {
  if (j != 6) return l1_coefficient_general(j, dist_a, dist_b);
  static const std::map<std::pair<int, int>, const char*> shown = {
      {{0, 1}, "sqrt(2/3)"}, {{0, 2}, "1/sqrt(2)"}, {{0, 3}, "sqrt(2/3)"}, {{0, 4}, "sqrt(2)"},
      {{1, 2}, "1/sqrt(6)"}, {{1, 3}, "sqrt(2)/3"}, {{1, 4}, "sqrt(2/3)"}, {{2, 3}, "1/sqrt(6)"},
      {{2, 4}, "1/sqrt(2)"}, {{3, 4}, "sqrt(2/3)"}};
  auto it = shown.find({std::min(dist_a, dist_b), std::max(dist_a, dist_b)});
  if (it == shown.end()) throw InputError("l1_coefficient: indices must differ and avoid D_6");
  return Surd::parse(it->second);
}

RealMat IsoFamily::at(double s) const {
  if (shape == Shape::linear) return std::cos(s) * L0 + std::sin(s) * L1;
  const int n = static_cast<int>(L0.rows());
  RealMat R = RealMat::Identity(n, n) + std::sin(s) * K + (1 - std::cos(s)) * K * K;
  RealMat L = R * L0 * R.transpose();
  return 0.5 * (L + L.transpose());
}

IsoFamily build_isospectral_family(const AlphaTable& table, int j, int normal) {
  if (j < 1 || j > 6) throw InputError("build_isospectral_family: j must be in 1..6");
  const int dj = j - 1;
  IsoFamily fam;
  fam.j = j;
  fam.m = table.m;
  const int nrm = normal < 0 ? dj : normal - 1;
  if (nrm < 0 || nrm >= table.n() || table.label(nrm) != dj)
    throw InputError("build_isospectral_family: normal index must lie in D_" + std::to_string(j));
  fam.normal = nrm + 1;
  for (int d = 0; d < 6; ++d)
    for (int a = 0; a < table.n(); ++a)
      if (d != dj && table.label(a) == d) fam.indices.push_back(a);
  const int k = static_cast<int>(fam.indices.size());
  fam.L0 = RealMat::Zero(k, k);
  fam.L1 = RealMat::Zero(k, k);
  fam.L1_exact.assign(k, std::vector<Surd>(k));
  for (int p = 0; p < k; ++p) {
    const int a = fam.indices[p];
    fam.L0_exact.push_back(exact::cot_pi12(2 * (table.label(a) - dj)));
    fam.L0(p, p) = fam.L0_exact.back().to_double();
    for (int q = 0; q < k; ++q) {
      const int b = fam.indices[q];
      if (table.label(a) == table.label(b)) continue;
      const Surd v = table.value(a, b, nrm);
      if (v.is_zero()) continue;
      fam.L1_exact[p][q] = l1_coefficient(j, table.label(a), table.label(b)) * v;
      fam.L1(p, q) = fam.L1_exact[p][q].to_double();
    }
  }
  return fam;
}

IsoFamily rotating_kernel_family(double rate) {
  IsoFamily fam;
  fam.shape = IsoFamily::Shape::conjugated;
  for (int d = 0; d < 5; ++d) {
    fam.indices.push_back(d);
    fam.L0_exact.push_back(exact::cot_pi12(2 * (d - 5)));
  }
  fam.L0 = RealMat::Zero(5, 5);
  for (int d = 0; d < 5; ++d) fam.L0(d, d) = fam.L0_exact[d].to_double();
  fam.L1 = RealMat::Zero(5, 5);
  fam.K = RealMat::Zero(5, 5);
  fam.K(2, 0) = rate;  // turns the kernel direction towards the first eigenvector
  fam.K(0, 2) = -rate;
  return fam;
}

Residual isospectral_scan(const IsoFamily& fam, int s_count, double tol) {
  if (s_count < 8) throw InputError("isospectral_scan: need at least 8 samples");
  Eigen::SelfAdjointEigenSolver<RealMat> es0(fam.L0, Eigen::EigenvaluesOnly);
  const numkit::Vec ref = es0.eigenvalues();
  double worst = 0;
  for (int k = 0; k < s_count; ++k) {
    const double s = 2 * M_PI * k / s_count;
    Eigen::SelfAdjointEigenSolver<RealMat> es(fam.at(s), Eigen::EigenvaluesOnly);
    worst = std::max(worst, (es.eigenvalues() - ref).cwiseAbs().maxCoeff());
  }
  return Residual::make("homog6.isospectral", worst, tol,
                        {{"j", std::to_string(fam.j)}, {"m", std::to_string(fam.m)}, {"samples", std::to_string(s_count)}});
}

Residual kernel_constancy(const IsoFamily& fam, int s_count, double tol) {
  if (s_count < 8) throw InputError("kernel_constancy: need at least 8 samples");
  auto kernel = [&](double s) {
    numkit::SpectralClusters sc = numkit::eig_sym(fam.at(s), 1e-6);
    int best = 0;
    for (int c = 1; c < sc.count(); ++c)
      if (std::abs(sc.values[c]) < std::abs(sc.values[best])) best = c;
    if (std::abs(sc.values[best]) > 1e-6)
      throw StructuralError("kernel_constancy: L(s) has no kernel at s=" + std::to_string(s));
    return sc.cluster_basis(best);
  };
  const RealMat K0 = kernel(0.0);
  double worst = 0;
  for (int k = 1; k < s_count; ++k) {
    const double s = 2 * M_PI * k / s_count;
    RealMat Ks = kernel(s);
    if (Ks.cols() != K0.cols())
      throw StructuralError("kernel_constancy: kernel dimension changes from " + std::to_string(K0.cols()) + " to " +
                            std::to_string(Ks.cols()) + " at s=" + std::to_string(s));
    worst = std::max(worst, std::asin(std::min(1.0, numkit::subspace_sin_angle(K0, Ks))));
  }
  return Residual::make("homog6.kernel_constancy", worst, tol,
                        {{"j", std::to_string(fam.j)}, {"m", std::to_string(fam.m)}, {"samples", std::to_string(s_count)}});
}

std::vector<CriterionReport> homogeneity_criteria(const AlphaTable& table, bool with_kernel) {
  const double tol = 1e-10;
  auto report = [&](const char* name, double r, std::string note = {}) {
    return CriterionReport{name, r, std::isfinite(r) && r < tol, std::move(note)};
  };
  std::vector<CriterionReport> out;

  // (i) no nonzero entry pairs D_i with D_{i+3}
  double r1 = 0;
  for (const auto& [t, v] : table.entries)
    for (int p = 0; p < 3; ++p)
      for (int q = p + 1; q < 3; ++q)
        if (mod6(table.label(t[p]) - table.label(t[q])) == 3) r1 = std::max(r1, std::abs(v.to_double()));
  out.push_back(report("i", r1));

  // (ii) entries vanish unless j + k + l = 0 mod 3 (1-based distributions)
  double r2 = 0;
  for (const auto& [t, v] : table.entries) {
    const int sum = table.label(t[0]) + table.label(t[1]) + table.label(t[2]) + 3;
    if (sum % 3 != 0) r2 = std::max(r2, std::abs(v.to_double()));
  }
  out.push_back(report("ii", r2));

  // (iii) sum_j (-1)^j alpha(B^j X, B^-j Y, Z) on frame vectors; B e_a = w^(2 d_a + 1) e_a
  double r3 = 0;
  for (const auto& [t, v] : table.entries)
    for (const Triple& p : permutations(t)) {
      ExactComplex phase;
      const int step = 2 * (table.label(p[0]) - table.label(p[1])) + 6;
      for (int j = 0; j < 6; ++j) phase += exact::omega_pow(j * step);
      r3 = std::max(r3, cabs(phase * ExactComplex(v)));
    }
  out.push_back(report("iii", r3));

  // (iv) sectional curvature of D_i + D_{i+3} planes: 1/4 sum_c alpha(a, b, c)^2
  std::map<std::pair<int, int>, Surd> sums;
  for (const auto& [t, v] : table.entries)
    for (const Triple& p : permutations(t))
      if (mod6(table.label(p[0]) - table.label(p[1])) == 3) {
        Surd& acc = sums[{p[0], p[1]}];
        acc = acc + v * v * Surd(exact::Rational(1, 4));
      }
  double r4 = 0;
  for (const auto& kv : sums) r4 = std::max(r4, std::abs(kv.second.to_double()));
  out.push_back(report("iv", r4));

  // (v) algebraic form alpha(pi_j X, pi_{j+3} Y, Z) - alpha(pi_{j+3} X, pi_j Y, Z)
  double r5 = 0;
  for (int a = 0; a < table.n(); ++a)
    for (int b = 0; b < table.n(); ++b) {
      if (mod6(table.label(a) - table.label(b)) != 3) continue;
      for (int c = 0; c < table.n(); ++c) r5 = std::max(r5, std::abs((table.value(a, b, c) - table.value(b, a, c)).to_double()));
    }
  out.push_back(report("v", r5, "implied by (i); only the algebraic reformulation is checked on tabulated data"));

  if (with_kernel) {
    double r6 = 0;
    std::string note;
    for (int j = 1; j <= 6 && note.empty(); ++j)
      for (int a = 0; a < table.n(); ++a) {
        if (table.label(a) != j - 1) continue;
        try {
          r6 = std::max(r6, kernel_constancy(build_isospectral_family(table, j, a + 1)).value);
        } catch (const StructuralError& e) {
          r6 = std::numeric_limits<double>::infinity();
          note = e.what();
          break;
        }
      }
    CriterionReport c = report("vi", r6, note);
    out.push_back(c);
  }
  return out;
}

AlphaTable violating_table(const AlphaTable& base, const Surd& value) {
  AlphaTable t = base;
  t.model_name = base.model_name + "-violating";
  const Triple key = sorted(0, 3, 1);
  t.entries[key] = value;
  t.sources[key] = value.to_string();
  return t;
}

}  // namespace isogeo::homog6
