#pragma once

#include <optional>
#include <vector>

#include "bhh/exactlin/linalg.hpp"
#include "bhh/hopf/report.hpp"

namespace bhh {

/// A truncated cochain complex: spaces in degrees lo..hi and differentials
/// d^n: C^n -> C^{n+1} for lo <= n < hi. Chain complexes (bar constructions)
/// are stored with negated degrees so every differential raises the degree.
/// Optionally a list of Hopf algebra elements acts in every degree.
struct Complex {
  FieldSpec field;
  int lo = 0;
  std::vector<std::size_t> dims;
  std::vector<Matrix> d;                      // d[i] leaves degree lo + i
  std::vector<Vec> action_elems;
  std::vector<Scalar> action_eps;             // counit of each action element
  std::vector<std::vector<Matrix>> action;    // action[i][k]: action_elems[k] on degree lo + i

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  bool has_degree(int n) const { return n >= lo && n <= hi(); }
  std::size_t dim(int n) const;
  /// d^n; the zero map out of the top degree is not stored.
  const Matrix& diff(int n) const;
  bool has_action() const { return !action.empty(); }
};

/// Shapes, d o d = 0 in every stored degree, and (if present) that each d
/// commutes with the action.
Report check_complex(const Complex& c);

/// The subcomplex spanned by bases[i] in degree lo + i, with differential and
/// action written in those coordinates. Throws if some d or action element
/// does not preserve the subspaces.
Complex subcomplex(const Complex& c, const std::vector<Matrix>& bases);
/// Subcomplex with degree lo + i equal to ker(constraints[i]); an empty
/// matrix (0 rows) imposes nothing.
Complex constrained_subcomplex(const Complex& c, const std::vector<Matrix>& constraints);
/// Degree-wise invariants of the action (requires has_action()).
Complex invariant_subcomplex(const Complex& c);

/// H^n = ker d^n / im d^{n-1} for lo <= n <= hi, with representatives and
/// coboundary witnesses.
class Cohomology {
 public:
  /// Needs d out of degree hi, so hi < c.hi(); throws ResourceCap otherwise.
  Cohomology(const Complex& c, int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::size_t dim(int n) const { return at(n).dim(); }
  std::vector<std::size_t> dims() const;
  const std::vector<Vec>& representatives(int n) const { return at(n).representatives(); }
  /// Representatives as columns.
  Matrix representative_matrix(int n) const;

  bool is_cocycle(int n, const Vec& v) const;
  /// Class coordinates of a cocycle, plus g with v - sum coords * reps = d g.
  Quotient::Decomposition decompose(int n, const Vec& v) const { return at(n).decompose(v); }
  /// Some g with d g = v, or nullopt when v is not a coboundary (or not a cocycle).
  std::optional<Vec> coboundary_witness(int n, const Vec& v) const;

  /// Matrix of the k-th action element on H^n in the representative basis.
  Matrix induced_action(int n, std::size_t k) const;
  /// Coordinates of the classes fixed by the action (each element acting by its counit).
  Matrix invariant_classes(int n) const;

  const Complex& complex() const { return c_; }

 private:
  const Quotient& at(int n) const;
  Complex c_;
  int lo_, hi_;
  std::vector<Quotient> q_;
};

/// Map H^n(src) -> H^n(dst) induced by a degree-n cochain map component.
Matrix induced_map(const Cohomology& src, const Cohomology& dst, int n, const Matrix& chain_map);

/// Checks that the maps f[i]: a^{lo+i} -> b^{lo+i} commute with d where both
/// sides are defined.
Report check_chain_map(const Complex& a, const Complex& b, const std::vector<Matrix>& f, const std::string& name);

}  // namespace bhh
