#pragma once

#include <functional>
#include <map>

#include "bhh/complexes/hochschild.hpp"

namespace bhh {

/// Cochain-level operations on C^n = Hom(B^{(x)n}, B), as matrices on
/// C^p (x) C^q. Matrices are built on first use and cached.
class CochainProducts {
 public:
  explicit CochainProducts(BraidedCochains& c) : c_(&c) {}

  BraidedCochains& cochains() { return *c_; }

  /// (f u g)(x_1 (x) x_2) = (-1)^{pq} f(r^j.x_1) (r_j.g)(x_2), |x_1| = p.
  const Matrix& cup(std::size_t p, std::size_t q);
  Vec cup(std::size_t p, const Vec& f, std::size_t q, const Vec& g) { return cup(p, q).apply(kron_vec(f, g)); }

  /// (f o g)(x) = sum_i (-1)^{i(q-1)} f((r^j.x_1) (x) (r_j.g)(x_2) (x) x_3), |x_1| = i,
  /// of degree p+q-1; zero when p = 0.
  const Matrix& circle(std::size_t p, std::size_t q);
  Vec circle(std::size_t p, const Vec& f, std::size_t q, const Vec& g) { return circle(p, q).apply(kron_vec(f, g)); }

  /// f (x) g -> sum_j (r^j.g) (x) (r_j.f), from C^p (x) C^q to C^q (x) C^p.
  Matrix braided_swap(std::size_t p, std::size_t q);
  /// f u g - (-1)^{pq} (r^j.g) u (r_j.f)
  Matrix braided_commutator(std::size_t p, std::size_t q);
  /// [f, g] = f o g - (-1)^{(p-1)(q-1)} (r^j.g) o (r_j.f). This does not
  /// preserve cocycles and induces nothing on cohomology.
  Matrix naive_bracket(std::size_t p, std::size_t q);

 private:
  BraidedCochains* c_;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> cup_, circle_;
};

/// (-1)^{pq} m(f(x_1) (x) g(x_2)) on Hom(X^{(x)n}, Y) for m: Y (x) Y -> Y.
Matrix classical_cup(const Matrix& mult, std::size_t dim_x, std::size_t p, std::size_t q);
/// Gerstenhaber's f o g = sum_i (-1)^{i(q-1)} f(x_1 (x) g(x_2) (x) x_3) on Hom(A^{(x)n}, A).
Matrix classical_circle(std::size_t dim, const FieldSpec& f, std::size_t p, std::size_t q);

/// Associativity, unit, Leibniz rule for d_c and H-linearity (on the
/// generators of the cochains) of u for all degrees with p+q(+r) <= max_total,
/// plus closure of a subcomplex given by its embedding when supplied.
Report cup_structure_check(CochainProducts& pr, std::size_t max_total, const std::vector<Matrix>* sub = nullptr);

/// d_Hom(pi) - pi u pi = 0, and d_c = d_Hom - [pi, -] in degrees <= max_degree,
/// where [pi, f] = pi u f - (-1)^{|f|} f u pi.
Report maurer_cartan_check(CochainProducts& pr, std::size_t max_degree);

/// (-1)^{p+1} d_c(f o g) + (-1)^p d_c(f) o g - f o d_c(g) = f u g - (-1)^{pq} (r^j.g) u (r_j.f)
Report commutator_identity_check(CochainProducts& pr, std::size_t p, const Vec& f, std::size_t q, const Vec& g);
/// h = (-1)^{p+1} f o g with d_c(h) equal to the braided commutator; throws
/// unless f and g are cocycles.
Vec commutator_witness(CochainProducts& pr, std::size_t p, const Vec& f, std::size_t q, const Vec& g);

using CochainProduct = std::function<Vec(std::size_t, const Vec&, std::size_t, const Vec&)>;

/// Products on cohomology, reduced to representative coordinates.
struct GradedRing {
  std::vector<std::size_t> dims;  // H^0..H^top
  /// structure[{p,q}][i][j] = coordinates of rep_i^p * rep_j^q in H^{p+q}
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<Vec>>> structure;
  Vec unit;                       // coordinates of the unit class in H^0
  std::size_t certificates = 0;   // solved coboundary witnesses
  Report checks;
};

/// The ring on H^0..H^top of `h` (lo must be 0), for products of total degree
/// <= max_total. When `commutator` is given, every pair of representatives
/// gets a solved coboundary certificate for it; associator defects are
/// certified the same way. Throws ResourceCap if max_total > h.hi().
GradedRing cohomology_ring(const Cohomology& h, const CochainProduct& mul, const Vec& unit_cochain,
                           std::size_t max_total, const CochainProduct& commutator = {});

// ---- crossed products A * G ----

/// The action of B's module structure restricted to the submodule incl(A).
HModule restricted_module(const HModule& m, const Matrix& incl);
/// h.f = h_1 f (S(h_2) -) on C^n(A, B) = Hom(A^{(x)n}, B) for B = A * E.
Matrix classical_hom_action(const SmashProduct& sp, std::size_t n, const Vec& h);
/// The classical complex C(A, B) with the E^op-part of the action attached.
Complex crossed_product_complex(const SmashProduct& sp, std::size_t N);
/// Projection onto Hom(A^{(x)n}, A g) for the group basis element g.
Matrix grading_projection(const SmashProduct& sp, std::size_t g, std::size_t n);

struct GDecomposition {
  /// reps[g][n]: homogeneous cocycles in Hom(A^{(x)n}, A g) whose classes form a
  /// basis of the g-summand of H^n.
  std::vector<std::vector<std::vector<Vec>>> reps;
  std::vector<std::vector<std::size_t>> dims;  // [g][n]
  Report checks;
};

/// Splits H^n(A, A * G) into the summands H^n(A, A g); `h` is the cohomology of
/// crossed_product_complex(sp, ...). Checks that the projections are chain
/// maps summing to the identity, that the summands fill H^n, and that the
/// identity summand is closed under the cup product.
GDecomposition g_decomposition(const SmashProduct& sp, const Cohomology& h);

/// For Y in H(A) = the identity summand and Z in the g-summand, with
/// |Y| + |Z| <= max_total: Y u Z - (g.Y) u Z and Z u Y - Z u (g.Y) are
/// coboundaries, and Y u Z - (-1)^{|Y||Z|} Z u Y is a coboundary.
Report ideal_annihilation_check(const SmashProduct& sp, const Cohomology& h, const GDecomposition& dec, std::size_t g,
                                std::size_t max_total);
/// Generators (1 - g).Y of I_g in degree n, as cochains of C(A, A * G).
std::vector<Vec> ideal_generators(const SmashProduct& sp, const GDecomposition& dec, std::size_t g, std::size_t n);

/// Invariant classes of H(A, B) graded-commute with all classes, through total
/// degree max_total. Not applicable unless E is semisimple and cosemisimple.
Report center_inclusion_check(const SmashProduct& sp, const Cohomology& h, std::size_t max_total);

/// For B = A * E and a dual cocycle J: (J_l.f) u (J^l.g) computed in C(A, B)
/// equals f u g computed in C(A, B_J) for all basis cochains with
/// |f| + |g| <= max_total, and products with a factor in C(A) = C(A, A) are
/// untwisted.
Report twist_product_equality(const SmashProduct& sp, const AlgebraObject& bj, const Vec& J, std::size_t max_total);

}  // namespace bhh
