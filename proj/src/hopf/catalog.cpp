#include "bhh/hopf/catalog.hpp"

namespace bhh {

FinHopf sweedler4(const FieldSpec& f) {
  if (f.characteristic() == 2) throw Error("Sweedler's algebra needs characteristic != 2");
  enum { one, g, x, gx };
  auto s = [&](long v) { return Scalar(f, v); };
  FinHopf h;
  h.field = f;
  h.dim = 4;
  h.labels = {"1", "g", "x", "gx"};
  auto at = [](int a, int b) { return static_cast<std::size_t>(a * 4 + b); };
  std::vector<Triplet> m;
  for (int b = 0; b < 4; ++b) {
    m.push_back({std::size_t(b), at(one, b), s(1)});
    if (b != one) m.push_back({std::size_t(b), at(b, one), s(1)});
  }
  m.push_back({one, at(g, g), s(1)});
  m.push_back({gx, at(g, x), s(1)});
  m.push_back({x, at(g, gx), s(1)});
  m.push_back({gx, at(x, g), s(-1)});
  m.push_back({x, at(gx, g), s(-1)});
  h.mult = Matrix::from_triplets(f, 4, 16, m);
  h.unit = unit_vec(f, 4, one);
  h.comult = Matrix::from_triplets(f, 16, 4,
                                   {{at(one, one), one, s(1)},
                                    {at(g, g), g, s(1)},
                                    {at(x, one), x, s(1)},
                                    {at(g, x), x, s(1)},
                                    {at(gx, g), gx, s(1)},
                                    {at(one, gx), gx, s(1)}});
  h.counit = Matrix::from_triplets(f, 1, 4, {{0, one, s(1)}, {0, g, s(1)}});
  h.antipode = Matrix::from_triplets(f, 4, 4, {{one, one, s(1)}, {g, g, s(1)}, {gx, x, s(-1)}, {x, gx, s(1)}});
  h.finalize();
  return h;
}

ModuleAlgebra trivial_module_algebra(const FinHopf& h, const Algebra& a) { return {a, trivial_module(h, a.dim)}; }

ModuleAlgebra dual_numbers_sign(const FieldSpec& f) {
  auto h = group_algebra(GroupTable::cyclic(2), f);
  ModuleAlgebra a = trivial_module_algebra(h, dual_numbers(f));
  a.action.rho[1] = Matrix::from_triplets(f, 2, 2, {{0, 0, Scalar(f, 1)}, {1, 1, Scalar(f, -1)}});
  return a;
}

Algebra square_zero_extension(const FieldSpec& f, std::size_t n) {
  std::size_t d = n + 1;
  Algebra a{f, d, {}, unit_vec(f, d, 0), {"1"}};
  for (std::size_t i = 1; i < d; ++i) a.labels.push_back("v" + std::to_string(i));
  std::vector<Triplet> t;
  for (std::size_t b = 0; b < d; ++b) {
    t.push_back({b, b, Scalar::one(f)});
    if (b) t.push_back({b, b * d, Scalar::one(f)});
  }
  a.mult = Matrix::from_triplets(f, d, d * d, std::move(t));
  return a;
}

ModuleAlgebra z3_planar(const FieldSpec& f) {
  auto h = group_algebra(GroupTable::cyclic(3), f);
  ModuleAlgebra a = trivial_module_algebra(h, square_zero_extension(f, 2));
  Matrix g = Matrix::from_ints(f, {{1, 0, 0}, {0, 0, -1}, {0, 1, -1}});
  a.action.rho[1] = g;
  a.action.rho[2] = g * g;
  return a;
}

}  // namespace bhh
