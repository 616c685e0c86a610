#include <doctest.h>

#include <algorithm>

#include "dqp/bundled.hpp"
#include "dqp/graded.hpp"
#include "dqp/stasheff.hpp"

using namespace dqp;

namespace {
Algebra t3() { return Algebra::truncated_polynomial(3); }
}  // namespace

TEST_CASE("validate: truncated polynomial algebras are associative and unital") {
  CHECK(t3().validate().ok());
  CHECK(Algebra::truncated_polynomial(1).validate().ok());
  CHECK(Algebra::truncated_polynomial(2).validate().ok());
}

namespace {
// span{I, E11, E12} inside 2x2 matrices: associative, unital, noncommutative
std::vector<SparseVec> upper_triangular_table() {
  std::vector<SparseVec> table(9);
  auto set = [&](int i, int j, int k) { table[i * 3 + j] = SparseVec::basis(k); };
  for (int i = 0; i < 3; ++i) {
    set(0, i, i);
    set(i, 0, i);
  }
  set(1, 1, 1);  // E11 E11 = E11
  set(1, 2, 2);  // E11 E12 = E12
  // E12 E11 = E12 E12 = 0
  return table;
}
}  // namespace

TEST_CASE("validate: matrix units pass; a perturbed diagonal names the triple") {
  Algebra good(3, {"I", "E11", "E12"}, upper_triangular_table(), SparseVec::basis(0));
  CHECK(good.validate().ok());
  auto table = upper_triangular_table();
  table[1 * 3 + 1] = SparseVec::basis(2);  // E11 E11 := E12
  Algebra bad(3, {"I", "E11", "E12"}, table, SparseVec::basis(0));
  auto report = bad.validate();
  CHECK(!report.ok());
  bool found = false;
  for (const auto& d : report.defects)
    if (d.kind == AlgebraDefect::Kind::Associativity && d.i == 1 && d.j == 1 && d.k == 1)
      found = true;
  CHECK(found);
}

TEST_CASE("validate: a wrong unit vector is reported") {
  Algebra bad(3, {"I", "E11", "E12"}, upper_triangular_table(), SparseVec::basis(1));
  auto report = bad.validate();
  CHECK(!report.ok());
  bool unit_defect = false;
  for (const auto& d : report.defects)
    if (d.kind == AlgebraDefect::Kind::LeftUnit || d.kind == AlgebraDefect::Kind::RightUnit)
      unit_defect = true;
  CHECK(unit_defect);
}

TEST_CASE("mul: truncation and the unit") {
  Algebra alg = t3();
  CHECK(alg.mul(alg.basis(1), alg.basis(1)) == alg.basis(2));
  CHECK(alg.mul(alg.basis(1), alg.basis(2)).v.empty());
  for (int i = 0; i < 3; ++i) {
    CHECK(alg.mul(alg.unit(), alg.basis(i)) == alg.basis(i));
    CHECK(alg.mul(alg.basis(i), alg.unit()) == alg.basis(i));
  }
}

TEST_CASE("dual_action: unit acts trivially, zero stays zero, worked value") {
  Algebra alg = t3();
  DualElem f = alg.dual_basis(2);
  CHECK(alg.dual_action(alg.unit(), f, alg.unit()) == f);
  CHECK(alg.dual_action(alg.basis(1), DualElem{}, alg.basis(2)).v.empty());
  // (t . t(t^2*)) with trivial right factor: c -> t^2*(c t) picks out c = t
  DualElem got = alg.dual_action(alg.basis(1), f, alg.unit());
  CHECK(got == alg.dual_basis(1));
}

TEST_CASE("natural form: evaluation pairing, zero blocks, symmetry") {
  Algebra alg = t3();
  PhiElem tdual{{}, alg.dual_basis(1)};
  PhiElem t{alg.basis(1), {}};
  PhiElem one{alg.unit(), {}};
  CHECK(natural_form(alg, tdual, t) == 1);
  CHECK(natural_form(alg, t, tdual) == 1);
  CHECK(natural_form(alg, t, one) == 0);
  CHECK(natural_form(alg, tdual, PhiElem{{}, alg.dual_basis(2)}) == 0);
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          PhiElem x = p == 0 ? PhiElem{alg.basis(i), {}} : PhiElem{{}, alg.dual_basis(i)};
          PhiElem y = q == 0 ? PhiElem{alg.basis(j), {}} : PhiElem{{}, alg.dual_basis(j)};
          CHECK(natural_form(alg, x, y) == natural_form(alg, y, x));
        }
}

TEST_CASE("m2: unit, mixed products, duals annihilate") {
  Algebra alg = t3();
  PhiElem unit{alg.unit(), {}};
  for (int i = 0; i < 3; ++i) {
    PhiElem x{alg.basis(i), alg.dual_basis((i + 1) % 3)};
    CHECK(m2_phi(alg, unit, x) == x);
    CHECK(m2_phi(alg, x, unit) == x);
  }
  PhiElem a{alg.basis(1), {}};
  PhiElem tf{{}, alg.dual_basis(2)};
  PhiElem mixed = m2_phi(alg, a, tf);
  CHECK(mixed.alg.v.empty());
  CHECK(mixed.dual == alg.act_left(alg.basis(1), alg.dual_basis(2)));
  CHECK(m2_phi(alg, tf, tf).zero());
}

TEST_CASE("m2 on dA is associative on every basis triple") {
  Algebra alg = t3();
  std::vector<PhiElem> basis;
  for (int i = 0; i < 3; ++i) basis.push_back({alg.basis(i), {}});
  for (int i = 0; i < 3; ++i) basis.push_back({{}, alg.dual_basis(i)});
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis)
        CHECK(m2_phi(alg, m2_phi(alg, x, y), z) == m2_phi(alg, x, m2_phi(alg, y, z)));
}

TEST_CASE("m2 is cyclic for the natural form") {
  // g(m2(x,y),z) = (-1)^{2+|z|(|x|+|y|)} g(m2(z,x),y) on all basis triples
  Algebra alg = t3();
  std::vector<MixedSlot> basis;
  for (int i = 0; i < 3; ++i) basis.push_back(MixedSlot::algebra(alg.basis(i)));
  for (int i = 0; i < 3; ++i) basis.push_back(MixedSlot::dual(alg.dual_basis(i)));
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        Rational lhs = natural_form(alg, m2_phi(alg, x.as_phi(), y.as_phi()), z.as_phi());
        Rational rhs = natural_form(alg, m2_phi(alg, z.as_phi(), x.as_phi()), y.as_phi());
        if ((2 + z.parity * (x.parity + y.parity)) % 2 != 0) rhs = -rhs;
        CHECK(lhs == rhs);
      }
}

TEST_CASE("permute_graded: identity, transpositions, composition") {
  Algebra alg = t3();
  MixedTuple tup{MixedSlot::dual(alg.dual_basis(0)), MixedSlot::dual(alg.dual_basis(1)),
                 MixedSlot::algebra(alg.basis(2)), MixedSlot::dual(alg.dual_basis(2))};
  auto [same, s0] = permute_graded({0, 1, 2, 3}, tup);
  CHECK(same == tup);
  CHECK(s0 == 1);
  // swapping two parity-1 slots costs a sign
  auto [sw, s1] = permute_graded({1, 0, 2, 3}, tup);
  CHECK(s1 == -1);
  CHECK(sw[0] == tup[1]);
  // swapping a parity-0 against a parity-1 slot costs nothing
  auto [sw2, s2] = permute_graded({0, 1, 3, 2}, tup);
  CHECK(s2 == 1);
  CHECK_THROWS_AS(permute_graded({0, 1, 2}, tup), std::invalid_argument);
  CHECK_THROWS_AS(permute_graded({0, 0, 2, 3}, tup), std::invalid_argument);

  // sign of a composite equals the product of signs, every length <= 4
  std::vector<std::vector<int>> perms3{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1},
                                       {1, 2, 0}, {2, 1, 0}};
  for (int mask = 0; mask < 8; ++mask) {
    MixedTuple word;
    for (int p = 0; p < 3; ++p)
      word.push_back((mask >> p) & 1 ? MixedSlot::dual(alg.dual_basis(p % 3))
                                     : MixedSlot::algebra(alg.basis(p % 3)));
    for (const auto& sig : perms3)
      for (const auto& rho : perms3) {
        std::vector<int> comp(3);
        for (int p = 0; p < 3; ++p) comp[p] = sig[rho[p]];
        auto [mid, srho] = permute_graded(rho, word);
        auto [fin, ssig] = permute_graded(sig, mid);
        auto [direct, scomp] = permute_graded(comp, word);
        CHECK(fin == direct);
        CHECK(scomp == srho * ssig);
      }
  }
}

TEST_CASE("permutation duality: functionals move by the inverse") {
  // (f1 x..x fn)(sigma(v1 x..x vn)) = (sigma^{-1}(f1 x..x fn))(v1 x..x vn)
  Algebra alg = t3();
  std::uint64_t state = 17;
  std::vector<std::vector<int>> perms4;
  std::vector<int> base{0, 1, 2, 3};
  do perms4.push_back(base);
  while (std::next_permutation(base.begin(), base.end()));
  for (int trial = 0; trial < 60; ++trial) {
    MixedTuple vecs;
    for (int p = 0; p < 4; ++p) {
      int parity = static_cast<int>((state >> 5) & 1);
      vecs.push_back({parity, random_sparse(3, state)});
    }
    const auto& sigma = perms4[state % perms4.size()];
    std::vector<int> inverse(4);
    for (int p = 0; p < 4; ++p) inverse[sigma[p]] = p;
    // functionals live against the permuted word, so slot i pairs v_{sigma^{-1}(i)}
    MixedTuple funs;
    for (int i = 0; i < 4; ++i) funs.push_back({vecs[inverse[i]].parity, random_sparse(3, state)});
    auto [pv, sv] = permute_graded(sigma, vecs);
    auto [pf, sf] = permute_graded(inverse, funs);
    Rational lhs = pair_tuples(alg, funs, pv) * sv;
    Rational rhs = pair_tuples(alg, pf, vecs) * sf;
    CHECK(lhs == rhs);
  }
}
