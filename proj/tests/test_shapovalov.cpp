#include <doctest.h>

#include "helpers.hpp"
#include "mick/shapovalov.hpp"
#include "mick/weight_space.hpp"

using namespace mick;

namespace {

struct Alg {
  RootData rd;
  UqCore core;
  Verma verma;
  Shapovalov sh;
  Alg(char f, int n) : rd(LieType::parse(f, n)), core(rd), verma(core), sh(verma) {}
};

RatFn ym1(const Alg& g, int l, int j) {
  return RatFn(LaurentPoly::monomial(g.sh.y_default(j)(l)) - LaurentPoly(1));
}

}  // namespace

TEST_CASE("A coefficients") {
  Alg so6('D', 3);
  auto y = so6.sh.y_default(5);
  for (int l : so6.rd.predecessors(5)) CHECK(so6.sh.A(l, y) * so6.sh.A_bar(l, y) == RatFn(1));
  CHECK(so6.sh.A(2, 5) == (th::q() - th::q(-1)) / ym1(so6, 2, 5));
  CHECK(so6.sh.delta_minus(5) == so6.sh.A_bar(2, y));
  CHECK(so6.sh.delta_minus(3) == RatFn(1));
  Alg sp6('C', 3);
  for (int j = 2; j <= 6; ++j) CHECK(sp6.sh.delta_minus(j) == RatFn(1));
  // A has a pole where eta_lj vanishes
  WeightSpec w{{0, 0, 0}, {0, 0, 0}};
  auto e = so6.rd.eta(1, 2);
  w.c2[0] = -e.c2;  // eta_12 = l1 - l2 + c
  CHECK_THROWS_AS(evaluate(so6.sh.A(1, 2), w), PoleError);
}

TEST_CASE("fhat boundary values and the so(6) route sum") {
  Alg so6('D', 3);
  CHECK(so6.sh.fhat(3, 3) == FreeElt::unit());
  CHECK(so6.sh.fhat(4, 2).is_zero());
  CHECK(so6.sh.fhat(3, 4).is_zero());
  auto y = so6.sh.y_default(5);
  auto A = [&](int l) { return so6.sh.A(l, y); };
  const UqCore& c = so6.core;
  FreeElt expect = A(1) * c.f(1, 5) + (A(1) * A(3)) * (c.f(1, 3) * c.f(3, 5)) + (A(1) * A(4)) * (c.f(1, 4) * c.f(4, 5)) +
                   (A(1) * A(2)) * (c.f(1, 2) * c.f(2, 5)) + (A(1) * A(2) * A(3)) * (c.f(1, 2) * c.f(2, 3) * c.f(3, 5)) +
                   (A(1) * A(2) * A(4)) * (c.f(1, 2) * c.f(2, 4) * c.f(4, 5));
  CHECK(so6.sh.fhat(1, 5) == expect);
}

TEST_CASE("so(6) regularized generator") {
  Alg so6('D', 3);
  RatFn qq = th::q() - th::q(-1);
  RatFn y3 = ym1(so6, 3, 5) / qq, y4 = ym1(so6, 4, 5) / qq;
  const UqCore& c = so6.core;
  FreeElt f1 = FreeElt::letter(1), f2 = FreeElt::letter(2), f3 = FreeElt::letter(3);
  FreeElt expect = (y3 * y4) * c.f(1, 5) + y4 * (c.f(1, 3) * f3) + y3 * (c.f(1, 4) * f2) + f1 * f2 * f3;
  CHECK(so6.verma.is_zero(so6.sh.gen_minus(5) - expect));
  CHECK_FALSE(so6.verma.is_zero(so6.sh.gen_minus(5) - expect + f1 * f2 * f3));

  auto basis = so6.sh.gen_minus_basis(5);
  REQUIRE(basis.size() == 4);
  std::vector<std::string> labels;
  for (const auto& t : basis) labels.push_back(t.label);
  CHECK(labels == std::vector<std::string>{"f1*f2*f3", "f[1,5]", "f[1,3]*f3", "f[1,4]*f2"});
  CHECK(basis[0].coeff == RatFn(1));
  CHECK(basis[1].coeff == y3 * y4);
  CHECK(basis[2].coeff == y4);
  CHECK(basis[3].coeff == y3);

  // principal coefficient of f-check in the route basis
  auto fc = so6.sh.basis_form(so6.sh.fcheck(1, 5), 1, 5);
  RatFn y34 = (RatFn(LaurentPoly::monomial(so6.sh.y_default(5)(3) * so6.sh.y_default(5)(4))) - RatFn(1)) / qq;
  CHECK(fc[0].label == "f1*f2*f3");
  CHECK(fc[0].coeff == y34);
  CHECK(fc[0].coeff == so6.sh.A_bar(2, so6.sh.y_default(5)));
}

TEST_CASE("single arc generators") {
  for (char f : {'A', 'B', 'C', 'D'}) {
    Alg g(f, 3);
    CHECK(g.sh.fcheck(1, 2) == FreeElt::letter(1));
    CHECK(g.sh.gen_minus(2) == FreeElt::letter(1));
  }
}

TEST_CASE("singular vectors") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 2}, {'C', 3}, {'D', 3}}) {
    Alg g(f, n);
    for (int j = 1; j <= g.rd.N(); ++j)
      CHECK_MESSAGE(g.sh.check_singular(g.sh.singular_vector(j)), g.rd.type().name() << " j=" << j);
  }
  Alg sp4('C', 2);
  CHECK(sp4.sh.check_singular(TensorVec{{1, FreeElt::unit()}}));
  CHECK_FALSE(sp4.sh.check_singular(TensorVec{{2, FreeElt::unit()}}));
}

TEST_CASE("delta divisibility") {
  for (auto [f, n] : std::vector<std::pair<char, int>>{{'B', 2}, {'B', 3}, {'D', 3}, {'D', 4}}) {
    Alg g(f, n);
    for (int j = 2; j <= g.rd.N(); ++j)
      for (int i = 1; i <= g.rd.flip(j); ++i) {
        if (!g.rd.precedes(i, j)) continue;
        CHECK_NOTHROW(g.sh.divided_basis_form(i, j));
      }
  }
}
