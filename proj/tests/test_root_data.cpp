#include <doctest.h>

#include "mick/root_data.hpp"

using namespace mick;

namespace {
RootData rd(char f, int n) { return RootData(LieType::parse(f, n)); }
}  // namespace

TEST_CASE("natural representation matrices") {
  auto sp4 = rd('C', 2);
  auto e2 = sp4.pi_e(2);
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 4; ++c) CHECK(e2[r][c] == ((r == 2 && c == 3) ? 1 : 0));
  auto h2 = sp4.pi_h(2);
  CHECK(h2[2][2] == 2);
  CHECK(h2[3][3] == -2);
  CHECK(h2[1][1] == 0);

  auto so5 = rd('B', 2);
  CHECK(so5.rho2() == std::vector<int>{3, 1});
  CHECK(so5.star() == 3);

  auto so8 = rd('D', 4);
  CHECK(so8.node_weight(4) == std::vector<int>{0, 0, 0, 1});
  CHECK(so8.node_weight(5) == std::vector<int>{0, 0, 0, -1});
}

TEST_CASE("representation is consistent with the Cartan data") {
  for (char f : {'A', 'B', 'C', 'D'})
    for (int n = (f == 'D' ? 2 : 1); n <= 4; ++n) {
      auto r = rd(f, n);
      for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= r.N(); ++i) {
          int j = r.f_target(k, i);
          if (!j) continue;
          auto diff = r.node_weight(i);
          for (int d = 0; d < r.dim(); ++d) diff[d] -= r.node_weight(j)[d];
          CHECK(diff == r.simple_root(k));
          CHECK(r.e_target(k, j) == i);
        }
    }
}

TEST_CASE("eta and xi") {
  auto sp4 = rd('C', 2);
  for (int i = 1; i <= 4; ++i) CHECK(sp4.eta(i, i) == AffineForm{{0, 0}, 0});
  CHECK(sp4.eta(1, 2) == AffineForm{{2, -2}, 0});
  CHECK(sp4.eta(1, 2).str() == "l1 - l2");
  for (char f : {'A', 'B', 'C', 'D'}) {
    auto r = rd(f, 3);
    for (int i = 1; i <= r.N(); ++i)
      for (int j = 1; j <= r.N(); ++j) {
        AffineForm d = r.xi(i, j) - r.eta(i, j);
        CHECK(d.is_constant());
        int expect = r.inner(r.node_weight(i), r.node_weight(i)) - r.inner(r.node_weight(i), r.node_weight(j));
        CHECK(d.c2 == 2 * expect);
      }
  }
}

TEST_CASE("affine identities among eta forms") {
  for (char f : {'B', 'C', 'D'})
    for (int n = (f == 'D' ? 2 : 1); n <= 6; ++n) {
      auto r = rd(f, n);
      int one_p = r.flip(1);
      for (int m = 2; m <= n; ++m)
        CHECK(r.eta(m, one_p) + r.eta(r.flip(m), one_p) == r.eta(1, one_p));
      if (f == 'B')
        for (int m = 1; m <= n; ++m)
          CHECK(r.eta(r.star(), r.flip(m)).scaled(2).plus_const2(-2) == r.eta(m, r.flip(m)));
    }
}

TEST_CASE("hasse diagrams") {
  auto sp4 = rd('C', 2);
  std::vector<Arc> chain{{1, 2, 1}, {2, 3, 2}, {3, 4, 1}};
  REQUIRE(sp4.arcs().size() == 3);
  for (size_t k = 0; k < 3; ++k) {
    CHECK(sp4.arcs()[k].from == chain[k].from);
    CHECK(sp4.arcs()[k].to == chain[k].to);
    CHECK(sp4.arcs()[k].label == chain[k].label);
  }
  auto so6 = rd('D', 3);
  auto has = [&](int a, int b, int l) {
    for (const auto& arc : so6.arcs())
      if (arc.from == a && arc.to == b && arc.label == l) return true;
    return false;
  };
  CHECK(has(2, 3, 2));
  CHECK(has(2, 4, 3));
  CHECK(has(3, 5, 3));
  CHECK(has(4, 5, 2));
  CHECK(!so6.precedes(3, 4));
  CHECK(!so6.precedes(4, 3));
  for (char f : {'A', 'B', 'C', 'D'})
    for (int n = (f == 'D' ? 2 : 1); n <= 5; ++n) {
      auto r = rd(f, n);
      CHECK(r.precedes(1, r.N()));
      for (int i = 1; i <= r.N(); ++i)
        for (int j = 1; j <= r.N(); ++j)
          if (r.precedes(i, j)) CHECK(i < j);
    }
  // total chain except for the D-type middle pair
  for (char f : {'B', 'C'}) {
    auto r = rd(f, 3);
    for (int i = 1; i < r.N(); ++i) CHECK(r.precedes(i, i + 1));
  }
}

TEST_CASE("routes") {
  auto so6 = rd('D', 3);
  std::vector<Route> expect{{}, {2}, {3}, {4}, {2, 3}, {2, 4}};
  CHECK(so6.routes(1, 5) == expect);
  auto sp4 = rd('C', 2);
  CHECK(sp4.routes(1, 4) == std::vector<Route>{{}, {2}, {3}, {2, 3}});
  CHECK(sp4.routes(1, 2) == std::vector<Route>{{}});
  CHECK(sp4.routes(3, 1).empty());
  CHECK(so6.routes(3, 4).empty());
  auto sp8 = rd('C', 4);
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j) CHECK(sp8.routes(i, j).size() == (1u << (j - i - 1)));
}

TEST_CASE("path length is well defined") {
  auto so8 = rd('D', 4);
  CHECK(so8.path_length(3, 6) == 2);
  CHECK(so8.path_length(1, 8) == 6);
  CHECK(so8.lex_path(3, 6) == std::vector<int>{3, 4, 6});
  for (char f : {'A', 'B', 'C', 'D'}) {
    auto r = rd(f, 3);
    for (int i = 1; i <= r.N(); ++i)
      for (int j = i + 1; j <= r.N(); ++j)
        if (r.precedes(i, j))
          for (int m = i + 1; m < j; ++m)
            if (r.precedes(i, m) && r.precedes(m, j))
              CHECK(r.path_length(i, m) + r.path_length(m, j) == r.path_length(i, j));
  }
}

TEST_CASE("kostant partition function") {
  auto a2 = rd('A', 2);
  CHECK(a2.kostant({0, 1, 1}) == 2);
  auto b2 = rd('B', 2);
  CHECK(b2.kostant({0, 1, 2}) == 3);
  CHECK(b2.positive_roots().size() == 4);
  auto d4 = rd('D', 4);
  CHECK(d4.positive_roots().size() == 12);
  CHECK(rd('C', 3).to_simple({2, 0, 0}) == std::vector<int>{0, 2, 2, 1});
}
