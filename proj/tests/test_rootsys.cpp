#include <doctest.h>

#include <algorithm>
#include <set>

#include "liecheck/rootsys.hpp"

using namespace liecheck;

namespace {
RootSystem make(const std::string& t) { return RootSystem(GroupType::parse(t)); }
}

TEST_CASE("root counts") {
  struct Row { const char* t; std::size_t n; };
  for (Row r : {Row{"A3", 12}, {"B3", 18}, {"C3", 18}, {"D4", 24}, {"E6", 72},
                {"E7", 126}, {"E8", 240}, {"F4", 48}, {"G2", 12}}) {
    RootSystem rs = make(r.t);
    CHECK(rs.roots().size() == r.n);
    CHECK(rs.positive_roots().size() == r.n / 2);
  }
}

TEST_CASE("highest roots") {
  CHECK(format_weight(make("A3").highest_root()) == "w1+w3");
  CHECK(format_weight(make("B3").highest_root()) == "w2");
  CHECK(format_weight(make("C3").highest_root()) == "2*w1");
  CHECK(format_weight(make("D4").highest_root()) == "w2");
  CHECK(format_weight(make("E6").highest_root()) == "w2");
  CHECK(format_weight(make("E7").highest_root()) == "w1");
  CHECK(format_weight(make("E8").highest_root()) == "w8");
  CHECK(format_weight(make("F4").highest_root()) == "w1");
  CHECK(format_weight(make("G2").highest_root()) == "w2");
}

TEST_CASE("cartan matrices, spot rows") {
  RootSystem g2 = make("G2");
  CHECK(g2.cartan() == std::vector<std::vector<long long>>{{2, -1}, {-3, 2}});
  RootSystem b3 = make("B3");
  CHECK(b3.cartan()[1] == std::vector<long long>{-1, 2, -2});
  CHECK(b3.cartan()[2] == std::vector<long long>{0, -1, 2});
  RootSystem f4 = make("F4");
  CHECK(f4.cartan()[1] == std::vector<long long>{-1, 2, -2, 0});
  CHECK(f4.cartan()[2] == std::vector<long long>{0, -1, 2, -1});
}

TEST_CASE("cartan consistent with the epsilon form") {
  for (const char* t : {"A2", "A4", "B3", "B4", "C2", "C4", "D4", "D5", "E6",
                        "E7", "E8", "F4", "G2"}) {
    RootSystem rs = make(t);
    const auto& sr = rs.simple_roots();
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j) {
        Rat lhs = Rat(2) * rs.inner(sr[i], sr[j]) / rs.inner(sr[j], sr[j]);
        CHECK(lhs == Rat(rs.cartan()[i][j]));
      }
    // long roots have squared length 2
    Rat m = rs.inner(sr[0], sr[0]);
    for (int i = 1; i < rs.rank(); ++i)
      m = std::max(m, rs.inner(sr[i], sr[i]));
    CHECK(m == Rat(2));
  }
}

TEST_CASE("e values") {
  CHECK(make("A5").e_value() == 1);
  CHECK(make("D4").e_value() == 1);
  CHECK(make("E6").e_value() == 1);
  CHECK(make("B3").e_value() == 2);
  CHECK(make("C4").e_value() == 2);
  CHECK(make("F4").e_value() == 2);
  CHECK(make("G2").e_value() == 3);
}

TEST_CASE("weyl orbit sizes") {
  CHECK(make("B4").weyl_orbit(fundamental(4, 4)).size() == 16);
  CHECK(make("A7").weyl_orbit(fundamental(7, 2)).size() == 28);
  CHECK(make("D5").weyl_orbit(fundamental(5, 4)).size() == 16);
  CHECK(make("C3").weyl_orbit(fundamental(3, 3)).size() == 8);
  CHECK(make("E6").weyl_orbit(fundamental(6, 1)).size() == 27);
  CHECK(make("E7").weyl_orbit(fundamental(7, 7)).size() == 56);
  CHECK(make("G2").weyl_orbit(fundamental(2, 1)).size() == 6);
}

TEST_CASE("reflections and dominant conjugates") {
  RootSystem rs = make("C3");
  for (const auto& r : rs.roots()) {
    Weight d = rs.dominant_conjugate(r);
    CHECK(d.is_dominant());
    auto orbit = rs.weyl_orbit(r);
    CHECK(std::find(orbit.begin(), orbit.end(), d) != orbit.end());
    for (int i = 0; i < rs.rank(); ++i)
      CHECK(rs.simple_reflect(i, rs.simple_reflect(i, r)) == r);
  }
}

TEST_CASE("alpha coordinates and the root lattice") {
  RootSystem a2 = make("A2");
  CHECK(a2.is_radical(a2.highest_root()));
  CHECK_FALSE(a2.is_radical(fundamental(2, 1)));
  Weight adj(2);
  adj.c = {1, 1};
  auto ac = a2.alpha_coords(adj);
  CHECK(ac == std::vector<Rat>{Rat(1), Rat(1)});
  RootSystem e8 = make("E8");
  for (int i = 1; i <= 8; ++i) CHECK(e8.is_radical(fundamental(8, i)));
}

TEST_CASE("epsilon coordinates, classical frames") {
  RootSystem b3 = make("B3");
  Weight e2 = b3.eps_weight(2);
  CHECK(format_weight(e2) == "-w1+w2");
  RootSystem c3 = make("C3");
  CHECK(format_weight(c3.eps_weight(3)) == "-w2+w3");
  // round trip: eps coords of eps_weight(i) is the i-th unit vector
  for (const char* t : {"B3", "B4", "C2", "C4", "D4", "D5", "F4"}) {
    RootSystem rs = make(t);
    for (int i = 1; i <= rs.eps_dim(); ++i) {
      auto e = rs.eps_coords(rs.eps_weight(i));
      for (int j = 0; j < rs.eps_dim(); ++j)
        CHECK(e[j] == Rat(j + 1 == i ? 1 : 0));
    }
  }
}

TEST_CASE("normalized form values") {
  RootSystem g2 = make("G2");
  CHECK(g2.inner(fundamental(2, 1), fundamental(2, 1)) == Rat(2, 3));
  RootSystem c3 = make("C3");
  // short roots eps_i - eps_j have squared length 1 in type C
  Weight sh = c3.eps_weight(1) - c3.eps_weight(2);
  CHECK(c3.inner(sh, sh) == Rat(1));
}

TEST_CASE("rho pairs to one with every coroot") {
  for (const char* t : {"A3", "B3", "F4", "G2"}) {
    RootSystem rs = make(t);
    Weight rho = rs.rho();
    for (int i = 0; i < rs.rank(); ++i) CHECK(rho.c[i] == 1);
  }
}

TEST_CASE("weight text round trip") {
  CHECK(format_weight(parse_weight("2*w1-w3", 3)) == "2*w1-w3");
  CHECK(format_weight(parse_weight("0", 4)) == "0");
  CHECK(parse_weight(" w2 + 3*w1 ", 2) == (fundamental(2, 1, 3) + fundamental(2, 2)));
  CHECK_THROWS_AS(parse_weight("w5", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("w0", 3), std::invalid_argument);
}

TEST_CASE("group type parsing bounds") {
  CHECK_THROWS_AS(GroupType::parse("B2x"), std::invalid_argument);
  CHECK_THROWS_AS(GroupType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(GroupType::parse("D3"), std::invalid_argument);
  CHECK(GroupType::parse("C2").valid());
}
