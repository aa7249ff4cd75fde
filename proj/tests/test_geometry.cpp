#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ovalcode/formulas.hpp"
#include "ovalcode/geometry.hpp"

using namespace ovalcode;

TEST_CASE("arc detection basics") {
  auto f3 = Field::make(3, 1);
  ProjectivePointSet frame = {normalize_point(*f3, {1, 0, 0}),
                              normalize_point(*f3, {0, 1, 0}),
                              normalize_point(*f3, {0, 0, 1}),
                              normalize_point(*f3, {1, 1, 1})};
  CHECK(is_arc(*f3, frame).is_arc);

  ProjectivePointSet line = {normalize_point(*f3, {1, 0, 0}),
                             normalize_point(*f3, {0, 1, 0}),
                             normalize_point(*f3, {1, 1, 0})};
  auto bad = is_arc(*f3, line);
  CHECK_FALSE(bad.is_arc);
  CHECK(bad.witness.size() == 3);

  ProjectivePointSet dup = {normalize_point(*f3, {1, 0, 0}),
                            normalize_point(*f3, {2, 0, 0}),
                            normalize_point(*f3, {0, 1, 0})};
  CHECK_THROWS_AS((void)is_arc(*f3, dup), field_error);
}

TEST_CASE("normalization is canonical") {
  auto f5 = Field::make(5, 1);
  CHECK(normalize_point(*f5, {2, 4, 1}) == normalize_point(*f5, {3, 1, 4}));  // x3 scaling
  CHECK(normalize_point(*f5, {0, 3, 1}).x == std::array<Elem, 3>{0, 1, 2});
}

TEST_CASE("o-polynomial checks") {
  for (unsigned m = 2; m <= 5; ++m) {
    auto f = Field::make(2, m);
    CHECK(is_o_polynomial(*f, {0, 0, 1}).ok);  // x^2
  }
  std::vector<Elem> x6(7, 0);
  x6[6] = 1;
  CHECK(is_o_polynomial(*Field::make(2, 3), x6).ok);
  CHECK(is_o_polynomial(*Field::make(2, 5), x6).ok);
  CHECK_FALSE(is_o_polynomial(*Field::make(2, 4), x6).ok);

  auto f8 = Field::make(2, 3);
  auto identity = is_o_polynomial(*f8, {0, 1});  // g_0 = x^{q-1} is not a permutation
  CHECK_FALSE(identity.ok);

  CHECK_THROWS_AS((void)is_o_polynomial(*Field::make(3, 1), {0, 0, 1}), field_error);
  CHECK_THROWS_AS((void)is_o_polynomial(*Field::make(2, 11), {0, 0, 1}), budget_error);
}

TEST_CASE("hyperoval and conic point sets") {
  auto f4 = Field::make(2, 2);
  auto h = hyperoval_points(*f4, verify_o_polynomial(*f4, {0, 0, 1}));
  CHECK(h.size() == 6);
  CHECK(is_arc(*f4, h).is_arc);

  auto f8 = Field::make(2, 3);
  auto h8 = hyperoval_points(*f8, verify_o_polynomial(*f8, {0, 0, 1}));
  CHECK(h8.size() == 10);
  CHECK(is_arc(*f8, h8).is_arc);

  auto f3 = Field::make(3, 1);
  auto conic = conic_points(*f3);
  CHECK(conic.size() == 4);
  CHECK(is_arc(*f3, conic).is_arc);
}

TEST_CASE("line intersection profiles") {
  auto f4 = Field::make(2, 2);
  auto h = hyperoval_points(*f4, verify_o_polynomial(*f4, {0, 0, 1}));
  auto profile = line_intersection_profile(*f4, h);
  CHECK(profile == std::map<std::uint64_t, std::uint64_t>{{0, 6}, {2, 15}});

  auto f5 = Field::make(5, 1);
  auto conic = conic_points(*f5);
  auto cprofile = line_intersection_profile(*f5, conic);
  CHECK(cprofile[1] == 6);  // one tangent per point
  std::uint64_t total = 0;
  for (auto [sz, cnt] : cprofile) total += cnt;
  CHECK(total == 31);  // q^2 + q + 1

  ProjectivePointSet single = {normalize_point(*f5, {1, 2, 3})};
  auto sprofile = line_intersection_profile(*f5, single);
  CHECK(sprofile[1] == 6);
  CHECK(sprofile[0] == 25);
}

TEST_CASE("hyperoval profile support is {0,2} on the acceptance grid") {
  for (unsigned m : {2u, 3u, 4u, 5u}) {
    auto f = Field::make(2, m);
    auto h = hyperoval_points(*f, verify_o_polynomial(*f, {0, 0, 1}));
    auto profile = line_intersection_profile(*f, h);
    for (auto [sz, cnt] : profile) CHECK((sz == 0 || sz == 2));
  }
}

TEST_CASE("hyperoval and conic codes") {
  auto f4 = Field::make(2, 2);
  LinearCode h4 = hyperoval_code(f4, verify_o_polynomial(*f4, {0, 0, 1}));
  CHECK(h4.n() == 6);
  CHECK(h4.k() == 3);
  CHECK(minimum_distance(h4) == 4);
  CHECK(is_mds(h4));

  auto f8 = Field::make(2, 3);
  std::vector<Elem> x6(7, 0);
  x6[6] = 1;
  LinearCode h8 = hyperoval_code(f8, verify_o_polynomial(*f8, x6));
  CHECK(h8.n() == 10);
  CHECK(h8.k() == 3);
  CHECK(minimum_distance(h8) == 8);
  CHECK(is_mds(h8));

  auto f3 = Field::make(3, 1);
  LinearCode c3 = conic_code(f3);
  CHECK(c3.n() == 4);
  CHECK(c3.k() == 3);
  CHECK(minimum_distance(c3) == 2);
}

TEST_CASE("unverified o-polynomial is rejected by constructors") {
  auto f4 = Field::make(2, 2);
  OPolynomial raw{{0, 0, 1}, false};
  CHECK_THROWS_AS((void)hyperoval_points(*f4, raw), field_error);
  CHECK_THROWS_AS((void)hyperoval_code(f4, raw), field_error);
}
