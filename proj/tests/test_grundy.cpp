#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "sprouts/grundy.hpp"

using sprouts::mex;
using sprouts::Nimber;
using sprouts::nim_sum;
using sprouts::sum_nimber;

TEST_CASE("mex examples") {
  CHECK(mex(std::vector<Nimber>{}) == 0);
  CHECK(mex(std::vector<Nimber>{0, 1, 2}) == 3);
  CHECK(mex(std::vector<Nimber>{1, 2}) == 0);
  CHECK(mex(std::vector<Nimber>{2, 0, 2, 0, 1, 1}) == 3);
  CHECK(mex(std::vector<Nimber>{0, 1000000}) == 1);
}

TEST_CASE("nim_sum and sum_nimber examples") {
  CHECK(nim_sum(1, 1) == 0);
  CHECK(nim_sum(2, 3) == 1);
  for (Nimber p = 0; p < 50; ++p) CHECK(nim_sum(1, 2 * p) == 2 * p + 1);
  CHECK(sum_nimber(std::vector<Nimber>{}) == 0);
  CHECK(sum_nimber(std::vector<Nimber>{1, 1}) == 0);
  CHECK(sum_nimber(std::vector<Nimber>{2, 0}) == 2);
}

TEST_CASE("mex properties over random sets") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Nimber> values(rng() % 12);
    for (auto& v : values) v = rng() % 10;
    const Nimber m = mex(values);
    const std::set<Nimber> s(values.begin(), values.end());
    REQUIRE(s.count(m) == 0);
    for (Nimber k = 0; k < m; ++k) REQUIRE(s.count(k) == 1);
    values.push_back(m);
    REQUIRE(mex(values) > m);
  }
}

TEST_CASE("nim_sum algebra over random values") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const Nimber a = rng() >> (rng() % 64), b = rng() >> (rng() % 64), c = rng() >> (rng() % 64);
    REQUIRE(nim_sum(a, b) == nim_sum(b, a));
    REQUIRE(nim_sum(nim_sum(a, b), c) == nim_sum(a, nim_sum(b, c)));
    REQUIRE(nim_sum(a, 0) == a);
    REQUIRE(nim_sum(a, a) == 0);
    REQUIRE(sum_nimber(std::vector<Nimber>{a, b, c}) == nim_sum(nim_sum(a, b), c));
  }
}
