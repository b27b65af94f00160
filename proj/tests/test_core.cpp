#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <thread>

#include "packcol/core.hpp"
#include "support/naive.hpp"

using namespace packcol;

TEST_CASE("DistanceSpec canonical constructor validates t") {
  CHECK_THROWS_AS(DistanceSpec::g2t(4), precondition_error);
  CHECK_THROWS_AS(DistanceSpec::g2t(1), precondition_error);
  CHECK_THROWS_AS(DistanceSpec::g2t(-3), precondition_error);
  CHECK_THROWS_AS(DistanceSpec::g2t(kMaxT + 1), precondition_error);
  const auto spec = DistanceSpec::g2t(7);
  CHECK(spec.is_g2t());
  CHECK(spec.t() == 7);
  CHECK(spec.max_gen() == 7);
  CHECK(spec.generators() == std::vector<std::int64_t>{2, 7});
}

TEST_CASE("DistanceSpec general escape hatch") {
  const auto spec = DistanceSpec::general({4, 2});
  CHECK_FALSE(spec.is_g2t());
  CHECK(spec.generators() == std::vector<std::int64_t>{2, 4});
  CHECK_THROWS_AS(DistanceSpec::general({}), precondition_error);
  CHECK_THROWS_AS(DistanceSpec::general({0, 3}), precondition_error);
}

TEST_CASE("dist_delta on known gaps") {
  DistanceOracle g5(DistanceSpec::g2t(5));
  CHECK(dist_delta(g5, 2) == 1);   // single generator step
  CHECK(dist_delta(g5, 14) == 4);  // 2+2+5+5
  DistanceOracle g3(DistanceSpec::g2t(3));
  CHECK(dist_delta(g3, 1) == 2);  // 0 -> 3 -> 1
  CHECK(dist_delta(g3, 0) == 0);
}

TEST_CASE("dist_delta is symmetric and bounded below") {
  DistanceOracle oracle(DistanceSpec::g2t(7));
  for (std::int64_t g = -60; g <= 60; ++g) {
    CHECK(dist_delta(oracle, g) == dist_delta(oracle, -g));
    if (g != 0) {
      const std::int64_t need = (std::llabs(g) + 6) / 7;
      CHECK(dist_delta(oracle, g) >= need);
    }
  }
}

TEST_CASE("dist_delta satisfies the triangle inequality") {
  DistanceOracle oracle(DistanceSpec::g2t(9));
  for (std::int64_t a = -100; a <= 100; a += 7) {
    for (std::int64_t b = -100; b <= 100; b += 11) {
      CHECK(dist_delta(oracle, a + b) <=
            dist_delta(oracle, a) + dist_delta(oracle, b));
    }
  }
}

TEST_CASE("dist_delta matches the naive BFS and the representation route") {
  for (std::int64_t t : {3, 5, 7, 9, 11}) {
    DistanceOracle oracle(DistanceSpec::g2t(t));
    for (std::int64_t g = 0; g <= 200; ++g) {
      const int got = dist_delta(oracle, g);
      CHECK(got == testsupport::naive_distance(t, g));
      CHECK(got == testsupport::representation_distance(t, g));
    }
  }
}

TEST_CASE("dist_delta through the escape hatch reports disconnection") {
  DistanceOracle even(DistanceSpec::general({2, 4}));
  CHECK(dist_delta(even, 6) == 2);
  CHECK_THROWS_AS(dist_delta(even, 3), disconnected_error);
  DistanceOracle coprime(DistanceSpec::general({3, 5}));
  CHECK(dist_delta(coprime, 1) == 3);  // 3+3-5
}

TEST_CASE("conflict_offsets matches the values behind the 2-distance case split") {
  DistanceOracle g5(DistanceSpec::g2t(5));
  CHECK(conflict_offsets(g5, 2) ==
        std::vector<std::int64_t>{2, 3, 4, 5, 7, 10});
  DistanceOracle g7(DistanceSpec::g2t(7));
  CHECK(conflict_offsets(g7, 2) ==
        std::vector<std::int64_t>{2, 4, 5, 7, 9, 14});
  DistanceOracle g13(DistanceSpec::g2t(13));
  CHECK(conflict_offsets(g13, 2) ==
        std::vector<std::int64_t>{2, 4, 11, 13, 15, 26});
  DistanceOracle g9(DistanceSpec::g2t(9));
  CHECK(conflict_offsets(g9, 1) == std::vector<std::int64_t>{2, 9});
}

TEST_CASE("conflict_offsets agrees pointwise with dist_delta") {
  for (std::int64_t t : {3, 7, 11}) {
    DistanceOracle oracle(DistanceSpec::g2t(t));
    for (int width = 1; width <= 3; ++width) {
      const auto offs = conflict_offsets(oracle, width);
      const std::set<std::int64_t> members(offs.begin(), offs.end());
      for (std::int64_t g = 1; g <= width * t; ++g) {
        CHECK(members.count(g) == (dist_delta(oracle, g) <= width ? 1u : 0u));
      }
      CHECK(offs.back() <= width * t);
    }
  }
}

TEST_CASE("dist_circulant small cases") {
  const auto c14 = CirculantSpec::make(14, {2, 5});
  CHECK(dist_circulant(c14, 0, 2) == 1);
  CHECK(dist_circulant(c14, 0, 7) == 2);  // 0 -> 5 -> 7
  const auto c25 = CirculantSpec::make(25, {2, 3});
  CHECK(dist_circulant(c25, 0, 1) == 2);  // 0 -> 3 -> 1
  CHECK(c14.connected());
  CHECK(c25.connected());
}

TEST_CASE("dist_circulant reports disconnection") {
  const auto c8 = CirculantSpec::make(8, {2, 4});
  CHECK_FALSE(c8.connected());
  CHECK(dist_circulant(c8, 0, 1) == std::nullopt);
  CHECK(dist_circulant(c8, 0, 4) == 1);
}

TEST_CASE("build_ht realizes every edge as a {2,t} gap") {
  for (std::int64_t t : {5, 7, 9, 11}) {
    const HtGadget h = build_ht(t);
    CHECK(h.vertex_count() == 4 * t);
    CHECK(static_cast<std::int64_t>(h.edges.size()) == 7 * t - 3);
    for (auto [a, b] : h.edges) {
      const std::int64_t gap = std::llabs(h.embed_index(a) - h.embed_index(b));
      CHECK((gap == 2 || gap == t));
    }
  }
}

TEST_CASE("build_ht embedding for t=5 matches the expected map") {
  const HtGadget h = build_ht(5);
  CHECK(h.embed(2, 1) == 13);
  CHECK(h.embed(4, 5) == 15);
  CHECK(h.embed(1, 1) == 8);
  CHECK_THROWS_AS(build_ht(4), precondition_error);
  CHECK_THROWS_AS(build_ht(3), precondition_error);
}

TEST_CASE("H_t distances dominate the embedded G_t distances") {
  for (std::int64_t t : {5, 7}) {
    const HtGadget h = build_ht(t);
    DistanceOracle oracle(DistanceSpec::g2t(t));
    for (int u = 0; u < h.vertex_count(); ++u) {
      for (int v = u + 1; v < h.vertex_count(); ++v) {
        const int inner = h.dist[u][v];
        REQUIRE(inner >= 0);
        CHECK(dist_delta(oracle, h.embed_index(u) - h.embed_index(v)) <= inner);
      }
    }
  }
}

TEST_CASE("WidthSequence parsing and invariants") {
  CHECK(WidthSequence::parse("1,1,2,2").widths() == std::vector<int>{1, 1, 2, 2});
  CHECK(WidthSequence::parse("2*5").widths() == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(WidthSequence::parse("1,2*3").widths() == std::vector<int>{1, 2, 2, 2});
  CHECK(WidthSequence::parse("1,12,13").to_string() == "1,12,13");
  CHECK_THROWS_AS(WidthSequence::parse("2,1"), precondition_error);
  CHECK_THROWS_AS(WidthSequence::parse(""), precondition_error);
  CHECK_THROWS_AS(WidthSequence::parse("0,1"), precondition_error);
  CHECK_THROWS_AS(WidthSequence::parse("1,,2"), precondition_error);
  const auto s = WidthSequence::parse("1,1,2");
  CHECK(s.width_of(3) == 2);
  CHECK(s.prefix(2).widths() == std::vector<int>{1, 1});
  CHECK_THROWS_AS(s.width_of(4), precondition_error);
}

TEST_CASE("oracle memoization is consistent under concurrent readers") {
  DistanceOracle oracle(DistanceSpec::g2t(11));
  std::vector<int> expected;
  for (std::int64_t g = 0; g <= 120; ++g)
    expected.push_back(testsupport::naive_distance(11, g));
  std::atomic<bool> ok{true};
  std::vector<std::thread> pool;
  for (int w = 0; w < 8; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t g = w % 3; g <= 120; ++g) {
        if (dist_delta(oracle, g) != expected[static_cast<std::size_t>(g)])
          ok = false;
      }
    });
  }
  for (auto& th : pool) th.join();
  CHECK(ok);
}
