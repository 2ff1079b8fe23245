#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "toricqc/error.hpp"
#include "toricqc/lee.hpp"

using namespace toricqc;
using namespace toricqc::lee;

namespace {

oracle::Vec to_vec(const LatticeVector& v) { return oracle::Vec(v.coords().begin(), v.coords().end()); }

std::set<oracle::Vec> as_set(const LeeCode& code) {
  std::set<oracle::Vec> out;
  for (const auto& c : code.codewords()) out.insert(to_vec(c));
  return out;
}

std::vector<oracle::Vec> gens_of(int q, int n) {
  std::vector<oracle::Vec> out;
  for (const auto& g : certified_instance(q, n).generators) out.push_back(to_vec(g));
  return out;
}

}  // namespace

TEST_SUITE("lee") {
  TEST_CASE("symmetric residue and Mannheim weight") {
    CHECK(symmetric_residue(0, 7) == 0);
    CHECK(symmetric_residue(3, 7) == 3);
    CHECK(symmetric_residue(4, 7) == -3);
    CHECK(symmetric_residue(6, 7) == -1);
    CHECK(symmetric_residue(-1, 7) == -1);
    CHECK(symmetric_residue(14, 7) == 0);
    CHECK(symmetric_residue(5, 9) == -4);
    CHECK_THROWS_AS(symmetric_residue(1, 8), Error);
    CHECK_THROWS_AS(symmetric_residue(1, 1), Error);

    CHECK(mannheim_weight({0, 2, 1}, 7) == 3);
    CHECK(mannheim_weight({6, 6, 6}, 7) == 3);
    CHECK(mannheim_weight({0, 0, 0, 0}, 9) == 0);
    CHECK(mannheim_weight({4, 5, 0, 0}, 9) == 8);
  }

  TEST_CASE("weight zero iff the vector vanishes mod q") {
    for (Int a = -10; a <= 10; ++a)
      for (Int b = -10; b <= 10; ++b) {
        const LatticeVector v{a, b, 0};
        CHECK((mannheim_weight(v, 7) == 0) == (oracle::mod(a, 7) == 0 && oracle::mod(b, 7) == 0));
        CHECK(mannheim_weight(v, 7) == oracle::lee_weight(to_vec(v), 7));
      }
  }

  TEST_CASE("sphere sizes and order") {
    CHECK(lee_sphere(1).offsets.size() == 3);
    CHECK(lee_sphere(3).offsets.size() == 7);
    CHECK(lee_sphere(4).offsets.size() == 9);
    const auto s = lee_sphere(3);
    CHECK(s.offsets[0] == LatticeVector{0, 0, 0});
    CHECK(s.offsets[1] == LatticeVector{1, 0, 0});
    CHECK(s.offsets[2] == LatticeVector{-1, 0, 0});
    CHECK(s.offsets[5] == LatticeVector{0, 0, 1});
    CHECK(s.offsets[6] == LatticeVector{0, 0, -1});
  }

  TEST_CASE("certified codes match the brute-force span") {
    const LeeCode c3 = certified_code(7, 3);
    CHECK(c3.size() == 49);
    CHECK(as_set(c3) == oracle::brute_force_span(gens_of(7, 3), 7));
    CHECK(c3.is_codeword({0, 2, 1}));
    CHECK(c3.is_codeword({0, 0, 0}));
    CHECK_FALSE(c3.is_codeword({1, 0, 0}));
    CHECK(c3.codewords().front() == LatticeVector{0, 0, 0});

    const LeeCode c4 = certified_code(9, 4);
    CHECK(c4.size() == 729);
    CHECK(as_set(c4) == oracle::brute_force_span(gens_of(9, 4), 9));

    CHECK(certified_instance(7, 3).generators == std::vector<LatticeVector>{{0, 1, 4}, {1, 0, 2}});
    CHECK(certified_instance(9, 4).generators ==
          std::vector<LatticeVector>{{0, 0, 1, 6}, {0, 1, 1, 1}, {1, 0, 0, 2}});
    CHECK_THROWS_AS(certified_instance(5, 3), Error);
    CHECK_FALSE(is_certified(5, 3));
  }

  TEST_CASE("codeword index is the inverse of codeword point") {
    const LeeCode c = certified_code(7, 3);
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(c.codeword_index(c.codeword_point(i)) == static_cast<std::int64_t>(i));
      CHECK(c.torus().decode(c.codeword_point(i)) == c.codewords()[i]);
    }
  }

  TEST_CASE("degenerate generator sets") {
    const LeeCode zero = enumerate_codewords({{0, 0, 0}}, 7, 3);
    CHECK(zero.size() == 1);
    CHECK_THROWS_AS(minimum_distance(zero), Error);

    const LeeCode line = enumerate_codewords({{1, 0, 0}}, 7, 3);
    CHECK(line.size() == 7);
    CHECK(minimum_distance(line) == 1);

    CHECK_THROWS_AS(enumerate_codewords({{1, 0}}, 7, 3), Error);
  }

  TEST_CASE("minimum distance against all pairs") {
    for (auto [q, n] : {std::pair{7, 3}, std::pair{9, 4}}) {
      const LeeCode c = certified_code(q, n);
      const Int d = minimum_distance(c);
      CHECK(d == 3);
      CHECK(d == oracle::all_pairs_min_distance(as_set(c), q));
    }
    const LeeCode broken = enumerate_codewords({{1, 1, 0}, {0, 1, 1}}, 7, 3);
    CHECK(minimum_distance(broken) ==
          oracle::all_pairs_min_distance(oracle::brute_force_span({{1, 1, 0}, {0, 1, 1}}, 7), 7));
  }

  TEST_CASE("tiling") {
    for (auto [q, n] : {std::pair{7, 3}, std::pair{9, 4}}) {
      const LeeCode c = certified_code(q, n);
      CHECK(tiling_check(c));
      for (int cov : c.coverage()) CHECK(cov == 1);
    }
    const LeeCode broken = enumerate_codewords({{1, 1, 0}, {0, 1, 1}}, 7, 3);
    CHECK(broken.size() == 49);
    CHECK_FALSE(tiling_check(broken));
    int zero = 0, once = 0, many = 0;
    for (int cov : broken.coverage()) (cov == 0 ? zero : cov == 1 ? once : many)++;
    CHECK(zero > 0);
    CHECK(many > 0);
    CHECK(zero + once + many == 343);
  }

  TEST_CASE("decode every sphere point") {
    for (auto [q, n] : {std::pair{7, 3}, std::pair{9, 4}}) {
      const LeeCode c = certified_code(q, n);
      const auto sphere = lee_sphere(n);
      for (const auto& w : c.codewords())
        for (std::size_t j = 0; j < sphere.offsets.size(); ++j) {
          LatticeVector p(static_cast<std::size_t>(n));
          for (int k = 0; k < n; ++k) p[k] = w[k] + sphere.offsets[j][k];
          const DecodeResult r = decode_nearest(p, c);
          CHECK(r.codeword == w);
          CHECK(r.offset_index == static_cast<int>(j));
        }
    }
  }

  TEST_CASE("decoding agrees with brute-force nearest codeword") {
    const LeeCode c = certified_code(7, 3);
    const auto words = as_set(c);
    const DecodeResult r = decode_nearest({1, 1, 1}, c);
    const auto nearest = oracle::nearest_codewords(words, {1, 1, 1}, 7);
    REQUIRE(nearest.size() == 1);
    CHECK(to_vec(r.codeword) == nearest.front());
    CHECK(r.offset_index == 2);

    for (Torus::Index p = 0; p < c.torus().volume(); ++p) {
      const LatticeVector v = c.torus().decode(p);
      const auto near = oracle::nearest_codewords(words, to_vec(v), 7);
      REQUIRE(near.size() == 1);
      CHECK(to_vec(decode_nearest(v, c).codeword) == near.front());
    }

    const LeeCode broken = enumerate_codewords({{1, 1, 0}, {0, 1, 1}}, 7, 3);
    try {
      decode_nearest({1, 0, 0}, broken);
      FAIL("expected not_perfect");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_perfect);
    }
  }

  TEST_CASE("labels are distinct within every translated sphere") {
    for (auto [q, n] : {std::pair{7, 3}, std::pair{9, 4}}) {
      const LeeCode c = certified_code(q, n);
      const Torus& t = c.torus();
      for (Torus::Index a = 0; a < t.volume(); ++a) {
        std::set<int> labels{c.label_of(a)};
        for (int axis = 0; axis < n; ++axis) {
          labels.insert(c.label_of(t.shift(a, axis, 1)));
          labels.insert(c.label_of(t.shift(a, axis, -1)));
        }
        CHECK(labels.size() == static_cast<std::size_t>(2 * n + 1));
      }
    }
  }
}
