#include <random>
#include <set>

#include "doctest.h"
#include "toricqc/error.hpp"
#include "toricqc/interleave.hpp"

using namespace toricqc;
using namespace toricqc::interleave;

namespace {

const InterleaverMap& map3() {
  static const InterleaverMap m = build_interleaver(lee::certified_code(7, 3));
  return m;
}

const InterleaverMap& map4() {
  static const InterleaverMap m = build_interleaver(lee::certified_code(9, 4));
  return m;
}

}  // namespace

TEST_SUITE("interleave") {
  TEST_CASE("the map is a bijection onto the qubits") {
    for (const InterleaverMap* m : {&map3(), &map4()}) {
      CHECK(m->size() == m->complex().face_count());
      std::vector<char> hit(static_cast<std::size_t>(m->size()), 0);
      for (Int k = 0; k < m->size(); ++k) {
        const Int f = m->forward_linear(k);
        REQUIRE(f >= 0);
        REQUIRE(f < m->size());
        CHECK_FALSE(hit[static_cast<std::size_t>(f)]);
        hit[static_cast<std::size_t>(f)] = 1;
        CHECK(m->inverse_linear(f) == k);
        const LogicalIndex x = m->logical_from_linear(k);
        CHECK(m->logical_linear(x) == k);
        CHECK(m->inverse(m->forward(x)) == x);
      }
    }
    CHECK(map3().size() == 1029);
    CHECK(map4().size() == 39366);
  }

  TEST_CASE("forward places codeword i at c_i + o_j") {
    const InterleaverMap& m = map3();
    CHECK(m.forward({0, 0, 0}) == PhysicalSlot{0, 0});
    const Torus& t = m.code().torus();
    for (Int i = 0; i < static_cast<Int>(m.code().size()); ++i) {
      const Torus::Index c = m.code().codeword_point(static_cast<std::size_t>(i));
      CHECK(m.forward({0, 1, i}) == PhysicalSlot{c, 1});
      CHECK(m.forward({1, 0, i}) == PhysicalSlot{t.shift(c, 0, 1), 0});
      CHECK(m.forward({2, 2, i}) == PhysicalSlot{t.shift(c, 0, -1), 2});
      CHECK(m.forward({6, 0, i}) == PhysicalSlot{t.shift(c, 2, -1), 0});
    }
    CHECK_THROWS_AS(m.forward({7, 0, 0}), Error);
    CHECK_THROWS_AS(m.forward({0, 3, 0}), Error);
    CHECK_THROWS_AS(m.forward({0, 0, 49}), Error);
  }

  TEST_CASE("cross sections are homogeneous in the decode label") {
    for (const InterleaverMap* m : {&map3(), &map4()}) {
      for (Int f = 0; f < m->size(); ++f) {
        const PhysicalSlot p = m->slot_of(f);
        CHECK(m->inverse(p).cross_section == m->code().label_of(p.hypercube));
        CHECK(p.slot == m->inverse(p).block);
      }
    }
  }

  TEST_CASE("build refuses non-perfect codes") {
    const auto broken = lee::enumerate_codewords({{1, 1, 0}, {0, 1, 1}}, 7, 3);
    try {
      build_interleaver(broken);
      FAIL("expected not_perfect");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::not_perfect);
    }
  }

  TEST_CASE("deinterleave edge cases") {
    const InterleaverMap& m = map3();
    const auto& cx = m.complex();
    const std::vector<toric::Face> none;
    CHECK(deinterleave(m, none).correctable);
    CHECK(deinterleave(m, none).max_count() == 0);

    const std::vector<toric::Face> one{cx.face(17)};
    CHECK(deinterleave(m, one).correctable);
    CHECK(deinterleave(m, one).max_count() == 1);

    // The same face twice is one error.
    const std::vector<toric::Face> twice{cx.face(17), cx.face(17)};
    CHECK(deinterleave(m, twice).correctable);

    // Codewords 0 and 1 of section 0, slot 0 share block (0, 0).
    const std::vector<toric::Face> same_block{cx.face(m.forward_linear(m.logical_linear({0, 0, 0}))),
                                              cx.face(m.forward_linear(m.logical_linear({0, 0, 1})))};
    const auto v = deinterleave(m, same_block);
    CHECK_FALSE(v.correctable);
    CHECK(v.max_count() == 2);

    // Different sections never collide.
    const std::vector<toric::Face> split{cx.face(m.forward_linear(m.logical_linear({0, 0, 0}))),
                                         cx.face(m.forward_linear(m.logical_linear({1, 0, 0})))};
    CHECK(deinterleave(m, split).correctable);
  }

  TEST_CASE("burst enumeration") {
    const toric::CellComplex c(7, 3);
    BurstEnumerator e(c, 0);
    CHECK(e.total() == 16384);
    Int count = 0;
    BurstPattern p;
    std::set<std::vector<Int>> distinct;
    while (e.next(p)) {
      ++count;
      std::vector<Int> key;
      for (const auto& f : p.errors) key.push_back(c.face_index(f));
      distinct.insert(key);
    }
    CHECK(count == 16384);
    CHECK(distinct.size() == 16384);
    CHECK(BurstEnumerator(toric::CellComplex(9, 4), 0).total() == 7LL * 7 * 7 * 7 * 7 * 7 * 7 * 7 * 7);
    CHECK_THROWS_AS(BurstEnumerator(c, 343), Error);
  }

  TEST_CASE("sampling is reproducible") {
    const toric::CellComplex c(9, 4);
    const auto a = sample_bursts(c, 100, 50, 42);
    const auto b = sample_bursts(c, 100, 50, 42);
    const auto d = sample_bursts(c, 100, 50, 43);
    REQUIRE(a.size() == 50);
    bool differs = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].errors == b[k].errors);
      if (!(a[k].errors == d[k].errors)) differs = true;
    }
    CHECK(differs);

    SeededSampler s1(7), s2(7);
    for (int k = 0; k < 1000; ++k) {
      const auto x = s1.below(13);
      CHECK(x < 13);
      CHECK(x == s2.below(13));
    }
    CHECK_THROWS_AS(s1.below(0), Error);
  }

  TEST_CASE("the worst-case 3D burst is correctable") {
    const InterleaverMap& m = map3();
    for (int slot = 1; slot <= m.alpha(); ++slot) {
      const std::vector<int> choices(7, slot);
      const auto p = burst_from_choices(m.complex(), 123, choices);
      CHECK(p.errors.size() == 7);
      const auto v = deinterleave(m, p.errors);
      CHECK(v.correctable);
      CHECK(v.max_count() == 1);
    }
    CHECK_THROWS_AS(burst_from_choices(m.complex(), 0, std::vector<int>(6, 0)), Error);
    CHECK_THROWS_AS(burst_from_choices(m.complex(), 0, std::vector<int>(7, 4)), Error);
  }

  TEST_CASE("removing errors never breaks correctability") {
    const InterleaverMap& m = map4();
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<Int> face(0, m.size() - 1);
    std::uniform_int_distribution<int> len(1, 6);
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<toric::Face> big;
      for (int k = len(rng); k > 0; --k) big.push_back(m.complex().face(face(rng)));
      std::vector<toric::Face> small(big.begin(), big.begin() + static_cast<long>(big.size() / 2));
      if (deinterleave(m, big).correctable) CHECK(deinterleave(m, small).correctable);
      CHECK(deinterleave(m, small).max_count() <= deinterleave(m, big).max_count());
    }
  }

  TEST_CASE("small verification runs") {
    const auto ex = verify_burst_correction(7, 3, BurstMode::exhaustive(), 1);
    CHECK(ex.total_checked == 5619712);
    CHECK(ex.failures == 0);
    CHECK(ex.max_block_count == 1);
    CHECK(ex.passed());

    const auto s1 = verify_burst_correction(9, 4, BurstMode::sampled(2000, 5), 1);
    const auto s2 = verify_burst_correction(9, 4, BurstMode::sampled(2000, 5), 2);
    CHECK(s1.sampled == 2000);
    CHECK(s1.extremal == 6561 * 6);
    CHECK(s1.failures == 0);
    CHECK(s1.rng_algorithm == SeededSampler::kAlgorithm);
    CHECK(s1.total_checked == s2.total_checked);
    CHECK(s1.max_block_count == s2.max_block_count);

    const auto loose = loose_burst_statistics(map3(), 500, 1);
    CHECK(loose.checked == 500);
    CHECK(loose.uncorrectable <= loose.checked);
  }

  TEST_CASE("interleaved parameters") {
    const auto p3 = interleaved_params(7, 3);
    CHECK(p3.length == 1029);
    CHECK(p3.dimension == 147);
    CHECK(p3.t == 7);
    CHECK_FALSE(p3.distance.has_value());
    const auto p4 = interleaved_params(9, 4);
    CHECK(p4.length == 39366);
    CHECK(p4.dimension == 4374);
    CHECK(p4.t == 9);
    CHECK_THROWS_AS(interleaved_params(5, 3), Error);
  }
}
