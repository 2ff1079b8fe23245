#include "toricqc/interleave.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "toricqc/error.hpp"

namespace toricqc::interleave {

InterleaverMap::InterleaverMap(const lee::LeeCode& code) : code_(code), complex_(code.q(), code.n()) {
  const Int codewords = static_cast<Int>(code_.size());
  const Int sections = 2 * code_.n() + 1;
  const Int volume = code_.torus().volume();
  const Int total = sections * alpha() * codewords;
  if (total != complex_.face_count()) throw Error(ErrorKind::internal, "logical and physical qubit counts differ");
  blocks_per_section_ = (codewords + q() - 1) / q();

  forward_.assign(static_cast<std::size_t>(total), -1);
  inverse_.assign(static_cast<std::size_t>(total), -1);
  for (int j = 0; j < sections; ++j) {
    for (Int i = 0; i < codewords; ++i) {
      Torus::Index h = code_.codeword_point(static_cast<std::size_t>(i));
      if (j > 0) h = code_.torus().shift(h, (j - 1) / 2, (j % 2 == 1) ? 1 : -1);
      for (int b = 0; b < alpha(); ++b) {
        const Int logical = logical_linear({j, b, i});
        const Int face = static_cast<Int>(b) * volume + h;
        if (inverse_[static_cast<std::size_t>(face)] >= 0) throw Error(ErrorKind::internal, "interleaver is not injective");
        forward_[static_cast<std::size_t>(logical)] = face;
        inverse_[static_cast<std::size_t>(face)] = logical;
      }
    }
  }
}

Int InterleaverMap::logical_linear(const LogicalIndex& x) const {
  const Int codewords = static_cast<Int>(code_.size());
  if (x.cross_section < 0 || x.cross_section > 2 * n() || x.block < 0 || x.block >= alpha() || x.codeword < 0 ||
      x.codeword >= codewords)
    throw Error(ErrorKind::invalid_argument, "logical index out of range");
  return (static_cast<Int>(x.cross_section) * alpha() + x.block) * codewords + x.codeword;
}

LogicalIndex InterleaverMap::logical_from_linear(Int k) const {
  const Int codewords = static_cast<Int>(code_.size());
  if (k < 0 || k >= size()) throw Error(ErrorKind::invalid_argument, "logical index out of range");
  const Int section_block = k / codewords;
  return {static_cast<int>(section_block / alpha()), static_cast<int>(section_block % alpha()), k % codewords};
}

Int InterleaverMap::face_of(const PhysicalSlot& p) const {
  if (p.slot < 0 || p.slot >= alpha() || p.hypercube < 0 || p.hypercube >= code_.torus().volume())
    throw Error(ErrorKind::invalid_argument, "physical slot out of range");
  return static_cast<Int>(p.slot) * code_.torus().volume() + p.hypercube;
}

PhysicalSlot InterleaverMap::slot_of(Int face) const {
  const toric::Face f = complex_.face(face);
  return {toric::face_owner(f), complex_.slot_of(f)};
}

PhysicalSlot InterleaverMap::forward(const LogicalIndex& x) const { return slot_of(forward_linear(logical_linear(x))); }

LogicalIndex InterleaverMap::inverse(const PhysicalSlot& p) const { return logical_from_linear(inverse_linear(face_of(p))); }

Int InterleaverMap::block_of_face(Int face) const {
  const LogicalIndex x = inverse(slot_of(face));
  return static_cast<Int>(x.cross_section) * blocks_per_section_ + x.codeword / q();
}

InterleaverMap build_interleaver(const lee::LeeCode& code) {
  if (!lee::tiling_check(code)) throw Error(ErrorKind::not_perfect, "interleaver needs a perfect code");
  return InterleaverMap(code);
}

int CorrectionVerdict::max_count() const {
  int best = 0;
  for (const auto& [key, count] : per_block_error_counts) best = std::max(best, count);
  return best;
}

CorrectionVerdict deinterleave(const InterleaverMap& map, std::span<const toric::Face> errored_faces) {
  std::vector<Int> faces;
  faces.reserve(errored_faces.size());
  for (const auto& f : errored_faces) faces.push_back(map.complex().face_index(f));
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  CorrectionVerdict verdict;
  for (Int face : faces) {
    const LogicalIndex x = map.inverse(map.slot_of(face));
    const int count = ++verdict.per_block_error_counts[{x.cross_section, x.codeword / map.q()}];
    if (count > 1) verdict.correctable = false;
  }
  return verdict;
}

std::vector<Torus::Index> all_burst_translates(int q, int n) {
  const Torus torus(q, n);
  std::vector<Torus::Index> anchors(static_cast<std::size_t>(torus.volume()));
  for (Torus::Index p = 0; p < torus.volume(); ++p) anchors[static_cast<std::size_t>(p)] = p;
  return anchors;
}

std::vector<Torus::Index> translate_cells(const Torus& torus, Torus::Index anchor) {
  std::vector<Torus::Index> cells{anchor};
  for (int axis = 0; axis < torus.n(); ++axis) {
    cells.push_back(torus.shift(anchor, axis, 1));
    cells.push_back(torus.shift(anchor, axis, -1));
  }
  return cells;
}

BurstPattern burst_from_choices(const toric::CellComplex& complex, Torus::Index anchor, std::span<const int> choices) {
  const auto cells = translate_cells(complex.torus(), anchor);
  if (choices.size() != cells.size()) throw Error(ErrorKind::dimension_mismatch, "one choice per translate hypercube is required");
  BurstPattern pattern{anchor, {}};
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (choices[k] < 0 || choices[k] > complex.slots_per_hypercube()) throw Error(ErrorKind::invalid_argument, "burst choice out of range");
    if (choices[k] == 0) continue;
    pattern.errors.push_back({cells[k], complex.orientations()[static_cast<std::size_t>(choices[k] - 1)]});
  }
  return pattern;
}

BurstEnumerator::BurstEnumerator(const toric::CellComplex& complex, Torus::Index anchor)
    : complex_(&complex), anchor_(anchor), choices_(static_cast<std::size_t>(2 * complex.n() + 1), 0) {
  if (anchor < 0 || anchor >= complex.torus().volume()) throw Error(ErrorKind::invalid_argument, "anchor out of range");
  total_ = detail::checked_pow(complex.slots_per_hypercube() + 1, static_cast<int>(choices_.size()));
}

bool BurstEnumerator::next(BurstPattern& out) {
  if (emitted_ == total_) return false;
  out = burst_from_choices(*complex_, anchor_, choices_);
  ++emitted_;
  for (auto& c : choices_) {
    if (++c <= complex_->slots_per_hypercube()) break;
    c = 0;
  }
  return true;
}

std::uint64_t SeededSampler::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::invalid_argument, "empty sampling range");
  // Accept draws below the largest multiple of bound.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::vector<BurstPattern> sample_bursts(const toric::CellComplex& complex, Torus::Index anchor, Int count,
                                        std::uint64_t seed) {
  if (count < 0) throw Error(ErrorKind::invalid_argument, "sample count must be non-negative");
  SeededSampler rng(seed);
  std::vector<int> choices(static_cast<std::size_t>(2 * complex.n() + 1));
  std::vector<BurstPattern> out;
  out.reserve(static_cast<std::size_t>(count));
  for (Int s = 0; s < count; ++s) {
    for (auto& c : choices) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(complex.slots_per_hypercube()) + 1));
    out.push_back(burst_from_choices(complex, anchor, choices));
  }
  return out;
}

namespace {

// Block ids of the faces a burst at one anchor can touch:
// table[k * alpha + s] = block of slot s on translate hypercube k.
std::vector<Int> anchor_block_table(const InterleaverMap& map, Torus::Index anchor) {
  const auto cells = translate_cells(map.code().torus(), anchor);
  std::vector<Int> table;
  table.reserve(cells.size() * static_cast<std::size_t>(map.alpha()));
  for (Torus::Index h : cells)
    for (int s = 0; s < map.alpha(); ++s) table.push_back(map.block_of_face(map.face_of({h, s})));
  return table;
}

struct Tally {
  Int checked = 0;
  Int failures = 0;
  int max_block_count = 0;

  void merge(const Tally& o) {
    checked += o.checked;
    failures += o.failures;
    max_block_count = std::max(max_block_count, o.max_block_count);
  }

  // `blocks` holds the block ids of one burst's errors.
  void record(const Int* blocks, std::size_t count) {
    int worst = count > 0 ? 1 : 0;
    for (std::size_t a = 0; a < count; ++a) {
      int same = 1;
      for (std::size_t b = a + 1; b < count; ++b)
        if (blocks[a] == blocks[b]) ++same;
      worst = std::max(worst, same);
    }
    ++checked;
    if (worst > 1) ++failures;
    max_block_count = std::max(max_block_count, worst);
  }
};

Tally sweep_anchor(const InterleaverMap& map, Torus::Index anchor) {
  const auto table = anchor_block_table(map, anchor);
  const int cells = 2 * map.n() + 1;
  const int alpha = map.alpha();
  std::vector<int> choice(static_cast<std::size_t>(cells), 0);
  std::vector<Int> blocks(static_cast<std::size_t>(cells));
  Tally tally;
  while (true) {
    std::size_t count = 0;
    for (int k = 0; k < cells; ++k)
      if (choice[k] > 0) blocks[count++] = table[static_cast<std::size_t>(k * alpha + choice[k] - 1)];
    tally.record(blocks.data(), count);

    int k = 0;
    for (; k < cells; ++k) {
      if (++choice[k] <= alpha) break;
      choice[k] = 0;
    }
    if (k == cells) break;
  }
  return tally;
}

Tally extremal_anchor(const InterleaverMap& map, Torus::Index anchor) {
  const auto table = anchor_block_table(map, anchor);
  const int cells = 2 * map.n() + 1;
  std::vector<Int> blocks(static_cast<std::size_t>(cells));
  Tally tally;
  for (int s = 0; s < map.alpha(); ++s) {
    for (int k = 0; k < cells; ++k) blocks[k] = table[static_cast<std::size_t>(k * map.alpha() + s)];
    tally.record(blocks.data(), blocks.size());
  }
  return tally;
}

template <typename PerAnchor>
Tally parallel_over_anchors(Int anchors, unsigned threads, PerAnchor per_anchor) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<Int>(threads, std::max<Int>(anchors, 1)));
  std::vector<Tally> partial(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (Int a = w; a < anchors; a += threads) partial[w].merge(per_anchor(a));
      });
    }
  }
  Tally total;
  for (const auto& t : partial) total.merge(t);
  return total;
}

}  // namespace

BurstSummary verify_burst_correction(const InterleaverMap& map, const BurstMode& mode, unsigned threads) {
  BurstSummary summary;
  summary.q = map.q();
  summary.n = map.n();
  const Int anchors = map.code().torus().volume();

  if (mode.kind == BurstMode::Kind::exhaustive) {
    summary.mode = "exhaustive";
    const Tally t = parallel_over_anchors(anchors, threads, [&](Int a) { return sweep_anchor(map, a); });
    summary.exhaustive = t.checked;
    summary.total_checked = t.checked;
    summary.failures = t.failures;
    summary.max_block_count = t.max_block_count;
    return summary;
  }

  if (mode.samples < 0) throw Error(ErrorKind::invalid_argument, "sample count must be non-negative");
  summary.mode = "sampled";
  summary.seed = mode.seed;
  summary.rng_algorithm = SeededSampler::kAlgorithm;

  Tally total = parallel_over_anchors(anchors, threads, [&](Int a) { return extremal_anchor(map, a); });
  summary.extremal = total.checked;

  // Single RNG stream so the sample set does not depend on the thread count.
  SeededSampler rng(mode.seed);
  const int cells = 2 * map.n() + 1;
  std::vector<Int> blocks(static_cast<std::size_t>(cells));
  Tally sampled;
  Torus::Index cached_anchor = -1;
  std::vector<Int> table;
  for (Int s = 0; s < mode.samples; ++s) {
    const auto anchor = static_cast<Torus::Index>(rng.below(static_cast<std::uint64_t>(anchors)));
    if (anchor != cached_anchor) {
      table = anchor_block_table(map, anchor);
      cached_anchor = anchor;
    }
    std::size_t count = 0;
    for (int k = 0; k < cells; ++k) {
      const auto choice = static_cast<int>(rng.below(static_cast<std::uint64_t>(map.alpha()) + 1));
      if (choice > 0) blocks[count++] = table[static_cast<std::size_t>(k * map.alpha() + choice - 1)];
    }
    sampled.record(blocks.data(), count);
  }
  summary.sampled = sampled.checked;
  total.merge(sampled);
  summary.total_checked = total.checked;
  summary.failures = total.failures;
  summary.max_block_count = total.max_block_count;
  return summary;
}

BurstSummary verify_burst_correction(int q, int n, const BurstMode& mode, unsigned threads) {
  if (!lee::is_certified(q, n)) throw Error(ErrorKind::not_certified, "not certified");
  return verify_burst_correction(build_interleaver(lee::certified_code(q, n)), mode, threads);
}

LooseBurstStatistics loose_burst_statistics(const InterleaverMap& map, Int samples, std::uint64_t seed) {
  SeededSampler rng(seed);
  const Int anchors = map.code().torus().volume();
  const auto subsets = std::uint64_t{1} << map.alpha();
  LooseBurstStatistics stats;
  std::vector<Int> blocks;
  Tally tally;
  for (Int s = 0; s < samples; ++s) {
    const auto anchor = static_cast<Torus::Index>(rng.below(static_cast<std::uint64_t>(anchors)));
    const auto table = anchor_block_table(map, anchor);
    blocks.clear();
    for (int k = 0; k < 2 * map.n() + 1; ++k) {
      const std::uint64_t mask = rng.below(subsets);
      for (int slot = 0; slot < map.alpha(); ++slot)
        if (mask & (std::uint64_t{1} << slot)) blocks.push_back(table[static_cast<std::size_t>(k * map.alpha() + slot)]);
    }
    tally.record(blocks.data(), blocks.size());
  }
  stats.checked = tally.checked;
  stats.uncorrectable = tally.failures;
  return stats;
}

toric::CodeParams interleaved_params(int q, int n) {
  if (!lee::is_certified(q, n)) throw Error(ErrorKind::not_certified, "not certified");
  const Int alpha = n == 3 ? 3 : 6;
  const Int volume = detail::checked_pow(q, n);
  toric::CodeParams p;
  p.length = alpha * volume;
  p.dimension = alpha * (volume / q);
  p.t = q;
  p.label = n == 3 ? "[[3q^3,3q^2,t_i=q]]" : "[[6q^4,6q^3,t_i=q]]";
  return p;
}

}  // namespace toricqc::interleave
