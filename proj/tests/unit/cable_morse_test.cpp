#include <gtest/gtest.h>

#include "braid.hpp"
#include "skeintail/corpus.hpp"
#include "skeintail/states.hpp"
#include "skeintail/transfer.hpp"

namespace skein {
namespace {

std::vector<Matching> identities(const CabledDiagram& cd) {
  return std::vector<Matching>(cd.projectors().size(), tl_identity_matching(cd.width()));
}

TEST(Cable, Counts) {
  for (const auto& name : corpus::names()) {
    const Diagram d = corpus::diagram(name);
    for (int n = 1; n <= 3; ++n) {
      const CabledDiagram cd = cable(d, n);
      EXPECT_EQ(static_cast<int>(cd.crossings().size()), n * n * d.crossing_count()) << name;
      EXPECT_EQ(static_cast<int>(cd.projectors().size()), d.component_count()) << name;
      for (const auto& p : cd.projectors()) EXPECT_EQ(p.width, n);
      EXPECT_TRUE(cd.loop_set().empty());
    }
  }
  EXPECT_THROW(cable(corpus::diagram("trefoil-std"), 0), Error);
}

TEST(Cable, LoopCrossingMarksItsGrid) {
  const CabledDiagram cd = cable(corpus::diagram("unknot-kink-neg"), 3, 0);
  EXPECT_EQ(cd.loop_set().size(), 9u);
  EXPECT_EQ(cd.loop_crossing(), 0);
  EXPECT_THROW(cable(corpus::diagram("unknot-kink-neg"), 2, 1), Error);
}

TEST(Cable, IdentityExpansionIsTheParallelCable) {
  for (const auto& name : corpus::names()) {
    const Diagram d = corpus::diagram(name);
    for (int n = 1; n <= 3; ++n) {
      const CabledDiagram cd = cable(d, n);
      const Diagram p = expand_cable(cd, identities(cd));
      EXPECT_EQ(p.crossing_count(), n * n * d.crossing_count()) << name;
      EXPECT_EQ(p.component_count(), n * d.component_count()) << name;
      // parallel copies keep the sign of the crossing they came from
      EXPECT_EQ(writhe(p), n * n * writhe(d)) << name;
    }
  }
}

TEST(Cable, ParallelCableOfUnknotIsUnlink) {
  const CabledDiagram cd = cable(corpus::diagram("unknot-0"), 3);
  const Diagram p = expand_cable(cd, identities(cd));
  EXPECT_EQ(p.free_circles(), 3);
  EXPECT_EQ(bracket_oracle(p), delta().pow(3));
}

TEST(Cable, CapCupTermOnKinkCableIsAnUnknot) {
  // Joining the two copies at the projector leaves one circle, so the
  // bracket is a framing monomial times delta.
  const CabledDiagram cd = cable(corpus::diagram("unknot-kink-pos"), 2);
  const Diagram e = expand_cable(cd, {tl_generator_matching(2, 1)});
  EXPECT_EQ(e.crossing_count(), 4);
  EXPECT_EQ(e.component_count(), 1);
  const auto q = exact_quotient(bracket_oracle(e), delta());
  ASSERT_TRUE(q.has_value());
  EXPECT_TRUE(q->is_unit_monomial());
  EXPECT_THROW(expand_cable(cd, {}), Error);
  EXPECT_THROW(expand_cable(cd, {tl_identity_matching(3)}), Error);
}

TEST(Morse, HandWordsValidate) {
  EXPECT_NO_THROW(MorseWord({Slice::cup(0), Slice::cap(0)}));
  EXPECT_THROW(MorseWord({Slice::cup(1)}), Error);
  EXPECT_THROW(MorseWord({Slice::cup(0)}), Error);
  EXPECT_THROW(MorseWord({Slice::cap(0)}), Error);
  EXPECT_THROW(MorseWord({Slice::cup(0), Slice::crossing(1, true), Slice::cap(0)}), Error);
  EXPECT_THROW(MorseWord({Slice::cup(0), Slice::projector(0, 3), Slice::cap(0)}), Error);
  const MorseWord w({Slice::cup(0), Slice::cup(1), Slice::crossing(0, true), Slice::cap(2), Slice::cap(0)});
  EXPECT_EQ(w.peak_width(), 4);
  EXPECT_EQ(w.widths(), (std::vector<int>{2, 4, 4, 2, 0}));
  EXPECT_EQ(w.count(SliceKind::Cup), 2);
}

TEST(Morse, CorpusWordsHaveTheRightSlices) {
  for (const auto& name : corpus::names()) {
    const Diagram d = corpus::diagram(name);
    for (int n = 1; n <= 3; ++n) {
      const MorseWord w = morseize(cable(d, n));
      EXPECT_EQ(w.count(SliceKind::Crossing), n * n * d.crossing_count()) << name;
      EXPECT_EQ(w.count(SliceKind::Projector), d.component_count()) << name;
      EXPECT_EQ(w.count(SliceKind::Cup), w.count(SliceKind::Cap)) << name;
      for (int width : w.widths()) EXPECT_EQ(width % 2, 0);
      for (const auto& s : w.slices())
        if (s.kind == SliceKind::Projector) EXPECT_EQ(s.width, n);
    }
  }
}

TEST(Morse, PeakWidthGrowsWithColor) {
  const Diagram d = corpus::diagram("trefoil-std");
  int last = 0;
  for (int n = 1; n <= 4; ++n) {
    const int peak = morseize(cable(d, n)).peak_width();
    EXPECT_GT(peak, last);
    EXPECT_EQ(peak % (2 * n), 0);
    last = peak;
  }
}

TEST(Morse, BraidClosuresMorseize) {
  for (const auto& word : std::vector<std::vector<int>>{{1, 1, 1}, {1, -2, 1, -2}, {1, 2, 3, -1, 2}, {1, -1}}) {
    const int strands = 1 + std::abs(*std::max_element(word.begin(), word.end(), [](int a, int b) {
                          return std::abs(a) < std::abs(b);
                        }));
    const Diagram d = testing::braid_closure(strands, word);
    const MorseWord w = morseize(cable(d, 1));
    EXPECT_EQ(w.count(SliceKind::Crossing), d.crossing_count());
  }
}

}  // namespace
}  // namespace skein
