#include <gtest/gtest.h>

#include "skeintail/corpus.hpp"
#include "skeintail/tail.hpp"

namespace skein {
namespace {

HalfInteger h_formula(long long n, long long c, long long s_a, long long w) {
  return HalfInteger::from_twice(-n * n * c - 2 * n * s_a + w * (n * n + 2 * n));
}

TEST(Tail, HnFormula) {
  for (const auto& name : corpus::names()) {
    const Diagram d = corpus::diagram(name);
    for (int n = 1; n <= 5; ++n)
      EXPECT_EQ(h_n(d, n), h_formula(n, d.crossing_count(), all_a_graph(d).vertex_count, writhe(d))) << name;
  }
  EXPECT_EQ(h_n(corpus::diagram("unknot-kink-neg"), 3), HalfInteger::from_integer(-15));
}

TEST(Tail, HnIsALowerBound) {
  for (const auto& name : corpus::names()) {
    const Diagram d = corpus::diagram(name);
    for (int n = 1; n <= 2; ++n) {
      const auto j = colored_jones(d, n);
      EXPECT_GE(j.d_n, h_n(d, n)) << name << " n=" << n;
      if (is_a_adequate(d)) EXPECT_EQ(j.d_n, h_n(d, n)) << name << " n=" << n;
    }
  }
}

TEST(Tail, TrefoilStabilizes) {
  const TailReport r = stabilization_check(corpus::diagram("trefoil-std"), 4, 3);
  EXPECT_EQ(r.mode, "tail");
  EXPECT_TRUE(r.stabilization_ok);
  ASSERT_EQ(r.betas.size(), 3u);
  EXPECT_EQ(r.betas[0].value, 1);
  EXPECT_EQ(r.betas[1].value, 0);
  EXPECT_EQ(r.betas[2].value, -1);
  EXPECT_EQ(tail_truncation(r), LaurentPoly::from_terms({{0, 1}, {8, -1}}));
  EXPECT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) EXPECT_EQ(row.d_n, row.h_n);
}

TEST(Tail, AdequateCorpusStabilizes) {
  for (const auto& name : corpus::select(true)) {
    const int n_max = 4;
    const TailReport r = stabilization_check(corpus::diagram(name), n_max, std::min(n_max - 1, 3));
    EXPECT_TRUE(r.stabilization_ok) << name;
    EXPECT_TRUE(r.warnings.empty()) << name;
  }
}

TEST(Tail, FigureEightSignAlternates) {
  const TailReport r = stabilization_check(corpus::diagram("figure8-std"), 4, 3);
  EXPECT_TRUE(r.stabilization_ok);
  EXPECT_FALSE(r.betas[0].raw_stable);
  EXPECT_EQ(r.rows[0].lowest_sign, -r.rows[1].lowest_sign);
}

TEST(Tail, UnknotTailIsAllOnes) {
  const TailReport r = stabilization_check(corpus::diagram("unknot-0"), 5, 4);
  for (const auto& b : r.betas) EXPECT_EQ(b.value, 1);
  EXPECT_EQ(tail_truncation(corpus::diagram("unknot-0"), 4),
            LaurentPoly::from_terms({{0, 1}, {4, 1}, {8, 1}}));
}

TEST(Tail, WindowIsCapped) {
  const TailReport r = stabilization_check(corpus::diagram("trefoil-std"), 3, 5);
  EXPECT_EQ(r.window, 2);
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_THROW(stabilization_check(corpus::diagram("trefoil-std"), 1, 2), Error);
  EXPECT_THROW(stabilization_check(corpus::diagram("trefoil-std"), 3, 0), Error);
}

TEST(Tail, HeadModeIsTheMirrorTail) {
  for (const char* name : {"unknot-kink-neg", "trefoil-braid-r3a", "trefoil-braid-r3b"}) {
    const Diagram d = corpus::diagram(name);
    const TailReport head = stabilization_check(d, 3, 2);
    const TailReport tail = stabilization_check(mirror(d), 3, 2);
    EXPECT_EQ(head.mode, "head") << name;
    EXPECT_EQ(tail.mode, "tail") << name;
    ASSERT_EQ(head.rows.size(), tail.rows.size());
    for (std::size_t i = 0; i < head.rows.size(); ++i)
      EXPECT_EQ(head.rows[i].coefficients, tail.rows[i].coefficients) << name;
    EXPECT_TRUE(head.stabilization_ok) << name;
  }
}

TEST(Tail, NeitherAdequateWarns) {
  const TailReport r = stabilization_check(corpus::diagram("unlink-clasp"), 3, 2);
  EXPECT_EQ(r.mode, "tail");
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Tail, EvaluationLimitIsReported) {
  try {
    stabilization_check(corpus::diagram("trefoil-std"), 3, 2, TailOptions{4});
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EvaluationLimit);
  }
}

TEST(Gap, KinkValues) {
  const Diagram d = corpus::diagram("unknot-kink-neg");
  for (int n = 2; n <= 5; ++n) {
    const GapVerdict v = gap_check(d, n);
    EXPECT_EQ(v.d_n, HalfInteger::from_integer(-n));
    EXPECT_EQ(v.h_n, HalfInteger::from_integer(-n * n - 2 * n));
    EXPECT_EQ(v.gap, HalfInteger::from_integer(n * n + n));
    EXPECT_EQ(v.bound, HalfInteger::from_integer(2 * n - 2));
    EXPECT_TRUE(v.pass);
  }
}

TEST(Gap, NonAdequateCorpusPasses) {
  for (const auto& name : corpus::select(false))
    for (int n = 2; n <= 4; ++n) {
      const Diagram d = corpus::diagram(name);
      EXPECT_TRUE(gap_check(d, n).pass) << name << " n=" << n;
      EXPECT_TRUE(window_check(d, n).pass) << name << " n=" << n;
    }
}

TEST(Gap, AdequateCorpusIsSharp) {
  for (const auto& name : corpus::select(true))
    for (int n = 1; n <= 4; ++n) {
      const Diagram d = corpus::diagram(name);
      EXPECT_EQ(colored_jones(d, n).d_n, h_n(d, n)) << name << " n=" << n;
    }
}

TEST(Gap, Errors) {
  try {
    gap_check(corpus::diagram("trefoil-std"), 2);
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DiagramIsAdequate);
  }
  EXPECT_THROW(gap_check(corpus::diagram("unknot-kink-neg"), 1), Error);
  EXPECT_THROW(window_check(corpus::diagram("figure8-std"), 2), Error);
}

TEST(Window, ThresholdAndPass) {
  const WindowVerdict k = window_check(corpus::diagram("unknot-kink-neg"), 2);
  EXPECT_EQ(k.threshold, HalfInteger::from_twice(2 - 1 - 3));
  EXPECT_TRUE(k.pass);
  EXPECT_TRUE(k.violations.empty());
  const WindowVerdict c = window_check(corpus::diagram("unlink-clasp"), 3);
  EXPECT_EQ(c.threshold, HalfInteger::from_twice(3 - 2 - 6));
  EXPECT_TRUE(c.pass);
  EXPECT_GE(c.lowest, c.threshold);
}

}  // namespace
}  // namespace skein
