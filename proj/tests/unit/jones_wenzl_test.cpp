#include <gtest/gtest.h>

#include <future>
#include <optional>

#include "skeintail/jones_wenzl.hpp"

namespace skein {
namespace {

const RationalFn kOne(LaurentPoly::constant(1));

TLElement basis_element(int n, const Matching& m) {
  TLElement x(n);
  x.add(m, kOne);
  return x;
}

TLElement pad_right(TLElement x, int n) {
  while (x.n() < n) x = tensor_identity(x);
  return x;
}

// Solves e_i P = P e_i = 0 with identity coefficient 1 by Gaussian
// elimination over the fraction field. Returns nothing when the solution
// is not unique.
std::optional<TLElement> solve_projector(int n) {
  const auto basis = tl_basis(n);
  const Matching id = tl_identity_matching(n);
  std::vector<Matching> unknowns;
  for (const auto& m : basis)
    if (m != id) unknowns.push_back(m);
  const std::size_t u = unknowns.size();

  // rows: [a_1 .. a_u | rhs], where the identity term moves to the right
  std::vector<std::vector<RationalFn>> rows;
  for (int i = 1; i < n; ++i) {
    const TLElement e = tl_generator(n, i);
    for (bool left : {true, false}) {
      auto image = [&](const Matching& m) {
        return left ? tl_multiply(e, basis_element(n, m)) : tl_multiply(basis_element(n, m), e);
      };
      std::vector<TLElement> images;
      for (const auto& m : unknowns) images.push_back(image(m));
      const TLElement id_image = image(id);
      for (const auto& target : basis) {
        std::vector<RationalFn> row;
        bool nonzero = false;
        for (const auto& img : images) {
          row.push_back(img.coefficient(target));
          nonzero = nonzero || !row.back().is_zero();
        }
        row.push_back(-id_image.coefficient(target));
        if (nonzero || !row.back().is_zero()) rows.push_back(row);
      }
    }
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < u && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const RationalFn inv = rows[rank][col].inverse();
    for (auto& x : rows[rank]) x = x * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const RationalFn f = rows[r][col];
      for (std::size_t k = col; k <= u; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  if (rank != u) return std::nullopt;
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (!rows[r][u].is_zero()) return std::nullopt;  // inconsistent

  TLElement p(n);
  p.add(id, kOne);
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t col = 0;
    while (rows[r][col].is_zero()) ++col;
    p.add(unknowns[col], rows[r][u]);
  }
  return p;
}

TEST(QuantumInteger, SmallValues) {
  EXPECT_EQ(quantum_integer(0), LaurentPoly::constant(1));
  EXPECT_EQ(quantum_integer(1), LaurentPoly::from_terms({{-2, 1}, {2, 1}}));
  EXPECT_EQ(quantum_integer(2), LaurentPoly::from_terms({{-4, 1}, {0, 1}, {4, 1}}));
  EXPECT_THROW(quantum_integer(-1), Error);
}

TEST(QuantumInteger, ClosedFormQuotient) {
  // (q^{-(n+1)} - q^{n+1}) / (q^{-1} - q), q = v^2
  for (int n = 0; n <= 10; ++n) {
    const LaurentPoly num = LaurentPoly::from_terms({{-2 * (n + 1), 1}, {2 * (n + 1), -1}});
    const LaurentPoly den = LaurentPoly::from_terms({{-2, 1}, {2, -1}});
    EXPECT_EQ(RationalFn(num, den), RationalFn(quantum_integer(n)));
  }
}

TEST(QuantumInteger, ClosuresSatisfyChebyshevRecursion) {
  EXPECT_EQ(projector_closure(0), LaurentPoly::constant(1));
  EXPECT_EQ(projector_closure(1), delta());
  for (int k = 1; k < 10; ++k)
    EXPECT_EQ(projector_closure(k + 1), delta() * projector_closure(k) - projector_closure(k - 1));
}

TEST(JonesWenzl, WidthOneAndTwo) {
  EXPECT_EQ(jw(1), tl_identity(1));
  // jw(2) = 1 - e_1 / delta
  const TLElement want = tl_identity(2) - tl_generator(2, 1) * RationalFn(LaurentPoly::constant(1), delta());
  EXPECT_EQ(jw(2), want);
}

TEST(JonesWenzl, MatchesLinearSolveUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    const auto solved = solve_projector(n);
    ASSERT_TRUE(solved.has_value()) << "not unique at n = " << n;
    EXPECT_EQ(*solved, jw(n)) << "n = " << n;
  }
}

TEST(JonesWenzl, VerifyReportsAllProperties) {
  for (int n = 1; n <= 5; ++n) {
    const JWReport r = verify_jw(n);
    EXPECT_TRUE(r.all_passed()) << "n = " << n;
    EXPECT_EQ(r.annihilated.size(), static_cast<std::size_t>(n - 1));
    EXPECT_EQ(r.closure, RationalFn(projector_closure(n)));
    for (int i = 1; i < n; ++i) EXPECT_TRUE(cap_kills_projector(n, i));
  }
  EXPECT_THROW(cap_kills_projector(3, 0), Error);
  EXPECT_THROW(cap_kills_projector(3, 3), Error);
}

TEST(JonesWenzl, Absorption) {
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      const TLElement small = pad_right(jw(k), n);
      EXPECT_EQ(tl_multiply(small, jw(n)), jw(n)) << "k=" << k << " n=" << n;
      EXPECT_EQ(tl_multiply(jw(n), small), jw(n));
    }
}

TEST(JonesWenzl, SupportIsFullBasis) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(jw(n).terms().size(), tl_basis(n).size());
}

TEST(JonesWenzl, CacheAgreesWithFreshComputation) {
  for (int n = 1; n <= 6; ++n) {
    const auto cached = scaled_jw(n);
    const ScaledProjector fresh = scaled_jw_fresh(n);
    EXPECT_EQ(cached->terms, fresh.terms);
    EXPECT_EQ(cached->denominator, fresh.denominator);
    EXPECT_EQ(scaled_jw(n).get(), cached.get());
  }
}

TEST(JonesWenzl, ConcurrentCacheAccess) {
  std::vector<std::future<std::shared_ptr<const ScaledProjector>>> jobs;
  for (int t = 0; t < 8; ++t) jobs.push_back(std::async(std::launch::async, [] { return scaled_jw(7); }));
  const auto first = jobs.front().get();
  for (std::size_t t = 1; t < jobs.size(); ++t) EXPECT_EQ(jobs[t].get()->terms, first->terms);
}

TEST(JonesWenzl, WidthLimits) {
  EXPECT_THROW(scaled_jw(0), Error);
  EXPECT_THROW(scaled_jw(kMaxProjectorWidth + 1), Error);
}

}  // namespace
}  // namespace skein
