#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "schub/motivic.hpp"

using namespace schub;

static std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

TEST_CASE("R-matrix entries: unitarity and specializations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3; trial++) {
    mpq_class q = random_rational(rng);
    mpq_class zp = random_rational(rng), zpp = random_rational(rng);
    if (q == 1 || zp == zpp) {
      trial--;
      continue;
    }
    for (int i = 0; i < 2; i++)
      for (int j = 0; j < 2; j++)
        for (int m = 0; m < 2; m++)
          for (int l = 0; l < 2; l++) {
            mpq_class s(0);
            for (int x = 0; x < 2; x++)
              for (int y = 0; y < 2; y++)
                s += typeA_rmatrix_entry(i, j, x, y, zpp, zp, q) *
                     typeA_rmatrix_entry(x, y, m, l, zp, zpp, q);
            REQUIRE(s == ((i == m && j == l) ? 1 : 0));
          }
    // Equal spectral parameters: the R-matrix degenerates to the identity.
    REQUIRE(typeA_rmatrix_entry(0, 1, 1, 0, zp, zp, q) == 0);
    REQUIRE(typeA_rmatrix_entry(1, 0, 1, 0, zp, zp, q) == 1);
    REQUIRE(typeA_rmatrix_entry(0, 1, 0, 1, zp, zp, q) == 1);
  }
  REQUIRE_THROWS_AS(typeA_rmatrix_entry(0, 1, 0, 1, mpq_class(0), mpq_class(1), mpq_class(2)),
                    sepdesc::PoleHit);
  // q^2 z''/z' = 1 is a pole of the normalized table.
  REQUIRE_THROWS_AS(
      typeA_rmatrix_entry(0, 1, 0, 1, mpq_class(4), mpq_class(1), mpq_class(2)),
      sepdesc::PoleHit);
}

TEST_CASE("restriction operators: delta at the identity") {
  std::mt19937_64 rng(12);
  mpq_class q(3, 7);
  std::vector<mpq_class> z{mpq_class(2), mpq_class(5, 3), mpq_class(7, 2), mpq_class(1, 4)};
  Perm id(std::vector<int>{1, 2, 3, 4});
  std::vector<std::vector<int>> strings{
      {0, 1, 2, 3}, {1, 0, 2, 3}, {0, 0, 1, 1}, {1, 1, 0, 0}, {2, 1, 2, 1}};
  for (auto& s : strings) {
    bool sorted = std::is_sorted(s.begin(), s.end());
    REQUIRE(segre_restriction(s, id, q, z) == (sorted ? 1 : 0));
  }
}

TEST_CASE("restriction operators: reduced-word independence") {
  mpq_class q(2, 5);
  std::vector<mpq_class> z{mpq_class(3), mpq_class(4, 3), mpq_class(9, 2)};
  for (auto& ranks : std::vector<std::vector<int>>{{2, 1, 0}, {1, 0, 1}, {0, 2, 1}, {2, 0, 2}}) {
    REQUIRE(detail::segre_word(ranks, {1, 2, 1}, q, z) ==
            detail::segre_word(ranks, {2, 1, 2}, q, z));
  }
}

TEST_CASE("restriction operators: left coset invariance on repeated content") {
  mpq_class q(3, 5);
  std::vector<mpq_class> z{mpq_class(2), mpq_class(5, 3), mpq_class(7, 2)};
  // sort(ranks) = (0,1,1); its stabilizer is generated by s2.
  std::vector<int> ranks{1, 0, 1};
  Perm s2(std::vector<int>{1, 3, 2});
  for (const Perm& sigma : all_perms(3))
    REQUIRE(segre_restriction(ranks, s2 * sigma, q, z) ==
            segre_restriction(ranks, sigma, q, z));
}

TEST_CASE("generic puzzle identity: exhaustive over blank-balanced boundaries") {
  std::mt19937_64 rng(20260816);
  long cases = 0;
  for (int n = 1; n <= 3; n++) {
    auto perms = all_perms(n);
    for (int d = 0; d <= 2; d++)
      for (int k = 0; k <= d; k++) {
        std::vector<int> a1{BLANK}, a2{BLANK};
        for (int x = k + 1; x <= d; x++) a1.push_back(x);
        for (int x = 0; x <= k; x++) a2.push_back(x);
        long nl = 1, nm = 1;
        for (int i = 0; i < n; i++) nl *= (long)a1.size(), nm *= (long)a2.size();
        for (long cl = 0; cl < nl; cl++) {
          std::vector<int> lam(n);
          long t = cl;
          int bl = 0;
          for (int i = 0; i < n; i++, t /= a1.size()) {
            lam[i] = a1[t % a1.size()];
            bl += lam[i] == BLANK;
          }
          for (long cm = 0; cm < nm; cm++) {
            std::vector<int> mu(n);
            long u = cm;
            int bm = 0;
            for (int i = 0; i < n; i++, u /= a2.size()) {
              mu[i] = a2[u % a2.size()];
              bm += mu[i] == BLANK;
            }
            if (bl + bm != n) continue;
            for (const Perm& sigma : perms) {
              cases++;
              REQUIRE(verify_puzzle_identity(lam, mu, k, d, sigma, 3, rng));
            }
          }
        }
      }
  }
  REQUIRE(cases == 1198);
}

TEST_CASE("generic puzzle identity: content-violating boundaries admit no puzzles") {
  mpq_class q(3, 5);
  // One blank on each side of a size-1 triangle: two blanks where balance
  // needs one. The restriction product is 1 at the identity, so the identity
  // itself is out of scope here; what must hold is the absence of puzzles.
  sepdesc::GenericEq cat({0, 1}, 1, q, {mpq_class(2)});
  int count = 0;
  enumerate_puzzles(cat, 1, std::vector<int>{1}, std::vector<int>{1},
                    [&](const Puzzle<mpq_class>&) { count++; });
  REQUIRE(count == 0);
  Perm id1(std::vector<int>{1});
  std::vector<mpq_class> z1{mpq_class(2)};
  REQUIRE(segre_restriction({0}, id1, q, z1) * segre_restriction({1}, id1, q, z1) == 1);
}

TEST_CASE("Euler characteristics: separated worked example") {
  auto r = euler_characteristic("_2_2", "10__", "2120", Rule::SepDesc);
  REQUIRE(r.puzzles == 3);
  REQUIRE(r.dim_y == 2);
  REQUIRE(r.chi == 3);
  // The reversed bottom admits no puzzles at all.
  auto rev = euler_characteristic("_2_2", "10__", "0212", Rule::SepDesc);
  REQUIRE(rev.puzzles == 0);
  REQUIRE(rev.chi == 0);
}

TEST_CASE("Euler characteristics: almost-separated worked example") {
  auto r = euler_characteristic("10_2_", "_423_", "^3,^4,v1,odd,v0", Rule::AlmostSep);
  REQUIRE(r.puzzles == 3);
  REQUIRE(r.dim_y == 1);
  REQUIRE(r.chi == -3);
  auto rev = euler_characteristic("10_2_", "_423_", "v0,odd,v1,^4,^3", Rule::AlmostSep);
  REQUIRE(rev.puzzles == 0);
  REQUIRE(rev.chi == 0);
}

TEST_CASE("Euler characteristics: empty and invalid inputs") {
  // No puzzles with this bottom: count 0, chi 0.
  auto none = euler_characteristic("_2_2", "10__", "0122", Rule::SepDesc);
  REQUIRE(none.puzzles == 0);
  REQUIRE(none.chi == 0);
  REQUIRE_THROWS_AS(euler_characteristic("__", "__", "00", Rule::SepDesc),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(euler_characteristic("2_", "0_", "v0,^1", Rule::AlmostSep),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(euler_characteristic("_2_2", "10__", "2120", Rule::Auto),
                    std::invalid_argument);
}

TEST_CASE("Euler characteristics match direct sign-count over small products") {
  // Unique-puzzle boundaries: one puzzle, Y is a point or a product of cells
  // whose chi is (-1)^{dim Y}.
  auto r = euler_characteristic("__12", "00__", "0012", Rule::SepDesc);
  REQUIRE(r.puzzles == 1);
  REQUIRE(r.dim_y == 0);
  REQUIRE(r.chi == 1);
}
