#include <algorithm>
#include <set>

#include "doctest.h"
#include "jetvar/errors.hpp"
#include "jetvar/mindex.hpp"
#include "support.hpp"

using namespace jetvar;

namespace {

MultiIndex mi(int n, std::vector<int> e) { return MultiIndex(n, std::move(e)); }

}  // namespace

TEST_CASE("concat merges sorted") {
  CHECK(concat(mi(2, {1, 2}), mi(2, {1})) == mi(2, {1, 1, 2}));
  CHECK(concat(MultiIndex(3), mi(3, {3, 1})) == mi(3, {1, 3}));
  CHECK(concat(mi(2, {2}), mi(2, {1, 1})).entries() == std::vector<int>{1, 1, 2});
  CHECK_THROWS_AS(concat(mi(2, {1}), mi(3, {1})), PreconditionError);
}

TEST_CASE("removeOne") {
  CHECK(removeOne(mi(2, {1, 1, 2}), 1) == mi(2, {1, 2}));
  CHECK(removeOne(mi(2, {2}), 2).empty());
  CHECK_THROWS_AS(removeOne(mi(3, {1, 2}), 3), PreconditionError);
}

TEST_CASE("entries outside 1..n are rejected") {
  CHECK_THROWS_AS(mi(2, {3}), PreconditionError);
  CHECK_THROWS_AS(mi(2, {0}), PreconditionError);
}

TEST_CASE("text form") {
  CHECK(mi(2, {2, 1, 1}).str() == "[112]");
  CHECK(MultiIndex(2).str() == "[]");
  CHECK(MultiIndex::parse("[211]", 2) == mi(2, {1, 1, 2}));
  CHECK_THROWS(MultiIndex::parse("[13]", 2));
  CHECK_THROWS(MultiIndex::parse("12", 2));
}

TEST_CASE("multiplicity sums to length") {
  auto a = mi(3, {1, 1, 3, 3, 3});
  CHECK(a.multiplicity(1) == 2);
  CHECK(a.multiplicity(2) == 0);
  CHECK(a.multiplicity(1) + a.multiplicity(2) + a.multiplicity(3) == a.length());
}

TEST_CASE("orderedTupleCount examples") {
  CHECK(orderedTupleCount(mi(2, {1, 2})) == 2);
  CHECK(orderedTupleCount(mi(2, {1, 1})) == 1);
  CHECK(orderedTupleCount(mi(2, {1, 1, 2})) == 3);
  CHECK(orderedTupleCount(MultiIndex(2)) == 1);
}

TEST_CASE("orderedTupleCount matches brute-force orderings") {
  for (int n = 1; n <= 3; ++n)
    for (int len = 0; len <= 4; ++len)
      for (const auto& a : multiIndicesOfLength(n, len)) {
        std::vector<int> v = a.entries();
        std::set<std::vector<int>> seen;
        do seen.insert(v);
        while (std::next_permutation(v.begin(), v.end()));
        CHECK(orderedTupleCount(a) == seen.size());
        // every ordered tuple of length len lands on exactly one multiset
        std::size_t hits = 0;
        for (const auto& t : allTuples(n, len))
          if (MultiIndex(n, t) == a) ++hits;
        CHECK(hits == seen.size());
      }
}

TEST_CASE("multi-index enumeration counts") {
  CHECK(multiIndicesOfLength(2, 3).size() == 4);
  CHECK(multiIndicesOfLength(3, 2).size() == 6);
  CHECK(multiIndicesUpTo(2, 2).size() == 6);
  CHECK(allTuples(2, 3).size() == 8);
  CHECK(allTuples(3, 0).size() == 1);
}

TEST_CASE("leviCivita") {
  CHECK(leviCivita({1, 2}) == 1);
  CHECK(leviCivita({2, 1}) == -1);
  CHECK(leviCivita({1, 1}) == 0);
  CHECK(leviCivita({2, 3, 1}) == 1);
  CHECK(leviCivita({3, 2, 1}) == -1);
}

TEST_CASE("epsilon identity over all (n+1)-tuples") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& t : allTuples(n, n + 1)) {
      int sum = 0;
      for (int p = 0; p <= n; ++p) {
        std::vector<int> w;
        for (int q = 0; q <= n; ++q)
          if (q != p) w.push_back(t[q]);
        sum += ((p % 2) ? -1 : 1) * leviCivita(w);
      }
      CHECK(sum == 0);
    }
}

TEST_CASE("set partitions are counted by Bell numbers") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52};
  for (int m = 0; m <= 5; ++m) CHECK(setPartitions(m).size() == bell[m]);
  // each partition covers every element exactly once
  for (const auto& part : setPartitions(4)) {
    std::vector<int> all;
    for (const auto& block : part) all.insert(all.end(), block.begin(), block.end());
    std::sort(all.begin(), all.end());
    CHECK(all == std::vector<int>{0, 1, 2, 3});
  }
}

TEST_CASE("antisymmetrizer on a two-index array") {
  IndexedArray f(2, 2);
  f.at({1, 2}) = 1;
  auto g = symmetrize(f, Sym::Minus);
  CHECK(g.at({1, 2}) == Rational(1, 2));
  CHECK(g.at({2, 1}) == Rational(-1, 2));
  CHECK(g.at({1, 1}) == 0);
}

TEST_CASE("symmetrizers are projectors") {
  testsupport::Rng rng(3);
  IndexedArray f(3, 3);
  for (auto& v : f.data) v = rng.coeff();
  // direct expansion of S^- over the 6 permutations
  IndexedArray ref(3, 3);
  const std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& idx : allTuples(3, 3)) {
    Rational acc = 0;
    for (const auto& P : perms) {
      std::vector<int> moved = {idx[P[0]], idx[P[1]], idx[P[2]]};
      acc += permutationSign({P[0] + 1, P[1] + 1, P[2] + 1}) * f.at(moved);
    }
    ref.at(idx) = acc / 6;
  }
  auto m1 = symmetrize(f, Sym::Minus);
  CHECK(m1 == ref);
  CHECK(symmetrize(m1, Sym::Minus) == m1);
  auto p1 = symmetrize(f, Sym::Plus);
  CHECK(symmetrize(p1, Sym::Plus) == p1);
  // a symmetric array is fixed by S^+ and killed by S^-
  CHECK(symmetrize(p1, Sym::Minus) == IndexedArray(3, 3));
}
