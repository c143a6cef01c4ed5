#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "jetvar/rational.hpp"

namespace jetvar {

// Sorted multiset of indices in 1..n.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int n) : n_(n) {}
  MultiIndex(int n, std::vector<int> entries);

  int n() const { return n_; }
  int length() const { return static_cast<int>(e_.size()); }
  bool empty() const { return e_.empty(); }
  const std::vector<int>& entries() const { return e_; }
  int operator[](int p) const { return e_[p]; }
  int multiplicity(int k) const;

  std::string str() const;
  static MultiIndex parse(const std::string& text, int n);

  // (length, lexicographic); ambient n is not part of the order
  std::strong_ordering operator<=>(const MultiIndex& o) const;
  bool operator==(const MultiIndex& o) const { return e_ == o.e_; }

 private:
  int n_ = 0;
  std::vector<int> e_;
};

MultiIndex concat(const MultiIndex& a, const MultiIndex& b);
MultiIndex addOne(const MultiIndex& a, int k);
MultiIndex removeOne(const MultiIndex& a, int k);

// |a|! / prod r_k!
std::uint64_t orderedTupleCount(const MultiIndex& a);
// prod r_k! / |a|!, the weight of the weighted partial
Rational partialWeight(const MultiIndex& a);

std::vector<MultiIndex> multiIndicesOfLength(int n, int len);
std::vector<MultiIndex> multiIndicesUpTo(int n, int maxLen);

// All tuples in {1..n}^k, lexicographic.
std::vector<std::vector<int>> allTuples(int n, int k);

// Sign of the permutation sorting v; 0 if v has a repeated entry.
int permutationSign(const std::vector<int>& v);
// eps_{i1..in}, eps_{1..n} = +1
int leviCivita(const std::vector<int>& perm);

// Set partitions of {0..m-1}; each partition listed once, blocks ordered by
// their smallest element.
const std::vector<std::vector<std::vector<int>>>& setPartitions(int m);

// Dense array over {1..n}^k.
struct IndexedArray {
  int n = 0;
  int k = 0;
  std::vector<Rational> data;

  IndexedArray() = default;
  IndexedArray(int n_, int k_);
  std::size_t offset(const std::vector<int>& idx) const;
  Rational& at(const std::vector<int>& idx) { return data[offset(idx)]; }
  const Rational& at(const std::vector<int>& idx) const { return data[offset(idx)]; }
  bool operator==(const IndexedArray&) const = default;
};

enum class Sym { Plus, Minus };

IndexedArray symmetrize(const IndexedArray& f, Sym sign);

}  // namespace jetvar
