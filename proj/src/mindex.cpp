#include "jetvar/mindex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "jetvar/errors.hpp"

namespace jetvar {

MultiIndex::MultiIndex(int n, std::vector<int> entries) : n_(n), e_(std::move(entries)) {
  for (int v : e_)
    if (v < 1 || v > n_)
      throw PreconditionError("index " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  std::sort(e_.begin(), e_.end());
}

int MultiIndex::multiplicity(int k) const { return static_cast<int>(std::count(e_.begin(), e_.end(), k)); }

std::string MultiIndex::str() const {
  std::string s = "[";
  for (int v : e_) s += std::to_string(v);
  return s + "]";
}

MultiIndex MultiIndex::parse(const std::string& text, int n) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw PreconditionError("multi-index must look like [112], got '" + text + "'");
  std::vector<int> v;
  for (std::size_t p = 1; p + 1 < text.size(); ++p) {
    char c = text[p];
    if (c < '1' || c > '9') throw PreconditionError("bad multi-index digit in '" + text + "'");
    v.push_back(c - '0');
  }
  return MultiIndex(n, std::move(v));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& o) const {
  if (auto c = e_.size() <=> o.e_.size(); c != 0) return c;
  return e_ <=> o.e_;
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
  if (a.n() != b.n()) throw PreconditionError("concat: ambient dimensions differ");
  std::vector<int> v = a.entries();
  v.insert(v.end(), b.entries().begin(), b.entries().end());
  return MultiIndex(a.n(), std::move(v));
}

MultiIndex addOne(const MultiIndex& a, int k) {
  std::vector<int> v = a.entries();
  v.push_back(k);
  return MultiIndex(a.n(), std::move(v));
}

MultiIndex removeOne(const MultiIndex& a, int k) {
  std::vector<int> v = a.entries();
  auto it = std::find(v.begin(), v.end(), k);
  if (it == v.end()) throw PreconditionError("removeOne: " + std::to_string(k) + " not in " + a.str());
  v.erase(it);
  return MultiIndex(a.n(), std::move(v));
}

std::uint64_t orderedTupleCount(const MultiIndex& a) {
  std::uint64_t num = 1;
  for (int t = 2; t <= a.length(); ++t) num *= static_cast<std::uint64_t>(t);
  const auto& e = a.entries();
  for (std::size_t p = 0; p < e.size();) {
    std::size_t q = p;
    while (q < e.size() && e[q] == e[p]) ++q;
    for (std::uint64_t t = 2; t <= q - p; ++t) num /= t;
    p = q;
  }
  return num;
}

Rational partialWeight(const MultiIndex& a) { return Rational(1, static_cast<unsigned long>(orderedTupleCount(a))); }

std::vector<MultiIndex> multiIndicesOfLength(int n, int len) {
  std::vector<MultiIndex> out;
  if (len < 0) return out;
  std::vector<int> cur(len, 1);
  while (true) {
    out.emplace_back(n, cur);
    int p = len - 1;
    while (p >= 0 && cur[p] == n) --p;
    if (p < 0) break;
    int v = cur[p] + 1;
    for (int q = p; q < len; ++q) cur[q] = v;
  }
  return out;
}

std::vector<MultiIndex> multiIndicesUpTo(int n, int maxLen) {
  std::vector<MultiIndex> out;
  for (int l = 0; l <= maxLen; ++l) {
    auto v = multiIndicesOfLength(n, l);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<std::vector<int>> allTuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 1);
  if (n < 1 && k > 0) return out;
  while (true) {
    out.push_back(cur);
    int p = k - 1;
    while (p >= 0 && cur[p] == n) cur[p--] = 1;
    if (p < 0) break;
    ++cur[p];
  }
  return out;
}

int permutationSign(const std::vector<int>& v) {
  int sign = 1;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      if (v[a] == v[b]) return 0;
      if (v[a] > v[b]) sign = -sign;
    }
  return sign;
}

int leviCivita(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  for (int v : perm)
    if (v < 1 || v > n) return 0;
  return permutationSign(perm);
}

namespace {

void extendPartitions(int m, int next, std::vector<std::vector<int>>& cur,
                      std::vector<std::vector<std::vector<int>>>& out) {
  if (next == m) {
    out.push_back(cur);
    return;
  }
  // index loop: the recursion grows cur
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].push_back(next);
    extendPartitions(m, next + 1, cur, out);
    cur[b].pop_back();
  }
  cur.push_back({next});
  extendPartitions(m, next + 1, cur, out);
  cur.pop_back();
}

}  // namespace

const std::vector<std::vector<std::vector<int>>>& setPartitions(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<std::vector<int>>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  extendPartitions(m, 0, cur, out);
  return cache.emplace(m, std::move(out)).first->second;
}

IndexedArray::IndexedArray(int n_, int k_) : n(n_), k(k_) {
  std::size_t sz = 1;
  for (int p = 0; p < k; ++p) sz *= static_cast<std::size_t>(n);
  data.assign(sz, Rational(0));
}

std::size_t IndexedArray::offset(const std::vector<int>& idx) const {
  std::size_t off = 0;
  for (int v : idx) off = off * static_cast<std::size_t>(n) + static_cast<std::size_t>(v - 1);
  return off;
}

IndexedArray symmetrize(const IndexedArray& f, Sym sign) {
  IndexedArray out(f.n, f.k);
  std::vector<int> perm(f.k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  Rational inv = 1 / factorial(f.k);
  std::vector<int> permuted(f.k);
  for (const auto& idx : allTuples(f.n, f.k)) {
    Rational acc = 0;
    for (const auto& P : perms) {
      for (int p = 0; p < f.k; ++p) permuted[p] = idx[P[p]];
      int eps = sign == Sym::Plus ? 1 : permutationSign(P);
      acc += eps * f.at(permuted);
    }
    out.at(idx) = acc * inv;
  }
  return out;
}

}  // namespace jetvar
