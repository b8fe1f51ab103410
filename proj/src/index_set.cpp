#include "invsub/index_set.hpp"

#include "invsub/errors.hpp"

#include <algorithm>

namespace invsub {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

IndexSet::IndexSet(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
  if (n < 0) throw DomainError("negative ambient dimension");
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1 || elems_[i] > n) throw DomainError("index outside 1..n");
    if (i > 0 && elems_[i] <= elems_[i - 1]) throw DomainError("index set not strictly increasing");
  }
}

IndexSet IndexSet::unrank(int n, int d, std::uint64_t r) {
  if (r >= binomial(n, d)) throw DomainError("rank outside 0..C(n,d)-1");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(d));
  int x = 1;
  for (int i = 0; i < d; ++i) {
    // Skip whole blocks of subsets whose next element is x.
    for (;; ++x) {
      const std::uint64_t block = binomial(n - x, d - i - 1);
      if (r < block) break;
      r -= block;
    }
    out.push_back(x);
    ++x;
  }
  return IndexSet(n, std::move(out));
}

std::vector<IndexSet> IndexSet::all(int n, int d) {
  std::vector<IndexSet> out;
  if (d < 0 || d > n) return out;
  out.reserve(binomial(n, d));
  std::vector<int> cur(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) cur[i] = i + 1;
  for (;;) {
    out.emplace_back(n, cur);
    int i = d - 1;
    while (i >= 0 && cur[i] == n - d + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < d; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

bool IndexSet::contains(int s) const { return std::binary_search(elems_.begin(), elems_.end(), s); }

int IndexSet::position(int s) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), s);
  if (it == elems_.end() || *it != s) return -1;
  return static_cast<int>(it - elems_.begin());
}

std::uint64_t IndexSet::rank() const {
  const int d = size();
  std::uint64_t r = 0;
  int prev = 0;
  for (int i = 0; i < d; ++i) {
    for (int x = prev + 1; x < elems_[i]; ++x) r += binomial(n_ - x, d - i - 1);
    prev = elems_[i];
  }
  return r;
}

IndexSet IndexSet::complement() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_ - size()));
  std::size_t j = 0;
  for (int x = 1; x <= n_; ++x) {
    if (j < elems_.size() && elems_[j] == x) {
      ++j;
    } else {
      out.push_back(x);
    }
  }
  return IndexSet(n_, std::move(out));
}

IndexSet IndexSet::without(int s) const {
  std::vector<int> out;
  out.reserve(elems_.size());
  for (int x : elems_)
    if (x != s) out.push_back(x);
  return IndexSet(n_, std::move(out));
}

IndexSet IndexSet::with(int s) const {
  if (contains(s)) throw DomainError("index already present");
  std::vector<int> out = elems_;
  out.insert(std::upper_bound(out.begin(), out.end(), s), s);
  return IndexSet(n_, std::move(out));
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elems_[i]);
  }
  return s + "}";
}

int sign_insert(int s, const IndexSet& m) {
  if (m.contains(s)) throw DomainError("sign_insert: index already in the set");
  const auto& e = m.elems();
  const auto below = std::lower_bound(e.begin(), e.end(), s) - e.begin();
  return (below % 2 == 0) ? 1 : -1;
}

int sign_shuffle(const IndexSet& a, const IndexSet& b) {
  const auto& x = a.elems();
  const auto& y = b.elems();
  std::size_t inversions = 0;
  std::size_t j = 0;
  // Merge walk: for each x_i, count the elements of b below it.
  for (int xi : x) {
    while (j < y.size() && y[j] < xi) ++j;
    if (j < y.size() && y[j] == xi) throw DomainError("sign_shuffle: overlapping index sets");
    inversions += j;
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace invsub
