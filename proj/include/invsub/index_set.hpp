#ifndef INVSUB_INDEX_SET_HPP
#define INVSUB_INDEX_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace invsub {

/// Binomial coefficient C(n, k); zero when k > n.
std::uint64_t binomial(int n, int k);

/// Strictly increasing subsequence of (1, ..., n). Elements are 1-based to
/// match basis labels e_1, ..., e_n; conversion to array offsets happens at
/// the storage boundary (rank/unrank).
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws DomainError unless `elems` is strictly increasing inside [1, n].
  IndexSet(int n, std::vector<int> elems);
  IndexSet(int n, std::initializer_list<int> elems) : IndexSet(n, std::vector<int>(elems)) {}

  /// The subset with lexicographic rank `r` among all d-subsets of 1..n.
  static IndexSet unrank(int n, int d, std::uint64_t r);
  /// All d-subsets of 1..n in lexicographic order.
  static std::vector<IndexSet> all(int n, int d);

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const noexcept { return elems_; }
  bool contains(int s) const;

  /// Zero-based lexicographic rank among all subsets of the same size.
  std::uint64_t rank() const;
  IndexSet complement() const;
  IndexSet without(int s) const;
  IndexSet with(int s) const;

  /// Position of s inside the set (0-based), -1 if absent.
  int position(int s) const;

  bool operator==(const IndexSet&) const = default;
  auto operator<=>(const IndexSet&) const = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  std::vector<int> elems_;
};

/// Sign of the permutation sorting (s, m_1, ..., m_r): (-1)^#{m_i < s}.
/// Throws DomainError when s belongs to m.
int sign_insert(int s, const IndexSet& m);

/// Sign of the permutation sorting the concatenation (a, b):
/// (-1)^#{(x, y) : x in a, y in b, x > y}. Throws DomainError on overlap.
int sign_shuffle(const IndexSet& a, const IndexSet& b);

}  // namespace invsub

#endif  // INVSUB_INDEX_SET_HPP
