#ifndef MAPFORGE_UNION_FIND_HPP
#define MAPFORGE_UNION_FIND_HPP

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace mapforge {

/// Union-find with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Union-find over Z/2 labelled variables. Each element carries its parity
/// relative to the root of its class; unite(a, b, p) records x_a ^ x_b == p.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  /// Returns (root, parity of x relative to root).
  std::pair<std::size_t, std::uint8_t> find(std::size_t x) {
    std::uint8_t p = 0;
    std::size_t r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    // second pass: point everything on the path at the root
    std::uint8_t acc = p;
    while (parent_[x] != x) {
      std::size_t next = parent_[x];
      std::uint8_t here = parity_[x];
      parent_[x] = r;
      parity_[x] = acc;
      acc ^= here;
      x = next;
    }
    return {r, p};
  }

  /// False when the constraint contradicts earlier ones (state unchanged).
  bool unite(std::size_t a, std::size_t b, std::uint8_t p) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return static_cast<std::uint8_t>(pa ^ pb) == (p & 1);
    if (size_[ra] < size_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = static_cast<std::uint8_t>(pa ^ pb ^ (p & 1));
    size_[ra] += size_[rb];
    return true;
  }

  /// Parity of x relative to its root; roots take value 0.
  std::uint8_t value(std::size_t x) { return find(x).second; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::size_t> size_;
};

}  // namespace mapforge

#endif  // MAPFORGE_UNION_FIND_HPP
