#pragma once

#include <cstdint>
#include <vector>

namespace latcal::detail {

// Square boolean matrix with 64-bit packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<size_t>(n) * words_, 0) {}

  int size() const { return n_; }
  int words() const { return words_; }

  bool get(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  void set(int i, int j) {
    row(i)[j >> 6] |= (uint64_t{1} << (j & 63));
  }
  void clear(int i, int j) {
    row(i)[j >> 6] &= ~(uint64_t{1} << (j & 63));
  }

  uint64_t* row(int i) { return bits_.data() + static_cast<size_t>(i) * words_; }
  const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }

  void or_row_into(int src, int dst) {
    const uint64_t* s = row(src);
    uint64_t* d = row(dst);
    for (int w = 0; w < words_; ++w) d[w] |= s[w];
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

// Helpers on raw packed rows of equal width.
inline bool rows_equal(const uint64_t* a, const uint64_t* b, int words) {
  for (int w = 0; w < words; ++w)
    if (a[w] != b[w]) return false;
  return true;
}

inline bool row_subset(const uint64_t* a, const uint64_t* b, int words) {
  for (int w = 0; w < words; ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

inline bool rows_intersect(const uint64_t* a, const uint64_t* b, int words) {
  for (int w = 0; w < words; ++w)
    if (a[w] & b[w]) return true;
  return false;
}

}  // namespace latcal::detail
