#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridmatch/grid_graph.hpp"

namespace gridmatch {

/// Boundary columns with more present vertices than this cannot be turned into
/// a full relation (2^k x 2^k bits).
inline constexpr int kMaxBoundaryVertices = 12;

/// Index of `subset` among the subsets of `occupancy`: bit i of the index is
/// the i-th present row, counting from row 0.
std::size_t subset_index(RowMask occupancy, RowMask subset);
/// Inverse of subset_index.
RowMask subset_rows(RowMask occupancy, std::size_t index);

/// Boolean matrix of 2^left_bits rows by 2^right_bits columns, one bit-vector
/// per row. Padding bits are always zero, so equality is structural.
class Relation {
 public:
  Relation() = default;
  Relation(int left_bits, int right_bits);

  int left_bits() const { return left_bits_; }
  int right_bits() const { return right_bits_; }
  std::size_t rows() const { return std::size_t{1} << left_bits_; }
  std::size_t cols() const { return std::size_t{1} << right_bits_; }

  bool test(std::size_t x, std::size_t y) const {
    return (words_[x * words_per_row_ + y / 64] >> (y % 64)) & 1U;
  }
  void set(std::size_t x, std::size_t y) { words_[x * words_per_row_ + y / 64] |= std::uint64_t{1} << (y % 64); }
  std::span<const std::uint64_t> row(std::size_t x) const {
    return {words_.data() + x * words_per_row_, words_per_row_};
  }
  std::size_t count() const;
  bool empty() const { return count() == 0; }

  /// {(x, y) : exists z with (x, z) in *this and (z, y) in s}.
  Relation product(const Relation& s) const;
  std::size_t hash() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  int left_bits_ = 0;
  int right_bits_ = 0;
  std::size_t words_per_row_ = 1;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

/// Element of the matching monoid: the absorbing Zero, the identity One, or a
/// triple (X, Y, R) where X and Y are the occupied rows of the left and right
/// boundary columns and (X', Y') in R iff the graph minus (X \ X') and minus
/// Y' has a perfect matching.
class MonoidElement {
 public:
  enum class Kind : std::uint8_t { Zero, One, Rel };

  static MonoidElement zero();
  static MonoidElement one();
  static MonoidElement rel(RowMask left, RowMask right, Relation r);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_one() const { return kind_ == Kind::One; }
  bool is_rel() const { return kind_ == Kind::Rel; }

  RowMask left() const { return left_; }
  RowMask right() const { return right_; }
  const Relation& relation() const { return relation_; }

  /// Membership of (X', Y') given as row masks. Subsets must lie inside X and Y.
  bool contains(RowMask left_subset, RowMask right_subset) const;
  /// All (X', Y') pairs of R as row masks, ordered by X' index then Y' index.
  std::vector<std::pair<RowMask, RowMask>> pairs() const;

  std::size_t hash() const;

  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;

 private:
  Kind kind_ = Kind::One;
  RowMask left_ = 0;
  RowMask right_ = 0;
  Relation relation_;
};

struct MonoidElementHash {
  std::size_t operator()(const MonoidElement& m) const { return m.hash(); }
};

/// The monoid product: relation product when the inner boundaries agree,
/// Zero when they differ.
MonoidElement compose(const MonoidElement& a, const MonoidElement& b);

std::string to_string(const MonoidElement& m);

}  // namespace gridmatch
