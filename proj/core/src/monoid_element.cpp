#include "gridmatch/monoid_element.hpp"

#include <bit>

#include "gridmatch/errors.hpp"

namespace gridmatch {

std::size_t subset_index(RowMask occupancy, RowMask subset) {
  std::size_t index = 0;
  std::size_t bit = 1;
  for (RowMask m = occupancy; m != 0; m &= m - 1, bit <<= 1) {
    if (subset & (m & (~m + 1))) index |= bit;
  }
  return index;
}

RowMask subset_rows(RowMask occupancy, std::size_t index) {
  RowMask out = 0;
  for (RowMask m = occupancy; m != 0 && index != 0; m &= m - 1, index >>= 1) {
    if (index & 1U) out |= m & (~m + 1);
  }
  return out;
}

Relation::Relation(int left_bits, int right_bits) : left_bits_(left_bits), right_bits_(right_bits) {
  if (left_bits < 0 || right_bits < 0 || left_bits > kMaxBoundaryVertices || right_bits > kMaxBoundaryVertices) {
    throw BoundExceeded("relation boundary of " + std::to_string(std::max(left_bits, right_bits)) +
                        " vertices exceeds the limit of " + std::to_string(kMaxBoundaryVertices));
  }
  words_per_row_ = (cols() + 63) / 64;
  words_.assign(rows() * words_per_row_, 0);
}

std::size_t Relation::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

Relation Relation::product(const Relation& s) const {
  if (right_bits_ != s.left_bits_) throw InvariantError("relation product dimension mismatch");
  Relation out(left_bits_, s.right_bits_);
  for (std::size_t x = 0; x < rows(); ++x) {
    std::uint64_t* dst = out.words_.data() + x * out.words_per_row_;
    const auto src = row(x);
    for (std::size_t w = 0; w < src.size(); ++w) {
      for (std::uint64_t bits = src[w]; bits != 0; bits &= bits - 1) {
        const std::size_t z = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        const auto srow = s.row(z);
        for (std::size_t k = 0; k < srow.size(); ++k) dst[k] |= srow[k];
      }
    }
  }
  return out;
}

std::size_t Relation::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ (static_cast<std::uint64_t>(left_bits_) << 8) ^
                    static_cast<std::uint64_t>(right_bits_);
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

MonoidElement MonoidElement::zero() {
  MonoidElement m;
  m.kind_ = Kind::Zero;
  return m;
}

MonoidElement MonoidElement::one() { return MonoidElement{}; }

MonoidElement MonoidElement::rel(RowMask left, RowMask right, Relation r) {
  if (r.left_bits() != std::popcount(left) || r.right_bits() != std::popcount(right)) {
    throw PreconditionError("relation dimensions do not match the boundary occupancies");
  }
  MonoidElement m;
  m.kind_ = Kind::Rel;
  m.left_ = left;
  m.right_ = right;
  m.relation_ = std::move(r);
  return m;
}

bool MonoidElement::contains(RowMask left_subset, RowMask right_subset) const {
  if (kind_ != Kind::Rel) throw PreconditionError("membership query on Zero or One");
  if ((left_subset & ~left_) != 0 || (right_subset & ~right_) != 0) {
    throw PreconditionError("membership query with rows outside the boundary");
  }
  return relation_.test(subset_index(left_, left_subset), subset_index(right_, right_subset));
}

std::vector<std::pair<RowMask, RowMask>> MonoidElement::pairs() const {
  std::vector<std::pair<RowMask, RowMask>> out;
  if (kind_ != Kind::Rel) return out;
  for (std::size_t x = 0; x < relation_.rows(); ++x) {
    for (std::size_t y = 0; y < relation_.cols(); ++y) {
      if (relation_.test(x, y)) out.emplace_back(subset_rows(left_, x), subset_rows(right_, y));
    }
  }
  return out;
}

std::size_t MonoidElement::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_);
  if (kind_ == Kind::Rel) {
    h ^= relation_.hash() + 0x9e3779b97f4a7c15ULL + (left_ * 31) + (right_ * 1000003ULL);
  }
  return h;
}

MonoidElement compose(const MonoidElement& a, const MonoidElement& b) {
  if (a.is_zero() || b.is_zero()) return MonoidElement::zero();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (a.right() != b.left()) return MonoidElement::zero();
  return MonoidElement::rel(a.left(), b.right(), a.relation().product(b.relation()));
}

namespace {

std::string rows_string(RowMask m) {
  std::string s = "{";
  bool first = true;
  for (; m != 0; m &= m - 1) {
    if (!first) s += ",";
    s += std::to_string(std::countr_zero(m));
    first = false;
  }
  return s + "}";
}

}  // namespace

std::string to_string(const MonoidElement& m) {
  switch (m.kind()) {
    case MonoidElement::Kind::Zero: return "Zero";
    case MonoidElement::Kind::One: return "One";
    case MonoidElement::Kind::Rel: break;
  }
  std::string s = "Rel(X=" + rows_string(m.left()) + ", Y=" + rows_string(m.right()) + ", R={";
  bool first = true;
  for (auto [x, y] : m.pairs()) {
    if (!first) s += ", ";
    s += "(" + rows_string(x) + "," + rows_string(y) + ")";
    first = false;
  }
  return s + "})";
}

}  // namespace gridmatch
