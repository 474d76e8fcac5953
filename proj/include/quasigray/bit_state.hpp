#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace quasigray {

/// Raised when an operation is called outside its contract (bad index,
/// mismatched lengths, no open step, invalid parameters).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-dimension bit string. Index 0 is the first array element, which
/// every algorithm in this library treats as the low end of the string.
class BitState {
 public:
  BitState() = default;
  explicit BitState(std::size_t dim) : bits_(dim, 0) {
    if (dim == 0) throw UsageError("BitState dimension must be positive");
  }
  /// Bits listed in index order: from_bits({b0, b1, ...}).
  static BitState from_bits(const std::vector<int>& bits);
  /// Canonical text: bits[dim-1] leftmost down to bits[0] rightmost.
  static BitState parse(std::string_view text);
  /// Low `dim` bits of `value`, bit j of value -> index j.
  static BitState from_integer(std::uint64_t value, std::size_t dim);

  std::size_t dim() const noexcept { return bits_.size(); }

  int get(std::size_t pos) const {
    check(pos);
    return bits_[pos];
  }
  void set(std::size_t pos, int value) {
    check(pos);
    if (value != 0 && value != 1) throw UsageError("bit value must be 0 or 1");
    bits_[pos] = static_cast<std::uint8_t>(value);
  }

  // Unchecked access for hot loops that have already validated the range.
  int raw(std::size_t pos) const noexcept { return bits_[pos]; }
  void raw_set(std::size_t pos, int value) noexcept {
    bits_[pos] = static_cast<std::uint8_t>(value);
  }

  std::string to_string() const;
  /// Requires dim() <= 64.
  std::uint64_t to_integer() const;
  std::size_t popcount() const noexcept;

  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  friend bool operator==(const BitState&, const BitState&) = default;

 private:
  void check(std::size_t pos) const {
    if (pos >= bits_.size()) {
      throw UsageError("bit position " + std::to_string(pos) +
                       " out of range for dimension " +
                       std::to_string(bits_.size()));
    }
  }

  std::vector<std::uint8_t> bits_;
};

/// Number of positions at which two equal-dimension states differ.
std::size_t hamming_distance(const BitState& a, const BitState& b);

}  // namespace quasigray
