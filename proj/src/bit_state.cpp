#include "quasigray/bit_state.hpp"

#include <algorithm>
#include <numeric>

namespace quasigray {

BitState BitState::from_bits(const std::vector<int>& bits) {
  BitState s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) s.set(i, bits[i]);
  return s;
}

BitState BitState::parse(std::string_view text) {
  if (text.empty()) throw UsageError("empty bit string");
  BitState s(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[text.size() - 1 - k];
    if (c != '0' && c != '1') {
      throw UsageError("bit strings may only contain '0' and '1'");
    }
    s.bits_[k] = static_cast<std::uint8_t>(c - '0');
  }
  return s;
}

BitState BitState::from_integer(std::uint64_t value, std::size_t dim) {
  BitState s(dim);
  for (std::size_t i = 0; i < dim && i < 64; ++i) {
    s.bits_[i] = static_cast<std::uint8_t>((value >> i) & 1U);
  }
  return s;
}

std::string BitState::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    out[bits_.size() - 1 - k] = static_cast<char>('0' + bits_[k]);
  }
  return out;
}

std::uint64_t BitState::to_integer() const {
  if (bits_.size() > 64) throw UsageError("state too wide for a 64-bit key");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    v |= static_cast<std::uint64_t>(bits_[i]) << i;
  }
  return v;
}

std::size_t BitState::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::size_t hamming_distance(const BitState& a, const BitState& b) {
  if (a.dim() != b.dim()) throw UsageError("dimension mismatch");
  return std::inner_product(
      a.bits().begin(), a.bits().end(), b.bits().begin(), std::size_t{0},
      std::plus<>(), [](auto x, auto y) { return std::size_t(x != y); });
}

}  // namespace quasigray
