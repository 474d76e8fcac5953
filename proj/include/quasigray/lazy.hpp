#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "quasigray/counter.hpp"
#include "quasigray/probe.hpp"

namespace quasigray {

enum class FieldEncoding { binary, brgc, rpgc };

std::string to_string(FieldEncoding enc);
FieldEncoding parse_field_encoding(const std::string& text);

/// A cyclic code stored in a sub-field, as WineIncrement needs it: a
/// successor, a rank, and the state of maximal rank.
struct SubCode {
  FieldEncoding encoding = FieldEncoding::brgc;
  std::size_t dim = 0;
  std::function<void(const SubrangeView&, ProbeLedger&)> next;
  /// Charges a full read of the field.
  std::function<std::uint64_t(const SubrangeView&, ProbeLedger&)> rank;
  /// Bits of the maximal-rank state, index order.
  std::vector<int> last;
};

SubCode make_brgc_subcode(std::size_t dim);
/// RPGC successor; rank served from a table built by enumerating the cycle.
SubCode make_rpgc_subcode(std::size_t dim);
SubCode make_subcode(FieldEncoding enc, std::size_t dim);

/// Geometry of a lazy counter: b at [0, n), i at [n, n + log n), k at
/// [n + log n, n + log n + g). g = 0 means no k field.
struct LazyLayout {
  std::size_t n = 0;
  std::size_t log_n = 0;
  std::size_t g = 0;
  FieldEncoding i_encoding = FieldEncoding::binary;
  FieldEncoding k_encoding = FieldEncoding::binary;

  /// Validates n (power of two >= 2).
  static LazyLayout make(std::size_t n, std::size_t g,
                         FieldEncoding i_enc = FieldEncoding::binary,
                         FieldEncoding k_enc = FieldEncoding::binary);

  std::size_t dim() const noexcept { return n + log_n + g; }
  std::size_t i_offset() const noexcept { return n; }
  std::size_t k_offset() const noexcept { return n + log_n; }
  /// "n=4;g=2;i=brgc;k=brgc"
  std::string describe() const;
};

/// Views of one state under a layout.
struct LazyFields {
  SubrangeView b;
  SubrangeView i;
  std::optional<SubrangeView> k;

  static LazyFields bind(const LazyLayout& layout, BitState& state);
};

/// Builds a state from field values (i and k given as raw bit values of the
/// field, low bit first in the integer).
BitState make_lazy_state(const LazyLayout& layout, const std::vector<int>& b,
                         std::uint64_t i_bits, std::uint64_t k_bits = 0);

// Field helpers for binary-encoded fields. All probes are charged.
std::uint64_t read_binary(const SubrangeView& field, ProbeLedger& ledger);
/// Ripple-carry increment from bit 0; returns true when the field wrapped.
bool binary_increment(const SubrangeView& field, ProbeLedger& ledger);

void lazy_increment(const LazyFields& f, ProbeLedger& ledger);
void spin_increment(const LazyFields& f, ProbeLedger& ledger);
void double_spin_increment(const LazyFields& f, ProbeLedger& ledger);
void wine_increment(const LazyFields& f, const SubCode& i_code,
                    const SubCode& k_code, ProbeLedger& ledger);

CounterSpec make_lazy_counter(std::size_t n);
CounterSpec make_spin_counter(std::size_t n);
CounterSpec make_double_spin_counter(std::size_t n, std::size_t g);
CounterSpec make_wine_counter(std::size_t n, std::size_t g,
                              FieldEncoding i_enc = FieldEncoding::brgc,
                              FieldEncoding k_enc = FieldEncoding::brgc);

}  // namespace quasigray
