#include "quasigray/lazy.hpp"

#include <bit>
#include <memory>

#include "quasigray/brgc.hpp"
#include "quasigray/rpgc.hpp"

namespace quasigray {

std::string to_string(FieldEncoding enc) {
  switch (enc) {
    case FieldEncoding::binary: return "binary";
    case FieldEncoding::brgc: return "brgc";
    case FieldEncoding::rpgc: return "rpgc";
  }
  return "?";
}

FieldEncoding parse_field_encoding(const std::string& text) {
  if (text == "binary") return FieldEncoding::binary;
  if (text == "brgc") return FieldEncoding::brgc;
  if (text == "rpgc") return FieldEncoding::rpgc;
  throw UsageError("unknown field encoding '" + text + "'");
}

SubCode make_brgc_subcode(std::size_t dim) {
  SubCode code;
  code.encoding = FieldEncoding::brgc;
  code.dim = dim;
  code.next = [](const SubrangeView& v, ProbeLedger& l) { brgc_next(v, l); };
  code.rank = [](const SubrangeView& v, ProbeLedger& l) {
    return brgc_rank(v, l).value;
  };
  code.last.assign(dim, 0);
  code.last[dim - 1] = 1;
  return code;
}

SubCode make_rpgc_subcode(std::size_t dim) {
  if (dim > 24) throw UsageError("rpgc sub-field too wide for a rank table");
  auto table = std::make_shared<std::vector<std::uint64_t>>(
      std::size_t{1} << dim, 0);
  BitState scratch(dim);
  ProbeLedger scratch_ledger(dim);
  const std::uint64_t length = std::uint64_t{1} << dim;
  for (std::uint64_t r = 0; r < length; ++r) {
    (*table)[scratch.to_integer()] = r;
    if (r + 1 == length) break;
    scratch_ledger.open_step();
    rpgc_increment(scratch, scratch_ledger);
    scratch_ledger.close_step();
  }

  SubCode code;
  code.encoding = FieldEncoding::rpgc;
  code.dim = dim;
  code.next = [](const SubrangeView& v, ProbeLedger& l) {
    rpgc_increment(v, l);
  };
  code.rank = [table](const SubrangeView& v, ProbeLedger& l) {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      key |= static_cast<std::uint64_t>(v.read(l, j)) << j;
    }
    return (*table)[key];
  };
  for (std::size_t j = 0; j < dim; ++j) code.last.push_back(scratch.raw(j));
  return code;
}

SubCode make_subcode(FieldEncoding enc, std::size_t dim) {
  switch (enc) {
    case FieldEncoding::brgc: return make_brgc_subcode(dim);
    case FieldEncoding::rpgc: return make_rpgc_subcode(dim);
    case FieldEncoding::binary: break;
  }
  throw UsageError("binary fields are not cyclic Gray sub-codes");
}

LazyLayout LazyLayout::make(std::size_t n, std::size_t g, FieldEncoding i_enc,
                            FieldEncoding k_enc) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw UsageError("n must be a power of two >= 2 (got " +
                     std::to_string(n) + ")");
  }
  LazyLayout l;
  l.n = n;
  l.log_n = static_cast<std::size_t>(std::countr_zero(n));
  l.g = g;
  l.i_encoding = i_enc;
  l.k_encoding = k_enc;
  return l;
}

std::string LazyLayout::describe() const {
  std::string out = "n=" + std::to_string(n) + ";g=" + std::to_string(g) +
                    ";i=" + to_string(i_encoding);
  if (g > 0) out += ";k=" + to_string(k_encoding);
  return out;
}

LazyFields LazyFields::bind(const LazyLayout& layout, BitState& state) {
  if (state.dim() != layout.dim()) throw UsageError("state/layout mismatch");
  LazyFields f{SubrangeView(state, 0, layout.n),
               SubrangeView(state, layout.i_offset(), layout.log_n),
               std::nullopt};
  if (layout.g > 0) f.k = SubrangeView(state, layout.k_offset(), layout.g);
  return f;
}

BitState make_lazy_state(const LazyLayout& layout, const std::vector<int>& b,
                         std::uint64_t i_bits, std::uint64_t k_bits) {
  if (b.size() != layout.n) throw UsageError("b has the wrong length");
  BitState s(layout.dim());
  for (std::size_t j = 0; j < layout.n; ++j) s.set(j, b[j]);
  for (std::size_t j = 0; j < layout.log_n; ++j) {
    s.set(layout.i_offset() + j, static_cast<int>((i_bits >> j) & 1U));
  }
  for (std::size_t j = 0; j < layout.g; ++j) {
    s.set(layout.k_offset() + j, static_cast<int>((k_bits >> j) & 1U));
  }
  return s;
}

std::uint64_t read_binary(const SubrangeView& field, ProbeLedger& ledger) {
  std::uint64_t v = 0;
  for (std::size_t j = 0; j < field.size(); ++j) {
    v |= static_cast<std::uint64_t>(field.read(ledger, j)) << j;
  }
  return v;
}

bool binary_increment(const SubrangeView& field, ProbeLedger& ledger) {
  for (std::size_t j = 0; j < field.size(); ++j) {
    if (field.read(ledger, j) == 0) {
      field.write(ledger, j, 1);
      return false;
    }
    field.write(ledger, j, 0);
  }
  return true;
}

namespace {

void clear_known(const SubrangeView& field, ProbeLedger& ledger) {
  for (std::size_t j = 0; j < field.size(); ++j) {
    if (field.read(ledger, j) == 1) field.write(ledger, j, 0);
  }
}

// Short-circuit comparison against a fixed pattern, low bit first.
bool matches(const SubrangeView& field, const std::vector<int>& pattern,
             ProbeLedger& ledger) {
  for (std::size_t j = 0; j < field.size(); ++j) {
    if (field.read(ledger, j) != pattern[j]) return false;
  }
  return true;
}

SubrangeView require_k(const LazyFields& f) {
  if (!f.k) throw UsageError("this counter needs a k field");
  return *f.k;
}

}  // namespace

void lazy_increment(const LazyFields& f, ProbeLedger& ledger) {
  const std::uint64_t pos = read_binary(f.i, ledger);
  if (f.b.read(ledger, pos) == 1) {
    f.b.write(ledger, pos, 0);
    binary_increment(f.i, ledger);
  } else {
    f.b.write(ledger, pos, 1);
    clear_known(f.i, ledger);
  }
}

void spin_increment(const LazyFields& f, ProbeLedger& ledger) {
  const SubrangeView k = require_k(f);
  if (k.size() != 1) throw UsageError("spin_increment uses a single k bit");
  if (k.read(ledger, 0) == 0) {
    binary_increment(f.i, ledger);
    if (tracked_is_zero(f.i, ledger)) k.write(ledger, 0, 1);
  } else {
    lazy_increment(f, ledger);
    if (tracked_is_zero(f.i, ledger)) k.write(ledger, 0, 0);
  }
}

void double_spin_increment(const LazyFields& f, ProbeLedger& ledger) {
  const SubrangeView k = require_k(f);
  bool k_full = true;  // k = 2^g - 1
  for (std::size_t j = 0; j < k.size() && k_full; ++j) {
    k_full = k.read(ledger, j) == 1;
  }
  if (!k_full) {
    binary_increment(f.i, ledger);
    if (tracked_is_zero(f.i, ledger)) binary_increment(k, ledger);
  } else {
    lazy_increment(f, ledger);
    if (tracked_is_zero(f.i, ledger)) clear_known(k, ledger);
  }
}

void wine_increment(const LazyFields& f, const SubCode& i_code,
                    const SubCode& k_code, ProbeLedger& ledger) {
  const SubrangeView k = require_k(f);
  // Resetting k from its last state only has to clear that state's set bits.
  const auto reset_k = [&] {
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k_code.last[j] == 1) k.write(ledger, j, 0);
    }
  };

  if (!matches(k, k_code.last, ledger)) {
    i_code.next(f.i, ledger);
    if (tracked_is_zero(f.i, ledger)) k_code.next(k, ledger);
    return;
  }
  const std::uint64_t pos = i_code.rank(f.i, ledger);
  if (f.b.read(ledger, pos) == 1) {
    f.b.write(ledger, pos, 0);
    i_code.next(f.i, ledger);
    if (tracked_is_zero(f.i, ledger)) reset_k();
  } else {
    f.b.write(ledger, pos, 1);
    reset_k();
  }
}

namespace {

CounterSpec lazy_spec(const std::string& name, const LazyLayout& layout) {
  CounterSpec c;
  c.name = name;
  c.dim = layout.dim();
  c.params = {{"n", static_cast<std::int64_t>(layout.n)},
              {"g", static_cast<std::int64_t>(layout.g)}};
  c.initial = BitState(layout.dim());
  return c;
}

}  // namespace

CounterSpec make_lazy_counter(std::size_t n) {
  const LazyLayout layout = LazyLayout::make(n, 0);
  CounterSpec c = lazy_spec("lazy", layout);
  c.advance = [layout](BitState& s, ProbeLedger& l) {
    lazy_increment(LazyFields::bind(layout, s), l);
  };
  return c;
}

CounterSpec make_spin_counter(std::size_t n) {
  const LazyLayout layout = LazyLayout::make(n, 1);
  CounterSpec c = lazy_spec("spin", layout);
  c.advance = [layout](BitState& s, ProbeLedger& l) {
    spin_increment(LazyFields::bind(layout, s), l);
  };
  return c;
}

CounterSpec make_double_spin_counter(std::size_t n, std::size_t g) {
  if (g == 0) throw UsageError("doublespin requires g >= 1");
  const LazyLayout layout = LazyLayout::make(n, g);
  CounterSpec c = lazy_spec("doublespin", layout);
  c.advance = [layout](BitState& s, ProbeLedger& l) {
    double_spin_increment(LazyFields::bind(layout, s), l);
  };
  return c;
}

CounterSpec make_wine_counter(std::size_t n, std::size_t g,
                              FieldEncoding i_enc, FieldEncoding k_enc) {
  if (g == 0) throw UsageError("wine requires g >= 1");
  const LazyLayout layout = LazyLayout::make(n, g, i_enc, k_enc);
  auto codes = std::make_shared<const std::pair<SubCode, SubCode>>(
      make_subcode(i_enc, layout.log_n), make_subcode(k_enc, g));
  CounterSpec c = lazy_spec("wine", layout);
  if (i_enc != FieldEncoding::brgc || k_enc != FieldEncoding::brgc) {
    c.detail = "i=" + to_string(i_enc) + ";k=" + to_string(k_enc);
  }
  c.advance = [layout, codes](BitState& s, ProbeLedger& l) {
    wine_increment(LazyFields::bind(layout, s), codes->first, codes->second,
                   l);
  };
  return c;
}

}  // namespace quasigray
