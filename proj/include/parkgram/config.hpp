#pragma once

namespace parkgram {

// Process-wide soft limits. Derivative order and enumeration length both feed
// exponential blowups, so callers must raise the caps knowingly (CLI flags
// --max-order/--max-enum, or the PARKGRAM_DERIVE_CAP / PARKGRAM_ENUM_CAP
// environment variables picked up at first use).
struct Limits {
  int derive_cap = 12;   // max n for derive_n and the coefficient tables
  int enum_len_cap = 8;  // max sequence length for brute-force enumeration
};

Limits& limits();

}  // namespace parkgram
