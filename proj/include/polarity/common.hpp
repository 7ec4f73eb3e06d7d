#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polarity {

// Subsets of a finite carrier; bit i is the i-th declared point.
using Mask = std::uint32_t;

constexpr int kMaxPoints = 30;

constexpr Mask unit_mask(int i) { return Mask{1} << i; }
constexpr bool mask_has(Mask m, int i) { return (m >> i) & 1u; }
constexpr Mask full_mask(int n) { return n == 0 ? Mask{0} : (~Mask{0} >> (32 - n)); }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int mask_size(Mask m) { return std::popcount(m); }

// Lowest set bit; only meaningful for m != 0.
inline int first_point(Mask m) { return std::countr_zero(m); }

template <class F>
void for_each_point(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

struct ParseError : std::runtime_error {
  int position;
  ParseError(int pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct SortError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FrameError : std::runtime_error {
  int line;  // 0 when not tied to a file location
  explicit FrameError(const std::string& msg, int line_no = 0)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

struct LatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cross-checks that recompute a value along a second route. Compiled out with NDEBUG.
#ifdef NDEBUG
inline constexpr bool kInternalChecks = false;
#else
inline constexpr bool kInternalChecks = true;
#endif

struct InternalCheckError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const char* what) {
  if (kInternalChecks && !ok) throw InternalCheckError(what);
}

}  // namespace polarity
