#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wonder {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error kinds surfaced across the library. `witness` carries the offending
// element(s) in human-readable form; `code` is stable for programmatic use.
enum class Err {
  NotAPoset,
  NotASemilattice,
  NotComparable,
  EmptyInput,
  NoTop,
  TooLarge,
  ElementOutOfRange,
  NotAFace,
  VertexClash,
  InternalNotSemilattice,
  OrderNotNonIncreasing,
  NotABuildingSet,
  CheckDisagreement,
  DimensionMismatch,
  MissingCodim,
  LineNotOrthogonal,
  NotTerminal,
  TooManyLines,
  NotAtomic,
  NotReachable,
  NotSimplicial,
  BadCycle,
  OrderCapExceeded,
  SamplingExhausted,
  BadInput,
};

const char* err_name(Err e);

struct WonderError : std::runtime_error {
  Err code;
  std::string witness;
  WonderError(Err c, const std::string& msg, std::string w = "")
      : std::runtime_error(msg), code(c), witness(std::move(w)) {}
};

[[noreturn]] inline void fail(Err c, const std::string& msg,
                              const std::string& witness = "") {
  throw WonderError(c, msg, witness);
}

// Fixed-size bit row used for dense order tables.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}
  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  Bits& operator&=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  bool operator==(const Bits& o) const { return w_ == o.w_; }
  bool none() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }
  bool subset_of(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  // First set index >= from, or -1.
  int next(int from = 0) const {
    if (from >= n_) return -1;
    int k = from >> 6;
    uint64_t w = w_[k] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (w) {
        int i = (k << 6) + __builtin_ctzll(w);
        return i < n_ ? i : -1;
      }
      if (++k >= (int)w_.size()) return -1;
      w = w_[k];
    }
  }
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

std::string join_labels(const std::vector<std::string>& parts,
                        const std::string& sep);

// Exact rational <-> "p/q" strings (integers print without the slash).
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace wonder
