#ifndef TWC_TYPES_HPP
#define TWC_TYPES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twc {

// Ranks run over 1..8 (E8 is the largest simple type).
inline constexpr int kMaxRank = 8;

// Default element cap for Weyl enumerations; covers E7.
inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// Default seed for all seeded sampling; recorded in reports.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Input that violates a precondition (bad type/rank, bad twist, bad weight).
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Enumeration would exceed the configured element cap.
class CapExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

char family_letter(Family f);
Family family_from_letter(char c);  // throws ValidationError

struct RootSystemSpec {
  Family family;
  int rank;
};

/// Subset of the simple-root index set, as a bitmask over 0-based indices.
struct IndexSet {
  std::uint16_t mask = 0;

  static IndexSet full(int rank) { return {static_cast<std::uint16_t>((1u << rank) - 1u)}; }
  static IndexSet single(int i) { return {static_cast<std::uint16_t>(1u << i)}; }

  bool contains(int i) const { return (mask >> i) & 1u; }
  void add(int i) { mask |= static_cast<std::uint16_t>(1u << i); }
  void remove(int i) { mask &= static_cast<std::uint16_t>(~(1u << i)); }
  int size() const { return __builtin_popcount(mask); }
  bool empty() const { return mask == 0; }
  bool subset_of(IndexSet other) const { return (mask & ~other.mask) == 0; }

  IndexSet operator|(IndexSet o) const { return {static_cast<std::uint16_t>(mask | o.mask)}; }
  IndexSet operator&(IndexSet o) const { return {static_cast<std::uint16_t>(mask & o.mask)}; }
  IndexSet complement(int rank) const {
    return {static_cast<std::uint16_t>(~mask & ((1u << rank) - 1u))};
  }
  bool operator==(const IndexSet&) const = default;
  bool operator<(const IndexSet& o) const { return mask < o.mask; }

  /// Sorted 0-based index list.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 16; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
};

/// Integer vector in a rank-dimensional lattice basis.
struct IVec {
  int n = 0;
  std::array<std::int32_t, kMaxRank> c{};

  static IVec zero(int n) { return IVec{n, {}}; }
  static IVec unit(int n, int i) {
    IVec v{n, {}};
    v.c[static_cast<std::size_t>(i)] = 1;
    return v;
  }

  std::int32_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  std::int32_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  bool operator==(const IVec& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      if (c[static_cast<std::size_t>(i)] != o.c[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  bool all_nonneg() const {
    for (int i = 0; i < n; ++i)
      if ((*this)[i] < 0) return false;
    return true;
  }
  bool all_nonpos() const {
    for (int i = 0; i < n; ++i)
      if ((*this)[i] > 0) return false;
    return true;
  }
  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if ((*this)[i] != 0) return false;
    return true;
  }

  /// Coordinate sum; on root coordinates this is the height map.
  std::int64_t sum() const {
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) s += (*this)[i];
    return s;
  }

  IVec operator+(const IVec& o) const {
    IVec r = *this;
    for (int i = 0; i < n; ++i) r[i] += o[i];
    return r;
  }
};

/// (height, lex) order used for the canonical positive-root listing.
bool height_lex_less(const IVec& a, const IVec& b);

/// Square integer matrix of dimension rank, row-major.
struct IMat {
  int n = 0;
  std::array<std::int32_t, kMaxRank * kMaxRank> a{};

  static IMat identity(int n) {
    IMat m{n, {}};
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::int32_t& at(int i, int j) { return a[static_cast<std::size_t>(i * kMaxRank + j)]; }
  std::int32_t at(int i, int j) const { return a[static_cast<std::size_t>(i * kMaxRank + j)]; }

  bool operator==(const IMat& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (at(i, j) != o.at(i, j)) return false;
    return true;
  }

  IMat mul(const IMat& o) const {
    IMat r{n, {}};
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const std::int32_t x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  IVec apply(const IVec& v) const {
    IVec r = IVec::zero(n);
    for (int i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (int j = 0; j < n; ++j) s += static_cast<std::int64_t>(at(i, j)) * v[j];
      r[i] = static_cast<std::int32_t>(s);
    }
    return r;
  }

  IVec col(int j) const {
    IVec r = IVec::zero(n);
    for (int i = 0; i < n; ++i) r[i] = at(i, j);
    return r;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(at(i, j)));
        h *= 0x100000001b3ull;
      }
    return h;
  }
};

/// Word in the simple reflections, letters 0-based.
using Word = std::vector<std::uint8_t>;

/// splitmix64; used instead of <random> so seeded output is platform-stable.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound) via multiply-shift.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }
};

}  // namespace twc

template <>
struct std::hash<twc::IMat> {
  std::size_t operator()(const twc::IMat& m) const { return m.hash(); }
};

#endif
