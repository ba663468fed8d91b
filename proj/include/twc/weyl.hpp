#ifndef TWC_WEYL_HPP
#define TWC_WEYL_HPP

#include <cstdint>
#include <vector>

#include "twc/rootsystem.hpp"
#include "twc/types.hpp"

namespace twc {

/// Elements are identified with their canonical word: the
/// lexicographically least reduced word in 0-based letters.

/// Canonical word of the element spelled by `letters` (need not be reduced).
Word canonicalize_word(const RootSystem& rs, const Word& letters);

bool is_reduced(const RootSystem& rs, const Word& letters);

/// Canonical word of a*b.
Word multiply(const RootSystem& rs, const Word& a, const Word& b);

/// Canonical word of the inverse.
Word inverse(const RootSystem& rs, const Word& a);

/// Image of a root (simple-root coordinates).
IVec act_on_root(const RootSystem& rs, const Word& w, IVec x);

/// Image of a weight (fundamental-weight coordinates).
IVec act_on_weight(const RootSystem& rs, const Word& w, IVec m);

/// Bit j set iff l(w s_j) < l(w), i.e. w(alpha_j) < 0.
std::uint8_t right_descent_mask(const RootSystem& rs, const Word& w);

/// Bit j set iff l(s_j w) < l(w).
std::uint8_t left_descent_mask(const RootSystem& rs, const Word& w);

/// Set of letters occurring in the word.
IndexSet support(const Word& w);

/// Number of positive roots sent negative; equals word length on
/// reduced input but is computed by acting on every positive root.
int inversion_count(const RootSystem& rs, const Word& w);

/// #{i : w(alpha_i) < 0}, computed by acting on each simple root.
int neg_simple_count(const RootSystem& rs, const Word& w);

/// True iff w(alpha_j) > 0 for all j in J, i.e. w is the minimal
/// length element of the coset w W_J.
bool is_min_coset_rep(const RootSystem& rs, const Word& w, IndexSet J);

/// Longest element of the parabolic subgroup W_K (canonical word).
Word longest_element(const RootSystem& rs, IndexSet K);

/// A uniformly chosen reduced word for w (peels random right descents).
Word random_reduced_word(const RootSystem& rs, const Word& w, SplitMix64& rng);

/// Breadth-first listing of a parabolic subgroup W_K in canonical
/// order: by length, then lexicographically by canonical word.
class WeylEnumeration {
public:
  /// Enumerates W_K (all of W when gens is the full set), throwing
  /// CapExceededError once more than `cap` elements appear.  A
  /// nonnegative `max_len` stops after the layer of that length.
  static WeylEnumeration build(const RootSystem& rs, IndexSet gens, std::uint64_t cap,
                               int max_len = -1);

  /// Rebuilds from previously enumerated data; validates layer order.
  static WeylEnumeration from_parts(const RootSystem& rs, IndexSet gens,
                                    std::vector<std::uint8_t> letters,
                                    std::vector<std::uint32_t> offsets,
                                    std::vector<std::uint8_t> rdesc);

  std::uint32_t size() const { return static_cast<std::uint32_t>(rdesc_.size()); }
  Word word(std::uint32_t k) const;
  int length(std::uint32_t k) const {
    return static_cast<int>(offsets_[k + 1] - offsets_[k]);
  }
  std::uint8_t right_descents(std::uint32_t k) const { return rdesc_[k]; }

  /// Sizes of the length layers; coefficient list of the Poincare
  /// polynomial of W_K.
  std::vector<std::uint64_t> layer_sizes() const;

  IndexSet generators() const { return gens_; }
  const std::vector<std::uint8_t>& letters() const { return letters_; }
  const std::vector<std::uint32_t>& offsets() const { return offsets_; }
  const std::vector<std::uint8_t>& rdesc() const { return rdesc_; }

private:
  IndexSet gens_{};
  std::vector<std::uint8_t> letters_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint8_t> rdesc_;
};

/// Indices into `en` of the elements of W^J (minimal coset
/// representatives for W/W_J); `en` must enumerate the full group.
std::vector<std::uint32_t> min_coset_rep_indices(const WeylEnumeration& en, IndexSet J);

}  // namespace twc

#endif
