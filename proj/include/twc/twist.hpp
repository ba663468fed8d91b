#ifndef TWC_TWIST_HPP
#define TWC_TWIST_HPP

#include <array>
#include <string>
#include <vector>

#include "twc/rootsystem.hpp"
#include "twc/types.hpp"
#include "twc/weyl.hpp"

namespace twc {

/// A permutation of the simple-root indices preserving the Cartan
/// matrix, with its orbit decomposition (orbits sorted by least
/// element; orbit indices are 1-based in the API).
class DiagramAut {
public:
  /// Validates a 1-based one-line permutation [img(1), ..., img(rank)].
  static DiagramAut validate(const RootSystem& rs, const std::vector<int>& one_line);

  static DiagramAut identity(const RootSystem& rs);

  /// Resolves "identity", "flip" (A_n, D_n, E6), "triality"/"triality2"
  /// (D4), or a comma-separated one-line permutation such as "2,1".
  static DiagramAut resolve(const RootSystem& rs, const std::string& text);

  int rank() const { return rank_; }
  int image(int i) const { return img_[static_cast<std::size_t>(i)]; }     // 0-based
  int preimage(int i) const { return pre_[static_cast<std::size_t>(i)]; }  // 0-based
  bool is_identity() const;
  int order() const;

  IndexSet image_set(IndexSet s) const;
  bool is_stable(IndexSet s) const { return image_set(s) == s; }

  const std::vector<IndexSet>& orbits() const { return orbits_; }
  int num_orbits() const { return static_cast<int>(orbits_.size()); }

  /// omega of the j-th orbit (1-based j): the 0/1 weight supported on it.
  IVec omega_orbit(int j) const;

  /// Coordinate permutation: out[image(i)] = in[i].  The same map
  /// serves simple-root coordinates and fundamental-weight coordinates.
  IVec permute_coords(const IVec& v) const;

  bool fixes_weight(const IVec& weight_coords) const;

  /// Matrix of the action on simple-root coordinates.
  IMat perm_matrix() const;

  /// 1-based one-line notation, as serialized.
  std::vector<int> one_line() const;

private:
  int rank_ = 0;
  std::array<std::uint8_t, kMaxRank> img_{};
  std::array<std::uint8_t, kMaxRank> pre_{};
  std::vector<IndexSet> orbits_;
};

/// Letterwise image of a word (not canonicalized).
Word sigma_on_word(const DiagramAut& aut, const Word& w);

/// Canonical word of sigma(w).
Word sigma_on_w(const RootSystem& rs, const DiagramAut& aut, const Word& w);

/// Union of the sigma-orbits meeting supp(w).
IndexSet supp_sigma(const DiagramAut& aut, const Word& w);

/// All K with sigma(K) = K, ascending as bitmasks.
std::vector<IndexSet> sigma_stable_subsets(const DiagramAut& aut);

/// All w with l(w) = #orbits and supp_sigma(w) = I: the products of
/// one simple reflection per orbit, in every order, deduplicated.
/// Canonical (lexicographic) order.
std::vector<Word> twisted_coxeter_elements(const RootSystem& rs, const DiagramAut& aut);

/// Every valid diagram automorphism, ordered by one-line notation.
std::vector<DiagramAut> all_diagram_automorphisms(const RootSystem& rs);

}  // namespace twc

#endif
