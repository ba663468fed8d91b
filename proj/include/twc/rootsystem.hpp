#ifndef TWC_ROOTSYSTEM_HPP
#define TWC_ROOTSYSTEM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "twc/types.hpp"

namespace twc {

/// Simple root system in Bourbaki numbering.
///
/// Cartan matrix convention: cartan.at(i, j) = <alpha_j, alpha_i^vee>, so
/// column j holds the weight coordinates of alpha_j and the simple
/// reflection acts on root coordinates x by x_i -> x_i - (C x)_i.
class RootSystem {
public:
  /// Validates the type and constructs the root data.
  /// Accepts A(n>=1), B(n>=2), C(n>=3), D(n>=4), E(6..8), F4, G2.
  /// (C,2) is additionally accepted as an alias for B2; the echoed
  /// label keeps the requested letter.
  static RootSystem build(RootSystemSpec spec);

  RootSystemSpec spec() const { return spec_; }
  int rank() const { return rank_; }
  const IMat& cartan() const { return cartan_; }

  /// Positive roots in simple-root coordinates, sorted by (height, lex).
  const std::vector<IVec>& positive_roots() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  /// Height of a root given in simple-root coordinates.
  static std::int64_t height(const IVec& root) { return root.sum(); }

  /// dim G = 2 * #positive roots + rank.
  int dim_g() const { return 2 * num_positive() + rank_; }

  /// |W|, from the type's closed-form order.
  std::uint64_t weyl_order() const;

  /// s_i acting on root coordinates.
  IVec reflect_root(int i, const IVec& x) const;

  /// Type label as echoed in output, e.g. "C2".
  std::string label() const;

private:
  RootSystemSpec spec_{};
  int rank_ = 0;
  IMat cartan_{};
  std::vector<IVec> positive_;
};

}  // namespace twc

#endif
