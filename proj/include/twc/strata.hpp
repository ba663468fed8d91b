#ifndef TWC_STRATA_HPP
#define TWC_STRATA_HPP

#include <vector>

#include "twc/rootsystem.hpp"
#include "twc/twist.hpp"
#include "twc/types.hpp"
#include "twc/weyl.hpp"

namespace twc {

/// Label (J, w) of a G-stable piece, with w in W^{sigma(J)} and
/// dim = dim(G) - l(w) - |I - J|.
struct PieceDescriptor {
  IndexSet J;
  Word word;
  int length = 0;
  int dim = 0;

  bool operator==(const PieceDescriptor&) const = default;
};

int piece_dim(const RootSystem& rs, IndexSet J, int length);

/// I(lambda): the indices with nonzero fundamental-weight coordinate.
IndexSet weight_support(const IVec& weight_coords);

/// Throws unless lambda is nonzero, dominant, and sigma-invariant.
void validate_nilcone_weight(const RootSystem& rs, const DiagramAut& aut,
                             const IVec& lambda);

/// All pieces (J ascending as bitmask, then w in canonical order);
/// `full` must enumerate the whole Weyl group.
std::vector<PieceDescriptor> enumerate_pieces(const RootSystem& rs, const DiagramAut& aut,
                                              const WeylEnumeration& full,
                                              std::uint64_t cap = kDefaultCap);

/// The pieces with supp_sigma(w) = I: the boundary stratification of a
/// Steinberg fiber closure.
std::vector<PieceDescriptor> steinberg_boundary(const RootSystem& rs, const DiagramAut& aut,
                                                const WeylEnumeration& full,
                                                std::uint64_t cap = kDefaultCap);

/// The pieces (I - {i}, w) with w a twisted Coxeter element lying in
/// W^{I - {sigma(i)}}: the maximal-dimension boundary pieces.
std::vector<PieceDescriptor> irreducible_components(const RootSystem& rs,
                                                    const DiagramAut& aut);

/// The pieces with I(lambda) and supp(w) intersecting.
std::vector<PieceDescriptor> nilcone(const RootSystem& rs, const DiagramAut& aut,
                                     const WeylEnumeration& full, const IVec& lambda,
                                     std::uint64_t cap = kDefaultCap);

bool is_in_nilcone(const RootSystem& rs, const DiagramAut& aut,
                   const PieceDescriptor& piece, const IVec& lambda);

}  // namespace twc

#endif
