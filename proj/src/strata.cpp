#include "twc/strata.hpp"

#include <algorithm>

namespace twc {

namespace {

// Elements passing a per-element filter, grouped over all J.
template <typename Keep>
std::vector<PieceDescriptor> collect_pieces(const RootSystem& rs, const DiagramAut& aut,
                                            const WeylEnumeration& full, std::uint64_t cap,
                                            Keep keep) {
  const int n = rs.rank();
  std::vector<PieceDescriptor> out;
  for (std::uint16_t mask = 0; mask < (1u << n); ++mask) {
    const IndexSet J{mask};
    const IndexSet K = aut.image_set(J);
    for (std::uint32_t k = 0; k < full.size(); ++k) {
      if ((full.right_descents(k) & K.mask) != 0) continue;
      if (!keep(k)) continue;
      if (out.size() >= cap)
        throw CapExceededError("piece listing for " + rs.label() + " exceeds cap " +
                               std::to_string(cap));
      const int len = full.length(k);
      out.push_back({J, full.word(k), len, piece_dim(rs, J, len)});
    }
  }
  return out;
}

}  // namespace

int piece_dim(const RootSystem& rs, IndexSet J, int length) {
  return rs.dim_g() - length - (rs.rank() - J.size());
}

IndexSet weight_support(const IVec& weight_coords) {
  IndexSet s;
  for (int i = 0; i < weight_coords.n; ++i)
    if (weight_coords[i] != 0) s.add(i);
  return s;
}

void validate_nilcone_weight(const RootSystem& rs, const DiagramAut& aut,
                             const IVec& lambda) {
  if (lambda.n != rs.rank())
    throw ValidationError("weight must have " + std::to_string(rs.rank()) +
                          " coordinates");
  if (!lambda.all_nonneg()) throw ValidationError("weight is not dominant");
  if (lambda.is_zero()) throw ValidationError("weight is zero");
  if (!aut.fixes_weight(lambda)) throw ValidationError("weight is not twist-invariant");
}

std::vector<PieceDescriptor> enumerate_pieces(const RootSystem& rs, const DiagramAut& aut,
                                              const WeylEnumeration& full,
                                              std::uint64_t cap) {
  return collect_pieces(rs, aut, full, cap, [](std::uint32_t) { return true; });
}

std::vector<PieceDescriptor> steinberg_boundary(const RootSystem& rs, const DiagramAut& aut,
                                                const WeylEnumeration& full,
                                                std::uint64_t cap) {
  const IndexSet all = IndexSet::full(rs.rank());
  std::vector<bool> on_boundary(full.size());
  for (std::uint32_t k = 0; k < full.size(); ++k)
    on_boundary[k] = supp_sigma(aut, full.word(k)) == all;
  return collect_pieces(rs, aut, full, cap,
                        [&](std::uint32_t k) { return static_cast<bool>(on_boundary[k]); });
}

std::vector<PieceDescriptor> irreducible_components(const RootSystem& rs,
                                                    const DiagramAut& aut) {
  const int n = rs.rank();
  const std::vector<Word> coxeters = twisted_coxeter_elements(rs, aut);
  std::vector<PieceDescriptor> out;
  for (int i = 0; i < n; ++i) {
    IndexSet J = IndexSet::full(n);
    J.remove(i);
    IndexSet K = IndexSet::full(n);
    K.remove(aut.image(i));
    for (const Word& w : coxeters)
      if (is_min_coset_rep(rs, w, K))
        out.push_back({J, w, static_cast<int>(w.size()),
                       piece_dim(rs, J, static_cast<int>(w.size()))});
  }
  std::sort(out.begin(), out.end(), [](const PieceDescriptor& a, const PieceDescriptor& b) {
    if (a.J.mask != b.J.mask) return a.J.mask < b.J.mask;
    return a.word < b.word;
  });
  return out;
}

std::vector<PieceDescriptor> nilcone(const RootSystem& rs, const DiagramAut& aut,
                                     const WeylEnumeration& full, const IVec& lambda,
                                     std::uint64_t cap) {
  validate_nilcone_weight(rs, aut, lambda);
  const IndexSet ilambda = weight_support(lambda);
  std::vector<bool> meets(full.size());
  for (std::uint32_t k = 0; k < full.size(); ++k)
    meets[k] = !(support(full.word(k)) & ilambda).empty();
  return collect_pieces(rs, aut, full, cap,
                        [&](std::uint32_t k) { return static_cast<bool>(meets[k]); });
}

bool is_in_nilcone(const RootSystem& rs, const DiagramAut& aut,
                   const PieceDescriptor& piece, const IVec& lambda) {
  validate_nilcone_weight(rs, aut, lambda);
  return !(support(piece.word) & weight_support(lambda)).empty();
}

}  // namespace twc
