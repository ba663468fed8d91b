#include "twc/weyl.hpp"

#include <algorithm>
#include <unordered_map>

namespace twc {

namespace {

bool vec_has_negative(const IMat& m, int col) {
  for (int i = 0; i < m.n; ++i)
    if (m.at(i, col) < 0) return true;
  return false;
}

// X <- X * A(s_i): acting matrices on root coordinates compose on the
// right when letters are appended.
void fold_right_rm(IMat& x, const IMat& cartan, int i) {
  const int n = x.n;
  for (int k = 0; k < n; ++k) {
    const std::int32_t xi = x.at(k, i);
    if (xi == 0) continue;
    for (int j = 0; j < n; ++j) x.at(k, j) -= cartan.at(i, j) * xi;
  }
}

// X <- A(s_i) * X: prepends a letter, used for inverse tracking.
void fold_left_rm(IMat& x, const IMat& cartan, int i) {
  const int n = x.n;
  std::array<std::int32_t, kMaxRank> acc{};
  for (int l = 0; l < n; ++l) {
    const std::int32_t c = cartan.at(i, l);
    if (c == 0) continue;
    for (int j = 0; j < n; ++j) acc[static_cast<std::size_t>(j)] += c * x.at(l, j);
  }
  for (int j = 0; j < n; ++j) x.at(i, j) -= acc[static_cast<std::size_t>(j)];
}

// rim = rm(w^{-1}).  Appending letter i to w maps rim to A(s_i)*rim.
IMat rim_from_word(const RootSystem& rs, const Word& letters) {
  IMat rim = IMat::identity(rs.rank());
  for (std::uint8_t i : letters) fold_left_rm(rim, rs.cartan(), i);
  return rim;
}

IMat rm_from_word(const RootSystem& rs, const Word& letters) {
  IMat rm = IMat::identity(rs.rank());
  for (std::uint8_t i : letters) fold_right_rm(rm, rs.cartan(), i);
  return rm;
}

// Greedy smallest left descent; consumes rim down to the identity.
Word peel_canonical(const RootSystem& rs, IMat rim) {
  Word out;
  const int n = rs.rank();
  for (;;) {
    int descent = -1;
    for (int i = 0; i < n; ++i)
      if (vec_has_negative(rim, i)) {
        descent = i;
        break;
      }
    if (descent < 0) return out;
    out.push_back(static_cast<std::uint8_t>(descent));
    // rim(s_i w) = rim(w) * A(s_i)
    fold_right_rm(rim, rs.cartan(), descent);
  }
}

std::uint8_t descent_mask_of_rm(const IMat& rm) {
  std::uint8_t mask = 0;
  for (int j = 0; j < rm.n; ++j)
    if (vec_has_negative(rm, j)) mask |= static_cast<std::uint8_t>(1u << j);
  return mask;
}

}  // namespace

Word canonicalize_word(const RootSystem& rs, const Word& letters) {
  return peel_canonical(rs, rim_from_word(rs, letters));
}

bool is_reduced(const RootSystem& rs, const Word& letters) {
  return canonicalize_word(rs, letters).size() == letters.size();
}

Word multiply(const RootSystem& rs, const Word& a, const Word& b) {
  Word ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return canonicalize_word(rs, ab);
}

Word inverse(const RootSystem& rs, const Word& a) {
  Word rev(a.rbegin(), a.rend());
  return canonicalize_word(rs, rev);
}

IVec act_on_root(const RootSystem& rs, const Word& w, IVec x) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = rs.reflect_root(*it, x);
  return x;
}

IVec act_on_weight(const RootSystem& rs, const Word& w, IVec m) {
  const IMat& c = rs.cartan();
  const int n = rs.rank();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const int i = *it;
    const std::int32_t mi = m[i];
    if (mi == 0) continue;
    for (int k = 0; k < n; ++k) m[k] -= mi * c.at(k, i);
  }
  return m;
}

std::uint8_t right_descent_mask(const RootSystem& rs, const Word& w) {
  return descent_mask_of_rm(rm_from_word(rs, w));
}

std::uint8_t left_descent_mask(const RootSystem& rs, const Word& w) {
  return descent_mask_of_rm(rim_from_word(rs, w));
}

IndexSet support(const Word& w) {
  IndexSet s;
  for (std::uint8_t i : w) s.add(i);
  return s;
}

int inversion_count(const RootSystem& rs, const Word& w) {
  int count = 0;
  for (const IVec& root : rs.positive_roots())
    if (!act_on_root(rs, w, root).all_nonneg()) ++count;
  return count;
}

int neg_simple_count(const RootSystem& rs, const Word& w) {
  int count = 0;
  for (int i = 0; i < rs.rank(); ++i)
    if (!act_on_root(rs, w, IVec::unit(rs.rank(), i)).all_nonneg()) ++count;
  return count;
}

bool is_min_coset_rep(const RootSystem& rs, const Word& w, IndexSet J) {
  for (int j : J.indices())
    if (!act_on_root(rs, w, IVec::unit(rs.rank(), j)).all_nonneg()) return false;
  return true;
}

Word longest_element(const RootSystem& rs, IndexSet K) {
  IMat rm = IMat::identity(rs.rank());
  Word raw;
  for (;;) {
    int ascent = -1;
    for (int i : K.indices())
      if (!vec_has_negative(rm, i)) {
        ascent = i;
        break;
      }
    if (ascent < 0) break;
    raw.push_back(static_cast<std::uint8_t>(ascent));
    fold_right_rm(rm, rs.cartan(), ascent);
  }
  return canonicalize_word(rs, raw);
}

Word random_reduced_word(const RootSystem& rs, const Word& w, SplitMix64& rng) {
  IMat rm = rm_from_word(rs, w);
  Word peeled;
  for (;;) {
    std::vector<int> descents;
    for (int j = 0; j < rs.rank(); ++j)
      if (vec_has_negative(rm, j)) descents.push_back(j);
    if (descents.empty()) break;
    const int j = descents[static_cast<std::size_t>(
        rng.below(static_cast<std::uint64_t>(descents.size())))];
    peeled.push_back(static_cast<std::uint8_t>(j));
    fold_right_rm(rm, rs.cartan(), j);
  }
  return Word(peeled.rbegin(), peeled.rend());
}

WeylEnumeration WeylEnumeration::build(const RootSystem& rs, IndexSet gens,
                                       std::uint64_t cap, int max_len) {
  struct Node {
    IMat rm;
    Word word;
    std::uint8_t rdesc;
  };

  WeylEnumeration en;
  en.gens_ = gens;

  if (gens == IndexSet::full(rs.rank()) && max_len < 0) {
    const std::uint64_t order = rs.weyl_order();
    if (order > cap)
      throw CapExceededError("enumeration of " + rs.label() + " needs " +
                             std::to_string(order) + " elements, above the cap of " +
                             std::to_string(cap));
  }

  std::vector<Node> layer;
  layer.push_back({IMat::identity(rs.rank()), {}, 0});
  std::uint64_t total = 0;

  const std::vector<int> gen_list = gens.indices();
  int current_len = 0;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(),
              [](const Node& a, const Node& b) { return a.word < b.word; });
    for (const Node& node : layer) {
      ++total;
      if (total > cap)
        throw CapExceededError("enumeration of " + rs.label() + " exceeds cap " +
                               std::to_string(cap));
      en.letters_.insert(en.letters_.end(), node.word.begin(), node.word.end());
      if (en.letters_.size() > 0xffffffffull)
        throw CapExceededError("enumeration of " + rs.label() + " exceeds word storage");
      en.offsets_.push_back(static_cast<std::uint32_t>(en.letters_.size()));
      en.rdesc_.push_back(node.rdesc);
    }
    if (max_len >= 0 && current_len >= max_len) break;

    std::vector<Node> next;
    std::unordered_map<IMat, std::size_t> seen;
    for (const Node& node : layer) {
      for (int i : gen_list) {
        if ((node.rdesc >> i) & 1u) continue;  // w s_i shorter
        IMat rm = node.rm;
        fold_right_rm(rm, rs.cartan(), i);
        auto [it, inserted] = seen.try_emplace(rm, next.size());
        if (!inserted) continue;
        Word word = node.word;
        word.push_back(static_cast<std::uint8_t>(i));
        next.push_back({rm, std::move(word), descent_mask_of_rm(rm)});
      }
    }
    layer = std::move(next);
    ++current_len;
  }
  return en;
}

WeylEnumeration WeylEnumeration::from_parts(const RootSystem& rs, IndexSet gens,
                                            std::vector<std::uint8_t> letters,
                                            std::vector<std::uint32_t> offsets,
                                            std::vector<std::uint8_t> rdesc) {
  if (offsets.empty() || offsets.front() != 0 || offsets.back() != letters.size() ||
      offsets.size() != rdesc.size() + 1)
    throw ValidationError("inconsistent enumeration data");
  WeylEnumeration en;
  en.gens_ = gens;
  en.letters_ = std::move(letters);
  en.offsets_ = std::move(offsets);
  en.rdesc_ = std::move(rdesc);
  Word prev;
  for (std::uint32_t k = 0; k < en.size(); ++k) {
    const Word w = en.word(k);
    for (std::uint8_t i : w)
      if (i >= static_cast<std::uint8_t>(rs.rank()) || !gens.contains(i))
        throw ValidationError("enumeration word uses letter outside the generator set");
    if (k > 0 && !(prev.size() < w.size() || (prev.size() == w.size() && prev < w)))
      throw ValidationError("enumeration data out of canonical order");
    prev = w;
  }
  return en;
}

Word WeylEnumeration::word(std::uint32_t k) const {
  return Word(letters_.begin() + offsets_[k], letters_.begin() + offsets_[k + 1]);
}

std::vector<std::uint64_t> WeylEnumeration::layer_sizes() const {
  std::vector<std::uint64_t> sizes;
  for (std::uint32_t k = 0; k < size(); ++k) {
    const std::size_t l = static_cast<std::size_t>(length(k));
    if (sizes.size() <= l) sizes.resize(l + 1, 0);
    ++sizes[l];
  }
  return sizes;
}

std::vector<std::uint32_t> min_coset_rep_indices(const WeylEnumeration& en, IndexSet J) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t k = 0; k < en.size(); ++k)
    if ((en.right_descents(k) & J.mask) == 0) out.push_back(k);
  return out;
}

}  // namespace twc
