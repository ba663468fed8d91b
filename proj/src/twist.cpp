#include "twc/twist.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace twc {

DiagramAut DiagramAut::validate(const RootSystem& rs, const std::vector<int>& one_line) {
  const int n = rs.rank();
  if (static_cast<int>(one_line.size()) != n)
    throw ValidationError("twist must list an image for each of the " + std::to_string(n) +
                          " simple roots");
  DiagramAut aut;
  aut.rank_ = n;
  std::array<bool, kMaxRank> hit{};
  for (int i = 0; i < n; ++i) {
    const int v = one_line[static_cast<std::size_t>(i)];
    if (v < 1 || v > n)
      throw ValidationError("twist image " + std::to_string(v) + " is outside 1.." +
                            std::to_string(n));
    if (hit[static_cast<std::size_t>(v - 1)])
      throw ValidationError("twist is not a bijection: image " + std::to_string(v) +
                            " repeats");
    hit[static_cast<std::size_t>(v - 1)] = true;
    aut.img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v - 1);
    aut.pre_[static_cast<std::size_t>(v - 1)] = static_cast<std::uint8_t>(i);
  }
  const IMat& c = rs.cartan();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c.at(aut.image(i), aut.image(j)) != c.at(i, j))
        throw ValidationError("twist does not preserve the Cartan matrix at (" +
                              std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");

  std::array<bool, kMaxRank> seen{};
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    IndexSet orbit;
    int j = i;
    do {
      orbit.add(j);
      seen[static_cast<std::size_t>(j)] = true;
      j = aut.image(j);
    } while (j != i);
    aut.orbits_.push_back(orbit);
  }
  return aut;
}

DiagramAut DiagramAut::identity(const RootSystem& rs) {
  std::vector<int> line(static_cast<std::size_t>(rs.rank()));
  std::iota(line.begin(), line.end(), 1);
  return validate(rs, line);
}

DiagramAut DiagramAut::resolve(const RootSystem& rs, const std::string& text) {
  const int n = rs.rank();
  if (text.empty() || text == "identity") return identity(rs);
  if (text == "flip") {
    std::vector<int> line(static_cast<std::size_t>(n));
    switch (rs.spec().family) {
      case Family::A:
        for (int i = 0; i < n; ++i) line[static_cast<std::size_t>(i)] = n - i;
        break;
      case Family::D:
        std::iota(line.begin(), line.end(), 1);
        std::swap(line[static_cast<std::size_t>(n - 2)], line[static_cast<std::size_t>(n - 1)]);
        break;
      case Family::E:
        if (n != 6)
          throw ValidationError("named twist 'flip' is not defined for " + rs.label());
        line = {6, 2, 5, 4, 3, 1};
        break;
      default:
        throw ValidationError("named twist 'flip' is not defined for " + rs.label());
    }
    return validate(rs, line);
  }
  if (text == "triality" || text == "triality2") {
    if (rs.spec().family != Family::D || n != 4)
      throw ValidationError("named twist '" + text + "' is only defined for D4");
    return validate(rs, text == "triality" ? std::vector<int>{3, 2, 4, 1}
                                           : std::vector<int>{4, 2, 1, 3});
  }
  std::vector<int> line;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      line.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse twist '" + text +
                            "': expected a name or a comma-separated permutation");
    }
  }
  return validate(rs, line);
}

bool DiagramAut::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    if (image(i) != i) return false;
  return true;
}

int DiagramAut::order() const {
  int ord = 1;
  for (const IndexSet& orbit : orbits_) ord = std::lcm(ord, orbit.size());
  return ord;
}

IndexSet DiagramAut::image_set(IndexSet s) const {
  IndexSet out;
  for (int i : s.indices()) out.add(image(i));
  return out;
}

IVec DiagramAut::omega_orbit(int j) const {
  if (j < 1 || j > num_orbits())
    throw ValidationError("orbit index " + std::to_string(j) + " is outside 1.." +
                          std::to_string(num_orbits()));
  IVec w = IVec::zero(rank_);
  for (int i : orbits_[static_cast<std::size_t>(j - 1)].indices()) w[i] = 1;
  return w;
}

IVec DiagramAut::permute_coords(const IVec& v) const {
  IVec out = IVec::zero(v.n);
  for (int i = 0; i < v.n; ++i) out[image(i)] = v[i];
  return out;
}

bool DiagramAut::fixes_weight(const IVec& weight_coords) const {
  return permute_coords(weight_coords) == weight_coords;
}

IMat DiagramAut::perm_matrix() const {
  IMat p{rank_, {}};
  for (int i = 0; i < rank_; ++i) p.at(image(i), i) = 1;
  return p;
}

std::vector<int> DiagramAut::one_line() const {
  std::vector<int> line(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) line[static_cast<std::size_t>(i)] = image(i) + 1;
  return line;
}

Word sigma_on_word(const DiagramAut& aut, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (std::uint8_t i : w) out.push_back(static_cast<std::uint8_t>(aut.image(i)));
  return out;
}

Word sigma_on_w(const RootSystem& rs, const DiagramAut& aut, const Word& w) {
  return canonicalize_word(rs, sigma_on_word(aut, w));
}

IndexSet supp_sigma(const DiagramAut& aut, const Word& w) {
  const IndexSet s = support(w);
  IndexSet out;
  for (const IndexSet& orbit : aut.orbits())
    if (!(orbit & s).empty()) out = out | orbit;
  return out;
}

std::vector<IndexSet> sigma_stable_subsets(const DiagramAut& aut) {
  const auto& orbits = aut.orbits();
  const int l = static_cast<int>(orbits.size());
  std::vector<IndexSet> out;
  out.reserve(1u << l);
  for (std::uint32_t pick = 0; pick < (1u << l); ++pick) {
    IndexSet k;
    for (int j = 0; j < l; ++j)
      if ((pick >> j) & 1u) k = k | orbits[static_cast<std::size_t>(j)];
    out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> twisted_coxeter_elements(const RootSystem& rs, const DiagramAut& aut) {
  const auto& orbits = aut.orbits();
  const std::size_t l = orbits.size();
  std::vector<std::vector<int>> choices;
  choices.reserve(l);
  for (const IndexSet& orbit : orbits) choices.push_back(orbit.indices());

  std::set<Word> seen;
  std::vector<std::size_t> pick(l, 0);
  for (;;) {
    Word base;
    for (std::size_t j = 0; j < l; ++j)
      base.push_back(static_cast<std::uint8_t>(choices[j][pick[j]]));
    std::sort(base.begin(), base.end());
    do {
      seen.insert(canonicalize_word(rs, base));
    } while (std::next_permutation(base.begin(), base.end()));

    std::size_t j = 0;
    while (j < l && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == l) break;
  }
  return std::vector<Word>(seen.begin(), seen.end());
}

std::vector<DiagramAut> all_diagram_automorphisms(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<DiagramAut> out;
  do {
    try {
      out.push_back(DiagramAut::validate(rs, line));
    } catch (const ValidationError&) {
    }
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

}  // namespace twc
