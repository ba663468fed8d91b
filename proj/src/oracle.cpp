#include "twc/oracle.hpp"

#include <algorithm>

#include "twc/strata.hpp"

namespace twc {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kMaxStoredViolations = 100;

void add_violation(Report& r, ordered_json v) {
  if (r.violations.size() < kMaxStoredViolations) r.violations.push_back(std::move(v));
}

ordered_json one_based(const Word& w) {
  ordered_json out = ordered_json::array();
  for (std::uint8_t i : w) out.push_back(static_cast<int>(i) + 1);
  return out;
}

ordered_json one_based(IndexSet s) {
  ordered_json out = ordered_json::array();
  for (int i : s.indices()) out.push_back(i + 1);
  return out;
}

ordered_json coords_json(const IVec& v) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < v.n; ++i) out.push_back(v[i]);
  return out;
}

// Support from a reduced word obtained by repeatedly peeling the
// largest right descent; avoids the cached canonical words.
IndexSet peeled_support(const RootSystem& rs, const Word& w) {
  Word u = w;
  IndexSet s;
  for (;;) {
    const std::uint8_t mask = right_descent_mask(rs, u);
    if (mask == 0) return s;
    int j = rs.rank() - 1;
    while (((mask >> j) & 1u) == 0) --j;
    s.add(j);
    u = multiply(rs, u, Word{static_cast<std::uint8_t>(j)});
  }
}

std::vector<IndexSet> peeled_supports(const RootSystem& rs, const WeylEnumeration& full) {
  std::vector<IndexSet> out(full.size());
  for (std::uint32_t k = 0; k < full.size(); ++k) out[k] = peeled_support(rs, full.word(k));
  return out;
}

ordered_json piece_label_json(IndexSet J, const Word& w) {
  return ordered_json{{"J", one_based(J)}, {"w_word", one_based(w)}};
}

}  // namespace

Report verify_weight_fixing(const RootSystem& rs, const WeylEnumeration& full) {
  Report r{"weight-fixing", 0, {}, std::nullopt};
  const int n = rs.rank();
  for (std::uint32_t k = 0; k < full.size(); ++k) {
    const Word w = full.word(k);
    const IndexSet fresh = peeled_support(rs, w);
    for (int i = 0; i < n; ++i) {
      ++r.cases;
      const IVec omega = IVec::unit(n, i);
      const bool fixes = act_on_weight(rs, w, omega) == omega;
      if (fixes == fresh.contains(i)) {
        add_violation(r, ordered_json{{"w_word", one_based(w)},
                                      {"i", i + 1},
                                      {"fixes_omega_i", fixes},
                                      {"in_supp", fresh.contains(i)}});
      }
    }
  }
  return r;
}

Report verify_height_inequality(const RootSystem& rs, const DiagramAut& aut,
                                const WeylEnumeration& full, int trials,
                                std::uint64_t seed) {
  Report r{"height-inequality", 0, {}, seed};
  const int n = rs.rank();
  SplitMix64 rng(seed);
  for (std::uint16_t mask = 0; mask < (1u << n); ++mask) {
    const IndexSet J{mask};
    const std::vector<int> indices = J.indices();
    for (std::uint32_t k : min_coset_rep_indices(full, aut.image_set(J))) {
      const Word w = full.word(k);
      for (int t = 0; t < trials; ++t) {
        ++r.cases;
        IVec x = IVec::zero(n);
        for (int j : indices) x[j] = static_cast<std::int32_t>(rng.below(6));
        const IVec wsx = act_on_root(rs, w, aut.permute_coords(x));
        if (wsx.sum() < x.sum()) {
          add_violation(r, ordered_json{{"J", one_based(J)},
                                        {"w_word", one_based(w)},
                                        {"x", coords_json(x)},
                                        {"ht_x", x.sum()},
                                        {"ht_w_sigma_x", wsx.sum()}});
        }
      }
    }
  }
  return r;
}

Report verify_boundary_identity(const RootSystem& rs, const DiagramAut& aut,
                                const WeylEnumeration& full, std::uint64_t cap) {
  Report r{"boundary-identity", 0, {}, std::nullopt};
  r.cases = enumerate_pieces(rs, aut, full, cap).size();

  const std::vector<PieceDescriptor> boundary = steinberg_boundary(rs, aut, full, cap);
  std::vector<PieceDescriptor> meet = nilcone(rs, aut, full, aut.omega_orbit(1), cap);
  for (int j = 2; j <= aut.num_orbits(); ++j) {
    const std::vector<PieceDescriptor> next = nilcone(rs, aut, full, aut.omega_orbit(j), cap);
    std::vector<PieceDescriptor> kept;
    for (const PieceDescriptor& p : meet)
      if (std::find(next.begin(), next.end(), p) != next.end()) kept.push_back(p);
    meet = std::move(kept);
  }

  for (const PieceDescriptor& p : boundary)
    if (std::find(meet.begin(), meet.end(), p) == meet.end()) {
      ordered_json v = piece_label_json(p.J, p.word);
      v["side"] = "boundary_only";
      add_violation(r, std::move(v));
    }
  for (const PieceDescriptor& p : meet)
    if (std::find(boundary.begin(), boundary.end(), p) == boundary.end()) {
      ordered_json v = piece_label_json(p.J, p.word);
      v["side"] = "nilcone_intersection_only";
      add_violation(r, std::move(v));
    }
  return r;
}

Report verify_supp_minimality(const RootSystem& rs, const DiagramAut& aut,
                              const WeylEnumeration& full) {
  Report r{"supp-minimality", 0, {}, std::nullopt};
  const int n = rs.rank();
  const std::vector<IndexSet> stable = sigma_stable_subsets(aut);
  for (std::uint32_t k = 0; k < full.size(); ++k) {
    const Word w = full.word(k);
    const IndexSet s = supp_sigma(aut, w);
    const IndexSet fresh = peeled_support(rs, w);

    ++r.cases;
    if (!aut.is_stable(s))
      add_violation(r, ordered_json{{"w_word", one_based(w)},
                                    {"supp_sigma", one_based(s)},
                                    {"reason", "not sigma-stable"}});
    for (int j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      ++r.cases;
      const IVec omega = IVec::unit(n, j);
      if (act_on_weight(rs, w, omega) != omega)
        add_violation(r, ordered_json{{"w_word", one_based(w)},
                                      {"supp_sigma", one_based(s)},
                                      {"j", j + 1},
                                      {"reason", "moves omega_j outside supp_sigma"}});
    }
    for (const IndexSet& k_set : stable) {
      if (!(k_set.subset_of(s)) || k_set == s) continue;
      ++r.cases;
      if (fresh.subset_of(k_set))
        add_violation(r, ordered_json{{"w_word", one_based(w)},
                                      {"supp_sigma", one_based(s)},
                                      {"K", one_based(k_set)},
                                      {"reason", "proper stable subset contains supp"}});
    }
  }
  return r;
}

Report verify_orbit_dichotomy(const RootSystem& rs, const DiagramAut& aut,
                              const WeylEnumeration& full) {
  Report r{"orbit-dichotomy", 0, {}, std::nullopt};
  const int n = rs.rank();
  const std::vector<IndexSet> fresh = peeled_supports(rs, full);
  for (std::uint16_t mask = 0; mask + 1 < (1u << n); ++mask) {
    const IndexSet J{mask};
    for (std::uint32_t k : min_coset_rep_indices(full, aut.image_set(J))) {
      const Word w = full.word(k);
      for (int j = 1; j <= aut.num_orbits(); ++j) {
        const IndexSet orbit = aut.orbits()[static_cast<std::size_t>(j - 1)];
        const IVec omega = aut.omega_orbit(j);
        const bool moves_omega = act_on_weight(rs, w, omega) != omega;
        const bool meets_supp = !(fresh[k] & orbit).empty();

        ++r.cases;
        if (moves_omega != meets_supp)
          add_violation(r, ordered_json{{"J", one_based(J)},
                                        {"w_word", one_based(w)},
                                        {"orbit", one_based(orbit)},
                                        {"moves_omega_orbit", moves_omega},
                                        {"meets_supp", meets_supp}});

        if (w.empty()) {
          ++r.cases;
          bool fixes_all_alpha = true;
          for (int i : orbit.indices())
            if (act_on_root(rs, w, IVec::unit(n, i)) != IVec::unit(n, i))
              fixes_all_alpha = false;
          const bool cond2 = orbit.subset_of(J) && fixes_all_alpha;
          if (moves_omega || cond2 != orbit.subset_of(J))
            add_violation(r, ordered_json{{"J", one_based(J)},
                                          {"orbit", one_based(orbit)},
                                          {"reason", "identity case dichotomy"}});
        }
      }
    }
  }
  return r;
}

const std::vector<std::string>& verification_check_names() {
  static const std::vector<std::string> names = {
      "weight-fixing", "height-inequality", "boundary-identity", "supp-minimality",
      "orbit-dichotomy"};
  return names;
}

Report run_check(const std::string& name, const RootSystem& rs, const DiagramAut& aut,
                 const WeylEnumeration& full, int trials, std::uint64_t seed,
                 std::uint64_t cap) {
  if (name == "weight-fixing") return verify_weight_fixing(rs, full);
  if (name == "height-inequality")
    return verify_height_inequality(rs, aut, full, trials, seed);
  if (name == "boundary-identity") return verify_boundary_identity(rs, aut, full, cap);
  if (name == "supp-minimality") return verify_supp_minimality(rs, aut, full);
  if (name == "orbit-dichotomy") return verify_orbit_dichotomy(rs, aut, full);
  throw ValidationError("unknown verification check '" + name + "'");
}

}  // namespace twc
