#include "twc/rootsystem.hpp"

#include <algorithm>
#include <set>

namespace twc {

char family_letter(Family f) { return static_cast<char>(f); }

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default:
      throw ValidationError(std::string("unknown family letter '") + c + "'");
  }
}

bool height_lex_less(const IVec& a, const IVec& b) {
  const std::int64_t ha = a.sum(), hb = b.sum();
  if (ha != hb) return ha < hb;
  for (int i = 0; i < a.n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

void check_admissible(RootSystemSpec spec) {
  const int n = spec.rank;
  switch (spec.family) {
    case Family::A:
      if (n >= 1 && n <= kMaxRank) return;
      break;
    case Family::B:
      if (n >= 2 && n <= kMaxRank) return;
      break;
    case Family::C:
      if (n >= 2 && n <= kMaxRank) return;  // C2 doubles as B2
      break;
    case Family::D:
      if (n >= 4 && n <= kMaxRank) return;
      break;
    case Family::E:
      if (n >= 6 && n <= 8) return;
      break;
    case Family::F:
      if (n == 4) return;
      break;
    case Family::G:
      if (n == 2) return;
      break;
  }
  throw ValidationError("inadmissible type " + std::string(1, family_letter(spec.family)) +
                        std::to_string(n));
}

// Cartan matrix with entries C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki
// numbering. Built from the bond list; asymmetric bonds set explicitly.
IMat cartan_matrix(Family family, int n) {
  IMat c = IMat::identity(n);
  for (int i = 0; i < n; ++i) c.at(i, i) = 2;
  auto bond = [&](int i, int j) {  // 1-based simple bond
    c.at(i - 1, j - 1) = -1;
    c.at(j - 1, i - 1) = -1;
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      c.at(n - 1, n - 2) = -2;
      c.at(n - 2, n - 1) = -1;
      break;
    case Family::C:
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1);
      c.at(n - 2, n - 1) = -2;
      c.at(n - 1, n - 2) = -1;
      break;
    case Family::D:
      // Fork: nodes n-1 and n both attach to n-2.
      for (int i = 1; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 2, n - 1);
      bond(n - 2, n);
      break;
    case Family::E:
      // Chain 1-3-4-5-6(-7-8), node 2 attached to node 4.
      bond(1, 3);
      bond(3, 4);
      bond(4, 5);
      bond(5, 6);
      if (n >= 7) bond(6, 7);
      if (n >= 8) bond(7, 8);
      bond(2, 4);
      break;
    case Family::F:
      bond(1, 2);
      bond(3, 4);
      // alpha_3 short: <alpha_2, alpha_3^vee> = -2.
      c.at(2, 1) = -2;
      c.at(1, 2) = -1;
      break;
    case Family::G:
      // alpha_1 short: <alpha_2, alpha_1^vee> = -3.
      c.at(0, 1) = -3;
      c.at(1, 0) = -1;
      break;
  }
  return c;
}

}  // namespace

RootSystem RootSystem::build(RootSystemSpec spec) {
  check_admissible(spec);
  RootSystem rs;
  rs.spec_ = spec;
  rs.rank_ = spec.rank;
  // C2 and B2 name the same system; build it once from the B table.
  const Family internal =
      (spec.family == Family::C && spec.rank == 2) ? Family::B : spec.family;
  rs.cartan_ = cartan_matrix(internal, spec.rank);

  // Close the simple roots under the reflections, keeping positives.
  const int n = spec.rank;
  std::set<std::array<std::int32_t, kMaxRank>> seen;
  std::vector<IVec> queue;
  for (int i = 0; i < n; ++i) {
    IVec v = IVec::unit(n, i);
    seen.insert(v.c);
    queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const IVec x = queue[head];
    for (int i = 0; i < n; ++i) {
      IVec y = rs.reflect_root(i, x);
      if (!y.all_nonneg()) continue;
      if (seen.insert(y.c).second) queue.push_back(y);
    }
  }
  rs.positive_ = std::move(queue);
  std::sort(rs.positive_.begin(), rs.positive_.end(), height_lex_less);
  return rs;
}

IVec RootSystem::reflect_root(int i, const IVec& x) const {
  // s_i x = x - <x, alpha_i^vee> alpha_i; the pairing is row i of C times x.
  std::int64_t pair = 0;
  for (int j = 0; j < rank_; ++j) pair += static_cast<std::int64_t>(cartan_.at(i, j)) * x[j];
  IVec y = x;
  y[i] -= static_cast<std::int32_t>(pair);
  return y;
}

std::uint64_t RootSystem::weyl_order() const {
  const int n = rank_;
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  const Family internal =
      (spec_.family == Family::C && n == 2) ? Family::B : spec_.family;
  switch (internal) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (1ull << n) * fact(n);
    case Family::D: return (1ull << (n - 1)) * fact(n);
    case Family::E:
      if (n == 6) return 51840ull;
      if (n == 7) return 2903040ull;
      return 696729600ull;
    case Family::F: return 1152ull;
    case Family::G: return 12ull;
  }
  return 0;
}

std::string RootSystem::label() const {
  return std::string(1, family_letter(spec_.family)) + std::to_string(rank_);
}

}  // namespace twc
