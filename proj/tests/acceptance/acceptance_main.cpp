// Acceptance gate: one PASS/FAIL line per criterion, exit code = number of
// failures.  Time limits are pinned here as constants.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "twc/oracle.hpp"
#include "twc/qcount.hpp"
#include "twc/rootsystem.hpp"
#include "twc/strata.hpp"
#include "twc/twist.hpp"
#include "twc/types.hpp"
#include "twc/weyl.hpp"

using namespace twc;

namespace {

constexpr double kWeightFixingBudgetSec = 10.0;
constexpr double kBoundaryIdentityBudgetSec = 30.0;
constexpr double kScaleBudgetSec = 300.0;
constexpr int kUnionLawPairs = 50;
constexpr int kSuppWitnessWords = 10;
constexpr std::uint64_t kAcceptanceSeed = kDefaultSeed;

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
public:
  Check() = default;

  void require(bool cond, const std::string& what) {
    if (!cond && failures_ < 8) {
      if (!detail_.empty()) detail_ += "; ";
      detail_ += what;
    }
    if (!cond) ++failures_;
  }

  Outcome finish(const std::string& ok_note) const {
    if (failures_ == 0) return {true, ok_note};
    std::ostringstream os;
    os << failures_ << " violation(s): " << detail_;
    return {false, os.str()};
  }

private:
  std::uint64_t failures_ = 0;
  std::string detail_;
};

std::vector<RootSystemSpec> types_up_to(int max_rank) {
  std::vector<RootSystemSpec> out;
  for (int r = 1; r <= max_rank; ++r) {
    out.push_back({Family::A, r});
    if (r >= 2) out.push_back({Family::B, r});
    if (r >= 3) out.push_back({Family::C, r});
    if (r >= 4) out.push_back({Family::D, r});
    if (r == 4) out.push_back({Family::F, r});
    if (r == 2) out.push_back({Family::G, r});
  }
  return out;
}

std::set<std::pair<std::uint16_t, Word>> label_set(const std::vector<PieceDescriptor>& v) {
  std::set<std::pair<std::uint16_t, Word>> out;
  for (const auto& p : v) out.insert({p.J.mask, p.word});
  return out;
}

std::string type_twist(const RootSystem& rs, const DiagramAut& aut) {
  std::string s = rs.label() + "/";
  for (std::size_t i = 0; i < aut.one_line().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(aut.one_line()[i]);
  }
  return s;
}

/// A random sigma-invariant dominant nonzero weight with orbit-constant
/// coordinates in 0..5.
IVec random_invariant_weight(const DiagramAut& aut, int rank, SplitMix64& rng) {
  for (;;) {
    IVec v = IVec::zero(rank);
    for (const IndexSet& orbit : aut.orbits()) {
      const int c = static_cast<int>(rng.below(6));
      for (int i : orbit.indices()) v[i] = c;
    }
    if (!v.is_zero()) return v;
  }
}

Outcome criterion1_weight_fixing() {
  Check check;
  std::uint64_t cases = 0;
  for (const RootSystemSpec spec : types_up_to(4)) {
    const RootSystem rs = RootSystem::build(spec);
    const WeylEnumeration full =
        WeylEnumeration::build(rs, IndexSet::full(rs.rank()), kDefaultCap);
    const Report report = run_check("weight-fixing", rs, DiagramAut::identity(rs), full,
                                    0, kAcceptanceSeed, kDefaultCap);
    cases += report.cases;
    check.require(report.ok(), rs.label() + " has weight-fixing violations");
    check.require(report.cases == full.size() * static_cast<std::uint64_t>(rs.rank()),
                  rs.label() + " did not cover all (w, i) pairs");
  }
  return check.finish("zero violations across " + std::to_string(cases) + " (w, i) pairs");
}

Outcome criterion2_boundary_identity() {
  Check check;
  std::uint64_t cases = 0;
  int sweeps = 0;
  for (const RootSystemSpec spec : types_up_to(4)) {
    const RootSystem rs = RootSystem::build(spec);
    const WeylEnumeration full =
        WeylEnumeration::build(rs, IndexSet::full(rs.rank()), kDefaultCap);
    for (const DiagramAut& aut : all_diagram_automorphisms(rs)) {
      const Report report =
          run_check("boundary-identity", rs, aut, full, 0, kAcceptanceSeed, kDefaultCap);
      cases += report.cases;
      ++sweeps;
      check.require(report.ok(), type_twist(rs, aut) + " boundary identity broken");
    }
  }
  return check.finish("boundary = intersection of orbit nilcones over " +
                      std::to_string(sweeps) + " (type, twist) sweeps, " +
                      std::to_string(cases) + " pieces");
}

Outcome criterion3_frozen_strata() {
  Check check;

  const RootSystem a1 = RootSystem::build({Family::A, 1});
  const WeylEnumeration a1full = WeylEnumeration::build(a1, IndexSet::full(1), kDefaultCap);
  const auto a1b = steinberg_boundary(a1, DiagramAut::identity(a1), a1full);
  check.require(a1b.size() == 1, "A1 boundary size");
  check.require(!a1b.empty() && a1b[0].J.empty() && a1b[0].word == Word{0},
                "A1 boundary is not {({}, s1)}");

  const RootSystem a2 = RootSystem::build({Family::A, 2});
  const WeylEnumeration a2full = WeylEnumeration::build(a2, IndexSet::full(2), kDefaultCap);
  const DiagramAut a2id = DiagramAut::identity(a2);
  const DiagramAut a2flip = DiagramAut::resolve(a2, "flip");

  check.require(steinberg_boundary(a2, a2id, a2full).size() == 5, "A2/id boundary size");
  const auto idc = irreducible_components(a2, a2id);
  check.require(idc.size() == 2, "A2/id component count");
  for (const auto& c : idc) check.require(c.dim == 5, "A2/id component dim");

  check.require(steinberg_boundary(a2, a2flip, a2full).size() == 9,
                "A2/flip boundary size");
  const auto flc = irreducible_components(a2, a2flip);
  check.require(flc.size() == 2, "A2/flip component count");
  for (const auto& c : flc) check.require(c.dim == 6, "A2/flip component dim");

  return check.finish("A1/id, A2/id, A2/flip boundary sizes and component dims exact");
}

Outcome criterion4_polynomials() {
  Check check;

  const RootSystem a1 = RootSystem::build({Family::A, 1});
  const WeylEnumeration a1full = WeylEnumeration::build(a1, IndexSet::full(1), kDefaultCap);
  check.require(boundary_count(a1, DiagramAut::identity(a1), a1full) ==
                    QPolynomial(std::vector<BigInt>{1, 1}),
                "A1/id count != 1+q");

  const RootSystem a2 = RootSystem::build({Family::A, 2});
  const WeylEnumeration a2full = WeylEnumeration::build(a2, IndexSet::full(2), kDefaultCap);
  check.require(boundary_count(a2, DiagramAut::identity(a2), a2full) ==
                    QPolynomial(std::vector<BigInt>{1, 2, 4, 5, 4, 2}),
                "A2/id count mismatch");

  const QPolynomial factor1(std::vector<BigInt>{1, 2, 2, 1});
  const QPolynomial factor2(std::vector<BigInt>{1, 0, 2, 2});
  check.require(boundary_count(a2, DiagramAut::resolve(a2, "flip"), a2full) ==
                    factor1 * factor2,
                "A2/flip count != (1+2q+2q^2+q^3)(1+2q^2+2q^3)");

  int route_pairs = 0;
  for (const RootSystemSpec spec : types_up_to(4)) {
    const RootSystem rs = RootSystem::build(spec);
    const WeylEnumeration full =
        WeylEnumeration::build(rs, IndexSet::full(rs.rank()), kDefaultCap);
    for (const DiagramAut& aut : all_diagram_automorphisms(rs)) {
      const QPolynomial direct = boundary_second_factor(rs, aut, full);
      const QPolynomial mobius = boundary_second_factor_mobius(rs, aut);
      check.require(direct == mobius, type_twist(rs, aut) + " routes disagree");
      ++route_pairs;
    }
  }
  return check.finish("frozen polynomials exact; both routes agree on " +
                      std::to_string(route_pairs) + " (type, twist) cases");
}

Outcome criterion5_degree_laws() {
  Check check;
  int swept = 0;
  for (const RootSystemSpec spec : types_up_to(4)) {
    const RootSystem rs = RootSystem::build(spec);
    const WeylEnumeration full =
        WeylEnumeration::build(rs, IndexSet::full(rs.rank()), kDefaultCap);
    for (const DiagramAut& aut : all_diagram_automorphisms(rs)) {
      const QPolynomial count = boundary_count(rs, aut, full);
      const auto comps = irreducible_components(rs, aut);
      const int expected_degree = rs.dim_g() - aut.num_orbits() - 1;
      check.require(count.degree().has_value() && *count.degree() == expected_degree,
                    type_twist(rs, aut) + " degree law");
      check.require(count.leading_coeff() == static_cast<long>(comps.size()),
                    type_twist(rs, aut) + " leading coefficient law");
      ++swept;
    }
  }
  return check.finish("degree = dimG - l - 1 and leading coeff = #components on " +
                      std::to_string(swept) + " (type, twist) cases");
}

Outcome criterion6_union_law() {
  Check check;
  std::uint64_t pairs = 0;
  for (const RootSystemSpec spec : types_up_to(4)) {
    const RootSystem rs = RootSystem::build(spec);
    const WeylEnumeration full =
        WeylEnumeration::build(rs, IndexSet::full(rs.rank()), kDefaultCap);
    for (const DiagramAut& aut : all_diagram_automorphisms(rs)) {
      SplitMix64 rng(kAcceptanceSeed ^ (static_cast<std::uint64_t>(spec.rank) << 8) ^
                     static_cast<std::uint64_t>(family_letter(spec.family)));
      for (int t = 0; t < kUnionLawPairs; ++t) {
        const IVec lambda = random_invariant_weight(aut, rs.rank(), rng);
        const IVec mu = random_invariant_weight(aut, rs.rank(), rng);
        const auto left = label_set(nilcone(rs, aut, full, lambda + mu));
        auto right = label_set(nilcone(rs, aut, full, lambda));
        const auto other = label_set(nilcone(rs, aut, full, mu));
        right.insert(other.begin(), other.end());
        check.require(left == right, type_twist(rs, aut) + " union law pair " +
                                         std::to_string(t));
        ++pairs;
      }
    }
  }
  return check.finish("nilcone(l+m) = nilcone(l) u nilcone(m) on " +
                      std::to_string(pairs) + " seeded pairs");
}

Outcome criterion7_structural() {
  Check check;

  // Braid relations, from the Cartan integers, on root-coordinate matrices.
  for (const RootSystemSpec spec : types_up_to(4)) {
    const RootSystem rs = RootSystem::build(spec);
    const int n = rs.rank();
    std::vector<IMat> gen;
    for (int i = 0; i < n; ++i) {
      IMat a = IMat::identity(n);
      for (int j = 0; j < n; ++j) a.at(i, j) -= rs.cartan().at(i, j);
      gen.push_back(a);
    }
    for (int i = 0; i < n; ++i) {
      check.require(gen[static_cast<std::size_t>(i)].mul(gen[static_cast<std::size_t>(i)]) ==
                        IMat::identity(n),
                    rs.label() + " involution s" + std::to_string(i + 1));
      for (int j = i + 1; j < n; ++j) {
        const int c = rs.cartan().at(i, j) * rs.cartan().at(j, i);
        const int m = c == 0 ? 2 : (c == 1 ? 3 : (c == 2 ? 4 : 6));
        IMat prod = IMat::identity(n);
        for (int t = 0; t < m; ++t)
          prod = prod.mul(gen[static_cast<std::size_t>(i)])
                     .mul(gen[static_cast<std::size_t>(j)]);
        check.require(prod == IMat::identity(n),
                      rs.label() + " braid (s" + std::to_string(i + 1) + ", s" +
                          std::to_string(j + 1) + ")^" + std::to_string(m));
      }
    }
  }

  for (const RootSystemSpec spec : types_up_to(3)) {
    const RootSystem rs = RootSystem::build(spec);
    const int n = rs.rank();
    const WeylEnumeration full =
        WeylEnumeration::build(rs, IndexSet::full(n), kDefaultCap);

    for (std::uint16_t mask = 0; mask < (1u << n); ++mask) {
      const IndexSet J{mask};
      const WeylEnumeration sub = WeylEnumeration::build(rs, J, kDefaultCap);
      check.require(min_coset_rep_indices(full, J).size() * sub.size() == full.size(),
                    rs.label() + " coset factorization at J mask " + std::to_string(mask));
    }

    const Word w0 = longest_element(rs, IndexSet::full(n));
    SplitMix64 rng(kAcceptanceSeed + 7);
    for (std::size_t k = 0; k < full.size(); ++k) {
      const Word w = full.word(static_cast<std::uint32_t>(k));
      const Word w0w = multiply(rs, w0, w);
      check.require(w0w.size() == static_cast<std::size_t>(rs.num_positive()) - w.size(),
                    rs.label() + " l(w0 w) != N - l(w)");
      const IndexSet supp_canonical = support(w);
      for (int t = 0; t < kSuppWitnessWords; ++t) {
        const Word alt = random_reduced_word(rs, w, rng);
        check.require(support(alt) == supp_canonical,
                      rs.label() + " supp depends on the reduced word");
      }
    }
  }
  return check.finish(
      "braid relations, coset factorizations, l(w0w) = N - l(w), supp invariance");
}

Outcome criterion8_scale() {
  Check check;
  const RootSystem e6 = RootSystem::build({Family::E, 6});
  const WeylEnumeration full = WeylEnumeration::build(e6, IndexSet::full(6), kDefaultCap);
  check.require(full.size() == 51840, "E6 enumeration size");
  std::uint64_t total_pieces = 0, total_boundary = 0;
  for (const std::string twist : {"identity", "flip"}) {
    const DiagramAut aut = DiagramAut::resolve(e6, twist);
    const auto pieces = enumerate_pieces(e6, aut, full);
    const auto boundary = steinberg_boundary(e6, aut, full);
    const QPolynomial count = boundary_count(e6, aut, full);
    total_pieces += pieces.size();
    total_boundary += boundary.size();
    check.require(pieces.size() > boundary.size(), "E6 " + twist + " boundary is proper");
    check.require(count.degree().has_value() &&
                      *count.degree() == e6.dim_g() - aut.num_orbits() - 1,
                  "E6 " + twist + " count degree");
  }
  return check.finish("E6 identity+flip pieces (" + std::to_string(total_pieces) +
                      ") and boundary (" + std::to_string(total_boundary) +
                      ") within the default cap");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    std::function<Outcome()> run;
    double budget_sec;  // 0 = no time limit
  };

  const std::vector<Criterion> criteria = {
      {1, "weight fixing is exhaustive at rank <= 4", criterion1_weight_fixing,
       kWeightFixingBudgetSec},
      {2, "boundary equals the intersection of orbit nilcones",
       criterion2_boundary_identity, kBoundaryIdentityBudgetSec},
      {3, "frozen stratification values", criterion3_frozen_strata, 0},
      {4, "frozen point-count polynomials and route agreement", criterion4_polynomials, 0},
      {5, "degree and leading-coefficient laws", criterion5_degree_laws, 0},
      {6, "nilcone union law on seeded weight pairs", criterion6_union_law, 0},
      {7, "structural Coxeter suite", criterion7_structural, 0},
      {8, "E6 scale run under the default cap", criterion8_scale, kScaleBudgetSec},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    bool ok = outcome.ok;
    if (c.budget_sec > 0 && elapsed > c.budget_sec) {
      ok = false;
      line << "criterion " << c.number << ": " << c.title << " -- exceeded "
           << c.budget_sec << "s budget (took " << elapsed << "s)";
    } else {
      line << "criterion " << c.number << ": " << c.title << " -- " << outcome.detail
           << " [" << elapsed << "s]";
    }
    std::cout << (ok ? "PASS " : "FAIL ") << line.str() << '\n';
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                              : "ACCEPTANCE: " + std::to_string(failures) + " failed")
            << '\n';
  return failures;
}
