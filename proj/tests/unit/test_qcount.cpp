#include <doctest.h>

#include <vector>

#include "twc/qcount.hpp"
#include "twc/rootsystem.hpp"
#include "twc/strata.hpp"
#include "twc/twist.hpp"
#include "twc/types.hpp"
#include "twc/weyl.hpp"

using namespace twc;

namespace {

WeylEnumeration full_enum(const RootSystem& rs) {
  return WeylEnumeration::build(rs, IndexSet::full(rs.rank()), kDefaultCap);
}

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
  const QPolynomial p{big({1, 2, 4})};
  CHECK(p.pretty() == "1 + 2q + 4q^2");
  CHECK(p.degree() == 2);
  CHECK(p.leading_coeff() == 4);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(9) == 0);
  CHECK(p.eval(1) == 7);
  CHECK(p.eval(2) == 21);

  CHECK(QPolynomial::zero().pretty() == "0");
  CHECK(!QPolynomial::zero().degree().has_value());
  CHECK(QPolynomial::one().pretty() == "1");
  CHECK(QPolynomial::monomial(3).pretty() == "q^3");
  CHECK(QPolynomial::monomial(1, 5).pretty() == "5q");
  CHECK((QPolynomial::monomial(1) - QPolynomial::monomial(0)).pretty() == "-1 + q");

  const QPolynomial q{big({0, 1})};
  CHECK((p + q).pretty() == "1 + 3q + 4q^2");
  CHECK((p - p).is_zero());
  CHECK((p * q).pretty() == "q + 2q^2 + 4q^3");
  CHECK((QPolynomial{big({1, 1})} * QPolynomial{big({1, 1})}).pretty() ==
        "1 + 2q + q^2");
  // Trailing zeros trim away.
  CHECK(QPolynomial{big({3, 0, 0})}.degree() == 0);
}

TEST_CASE("Poincare polynomials of small Weyl groups") {
  const RootSystem a1 = RootSystem::build({Family::A, 1});
  CHECK(poincare(full_enum(a1)).pretty() == "1 + q");
  const RootSystem a2 = RootSystem::build({Family::A, 2});
  CHECK(poincare(full_enum(a2)).pretty() == "1 + 2q + 2q^2 + q^3");
  const RootSystem b2 = RootSystem::build({Family::B, 2});
  CHECK(poincare(full_enum(b2)).pretty() == "1 + 2q + 2q^2 + 2q^3 + q^4");
}

TEST_CASE("Poincare polynomial of a parabolic") {
  const RootSystem a3 = RootSystem::build({Family::A, 3});
  IndexSet K;
  K.add(0);
  K.add(2);
  const WeylEnumeration sub = WeylEnumeration::build(a3, K, kDefaultCap);
  CHECK(poincare(sub).pretty() == "1 + 2q + q^2");
  IndexSet empty;
  CHECK(poincare(WeylEnumeration::build(a3, empty, kDefaultCap)).pretty() == "1");
}

TEST_CASE("Poincare evaluated at 1 gives the group order") {
  for (const auto& spec : std::vector<RootSystemSpec>{
           {Family::A, 3}, {Family::B, 4}, {Family::D, 4}, {Family::F, 4}}) {
    const RootSystem rs = RootSystem::build(spec);
    CHECK(poincare(full_enum(rs)).eval(1) == rs.weyl_order());
  }
}

TEST_CASE("frozen boundary point counts") {
  const RootSystem a1 = RootSystem::build({Family::A, 1});
  CHECK(boundary_count(a1, DiagramAut::identity(a1), full_enum(a1)).pretty() ==
        "1 + q");

  const RootSystem a2 = RootSystem::build({Family::A, 2});
  const WeylEnumeration en = full_enum(a2);
  CHECK(boundary_count(a2, DiagramAut::identity(a2), en).coeffs() ==
        big({1, 2, 4, 5, 4, 2}));
  CHECK(boundary_count(a2, DiagramAut::resolve(a2, "flip"), en).coeffs() ==
        big({1, 2, 4, 7, 8, 6, 2}));
}

TEST_CASE("degree and leading coefficient follow the component law") {
  for (const auto& [spec, twist] :
       std::vector<std::pair<RootSystemSpec, std::string>>{{{Family::A, 2}, "flip"},
                                                           {{Family::B, 3}, "identity"},
                                                           {{Family::D, 4}, "triality"},
                                                           {{Family::G, 2}, "identity"}}) {
    const RootSystem rs = RootSystem::build(spec);
    const DiagramAut aut = DiagramAut::resolve(rs, twist);
    const WeylEnumeration en = full_enum(rs);
    const QPolynomial count = boundary_count(rs, aut, en);
    const auto comps = irreducible_components(rs, aut);
    REQUIRE(!comps.empty());
    CHECK(count.degree() == comps[0].dim);
    CHECK(count.leading_coeff() == static_cast<long>(comps.size()));
    CHECK(count.coeff(0) == 1);
  }
}

TEST_CASE("the two boundary-count routes agree on every small type and twist") {
  for (const auto& spec : std::vector<RootSystemSpec>{
           {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
           {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::G, 2}}) {
    const RootSystem rs = RootSystem::build(spec);
    const WeylEnumeration en = full_enum(rs);
    for (const DiagramAut& aut : all_diagram_automorphisms(rs)) {
      CAPTURE(rs.label());
      const QPolynomial direct = boundary_second_factor(rs, aut, en);
      const QPolynomial mobius = boundary_second_factor_mobius(rs, aut);
      CHECK(direct == mobius);
    }
  }
}

TEST_CASE("boundary count at q = 1 factors as |W| times the full-support count") {
  const RootSystem a2 = RootSystem::build({Family::A, 2});
  const WeylEnumeration en = full_enum(a2);
  const DiagramAut id = DiagramAut::identity(a2);
  std::uint64_t full_supp = 0;
  for (std::size_t k = 0; k < en.size(); ++k)
    if (supp_sigma(id, en.word(static_cast<std::uint32_t>(k))) == IndexSet::full(2))
      ++full_supp;
  CHECK(boundary_count(a2, id, en).eval(1) == 6 * full_supp);
}
