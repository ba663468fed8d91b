#ifndef TWC_QCOUNT_HPP
#define TWC_QCOUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "twc/rootsystem.hpp"
#include "twc/twist.hpp"
#include "twc/types.hpp"
#include "twc/weyl.hpp"

namespace twc {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in q; coeffs[e] is the coefficient of q^e, with
/// trailing zeros trimmed (the zero polynomial has no coefficients).
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPolynomial zero() { return {}; }
  static QPolynomial one() { return monomial(0); }
  static QPolynomial monomial(int exponent, BigInt coeff = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<int> degree() const;
  BigInt leading_coeff() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }
  BigInt coeff(int exponent) const;

  BigInt eval(const BigInt& q) const;

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }

  bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// "1 + 2q + 4q^2" style; "0" for the zero polynomial.
  std::string pretty() const;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Sum of q^{l(w)} over the enumerated parabolic subgroup.
QPolynomial poincare(const WeylEnumeration& en);

/// Sum of q^{l(w0 w) + L(w0 w)} over w with supp_sigma(w) = I, each
/// exponent computed from the product w0*w itself.
QPolynomial boundary_second_factor(const RootSystem& rs, const DiagramAut& aut,
                                   const WeylEnumeration& full);

/// The same sum by inclusion-exclusion over sigma-stable K, using
/// l(w0 w) = N - l(w) and L(w0 w) = rank - L(w) on each W_K.
QPolynomial boundary_second_factor_mobius(const RootSystem& rs, const DiagramAut& aut,
                                          std::uint64_t cap = kDefaultCap);

/// Number of F_q-points of the Steinberg boundary: the Poincare
/// polynomial of W times the second factor.
QPolynomial boundary_count(const RootSystem& rs, const DiagramAut& aut,
                           const WeylEnumeration& full);

}  // namespace twc

#endif
