#include "twc/qcount.hpp"

#include <bit>

namespace twc {

QPolynomial QPolynomial::monomial(int exponent, BigInt coeff) {
  if (coeff == 0) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(exponent) + 1);
  c.back() = std::move(coeff);
  return QPolynomial(std::move(c));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> QPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

BigInt QPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

BigInt QPolynomial::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return QPolynomial(std::move(c));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (coeffs_.empty() || o.coeffs_.empty()) return {};
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return QPolynomial(std::move(c));
}

std::string QPolynomial::pretty() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    const BigInt& c = coeffs_[e];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_mag = (e == 0) || mag != 1;
    if (show_mag) out += mag.str();
    if (e >= 1) out += "q";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out;
}

QPolynomial poincare(const WeylEnumeration& en) {
  std::vector<BigInt> c;
  for (std::uint64_t size : en.layer_sizes()) c.emplace_back(size);
  return QPolynomial(std::move(c));
}

QPolynomial boundary_second_factor(const RootSystem& rs, const DiagramAut& aut,
                                   const WeylEnumeration& full) {
  const IndexSet all = IndexSet::full(rs.rank());
  const Word w0 = longest_element(rs, all);
  std::vector<BigInt> tally;
  for (std::uint32_t k = 0; k < full.size(); ++k) {
    const Word w = full.word(k);
    if (supp_sigma(aut, w) != all) continue;
    const Word u = multiply(rs, w0, w);
    const std::size_t exponent =
        u.size() + static_cast<std::size_t>(std::popcount(right_descent_mask(rs, u)));
    if (tally.size() <= exponent) tally.resize(exponent + 1);
    ++tally[exponent];
  }
  return QPolynomial(std::move(tally));
}

QPolynomial boundary_second_factor_mobius(const RootSystem& rs, const DiagramAut& aut,
                                          std::uint64_t cap) {
  const int n = rs.rank();
  const int big_n = rs.num_positive();
  const int l = aut.num_orbits();
  QPolynomial sum;
  for (const IndexSet& k_set : sigma_stable_subsets(aut)) {
    int orbits_inside = 0;
    for (const IndexSet& orbit : aut.orbits())
      if (orbit.subset_of(k_set)) ++orbits_inside;
    const BigInt sign = ((l - orbits_inside) % 2 == 0) ? 1 : -1;
    const WeylEnumeration en = WeylEnumeration::build(rs, k_set, cap);
    std::vector<BigInt> tally;
    for (std::uint32_t k = 0; k < en.size(); ++k) {
      const std::size_t exponent = static_cast<std::size_t>(
          (big_n - en.length(k)) + (n - std::popcount(en.right_descents(k))));
      if (tally.size() <= exponent) tally.resize(exponent + 1);
      tally[exponent] += sign;
    }
    sum += QPolynomial(std::move(tally));
  }
  return sum;
}

QPolynomial boundary_count(const RootSystem& rs, const DiagramAut& aut,
                           const WeylEnumeration& full) {
  return poincare(full) * boundary_second_factor(rs, aut, full);
}

}  // namespace twc
