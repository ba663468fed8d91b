#ifndef TWC_ORACLE_HPP
#define TWC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twc/rootsystem.hpp"
#include "twc/twist.hpp"
#include "twc/types.hpp"
#include "twc/weyl.hpp"

namespace twc {

struct Report {
  std::string check;
  std::uint64_t cases = 0;
  std::vector<nlohmann::ordered_json> violations;
  std::optional<std::uint64_t> seed;

  bool ok() const { return violations.empty(); }
};

/// For every w and i: w fixes omega_i iff i is outside supp(w), with
/// supp taken from a freshly peeled reduced word, not the cached one.
Report verify_weight_fixing(const RootSystem& rs, const WeylEnumeration& full);

/// For every J, every w in W^{sigma(J)}, and seeded random nonnegative
/// combinations x of {alpha_j : j in J}: ht(w sigma(x)) >= ht(x).
Report verify_height_inequality(const RootSystem& rs, const DiagramAut& aut,
                                const WeylEnumeration& full, int trials = 100,
                                std::uint64_t seed = kDefaultSeed);

/// steinberg_boundary equals the intersection of the nilcones of the
/// orbit weights omega_{C_1}, ..., omega_{C_l}, as label sets.
Report verify_boundary_identity(const RootSystem& rs, const DiagramAut& aut,
                                const WeylEnumeration& full,
                                std::uint64_t cap = kDefaultCap);

/// supp_sigma(w) is sigma-stable, w lies in the parabolic it generates
/// (weight-fixing route), and no proper sigma-stable subset contains a
/// freshly peeled supp(w).
Report verify_supp_minimality(const RootSystem& rs, const DiagramAut& aut,
                              const WeylEnumeration& full);

/// For every proper J, w in W^{sigma(J)}, and orbit C:
/// w omega_C != omega_C iff C meets a freshly peeled supp(w); and for
/// w = 1 the fixed-subdiagram condition holds exactly when C lies in J.
Report verify_orbit_dichotomy(const RootSystem& rs, const DiagramAut& aut,
                              const WeylEnumeration& full);

/// The check names accepted by run_check, in canonical order.
const std::vector<std::string>& verification_check_names();

/// Dispatch by check name; throws ValidationError on unknown names.
Report run_check(const std::string& name, const RootSystem& rs, const DiagramAut& aut,
                 const WeylEnumeration& full, int trials = 100,
                 std::uint64_t seed = kDefaultSeed, std::uint64_t cap = kDefaultCap);

}  // namespace twc

#endif
