#ifndef TWC_JSON_IO_HPP
#define TWC_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twc/oracle.hpp"
#include "twc/qcount.hpp"
#include "twc/rootsystem.hpp"
#include "twc/strata.hpp"
#include "twc/twist.hpp"
#include "twc/types.hpp"
#include "twc/weyl.hpp"

namespace twc::io {

using json = nlohmann::ordered_json;

/// Subsets serialize as sorted 1-based index lists.
json subset_json(IndexSet s);
IndexSet subset_from_json(const json& j, int rank);

/// Words serialize as 1-based letter lists.
json word_json(const Word& w);
Word word_from_json(const json& j, int rank);

/// One-line permutation [sigma(1), ..., sigma(rank)].
json twist_json(const DiagramAut& aut);

/// {"family","rank","twist","kind"} header shared by list outputs.
json header_json(const RootSystem& rs, const DiagramAut& aut, const std::string& kind);

json root_system_json(const RootSystem& rs, const DiagramAut& aut);

json piece_json(const PieceDescriptor& p);
PieceDescriptor piece_from_json(const json& j, int rank);
json piece_list_json(const RootSystem& rs, const DiagramAut& aut, const std::string& kind,
                     const std::vector<PieceDescriptor>& pieces);

/// {"coeffs":[c0,c1,...]}; coefficients too wide for 64 bits are
/// emitted as decimal strings and parsed back from either form.
json polynomial_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const json& j);

json coset_reps_json(const RootSystem& rs, const DiagramAut& aut, IndexSet J,
                     const std::vector<Word>& reps);
json coxeter_list_json(const RootSystem& rs, const DiagramAut& aut,
                       const std::vector<Word>& elements);

/// {"check","cases","violations","seed"}.
json report_json(const Report& r);

/// Cached enumerations: one JSON file per (type, generator set).
std::string cache_file_name(const RootSystem& rs, IndexSet gens);
void save_enumeration(const std::string& dir, const RootSystem& rs,
                      const WeylEnumeration& en);
std::optional<WeylEnumeration> load_enumeration(const std::string& dir,
                                                const RootSystem& rs, IndexSet gens);

}  // namespace twc::io

#endif
