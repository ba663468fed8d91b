#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twc/json_io.hpp"
#include "twc/oracle.hpp"
#include "twc/qcount.hpp"
#include "twc/rootsystem.hpp"
#include "twc/strata.hpp"
#include "twc/twist.hpp"
#include "twc/types.hpp"
#include "twc/weyl.hpp"

namespace {

using twc::io::json;

struct Options {
  std::optional<std::string> family;
  std::optional<int> rank;
  std::optional<std::string> twist;
  std::string format = "table";
  std::uint64_t cap = twc::kDefaultCap;
  std::uint64_t seed = twc::kDefaultSeed;
  std::string cache_dir;
  std::optional<std::string> weight;
  std::optional<std::string> subset;
  int max_rank = 3;
  std::string check = "all";
};

void add_common(CLI::App* cmd, Options& o, bool require_type) {
  auto* fam = cmd->add_option("-f,--family", o.family, "Type family, one of A..G");
  auto* rnk = cmd->add_option("-r,--rank", o.rank, "Rank of the root system");
  if (require_type) {
    fam->required();
    rnk->required();
  }
  cmd->add_option("-t,--twist", o.twist,
                  "Diagram automorphism: identity, flip, triality, triality2, or a "
                  "one-line permutation such as 2,1");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--cap", o.cap, "Enumeration cap (elements)");
  cmd->add_option("--seed", o.seed, "Seed for randomized checks");
  cmd->add_option("--cache-dir", o.cache_dir, "Directory memoizing Weyl enumerations");
}

twc::RootSystem make_root_system(const Options& o) {
  if (!o.family || !o.rank)
    throw twc::ValidationError("both --family and --rank are required here");
  if (o.family->size() != 1)
    throw twc::ValidationError("family must be a single letter A..G");
  return twc::RootSystem::build({twc::family_from_letter((*o.family)[0]), *o.rank});
}

twc::DiagramAut make_twist(const twc::RootSystem& rs, const Options& o) {
  return twc::DiagramAut::resolve(rs, o.twist.value_or("identity"));
}

twc::WeylEnumeration get_enumeration(const twc::RootSystem& rs, twc::IndexSet gens,
                                     const Options& o) {
  if (!o.cache_dir.empty()) {
    if (auto cached = twc::io::load_enumeration(o.cache_dir, rs, gens)) return *cached;
    twc::WeylEnumeration en = twc::WeylEnumeration::build(rs, gens, o.cap);
    twc::io::save_enumeration(o.cache_dir, rs, en);
    return en;
  }
  return twc::WeylEnumeration::build(rs, gens, o.cap);
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw twc::ValidationError("cannot parse " + what + " '" + text +
                                 "': expected comma-separated integers");
    }
  }
  return out;
}

twc::IndexSet parse_subset(const std::string& text, int rank) {
  twc::IndexSet s;
  for (int v : parse_int_list(text, "subset")) {
    if (v < 1 || v > rank)
      throw twc::ValidationError("subset index " + std::to_string(v) + " is outside 1.." +
                                 std::to_string(rank));
    s.add(v - 1);
  }
  return s;
}

twc::IVec parse_weight(const std::string& text, int rank) {
  const std::vector<int> coords = parse_int_list(text, "weight");
  if (static_cast<int>(coords.size()) != rank)
    throw twc::ValidationError("weight must have " + std::to_string(rank) +
                               " comma-separated coordinates");
  twc::IVec v = twc::IVec::zero(rank);
  for (int i = 0; i < rank; ++i) v[i] = coords[static_cast<std::size_t>(i)];
  return v;
}

std::string subset_str(twc::IndexSet s) {
  std::string out;
  for (int i : s.indices()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i + 1);
  }
  return out;
}

std::string word_str(const twc::Word& w) {
  std::string out;
  for (std::uint8_t i : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(static_cast<int>(i) + 1);
  }
  return out;
}

std::string twist_str(const twc::DiagramAut& aut) {
  std::string out;
  for (int v : aut.one_line()) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void print_table_header(const twc::RootSystem& rs, const twc::DiagramAut& aut,
                        const std::string& kind) {
  std::cout << "# kind: " << kind << '\n';
  std::cout << "# type: " << rs.label() << '\n';
  std::cout << "# twist: " << twist_str(aut) << '\n';
}

void emit_pieces(const twc::RootSystem& rs, const twc::DiagramAut& aut,
                 const std::string& kind, const std::vector<twc::PieceDescriptor>& pieces,
                 const std::string& format) {
  if (format == "json") {
    print_json(twc::io::piece_list_json(rs, aut, kind, pieces));
    return;
  }
  if (format == "csv") {
    std::cout << "J,w_word,length,dim\n";
    for (const auto& p : pieces)
      std::cout << subset_str(p.J) << ',' << word_str(p.word) << ',' << p.length << ','
                << p.dim << '\n';
    return;
  }
  print_table_header(rs, aut, kind);
  std::cout << "# count: " << pieces.size() << '\n';
  std::cout << "J\tw_word\tlength\tdim\n";
  for (const auto& p : pieces) {
    const std::string j = subset_str(p.J), w = word_str(p.word);
    std::cout << (j.empty() ? "-" : j) << '\t' << (w.empty() ? "-" : w) << '\t' << p.length
              << '\t' << p.dim << '\n';
  }
}

void emit_words(const twc::RootSystem& rs, const twc::DiagramAut& aut, const json& as_json,
                const std::vector<twc::Word>& words, const std::string& kind,
                const std::string& format) {
  if (format == "json") {
    print_json(as_json);
    return;
  }
  if (format == "csv") {
    std::cout << "w_word,length\n";
    for (const auto& w : words) std::cout << word_str(w) << ',' << w.size() << '\n';
    return;
  }
  print_table_header(rs, aut, kind);
  std::cout << "# count: " << words.size() << '\n';
  std::cout << "w_word\tlength\n";
  for (const auto& w : words) {
    const std::string s = word_str(w);
    std::cout << (s.empty() ? "-" : s) << '\t' << w.size() << '\n';
  }
}

void emit_polynomial(const twc::RootSystem& rs, const twc::DiagramAut& aut,
                     const std::string& kind, const twc::QPolynomial& p,
                     bool split_hypothesis, std::optional<twc::IndexSet> subset,
                     const std::string& format) {
  if (format == "json") {
    json out = twc::io::header_json(rs, aut, kind);
    if (subset) out["subset"] = twc::io::subset_json(*subset);
    if (split_hypothesis) out["split_hypothesis"] = true;
    out["polynomial"] = twc::io::polynomial_json(p);
    out["pretty"] = p.pretty();
    print_json(out);
    return;
  }
  if (format == "csv") {
    std::cout << "exponent,coeff\n";
    const auto& c = p.coeffs();
    for (std::size_t e = 0; e < c.size(); ++e)
      std::cout << e << ',' << c[e].str() << '\n';
    return;
  }
  print_table_header(rs, aut, kind);
  if (subset) std::cout << "# subset: " << subset_str(*subset) << '\n';
  if (split_hypothesis) std::cout << "# split_hypothesis: true\n";
  if (auto d = p.degree()) std::cout << "# degree: " << *d << '\n';
  std::cout << p.pretty() << '\n';
}

int run_rootsys_info(const Options& o) {
  const twc::RootSystem rs = make_root_system(o);
  const twc::DiagramAut aut = make_twist(rs, o);
  if (o.format == "json") {
    print_json(twc::io::root_system_json(rs, aut));
    return 0;
  }
  if (o.format == "csv") {
    std::cout << "height";
    for (int i = 1; i <= rs.rank(); ++i) std::cout << ",c" << i;
    std::cout << '\n';
    for (const auto& root : rs.positive_roots()) {
      std::cout << twc::RootSystem::height(root);
      for (int i = 0; i < rs.rank(); ++i) std::cout << ',' << root[i];
      std::cout << '\n';
    }
    return 0;
  }
  print_table_header(rs, aut, "root_system");
  std::cout << "label: " << rs.label() << '\n';
  std::cout << "rank: " << rs.rank() << '\n';
  std::cout << "positive roots: " << rs.num_positive() << '\n';
  std::cout << "dim G: " << rs.dim_g() << '\n';
  std::cout << "Weyl order: " << rs.weyl_order() << '\n';
  std::cout << "cartan:\n";
  for (int i = 0; i < rs.rank(); ++i) {
    std::cout << " ";
    for (int j = 0; j < rs.rank(); ++j) std::cout << ' ' << rs.cartan().at(i, j);
    std::cout << '\n';
  }
  std::cout << "positive roots (height, coords):\n";
  for (const auto& root : rs.positive_roots()) {
    std::cout << "  " << twc::RootSystem::height(root) << " ";
    for (int i = 0; i < rs.rank(); ++i) std::cout << ' ' << root[i];
    std::cout << '\n';
  }
  return 0;
}

int run_coset_reps(const Options& o) {
  const twc::RootSystem rs = make_root_system(o);
  const twc::DiagramAut aut = make_twist(rs, o);
  const twc::IndexSet J = parse_subset(o.subset.value_or(""), rs.rank());
  const twc::WeylEnumeration full = get_enumeration(rs, twc::IndexSet::full(rs.rank()), o);
  std::vector<twc::Word> reps;
  for (std::uint32_t k : twc::min_coset_rep_indices(full, J)) reps.push_back(full.word(k));
  emit_words(rs, aut, twc::io::coset_reps_json(rs, aut, J, reps), reps, "coset_reps",
             o.format);
  return 0;
}

int run_strata(const Options& o, const std::string& which) {
  const twc::RootSystem rs = make_root_system(o);
  const twc::DiagramAut aut = make_twist(rs, o);
  std::vector<twc::PieceDescriptor> pieces;
  std::string kind = which;
  if (which == "components") {
    kind = "irreducible_components";
    pieces = twc::irreducible_components(rs, aut);
  } else {
    const twc::WeylEnumeration full =
        get_enumeration(rs, twc::IndexSet::full(rs.rank()), o);
    if (which == "pieces") {
      pieces = twc::enumerate_pieces(rs, aut, full, o.cap);
    } else if (which == "boundary") {
      kind = "steinberg_boundary";
      pieces = twc::steinberg_boundary(rs, aut, full, o.cap);
    } else {
      kind = "nilcone";
      if (!o.weight) throw twc::ValidationError("--weight is required for nilcone");
      pieces = twc::nilcone(rs, aut, full, parse_weight(*o.weight, rs.rank()), o.cap);
    }
  }
  emit_pieces(rs, aut, kind, pieces, o.format);
  return 0;
}

int run_count(const Options& o, const std::string& which) {
  const twc::RootSystem rs = make_root_system(o);
  const twc::DiagramAut aut = make_twist(rs, o);
  if (which == "poincare") {
    const twc::IndexSet K = o.subset ? parse_subset(*o.subset, rs.rank())
                                     : twc::IndexSet::full(rs.rank());
    const twc::WeylEnumeration en = get_enumeration(rs, K, o);
    emit_polynomial(rs, aut, "poincare", twc::poincare(en), false, K, o.format);
    return 0;
  }
  const twc::WeylEnumeration full = get_enumeration(rs, twc::IndexSet::full(rs.rank()), o);
  emit_polynomial(rs, aut, "boundary_count", twc::boundary_count(rs, aut, full), true,
                  std::nullopt, o.format);
  return 0;
}

int run_coxeter(const Options& o) {
  const twc::RootSystem rs = make_root_system(o);
  const twc::DiagramAut aut = make_twist(rs, o);
  const std::vector<twc::Word> elements = twc::twisted_coxeter_elements(rs, aut);
  emit_words(rs, aut, twc::io::coxeter_list_json(rs, aut, elements), elements,
             "twisted_coxeter", o.format);
  return 0;
}

std::vector<twc::RootSystemSpec> admissible_types(int max_rank) {
  std::vector<twc::RootSystemSpec> out;
  for (int r = 1; r <= max_rank; ++r) {
    if (r >= 1) out.push_back({twc::Family::A, r});
    if (r >= 2) out.push_back({twc::Family::B, r});
    if (r >= 3) out.push_back({twc::Family::C, r});
    if (r >= 4) out.push_back({twc::Family::D, r});
    if (r >= 6 && r <= 8) out.push_back({twc::Family::E, r});
    if (r == 4) out.push_back({twc::Family::F, r});
    if (r == 2) out.push_back({twc::Family::G, r});
  }
  return out;
}

int run_verify(const Options& o) {
  std::vector<std::string> checks;
  if (o.check == "all") {
    checks = twc::verification_check_names();
  } else {
    const auto& names = twc::verification_check_names();
    if (std::find(names.begin(), names.end(), o.check) == names.end())
      throw twc::ValidationError("unknown verification check '" + o.check + "'");
    checks = {o.check};
  }

  std::vector<twc::RootSystemSpec> types;
  if (o.family || o.rank || o.twist) {
    if (!(o.family && o.rank))
      throw twc::ValidationError(
          "verify needs both --family and --rank when restricting the sweep");
    types = {make_root_system(o).spec()};
  } else {
    if (o.max_rank < 1 || o.max_rank > twc::kMaxRank)
      throw twc::ValidationError("--max-rank must be between 1 and " +
                                 std::to_string(twc::kMaxRank));
    types = admissible_types(o.max_rank);
  }

  json results = json::array();
  std::uint64_t total_cases = 0, total_violations = 0;
  const bool table = o.format == "table";
  const bool csv = o.format == "csv";
  if (table) std::cout << "check\ttype\ttwist\tcases\tviolations\tstatus\n";
  if (csv) std::cout << "check,family,rank,twist,cases,violations,seed,status\n";
  for (const twc::RootSystemSpec spec : types) {
    const twc::RootSystem rs = twc::RootSystem::build(spec);
    const twc::WeylEnumeration full =
        get_enumeration(rs, twc::IndexSet::full(rs.rank()), o);
    const std::vector<twc::DiagramAut> auts =
        o.twist ? std::vector<twc::DiagramAut>{make_twist(rs, o)}
                : twc::all_diagram_automorphisms(rs);
    for (const twc::DiagramAut& aut : auts) {
      for (const std::string& check : checks) {
        if (check == "weight-fixing" && !aut.is_identity()) continue;
        const twc::Report report =
            twc::run_check(check, rs, aut, full, 100, o.seed, o.cap);
        total_cases += report.cases;
        total_violations += report.violations.size();
        if (o.format == "json") {
          json entry{{"family", std::string(1, twc::family_letter(spec.family))},
                     {"rank", spec.rank},
                     {"twist", twc::io::twist_json(aut)}};
          entry["report"] = twc::io::report_json(report);
          results.push_back(std::move(entry));
        } else if (csv) {
          std::cout << report.check << ',' << twc::family_letter(spec.family) << ','
                    << spec.rank << ',' << twist_str(aut) << ',' << report.cases << ','
                    << report.violations.size() << ','
                    << (report.seed ? std::to_string(*report.seed) : "") << ','
                    << (report.ok() ? "ok" : "FAIL") << '\n';
        } else {
          std::cout << report.check << '\t' << rs.label() << '\t' << twist_str(aut) << '\t'
                    << report.cases << '\t' << report.violations.size() << '\t'
                    << (report.ok() ? "ok" : "FAIL") << '\n';
        }
      }
    }
  }
  if (o.format == "json") {
    json out{{"kind", "verify"},
             {"cases", total_cases},
             {"violations", total_violations},
             {"ok", total_violations == 0},
             {"results", std::move(results)}};
    print_json(out);
  } else if (table) {
    std::cout << "# total cases: " << total_cases << '\n';
    std::cout << "# total violations: " << total_violations << '\n';
  }
  return total_violations == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of twisted wonderful compactifications: G-stable pieces, "
               "Steinberg-fiber boundaries, nilpotent cones, twisted Coxeter elements, "
               "and point-count polynomials"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  CLI::App* rootsys = app.add_subcommand("rootsys", "Root-system data");
  CLI::App* rootsys_info = rootsys->add_subcommand("info", "Cartan matrix and roots");
  add_common(rootsys_info, o, true);
  rootsys_info->callback([&] { action = [&] { return run_rootsys_info(o); }; });

  CLI::App* weyl = app.add_subcommand("weyl", "Weyl group queries");
  CLI::App* coset = weyl->add_subcommand("coset-reps", "Minimal coset representatives W^J");
  add_common(coset, o, true);
  coset->add_option("--subset", o.subset, "J as comma-separated 1-based indices");
  coset->callback([&] { action = [&] { return run_coset_reps(o); }; });

  CLI::App* strata = app.add_subcommand("strata", "G-stable piece listings");
  for (const std::string which : {"pieces", "boundary", "components", "nilcone"}) {
    const std::string help =
        which == "pieces"       ? "All pieces (J, w)"
        : which == "boundary"   ? "Steinberg-fiber boundary pieces"
        : which == "components" ? "Irreducible components of the boundary"
                                : "Nilpotent-cone pieces for --weight";
    CLI::App* sub = strata->add_subcommand(which, help);
    add_common(sub, o, true);
    if (which == "nilcone")
      sub->add_option("--weight", o.weight,
                      "Dominant twist-invariant weight, fundamental coordinates");
    sub->callback([&, which] { action = [&, which] { return run_strata(o, which); }; });
  }

  CLI::App* count = app.add_subcommand("count", "Point-count polynomials");
  for (const std::string which : {"boundary", "poincare"}) {
    CLI::App* sub = count->add_subcommand(
        which, which == "boundary" ? "F_q-points of the Steinberg boundary"
                                   : "Poincare polynomial of W_K");
    add_common(sub, o, true);
    if (which == "poincare")
      sub->add_option("--subset", o.subset, "K as comma-separated 1-based indices");
    sub->callback([&, which] { action = [&, which] { return run_count(o, which); }; });
  }

  CLI::App* coxeter = app.add_subcommand("coxeter", "Twisted Coxeter elements");
  CLI::App* coxlist = coxeter->add_subcommand("list", "List twisted Coxeter elements");
  add_common(coxlist, o, true);
  coxlist->callback([&] { action = [&] { return run_coxeter(o); }; });

  CLI::App* verify = app.add_subcommand("verify", "Brute-force verification suite");
  add_common(verify, o, false);
  verify->add_option("check", o.check,
                     "Check name (weight-fixing, height-inequality, boundary-identity, "
                     "supp-minimality, orbit-dichotomy) or 'all'");
  verify->add_option("--max-rank", o.max_rank, "Largest rank to verify");
  verify->callback([&] { action = [&] { return run_verify(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const twc::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const twc::CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
