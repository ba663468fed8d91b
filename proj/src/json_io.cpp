#include "twc/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace twc::io {

json subset_json(IndexSet s) {
  json out = json::array();
  for (int i : s.indices()) out.push_back(i + 1);
  return out;
}

IndexSet subset_from_json(const json& j, int rank) {
  if (!j.is_array()) throw ValidationError("subset must be a JSON array");
  IndexSet s;
  for (const json& v : j) {
    const int i = v.get<int>();
    if (i < 1 || i > rank)
      throw ValidationError("subset index " + std::to_string(i) + " is outside 1.." +
                            std::to_string(rank));
    s.add(i - 1);
  }
  return s;
}

json word_json(const Word& w) {
  json out = json::array();
  for (std::uint8_t i : w) out.push_back(static_cast<int>(i) + 1);
  return out;
}

Word word_from_json(const json& j, int rank) {
  if (!j.is_array()) throw ValidationError("word must be a JSON array");
  Word w;
  for (const json& v : j) {
    const int i = v.get<int>();
    if (i < 1 || i > rank)
      throw ValidationError("word letter " + std::to_string(i) + " is outside 1.." +
                            std::to_string(rank));
    w.push_back(static_cast<std::uint8_t>(i - 1));
  }
  return w;
}

json twist_json(const DiagramAut& aut) {
  json out = json::array();
  for (int v : aut.one_line()) out.push_back(v);
  return out;
}

json header_json(const RootSystem& rs, const DiagramAut& aut, const std::string& kind) {
  return json{{"family", std::string(1, family_letter(rs.spec().family))},
              {"rank", rs.rank()},
              {"twist", twist_json(aut)},
              {"kind", kind}};
}

json root_system_json(const RootSystem& rs, const DiagramAut& aut) {
  json out = header_json(rs, aut, "root_system");
  out["label"] = rs.label();
  out["num_positive_roots"] = rs.num_positive();
  out["dim_g"] = rs.dim_g();
  out["weyl_order"] = rs.weyl_order();
  json cartan = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan().at(i, j));
    cartan.push_back(std::move(row));
  }
  out["cartan"] = std::move(cartan);
  json roots = json::array();
  for (const IVec& r : rs.positive_roots()) {
    json coords = json::array();
    for (int i = 0; i < r.n; ++i) coords.push_back(r[i]);
    roots.push_back(std::move(coords));
  }
  out["positive_roots"] = std::move(roots);
  return out;
}

json piece_json(const PieceDescriptor& p) {
  return json{{"J", subset_json(p.J)},
              {"w_word", word_json(p.word)},
              {"length", p.length},
              {"dim", p.dim}};
}

PieceDescriptor piece_from_json(const json& j, int rank) {
  PieceDescriptor p;
  p.J = subset_from_json(j.at("J"), rank);
  p.word = word_from_json(j.at("w_word"), rank);
  p.length = j.at("length").get<int>();
  p.dim = j.at("dim").get<int>();
  return p;
}

json piece_list_json(const RootSystem& rs, const DiagramAut& aut, const std::string& kind,
                     const std::vector<PieceDescriptor>& pieces) {
  json out = header_json(rs, aut, kind);
  out["count"] = pieces.size();
  json list = json::array();
  for (const PieceDescriptor& p : pieces) list.push_back(piece_json(p));
  out["pieces"] = std::move(list);
  return out;
}

namespace {

json bigint_json(const BigInt& v) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw ValidationError("polynomial coefficient '" + j.get<std::string>() +
                            "' is not a decimal integer");
    }
  }
  throw ValidationError("polynomial coefficient must be an integer or decimal string");
}

}  // namespace

json polynomial_json(const QPolynomial& p) {
  json coeffs = json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(bigint_json(c));
  return json{{"coeffs", std::move(coeffs)}};
}

QPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw ValidationError("polynomial JSON must be an object with a 'coeffs' array");
  std::vector<BigInt> coeffs;
  for (const json& c : j["coeffs"]) coeffs.push_back(bigint_from_json(c));
  return QPolynomial(std::move(coeffs));
}

namespace {

json word_list_json(const std::vector<Word>& words) {
  json list = json::array();
  for (const Word& w : words)
    list.push_back(json{{"w_word", word_json(w)}, {"length", w.size()}});
  return list;
}

}  // namespace

json coset_reps_json(const RootSystem& rs, const DiagramAut& aut, IndexSet J,
                     const std::vector<Word>& reps) {
  json out = header_json(rs, aut, "coset_reps");
  out["J"] = subset_json(J);
  out["count"] = reps.size();
  out["reps"] = word_list_json(reps);
  return out;
}

json coxeter_list_json(const RootSystem& rs, const DiagramAut& aut,
                       const std::vector<Word>& elements) {
  json out = header_json(rs, aut, "twisted_coxeter");
  out["num_orbits"] = aut.num_orbits();
  out["count"] = elements.size();
  out["elements"] = word_list_json(elements);
  return out;
}

json report_json(const Report& r) {
  json out{{"check", r.check}, {"cases", r.cases}};
  out["violations"] = json::array();
  for (const auto& v : r.violations) out["violations"].push_back(v);
  if (r.seed)
    out["seed"] = *r.seed;
  else
    out["seed"] = nullptr;
  return out;
}

std::string cache_file_name(const RootSystem& rs, IndexSet gens) {
  std::string name = rs.label();
  if (gens != IndexSet::full(rs.rank())) {
    name += "_K";
    for (int i : gens.indices()) name += std::to_string(i + 1);
    if (gens.empty()) name += "0";
  }
  return name + ".json";
}

void save_enumeration(const std::string& dir, const RootSystem& rs,
                      const WeylEnumeration& en) {
  std::filesystem::create_directories(dir);
  json out{{"family", std::string(1, family_letter(rs.spec().family))},
           {"rank", rs.rank()},
           {"subset", subset_json(en.generators())},
           {"count", en.size()}};
  json words = json::array();
  for (std::uint32_t k = 0; k < en.size(); ++k) {
    std::string s;
    for (std::uint8_t i : en.word(k)) s += static_cast<char>('1' + i);
    words.push_back(std::move(s));
  }
  out["words"] = std::move(words);
  const std::filesystem::path path =
      std::filesystem::path(dir) / cache_file_name(rs, en.generators());
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write cache file " + path.string());
  f << out.dump() << '\n';
}

std::optional<WeylEnumeration> load_enumeration(const std::string& dir,
                                                const RootSystem& rs, IndexSet gens) {
  const std::filesystem::path path =
      std::filesystem::path(dir) / cache_file_name(rs, gens);
  std::ifstream f(path);
  if (!f) return std::nullopt;
  json in;
  try {
    f >> in;
  } catch (const json::exception& e) {
    throw ValidationError("cannot parse cache file " + path.string() + ": " + e.what());
  }
  const auto fail = [&](const std::string& why) -> ValidationError {
    return ValidationError("cache file " + path.string() + ": " + why);
  };
  if (in.at("family").get<std::string>() != std::string(1, family_letter(rs.spec().family)) ||
      in.at("rank").get<int>() != rs.rank())
    throw fail("type mismatch");
  if (subset_from_json(in.at("subset"), rs.rank()) != gens) throw fail("subset mismatch");

  std::vector<std::uint8_t> letters;
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint8_t> rdesc;
  for (const json& wj : in.at("words")) {
    Word w;
    for (char c : wj.get<std::string>()) {
      if (c < '1' || c >= static_cast<char>('1' + rs.rank())) throw fail("bad word letter");
      w.push_back(static_cast<std::uint8_t>(c - '1'));
    }
    if (canonicalize_word(rs, w) != w) throw fail("word is not canonical");
    letters.insert(letters.end(), w.begin(), w.end());
    offsets.push_back(static_cast<std::uint32_t>(letters.size()));
    rdesc.push_back(right_descent_mask(rs, w));
  }
  WeylEnumeration en = WeylEnumeration::from_parts(rs, gens, std::move(letters),
                                                   std::move(offsets), std::move(rdesc));
  if (en.size() != in.at("count").get<std::uint64_t>()) throw fail("count mismatch");
  if (gens == IndexSet::full(rs.rank()) && en.size() != rs.weyl_order())
    throw fail("group order mismatch");
  return en;
}

}  // namespace twc::io
