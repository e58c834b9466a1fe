#include "groupdef/json_io.hpp"

#include <json.hpp>

#include "groupdef/errors.hpp"

namespace groupdef {

using nlohmann::json;

namespace {

json word_to_json(const Word& w) {
  json letters = json::array();
  for (const Letter& l : w.letters())
    letters.push_back({l.gen, l.sign});
  return letters;
}

Word word_from_json(const json& j) {
  std::vector<Letter> letters;
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw InvalidArgument("relator letters must be [index, sign] pairs");
    letters.push_back(Letter{pair[0].get<std::uint32_t>(),
                             pair[1].get<std::int32_t>()});
  }
  return Word::reduce(letters);
}

json pedigree_to_json(const BlockCounts& bc) {
  return {{"p", bc.p},       {"r", bc.r},       {"s", bc.s},
          {"t", bc.t},       {"m", bc.trace_m}, {"d", bc.trace_d}};
}

BlockCounts pedigree_from_json(const json& j) {
  BlockCounts bc;
  bc.p = j.at("p").get<unsigned long>();
  bc.r = j.at("r").get<long>();
  bc.s = j.at("s").get<long>();
  bc.t = j.at("t").get<long>();
  bc.trace_m = j.at("m").get<long>();
  bc.trace_d = j.at("d").get<long>();
  return bc;
}

}  // namespace

std::string presentation_to_json(const Presentation& p) {
  json j;
  j["generators"] = p.generator_names();
  json relators = json::array();
  for (const Word& w : p.relators()) relators.push_back(word_to_json(w));
  j["relators"] = std::move(relators);
  if (p.prime()) j["prime"] = *p.prime();
  if (p.pedigree()) j["pedigree"] = pedigree_to_json(*p.pedigree());
  return j.dump();
}

Presentation presentation_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  try {
    std::vector<std::string> names =
        j.at("generators").get<std::vector<std::string>>();
    std::vector<Word> relators;
    for (const json& r : j.at("relators")) relators.push_back(word_from_json(r));
    std::optional<unsigned long> prime;
    if (j.contains("prime") && !j["prime"].is_null())
      prime = j["prime"].get<unsigned long>();
    std::optional<BlockCounts> pedigree;
    if (j.contains("pedigree") && !j["pedigree"].is_null())
      pedigree = pedigree_from_json(j["pedigree"]);
    return Presentation(std::move(names), std::move(relators), prime, pedigree);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("bad presentation JSON: ") + e.what());
  }
}

Presentation read_presentation(const std::string& content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return presentation_from_json(content);
    break;
  }
  return parse_presentation(content);
}

std::string group_table_to_json(const GroupTable& gt,
                                const std::vector<std::string>& names) {
  json j;
  j["order"] = gt.order;
  j["identity"] = gt.identity;
  j["product"] = gt.product;
  j["inverse"] = gt.inverse;
  json words = json::array();
  for (const Word& w : gt.element_words) words.push_back(render_word(w, names));
  j["words"] = std::move(words);
  return j.dump();
}

std::string int_matrix_to_json(const IntMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      entries.push_back({r, c, v.get_str()});
  json j{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
  return j.dump();
}

std::string finabgroup_to_json(const FinAbGroup& g) {
  json j;
  j["torsion_free_rank"] = g.torsion_free_rank();
  json factors = json::array();
  for (const mpz_class& f : g.invariant_factors()) factors.push_back(f.get_str());
  j["invariant_factors"] = std::move(factors);
  j["display"] = g.to_string();
  return j.dump();
}

}  // namespace groupdef
