#include <cctype>
#include <set>
#include <string>
#include <unordered_map>

#include "groupdef/errors.hpp"
#include "groupdef/presentation.hpp"

namespace groupdef {

std::string presentation_to_json(const Presentation& p);  // json_io.cpp

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation run() {
    expect('<');
    std::vector<std::string> names;
    names.push_back(parse_name());
    while (peek() == ',') {
      ++pos_;
      names.push_back(parse_name());
    }
    for (std::size_t i = 0; i < names.size(); ++i)
      index_[names[i]] = static_cast<std::uint32_t>(i);
    if (index_.size() != names.size())
      throw ParseError("duplicate generator name", pos_);

    expect('|');
    std::vector<Word> relators;
    if (peek() != '>') {
      relators.push_back(parse_relator());
      while (peek() == ',') {
        ++pos_;
        relators.push_back(parse_relator());
      }
    }
    expect('>');
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return Presentation(std::move(names), std::move(relators));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string parse_name() {
    char c = peek();
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
      throw ParseError("expected a generator name", pos_);
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long parse_int() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected an integer", pos_);
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    try {
      return std::stol(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range", start);
    }
  }

  bool at_term_start() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(' || c == '[';
  }

  Word parse_term() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Word w = parse_word();
      expect(')');
      if (peek() == '^') {
        ++pos_;
        return w.pow(parse_int());
      }
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word u = parse_word();
      expect(',');
      Word v = parse_word();
      expect(']');
      return commutator(u, v);
    }
    std::size_t name_pos = pos_;
    std::string name = parse_name();
    auto it = index_.find(name);
    if (it == index_.end())
      throw ParseError("unknown generator '" + name + "'", name_pos);
    Word g = Word::generator(it->second);
    if (peek() == '^') {
      ++pos_;
      return g.pow(parse_int());
    }
    return g;
  }

  Word parse_word() {
    if (!at_term_start()) throw ParseError("expected a word", pos_);
    Word w = parse_term();
    while (true) {
      if (peek() == '*') {
        ++pos_;
        w = w * parse_term();
      } else if (at_term_start()) {
        w = w * parse_term();
      } else {
        return w;
      }
    }
  }

  Word parse_relator() {
    std::size_t start = pos_;
    Word left = parse_word();
    if (peek() == '=') {
      ++pos_;
      Word right = parse_word();
      left = left * right.inverse();
    }
    if (left.is_identity())
      throw ParseError("relator reduces to the identity word", start);
    return left;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::uint32_t> index_;
};

// GAP free-group variable that avoids the generator names.
std::string gap_free_group_var(const Presentation& p) {
  std::set<std::string> used(p.generator_names().begin(),
                             p.generator_names().end());
  std::string base = "F";
  if (!used.count(base)) return base;
  for (int i = 0;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

std::string render_text(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) out += ", ";
    out += p.generator_names()[i];
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (i) out += ", ";
    out += render_word(p.relators()[i], p.generator_names());
  }
  out += " >";
  return out;
}

std::string render_gap(const Presentation& p) {
  const std::string f = gap_free_group_var(p);
  std::string out = f + " := FreeGroup(";
  for (std::size_t i = 0; i < p.generator_count(); ++i) {
    if (i) out += ", ";
    out += "\"" + p.generator_names()[i] + "\"";
  }
  out += ");;";
  for (std::size_t i = 0; i < p.generator_count(); ++i)
    out += " " + p.generator_names()[i] + " := " + f + "." +
           std::to_string(i + 1) + ";;";
  out += " G := " + f + " / [ ";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    if (i) out += ", ";
    out += render_word(p.relators()[i], p.generator_names());
  }
  out += " ];; Print(Size(G), \"\\n\");";
  return out;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  return Parser(text).run();
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  const auto& letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    long exponent = static_cast<long>(j - i) * letters[i].sign;
    if (letters[i].gen >= names.size())
      throw InvalidArgument("word references an unnamed generator");
    if (!out.empty()) out += "*";
    out += names[letters[i].gen];
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

std::string render_presentation(const Presentation& p,
                                PresentationFormat format) {
  switch (format) {
    case PresentationFormat::Text: return render_text(p);
    case PresentationFormat::Gap: return render_gap(p);
    case PresentationFormat::Json: return presentation_to_json(p);
  }
  throw InvalidArgument("unknown presentation format");
}

}  // namespace groupdef
