#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupdef/int_linalg.hpp"
#include "groupdef/words.hpp"

namespace groupdef {

enum class BlockKind { A, B, C };

const char* block_kind_name(BlockKind kind);

// Exponents (r, s, t) of a block product A^r x B^s x C^t, plus the trace
// values (m, d) recorded by the solver.  Also used as the pedigree
// annotation on constructed presentations.
struct BlockCounts {
  unsigned long p = 0;  // 0 = prime not fixed
  long r = 0;
  long s = 0;
  long t = 0;
  long trace_m = 0;  // 2r + 2s + t
  long trace_d = 0;  // s - r

  friend bool operator==(const BlockCounts&, const BlockCounts&) = default;
};

// A finite presentation: named generators and freely reduced, nonempty
// relator words.  Immutable after construction.
class Presentation {
 public:
  Presentation(std::vector<std::string> generator_names,
               std::vector<Word> relators,
               std::optional<unsigned long> prime = std::nullopt,
               std::optional<BlockCounts> pedigree = std::nullopt);

  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return names_.size(); }
  std::size_t relator_count() const { return relators_.size(); }
  const std::optional<unsigned long>& prime() const { return prime_; }
  const std::optional<BlockCounts>& pedigree() const { return pedigree_; }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::optional<unsigned long> prime_;
  std::optional<BlockCounts> pedigree_;
};

// Generators and relators only (annotations ignored); what the text format
// round-trips.
bool structurally_equal(const Presentation& a, const Presentation& b);

bool is_prime(unsigned long n);

// The three building blocks; equational relators are stored as
// left * right^-1 words.  B_2 is the special (a b)^2 / (a^-1 b)^2 form.
Presentation building_block(BlockKind kind, unsigned long p);

// <X | R> x <Y | S> = <X u Y | R, S, [x, y] for x in X, y in Y>.
// Commutator relators are ordered lexicographically by (x, y) index.
Presentation direct_product(const Presentation& p, const Presentation& q);

// k-fold direct power (left fold); k >= 1.
Presentation power_product(const Presentation& p, long k);

// Generator count minus relator count; a lower bound for def(G).
long presentation_deficiency(const Presentation& p);

// One row per relator, one column per generator, entries = exponent sums.
IntMatrix abelianization_matrix(const Presentation& p);

enum class PresentationFormat { Text, Json, Gap };

// Text grammar:
//   presentation := "<" name ("," name)* "|" [relator ("," relator)*] ">"
//   relator      := word | word "=" word
//   word         := term+              ("*" separators optional)
//   term         := name ["^" int] | "(" word ")" ["^" int]
//                 | "[" word "," word "]"
Presentation parse_presentation(std::string_view text);

std::string render_presentation(const Presentation& p,
                                PresentationFormat format = PresentationFormat::Text);

// Word in the text syntax, e.g. "b^-1*a*b*a^-4".
std::string render_word(const Word& w, const std::vector<std::string>& names);

}  // namespace groupdef
