#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace groupdef {

// One letter of a free-group word: generator index plus exponent sign.
struct Letter {
  std::uint32_t gen = 0;
  std::int32_t sign = +1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

// A freely reduced word in abstract generators.  The empty word is the
// identity.  Words are immutable; every constructor reduces.
class Word {
 public:
  Word() = default;

  static Word reduce(const std::vector<Letter>& raw);
  static Word generator(std::uint32_t gen, std::int32_t sign = +1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  // Smallest generator count that makes every index valid (max index + 1).
  std::uint32_t min_generator_count() const;

  Word inverse() const;
  Word pow(long k) const;

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// [u, v] = u^-1 v^-1 u v (fixed convention, as is u^v = v^-1 u v).
Word commutator(const Word& u, const Word& v);
Word conjugate(const Word& u, const Word& v);

// Signed count of each generator; the word's row in an abelianization
// matrix.  Throws InvalidArgument if an index is out of range.
std::vector<long> exponent_sums(const Word& w, std::size_t num_generators);

}  // namespace groupdef
