#include "groupdef/words.hpp"

#include <algorithm>

#include "groupdef/errors.hpp"

namespace groupdef {

Word Word::reduce(const std::vector<Letter>& raw) {
  Word w;
  w.letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.sign != +1 && l.sign != -1)
      throw InvalidArgument("letter sign must be +1 or -1");
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
        w.letters_.back().sign == -l.sign) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::generator(std::uint32_t gen, std::int32_t sign) {
  return reduce({Letter{gen, sign}});
}

std::uint32_t Word::min_generator_count() const {
  std::uint32_t n = 0;
  for (const Letter& l : letters_) n = std::max(n, l.gen + 1);
  return n;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(groupdef::inverse(*it));
  return w;
}

Word operator*(const Word& u, const Word& v) {
  // Both inputs are reduced, so cancellation only happens at the seam.
  Word w = u;
  for (const Letter& l : v.letters_) {
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen &&
        w.letters_.back().sign == -l.sign) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

Word Word::pow(long k) const {
  Word base = k < 0 ? inverse() : *this;
  unsigned long reps = k < 0 ? -static_cast<unsigned long>(k) : k;
  Word acc;
  for (unsigned long i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

Word commutator(const Word& u, const Word& v) {
  return u.inverse() * v.inverse() * u * v;
}

Word conjugate(const Word& u, const Word& v) { return v.inverse() * u * v; }

std::vector<long> exponent_sums(const Word& w, std::size_t num_generators) {
  std::vector<long> sums(num_generators, 0);
  for (const Letter& l : w.letters()) {
    if (l.gen >= num_generators)
      throw InvalidArgument("generator index " + std::to_string(l.gen) +
                            " out of range for " +
                            std::to_string(num_generators) + " generators");
    sums[l.gen] += l.sign;
  }
  return sums;
}

}  // namespace groupdef
