#include "groupdef/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "groupdef/errors.hpp"

namespace groupdef {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// a, b, ..., z, a1, b1, ..., z1, a2, ...
std::string nth_name(std::size_t k) {
  std::string s(1, static_cast<char>('a' + k % 26));
  if (k >= 26) s += std::to_string(k / 26);
  return s;
}

std::string fresh_name(const std::set<std::string>& used) {
  for (std::size_t k = 0;; ++k) {
    std::string s = nth_name(k);
    if (!used.count(s)) return s;
  }
}

Word shift_generators(const Word& w, std::uint32_t offset) {
  std::vector<Letter> letters = w.letters();
  for (Letter& l : letters) l.gen += offset;
  return Word::reduce(letters);
}

}  // namespace

const char* block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::A: return "A";
    case BlockKind::B: return "B";
    case BlockKind::C: return "C";
  }
  return "?";
}

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> relators,
                           std::optional<unsigned long> prime,
                           std::optional<BlockCounts> pedigree)
    : names_(std::move(generator_names)),
      relators_(std::move(relators)),
      prime_(prime),
      pedigree_(pedigree) {
  std::set<std::string> seen;
  for (const std::string& n : names_) {
    if (!valid_name(n))
      throw InvalidArgument("invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw InvalidArgument("duplicate generator name '" + n + "'");
  }
  for (const Word& w : relators_) {
    if (w.is_identity())
      throw InvalidArgument("relators must be nonempty words");
    if (w.min_generator_count() > names_.size())
      throw InvalidArgument("relator references generator index " +
                            std::to_string(w.min_generator_count() - 1) +
                            " but the presentation has only " +
                            std::to_string(names_.size()) + " generators");
  }
  if (prime_ && !is_prime(*prime_))
    throw InvalidArgument(std::to_string(*prime_) + " is not prime");
}

bool structurally_equal(const Presentation& a, const Presentation& b) {
  return a.generator_names() == b.generator_names() &&
         a.relators() == b.relators();
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Presentation building_block(BlockKind kind, unsigned long p) {
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  const long lp = static_cast<long>(p);
  const Word a = Word::generator(0);
  const Word b = Word::generator(1);

  std::vector<std::string> names;
  std::vector<Word> relators;
  BlockCounts pedigree;
  pedigree.p = p;

  switch (kind) {
    case BlockKind::A:
      // a^p = b^p,  a^b = a^(p+1)
      names = {"a", "b"};
      relators = {a.pow(lp) * b.pow(-lp),
                  conjugate(a, b) * a.pow(-(lp + 1))};
      pedigree.r = 1;
      break;
    case BlockKind::B:
      names = {"a", "b"};
      if (p == 2) {
        relators = {a.pow(4), b.pow(4), (a * b).pow(2),
                    (a.inverse() * b).pow(2)};
      } else {
        const Word c = commutator(a, b);
        relators = {a.pow(lp), b.pow(lp), commutator(c, a), commutator(c, b)};
      }
      pedigree.s = 1;
      break;
    case BlockKind::C:
      names = {"a"};
      relators = {a.pow(lp)};
      pedigree.t = 1;
      break;
  }
  pedigree.trace_m = 2 * pedigree.r + 2 * pedigree.s + pedigree.t;
  pedigree.trace_d = pedigree.s - pedigree.r;
  return Presentation(std::move(names), std::move(relators), p, pedigree);
}

Presentation direct_product(const Presentation& p, const Presentation& q) {
  const std::uint32_t nx = static_cast<std::uint32_t>(p.generator_count());
  const std::uint32_t ny = static_cast<std::uint32_t>(q.generator_count());

  std::vector<std::string> names = p.generator_names();
  std::set<std::string> used(names.begin(), names.end());
  for (const std::string& n : q.generator_names()) {
    std::string chosen = used.count(n) ? fresh_name(used) : n;
    used.insert(chosen);
    names.push_back(std::move(chosen));
  }

  std::vector<Word> relators = p.relators();
  for (const Word& w : q.relators())
    relators.push_back(shift_generators(w, nx));
  for (std::uint32_t i = 0; i < nx; ++i)
    for (std::uint32_t j = 0; j < ny; ++j)
      relators.push_back(
          commutator(Word::generator(i), Word::generator(nx + j)));

  std::optional<unsigned long> prime;
  if (p.prime() && q.prime() && *p.prime() == *q.prime()) prime = p.prime();

  std::optional<BlockCounts> pedigree;
  if (prime && p.pedigree() && q.pedigree() &&
      p.pedigree()->p == *prime && q.pedigree()->p == *prime) {
    BlockCounts bc;
    bc.p = *prime;
    bc.r = p.pedigree()->r + q.pedigree()->r;
    bc.s = p.pedigree()->s + q.pedigree()->s;
    bc.t = p.pedigree()->t + q.pedigree()->t;
    bc.trace_m = 2 * bc.r + 2 * bc.s + bc.t;
    bc.trace_d = bc.s - bc.r;
    pedigree = bc;
  }
  return Presentation(std::move(names), std::move(relators), prime, pedigree);
}

Presentation power_product(const Presentation& p, long k) {
  if (k < 1) throw InvalidArgument("power_product needs k >= 1");
  Presentation result = p;
  for (long i = 1; i < k; ++i) result = direct_product(result, p);
  return result;
}

long presentation_deficiency(const Presentation& p) {
  return static_cast<long>(p.generator_count()) -
         static_cast<long>(p.relator_count());
}

IntMatrix abelianization_matrix(const Presentation& p) {
  IntMatrix m(p.relator_count(), p.generator_count());
  for (std::size_t r = 0; r < p.relator_count(); ++r) {
    std::vector<long> sums =
        exponent_sums(p.relators()[r], p.generator_count());
    for (std::size_t c = 0; c < sums.size(); ++c)
      if (sums[c] != 0) m.set(r, c, sums[c]);
  }
  return m;
}

}  // namespace groupdef
