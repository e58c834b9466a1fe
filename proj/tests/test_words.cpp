#include <doctest.h>

#include <random>

#include "groupdef/errors.hpp"
#include "groupdef/words.hpp"

using namespace groupdef;

namespace {

const Letter A{0, +1}, Ai{0, -1}, B{1, +1}, Bi{1, -1};

Word random_word(std::mt19937_64& rng, std::size_t max_len, std::uint32_t ngens) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen(0, ngens - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Letter> raw;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i)
    raw.push_back({gen(rng), sign(rng) ? +1 : -1});
  return Word::reduce(raw);
}

}  // namespace

TEST_SUITE_BEGIN("words");

TEST_CASE("reduce") {
  CHECK(Word::reduce({}) == Word());
  CHECK(Word::reduce({A, Ai}) == Word());
  CHECK(Word::reduce({A, B, Bi, A}) == Word::reduce({A, A}));
  // nested cancellation
  CHECK(Word::reduce({A, B, Bi, Ai}) == Word());
}

TEST_CASE("invert") {
  CHECK(Word().inverse() == Word());
  CHECK(Word::reduce({A}).inverse() == Word::reduce({Ai}));
  CHECK(Word::reduce({A, Bi}).inverse() == Word::reduce({B, Ai}));
  Word w = Word::reduce({A, B, A});
  CHECK(w.inverse().inverse() == w);
  CHECK(w * w.inverse() == Word());
}

TEST_CASE("multiply") {
  Word w = Word::reduce({A, B});
  CHECK(Word() * w == w);
  CHECK(w * Word() == w);
  CHECK(Word::reduce({A}) * Word::reduce({Ai}) == Word());
  CHECK(Word::reduce({A}) * Word::reduce({B}) == Word::reduce({A, B}));
}

TEST_CASE("commutator") {
  Word w = Word::reduce({A, B, Ai});
  CHECK(commutator(w, w) == Word());
  CHECK(commutator(Word::reduce({A}), Word::reduce({B})) ==
        Word::reduce({Ai, Bi, A, B}));
  CHECK(commutator(Word(), Word::reduce({B})) == Word());
}

TEST_CASE("conjugate convention u^v = v^-1 u v") {
  CHECK(conjugate(Word::reduce({A}), Word::reduce({B})) ==
        Word::reduce({Bi, A, B}));
}

TEST_CASE("power") {
  Word a = Word::reduce({A});
  CHECK(a.pow(0) == Word());
  CHECK(a.pow(3) == Word::reduce({A, A, A}));
  CHECK(a.pow(-2) == Word::reduce({Ai, Ai}));
  Word ab = Word::reduce({A, B});
  CHECK(ab.pow(2) == Word::reduce({A, B, A, B}));
  CHECK(ab.pow(-1) == ab.inverse());
}

TEST_CASE("exponent_sums") {
  CHECK(exponent_sums(Word(), 2) == std::vector<long>{0, 0});
  CHECK(exponent_sums(commutator(Word::reduce({A}), Word::reduce({B})), 2) ==
        std::vector<long>{0, 0});
  CHECK(exponent_sums(Word::reduce({A}).pow(4), 2) == std::vector<long>{4, 0});
  CHECK_THROWS_AS(exponent_sums(Word::reduce({B}), 1), InvalidArgument);
}

TEST_CASE("properties on random words") {
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 500; ++i) {
    Word u = random_word(rng, 12, 3);
    Word v = random_word(rng, 12, 3);

    // reduce is idempotent
    CHECK(Word::reduce(u.letters()) == u);
    // w * w^-1 = 1
    CHECK(u * u.inverse() == Word());
    // exponent sums are a homomorphism
    auto su = exponent_sums(u, 3), sv = exponent_sums(v, 3);
    auto suv = exponent_sums(u * v, 3);
    for (int g = 0; g < 3; ++g) CHECK(suv[g] == su[g] + sv[g]);
    // commutators vanish in the abelianization
    CHECK(exponent_sums(commutator(u, v), 3) == std::vector<long>{0, 0, 0});
    // length never increases under reduction of a concatenation
    CHECK((u * v).length() <= u.length() + v.length());
  }
}

TEST_SUITE_END();
