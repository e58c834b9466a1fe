#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groupdef/presentation.hpp"
#include "groupdef/words.hpp"

namespace groupdef {

inline constexpr std::size_t kDefaultMaxCosets = std::size_t{1} << 16;

enum class EnumerationStrategy { Hlt, Felsch };

struct EnumerationOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  EnumerationStrategy strategy = EnumerationStrategy::Hlt;
};

// Coset table over the trivial subgroup.  Columns alternate generator and
// inverse: column 2g acts by generator g, column 2g+1 by its inverse.
// enumerate() returns closed, compacted tables: coset 0 is the subgroup
// coset, every entry is defined and each generator column is a permutation,
// so coset_count() equals the group order.
class CosetTable {
 public:
  CosetTable(std::size_t generator_count, std::vector<std::int32_t> entries);

  std::size_t generator_count() const { return ngens_; }
  std::size_t coset_count() const { return count_; }
  bool is_closed() const;

  std::int32_t entry(std::size_t coset, std::size_t column) const {
    return entries_[coset * 2 * ngens_ + column];
  }
  std::int32_t apply(std::int32_t coset, Letter l) const;
  std::int32_t apply(std::int32_t coset, const Word& w) const;

  // Row-major entries; byte-identical across repeated enumerations.
  const std::vector<std::int32_t>& flat() const { return entries_; }

 private:
  std::size_t ngens_;
  std::size_t count_;
  std::vector<std::int32_t> entries_;
};

// Todd-Coxeter enumeration of P over the trivial subgroup.  HLT with
// lookahead by default; a Felsch-style deduction-stack variant behind the
// strategy flag.  Deterministic.  Throws CosetLimitExceeded when the table
// cannot close within options.max_cosets.
CosetTable enumerate(const Presentation& p, const EnumerationOptions& options = {});

// Live-coset count of enumerate = |G|.
std::size_t order(const Presentation& p, const EnumerationOptions& options = {});

// Concrete finite group: the regular representation of a closed coset
// table.  Element 0 is the identity; element_words are representative
// words reconstructed from the table.
struct GroupTable {
  std::size_t order = 0;
  std::size_t identity = 0;
  std::vector<std::vector<std::uint32_t>> product;
  std::vector<std::uint32_t> inverse;
  std::vector<Word> element_words;
};

GroupTable multiplication_table(const CosetTable& table);

struct ValidationReport {
  bool ok = true;
  std::string failure;  // first counterexample when !ok
};

// Latin-square, identity, inverse and associativity checks; associativity
// is exhaustive for order <= 64 and deterministically sampled above.
ValidationReport validate_group(const GroupTable& gt);

}  // namespace groupdef
