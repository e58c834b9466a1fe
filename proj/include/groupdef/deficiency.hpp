#pragma once

#include <optional>
#include <string>
#include <vector>

#include "groupdef/coset_enum.hpp"
#include "groupdef/int_linalg.hpp"
#include "groupdef/presentation.hpp"

namespace groupdef {

// def(G) <= rk(H1(G)) - d(H2(G)).
long deficiency_upper_bound(const FinAbGroup& h1, const FinAbGroup& h2);

// Block counts realizing deficiency -n: m is the smallest positive integer
// with C(m,2) + floor(m/2) >= n, d = n - C(m,2), (r,s) = (-d,0) or (0,d),
// t = m - 2r - 2s.  The prime is left unset.
BlockCounts solve(long n);

// -(C(2r+2s+t, 2) + s - r), the deficiency of A^r x B^s x C^t.
long deficiency_of_counts(const BlockCounts& bc);

// The witness presentation of A^r x B^s x C^t for deficiency -n, factors
// ordered A, B, C; carries a pedigree annotation.
Presentation construct(unsigned long p, long n);

enum class CertifyMode { Table, Kunneth };

struct CertifyOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t h2_order_ceiling = 32;
};

// Bounds on def(G) for the group presented by P.  certified_value is set
// exactly when the bounds agree.  When an oracle fails (e.g. the coset
// limit in table mode) the certificate stays uncertified and carries the
// error; it never guesses.
struct DeficiencyCertificate {
  explicit DeficiencyCertificate(Presentation pres)
      : presentation(std::move(pres)) {}

  Presentation presentation;
  long lower_bound = 0;                 // generators - relators
  std::optional<long> upper_bound;      // rk(H1) - d(H2)
  std::optional<long> certified_value;
  std::string provenance;               // which H2 pipeline produced the bound
  std::string error;                    // set when the upper bound is missing

  bool certified() const { return certified_value.has_value(); }
  std::string to_string() const;
};

// Table mode enumerates the group and runs the bar-resolution oracle
// (OrderCeilingExceeded above the H2 ceiling).  Kunneth mode folds the
// block multipliers and needs the pedigree annotation (MissingPedigree).
DeficiencyCertificate certify(const Presentation& p, CertifyMode mode,
                              const CertifyOptions& options = {});

// A finite p-group of rank d has deficiency < -d^2/4 + d; returns whether
// the pair is consistent with that bound.
bool golod_shafarevich_consistent(long rank_d, long def_value);

// "-d^2/4 + d" as an exact rational string, e.g. "3/4".
std::string golod_shafarevich_bound_string(long rank_d);

struct FigureRow {
  long n = 0;
  BlockCounts counts;
  std::string label;  // e.g. "B×C²"
};

// Solver table for n = 0..max_n with rendered block-product labels.
std::vector<FigureRow> figure_one_table(unsigned long p, long max_n);

// "A^r×B^s×C^t" with unit exponents and empty factors omitted,
// exponents in superscript digits.
std::string block_product_label(const BlockCounts& bc);

}  // namespace groupdef
