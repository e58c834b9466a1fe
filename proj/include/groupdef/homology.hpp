#pragma once

#include "groupdef/coset_enum.hpp"
#include "groupdef/int_linalg.hpp"
#include "groupdef/presentation.hpp"

namespace groupdef {

// The degree-3 chain space grows cubically in |G|; B2 x C2 (order 32) is
// the largest group inside the default.
inline constexpr std::size_t kDefaultH2OrderCeiling = 32;

// Boundary maps of the normalized bar complex with trivial Z coefficients,
// degrees 1-3.  Chain bases are tuples of nonidentity elements; matrices
// act on column vectors (rows index the target basis).
struct BarComplexSlice {
  IntMatrix d1;  // 1 x (n-1), zero
  IntMatrix d2;  // (n-1) x (n-1)^2:   (g,h) -> (h) - (gh) + (g)
  IntMatrix d3;  // (n-1)^2 x (n-1)^3: (g,h,k) -> (h,k) - (gh,k) + (g,hk) - (g,h)
};

BarComplexSlice bar_complex(const GroupTable& gt);

// H1 = G^ab as the cokernel of the abelianization matrix.
FinAbGroup h1_from_presentation(const Presentation& p);

// H1 via the bar complex: ker d1 / im d2 = coker d2.
FinAbGroup h1_from_table(const GroupTable& gt);

// Schur multiplier H2 = ker d2 / im d3 via the bar complex.  Throws
// OrderCeilingExceeded above the ceiling; use the Kunneth pipeline there.
FinAbGroup h2_from_table(const GroupTable& gt,
                         std::size_t order_ceiling = kDefaultH2OrderCeiling);

// H2(G x H) = H2(G) + H2(H) + (H1(G) (x) H1(H)).
FinAbGroup h2_kunneth(const FinAbGroup& h2_g, const FinAbGroup& h2_h,
                      const FinAbGroup& h1_g, const FinAbGroup& h1_h);

// Known multipliers of the building blocks: trivial for A and C,
// (Z/p)^2 for B.  Re-derived from the bar-resolution oracle by the
// acceptance suite.
FinAbGroup block_h2(BlockKind kind, unsigned long p);

// H2 of A^r x B^s x C^t by folding the Kunneth formula over the factors.
FinAbGroup h2_of_block_product(unsigned long p, long r, long s, long t);

}  // namespace groupdef
