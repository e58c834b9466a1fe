#include "groupdef/homology.hpp"

#include "groupdef/errors.hpp"

namespace groupdef {

namespace {

void add_entry(IntMatrix& m, std::size_t r, std::size_t c, long delta) {
  m.set(r, c, m.at(r, c) + delta);
}

}  // namespace

BarComplexSlice bar_complex(const GroupTable& gt) {
  if (gt.identity != 0)
    throw InvalidArgument("bar complex expects identity at index 0");
  const std::size_t nn = gt.order - 1;  // nonidentity elements 1..order-1

  BarComplexSlice slice{IntMatrix(1, nn), IntMatrix(nn, nn * nn),
                        IntMatrix(nn * nn, nn * nn * nn)};

  auto i1 = [](std::size_t g) { return g - 1; };
  auto i2 = [nn](std::size_t g, std::size_t h) {
    return (g - 1) * nn + (h - 1);
  };

  for (std::size_t g = 1; g <= nn; ++g) {
    for (std::size_t h = 1; h <= nn; ++h) {
      const std::size_t c = i2(g, h);
      add_entry(slice.d2, i1(h), c, +1);
      const std::size_t gh = gt.product[g][h];
      if (gh != 0) add_entry(slice.d2, i1(gh), c, -1);
      add_entry(slice.d2, i1(g), c, +1);
    }
  }

  for (std::size_t g = 1; g <= nn; ++g) {
    for (std::size_t h = 1; h <= nn; ++h) {
      const std::size_t gh = gt.product[g][h];
      for (std::size_t k = 1; k <= nn; ++k) {
        const std::size_t c = (i2(g, h)) * nn + (k - 1);
        add_entry(slice.d3, i2(h, k), c, +1);
        if (gh != 0) add_entry(slice.d3, i2(gh, k), c, -1);
        const std::size_t hk = gt.product[h][k];
        if (hk != 0) add_entry(slice.d3, i2(g, hk), c, +1);
        add_entry(slice.d3, i2(g, h), c, -1);
      }
    }
  }
  return slice;
}

FinAbGroup h1_from_presentation(const Presentation& p) {
  return cokernel(abelianization_matrix(p));
}

FinAbGroup h1_from_table(const GroupTable& gt) {
  BarComplexSlice slice = bar_complex(gt);
  return homology_quotient(slice.d1, slice.d2);
}

FinAbGroup h2_from_table(const GroupTable& gt, std::size_t order_ceiling) {
  if (gt.order > order_ceiling)
    throw OrderCeilingExceeded(gt.order, order_ceiling);
  BarComplexSlice slice = bar_complex(gt);
  return homology_quotient(slice.d2, slice.d3);
}

FinAbGroup h2_kunneth(const FinAbGroup& h2_g, const FinAbGroup& h2_h,
                      const FinAbGroup& h1_g, const FinAbGroup& h1_h) {
  return direct_sum(h2_g, direct_sum(h2_h, tensor(h1_g, h1_h)));
}

FinAbGroup block_h2(BlockKind kind, unsigned long p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (kind == BlockKind::B)
    return FinAbGroup::from_factors(0, {mpz_class(p), mpz_class(p)});
  return FinAbGroup::trivial();
}

FinAbGroup h2_of_block_product(unsigned long p, long r, long s, long t) {
  if (r < 0 || s < 0 || t < 0)
    throw InvalidArgument("block exponents must be non-negative");
  if (r + s + t < 1) throw InvalidArgument("need at least one block factor");

  struct BlockData {
    FinAbGroup h1, h2;
    long count;
  };
  const BlockData blocks[] = {
      {h1_from_presentation(building_block(BlockKind::A, p)),
       block_h2(BlockKind::A, p), r},
      {h1_from_presentation(building_block(BlockKind::B, p)),
       block_h2(BlockKind::B, p), s},
      {h1_from_presentation(building_block(BlockKind::C, p)),
       block_h2(BlockKind::C, p), t},
  };

  bool first = true;
  FinAbGroup h1, h2;
  for (const BlockData& block : blocks) {
    for (long i = 0; i < block.count; ++i) {
      if (first) {
        h1 = block.h1;
        h2 = block.h2;
        first = false;
      } else {
        h2 = h2_kunneth(h2, block.h2, h1, block.h1);
        h1 = direct_sum(h1, block.h1);
      }
    }
  }
  return h2;
}

}  // namespace groupdef
