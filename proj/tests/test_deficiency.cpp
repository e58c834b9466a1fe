#include <doctest.h>

#include "groupdef/deficiency.hpp"
#include "groupdef/errors.hpp"
#include "groupdef/homology.hpp"

using namespace groupdef;

namespace {

long choose2(long m) { return m * (m - 1) / 2; }

}  // namespace

TEST_SUITE_BEGIN("deficiency");

TEST_CASE("deficiency_upper_bound") {
  CHECK(deficiency_upper_bound(FinAbGroup::cyclic(2), FinAbGroup::trivial()) == 0);
  CHECK(deficiency_upper_bound(FinAbGroup::from_factors(0, {3, 3}),
                               FinAbGroup::from_factors(0, {3, 3})) == -2);
  CHECK(deficiency_upper_bound(FinAbGroup::free_abelian(2),
                               FinAbGroup::trivial()) == 2);
}

TEST_CASE("solve reproduces the worked examples") {
  BlockCounts bc5 = solve(5);
  CHECK(bc5.r == 1);
  CHECK(bc5.s == 0);
  CHECK(bc5.t == 2);
  CHECK(bc5.trace_m == 4);
  CHECK(bc5.trace_d == -1);

  BlockCounts bc7 = solve(7);
  CHECK(bc7.r == 0);
  CHECK(bc7.s == 1);
  CHECK(bc7.t == 2);
  CHECK(bc7.trace_m == 4);
  CHECK(bc7.trace_d == 1);

  BlockCounts bc0 = solve(0);
  CHECK(bc0.r == 0);
  CHECK(bc0.s == 0);
  CHECK(bc0.t == 1);
  CHECK(bc0.trace_m == 1);

  BlockCounts bc2 = solve(2);
  CHECK(bc2.s == 1);
  CHECK(bc2.t == 0);
  CHECK(bc2.trace_m == 2);

  BlockCounts bc4 = solve(4);
  CHECK(bc4.s == 1);
  CHECK(bc4.t == 1);
  CHECK(bc4.trace_m == 3);

  CHECK_THROWS_AS(solve(-1), InvalidArgument);
}

TEST_CASE("solve sweep: soundness, minimality, d-range") {
  for (long n = 0; n <= 2000; ++n) {
    BlockCounts bc = solve(n);
    const long m = bc.trace_m;
    CHECK(bc.r * bc.s == 0);
    CHECK(bc.t >= 0);
    CHECK(bc.r >= 0);
    CHECK(bc.s >= 0);
    CHECK(2 * bc.r + 2 * bc.s + bc.t == m);
    CHECK(choose2(m) + bc.s - bc.r == n);
    CHECK(deficiency_of_counts(bc) == -n);
    // minimality of m
    CHECK(choose2(m) + m / 2 >= n);
    if (m > 1) CHECK(choose2(m - 1) + (m - 1) / 2 < n);
    // d-range from the proof
    CHECK(bc.trace_d >= -(m / 2));
    CHECK(bc.trace_d <= m / 2);
  }
}

TEST_CASE("deficiency_of_counts") {
  CHECK(deficiency_of_counts(BlockCounts{0, 0, 0, 1, 1, 0}) == 0);
  CHECK(deficiency_of_counts(BlockCounts{0, 1, 0, 2, 4, -1}) == -5);
  // B_p^2: -(C(4,2) + 2) = -8, and the Kunneth pipeline agrees
  CHECK(deficiency_of_counts(BlockCounts{0, 0, 2, 0, 4, 2}) == -8);
  CHECK(min_generators(h2_of_block_product(2, 0, 2, 0)) == 8);
}

TEST_CASE("construct") {
  Presentation p25 = construct(2, 5);
  CHECK(p25.generator_count() == 4);
  CHECK(p25.relator_count() == 9);
  CHECK(presentation_deficiency(p25) == -5);
  REQUIRE(p25.pedigree().has_value());
  CHECK(p25.pedigree()->r == 1);
  CHECK(p25.pedigree()->t == 2);
  CHECK(p25.pedigree()->p == 2);

  CHECK(structurally_equal(construct(3, 0), building_block(BlockKind::C, 3)));

  Presentation p21 = construct(2, 1);
  CHECK(p21.generator_count() == 2);
  CHECK(p21.relator_count() == 3);
  CHECK(presentation_deficiency(p21) == -1);

  CHECK_THROWS_AS(construct(6, 3), InvalidArgument);

  // presentation deficiency always hits the target
  for (unsigned long p : {2ul, 5ul})
    for (long n : {0L, 1L, 2L, 3L, 8L, 13L, 21L})
      CHECK(presentation_deficiency(construct(p, n)) == -n);
}

TEST_CASE("certify via kunneth") {
  DeficiencyCertificate cert = certify(construct(2, 5), CertifyMode::Kunneth);
  CHECK(cert.certified());
  CHECK(cert.certified_value == -5);
  CHECK(cert.lower_bound == -5);
  CHECK(cert.upper_bound == -5);
  CHECK(cert.provenance.find("kunneth") != std::string::npos);

  // no pedigree: refuse rather than guess
  CHECK_THROWS_AS(certify(parse_presentation("< a | a^2 >"), CertifyMode::Kunneth),
                  MissingPedigree);
}

TEST_CASE("certify via table") {
  DeficiencyCertificate cert =
      certify(building_block(BlockKind::B, 2), CertifyMode::Table);
  CHECK(cert.certified());
  CHECK(cert.certified_value == -2);

  // infinite dihedral: coset limit becomes an uncertified interval
  CertifyOptions opts;
  opts.max_cosets = 1000;
  DeficiencyCertificate inf =
      certify(parse_presentation("< a, b | a^2, b^2 >"), CertifyMode::Table, opts);
  CHECK_FALSE(inf.certified());
  CHECK_FALSE(inf.upper_bound.has_value());
  CHECK(inf.lower_bound == 0);
  CHECK(inf.error.find("coset limit") != std::string::npos);
  CHECK(inf.to_string().find("[0, ?]") != std::string::npos);

  // order ceiling in table mode is an error, not a guess
  CertifyOptions tiny;
  tiny.h2_order_ceiling = 4;
  CHECK_THROWS_AS(
      certify(building_block(BlockKind::B, 2), CertifyMode::Table, tiny),
      OrderCeilingExceeded);

  // a deficiency gap: < a | a^2, a^3 > presents the trivial group,
  // lower = -1 < 0 = upper
  DeficiencyCertificate gap =
      certify(parse_presentation("< a | a^2, a^3 >"), CertifyMode::Table);
  CHECK_FALSE(gap.certified());
  CHECK(gap.lower_bound == -1);
  CHECK(gap.upper_bound == 0);
}

TEST_CASE("certification sweep (unit-sized)") {
  for (unsigned long p : {2ul, 3ul})
    for (long n = 0; n <= 30; ++n) {
      DeficiencyCertificate cert = certify(construct(p, n), CertifyMode::Kunneth);
      CHECK(cert.certified());
      CHECK(cert.certified_value == -n);
    }
}

TEST_CASE("golod_shafarevich_consistent") {
  CHECK(golod_shafarevich_consistent(2, -2));
  CHECK_FALSE(golod_shafarevich_consistent(4, 0));
  CHECK(golod_shafarevich_consistent(1, 0));
  CHECK(golod_shafarevich_bound_string(1) == "3/4");
  CHECK(golod_shafarevich_bound_string(2) == "1");
  CHECK(golod_shafarevich_bound_string(4) == "0");
  CHECK_THROWS_AS(golod_shafarevich_consistent(0, 0), InvalidArgument);

  // every constructed group passes with rank = generator count
  for (long n = 0; n <= 40; ++n) {
    Presentation p = construct(3, n);
    CHECK(golod_shafarevich_consistent(
        static_cast<long>(p.generator_count()), -n));
  }
}

TEST_CASE("figure_one_table") {
  std::vector<std::string> expected{"C",   "C²", "B",  "C³",
                                    "B×C", "A×C²", "C⁴", "B×C²"};
  std::vector<FigureRow> rows = figure_one_table(2, 7);
  REQUIRE(rows.size() == 8);
  for (std::size_t n = 0; n < rows.size(); ++n) {
    CHECK(rows[n].n == static_cast<long>(n));
    CHECK(rows[n].label == expected[n]);
  }
  // labels are prime-independent
  std::vector<FigureRow> rows5 = figure_one_table(5, 7);
  for (std::size_t n = 0; n < rows5.size(); ++n)
    CHECK(rows5[n].label == expected[n]);

  CHECK(block_product_label(solve(12)) == "B²×C");  // m=5, d=2
  CHECK_THROWS_AS(figure_one_table(9, 3), InvalidArgument);
}

TEST_SUITE_END();
