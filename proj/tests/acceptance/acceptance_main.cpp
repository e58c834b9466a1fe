// Acceptance suite: one check per criterion, each printing a single
// PASS/FAIL line with its runtime and budget.  Exit code 0 iff every
// selected criterion passes.
//
// usage: groupdef_acceptance [criterion ...]     (default: all)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "groupdef/deficiency.hpp"
#include "groupdef/errors.hpp"
#include "groupdef/homology.hpp"
#include "support/oracles.hpp"

using namespace groupdef;
using nlohmann::json;

namespace {

struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

GroupTable table_of(const Presentation& p) {
  return multiplication_table(enumerate(p));
}

FinAbGroup elem(long p, int k) {
  return FinAbGroup::from_factors(0, std::vector<mpz_class>(k, p));
}

std::string run_cli_capture(const std::string& args, int& exit_code) {
  const std::string out_path = std::string(GROUPDEF_TMP_DIR) + "/acceptance_cli.out";
  const std::string cmd = std::string(GROUPDEF_CLI_PATH) + " " + args + " > " +
                          out_path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::remove(out_path.c_str());
  return ss.str();
}

// 1. Figure 1 reproduction via the CLI.
void criterion_figure_one(Checker& c) {
  int exit_code = 0;
  const std::string out =
      run_cli_capture("table -p 2 --max-n 7 --json --no-timings", exit_code);
  c.expect(exit_code == 0, "table command failed");
  if (!c.ok) return;
  const std::vector<std::string> expected{"C",   "C²",   "B",  "C³",
                                          "B×C", "A×C²", "C⁴", "B×C²"};
  json rows = json::parse(out).at("result").at("rows");
  c.expect(rows.size() == 8, "expected 8 rows");
  for (std::size_t n = 0; c.ok && n < expected.size(); ++n) {
    c.expect(rows[n].at("n") == static_cast<long>(n), "row order broken");
    c.expect(rows[n].at("label") == expected[n],
             "label mismatch at n=" + std::to_string(n) + ": got " +
                 rows[n].at("label").get<std::string>());
  }
}

// 2. Solver soundness sweep for n = 0..10000.
void criterion_solver_sweep(Checker& c) {
  for (long n = 0; n <= 10000 && c.ok; ++n) {
    BlockCounts bc = solve(n);
    const long m = bc.trace_m;
    const std::string at = " at n=" + std::to_string(n);
    c.expect(bc.r * bc.s == 0, "r*s != 0" + at);
    c.expect(bc.t >= 0 && bc.r >= 0 && bc.s >= 0, "negative count" + at);
    c.expect(2 * bc.r + 2 * bc.s + bc.t == m, "m mismatch" + at);
    c.expect(m * (m - 1) / 2 + bc.s - bc.r == n, "deficiency equation" + at);
    c.expect(m * (m - 1) / 2 + m / 2 >= n, "defining inequality" + at);
    if (m > 1)
      c.expect((m - 1) * (m - 2) / 2 + (m - 1) / 2 < n, "m not minimal" + at);
  }
}

// 3. Todd-Coxeter order oracle on the six blocks.
void criterion_orders(Checker& c) {
  const struct {
    BlockKind kind;
    unsigned long p;
    std::size_t expected;
  } cases[] = {
      {BlockKind::C, 2, 2},  {BlockKind::A, 2, 8},  {BlockKind::B, 2, 16},
      {BlockKind::C, 3, 3},  {BlockKind::A, 3, 27}, {BlockKind::B, 3, 27},
  };
  for (const auto& [kind, p, expected] : cases) {
    std::size_t got = order(building_block(kind, p));
    c.expect(got == expected,
             std::string(block_kind_name(kind)) + "_" + std::to_string(p) +
                 ": order " + std::to_string(got) + " != " +
                 std::to_string(expected));
  }
}

// 4. Schur multiplier oracle (B_3 at order 27 is the slow case).
void criterion_schur_oracle(Checker& c) {
  c.expect(h2_from_table(table_of(building_block(BlockKind::C, 2))).is_trivial(),
           "H2(C_2) not trivial");
  c.expect(h2_from_table(table_of(building_block(BlockKind::C, 3))).is_trivial(),
           "H2(C_3) not trivial");
  c.expect(h2_from_table(table_of(building_block(BlockKind::A, 2))).is_trivial(),
           "H2(A_2) not trivial");
  c.expect(h2_from_table(table_of(building_block(BlockKind::B, 2))) == elem(2, 2),
           "H2(B_2) != (Z/2)^2");
  c.expect(h2_from_table(table_of(building_block(BlockKind::B, 3))) == elem(3, 2),
           "H2(B_3) != (Z/3)^2");
}

// 5. Kunneth formula against the bar-resolution oracle.
void criterion_kunneth_crosscheck(Checker& c) {
  Presentation c2 = building_block(BlockKind::C, 2);
  FinAbGroup z2 = FinAbGroup::cyclic(2);

  FinAbGroup via_table = h2_from_table(table_of(direct_product(c2, c2)));
  FinAbGroup via_kunneth =
      h2_kunneth(FinAbGroup::trivial(), FinAbGroup::trivial(), z2, z2);
  c.expect(via_table == z2, "H2(C2 x C2) != Z/2 via table");
  c.expect(via_kunneth == z2, "H2(C2 x C2) != Z/2 via Kunneth");

  Presentation a2 = building_block(BlockKind::A, 2);
  FinAbGroup a2c2_table = h2_from_table(table_of(direct_product(a2, c2)));
  FinAbGroup a2c2_kunneth =
      h2_kunneth(FinAbGroup::trivial(), FinAbGroup::trivial(),
                 h1_from_presentation(a2), z2);
  c.expect(a2c2_table == a2c2_kunneth,
           "H2(A2 x C2): table and Kunneth pipelines disagree");
}

// 6. H1 oracle agreement.
void criterion_h1_agreement(Checker& c) {
  std::vector<Presentation> corpus;
  for (unsigned long p : {2ul, 3ul})
    for (BlockKind k : {BlockKind::A, BlockKind::B, BlockKind::C})
      corpus.push_back(building_block(k, p));
  corpus.push_back(power_product(building_block(BlockKind::C, 2), 2));
  corpus.push_back(power_product(building_block(BlockKind::C, 2), 3));
  for (const Presentation& p : corpus) {
    FinAbGroup from_pres = h1_from_presentation(p);
    FinAbGroup from_table = h1_from_table(table_of(p));
    c.expect(from_pres == from_table,
             "H1 disagreement on " + render_presentation(p));
  }
}

// 7. End-to-end certification, n = 0..100, p in {2, 3, 5}.
void criterion_certification(Checker& c) {
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    for (long n = 0; n <= 100 && c.ok; ++n) {
      Presentation witness = construct(p, n);
      DeficiencyCertificate cert = certify(witness, CertifyMode::Kunneth);
      c.expect(cert.certified() && cert.certified_value == -n,
               "certification failed at p=" + std::to_string(p) +
                   ", n=" + std::to_string(n));
    }
    BlockCounts bc5 = *construct(p, 5).pedigree();
    c.expect(bc5.r == 1 && bc5.s == 0 && bc5.t == 2, "n=5 is not A x C^2");
    BlockCounts bc7 = *construct(p, 7).pedigree();
    c.expect(bc7.r == 0 && bc7.s == 1 && bc7.t == 2, "n=7 is not B x C^2");
  }
}

// 8. Direct-product relator count law, 500 random block multisets.
void criterion_count_law(Checker& c) {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> prime_pick(0, 2);
  const unsigned long primes[] = {2, 3, 5};
  for (int trial = 0; trial < 500 && c.ok; ++trial) {
    const unsigned long p = primes[prime_pick(rng)];
    std::vector<Presentation> factors;
    std::size_t rank = 0;
    while (true) {
      Presentation b = building_block(static_cast<BlockKind>(kind(rng)), p);
      if (rank + b.generator_count() > 8) break;
      rank += b.generator_count();
      factors.push_back(std::move(b));
    }
    Presentation prod = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
      prod = direct_product(prod, factors[i]);

    std::size_t own = 0, cross = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      own += factors[i].relator_count();
      for (std::size_t j = i + 1; j < factors.size(); ++j)
        cross += factors[i].generator_count() * factors[j].generator_count();
    }
    c.expect(prod.relator_count() == own + cross,
             "relator count law fails at trial " + std::to_string(trial));
  }
}

// 9. Golod-Shafarevich screen.
void criterion_golod_shafarevich(Checker& c) {
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (long n = 0; n <= 60 && c.ok; ++n) {
      Presentation witness = construct(p, n);
      DeficiencyCertificate cert = certify(witness, CertifyMode::Kunneth);
      c.expect(cert.certified(), "uncertified witness");
      c.expect(golod_shafarevich_consistent(
                   static_cast<long>(witness.generator_count()),
                   *cert.certified_value),
               "GS screen fails at p=" + std::to_string(p) +
                   ", n=" + std::to_string(n));
    }
  c.expect(!golod_shafarevich_consistent(4, 0),
           "(d=4, def=0) must be flagged as a violation");
}

// 10. SNF engine on 1000 randomized matrices.
void criterion_snf(Checker& c) {
  std::mt19937_64 rng(1000003);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  std::uniform_int_distribution<long> entry(-50, 50);
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) {
        long v = entry(rng);
        if (v != 0) m.set(r, col, v);
      }
    SmithNormalForm snf = smith_normal_form(m, true);
    const std::string at = " at trial " + std::to_string(trial);

    for (std::size_t i = 0; i + 1 < snf.rank && c.ok; ++i)
      c.expect(snf.diagonal[i + 1] % snf.diagonal[i] == 0,
               "divisibility chain broken" + at);
    for (std::size_t i = 0; i < snf.diagonal.size() && c.ok; ++i)
      c.expect((i < snf.rank) == (snf.diagonal[i] > 0), "rank/diagonal" + at);

    IntMatrix d(m.rows(), m.cols());
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i)
      if (snf.diagonal[i] != 0) d.set(i, i, snf.diagonal[i]);
    c.expect(*snf.row_transform * m * *snf.col_transform == d,
             "U*M*V != D" + at);

    if (m.rows() == m.cols()) {
      mpz_class det = test::det_bareiss(m.to_dense());
      if (det != 0) {
        FinAbGroup g = cokernel(m);
        c.expect(g.is_finite() && g.order() == abs(det),
                 "|coker| != |det|" + at);
      }
    }
  }
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<void(Checker&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "figure-1 reproduction (table -p 2 --max-n 7)", 1.0, criterion_figure_one},
      {2, "solver soundness sweep n = 0..10000", 5.0, criterion_solver_sweep},
      {3, "Todd-Coxeter order oracle", 10.0, criterion_orders},
      {4, "Schur multiplier oracle (B_3 marked slow)", 600.0, criterion_schur_oracle},
      {5, "Kunneth cross-check", 300.0, criterion_kunneth_crosscheck},
      {6, "H1 oracle agreement", 60.0, criterion_h1_agreement},
      {7, "end-to-end certification n = 0..100", 5.0, criterion_certification},
      {8, "direct-product count law (500 cases)", 1.0, criterion_count_law},
      {9, "Golod-Shafarevich screen", 5.0, criterion_golod_shafarevich},
      {10, "SNF engine (1000 randomized matrices)", 10.0, criterion_snf},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all_ok = true;
  for (const Criterion& criterion : criteria()) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.number) ==
            selected.end())
      continue;

    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > criterion.budget_seconds)
      checker.expect(false, "over budget");

    std::printf("criterion %2d  %-48s %s  (%.2f s, budget %.0f s)\n",
                criterion.number, criterion.name,
                checker.ok ? "PASS" : "FAIL", seconds,
                criterion.budget_seconds);
    if (!checker.ok) {
      std::printf("              -> %s\n", checker.detail.c_str());
      all_ok = false;
    }
  }
  return all_ok ? 0 : 1;
}
