#include "groupdef/deficiency.hpp"

#include <gmpxx.h>

#include "groupdef/errors.hpp"
#include "groupdef/homology.hpp"

namespace groupdef {

namespace {

long choose2(long m) { return m * (m - 1) / 2; }

std::string superscript(long k) {
  static const char* digits[] = {"⁰", "¹", "²", "³",
                                 "⁴", "⁵", "⁶", "⁷",
                                 "⁸", "⁹"};
  std::string plain = std::to_string(k), out;
  for (char c : plain) out += digits[c - '0'];
  return out;
}

}  // namespace

long deficiency_upper_bound(const FinAbGroup& h1, const FinAbGroup& h2) {
  return h1.torsion_free_rank() - min_generators(h2);
}

BlockCounts solve(long n) {
  if (n < 0) throw InvalidArgument("deficiency target must be non-negative");
  long m = 1;
  while (choose2(m) + m / 2 < n) ++m;
  const long d = n - choose2(m);

  BlockCounts bc;
  bc.r = d < 0 ? -d : 0;
  bc.s = d >= 0 ? d : 0;
  bc.t = m - 2 * bc.r - 2 * bc.s;
  bc.trace_m = m;
  bc.trace_d = d;
  return bc;
}

long deficiency_of_counts(const BlockCounts& bc) {
  const long m = 2 * bc.r + 2 * bc.s + bc.t;
  return -(choose2(m) + bc.s - bc.r);
}

Presentation construct(unsigned long p, long n) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  BlockCounts bc = solve(n);
  bc.p = p;

  std::optional<Presentation> acc;
  auto append = [&](BlockKind kind, long count) {
    for (long i = 0; i < count; ++i) {
      Presentation block = building_block(kind, p);
      acc = acc ? direct_product(*acc, block) : block;
    }
  };
  append(BlockKind::A, bc.r);
  append(BlockKind::B, bc.s);
  append(BlockKind::C, bc.t);

  // Re-stamp the annotations: the fold above merged pedigrees, but the
  // solver's trace values are authoritative.
  return Presentation(acc->generator_names(), acc->relators(), p, bc);
}

std::string DeficiencyCertificate::to_string() const {
  if (certified())
    return "certified deficiency " + std::to_string(*certified_value) + " (" +
           provenance + ")";
  std::string s = "uncertified: deficiency in [" + std::to_string(lower_bound) +
                  ", " + (upper_bound ? std::to_string(*upper_bound) : "?") +
                  "]";
  if (!error.empty()) s += " — " + error;
  return s;
}

DeficiencyCertificate certify(const Presentation& p, CertifyMode mode,
                              const CertifyOptions& options) {
  DeficiencyCertificate cert{p};
  cert.lower_bound = presentation_deficiency(p);

  if (mode == CertifyMode::Kunneth) {
    if (!p.pedigree())
      throw MissingPedigree(
          "kunneth certification needs a block-count pedigree");
    const BlockCounts& bc = *p.pedigree();
    FinAbGroup h1 = h1_from_presentation(p);
    FinAbGroup h2 = h2_of_block_product(bc.p, bc.r, bc.s, bc.t);
    cert.upper_bound = deficiency_upper_bound(h1, h2);
    cert.provenance =
        "kunneth: hardcoded block multipliers, re-derived from the "
        "bar-resolution oracle by the acceptance suite";
  } else {
    EnumerationOptions eopts;
    eopts.max_cosets = options.max_cosets;
    try {
      CosetTable ct = enumerate(p, eopts);
      GroupTable gt = multiplication_table(ct);
      FinAbGroup h1 = h1_from_table(gt);
      FinAbGroup h2 = h2_from_table(gt, options.h2_order_ceiling);
      cert.upper_bound = deficiency_upper_bound(h1, h2);
      cert.provenance = "table: bar-resolution homology of the enumerated group";
    } catch (const CosetLimitExceeded& e) {
      cert.error = e.what();
      cert.provenance = "table: enumeration failed";
      return cert;
    }
  }

  if (cert.upper_bound && *cert.upper_bound == cert.lower_bound)
    cert.certified_value = cert.lower_bound;
  return cert;
}

bool golod_shafarevich_consistent(long rank_d, long def_value) {
  if (rank_d < 1) throw InvalidArgument("rank must be positive");
  // def < -d^2/4 + d, compared exactly as 4*def < -d^2 + 4d.
  const mpz_class d(rank_d);
  return 4 * mpz_class(def_value) < -d * d + 4 * d;
}

std::string golod_shafarevich_bound_string(long rank_d) {
  if (rank_d < 1) throw InvalidArgument("rank must be positive");
  const mpz_class d(rank_d);
  mpq_class bound(-d * d + 4 * d, 4);
  bound.canonicalize();
  return bound.get_str();
}

std::string block_product_label(const BlockCounts& bc) {
  std::string out;
  auto part = [&](const char* name, long count) {
    if (count == 0) return;
    if (!out.empty()) out += "×";  // ×
    out += name;
    if (count > 1) out += superscript(count);
  };
  part("A", bc.r);
  part("B", bc.s);
  part("C", bc.t);
  return out;
}

std::vector<FigureRow> figure_one_table(unsigned long p, long max_n) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (max_n < 0) throw InvalidArgument("max_n must be non-negative");
  std::vector<FigureRow> rows;
  for (long n = 0; n <= max_n; ++n) {
    FigureRow row;
    row.n = n;
    row.counts = solve(n);
    row.counts.p = p;
    row.label = block_product_label(row.counts);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace groupdef
