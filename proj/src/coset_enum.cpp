#include "groupdef/coset_enum.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "groupdef/errors.hpp"

namespace groupdef {

namespace {

constexpr std::int32_t kUndef = -1;

std::uint32_t column_of(Letter l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }

// Relator as a column sequence, cyclically reduced (sound: a cyclic
// conjugate has the same normal closure).
std::vector<std::uint32_t> relator_columns(const Word& w) {
  std::vector<Letter> ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == inverse(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<std::uint32_t> cols;
  for (std::size_t i = lo; i < hi; ++i) cols.push_back(column_of(ls[i]));
  return cols;
}

struct Enumerator {
  const std::size_t ngens;
  const std::size_t ncols;
  const EnumerationOptions options;
  std::vector<std::vector<std::uint32_t>> relators;
  // Felsch: cyclic conjugates of each relator and its inverse, bucketed by
  // first column.
  std::vector<std::vector<std::vector<std::uint32_t>>> scans_by_column;

  std::vector<std::int32_t> table;   // ncosets x ncols
  std::vector<std::int32_t> parent;  // union-find; parent[i] == i iff live
  std::vector<std::int32_t> dead_queue;
  std::size_t queue_head = 0;
  std::size_t live = 0;
  std::vector<std::pair<std::int32_t, std::uint32_t>> deductions;
  const bool felsch;

  Enumerator(const Presentation& p, const EnumerationOptions& opts)
      : ngens(p.generator_count()),
        ncols(2 * p.generator_count()),
        options(opts),
        felsch(opts.strategy == EnumerationStrategy::Felsch) {
    if (ngens == 0)
      throw InvalidArgument("enumeration needs at least one generator");
    for (const Word& w : p.relators()) {
      std::vector<std::uint32_t> cols = relator_columns(w);
      if (!cols.empty()) relators.push_back(std::move(cols));
    }
    if (felsch) {
      scans_by_column.resize(ncols);
      for (const auto& r : relators) {
        for (int dir = 0; dir < 2; ++dir) {
          std::vector<std::uint32_t> base = r;
          if (dir == 1) {
            std::reverse(base.begin(), base.end());
            for (auto& c : base) c ^= 1u;
          }
          for (std::size_t k = 0; k < base.size(); ++k) {
            std::vector<std::uint32_t> rot(base.begin() + k, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + k);
            scans_by_column[rot[0]].push_back(std::move(rot));
          }
        }
      }
    }
    new_coset();  // coset 0: the trivial-subgroup coset
  }

  std::size_t ncosets() const { return parent.size(); }
  bool is_dead(std::int32_t c) const { return parent[c] != c; }

  std::int32_t& cell(std::int32_t coset, std::uint32_t col) {
    return table[static_cast<std::size_t>(coset) * ncols + col];
  }
  std::int32_t cell(std::int32_t coset, std::uint32_t col) const {
    return table[static_cast<std::size_t>(coset) * ncols + col];
  }

  std::int32_t rep(std::int32_t c) {
    std::int32_t root = c;
    while (parent[root] != root) root = parent[root];
    while (parent[c] != root) c = std::exchange(parent[c], root);
    return root;
  }

  std::int32_t new_coset() {
    if (ncosets() >= options.max_cosets)
      throw CosetLimitExceeded(options.max_cosets);
    parent.push_back(static_cast<std::int32_t>(ncosets()));
    table.insert(table.end(), ncols, kUndef);
    ++live;
    return parent.back();
  }

  void set_entry(std::int32_t a, std::uint32_t col, std::int32_t b) {
    cell(a, col) = b;
    cell(b, col ^ 1u) = a;
    if (felsch) {
      deductions.emplace_back(a, col);
      deductions.emplace_back(b, col ^ 1u);
    }
  }

  std::int32_t define(std::int32_t a, std::uint32_t col) {
    std::int32_t b = new_coset();
    set_entry(a, col, b);
    return b;
  }

  // The smaller representative survives a merge.
  void merge(std::int32_t a, std::int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    --live;
    dead_queue.push_back(b);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    merge(a, b);
    while (queue_head < dead_queue.size()) {
      std::int32_t g = dead_queue[queue_head++];
      for (std::uint32_t col = 0; col < ncols; ++col) {
        std::int32_t d = cell(g, col);
        if (d == kUndef) continue;
        cell(g, col) = kUndef;
        if (cell(d, col ^ 1u) == g) cell(d, col ^ 1u) = kUndef;
        std::int32_t mu = rep(g), nu = rep(d);
        if (cell(mu, col) != kUndef)
          merge(nu, cell(mu, col));
        else if (cell(nu, col ^ 1u) != kUndef)
          merge(mu, cell(nu, col ^ 1u));
        else
          set_entry(mu, col, nu);
      }
    }
    dead_queue.clear();
    queue_head = 0;
  }

  // Trace coset `start` through relator `w`; with fill, new cosets are
  // defined until the scan completes.
  void scan(std::int32_t start, const std::vector<std::uint32_t>& w, bool fill) {
    std::int32_t f = start, b = start;
    std::size_t i = 0, j = w.size();  // letters [i, j) not yet consumed
    while (true) {
      while (i < j && cell(f, w[i]) != kUndef) f = cell(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && cell(b, w[j - 1] ^ 1u) != kUndef) b = cell(b, w[--j] ^ 1u);
      if (j == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set_entry(f, w[i], b);  // deduction closing the gap
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  // Relator scans at every live coset, no definitions; used when HLT runs
  // out of room.  Returns the number of cosets that died.
  std::size_t lookahead() {
    std::size_t live_before = live;
    for (std::size_t c = 0; c < ncosets(); ++c) {
      std::int32_t a = static_cast<std::int32_t>(c);
      if (is_dead(a)) continue;
      for (const auto& r : relators) {
        scan(a, r, /*fill=*/false);
        if (is_dead(a)) break;
      }
    }
    return live_before - live;
  }

  // Renumber live cosets densely, preserving order.
  void compact() {
    std::vector<std::int32_t> remap(ncosets(), kUndef);
    std::int32_t next = 0;
    for (std::size_t c = 0; c < ncosets(); ++c)
      if (!is_dead(static_cast<std::int32_t>(c)))
        remap[c] = next++;
    std::vector<std::int32_t> packed(static_cast<std::size_t>(next) * ncols,
                                     kUndef);
    for (std::size_t c = 0; c < ncosets(); ++c) {
      if (remap[c] == kUndef) continue;
      for (std::uint32_t col = 0; col < ncols; ++col) {
        std::int32_t e = cell(static_cast<std::int32_t>(c), col);
        if (e != kUndef)
          packed[static_cast<std::size_t>(remap[c]) * ncols + col] =
              remap[rep(e)];
      }
    }
    table = std::move(packed);
    parent.resize(next);
    for (std::int32_t c = 0; c < next; ++c) parent[c] = c;
    live = static_cast<std::size_t>(next);
  }

  void run_hlt() {
    std::size_t cursor = 0;
    while (cursor < ncosets()) {
      std::int32_t a = static_cast<std::int32_t>(cursor);
      if (is_dead(a)) {
        ++cursor;
        continue;
      }
      try {
        for (const auto& r : relators) {
          scan(a, r, /*fill=*/true);
          if (is_dead(a)) break;
        }
        if (!is_dead(a))
          for (std::uint32_t col = 0; col < ncols; ++col)
            if (cell(a, col) == kUndef) define(a, col);
      } catch (const CosetLimitExceeded&) {
        if (lookahead() == 0) throw;
        compact();
        cursor = 0;  // rescan; relator scans are idempotent on closed rows
        continue;
      }
      ++cursor;
    }
  }

  void process_deductions() {
    while (!deductions.empty()) {
      auto [a, col] = deductions.back();
      deductions.pop_back();
      a = rep(a);
      if (cell(a, col) == kUndef) continue;  // removed by a coincidence
      for (const auto& w : scans_by_column[col]) {
        scan(a, w, /*fill=*/false);
        if (is_dead(a)) break;
      }
    }
  }

  void run_felsch() {
    process_deductions();
    while (true) {
      bool defined = false;
      for (std::size_t c = 0; c < ncosets() && !defined; ++c) {
        std::int32_t a = static_cast<std::int32_t>(c);
        if (is_dead(a)) continue;
        for (std::uint32_t col = 0; col < ncols; ++col) {
          if (cell(a, col) == kUndef) {
            define(a, col);
            process_deductions();
            defined = true;
            break;
          }
        }
      }
      if (!defined) return;
    }
  }

  CosetTable finish() {
    compact();
    std::vector<std::int32_t> flat = std::move(table);
    return CosetTable(ngens, std::move(flat));
  }
};

}  // namespace

CosetTable::CosetTable(std::size_t generator_count,
                       std::vector<std::int32_t> entries)
    : ngens_(generator_count), entries_(std::move(entries)) {
  if (ngens_ == 0) throw InvalidArgument("coset table needs >= 1 generator");
  if (entries_.size() % (2 * ngens_) != 0)
    throw InvalidArgument("coset table entries do not form full rows");
  count_ = entries_.size() / (2 * ngens_);
  for (std::int32_t e : entries_)
    if (e != kUndef && (e < 0 || static_cast<std::size_t>(e) >= count_))
      throw InvalidArgument("coset table entry out of range");
}

bool CosetTable::is_closed() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](std::int32_t e) { return e == kUndef; });
}

std::int32_t CosetTable::apply(std::int32_t coset, Letter l) const {
  if (coset < 0 || static_cast<std::size_t>(coset) >= count_ || l.gen >= ngens_)
    throw InvalidArgument("coset table application out of range");
  return entry(coset, column_of(l));
}

std::int32_t CosetTable::apply(std::int32_t coset, const Word& w) const {
  for (Letter l : w.letters()) coset = apply(coset, l);
  return coset;
}

CosetTable enumerate(const Presentation& p, const EnumerationOptions& options) {
  Enumerator e(p, options);
  if (e.felsch)
    e.run_felsch();
  else
    e.run_hlt();
  return e.finish();
}

std::size_t order(const Presentation& p, const EnumerationOptions& options) {
  return enumerate(p, options).coset_count();
}

GroupTable multiplication_table(const CosetTable& ct) {
  if (!ct.is_closed()) throw InvalidArgument("coset table is not closed");
  const std::size_t n = ct.coset_count();
  const std::size_t ncols = 2 * ct.generator_count();

  // Representative words by breadth-first search from coset 0.
  GroupTable gt;
  gt.order = n;
  gt.identity = 0;
  gt.element_words.assign(n, Word());
  std::vector<char> seen(n, 0);
  std::deque<std::int32_t> bfs{0};
  seen[0] = 1;
  while (!bfs.empty()) {
    std::int32_t c = bfs.front();
    bfs.pop_front();
    for (std::size_t col = 0; col < ncols; ++col) {
      std::int32_t d = ct.entry(c, col);
      if (!seen[d]) {
        seen[d] = 1;
        Letter l{static_cast<std::uint32_t>(col / 2), col % 2 ? -1 : +1};
        gt.element_words[d] =
            gt.element_words[c] * Word::reduce({l});
        bfs.push_back(d);
      }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](char s) { return s == 1; }))
    throw Error("coset table is not transitive");

  gt.product.assign(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gt.product[i][j] = static_cast<std::uint32_t>(
          ct.apply(static_cast<std::int32_t>(i), gt.element_words[j]));

  gt.inverse.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n; ++j)
      if (gt.product[i][j] == gt.identity) {
        gt.inverse[i] = static_cast<std::uint32_t>(j);
        found = true;
        break;
      }
    if (!found) throw Error("element without inverse in multiplication table");
  }
  return gt;
}

ValidationReport validate_group(const GroupTable& gt) {
  auto fail = [](std::string msg) {
    return ValidationReport{false, std::move(msg)};
  };
  const std::size_t n = gt.order;
  if (n == 0) return fail("empty group table");
  if (gt.product.size() != n || gt.inverse.size() != n ||
      gt.element_words.size() != n)
    return fail("table field sizes disagree with the order");
  if (gt.identity >= n) return fail("identity index out of range");
  for (std::size_t i = 0; i < n; ++i)
    if (gt.product[i].size() != n) return fail("ragged product table");

  for (std::size_t i = 0; i < n; ++i) {
    if (gt.product[gt.identity][i] != i)
      return fail("identity row broken at " + std::to_string(i));
    if (gt.product[i][gt.identity] != i)
      return fail("identity column broken at " + std::to_string(i));
  }

  // Latin square
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t r = gt.product[i][j], c = gt.product[j][i];
      if (r >= n || c >= n)
        return fail("product entry out of range at (" + std::to_string(i) +
                    ", " + std::to_string(j) + ")");
      if (row[r]++)
        return fail("row " + std::to_string(i) + " repeats element " +
                    std::to_string(r));
      if (col[c]++)
        return fail("column " + std::to_string(i) + " repeats element " +
                    std::to_string(c));
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    if (gt.product[i][gt.inverse[i]] != gt.identity)
      return fail("inverse table broken at " + std::to_string(i));

  auto assoc = [&](std::size_t x, std::size_t y, std::size_t z) {
    return gt.product[gt.product[x][y]][z] == gt.product[x][gt.product[y][z]];
  };
  if (n <= 64) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (!assoc(x, y, z))
            return fail("associativity fails at (" + std::to_string(x) + ", " +
                        std::to_string(y) + ", " + std::to_string(z) + ")");
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;  // fixed-seed sample
    auto next = [&state, n] {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return static_cast<std::size_t>((state >> 33) % n);
    };
    for (int k = 0; k < 200000; ++k) {
      std::size_t x = next(), y = next(), z = next();
      if (!assoc(x, y, z))
        return fail("associativity fails at (" + std::to_string(x) + ", " +
                    std::to_string(y) + ", " + std::to_string(z) + ")");
    }
  }
  return {};
}

}  // namespace groupdef
