#include "groupdef/int_linalg.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "groupdef/errors.hpp"

namespace groupdef {

namespace {
const mpz_class kZero = 0;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> entries)
    : rows_(entries.size()) {
  for (const auto& r : entries) cols_ = std::max(cols_, r.size());
  data_.resize(rows_);
  std::size_t i = 0;
  for (const auto& r : entries) {
    std::size_t j = 0;
    for (long v : r) {
      if (v != 0) data_[i][j] = v;
      ++j;
    }
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
  return m;
}

std::size_t IntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

const mpz_class& IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
  auto it = data_[r].find(c);
  return it == data_[r].end() ? kZero : it->second;
}

void IntMatrix::set(std::size_t r, std::size_t c, mpz_class value) {
  if (r >= rows_ || c >= cols_) throw InvalidArgument("matrix index out of range");
  if (value == 0)
    data_[r].erase(c);
  else
    data_[r][c] = std::move(value);
}

std::vector<std::vector<mpz_class>> IntMatrix::to_dense() const {
  std::vector<std::vector<mpz_class>> out(rows_,
                                          std::vector<mpz_class>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out[r][c] = v;
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw InvalidArgument("matrix product dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::map<std::size_t, mpz_class> acc;
    for (const auto& [k, v] : a.data_[r])
      for (const auto& [c, w] : b.data_[k]) acc[c] += v * w;
    for (auto& [c, v] : acc)
      if (v != 0) p.data_[r][c] = std::move(v);
  }
  return p;
}

// ---------------------------------------------------------------------------
// FinAbGroup

FinAbGroup FinAbGroup::from_factors(long torsion_free_rank,
                                    std::vector<mpz_class> moduli) {
  if (torsion_free_rank < 0) throw InvalidArgument("negative torsion-free rank");
  FinAbGroup g;
  g.rank_ = torsion_free_rank;
  std::vector<mpz_class> fs;
  for (mpz_class& m : moduli) {
    mpz_class a = abs(m);
    if (a == 0)
      g.rank_ += 1;  // Z/0 = Z
    else if (a != 1)
      fs.push_back(std::move(a));
  }
  // Reshape into a divisor chain: Z/a + Z/b = Z/gcd + Z/lcm, selection-style.
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      if (fs[j] % fs[i] == 0) continue;
      mpz_class d = gcd(fs[i], fs[j]);
      fs[j] = fs[i] / d * fs[j];
      fs[i] = std::move(d);
    }
  }
  std::erase(fs, mpz_class(1));
  g.factors_ = std::move(fs);
  return g;
}

FinAbGroup FinAbGroup::free_abelian(long rank) { return from_factors(rank, {}); }

FinAbGroup FinAbGroup::cyclic(const mpz_class& n) { return from_factors(0, {n}); }

mpz_class FinAbGroup::order() const {
  if (rank_ > 0) throw InvalidArgument("infinite group has no order");
  mpz_class o = 1;
  for (const mpz_class& f : factors_) o *= f;
  return o;
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  if (rank_ == 1)
    s = "Z";
  else if (rank_ > 1)
    s = "Z^" + std::to_string(rank_);
  for (const mpz_class& f : factors_) {
    if (!s.empty()) s += " + ";
    s += "Z/" + f.get_str();
  }
  return s;
}

long min_generators(const FinAbGroup& g) {
  return g.torsion_free_rank() + static_cast<long>(g.invariant_factors().size());
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<mpz_class> moduli = a.invariant_factors();
  moduli.insert(moduli.end(), b.invariant_factors().begin(),
                b.invariant_factors().end());
  return FinAbGroup::from_factors(a.torsion_free_rank() + b.torsion_free_rank(),
                                  std::move(moduli));
}

FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b) {
  if (!a.is_finite() || !b.is_finite())
    throw InvalidArgument("tensor is only implemented for finite groups");
  std::vector<mpz_class> moduli;
  for (const mpz_class& d : a.invariant_factors())
    for (const mpz_class& e : b.invariant_factors())
      moduli.push_back(gcd(d, e));
  return FinAbGroup::from_factors(0, std::move(moduli));
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// a = q*b + r with |r| <= |b|/2; ties keep the positive remainder.
mpz_class balanced_quotient(const mpz_class& a, const mpz_class& b) {
  mpz_class babs = abs(b), q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), babs.get_mpz_t());
  if (2 * r > babs) q += 1;
  if (sgn(b) < 0) q = -q;
  return q;
}

// Row-major sparse working matrix with a per-column row index so column
// operations do not scan the whole matrix.
struct SparseWork {
  std::size_t rows, cols;
  std::vector<std::map<std::size_t, mpz_class>> row;
  std::vector<std::set<std::size_t>> col_rows;

  explicit SparseWork(const IntMatrix& m)
      : rows(m.rows()), cols(m.cols()), row(m.rows()), col_rows(m.cols()) {
    for (std::size_t r = 0; r < rows; ++r)
      for (const auto& [c, v] : m.row(r)) {
        row[r][c] = v;
        col_rows[c].insert(r);
      }
  }

  const mpz_class& at(std::size_t r, std::size_t c) const {
    auto it = row[r].find(c);
    return it == row[r].end() ? kZero : it->second;
  }

  void set(std::size_t r, std::size_t c, mpz_class v) {
    if (v == 0) {
      if (row[r].erase(c)) col_rows[c].erase(r);
    } else {
      auto [it, inserted] = row[r].insert_or_assign(c, std::move(v));
      if (inserted) col_rows[c].insert(r);
    }
  }

  // row_dst -= q * row_src
  void row_axpy(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (const auto& [c, v] : std::map<std::size_t, mpz_class>(row[src]))
      set(dst, c, at(dst, c) - q * v);
  }

  // col_dst -= q * col_src
  void col_axpy(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t r : std::set<std::size_t>(col_rows[src]))
      set(r, dst, at(r, dst) - q * at(r, src));
  }

  void negate_row(std::size_t r) {
    for (auto& [c, v] : row[r]) v = -v;
  }
};

// Accumulates one unimodular transform as plain sparse rows.
struct TransformRows {
  std::vector<std::map<std::size_t, mpz_class>> row;

  explicit TransformRows(std::size_t n) : row(n) {
    for (std::size_t i = 0; i < n; ++i) row[i][i] = 1;
  }

  // row_dst += q * row_src
  void add_multiple(std::size_t dst, std::size_t src, const mpz_class& q) {
    for (const auto& [c, v] : std::map<std::size_t, mpz_class>(row[src])) {
      mpz_class nv = (row[dst].count(c) ? row[dst][c] : kZero) + q * v;
      if (nv == 0)
        row[dst].erase(c);
      else
        row[dst][c] = std::move(nv);
    }
  }

  void negate(std::size_t r) {
    for (auto& [c, v] : row[r]) v = -v;
  }

  // Rows reordered by `order`; as_transpose emits the matrix transposed.
  IntMatrix to_matrix(const std::vector<std::size_t>& order,
                      bool as_transpose) const {
    std::size_t n = row.size();
    IntMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [c, v] : row[order[k]])
        m.set(as_transpose ? c : k, as_transpose ? k : c, v);
    return m;
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m, bool with_transforms) {
  const std::size_t R = m.rows(), C = m.cols();
  SparseWork w(m);
  std::optional<TransformRows> u, vt, vinv;
  if (with_transforms) {
    u.emplace(R);
    vt.emplace(C);   // V stored transposed so column ops become row ops
    vinv.emplace(C);
  }

  auto row_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    w.row_axpy(dst, src, q);
    if (u) u->add_multiple(dst, src, -q);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    w.col_axpy(dst, src, q);
    if (vt) vt->add_multiple(dst, src, -q);
    if (vinv) vinv->add_multiple(src, dst, q);
  };

  std::vector<char> row_done(R, 0), col_done(C, 0);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::vector<mpz_class> diag;

  while (true) {
    // Pivot: smallest |value|, then fewest nonzeros in row+column, then
    // lowest (row, col).  Done rows/columns hold earlier pivots only.
    bool found = false;
    std::size_t pr = 0, pc = 0, best_fill = 0;
    mpz_class best;
    for (std::size_t r = 0; r < R; ++r) {
      if (row_done[r]) continue;
      for (const auto& [c, v] : w.row[r]) {
        std::size_t fill = w.row[r].size() + w.col_rows[c].size();
        int cmp = found ? mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) : -1;
        if (!found || cmp < 0 || (cmp == 0 && fill < best_fill)) {
          found = true;
          pr = r;
          pc = c;
          best = v;
          best_fill = fill;
        }
      }
    }
    if (!found) break;

    // Shrink the pivot until it is the lone nonzero of its row and column
    // and divides every remaining active entry.
    while (true) {
      bool moved = false;
      for (std::size_t r2 : std::set<std::size_t>(w.col_rows[pc])) {
        if (r2 == pr) continue;
        mpz_class q = balanced_quotient(w.at(r2, pc), w.at(pr, pc));
        if (q != 0) row_op(r2, pr, q);
        if (w.at(r2, pc) != 0) {  // remainder smaller than pivot: move pivot
          pr = r2;
          moved = true;
          break;
        }
      }
      if (moved) continue;

      {
        std::vector<std::size_t> cols_in_row;
        for (const auto& [c2, v2] : w.row[pr])
          if (c2 != pc) cols_in_row.push_back(c2);
        for (std::size_t c2 : cols_in_row) {
          mpz_class q = balanced_quotient(w.at(pr, c2), w.at(pr, pc));
          if (q != 0) col_op(c2, pc, q);
          if (w.at(pr, c2) != 0) {
            pc = c2;
            moved = true;
            break;
          }
        }
      }
      if (moved) continue;

      // Divisibility sweep, skipped for unit pivots.
      if (mpz_cmpabs_ui(w.at(pr, pc).get_mpz_t(), 1) != 0) {
        const mpz_class pivot = w.at(pr, pc);
        for (std::size_t r2 = 0; r2 < R && !moved; ++r2) {
          if (row_done[r2] || r2 == pr) continue;
          for (const auto& [c2, v2] : w.row[r2]) {
            if (v2 % pivot != 0) {
              row_op(pr, r2, -1);  // pull the offending row into the pivot row
              moved = true;
              break;
            }
          }
        }
      }
      if (moved) continue;
      break;
    }

    if (w.at(pr, pc) < 0) {
      w.negate_row(pr);
      if (u) u->negate(pr);
    }
    diag.push_back(w.at(pr, pc));
    row_done[pr] = 1;
    col_done[pc] = 1;
    pivots.emplace_back(pr, pc);
  }

  SmithNormalForm out;
  out.rank = pivots.size();
  out.diagonal.assign(std::min(R, C), 0);
  for (std::size_t k = 0; k < diag.size(); ++k) out.diagonal[k] = diag[k];

  if (with_transforms) {
    // Compose the pivot permutation so U*M*V is literally diagonal.
    std::vector<std::size_t> row_order, col_order;
    for (const auto& [r, c] : pivots) {
      row_order.push_back(r);
      col_order.push_back(c);
    }
    for (std::size_t r = 0; r < R; ++r)
      if (!row_done[r]) row_order.push_back(r);
    for (std::size_t c = 0; c < C; ++c)
      if (!col_done[c]) col_order.push_back(c);
    out.row_transform = u->to_matrix(row_order, false);
    out.col_transform = vt->to_matrix(col_order, true);
    out.col_transform_inv = vinv->to_matrix(col_order, false);
  }
  return out;
}

FinAbGroup cokernel(const IntMatrix& m) {
  SmithNormalForm snf = smith_normal_form(m);
  std::vector<mpz_class> factors(snf.diagonal.begin(),
                                 snf.diagonal.begin() + snf.rank);
  return FinAbGroup::from_factors(
      static_cast<long>(m.cols()) - static_cast<long>(snf.rank),
      std::move(factors));
}

FinAbGroup homology_quotient(const IntMatrix& d_out, const IntMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw InvalidArgument("chain complex dimension mismatch");
  if (!(d_out * d_in).is_zero())
    throw ChainConditionViolated("d_out * d_in != 0");

  SmithNormalForm snf = smith_normal_form(d_out, /*with_transforms=*/true);
  const IntMatrix& vinv = *snf.col_transform_inv;
  const std::size_t n = d_out.cols(), r = snf.rank, k = n - r;

  // Kernel basis = columns r..n-1 of V; image coordinates in that basis are
  // the corresponding rows of V^-1 * d_in.
  IntMatrix image(k, d_in.cols());
  for (std::size_t i = 0; i < k; ++i) {
    std::map<std::size_t, mpz_class> acc;
    for (const auto& [j, coeff] : vinv.row(r + i))
      for (const auto& [c, v] : d_in.row(j)) acc[c] += coeff * v;
    for (auto& [c, v] : acc)
      if (v != 0) image.set(i, c, std::move(v));
  }

  // Z^k modulo the column span of `image`; SNF is transpose-invariant.
  SmithNormalForm s2 = smith_normal_form(image);
  std::vector<mpz_class> factors(s2.diagonal.begin(),
                                 s2.diagonal.begin() + s2.rank);
  return FinAbGroup::from_factors(
      static_cast<long>(k) - static_cast<long>(s2.rank), std::move(factors));
}

}  // namespace groupdef
