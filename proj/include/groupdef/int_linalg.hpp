#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace groupdef {

// Sparse integer matrix with arbitrary-precision entries, row-major.
// Entries default to zero; absent and explicit zero are indistinguishable.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  const mpz_class& at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, mpz_class value);

  const std::map<std::size_t, mpz_class>& row(std::size_t r) const {
    return data_[r];
  }

  std::vector<std::vector<mpz_class>> to_dense() const;
  IntMatrix transposed() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, mpz_class>> data_;
};

// Finitely generated abelian group in invariant-factor form: a free part
// plus factors d1 | d2 | ... with every di >= 2.
class FinAbGroup {
 public:
  FinAbGroup() = default;  // trivial group

  // Normalizes arbitrary moduli: factors of 1 are dropped, factors of 0
  // contribute to the free rank, the rest are reshaped into a chain.
  static FinAbGroup from_factors(long torsion_free_rank,
                                 std::vector<mpz_class> moduli);
  static FinAbGroup trivial() { return {}; }
  static FinAbGroup free_abelian(long rank);
  static FinAbGroup cyclic(const mpz_class& n);

  long torsion_free_rank() const { return rank_; }
  const std::vector<mpz_class>& invariant_factors() const { return factors_; }

  bool is_trivial() const { return rank_ == 0 && factors_.empty(); }
  bool is_finite() const { return rank_ == 0; }
  mpz_class order() const;  // throws InvalidArgument if infinite

  std::string to_string() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  long rank_ = 0;
  std::vector<mpz_class> factors_;
};

// d(G): minimal size of a generating set = rank + number of invariant factors.
long min_generators(const FinAbGroup& g);

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

// Tensor product over Z of two finite abelian groups (gcd rule on factor
// pairs).  Throws InvalidArgument on positive torsion-free rank.
FinAbGroup tensor(const FinAbGroup& a, const FinAbGroup& b);

struct SmithNormalForm {
  // d1 | d2 | ... | dk >= 0, length min(rows, cols), zeros trailing.
  std::vector<mpz_class> diagonal;
  std::size_t rank = 0;
  // Present when transforms were requested: U * M * V = D with
  // det(U), det(V) in {+1, -1}; col_transform_inv is V^-1.
  std::optional<IntMatrix> row_transform;
  std::optional<IntMatrix> col_transform;
  std::optional<IntMatrix> col_transform_inv;
};

SmithNormalForm smith_normal_form(const IntMatrix& m,
                                  bool with_transforms = false);

// Z^cols / (row lattice of m).
FinAbGroup cokernel(const IntMatrix& m);

// Homology ker(d_out) / im(d_in) of a chain complex slice, where matrices
// act on column vectors (rows index the target basis).  The kernel lattice
// basis comes from the column transforms of smith_normal_form(d_out); the
// image is rewritten in that basis and the cokernel taken.
// Throws ChainConditionViolated if d_out * d_in != 0.
FinAbGroup homology_quotient(const IntMatrix& d_out, const IntMatrix& d_in);

}  // namespace groupdef
