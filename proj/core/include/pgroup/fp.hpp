#pragma once

#include <vector>

#include "pgroup/error.hpp"

namespace pgroup {

// Dense matrix over F_p. Entries are kept reduced to [0, p).
struct FpMatrix {
  int p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<int> a;  // row-major

  static FpMatrix zero(int p, int rows, int cols) {
    FpMatrix m;
    m.p = p;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(static_cast<size_t>(rows) * cols, 0);
    return m;
  }
  int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  int at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

int fp_normalize(long long v, int p);
int fp_inverse(int v, int p);

/// Determinant by Gaussian elimination (square matrices only).
int fp_det(FpMatrix m);
int fp_rank(FpMatrix m);

/// Basis of the right kernel {x : M x = 0}; each vector has length cols.
std::vector<std::vector<int>> fp_kernel_basis(FpMatrix m);

/// a_{ij} = -a_{ji} off the diagonal and a_{ii} = 0. Over F_2 this is
/// stronger than symmetry: the diagonal must vanish.
bool is_strongly_skew_symmetric(const FpMatrix& m);

/// Pfaffian by expansion along the first row. Requires a strongly
/// skew-symmetric matrix of even dimension; Pf(A)^2 = det(A).
int pfaffian(const FpMatrix& m);

// Arithmetic in GF(p^m). Elements are integers in [0, q) encoding
// polynomials over F_p by base-p digits, low degree first. The modulus is
// the lexicographically smallest monic irreducible polynomial of degree m
// (coefficient tuples compared low-degree-first), so tables are
// reproducible.
struct GaloisField {
  int p = 2;
  int m = 1;
  int q = 2;
  std::vector<int> modulus;  // c_0..c_{m-1} of x^m + c_{m-1}x^{m-1} + ... + c_0
  std::vector<int> mul_table;

  int add(int x, int y) const;
  int neg(int x) const;
  int mul(int x, int y) const { return mul_table[static_cast<size_t>(x) * q + y]; }
};

GaloisField make_galois_field(int p, int m);

}  // namespace pgroup
