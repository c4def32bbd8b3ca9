#include "pgroup/fp.hpp"

#include <algorithm>

namespace pgroup {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotPGroup: return "NOT_P_GROUP";
    case ErrorCode::NotAbelian: return "NOT_ABELIAN";
    case ErrorCode::NotNormal: return "NOT_NORMAL";
    case ErrorCode::NotCentral: return "NOT_CENTRAL";
    case ErrorCode::NotNilpotent: return "NOT_NILPOTENT";
    case ErrorCode::IncompatibleIdentification: return "INCOMPATIBLE_IDENTIFICATION";
    case ErrorCode::InconsistentPresentation: return "INCONSISTENT_PRESENTATION";
    case ErrorCode::SizeCapExceeded: return "SIZE_CAP_EXCEEDED";
    case ErrorCode::SearchBudgetExceeded: return "SEARCH_BUDGET_EXCEEDED";
    case ErrorCode::ParameterViolation: return "PARAMETER_VIOLATION";
    case ErrorCode::EvenPrime: return "EVEN_PRIME";
    case ErrorCode::WrongClass: return "WRONG_CLASS";
    case ErrorCode::NotCaminaType: return "NOT_CAMINA_TYPE";
    case ErrorCode::PrecondFailed: return "PRECOND_FAILED";
    case ErrorCode::NotStronglySkew: return "NOT_STRONGLY_SKEW";
    case ErrorCode::OddDimension: return "ODD_DIMENSION";
    case ErrorCode::MixedPrimes: return "MIXED_PRIMES";
    case ErrorCode::ConditionsNotMet: return "CONDITIONS_NOT_MET";
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::UnknownGenerator: return "UNKNOWN_GENERATOR";
    case ErrorCode::ExponentOutOfRange: return "EXPONENT_OUT_OF_RANGE";
    case ErrorCode::DuplicateRelation: return "DUPLICATE_RELATION";
    case ErrorCode::FileNotFound: return "FILE_NOT_FOUND";
    case ErrorCode::InternalCheckFailed: return "INTERNAL_CHECK_FAILED";
  }
  return "UNKNOWN";
}

int fp_normalize(long long v, int p) {
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<int>(r);
}

int fp_inverse(int v, int p) {
  // p is prime and small; scan.
  v = fp_normalize(v, p);
  if (v == 0) fail(ErrorCode::InternalCheckFailed, "inverse of 0 mod p");
  for (int x = 1; x < p; ++x)
    if (x * v % p == 1) return x;
  fail(ErrorCode::InternalCheckFailed, "no inverse found");
}

namespace {

// Row echelon; returns (rank, det_if_square). Works in place.
std::pair<int, int> fp_eliminate(FpMatrix& m) {
  const int p = m.p;
  int det = 1;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) {
      det = 0;
      continue;
    }
    if (pivot != row) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
      det = fp_normalize(-det, p);
    }
    det = det * m.at(row, col) % p;
    const int pinv = fp_inverse(m.at(row, col), p);
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * pinv % p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const int f = m.at(i, col);
      for (int j = 0; j < m.cols; ++j)
        m.at(i, j) = fp_normalize(m.at(i, j) - static_cast<long long>(f) * m.at(row, j), p);
    }
    ++row;
  }
  if (row < m.rows) det = 0;
  return {row, det};
}

}  // namespace

int fp_det(FpMatrix m) {
  if (m.rows != m.cols) fail(ErrorCode::InternalCheckFailed, "det of non-square matrix");
  return fp_eliminate(m).second;
}

int fp_rank(FpMatrix m) { return fp_eliminate(m).first; }

std::vector<std::vector<int>> fp_kernel_basis(FpMatrix m) {
  const int p = m.p;
  const int cols = m.cols;
  fp_eliminate(m);
  // Locate pivot columns of the reduced matrix.
  std::vector<int> pivot_col;
  std::vector<char> is_pivot(cols, 0);
  int r = 0;
  for (int col = 0; col < cols && r < m.rows; ++col) {
    if (m.at(r, col) != 0) {
      pivot_col.push_back(col);
      is_pivot[col] = 1;
      ++r;
    }
  }
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(cols, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = fp_normalize(-m.at(static_cast<int>(i), free), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_strongly_skew_symmetric(const FpMatrix& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i) {
    if (m.at(i, i) != 0) return false;
    for (int j = i + 1; j < m.cols; ++j)
      if (m.at(i, j) != fp_normalize(-m.at(j, i), m.p)) return false;
  }
  return true;
}

namespace {

int pfaffian_rec(const FpMatrix& m, std::vector<int>& live, int p) {
  const int n = static_cast<int>(live.size());
  if (n == 0) return 1;
  const int first = live[0];
  long long acc = 0;
  for (int k = 1; k < n; ++k) {
    const int j = live[k];
    if (m.at(first, j) == 0) continue;
    std::vector<int> rest;
    rest.reserve(n - 2);
    for (int t = 1; t < n; ++t)
      if (t != k) rest.push_back(live[t]);
    const int sub = pfaffian_rec(m, rest, p);
    const int sign = (k % 2 == 1) ? 1 : -1;  // (-1)^j with j = k+1
    acc += static_cast<long long>(sign) * m.at(first, j) * sub;
  }
  return fp_normalize(acc, p);
}

}  // namespace

int pfaffian(const FpMatrix& m) {
  if (!is_strongly_skew_symmetric(m))
    fail(ErrorCode::NotStronglySkew, "pfaffian requires a strongly skew-symmetric matrix");
  if (m.rows % 2 != 0)
    fail(ErrorCode::OddDimension, "pfaffian requires even dimension");
  std::vector<int> live(m.rows);
  for (int i = 0; i < m.rows; ++i) live[i] = i;
  return pfaffian_rec(m, live, m.p);
}

namespace {

// Polynomials over F_p as coefficient vectors, low degree first.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& mod, int p) {
  const int m = static_cast<int>(mod.size()) - 1;  // mod is monic of degree m
  while (static_cast<int>(a.size()) > m) {
    const int d = static_cast<int>(a.size()) - 1;
    const int lead = a.back();
    if (lead != 0) {
      for (int i = 0; i <= m; ++i)
        a[d - m + i] = fp_normalize(a[d - m + i] - static_cast<long long>(lead) * mod[i], p);
    }
    a.pop_back();
  }
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = fp_normalize(c[i + j] + static_cast<long long>(a[i]) * b[j], p);
  return c;
}

bool poly_is_zero(const std::vector<int>& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

// Divisibility test of the monic degree-m polynomial given by (coeffs, monic)
// by the monic polynomial q (low-first coefficients including leading 1).
bool divides(const std::vector<int>& q, const std::vector<int>& f, int p) {
  std::vector<int> r = poly_mod(f, q, p);
  return poly_is_zero(r);
}

bool is_irreducible(const std::vector<int>& f, int p) {
  // f: full coefficient vector of a monic polynomial, low degree first.
  const int m = static_cast<int>(f.size()) - 1;
  if (f[0] == 0) return false;  // divisible by x
  // Trial division by all monic polynomials of degree 1..m/2.
  for (int d = 1; 2 * d <= m; ++d) {
    std::vector<int> q(d + 1, 0);
    q[d] = 1;
    // Odometer over the d free coefficients.
    std::vector<int> digits(d, 0);
    for (;;) {
      for (int i = 0; i < d; ++i) q[i] = digits[i];
      if (divides(q, f, p)) return false;
      int k = d - 1;
      while (k >= 0 && digits[k] == p - 1) digits[k--] = 0;
      if (k < 0) break;
      ++digits[k];
    }
  }
  return true;
}

}  // namespace

int GaloisField::add(int x, int y) const {
  int r = 0;
  int mult = 1;
  for (int i = 0; i < m; ++i) {
    r += (x % p + y % p) % p * mult;
    x /= p;
    y /= p;
    mult *= p;
  }
  return r;
}

int GaloisField::neg(int x) const {
  int r = 0;
  int mult = 1;
  for (int i = 0; i < m; ++i) {
    r += fp_normalize(-(x % p), p) * mult;
    x /= p;
    mult *= p;
  }
  return r;
}

GaloisField make_galois_field(int p, int m) {
  GaloisField f;
  f.p = p;
  f.m = m;
  f.q = 1;
  for (int i = 0; i < m; ++i) f.q *= p;

  // Lexicographically smallest monic irreducible, coefficients compared
  // low-degree-first.
  std::vector<int> digits(m, 0);
  std::vector<int> poly(m + 1, 0);
  poly[m] = 1;
  bool found = false;
  for (;;) {
    for (int i = 0; i < m; ++i) poly[i] = digits[i];
    if (is_irreducible(poly, p)) {
      found = true;
      break;
    }
    int k = m - 1;  // last coefficient varies fastest => low-degree-first lex order
    while (k >= 0 && digits[k] == p - 1) digits[k--] = 0;
    if (k < 0) break;
    ++digits[k];
  }
  if (!found) fail(ErrorCode::InternalCheckFailed, "no irreducible polynomial found");
  f.modulus.assign(poly.begin(), poly.end() - 1);

  f.mul_table.assign(static_cast<size_t>(f.q) * f.q, 0);
  auto decode = [&](int v) {
    std::vector<int> c(m, 0);
    for (int i = 0; i < m; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int v = 0;
    for (int i = m - 1; i >= 0; --i) v = v * p + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return v;
  };
  for (int x = 0; x < f.q; ++x) {
    for (int y = 0; y < f.q; ++y) {
      std::vector<int> prod = poly_mul(decode(x), decode(y), p);
      prod = poly_mod(prod, poly, p);
      prod.resize(m, 0);
      f.mul_table[static_cast<size_t>(x) * f.q + y] = encode(prod);
    }
  }
  return f;
}

}  // namespace pgroup
