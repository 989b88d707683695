#pragma once
#include <map>
#include <vector>

#include "hitchin/bipoly.hpp"

namespace hitchin {

template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational one() { return Rational(1); }
  static Rational scale(const Rational& a, const Rational& s) { return a * s; }
  static bool is_zero(const Rational& a) { return a.is_zero(); }
};

template <>
struct RingTraits<UniPoly> {
  static UniPoly one() { return UniPoly::constant(Rational(1)); }
  static UniPoly scale(const UniPoly& a, const Rational& s) { return a.scaled(s); }
  static bool is_zero(const UniPoly& a) { return a.is_zero(); }
};

template <>
struct RingTraits<BiPoly> {
  static BiPoly one() { return BiPoly::scalar(Rational(1)); }
  static BiPoly scale(const BiPoly& a, const Rational& s) { return a.scaled(s); }
  static bool is_zero(const BiPoly& a) { return a.is_zero(); }
};

// Dense rectangular matrix over an exact commutative ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    require(rows >= 0 && cols >= 0, "negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RingTraits<T>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix shape mismatch");
    Matrix r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, "matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a.at(i, k);
        if (RingTraits<T>::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

  Matrix scaled(const Rational& s) const {
    Matrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = RingTraits<T>::scale(e_[i], s);
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  T trace() const {
    require(is_square(), "trace of non-square matrix");
    T t{};
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!RingTraits<T>::is_zero(x)) return false;
    return true;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> e_;
};

using RatMat = Matrix<Rational>;
using PolyMat = Matrix<UniPoly>;
using BiMat = Matrix<BiPoly>;

// Characteristic data by the trace recursion (Faddeev-LeVerrier), exact over
// any commutative Q-algebra: char(x) = x^n + a_1 x^{n-1} + ... + a_n.
template <class T>
struct CharData {
  std::vector<T> coeffs;  // a_1 .. a_n
  Matrix<T> adjugate;
  T det;
};

template <class T>
CharData<T> char_data(const Matrix<T>& m) {
  require(m.is_square() && m.rows() >= 1, "characteristic data needs a nonempty square matrix");
  const int n = m.rows();
  CharData<T> out;
  Matrix<T> b = Matrix<T>::identity(n);
  Matrix<T> prev = b;
  for (int k = 1; k <= n; ++k) {
    prev = b;
    Matrix<T> a = m * b;
    T ak = RingTraits<T>::scale(a.trace(), Rational(-1, k));
    out.coeffs.push_back(ak);
    if (k < n) {
      b = a;
      for (int i = 0; i < n; ++i) b.at(i, i) += ak;
    }
  }
  out.adjugate = (n % 2 == 1) ? prev : prev.scaled(Rational(-1));
  out.det = RingTraits<T>::scale(out.coeffs.back(), Rational(n % 2 == 0 ? 1 : -1));
  return out;
}

template <class T>
T determinant(const Matrix<T>& m) {
  return char_data(m).det;
}

// adj(m) with m * adj(m) = det(m) * I, exactly.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  if (m.is_square() && m.rows() == 1) return Matrix<T>::identity(1);
  return char_data(m).adjugate;
}

// Pfaffian by expansion along the first remaining row, memoized on index
// subsets. Input must be skew-symmetric of even order.
template <class T>
T pfaffian_masked(const Matrix<T>& m, unsigned mask, std::map<unsigned, T>& memo) {
  if (mask == 0) return RingTraits<T>::one();
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  int i0 = __builtin_ctz(mask);
  T acc{};
  int pos = 0;
  for (int j = i0 + 1; j < m.rows(); ++j) {
    if (!(mask & (1u << j))) continue;
    ++pos;  // position of j among remaining indices after i0 (1-based)
    const T& a = m.at(i0, j);
    if (!RingTraits<T>::is_zero(a)) {
      T sub = pfaffian_masked(m, mask & ~(1u << i0) & ~(1u << j), memo);
      T term = a * sub;
      if (pos % 2 == 0) acc -= term;
      else acc += term;
    }
  }
  memo.emplace(mask, acc);
  return acc;
}

template <class T>
T pfaffian(const Matrix<T>& m) {
  bool skew = m.is_square() && m.rows() % 2 == 0;
  if (skew)
    for (int i = 0; i < m.rows() && skew; ++i)
      for (int j = i; j < m.cols() && skew; ++j)
        if (m.at(i, j) != -m.at(j, i)) skew = false;
  require(skew, "not skew-symmetric of even order");
  if (m.rows() == 0) return RingTraits<T>::one();
  require(m.rows() <= 26, "pfaffian order out of supported range");
  std::map<unsigned, T> memo;
  return pfaffian_masked(m, (1u << m.rows()) - 1u, memo);
}

// Characteristic polynomial det(eta I - m) of a matrix over Q[w], exact and monic.
BiSpectralPolynomial char_poly(const PolyMat& m);

// det(x I - m) for a rational matrix, as a monic UniPoly.
UniPoly char_poly(const RatMat& m);

// Companion matrix of p in the power basis 1, eta, ..., eta^{n-1}
// (columns are images under multiplication by eta).
PolyMat companion(const BiSpectralPolynomial& p);

// eta * I - m as a matrix over Q[w][eta].
BiMat eta_minus(const PolyMat& m);

}  // namespace hitchin
