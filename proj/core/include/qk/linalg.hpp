#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qk/ext_scalar.hpp"

namespace qk {

// Dense matrix over Q(i)(sqrt2). Sized for desk scale (dimensions are
// powers of two up to 2^6 here); everything is exact, nothing is ever
// rounded.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ExtScalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ExtScalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Mat adjoint() const;
  ExtScalar trace() const;
  bool is_hermitian() const;

  friend Mat operator*(const Mat& x, const Mat& y);
  friend Mat operator+(const Mat& x, const Mat& y);
  friend Mat operator-(const Mat& x, const Mat& y);
  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtScalar> data_;
};

Mat scale(const ExtScalar& s, const Mat& m);

// Column vector in C^{2^n} with exact entries. Index convention: qubit k of
// n addresses bit (n-k) of the index, i.e. the last qubit is the fastest
// (least significant) bit. Stated here once and used everywhere.
struct QVector {
  unsigned n_qubits = 0;
  std::vector<ExtScalar> entries;

  QVector() = default;
  QVector(unsigned n, std::vector<ExtScalar> e);

  std::size_t dim() const { return entries.size(); }

  friend bool operator==(const QVector&, const QVector&) = default;
};

// |bits> in the standard computational basis.
QVector basis_vector(std::string_view bits);
// e_index on n qubits.
QVector basis_vector(unsigned n_qubits, std::size_t index);
// v (x) w, earlier factors on more significant bits.
QVector tensor(const QVector& v, const QVector& w);

// sum conj(u_i) v_i. Throws DimensionMismatch.
ExtScalar inner_product(const QVector& u, const QVector& v);

struct OrthoViolation {
  std::size_t i = 0;
  std::size_t j = 0;  // i == j: bad norm; i != j: nonzero inner product
  ExtScalar value;
  std::string message;
};

// A finite orthonormal family: pairwise inner products exactly 0, every
// norm^2 exactly 1.
class OrthoSet {
 public:
  // Returns the violating pair instead of a set when the Gram matrix is not
  // exactly the identity.
  static std::optional<OrthoSet> check(std::vector<QVector> vectors, OrthoViolation* violation);
  // Throwing variant for callers that already know the family is sound.
  static OrthoSet require(std::vector<QVector> vectors);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<QVector>& vectors() const { return vectors_; }
  const QVector& operator[](std::size_t k) const { return vectors_[k]; }

  bool is_full_basis() const { return size() == (std::size_t(1) << n_qubits_); }

  // Unordered equality; orthonormality makes elements distinct, so this is
  // plain set equality.
  friend bool operator==(const OrthoSet& x, const OrthoSet& y);

 private:
  OrthoSet(unsigned n, std::vector<QVector> v) : n_qubits_(n), vectors_(std::move(v)) {}
  unsigned n_qubits_ = 0;
  std::vector<QVector> vectors_;
};

// Standard computational basis of C^{2^n}.
OrthoSet standard_basis(unsigned n_qubits);

// Hermitian idempotent with exact entries plus its rank (== trace).
class ExactProjection {
 public:
  // Validates matrix^2 == matrix, hermiticity, and integral trace == rank.
  static ExactProjection make(unsigned n_qubits, Mat matrix);
  static ExactProjection identity(unsigned n_qubits);
  static ExactProjection zero(unsigned n_qubits);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return matrix_.rows(); }
  const Mat& matrix() const { return matrix_; }
  unsigned rank() const { return rank_; }

  friend bool operator==(const ExactProjection&, const ExactProjection&) = default;

 private:
  ExactProjection(unsigned n, Mat m, unsigned r) : n_qubits_(n), matrix_(std::move(m)), rank_(r) {}
  unsigned n_qubits_ = 0;
  Mat matrix_;
  unsigned rank_ = 0;
};

// sum_v |v><v| over an orthonormal family; rank == |F| with no elimination.
ExactProjection projector_onto(const OrthoSet& f);

// Exact orthogonal projector onto span(vs), via P = V (V*V)^{-1} V* on a
// maximal independent subset. Orthonormalizing instead would need square
// roots outside the field. rank == dim span.
ExactProjection projection_from_span(std::span<const QVector> vs);

// rank / 2^n, the quantum Lebesgue measure of the range.
Rational tau_measure(const ExactProjection& p);

// p (x) I on `extra` more qubits (appended as fastest bits).
ExactProjection tensor_with_identity(const ExactProjection& p, unsigned extra_qubits);

// Hermitian, trace-1, positive semidefinite matrix with exact entries.
// PSD is decided by exact pivoted LDL* (zero pivots deflate, any negative
// pivot rejects).
class DensityMatrix {
 public:
  static DensityMatrix make(unsigned n_qubits, Mat matrix);
  // |v><v| / <v|v>. Throws DomainError for v == 0.
  static DensityMatrix from_pure(const QVector& v);
  // 2^{-n} I, the tracial state at depth n.
  static DensityMatrix tracial(unsigned n_qubits);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return matrix_.rows(); }
  const Mat& matrix() const { return matrix_; }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  DensityMatrix(unsigned n, Mat m) : n_qubits_(n), matrix_(std::move(m)) {}
  unsigned n_qubits_ = 0;
  Mat matrix_;
};

// Tr(rho p), exact; real and within [0,1]. Throws DimensionMismatch.
ExtScalar overlap(const DensityMatrix& rho, const ExactProjection& p);

// <v| rho |v) for a single vector; real, within [0,1].
ExtScalar state_overlap(const DensityMatrix& rho, const QVector& v);

// Traces out the last (fastest) qubit. Throws DomainError at n == 0.
DensityMatrix partial_trace(const DensityMatrix& rho);

// Lemma-style heavy vector extraction: indices of the e in E with
// <e|F|e> > delta, strict and exact. E must span the full space. The
// returned set satisfies |S| * delta < Tr(F) whenever Tr(F) > 0; this is
// asserted and a failure throws (it would be a bug, not an input problem).
std::vector<std::size_t> heavy_basis_vectors(const OrthoSet& E, const ExactProjection& F,
                                             const Rational& delta);

// True iff the Hermitian matrix is positive semidefinite (exact LDL*).
bool is_positive_semidefinite(Mat a);

}  // namespace qk
