#include "qk/linalg.hpp"

#include <algorithm>
#include <utility>

#include "qk/errors.hpp"

namespace qk {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ExtScalar(1);
  return m;
}

Mat Mat::adjoint() const {
  Mat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = conj(at(i, j));
  return m;
}

ExtScalar Mat::trace() const {
  ExtScalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool Mat::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (at(i, j) != conj(at(j, i))) return false;
  return true;
}

Mat operator*(const Mat& x, const Mat& y) {
  if (x.cols_ != y.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Mat r(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const ExtScalar& xik = x.at(i, k);
      if (xik.is_zero()) continue;  // exact sparsity pays off on basis-like inputs
      for (std::size_t j = 0; j < y.cols_; ++j) {
        const ExtScalar& ykj = y.at(k, j);
        if (ykj.is_zero()) continue;
        r.at(i, j) += xik * ykj;
      }
    }
  }
  return r;
}

Mat operator+(const Mat& x, const Mat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Mat r(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.data_.size(); ++i) r.data_[i] = x.data_[i] + y.data_[i];
  return r;
}

Mat operator-(const Mat& x, const Mat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Mat r(x.rows_, x.cols_);
  for (std::size_t i = 0; i < x.data_.size(); ++i) r.data_[i] = x.data_[i] - y.data_[i];
  return r;
}

Mat scale(const ExtScalar& s, const Mat& m) {
  Mat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r.at(i, j) = s * m.at(i, j);
  return r;
}

QVector::QVector(unsigned n, std::vector<ExtScalar> e) : n_qubits(n), entries(std::move(e)) {
  if (entries.size() != (std::size_t(1) << n))
    throw DimensionMismatch("vector on " + std::to_string(n) + " qubits needs 2^n entries");
}

QVector basis_vector(std::string_view bits) {
  std::size_t index = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw DomainError("bitstring may contain only 0/1");
    index = index * 2 + (ch == '1');
  }
  return basis_vector(static_cast<unsigned>(bits.size()), index);
}

QVector basis_vector(unsigned n_qubits, std::size_t index) {
  std::vector<ExtScalar> e(std::size_t(1) << n_qubits);
  e.at(index) = ExtScalar(1);
  return QVector(n_qubits, std::move(e));
}

QVector tensor(const QVector& v, const QVector& w) {
  std::vector<ExtScalar> e;
  e.reserve(v.dim() * w.dim());
  for (const auto& vi : v.entries)
    for (const auto& wj : w.entries) e.push_back(vi.is_zero() || wj.is_zero() ? ExtScalar() : vi * wj);
  return QVector(v.n_qubits + w.n_qubits, std::move(e));
}

ExtScalar inner_product(const QVector& u, const QVector& v) {
  if (u.n_qubits != v.n_qubits) throw DimensionMismatch("inner product dimension mismatch");
  ExtScalar s;
  for (std::size_t k = 0; k < u.dim(); ++k) {
    if (u.entries[k].is_zero() || v.entries[k].is_zero()) continue;
    s += conj(u.entries[k]) * v.entries[k];
  }
  return s;
}

std::optional<OrthoSet> OrthoSet::check(std::vector<QVector> vectors, OrthoViolation* violation) {
  if (vectors.empty()) {
    if (violation) *violation = {0, 0, ExtScalar(), "empty vector family"};
    return std::nullopt;
  }
  const unsigned n = vectors.front().n_qubits;
  for (const auto& v : vectors)
    if (v.n_qubits != n) throw DimensionMismatch("mixed dimensions in vector family");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      const ExtScalar g = inner_product(vectors[i], vectors[j]);
      const ExtScalar expected = i == j ? ExtScalar(1) : ExtScalar();
      if (g != expected) {
        if (violation) {
          const std::string what =
              i == j ? "norm^2 of vector " + std::to_string(i) + " is " + format_scalar(g)
                     : "inner product of vectors " + std::to_string(i) + ", " + std::to_string(j) +
                           " is " + format_scalar(g);
          *violation = {i, j, g, what};
        }
        return std::nullopt;
      }
    }
  }
  return OrthoSet(n, std::move(vectors));
}

OrthoSet OrthoSet::require(std::vector<QVector> vectors) {
  OrthoViolation why;
  auto set = check(std::move(vectors), &why);
  if (!set) throw ValidationError("not an orthonormal set: " + why.message);
  return std::move(*set);
}

bool operator==(const OrthoSet& x, const OrthoSet& y) {
  if (x.n_qubits_ != y.n_qubits_ || x.size() != y.size()) return false;
  for (const auto& v : x.vectors_)
    if (std::find(y.vectors_.begin(), y.vectors_.end(), v) == y.vectors_.end()) return false;
  return true;
}

OrthoSet standard_basis(unsigned n_qubits) {
  std::vector<QVector> vs;
  const std::size_t dim = std::size_t(1) << n_qubits;
  vs.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) vs.push_back(basis_vector(n_qubits, k));
  return OrthoSet::require(std::move(vs));
}

ExactProjection ExactProjection::make(unsigned n_qubits, Mat matrix) {
  const std::size_t dim = std::size_t(1) << n_qubits;
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw DimensionMismatch("projection matrix has wrong shape for qubit count");
  if (!matrix.is_hermitian()) throw ValidationError("projection matrix is not Hermitian");
  if (matrix * matrix != matrix) throw ValidationError("projection matrix is not idempotent");
  const ExtScalar t = matrix.trace();
  // Hermitian + idempotent forces an integral trace; read it off exactly.
  if (!t.is_real() || t.b != 0 || denominator(t.a) != 1 || t.a < 0)
    throw ValidationError("projection trace is not a natural number");
  return ExactProjection(n_qubits, std::move(matrix), static_cast<unsigned>(numerator(t.a)));
}

ExactProjection ExactProjection::identity(unsigned n_qubits) {
  return ExactProjection(n_qubits, Mat::identity(std::size_t(1) << n_qubits),
                         static_cast<unsigned>(std::size_t(1) << n_qubits));
}

ExactProjection ExactProjection::zero(unsigned n_qubits) {
  return ExactProjection(n_qubits, Mat(std::size_t(1) << n_qubits, std::size_t(1) << n_qubits), 0);
}

ExactProjection projector_onto(const OrthoSet& f) {
  const std::size_t dim = std::size_t(1) << f.n_qubits();
  Mat m(dim, dim);
  for (const auto& v : f.vectors())
    for (std::size_t i = 0; i < dim; ++i) {
      if (v.entries[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (v.entries[j].is_zero()) continue;
        m.at(i, j) += v.entries[i] * conj(v.entries[j]);
      }
    }
  return ExactProjection::make(f.n_qubits(), std::move(m));
}

namespace {

// Indices of a maximal independent subset, by incremental elimination
// against a row-echelon copy of the span.
std::vector<std::size_t> independent_subset(std::span<const QVector> vs) {
  std::vector<std::size_t> chosen;
  std::vector<std::vector<ExtScalar>> echelon;  // rows with recorded pivot columns
  std::vector<std::size_t> pivot_col;
  for (std::size_t idx = 0; idx < vs.size(); ++idx) {
    std::vector<ExtScalar> row = vs[idx].entries;
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const ExtScalar& lead = row[pivot_col[r]];
      if (lead.is_zero()) continue;
      const ExtScalar factor = lead / echelon[r][pivot_col[r]];
      for (std::size_t c = 0; c < row.size(); ++c)
        if (!echelon[r][c].is_zero()) row[c] -= factor * echelon[r][c];
    }
    std::size_t lead = row.size();
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero()) {
        lead = c;
        break;
      }
    if (lead == row.size()) continue;  // dependent
    chosen.push_back(idx);
    echelon.push_back(std::move(row));
    pivot_col.push_back(lead);
  }
  return chosen;
}

// Solves G X = B for Hermitian positive-definite G by exact Gauss-Jordan.
Mat solve(Mat g, Mat b) {
  const std::size_t n = g.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && g.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw Error("singular Gram matrix");  // unreachable for independent columns
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(g.at(piv, j), g.at(col, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b.at(piv, j), b.at(col, j));
    }
    const ExtScalar inv = ExtScalar(1) / g.at(col, col);
    for (std::size_t j = 0; j < n; ++j) g.at(col, j) = inv * g.at(col, j);
    for (std::size_t j = 0; j < b.cols(); ++j) b.at(col, j) = inv * b.at(col, j);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || g.at(r, col).is_zero()) continue;
      const ExtScalar f = g.at(r, col);
      for (std::size_t j = 0; j < n; ++j) g.at(r, j) -= f * g.at(col, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b.at(r, j) -= f * b.at(col, j);
    }
  }
  return b;
}

}  // namespace

ExactProjection projection_from_span(std::span<const QVector> vs) {
  if (vs.empty()) throw DomainError("projection_from_span needs at least one vector");
  const unsigned n = vs.front().n_qubits;
  for (const auto& v : vs)
    if (v.n_qubits != n) throw DimensionMismatch("mixed dimensions in span");
  const std::vector<std::size_t> idx = independent_subset(vs);
  if (idx.empty()) return ExactProjection::zero(n);

  const std::size_t dim = std::size_t(1) << n;
  Mat v_mat(dim, idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) v_mat.at(r, c) = vs[idx[c]].entries[r];
  const Mat v_adj = v_mat.adjoint();
  const Mat x = solve(v_adj * v_mat, v_adj);  // (V*V)^{-1} V*
  Mat p = v_mat * x;
  auto proj = ExactProjection::make(n, std::move(p));  // re-checks idempotence and trace
  if (proj.rank() != idx.size()) throw Error("span projector rank mismatch");
  return proj;
}

Rational tau_measure(const ExactProjection& p) {
  return Rational(p.rank(), pow2(p.n_qubits()));
}

ExactProjection tensor_with_identity(const ExactProjection& p, unsigned extra_qubits) {
  if (extra_qubits == 0) return p;
  const std::size_t dim = p.dim();
  const std::size_t block = std::size_t(1) << extra_qubits;
  Mat m(dim * block, dim * block);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const ExtScalar& e = p.matrix().at(i, j);
      if (e.is_zero()) continue;
      for (std::size_t a = 0; a < block; ++a) m.at(i * block + a, j * block + a) = e;
    }
  return ExactProjection::make(p.n_qubits() + extra_qubits, std::move(m));
}

bool is_positive_semidefinite(Mat a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  while (!active.empty()) {
    // pick a strictly positive diagonal pivot
    std::size_t pivot_pos = active.size();
    for (std::size_t t = 0; t < active.size(); ++t) {
      const std::size_t k = active[t];
      const ExtScalar& dkk = a.at(k, k);
      if (!dkk.is_real()) return false;  // not Hermitian to begin with
      const int s = sign_real(dkk);
      if (s < 0) return false;
      if (s > 0 && pivot_pos == active.size()) pivot_pos = t;
    }
    if (pivot_pos == active.size()) {
      // all remaining diagonal entries are zero: PSD iff the whole block is zero
      for (std::size_t t = 0; t < active.size(); ++t)
        for (std::size_t u = 0; u < active.size(); ++u)
          if (!a.at(active[t], active[u]).is_zero()) return false;
      return true;
    }
    const std::size_t k = active[pivot_pos];
    const ExtScalar inv = ExtScalar(1) / a.at(k, k);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    for (std::size_t t = 0; t < active.size(); ++t) {
      const std::size_t i = active[t];
      if (a.at(i, k).is_zero()) continue;
      const ExtScalar f = a.at(i, k) * inv;
      for (std::size_t u = 0; u < active.size(); ++u) {
        const std::size_t j = active[u];
        if (a.at(k, j).is_zero()) continue;
        a.at(i, j) -= f * a.at(k, j);
      }
    }
  }
  return true;
}

DensityMatrix DensityMatrix::make(unsigned n_qubits, Mat matrix) {
  const std::size_t dim = std::size_t(1) << n_qubits;
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw DimensionMismatch("density matrix has wrong shape for qubit count");
  if (!matrix.is_hermitian()) throw ValidationError("density matrix is not Hermitian");
  if (matrix.trace() != ExtScalar(1)) throw ValidationError("density matrix trace is not 1");
  if (!is_positive_semidefinite(matrix)) throw ValidationError("density matrix is not PSD");
  return DensityMatrix(n_qubits, std::move(matrix));
}

DensityMatrix DensityMatrix::from_pure(const QVector& v) {
  const ExtScalar nrm = inner_product(v, v);
  if (nrm.is_zero()) throw DomainError("zero vector has no associated pure state");
  const ExtScalar inv = ExtScalar(1) / nrm;
  Mat m(v.dim(), v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v.entries[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.dim(); ++j) {
      if (v.entries[j].is_zero()) continue;
      m.at(i, j) = inv * v.entries[i] * conj(v.entries[j]);
    }
  }
  return make(v.n_qubits, std::move(m));
}

DensityMatrix DensityMatrix::tracial(unsigned n_qubits) {
  const std::size_t dim = std::size_t(1) << n_qubits;
  Mat m(dim, dim);
  const ExtScalar w{Rational(1, pow2(n_qubits))};
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = w;
  return DensityMatrix(n_qubits, std::move(m));
}

ExtScalar overlap(const DensityMatrix& rho, const ExactProjection& p) {
  if (rho.n_qubits() != p.n_qubits()) throw DimensionMismatch("overlap dimension mismatch");
  ExtScalar t;
  const std::size_t dim = rho.dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      const ExtScalar& r = rho.matrix().at(i, k);
      if (r.is_zero()) continue;
      const ExtScalar& q = p.matrix().at(k, i);
      if (q.is_zero()) continue;
      t += r * q;
    }
  if (!t.is_real() || sign_real(t) < 0 || compare_real(t, Rational(1)) > 0)
    throw Error("overlap left [0,1]: " + format_scalar(t));  // bug trap
  return t;
}

ExtScalar state_overlap(const DensityMatrix& rho, const QVector& v) {
  if (rho.n_qubits() != v.n_qubits) throw DimensionMismatch("overlap dimension mismatch");
  ExtScalar t;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v.entries[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.dim(); ++j) {
      if (v.entries[j].is_zero() || rho.matrix().at(i, j).is_zero()) continue;
      t += conj(v.entries[i]) * rho.matrix().at(i, j) * v.entries[j];
    }
  }
  return t;
}

DensityMatrix partial_trace(const DensityMatrix& rho) {
  if (rho.n_qubits() == 0) throw DomainError("cannot trace out a qubit of a 0-qubit state");
  const std::size_t half = rho.dim() / 2;
  Mat m(half, half);
  for (std::size_t i = 0; i < half; ++i)
    for (std::size_t j = 0; j < half; ++j)
      m.at(i, j) = rho.matrix().at(2 * i, 2 * j) + rho.matrix().at(2 * i + 1, 2 * j + 1);
  return DensityMatrix::make(rho.n_qubits() - 1, std::move(m));
}

std::vector<std::size_t> heavy_basis_vectors(const OrthoSet& E, const ExactProjection& F,
                                             const Rational& delta) {
  if (E.n_qubits() != F.n_qubits()) throw DimensionMismatch("basis and projection dimension mismatch");
  if (!E.is_full_basis()) throw DomainError("heavy_basis_vectors needs a full orthonormal basis");
  if (delta <= 0) throw DomainError("delta must be positive");

  std::vector<std::size_t> heavy;
  for (std::size_t k = 0; k < E.size(); ++k) {
    // <e|F|e> as a quadratic form
    const QVector& e = E[k];
    ExtScalar q;
    for (std::size_t i = 0; i < e.dim(); ++i) {
      if (e.entries[i].is_zero()) continue;
      for (std::size_t j = 0; j < e.dim(); ++j) {
        if (e.entries[j].is_zero() || F.matrix().at(i, j).is_zero()) continue;
        q += conj(e.entries[i]) * F.matrix().at(i, j) * e.entries[j];
      }
    }
    if (compare_real(q, delta) > 0) heavy.push_back(k);
  }
  if (F.rank() > 0) {
    // |S| < delta^{-1} Tr(F), exactly
    if (!(Rational(heavy.size()) * delta < Rational(F.rank())))
      throw Error("heavy vector count bound violated");  // bug trap
  }
  return heavy;
}

}  // namespace qk
