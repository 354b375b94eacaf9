#include "ringgrp/abelianization.hpp"

#include <optional>
#include <sstream>
#include <utility>

namespace ringgrp {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] += k * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += k * m(r, src);
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Integer>& d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error("matrix dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& a = f.d;
  const std::size_t diag = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < diag;) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        if (!pivot || abs(a(i, j)) < abs(a(pivot->first, pivot->second))) pivot = {i, j};
      }
    if (!pivot) break;

    swap_rows(a, t, pivot->first);
    swap_rows(f.u, t, pivot->first);
    swap_cols(a, t, pivot->second);
    swap_cols(f.v, t, pivot->second);

    const Integer p = a(t, t);
    bool clean = true;
    for (std::size_t r = t + 1; r < a.rows(); ++r) {
      if (a(r, t) == 0) continue;
      Integer q = a(r, t) / p;
      add_row(a, r, t, -q);
      add_row(f.u, r, t, -q);
      if (a(r, t) != 0) clean = false;
    }
    for (std::size_t c = t + 1; c < a.cols(); ++c) {
      if (a(t, c) == 0) continue;
      Integer q = a(t, c) / p;
      add_col(a, c, t, -q);
      add_col(f.v, c, t, -q);
      if (a(t, c) != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder now exists; re-pick

    std::optional<std::size_t> bad_row;
    for (std::size_t r = t + 1; r < a.rows() && !bad_row; ++r)
      for (std::size_t c = t + 1; c < a.cols(); ++c)
        if (a(r, c) % p != 0) {
          bad_row = r;
          break;
        }
    if (bad_row) {
      add_row(a, t, *bad_row, 1);
      add_row(f.u, t, *bad_row, 1);
      continue;
    }

    if (p < 0) {
      add_row(a, t, t, -2);
      add_row(f.u, t, t, -2);
    }
    ++t;
  }
  return f;
}

std::string AbelianInvariants::to_string() const {
  std::string s;
  if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.str();
  }
  return s.empty() ? "0" : s;
}

IntMatrix relator_matrix(const Presentation& p) {
  GroupSpec free(p.generators());
  IntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    auto v = abelianize_word(free, p.relators()[i]);
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[j];
  }
  return m;
}

AbelianInvariants invariants_of(const IntMatrix& relations) {
  auto f = smith_normal_form(relations);
  AbelianInvariants inv;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(f.d.rows(), f.d.cols()); ++i) {
    const Integer& d = f.d(i, i);
    if (d == 0) continue;
    ++nonzero;
    if (d != 1) inv.torsion.push_back(d);
  }
  inv.free_rank = relations.cols() - nonzero;
  return inv;
}

AbelianInvariants abelianization(const Presentation& p) { return invariants_of(relator_matrix(p)); }

}  // namespace ringgrp
