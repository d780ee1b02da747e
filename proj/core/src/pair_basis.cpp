#include "macrogame/pair_basis.hpp"

namespace macrogame {

PairBasis::PairBasis(std::vector<int> partner, std::vector<int> parity)
    : partner_(std::move(partner)), parity_(std::move(parity)) {
  if (partner_.size() != parity_.size())
    throw DimensionMismatch("pair basis: partner/parity size mismatch");
  signs_.resize(partner_.size());
  for (int i = 0; i < size(); ++i) {
    const int j = partner_[i];
    if (j < 0 || j >= size() || partner_[j] != i)
      throw DimensionMismatch("pair basis: inconsistent partner map");
    if (j == i) {
      signs_[i] = parity_[i];
    } else {
      signs_[i] = i < j ? 1 : -1;  // sum slot even, diff slot odd
    }
  }
}

Vector PairBasis::to_pair(const Vector& country) const {
  if (country.size() != size())
    throw DimensionMismatch("pair basis: vector size mismatch");
  Vector out(size());
  for (int i = 0; i < size(); ++i) {
    const int j = partner_[i];
    if (j == i) {
      out[i] = country[i];
    } else if (i < j) {
      out[i] = 0.5 * (country[i] + country[j]);
    } else {
      out[i] = 0.5 * (country[j] - country[i]);
    }
  }
  return out;
}

Vector PairBasis::to_country(const Vector& pair) const {
  if (pair.size() != size())
    throw DimensionMismatch("pair basis: vector size mismatch");
  Vector out(size());
  for (int i = 0; i < size(); ++i) {
    const int j = partner_[i];
    if (j == i) {
      out[i] = pair[i];
    } else if (i < j) {
      out[i] = pair[i] + pair[j];
    } else {
      out[i] = pair[j] - pair[i];
    }
  }
  return out;
}

Matrix PairBasis::mat_to_pair(const Matrix& m, const PairBasis& col_basis) const {
  if (m.rows() != size() || m.cols() != col_basis.size())
    throw DimensionMismatch("pair basis: matrix size mismatch");
  // Row combinations with factor 1/2.
  Matrix rows(m.rows(), m.cols());
  for (int i = 0; i < size(); ++i) {
    const int j = partner_[i];
    for (int c = 0; c < m.cols(); ++c) {
      if (j == i) {
        rows(i, c) = m(i, c);
      } else if (i < j) {
        rows(i, c) = 0.5 * (m(i, c) + m(j, c));
      } else {
        rows(i, c) = 0.5 * (m(j, c) - m(i, c));
      }
    }
  }
  // Column combinations with unit factors.
  Matrix out(m.rows(), m.cols());
  for (int c = 0; c < col_basis.size(); ++c) {
    const int d = col_basis.partner_[c];
    for (int r = 0; r < size(); ++r) {
      if (d == c) {
        out(r, c) = rows(r, c);
      } else if (c < d) {
        out(r, c) = rows(r, c) + rows(r, d);
      } else {
        out(r, c) = rows(r, d) - rows(r, c);
      }
    }
  }
  return out;
}

Vector PairBasis::mirror_country(const Vector& country) const {
  if (country.size() != size())
    throw DimensionMismatch("pair basis: vector size mismatch");
  Vector out(size());
  for (int i = 0; i < size(); ++i) {
    const int j = partner_[i];
    out[i] = j == i ? parity_[i] * country[i] : country[j];
  }
  return out;
}

}  // namespace macrogame
