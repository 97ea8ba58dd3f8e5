#include "tropcon/trop_core.hpp"

#include <optional>
#include <sstream>

#include "tropcon/errors.hpp"

namespace tropcon {

std::string to_string(const TropScalar& x) { return to_string(x.value()); }

TropMatrix make_trop_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  TropMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw DimensionError("make_trop_matrix: ragged rows");
    Index j = 0;
    for (const auto& v : row) m(i, j++) = TropScalar(v);
    ++i;
  }
  return m;
}

TropPoint::TropPoint(std::initializer_list<Rational> coords)
    : coords_(static_cast<Index>(coords.size())) {
  Index i = 0;
  for (const auto& v : coords) coords_(i++) = TropScalar(v);
}

TropPoint TropPoint::canonical() const {
  if (coords_.size() == 0) return *this;
  const TropScalar last = coords_(coords_.size() - 1);
  TropVector out(coords_.size());
  for (Index i = 0; i < coords_.size(); ++i) out(i) = odiv(coords_(i), last);
  return TropPoint(std::move(out));
}

Vector<Rational> TropPoint::affine() const {
  if (coords_.size() == 0) throw DimensionError("affine: empty point");
  const Index n = coords_.size() - 1;
  Vector<Rational> out(n);
  for (Index i = 0; i < n; ++i) out(i) = coords_(i).value() - coords_(n).value();
  return out;
}

TropPoint TropPoint::from_affine(const Vector<Rational>& affine) {
  TropVector coords(affine.size() + 1);
  for (Index i = 0; i < affine.size(); ++i) coords(i) = TropScalar(affine(i));
  coords(affine.size()) = TropScalar(0);
  return TropPoint(std::move(coords));
}

bool operator==(const TropPoint& a, const TropPoint& b) {
  if (a.size() != b.size()) return false;
  if (a.size() == 0) return true;
  return a.canonical().coords_ == b.canonical().coords_;
}

std::string to_raw_string(const TropPoint& p) {
  std::ostringstream out;
  out << '[';
  for (Index i = 0; i < p.size(); ++i) {
    if (i) out << ':';
    out << to_string(p[i]);
  }
  out << ']';
  return out.str();
}

std::string to_string(const TropPoint& p) { return to_raw_string(p.canonical()); }

std::string to_affine_string(const TropPoint& p) {
  const Vector<Rational> a = p.affine();
  std::ostringstream out;
  out << '(';
  for (Index i = 0; i < a.size(); ++i) {
    if (i) out << ", ";
    out << to_string(a(i));
  }
  out << ')';
  return out.str();
}

namespace {

void require_square(const TropMatrix& m, const char* where) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError(std::string(where) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

TropDeterminant trop_det(const TropMatrix& m, int bound) {
  require_square(m, "trop_det");
  check_enumeration_bound(m.rows(), bound);
  TropDeterminant result;
  bool first = true;
  for_each_permutation(static_cast<int>(m.rows()), [&](const Permutation& sigma, int) {
    TropScalar weight(0);
    for (Index i = 0; i < m.rows(); ++i) {
      weight = otimes(weight, m(i, sigma[static_cast<std::size_t>(i)]));
    }
    if (first || weight > result.value) {
      result.value = weight;
      result.optimal.assign(1, sigma);
      first = false;
    } else if (weight == result.value) {
      result.optimal.push_back(sigma);
    }
  });
  return result;
}

TropScalar trop_det_assignment(const TropMatrix& m) {
  require_square(m, "trop_det_assignment");
  // Shortest augmenting path Hungarian method on cost = -weight, 1-based with
  // a virtual row/column 0. `unset` stands in for +infinity.
  const std::size_t n = static_cast<std::size_t>(m.rows());
  auto cost = [&](std::size_t i, std::size_t j) -> Rational {
    return -m(static_cast<Index>(i - 1), static_cast<Index>(j - 1)).value();
  };
  std::vector<Rational> u(n + 1), v(n + 1);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        Rational cur = cost(i0, j) - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  TropScalar total(0);
  for (std::size_t j = 1; j <= n; ++j) {
    total = otimes(total, m(static_cast<Index>(match[j] - 1), static_cast<Index>(j - 1)));
  }
  return total;
}

TropPoint trop_cramer(const TropMatrix& o) {
  if (o.rows() == 0 || o.cols() != o.rows() + 1) {
    throw DimensionError("trop_cramer: expected n x (n+1), got " + std::to_string(o.rows()) + "x" +
                         std::to_string(o.cols()));
  }
  TropVector coords(o.cols());
  for (Index i = 0; i < o.cols(); ++i) coords(i) = trop_det_assignment(delete_column(o, i));
  return TropPoint(std::move(coords)).canonical();
}

TropPoint cross_product(const TropPoint& x, const TropPoint& y) {
  if (x.size() != 3 || y.size() != 3) {
    throw DimensionError("cross_product: both points need 3 homogeneous coordinates");
  }
  TropMatrix o(2, 3);
  o.row(0) = x.coords().transpose();
  o.row(1) = y.coords().transpose();
  return trop_cramer(o);
}

bool attains_max_twice(const TropVector& coeffs, const TropPoint& p) {
  if (coeffs.size() != p.size() || coeffs.size() == 0) {
    throw DimensionError("attains_max_twice: length mismatch");
  }
  TropScalar best = otimes(coeffs(0), p[0]);
  int count = 1;
  for (Index j = 1; j < coeffs.size(); ++j) {
    const TropScalar term = otimes(coeffs(j), p[j]);
    if (term > best) {
      best = term;
      count = 1;
    } else if (term == best) {
      ++count;
    }
  }
  return count >= 2;
}

namespace {

TropVector conic_monomials(const TropPoint& p) {
  if (p.size() != 3) throw DimensionError("stable_conic: points need 3 homogeneous coordinates");
  const Vector<Rational> a = p.affine();
  const Rational& x = a(0);
  const Rational& y = a(1);
  TropVector row(6);
  row << TropScalar(x + x), TropScalar(x + y), TropScalar(y + y), TropScalar(x), TropScalar(y),
      TropScalar(0);
  return row;
}

}  // namespace

TropPoint stable_conic(std::span<const TropPoint> points) {
  if (points.size() != 5) throw DimensionError("stable_conic: expected five points");
  TropMatrix o(5, 6);
  for (Index i = 0; i < 5; ++i) o.row(i) = conic_monomials(points[static_cast<std::size_t>(i)]).transpose();
  return trop_cramer(o);
}

TropVector conic_terms(const TropPoint& conic, const TropPoint& p) {
  if (conic.size() != 6) throw DimensionError("conic_terms: expected six coefficients");
  const TropVector monomials = conic_monomials(p);
  TropVector out(6);
  for (Index j = 0; j < 6; ++j) out(j) = otimes(conic[j], monomials(j));
  return out;
}

}  // namespace tropcon
