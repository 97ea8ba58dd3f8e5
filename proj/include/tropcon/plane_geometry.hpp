#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tropcon/construction.hpp"
#include "tropcon/puiseux.hpp"
#include "tropcon/trop_core.hpp"

namespace tropcon {

using AffinePoint = Eigen::Matrix<Rational, 2, 1>;

/// Tropical plane line a(.)x (+) b(.)y (+) c(.)z, stored by its dual
/// coordinates [a:b:c].
class TropLine {
 public:
  TropLine() = default;
  explicit TropLine(TropPoint coeffs);
  TropLine(std::initializer_list<Rational> coeffs) : TropLine(TropPoint(coeffs)) {}

  const TropPoint& coeffs() const noexcept { return coeffs_; }
  /// Affine vertex (c - a, c - b).
  AffinePoint vertex() const;
  /// Unit ray directions from the vertex: (1,1), (0,-1), (-1,0).
  static const std::array<AffinePoint, 3>& ray_directions();

  friend bool operator==(const TropLine& a, const TropLine& b) { return a.coeffs_ == b.coeffs_; }

 private:
  TropPoint coeffs_;
};

std::string to_string(const TropLine& l);

bool point_on_line(const TropPoint& p, const TropLine& l);
bool point_on_line(const AffinePoint& p, const TropLine& l);

/// Closed point, segment or ray in the affine chart z = 0.
struct Cell {
  enum class Kind { Point, Segment, Ray };
  Kind kind = Kind::Point;
  AffinePoint start;      // point, segment start, ray origin
  AffinePoint end;        // segment end
  AffinePoint direction;  // ray direction

  bool contains(const AffinePoint& p) const;
  friend bool operator==(const Cell& a, const Cell& b);
};

std::string to_string(const Cell& c);

/// Set-theoretic intersection of two lines as cells with disjoint relative
/// interiors; isolated points already covered by a 1-cell are dropped.
std::vector<Cell> line_intersection_cells(const TropLine& l1, const TropLine& l2);

/// Point common to every line, or nullopt when the intersection is empty.
/// Enumerates which two terms attain each line's maximum and decides each
/// resulting linear system exactly. Among feasible systems the
/// lexicographically smallest selected point is returned.
std::optional<TropPoint> common_point_witness(std::span<const TropLine> lines);

/// Element names in construction order.
inline const std::array<std::string, 12> kPappusElements = {"a",  "b",  "c",  "a'",  "b'",  "c'",
                                                          "6",  "7",  "8",  "a''", "b''", "c''"};

/// Maps "1".."5" and the twelve constructed names to their tropical values.
using PappusElements = std::map<std::string, TropPoint, std::less<>>;

PappusElements pappus_construct(std::span<const TropPoint, 5> points);

struct PappusResult {
  std::optional<TropPoint> witness;  // absent only if the concurrency claim fails
  PappusElements elements;
};

PappusResult pappus_verify(std::span<const TropPoint, 5> points);

/// The same chain as a construction program with inputs "1".."5" and outputs
/// a'', b'', c''.
ConstructionProgram pappus_program();

struct LiftedCommonPoint {
  /// common_point_witness of the tropicalized lines.
  TropPoint witness;
  /// Point read off the lifted common point itself: its tropicalization when
  /// it lies in the torus, otherwise a point pushed far along the missing
  /// coordinate. Lies on every tropicalized line.
  TropPoint derived;
};

/// Lines l x + l' y + l'' z over Puiseux polynomials with every coefficient
/// nonzero and a caller-supplied common projective point. Throws
/// std::invalid_argument if a coefficient is zero or the certificate is not a
/// common point, and std::logic_error if the tropical lines share no point.
LiftedCommonPoint lifted_common_point_check(std::span<const PuiseuxVector> lines,
                                            const PuiseuxVector& common_point);

}  // namespace tropcon
