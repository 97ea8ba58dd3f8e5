#pragma once

// Hand-rolled random generators shared by the property tests and the
// acceptance binary. Everything is driven by an explicit mt19937_64 so that a
// failing case can be replayed from its seed.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tropcon/construction.hpp"
#include "tropcon/construction_file.hpp"
#include "tropcon/puiseux.hpp"
#include "tropcon/trop_core.hpp"

namespace tropcon::testing {

using Rng = std::mt19937_64;

inline long random_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// n/d with n in [-range*d, range*d] and d in [1, max_den].
inline Rational random_rational(Rng& rng, long range, long max_den = 1) {
  const long d = random_int(rng, 1, max_den);
  return Rational(random_int(rng, -range * d, range * d), d);
}

inline Rational random_nonzero_rational(Rng& rng, long range, long max_den = 1) {
  for (;;) {
    Rational q = random_rational(rng, range, max_den);
    if (q != 0) return q;
  }
}

inline TropMatrix random_trop_matrix(Rng& rng, Index rows, Index cols, long lo, long hi) {
  TropMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = TropScalar(Rational(random_int(rng, lo, hi)));
  }
  return m;
}

inline TropPoint random_trop_point(Rng& rng, Index size, long range, long max_den = 1) {
  TropVector v(size);
  for (Index i = 0; i < size; ++i) v(i) = TropScalar(random_rational(rng, range, max_den));
  return TropPoint(std::move(v));
}

/// Nonzero Puiseux polynomial with 1..max_terms terms, integer exponents in
/// [-exp_range, exp_range] and coefficients in [-coef_range, coef_range].
inline PuiseuxPoly random_puiseux(Rng& rng, int max_terms, long exp_range, long coef_range) {
  for (;;) {
    std::vector<std::pair<Rational, Rational>> terms;
    const long count = random_int(rng, 1, max_terms);
    for (long k = 0; k < count; ++k) {
      terms.emplace_back(Rational(random_int(rng, -exp_range, exp_range)),
                         random_nonzero_rational(rng, coef_range));
    }
    PuiseuxPoly p = PuiseuxPoly::from_terms(terms);
    if (!p.is_zero()) return p;
  }
}

inline PuiseuxMatrix random_puiseux_matrix(Rng& rng, Index rows, Index cols, int max_terms,
                                           long exp_range, long coef_range) {
  PuiseuxMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = random_puiseux(rng, max_terms, exp_range, coef_range);
  }
  return m;
}

/// Classical cross product in K^3.
inline PuiseuxVector cross3(const PuiseuxVector& u, const PuiseuxVector& v) {
  PuiseuxVector w(3);
  w(0) = u(1) * v(2) - u(2) * v(1);
  w(1) = u(2) * v(0) - u(0) * v(2);
  w(2) = u(0) * v(1) - u(1) * v(0);
  return w;
}

/// k lines with every coefficient nonzero through `point`, each the cross
/// product of `point` with a random auxiliary point.
inline std::vector<PuiseuxVector> random_lines_through(Rng& rng, const PuiseuxVector& point,
                                                       int k) {
  std::vector<PuiseuxVector> lines;
  while (static_cast<int>(lines.size()) < k) {
    PuiseuxVector q(3);
    for (Index j = 0; j < 3; ++j) q(j) = random_puiseux(rng, 2, 3, 20);
    PuiseuxVector l = cross3(point, q);
    if (std::none_of(l.begin(), l.end(), [](const PuiseuxPoly& c) { return c.is_zero(); })) {
      lines.push_back(std::move(l));
    }
  }
  return lines;
}

/// Random program whose every derived element has a tree construction graph:
/// the parents of each step have pairwise disjoint ancestor sets. All derived
/// elements are declared outputs.
inline ConstructionFile random_tree_program(Rng& rng, int dimension, int max_steps, int max_depth,
                                            long coord_range = 10, long max_den = 2) {
  struct Node {
    std::string id;
    ElementKind kind;
    int depth;
    std::set<std::size_t> ancestors;
  };
  ConstructionFile file{ConstructionProgram(dimension), {}};
  std::vector<Node> nodes;
  int inputs = 0;
  int derived = 0;

  auto fresh_input = [&](ElementKind kind) {
    Node n{(kind == ElementKind::Point ? "p" : "h") + std::to_string(inputs++), kind, 0, {}};
    file.program.add_input(n.id, kind);
    file.inputs.emplace(n.id, random_trop_point(rng, dimension + 1, coord_range, max_den));
    n.ancestors.insert(nodes.size());
    nodes.push_back(std::move(n));
    return nodes.size() - 1;
  };

  const int steps = static_cast<int>(random_int(rng, 1, max_steps));
  for (int s = 0; s < steps; ++s) {
    const bool join = coin(rng);
    const ElementKind parent_kind = join ? ElementKind::Point : ElementKind::Line;
    std::vector<std::size_t> parents;
    std::set<std::size_t> used;
    for (int r = 0; r < dimension; ++r) {
      std::vector<std::size_t> candidates;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& n = nodes[i];
        if (n.kind != parent_kind || n.depth >= max_depth) continue;
        if (std::any_of(n.ancestors.begin(), n.ancestors.end(),
                        [&](std::size_t a) { return used.count(a) > 0; })) {
          continue;
        }
        candidates.push_back(i);
      }
      std::size_t pick;
      if (candidates.empty() || coin(rng, 0.35)) {
        pick = fresh_input(parent_kind);
      } else {
        pick = candidates[static_cast<std::size_t>(
            random_int(rng, 0, static_cast<long>(candidates.size()) - 1))];
      }
      parents.push_back(pick);
      used.insert(nodes[pick].ancestors.begin(), nodes[pick].ancestors.end());
    }
    Node n{"e" + std::to_string(derived++), join ? ElementKind::Line : ElementKind::Point, 0, used};
    std::vector<std::string> parent_ids;
    for (std::size_t p : parents) {
      parent_ids.push_back(nodes[p].id);
      n.depth = std::max(n.depth, nodes[p].depth + 1);
    }
    if (join) {
      file.program.add_join(n.id, parent_ids);
    } else {
      file.program.add_meet(n.id, parent_ids);
    }
    n.ancestors.insert(nodes.size());
    file.program.add_output(n.id);
    nodes.push_back(std::move(n));
  }
  return file;
}

/// Random integer plane point with affine coordinates in [-range, range].
inline TropPoint random_plane_point(Rng& rng, long range) {
  return TropPoint{Rational(random_int(rng, -range, range)),
                   Rational(random_int(rng, -range, range)), Rational(0)};
}

inline TropPoint plane_point(long x, long y) { return TropPoint{Rational(x), Rational(y), Rational(0)}; }

}  // namespace tropcon::testing
