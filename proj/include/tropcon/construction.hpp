#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropcon/puiseux.hpp"
#include "tropcon/symbolic.hpp"
#include "tropcon/trop_core.hpp"

namespace tropcon {

enum class ElementKind { Point, Line };
enum class StepKind { Input, Join, Meet };

std::string_view to_string(ElementKind kind);

struct Element {
  std::string id;
  ElementKind kind;
  StepKind step;
  std::vector<std::size_t> parents;  // indices of earlier elements; empty for inputs

  friend bool operator==(const Element&, const Element&) = default;
};

/// Straight-line program of joins and meets in tropical n-space. A join takes
/// n distinct points and yields a hyperplane; a meet takes n distinct
/// hyperplanes and yields a point. In the plane (n = 2) these are lines.
class ConstructionProgram {
 public:
  explicit ConstructionProgram(int dimension = 2);

  int dimension() const noexcept { return dimension_; }

  std::size_t add_input(std::string id, ElementKind kind);
  std::size_t add_join(std::string id, const std::vector<std::string>& points);
  std::size_t add_meet(std::string id, const std::vector<std::string>& lines);
  void add_output(std::string_view id);

  const std::vector<Element>& elements() const noexcept { return elements_; }
  const std::vector<std::size_t>& outputs() const noexcept { return outputs_; }
  /// Declared outputs, or every element when none were declared.
  std::vector<std::size_t> effective_outputs() const;

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws ProgramError for unknown ids.
  std::size_t index_of(std::string_view id) const;
  const Element& element(std::string_view id) const { return elements_[index_of(id)]; }

  /// Indices of `root` and everything it is built from, in program order.
  std::vector<std::size_t> ancestors(std::size_t root) const;
  /// Union of ancestors of the effective outputs, in program order.
  std::vector<std::size_t> relevant_elements() const;

  friend bool operator==(const ConstructionProgram&, const ConstructionProgram&) = default;

 private:
  std::size_t add_step(std::string id, StepKind step, ElementKind parent_kind,
                       const std::vector<std::string>& parents);
  void check_fresh(const std::string& id) const;

  int dimension_;
  std::vector<Element> elements_;
  std::vector<std::size_t> outputs_;
};

/// Ancestor subgraph of one element. Edges join each derived vertex to its
/// parents and are listed as (derived, parent).
struct ConstructionGraph {
  std::vector<std::string> vertices;  // breadth-first from the root
  std::vector<std::pair<std::string, std::string>> edges;
};

ConstructionGraph ancestor_graph(const ConstructionProgram& program, std::string_view id);

struct Admissibility {
  bool admissible = true;
  /// Closed walk root, ..., root through a cycle of the construction graph;
  /// empty when admissible.
  std::vector<std::string> cycle;
};

Admissibility check_admissibility(const ConstructionProgram& program, std::string_view id);
inline bool is_tropically_admissible(const ConstructionProgram& program, std::string_view id) {
  return check_admissibility(program, id).admissible;
}

using TropicalBindings = std::map<std::string, TropPoint, std::less<>>;

/// Tropical Cramer's rule applied step by step. Returns every element.
TropicalBindings execute_tropical(const ConstructionProgram& program,
                                  const TropicalBindings& inputs);

/// Principal coefficients tracked as polynomials in one variable family per
/// input element (one variable per homogeneous coordinate).
struct SymbolicElement {
  TropPoint tropical;
  Vector<MultiPoly> principal;
  /// Pseudo-determinant components (S_1..S_{n+1}); empty for inputs.
  Vector<MultiPoly> cramer;
};

struct SymbolicExecution {
  VariableRegistry registry;
  std::map<std::string, SymbolicElement, std::less<>> elements;
  /// (element, zero-based component) of every identically vanishing S_i.
  std::vector<std::pair<std::string, int>> vanishing;
};

/// Symbolic principal-coefficient propagation over the relevant elements.
/// Returns nullopt once any polynomial exceeds `term_bound` terms.
std::optional<SymbolicExecution> execute_symbolic(const ConstructionProgram& program,
                                                  const TropicalBindings& inputs,
                                                  std::size_t term_bound = 20000);

struct LiftOptions {
  std::uint64_t seed = 0;
  int max_resamples = 32;
  /// Refuse programs with a non-tree output, and require every
  /// pseudo-determinant met along the way to be nonzero.
  bool require_admissible = true;
  std::int64_t coefficient_range = 1'000'000;
  std::size_t symbolic_term_bound = 20000;
};

struct LiftResult {
  std::map<std::string, PuiseuxVector, std::less<>> elements;
  /// Principal coefficients drawn for each input element.
  std::map<std::string, Vector<Rational>, std::less<>> input_coefficients;
  int resamples = 0;
  /// Nonvanishing of every pseudo-determinant was proven symbolically.
  bool symbolically_certified = false;
};

/// Monomial lift x_j t^{-p_j} of each input coordinate with random nonzero
/// integer x_j, followed by the classical construction over Puiseux
/// polynomials. Throws AdmissibilityError or LiftError.
LiftResult generic_lift(const ConstructionProgram& program, const TropicalBindings& inputs,
                        const LiftOptions& options);

struct ElementComparison {
  std::string id;
  TropPoint tropical;
  std::optional<TropPoint> lifted;  // absent when a lifted component is zero
  bool match = false;
};

struct CommutationReport {
  std::uint64_t seed = 0;
  int resamples = 0;
  bool symbolically_certified = false;
  std::vector<ElementComparison> elements;  // derived relevant elements, program order
  std::optional<std::string> first_mismatch;

  bool ok() const noexcept { return !first_mismatch.has_value(); }
};

/// Compares the tropical construction against the tropicalized classical
/// construction on a generic lift.
CommutationReport verify_commutation(const ConstructionProgram& program,
                                     const TropicalBindings& inputs, const LiftOptions& options);

}  // namespace tropcon
