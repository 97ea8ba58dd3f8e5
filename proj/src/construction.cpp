#include "tropcon/construction.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "tropcon/errors.hpp"

namespace tropcon {

std::string_view to_string(ElementKind kind) { return kind == ElementKind::Point ? "point" : "line"; }

ConstructionProgram::ConstructionProgram(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw ProgramError("construction dimension must be positive");
}

void ConstructionProgram::check_fresh(const std::string& id) const {
  if (id.empty()) throw ProgramError("empty element id");
  if (find(id)) throw ProgramError("duplicate element id '" + id + "'");
}

std::size_t ConstructionProgram::add_input(std::string id, ElementKind kind) {
  check_fresh(id);
  elements_.push_back({std::move(id), kind, StepKind::Input, {}});
  return elements_.size() - 1;
}

std::size_t ConstructionProgram::add_step(std::string id, StepKind step, ElementKind parent_kind,
                                          const std::vector<std::string>& parents) {
  check_fresh(id);
  const char* verb = step == StepKind::Join ? "join" : "meet";
  if (static_cast<int>(parents.size()) != dimension_) {
    throw ProgramError(std::string(verb) + " '" + id + "' needs " + std::to_string(dimension_) +
                       " arguments, got " + std::to_string(parents.size()));
  }
  std::vector<std::size_t> indices;
  for (const std::string& p : parents) {
    if (p == id) throw ProgramError("element '" + id + "' refers to itself");
    auto index = find(p);
    if (!index) throw ProgramError("'" + id + "' refers to undefined element '" + p + "'");
    if (elements_[*index].kind != parent_kind) {
      throw ProgramError(std::string(verb) + " '" + id + "' expects " +
                         std::string(to_string(parent_kind)) + "s but '" + p + "' is a " +
                         std::string(to_string(elements_[*index].kind)));
    }
    if (std::find(indices.begin(), indices.end(), *index) != indices.end()) {
      throw ProgramError(std::string(verb) + " '" + id + "' uses '" + p + "' twice");
    }
    indices.push_back(*index);
  }
  const ElementKind kind = parent_kind == ElementKind::Point ? ElementKind::Line : ElementKind::Point;
  elements_.push_back({std::move(id), kind, step, std::move(indices)});
  return elements_.size() - 1;
}

std::size_t ConstructionProgram::add_join(std::string id, const std::vector<std::string>& points) {
  return add_step(std::move(id), StepKind::Join, ElementKind::Point, points);
}

std::size_t ConstructionProgram::add_meet(std::string id, const std::vector<std::string>& lines) {
  return add_step(std::move(id), StepKind::Meet, ElementKind::Line, lines);
}

void ConstructionProgram::add_output(std::string_view id) {
  const std::size_t index = index_of(id);
  if (std::find(outputs_.begin(), outputs_.end(), index) == outputs_.end()) {
    outputs_.push_back(index);
  }
}

std::vector<std::size_t> ConstructionProgram::effective_outputs() const {
  if (!outputs_.empty()) return outputs_;
  std::vector<std::size_t> all(elements_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

std::optional<std::size_t> ConstructionProgram::find(std::string_view id) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t ConstructionProgram::index_of(std::string_view id) const {
  auto index = find(id);
  if (!index) throw ProgramError("unknown element '" + std::string(id) + "'");
  return *index;
}

std::vector<std::size_t> ConstructionProgram::ancestors(std::size_t root) const {
  std::vector<bool> seen(elements_.size(), false);
  seen.at(root) = true;
  // Parents always precede children, so one backwards sweep suffices.
  for (std::size_t i = root + 1; i-- > 0;) {
    if (!seen[i]) continue;
    for (std::size_t p : elements_[i].parents) seen[p] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (seen[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> ConstructionProgram::relevant_elements() const {
  std::set<std::size_t> all;
  for (std::size_t out : effective_outputs()) {
    for (std::size_t a : ancestors(out)) all.insert(a);
  }
  return {all.begin(), all.end()};
}

namespace {

struct UndirectedGraph {
  std::vector<std::size_t> vertices;                // program indices
  std::vector<std::vector<std::size_t>> adjacency;  // positions in `vertices`
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

UndirectedGraph build_graph(const ConstructionProgram& program, std::size_t root) {
  UndirectedGraph g;
  g.vertices = program.ancestors(root);
  std::map<std::size_t, std::size_t> position;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) position[g.vertices[k]] = k;
  g.adjacency.resize(g.vertices.size());
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    for (std::size_t p : program.elements()[g.vertices[k]].parents) {
      const std::size_t q = position.at(p);
      g.adjacency[k].push_back(q);
      g.adjacency[q].push_back(k);
      g.edges.emplace_back(k, q);
    }
  }
  // Parents before children keeps the traversal order aligned with the
  // construction direction from the root.
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    auto& adj = g.adjacency[k];
    std::stable_partition(adj.begin(), adj.end(), [&](std::size_t q) {
      const auto& parents = program.elements()[g.vertices[k]].parents;
      return std::find(parents.begin(), parents.end(), g.vertices[q]) != parents.end();
    });
  }
  return g;
}

}  // namespace

ConstructionGraph ancestor_graph(const ConstructionProgram& program, std::string_view id) {
  const std::size_t root = program.index_of(id);
  const UndirectedGraph g = build_graph(program, root);
  const auto& elems = program.elements();
  ConstructionGraph out;
  // Breadth-first vertex order from the root along parent links.
  std::vector<bool> seen(g.vertices.size(), false);
  std::deque<std::size_t> queue;
  const std::size_t start = g.vertices.size() - 1;  // the root is the last ancestor
  seen[start] = true;
  queue.push_back(start);
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    out.vertices.push_back(elems[g.vertices[k]].id);
    for (std::size_t p : elems[g.vertices[k]].parents) {
      out.edges.emplace_back(elems[g.vertices[k]].id, elems[p].id);
      for (std::size_t q = 0; q < g.vertices.size(); ++q) {
        if (g.vertices[q] == p && !seen[q]) {
          seen[q] = true;
          queue.push_back(q);
        }
      }
    }
  }
  return out;
}

Admissibility check_admissibility(const ConstructionProgram& program, std::string_view id) {
  const std::size_t root = program.index_of(id);
  const UndirectedGraph g = build_graph(program, root);
  Admissibility result;
  if (g.edges.size() + 1 == g.vertices.size()) return result;

  result.admissible = false;
  const std::size_t n = g.vertices.size();
  const std::size_t start = n - 1;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> bfs_parent(n, kNone), depth(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.adjacency[u]) {
      if (!seen[w]) {
        seen[w] = true;
        bfs_parent[w] = u;
        depth[w] = depth[u] + 1;
        queue.push_back(w);
        continue;
      }
      if (w == bfs_parent[u]) continue;
      // Non-tree edge u-w closes a cycle through their lowest common ancestor.
      std::vector<std::size_t> from_w{w}, from_u{u};
      std::size_t a = w, b = u;
      while (depth[a] > depth[b]) from_w.push_back(a = bfs_parent[a]);
      while (depth[b] > depth[a]) from_u.push_back(b = bfs_parent[b]);
      while (a != b) {
        from_w.push_back(a = bfs_parent[a]);
        from_u.push_back(b = bfs_parent[b]);
      }
      const auto& elems = program.elements();
      // lca .. w, then u .. lca
      for (auto it = from_w.rbegin(); it != from_w.rend(); ++it) {
        result.cycle.push_back(elems[g.vertices[*it]].id);
      }
      for (std::size_t k : from_u) result.cycle.push_back(elems[g.vertices[k]].id);
      return result;
    }
  }
  return result;
}

namespace {

const TropPoint& bound_input(const ConstructionProgram& program, const TropicalBindings& inputs,
                             const Element& e) {
  auto it = inputs.find(e.id);
  if (it == inputs.end()) throw ProgramError("input '" + e.id + "' is not bound");
  if (it->second.size() != program.dimension() + 1) {
    throw DimensionError("input '" + e.id + "' needs " + std::to_string(program.dimension() + 1) +
                         " homogeneous coordinates");
  }
  return it->second;
}

}  // namespace

TropicalBindings execute_tropical(const ConstructionProgram& program,
                                  const TropicalBindings& inputs) {
  TropicalBindings out;
  std::vector<const TropPoint*> values(program.elements().size(), nullptr);
  for (std::size_t i = 0; i < program.elements().size(); ++i) {
    const Element& e = program.elements()[i];
    TropPoint value;
    if (e.step == StepKind::Input) {
      value = bound_input(program, inputs, e);
    } else {
      TropMatrix o(program.dimension(), program.dimension() + 1);
      for (std::size_t r = 0; r < e.parents.size(); ++r) {
        o.row(static_cast<Index>(r)) = values[e.parents[r]]->coords().transpose();
      }
      value = trop_cramer(o);
    }
    values[i] = &out.insert_or_assign(e.id, std::move(value)).first->second;
  }
  return out;
}

std::optional<SymbolicExecution> execute_symbolic(const ConstructionProgram& program,
                                                  const TropicalBindings& inputs,
                                                  std::size_t term_bound) {
  SymbolicExecution run;
  const auto& elems = program.elements();
  const Index width = program.dimension() + 1;
  for (std::size_t i : program.relevant_elements()) {
    const Element& e = elems[i];
    SymbolicElement out;
    if (e.step == StepKind::Input) {
      out.tropical = bound_input(program, inputs, e);
      std::vector<std::string> names;
      for (Index j = 0; j < width; ++j) names.push_back(e.id + "_" + std::to_string(j + 1));
      const std::size_t family = run.registry.add_family(names);
      out.principal.resize(width);
      for (Index j = 0; j < width; ++j) {
        out.principal(j) = MultiPoly::variable(run.registry.family(family)[static_cast<std::size_t>(j)]);
      }
    } else {
      TropMatrix o(program.dimension(), width);
      Matrix<MultiPoly> a(program.dimension(), width);
      for (std::size_t r = 0; r < e.parents.size(); ++r) {
        const SymbolicElement& parent = run.elements.find(elems[e.parents[r]].id)->second;
        o.row(static_cast<Index>(r)) = parent.tropical.coords().transpose();
        a.row(static_cast<Index>(r)) = parent.principal.transpose();
      }
      out.tropical = trop_cramer(o);
      out.cramer = cram_o<MultiPoly>(o, a);
      out.principal.resize(width);
      for (Index j = 0; j < width; ++j) {
        if (out.cramer(j).term_count() > term_bound) return std::nullopt;
        if (out.cramer(j).is_zero()) run.vanishing.emplace_back(e.id, static_cast<int>(j));
        out.principal(j) = j % 2 == 0 ? out.cramer(j) : MultiPoly(-out.cramer(j));
      }
    }
    run.elements.emplace(e.id, std::move(out));
  }
  return run;
}

namespace {

// Nonzero integer in [-range, -1] U [1, range], platform independent.
std::int64_t draw_coefficient(std::mt19937_64& rng, std::int64_t range) {
  const auto span = static_cast<std::uint64_t>(2 * range);
  const auto v = static_cast<std::int64_t>(rng() % span);
  return v < range ? v - range : v - range + 1;
}

struct StepFailure {
  std::string element;
  int component;
  std::string reason;
};

}  // namespace

LiftResult generic_lift(const ConstructionProgram& program, const TropicalBindings& inputs,
                        const LiftOptions& options) {
  const auto& elems = program.elements();
  const Index width = program.dimension() + 1;
  if (options.require_admissible) {
    for (std::size_t out : program.effective_outputs()) {
      const Admissibility adm = check_admissibility(program, elems[out].id);
      if (!adm.admissible) {
        std::string cycle;
        for (const auto& v : adm.cycle) cycle += (cycle.empty() ? "" : ",") + v;
        throw AdmissibilityError("element '" + elems[out].id +
                                 "' is not tropically admissible (cycle " + cycle + ")");
      }
    }
  }
  const std::vector<std::size_t> relevant = program.relevant_elements();
  for (std::size_t i : relevant) {
    if (elems[i].step == StepKind::Input) bound_input(program, inputs, elems[i]);
  }

  bool certified = false;
  if (options.require_admissible) {
    if (auto symbolic = execute_symbolic(program, inputs, options.symbolic_term_bound)) {
      if (!symbolic->vanishing.empty()) {
        const auto& [id, component] = symbolic->vanishing.front();
        throw LiftError("pseudo-determinant S_" + std::to_string(component + 1) + " of '" + id +
                            "' vanishes identically; no generic lift exists",
                        id, component);
      }
      certified = true;
    }
  }

  std::mt19937_64 rng(options.seed);
  StepFailure last{};
  for (int attempt = 0; attempt <= options.max_resamples; ++attempt) {
    LiftResult result;
    result.resamples = attempt;
    result.symbolically_certified = certified;
    std::optional<StepFailure> failure;
    for (std::size_t i : relevant) {
      const Element& e = elems[i];
      if (e.step == StepKind::Input) {
        const TropPoint& p = inputs.find(e.id)->second;
        Vector<Rational> coeffs(width);
        PuiseuxVector lifted(width);
        for (Index j = 0; j < width; ++j) {
          coeffs(j) = Rational(draw_coefficient(rng, options.coefficient_range));
          lifted(j) = PuiseuxPoly::monomial(coeffs(j), -p[j].value());
        }
        result.input_coefficients.emplace(e.id, std::move(coeffs));
        result.elements.emplace(e.id, std::move(lifted));
        continue;
      }
      PuiseuxMatrix b(program.dimension(), width);
      for (std::size_t r = 0; r < e.parents.size(); ++r) {
        b.row(static_cast<Index>(r)) = result.elements.find(elems[e.parents[r]].id)->second.transpose();
      }
      if (options.require_admissible) {
        for (Index r = 0; r < b.rows() && !failure; ++r) {
          for (Index j = 0; j < b.cols(); ++j) {
            if (b(r, j).is_zero()) {
              failure = StepFailure{e.id, -1, "zero coordinate in a parent of"};
              break;
            }
          }
        }
        if (failure) break;
        const Vector<Rational> s = cram_o<Rational>(tropicalize(b), principal_coefficients(b));
        for (Index j = 0; j < s.size(); ++j) {
          if (s(j) == 0) {
            failure = StepFailure{e.id, static_cast<int>(j), "vanishing pseudo-determinant at"};
            break;
          }
        }
        if (failure) break;
      }
      PuiseuxVector solution;
      try {
        solution = classical_cramer(b);
      } catch (const DegenerateSystemError&) {
        failure = StepFailure{e.id, -1, "degenerate classical system at"};
        break;
      }
      if (!options.require_admissible) {
        for (Index j = 0; j < solution.size(); ++j) {
          if (solution(j).is_zero()) {
            failure = StepFailure{e.id, static_cast<int>(j), "zero lifted coordinate at"};
            break;
          }
        }
        if (failure) break;
      }
      result.elements.emplace(e.id, std::move(solution));
    }
    if (!failure) return result;
    last = *failure;
  }
  std::string what = "lift retry budget exhausted after " + std::to_string(options.max_resamples) +
                     " resamples: " + last.reason + " '" + last.element + "'";
  if (last.component >= 0) what += " (component S_" + std::to_string(last.component + 1) + ")";
  throw LiftError(what, last.element, last.component);
}

CommutationReport verify_commutation(const ConstructionProgram& program,
                                     const TropicalBindings& inputs, const LiftOptions& options) {
  const TropicalBindings tropical = execute_tropical(program, inputs);
  const LiftResult lift = generic_lift(program, inputs, options);
  CommutationReport report;
  report.seed = options.seed;
  report.resamples = lift.resamples;
  report.symbolically_certified = lift.symbolically_certified;
  for (std::size_t i : program.relevant_elements()) {
    const Element& e = program.elements()[i];
    if (e.step == StepKind::Input) continue;
    ElementComparison cmp;
    cmp.id = e.id;
    cmp.tropical = tropical.find(e.id)->second;
    const PuiseuxVector& lifted = lift.elements.find(e.id)->second;
    const bool defined =
        std::none_of(lifted.begin(), lifted.end(), [](const PuiseuxPoly& x) { return x.is_zero(); });
    if (defined) cmp.lifted = tropicalize(lifted);
    cmp.match = cmp.lifted && *cmp.lifted == cmp.tropical;
    if (!cmp.match && !report.first_mismatch) report.first_mismatch = e.id;
    report.elements.push_back(std::move(cmp));
  }
  return report;
}

}  // namespace tropcon
