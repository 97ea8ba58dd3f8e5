#include "tropcon/construction_file.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "tropcon/errors.hpp"

namespace tropcon {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  }
  return id != "join" && id != "meet" && id != "output" && id != "point" && id != "line";
}

struct Statement {
  int line;
  std::string_view text;
};

TropPoint parse_coordinates(std::string_view text, int line) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError(line, "expected coordinates in brackets");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<Rational> coords;
  std::size_t start = 0;
  for (;;) {
    const std::size_t colon = text.find(':', start);
    const std::string_view piece =
        trim(text.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
    try {
      coords.push_back(parse_rational(piece));
    } catch (const std::invalid_argument&) {
      throw ParseError(line, "bad coordinate '" + std::string(piece) + "'");
    }
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (coords.size() < 2) throw ParseError(line, "need at least two homogeneous coordinates");
  TropVector v(static_cast<Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v(static_cast<Index>(i)) = TropScalar(coords[i]);
  return TropPoint(std::move(v));
}

}  // namespace

ConstructionFile parse_construction(std::string_view text) {
  std::vector<Statement> statements;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) statements.push_back({line_no, line});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }

  // The first coordinate list fixes the dimension.
  int dimension = 2;
  for (const Statement& s : statements) {
    const auto eq = s.text.find('=');
    if (eq == std::string_view::npos) continue;
    if (trim(s.text.substr(eq + 1)).starts_with('[')) {
      dimension = static_cast<int>(parse_coordinates(s.text.substr(eq + 1), s.line).size()) - 1;
      break;
    }
  }

  ConstructionFile file{ConstructionProgram(dimension), {}};
  for (const Statement& s : statements) {
    try {
      const auto eq = s.text.find('=');
      if (eq == std::string_view::npos) {
        const std::vector<std::string> w = words(s.text);
        if (w.front() != "output") throw ParseError(s.line, "expected a declaration or 'output'");
        if (w.size() < 2) throw ParseError(s.line, "'output' needs at least one id");
        for (std::size_t i = 1; i < w.size(); ++i) file.program.add_output(w[i]);
        continue;
      }
      const std::vector<std::string> lhs = words(s.text.substr(0, eq));
      if (lhs.size() != 2 || (lhs[0] != "point" && lhs[0] != "line")) {
        throw ParseError(s.line, "expected 'point <id> =' or 'line <id> ='");
      }
      const ElementKind kind = lhs[0] == "point" ? ElementKind::Point : ElementKind::Line;
      const std::string& id = lhs[1];
      if (!valid_id(id)) throw ParseError(s.line, "invalid id '" + id + "'");
      const std::string_view rhs = trim(s.text.substr(eq + 1));
      if (rhs.starts_with('[')) {
        TropPoint coords = parse_coordinates(rhs, s.line);
        if (coords.size() != dimension + 1) {
          throw ParseError(s.line, "expected " + std::to_string(dimension + 1) + " coordinates");
        }
        file.program.add_input(id, kind);
        file.inputs.emplace(id, std::move(coords));
        continue;
      }
      std::vector<std::string> w = words(rhs);
      if (w.empty() || (w[0] != "join" && w[0] != "meet")) {
        throw ParseError(s.line, "expected coordinates, 'join' or 'meet'");
      }
      const bool join = w[0] == "join";
      if (join != (kind == ElementKind::Line)) {
        throw ParseError(s.line, join ? "a join yields a line, not a point"
                                      : "a meet yields a point, not a line");
      }
      w.erase(w.begin());
      if (join) {
        file.program.add_join(id, w);
      } else {
        file.program.add_meet(id, w);
      }
    } catch (const ProgramError& e) {
      throw ParseError(s.line, e.what());
    }
  }
  return file;
}

std::string render_construction(const ConstructionFile& file) {
  std::ostringstream out;
  const auto& elems = file.program.elements();
  for (const Element& e : elems) {
    out << to_string(e.kind) << ' ' << e.id << " = ";
    if (e.step == StepKind::Input) {
      out << to_raw_string(file.inputs.find(e.id)->second);
    } else {
      out << (e.step == StepKind::Join ? "join" : "meet");
      for (std::size_t p : e.parents) out << ' ' << elems[p].id;
    }
    out << '\n';
  }
  if (!file.program.outputs().empty()) {
    out << "output";
    for (std::size_t o : file.program.outputs()) out << ' ' << elems[o].id;
    out << '\n';
  }
  return out.str();
}

}  // namespace tropcon
