#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tropcon/construction.hpp"

namespace tropcon {

/// Construction text, one statement per line, '#' starts a comment:
///
///   point <id> = [q : q : q]      input point (exact rationals)
///   line  <id> = [q : q : q]      input line, dual coordinates
///   line  <id> = join <id> <id>
///   point <id> = meet <id> <id>
///   output <id>+
///
/// The number of homogeneous coordinates fixes the dimension; joins and meets
/// then take that dimension's number of arguments. Ids are made of letters,
/// digits, '_' and '\''.
struct ConstructionFile {
  ConstructionProgram program;
  TropicalBindings inputs;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

ConstructionFile parse_construction(std::string_view text);

/// Canonical text form; parse_construction(render_construction(f)) == f.
std::string render_construction(const ConstructionFile& file);

}  // namespace tropcon
