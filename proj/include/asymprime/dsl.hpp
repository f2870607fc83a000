#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "asymprime/error.hpp"

namespace asymprime::dsl {

/// 1-based source position. Positions are diagnostics only: they never take
/// part in AST equality.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

struct Factor {
  std::string variable;
  std::uint32_t exponent = 1;
  SourcePos pos;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Mono {
  std::vector<Factor> factors;
  friend bool operator==(const Mono&, const Mono&) = default;
};

/// `0` or a comma-separated list of monomials.
struct Gens {
  bool zero = false;
  std::vector<Mono> monos;
  friend bool operator==(const Gens&, const Gens&) = default;
};

struct Filt {
  enum class Kind { powers, trivial, saturation, closure, intersect_powers, product };
  Kind kind = Kind::trivial;
  std::vector<std::string> args;  // ideal names
  std::vector<Filt> children;     // product factors
  SourcePos pos;
  friend bool operator==(const Filt&, const Filt&) = default;
};

struct IdealStmt {
  std::string name;
  Gens gens;
  SourcePos pos;
  friend bool operator==(const IdealStmt&, const IdealStmt&) = default;
};

struct ModuleStmt {
  Gens gens;
  SourcePos pos;
  friend bool operator==(const ModuleStmt&, const ModuleStmt&) = default;
};

struct FiltrationStmt {
  std::string name;
  Filt filt;
  SourcePos pos;
  friend bool operator==(const FiltrationStmt&, const FiltrationStmt&) = default;
};

struct AnalyzeStmt {
  std::string filtration;
  std::vector<std::string> family;
  std::vector<std::uint32_t> grid;
  SourcePos pos;
  friend bool operator==(const AnalyzeStmt&, const AnalyzeStmt&) = default;
};

using Statement = std::variant<IdealStmt, ModuleStmt, FiltrationStmt, AnalyzeStmt>;

struct SourceProgram {
  std::vector<std::string> ring;
  SourcePos ring_pos;
  std::vector<Statement> statements;
  friend bool operator==(const SourceProgram&, const SourceProgram&) = default;
};

/// Parses and binds a program:
///
///     program   := ring_decl stmt* ;
///     ring_decl := "ring" ident+ ";" ;
///     stmt      := "ideal" ident "=" gens ";" | "module" "N" "=" gens ";"
///                | "filtration" ident "=" filt ";"
///                | "analyze" ident "over" "(" ident ("," ident)* ")"
///                  "grid" int ("," int)* ";" ;
///     gens      := "0" | mono ("," mono)* ;
///     mono      := factor ("*" factor)* ;
///     factor    := ident ("^" int)? ;
///     filt      := "powers" "(" ident ")" | "trivial"
///                | "saturation" "(" ident "," ident ")" | "closure" "(" ident ")"
///                | "intersect_powers" "(" ident ("," ident)+ ")"
///                | "product" "(" filt ("," filt)+ ")" ;
///
/// Whitespace, including newlines, only separates tokens. Throws ParseError
/// for lexical, syntactic, binding and dimension errors.
SourceProgram parse(std::string_view text);

/// Canonical source text; parse(pretty_print(p)) == p.
std::string pretty_print(const SourceProgram& program);

/// Dimension of a filtration expression; `trivial` at top level takes
/// `context_dim`.
std::size_t filtration_dim(const Filt& f, std::size_t context_dim);

}  // namespace asymprime::dsl
