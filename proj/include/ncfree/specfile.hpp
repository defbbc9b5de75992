#pragma once

#include "ncfree/rcyclic.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ncfree {

struct EntryRef {
  int r, i, j;
  friend bool operator==(const EntryRef&, const EntryRef&) = default;
};

/// `cumulant r:i,j [r:i,j ...] = p/q`
struct CumulantDecl {
  std::vector<EntryRef> entries;
  Rational value;
  friend bool operator==(const CumulantDecl&, const CumulantDecl&) = default;
};

/// `semicircular r=R i=I radius p/q`: k_2 = radius²/4 at entry (i,i).
struct SemicircularDecl {
  int r, i;
  Rational radius;
  friend bool operator==(const SemicircularDecl&, const SemicircularDecl&) = default;
};

/// `circular r=R i=I j=J radius p/q`: k_2(c,c*) = k_2(c*,c) = radius²/4 with c at (i,j)
/// and c* at (j,i).
struct CircularDecl {
  int r, i, j;
  Rational radius;
  friend bool operator==(const CircularDecl&, const CircularDecl&) = default;
};

using Declaration = std::variant<CumulantDecl, SemicircularDecl, CircularDecl>;

struct SpecFile {
  int order = 0;
  int d = 0;
  int s = 0;
  std::vector<Declaration> declarations;
  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

class SpecError : public std::runtime_error {
 public:
  SpecError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Line-oriented; `#` starts a comment. `order`, `dim` and `matrices` must each
/// appear once, before any declaration. Throws SpecError.
SpecFile parse_spec(const std::string& text);

/// Reads and parses a file; I/O failures are reported as SpecError at line 0.
SpecFile load_spec(const std::string& path);

/// Canonical text form: parse_spec(emit_spec(x)) == x.
std::string emit_spec(const SpecFile& spec);

/// Model over s·d·d generators laid out by entry_generator; every shorthand is
/// expanded and all declared families are free from each other.
CumulantModel to_model(const SpecFile& spec);

/// canonical_family(to_model(spec), d, s).
MatrixFamily to_family(const SpecFile& spec);

/// One matrix per radii grid: semicircular diagonal entries, circular pairs above the
/// diagonal (the grid must be symmetric), zero radii left out.
SpecFile gaussian_spec(const std::vector<std::vector<std::vector<Rational>>>& radii, int order);

}  // namespace ncfree
