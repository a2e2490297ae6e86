#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "stanley/decomposition.hpp"
#include "stanley/ideal.hpp"
#include "stanley/poset.hpp"

namespace stanley {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// Parsed ideal file. Grammar (line oriented, '#' comments, 1-based variables):
///   n = INT
///   module = I | S/I        (optional; S/I maps to the pair (unit, I))
///   I = mon (, mon)* | 0
///   J = mon (, mon)* | 0    (optional, default 0; not allowed with S/I)
///   g = INT{n}              (optional; must dominate all generators)
///   mon := '1' | term ('*' term)* | '(' INT (, INT)* ')'
///   term := 'x' INT ('^' INT)?
struct IdealFile {
  QuotientPair pair;
  std::optional<Exponent> g;
  bool quotient_form = false;  // written with module = S/I
};

IdealFile parse_ideal_file(std::string_view text);
std::string format_ideal_file(const QuotientPair& pair,
                              const std::optional<Exponent>& g = std::nullopt);

std::string format_monomial(const Exponent& e);

/// Decomposition files: one space per line, `x^(e1,...,en) K[ j1 j2 ... ]`,
/// with `K[]` for dimension 0. Variables are 1-based.
std::string format_decomposition(const StanleyDecomposition& decomposition);
StanleyDecomposition parse_decomposition(std::string_view text,
                                         const QuotientPair& pair);

/// One interval per line, `[(c1,...,cn) , (d1,...,dn)]`, in stored order.
std::string format_partition(const CharacteristicPoset& poset, const Partition& part);

/// One point per line: the coordinates then rho, space separated, in
/// linear-extension order.
std::string format_poset(const CharacteristicPoset& poset);

}  // namespace stanley
