#include "stanley/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace stanley {

namespace {

struct LineCursor {
  std::string_view text;
  int lineno;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(lineno, static_cast<int>(pos) + 1, message);
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  bool consume(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected '") + c + "' " + what);
  }
  long parse_int(const char* what) {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail(std::string("expected ") + what);
    if (pos - start > 9) fail("number out of range");
    long v = 0;
    for (std::size_t i = start; i < pos; ++i) v = v * 10 + (text[i] - '0');
    return v;
  }
  // Keeps degree arithmetic inside int range: n <= 1024 and entries <= 10^6.
  int parse_count(const char* what) {
    long v = parse_int(what);
    if (v > 1024) fail("variable count out of range");
    return static_cast<int>(v);
  }
  int parse_entry(const char* what) {
    long v = parse_int(what);
    if (v > 1'000'000) fail("exponent out of range");
    return static_cast<int>(v);
  }
};

Exponent parse_monomial(LineCursor& cur, int n) {
  cur.skip_ws();
  Exponent e(n, 0);
  if (cur.peek() == '(') {
    ++cur.pos;
    for (int j = 0; j < n; ++j) {
      if (j > 0) cur.expect(',', "between exponents");
      e[j] = cur.parse_entry("an exponent");
    }
    cur.expect(')', "after the exponent tuple");
    return e;
  }
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    long v = cur.parse_int("a monomial");
    if (v != 1) cur.fail("only the monomial 1 may be written as a bare number");
    return e;
  }
  if (cur.peek() != 'x') cur.fail("expected a monomial");
  for (;;) {
    cur.expect('x', "to start a variable");
    long var = cur.parse_int("a variable index");
    if (var < 1 || var > n) cur.fail("variable index out of range");
    int exp = 1;
    if (cur.consume('^')) exp = cur.parse_entry("an exponent");
    e[var - 1] += exp;
    if (e[var - 1] > 1'000'000) cur.fail("exponent out of range");
    if (!cur.consume('*')) break;
  }
  return e;
}

std::vector<Exponent> parse_monomial_list(LineCursor& cur, int n) {
  cur.skip_ws();
  // A bare 0 is the zero ideal.
  if (cur.peek() == '0') {
    ++cur.pos;
    if (!cur.done()) cur.fail("unexpected text after 0");
    return {};
  }
  std::vector<Exponent> gens;
  for (;;) {
    gens.push_back(parse_monomial(cur, n));
    if (cur.done()) break;
    cur.expect(',', "between monomials");
  }
  return gens;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

}  // namespace

IdealFile parse_ideal_file(std::string_view text) {
  int n = -1;
  std::optional<std::string> module;
  std::optional<std::vector<Exponent>> igens, jgens;
  std::optional<Exponent> g;
  int iline = 0, jline = 0, gline = 0;

  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view raw =
        text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                        : nl - start);
    ++lineno;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    std::string_view line = strip_comment(raw);
    if (blank(line)) continue;
    LineCursor cur{line, lineno};

    cur.skip_ws();
    std::size_t key_start = cur.pos;
    while (cur.pos < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[cur.pos])) ||
            line[cur.pos] == '/'))
      ++cur.pos;
    std::string key(line.substr(key_start, cur.pos - key_start));
    cur.expect('=', "after the key");

    if (key == "n") {
      if (n >= 0) cur.fail("duplicate n");
      int v = cur.parse_count("the variable count");
      if (v < 1) cur.fail("n must be at least 1");
      n = v;
      if (!cur.done()) cur.fail("unexpected text after n");
    } else if (key == "module") {
      if (module) cur.fail("duplicate module");
      cur.skip_ws();
      std::string_view rest = line.substr(cur.pos);
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
        rest.remove_suffix(1);
      if (rest != "I" && rest != "S/I") cur.fail("module must be I or S/I");
      module = std::string(rest);
    } else if (key == "I") {
      if (igens) cur.fail("duplicate I");
      if (n < 0) cur.fail("n must be declared before I");
      igens = parse_monomial_list(cur, n);
      iline = lineno;
    } else if (key == "J") {
      if (jgens) cur.fail("duplicate J");
      if (n < 0) cur.fail("n must be declared before J");
      jgens = parse_monomial_list(cur, n);
      jline = lineno;
    } else if (key == "g") {
      if (g) cur.fail("duplicate g");
      if (n < 0) cur.fail("n must be declared before g");
      Exponent v(n);
      for (int j = 0; j < n; ++j) {
        cur.consume(',');
        v[j] = cur.parse_entry("a g entry");
      }
      if (!cur.done()) cur.fail("too many g entries");
      g = std::move(v);
      gline = lineno;
    } else {
      cur.pos = key_start;
      cur.fail("unknown key '" + key + "'");
    }
  }

  if (n < 0) throw ParseError(lineno, 1, "missing n");
  if (!igens) throw ParseError(lineno, 1, "missing I");

  bool quotient_form = module && *module == "S/I";
  if (quotient_form && jgens)
    throw ParseError(jline, 1, "J is not allowed when module = S/I");

  MonomialIdeal numerator = quotient_form ? MonomialIdeal::unit(n)
                                          : MonomialIdeal(n, *igens);
  MonomialIdeal denominator =
      quotient_form ? MonomialIdeal(n, *igens)
                    : (jgens ? MonomialIdeal(n, *jgens) : MonomialIdeal::zero(n));
  // EmptyModuleError (I = J) propagates as its own type.
  QuotientPair pair = [&]() -> QuotientPair {
    try {
      return QuotientPair(std::move(numerator), std::move(denominator));
    } catch (const EmptyModuleError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(jline ? jline : iline, 1, e.what());
    }
  }();

  if (g) {
    for (const auto& a : pair.numerator().gens())
      if (!leq(a, *g)) throw ParseError(gline, 1, "g is not admissible");
    for (const auto& b : pair.denominator().gens())
      if (!leq(b, *g)) throw ParseError(gline, 1, "g is not admissible");
  }
  return {std::move(pair), std::move(g), quotient_form};
}

std::string format_monomial(const Exponent& e) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(j + 1);
    if (e[j] > 1) out += '^' + std::to_string(e[j]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string format_gen_list(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < ideal.gens().size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(ideal.gens()[i]);
  }
  return out;
}

std::string format_tuple(const Exponent& e) {
  std::string out = "(";
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(e[j]);
  }
  return out + ")";
}

}  // namespace

std::string format_ideal_file(const QuotientPair& pair,
                              const std::optional<Exponent>& g) {
  std::ostringstream out;
  out << "n = " << pair.nvars() << '\n';
  bool quotient_form = pair.numerator().is_unit() && !pair.denominator().is_zero();
  if (quotient_form) {
    out << "module = S/I\n";
    out << "I = " << format_gen_list(pair.denominator()) << '\n';
  } else {
    out << "I = " << format_gen_list(pair.numerator()) << '\n';
    if (!pair.denominator().is_zero())
      out << "J = " << format_gen_list(pair.denominator()) << '\n';
  }
  if (g) {
    out << "g =";
    for (int v : *g) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

std::string format_decomposition(const StanleyDecomposition& decomposition) {
  std::ostringstream out;
  for (const auto& s : decomposition.spaces) {
    out << "x^" << format_tuple(s.generator) << " K[";
    for (int j = s.free_vars.find_first(); j != -1; j = s.free_vars.find_next(j))
      out << ' ' << (j + 1);
    if (s.free_vars.any()) out << ' ';
    out << "]\n";
  }
  return out.str();
}

StanleyDecomposition parse_decomposition(std::string_view text,
                                         const QuotientPair& pair) {
  int n = pair.nvars();
  StanleyDecomposition d{pair, {}};
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view raw =
        text.substr(start, nl == std::string_view::npos ? text.size() - start
                                                        : nl - start);
    ++lineno;
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    std::string_view line = strip_comment(raw);
    if (blank(line)) continue;

    LineCursor cur{line, lineno};
    cur.expect('x', "to start a Stanley space");
    cur.expect('^', "after x");
    cur.expect('(', "to open the exponent tuple");
    Exponent u(n, 0);
    for (int j = 0; j < n; ++j) {
      if (j > 0) cur.expect(',', "between exponents");
      u[j] = cur.parse_entry("an exponent");
    }
    cur.expect(')', "after the exponent tuple");
    cur.expect('K', "before the variable set");
    cur.expect('[', "to open the variable set");
    DynBitset z(n);
    for (;;) {
      cur.skip_ws();
      if (cur.peek() == ']') {
        ++cur.pos;
        break;
      }
      long var = cur.parse_int("a variable index");
      if (var < 1 || var > n) cur.fail("variable index out of range");
      if (z.test(static_cast<int>(var) - 1)) cur.fail("duplicate variable");
      z.set(static_cast<int>(var) - 1);
    }
    if (!cur.done()) cur.fail("unexpected text after the space");
    d.spaces.push_back({std::move(u), std::move(z)});
  }
  return d;
}

std::string format_partition(const CharacteristicPoset& poset, const Partition& part) {
  std::ostringstream out;
  for (const auto& iv : part)
    out << '[' << format_tuple(poset.point(iv.bottom)) << " , "
        << format_tuple(poset.point(iv.top)) << "]\n";
  return out.str();
}

std::string format_poset(const CharacteristicPoset& poset) {
  std::ostringstream out;
  for (int i = 0; i < poset.size(); ++i) {
    for (int v : poset.point(i)) out << v << ' ';
    out << poset.rho(i) << '\n';
  }
  return out.str();
}

}  // namespace stanley
