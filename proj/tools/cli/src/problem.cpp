#include "obb/cli/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace obb::cli {

namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Source {
 public:
  explicit Source(std::string_view text) : text_(text) {
    // Comments become blanks so offsets stay valid.
    bool comment = false;
    for (char& c : text_) {
      if (c == '\n') {
        comment = false;
      } else if (c == '#') {
        comment = true;
      }
      if (comment) c = ' ';
    }
  }

  const std::string& text() const noexcept { return text_; }
  char at(std::size_t pos) const { return pos < text_.size() ? text_[pos] : '\0'; }
  std::size_t size() const noexcept { return text_.size(); }

  [[noreturn]] void fail(std::size_t pos, const std::string& message) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < pos && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, message);
  }

 private:
  std::string text_;
};

class Parser {
 public:
  Parser(const Source& src, std::size_t pos, const Problem& p)
      : src_(src), pos_(pos), p_(p) {}

  std::size_t pos() const noexcept { return pos_; }

  void skip_blanks(bool newlines) {
    for (;;) {
      const char c = src_.at(pos_);
      if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  ModuleVector item() {
    const std::size_t r = p_.ctx->rank();
    std::vector<ModuleVector::Entry> entries;
    if (src_.at(pos_) == '[') {
      ++pos_;
      for (std::size_t k = 0;; ++k) {
        if (k >= r) src_.fail(pos_, "vector has more than " + std::to_string(r) + " components");
        polynomial(k, true, entries);
        skip_blanks(true);
        const char c = src_.at(pos_);
        if (c == ']') {
          if (k + 1 != r) {
            src_.fail(pos_, "vector has " + std::to_string(k + 1) +
                                " components, the module has rank " + std::to_string(r));
          }
          ++pos_;
          break;
        }
        if (c != ',') src_.fail(pos_, "expected ',' or ']' in vector");
        ++pos_;
      }
    } else {
      if (r != 1) src_.fail(pos_, "expected '[' for a vector of rank " + std::to_string(r));
      polynomial(0, false, entries);
    }
    return ModuleVector(p_.ctx, std::move(entries));
  }

 private:
  void polynomial(std::size_t component, bool in_brackets,
                  std::vector<ModuleVector::Entry>& out) {
    for (bool first = true;; first = false) {
      skip_blanks(in_brackets);
      int sign = 1;
      const char c = src_.at(pos_);
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
        skip_blanks(in_brackets);
      } else if (!first) {
        return;
      }
      Coefficient coeff(sign);
      Term term(p_.vars.size());
      monomial(coeff, term, in_brackets);
      out.push_back({{std::move(term), component}, std::move(coeff)});
    }
  }

  void monomial(Coefficient& coeff, Term& term, bool in_brackets) {
    for (;;) {
      factor(coeff, term);
      skip_blanks(in_brackets);
      if (src_.at(pos_) != '*') return;
      ++pos_;
      skip_blanks(in_brackets);
    }
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (is_digit(src_.at(pos_))) ++pos_;
    if (start == pos_) src_.fail(pos_, "expected a number");
    return mpz_class(src_.text().substr(start, pos_ - start));
  }

  void factor(Coefficient& coeff, Term& term) {
    const char c = src_.at(pos_);
    if (is_digit(c)) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (src_.at(pos_) == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = integer();
        if (den == 0) src_.fail(at, "zero denominator");
      }
      Coefficient q(num, den);
      q.canonicalize();
      coeff *= q;
      return;
    }
    if (!is_ident_start(c)) {
      src_.fail(pos_, c == '\0' ? "unexpected end of input, expected a term"
                                : std::string("unexpected character '") + c + "'");
    }
    const std::size_t start = pos_;
    while (is_ident_char(src_.at(pos_))) ++pos_;
    const std::string name = src_.text().substr(start, pos_ - start);
    const auto it = std::find(p_.vars.begin(), p_.vars.end(), name);
    if (it == p_.vars.end()) src_.fail(start, "unknown variable '" + name + "'");
    const auto index = static_cast<std::size_t>(it - p_.vars.begin());
    std::uint64_t e = 1;
    if (src_.at(pos_) == '^') {
      ++pos_;
      if (!is_digit(src_.at(pos_))) {
        src_.fail(pos_, "exponent must be a non-negative integer");
      }
      const std::size_t at = pos_;
      const mpz_class big = integer();
      if (!big.fits_uint_p() || big > 0xFFFFFFFFu) src_.fail(at, "exponent too large");
      e = big.get_ui();
    }
    const std::uint64_t total = term.exponents()[index] + e;
    if (total > 0xFFFFFFFFu) src_.fail(start, "exponent too large");
    term.set(index, static_cast<Exponent>(total));
  }

  const Source& src_;
  std::size_t pos_;
  const Problem& p_;
};

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::pair<std::string, std::size_t>> split_words(
    std::string_view s, std::size_t offset, bool commas) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (std::isspace(static_cast<unsigned char>(s[k])) ||
                            (commas && s[k] == ','))) {
      ++k;
    }
    const std::size_t start = k;
    while (k < s.size() && !std::isspace(static_cast<unsigned char>(s[k])) &&
           !(commas && s[k] == ',')) {
      ++k;
    }
    if (k > start) out.emplace_back(std::string(s.substr(start, k - start)), offset + start);
  }
  return out;
}

std::int64_t parse_int(const Source& src, const std::string& word, std::size_t at) {
  std::int64_t v = 0;
  const char* first = word.data();
  const char* last = word.data() + word.size();
  if (!word.empty() && word[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    src.fail(at, "expected an integer, got '" + word + "'");
  }
  return v;
}

}  // namespace

bool operator==(const Problem& a, const Problem& b) {
  if (a.vars != b.vars || !(a.ordering == b.ordering)) return false;
  if (!a.ctx || !b.ctx) return a.ctx == b.ctx;
  return *a.ctx == *b.ctx && a.generators == b.generators;
}

Problem parse_problem(std::string_view text) {
  const Source src(text);
  const std::string& s = src.text();

  Problem p;
  bool have_vars = false;
  bool have_rank = false;
  bool have_ordering = false;
  std::size_t rank = 1;
  std::vector<std::vector<std::int64_t>> grading;
  std::vector<std::size_t> grading_at;
  std::vector<std::pair<std::string, std::size_t>> shift_words;
  std::size_t shifts_at = std::string::npos;
  std::size_t gens_at = std::string::npos;

  std::size_t line_start = 0;
  while (line_start < s.size() && gens_at == std::string::npos) {
    std::size_t line_end = s.find('\n', line_start);
    if (line_end == std::string::npos) line_end = s.size();
    const std::string_view line(s.data() + line_start, line_end - line_start);
    std::size_t k = 0;
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k < line.size()) {
      const std::size_t key_start = k;
      while (k < line.size() && is_ident_char(line[k])) ++k;
      const std::string key(line.substr(key_start, k - key_start));
      if (key.empty() || k >= line.size() || line[k] != ':') {
        src.fail(line_start + key_start, "expected 'key:' (vars, grading, rank, shifts, ordering or gens)");
      }
      const std::size_t value_at = line_start + k + 1;
      const std::string_view value = line.substr(k + 1);
      auto once = [&](bool& seen) {
        if (seen) src.fail(line_start + key_start, "duplicate '" + key + ":' line");
        seen = true;
      };
      if (key == "vars") {
        once(have_vars);
        for (auto& [name, at] : split_words(value, value_at, true)) {
          if (!is_ident_start(name[0]) ||
              !std::all_of(name.begin(), name.end(), is_ident_char)) {
            src.fail(at, "invalid variable name '" + name + "'");
          }
          if (std::find(p.vars.begin(), p.vars.end(), name) != p.vars.end()) {
            src.fail(at, "duplicate variable '" + name + "'");
          }
          p.vars.push_back(name);
        }
        if (p.vars.empty()) src.fail(value_at, "at least one variable is required");
      } else if (key == "grading") {
        std::vector<std::int64_t> row;
        for (auto& [w, at] : split_words(value, value_at, true)) row.push_back(parse_int(src, w, at));
        grading.push_back(std::move(row));
        grading_at.push_back(value_at);
      } else if (key == "rank") {
        once(have_rank);
        const auto words = split_words(value, value_at, false);
        if (words.size() != 1) src.fail(value_at, "rank takes one integer");
        const std::int64_t v = parse_int(src, words[0].first, words[0].second);
        if (v < 1) src.fail(words[0].second, "rank must be at least 1");
        rank = static_cast<std::size_t>(v);
      } else if (key == "shifts") {
        if (shifts_at != std::string::npos) src.fail(line_start + key_start, "duplicate 'shifts:' line");
        shifts_at = value_at;
        shift_words = split_words(value, value_at, false);
      } else if (key == "ordering") {
        once(have_ordering);
        const std::string name = trim(value);
        try {
          p.ordering = OrderingSpec::parse(name);
        } catch (const InvalidArgument& e) {
          src.fail(value_at, e.what());
        }
      } else if (key == "gens") {
        gens_at = value_at;
      } else {
        src.fail(line_start + key_start, "unknown key '" + key + "'");
      }
    }
    line_start = line_end + 1;
  }
  if (!have_vars) src.fail(s.size(), "missing 'vars:' line");

  const std::size_t n = p.vars.size();
  DegreeMatrix w = DegreeMatrix::standard(n);
  if (!grading.empty()) {
    for (std::size_t r = 0; r < grading.size(); ++r) {
      if (grading[r].size() != n) {
        src.fail(grading_at[r], "grading row has " + std::to_string(grading[r].size()) +
                                    " entries for " + std::to_string(n) + " variables");
      }
    }
    w = DegreeMatrix(grading);
  }
  const std::size_t m = w.rows();
  ShiftVector shifts;
  if (shifts_at == std::string::npos) {
    shifts.assign(rank, MultiDegree(m));
  } else {
    if (shift_words.size() != rank) {
      src.fail(shifts_at, "expected " + std::to_string(rank) + " shifts, got " +
                              std::to_string(shift_words.size()));
    }
    for (auto& [word, at] : shift_words) {
      std::vector<std::int64_t> v;
      for (auto& [part, pat] : split_words(word, at, true)) v.push_back(parse_int(src, part, pat));
      if (v.size() != m || std::count(word.begin(), word.end(), ',') + 1 !=
                               static_cast<std::ptrdiff_t>(m)) {
        src.fail(at, "shift '" + word + "' needs " + std::to_string(m) + " entries");
      }
      shifts.emplace_back(std::move(v));
    }
  }
  p.ctx = ModuleContext::make(std::move(w), std::move(shifts));
  if (!is_positive_grading(p.ctx->grading())) {
    p.warnings.push_back("the grading is not positive; engine commands will refuse it");
  }

  if (gens_at == std::string::npos) return p;
  std::size_t next = gens_at;
  for (;;) {
    std::size_t pos = next;
    while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ',')) ++pos;
    if (pos >= s.size()) break;
    Parser item(src, pos, p);
    p.generators.push_back(item.item());
    item.skip_blanks(false);
    const char c = src.at(item.pos());
    if (c != ',' && c != '\n' && c != '\0') {
      src.fail(item.pos(), std::string("unexpected character '") + c + "'");
    }
    next = item.pos();
  }
  return p;
}

ModuleVector parse_vector(std::string_view text, const Problem& p) {
  const Source src(text);
  Parser parser(src, 0, p);
  parser.skip_blanks(true);
  ModuleVector v = parser.item();
  parser.skip_blanks(true);
  if (parser.pos() != src.size()) src.fail(parser.pos(), "trailing input");
  return v;
}

std::string format_coefficient(const Coefficient& c) { return c.get_str(); }

std::string format_term(const Term& t, const std::vector<std::string>& vars) {
  std::string out;
  const auto e = t.exponents();
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(k);
    if (e[k] > 1) out += '^' + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::string format_component(std::vector<ModuleVector::Entry> entries,
                             const std::vector<std::string>& vars,
                             const TermOrder& order) {
  if (entries.empty()) return "0";
  std::sort(entries.begin(), entries.end(),
            [&](const ModuleVector::Entry& a, const ModuleVector::Entry& b) {
              return order.compare(a.term, b.term) > 0;
            });
  std::string out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Coefficient& c = entries[k].coeff;
    const bool negative = c < 0;
    const Coefficient mag = negative ? Coefficient(-c) : c;
    if (k == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Term& t = entries[k].term.term;
    if (t.is_one()) {
      out += format_coefficient(mag);
    } else if (mag == 1) {
      out += format_term(t, vars);
    } else {
      out += format_coefficient(mag) + '*' + format_term(t, vars);
    }
  }
  return out;
}

}  // namespace

std::string format_vector(const ModuleVector& v, const std::vector<std::string>& vars,
                          const TermOrder& order) {
  const std::size_t r = v.context_ptr() ? v.context().rank() : 1;
  std::vector<std::vector<ModuleVector::Entry>> parts(r);
  for (const auto& e : v.terms()) parts.at(e.term.component).push_back(e);
  if (r == 1) return format_component(std::move(parts[0]), vars, order);
  std::string out = "[";
  for (std::size_t k = 0; k < r; ++k) {
    if (k > 0) out += ", ";
    out += format_component(std::move(parts[k]), vars, order);
  }
  return out + "]";
}

std::string render_problem(const Problem& p) {
  std::string out = "vars: ";
  for (std::size_t k = 0; k < p.vars.size(); ++k) {
    if (k > 0) out += ", ";
    out += p.vars[k];
  }
  out += '\n';
  for (const auto& row : p.ctx->grading().row_data()) {
    out += "grading:";
    for (auto x : row) out += ' ' + std::to_string(x);
    out += '\n';
  }
  out += "rank: " + std::to_string(p.ctx->rank()) + '\n';
  out += "shifts:";
  for (const auto& d : p.ctx->shifts()) out += ' ' + d.to_string();
  out += '\n';
  out += "ordering: " + p.ordering.name() + '\n';
  out += "gens:\n";
  for (std::size_t k = 0; k < p.generators.size(); ++k) {
    out += format_vector(p.generators[k], p.vars, p.ordering);
    out += k + 1 < p.generators.size() ? ",\n" : "\n";
  }
  return out;
}

Problem homogenize(const Problem& p) {
  if (!p.ctx->grading().is_standard()) {
    throw MathDomainError("homogenize supports only the standard grading");
  }
  Problem out;
  out.vars = p.vars;
  std::string h = "h";
  for (int k = 0; std::find(out.vars.begin(), out.vars.end(), h) != out.vars.end(); ++k) {
    h = "h" + std::to_string(k);
  }
  out.vars.push_back(h);
  const std::size_t n = out.vars.size();
  out.ctx = ModuleContext::make(DegreeMatrix::standard(n), p.ctx->shifts());
  out.ordering = p.ordering;
  out.warnings = p.warnings;
  for (const auto& g : p.generators) {
    std::int64_t top = 0;
    bool first = true;
    for (const auto& e : g.terms()) {
      const std::int64_t d = p.ctx->degree(e.term)[0];
      top = first ? d : std::max(top, d);
      first = false;
    }
    std::vector<ModuleVector::Entry> entries;
    for (const auto& e : g.terms()) {
      Term t(n);
      const auto ex = e.term.term.exponents();
      for (std::size_t k = 0; k < ex.size(); ++k) t.set(k, ex[k]);
      t.set(n - 1, static_cast<Exponent>(top - p.ctx->degree(e.term)[0]));
      entries.push_back({{std::move(t), e.term.component}, e.coeff});
    }
    out.generators.emplace_back(out.ctx, std::move(entries));
  }
  return out;
}

Problem gen_cyclic(std::size_t n) {
  if (n < 2) throw InvalidArgument("cyclic-n needs n >= 2");
  Problem p;
  for (std::size_t k = 1; k <= n; ++k) p.vars.push_back("x" + std::to_string(k));
  p.ctx = ModuleContext::standard(n);
  p.ordering = OrderingSpec(BaseOrder::kDegRevLex);
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<ModuleVector::Entry> entries;
    for (std::size_t start = 0; start < n; ++start) {
      Term t(n);
      for (std::size_t a = 0; a < len; ++a) t.set((start + a) % n, 1);
      entries.push_back({{std::move(t), 0}, Coefficient(1)});
    }
    p.generators.emplace_back(p.ctx, std::move(entries));
  }
  Term all(n);
  for (std::size_t a = 0; a < n; ++a) all.set(a, 1);
  p.generators.emplace_back(
      p.ctx, std::vector<ModuleVector::Entry>{{{all, 0}, Coefficient(1)},
                                             {{Term(n), 0}, Coefficient(-1)}});
  return p;
}

}  // namespace obb::cli
