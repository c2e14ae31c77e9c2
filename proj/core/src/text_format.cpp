#include "sigmod8/text_format.hpp"

#include <istream>
#include <map>
#include <optional>
#include <sstream>

namespace sigmod8 {

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& expected,
                       const std::string& found)
    : std::runtime_error(source + ":" + std::to_string(line) + ": expected " + expected + ", got " + found),
      source_(source),
      line_(line),
      expected_(expected) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

class Reader {
 public:
  Reader(std::istream& in, std::string source) : source_(std::move(source)) {
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
      ++number;
      if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
      std::istringstream ss(text);
      Line line{number, {}};
      for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
    }
    last_line_ = number;
  }

  bool at_end() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }

  const Line& next(const std::string& expected) {
    if (at_end()) fail(last_line_ + 1, expected, "end of file");
    return lines_[pos_++];
  }

  [[noreturn]] void fail(std::size_t line, const std::string& expected, const std::string& found) const {
    throw ParseError(source_, line, expected, found);
  }

  std::size_t header(const std::string& keyword, std::size_t args, std::vector<long>& values) {
    const Line& line = next("'" + keyword + "' header");
    if (line.tokens[0] != keyword) fail(line.number, "'" + keyword + "' header", "'" + line.tokens[0] + "'");
    if (line.tokens.size() != args + 1)
      fail(line.number, std::to_string(args) + " argument(s) after '" + keyword + "'",
           std::to_string(line.tokens.size() - 1));
    values.clear();
    for (std::size_t i = 1; i <= args; ++i) values.push_back(count(line, line.tokens[i]));
    return line.number;
  }

  long count(const Line& line, const std::string& tok) const {
    std::size_t used = 0;
    long value = -1;
    try {
      value = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || value < 0) fail(line.number, "a nonnegative integer", "'" + tok + "'");
    return value;
  }

  Integer integer(const Line& line, const std::string& tok) const {
    if (!valid_integer(tok)) fail(line.number, "an integer", "'" + tok + "'");
    return Integer(tok[0] == '+' ? tok.substr(1) : tok);
  }

  Rational rational(const Line& line, const std::string& tok) const {
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return Rational(integer(line, tok));
    const std::string num = tok.substr(0, slash);
    const std::string den = tok.substr(slash + 1);
    if (!valid_integer(num) || den.empty() || !valid_digits(den))
      fail(line.number, "a rational p/q", "'" + tok + "'");
    Integer d(den);
    if (d == 0) fail(line.number, "a nonzero denominator", "'" + tok + "'");
    Rational r(Integer(num[0] == '+' ? num.substr(1) : num), d);
    r.canonicalize();
    return r;
  }

  /// One matrix row with exactly `cols` entries.
  template <class Parse>
  auto row(std::size_t cols, const std::string& what, Parse parse) {
    const Line& line = next(what);
    if (line.tokens.size() != cols)
      fail(line.number, std::to_string(cols) + " entries in " + what, std::to_string(line.tokens.size()));
    std::vector<decltype(parse(line, line.tokens[0]))> out;
    for (const auto& tok : line.tokens) out.push_back(parse(line, tok));
    return out;
  }

  IntMatrix int_matrix(std::size_t rows, std::size_t cols, const std::string& what) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      auto r = row(cols, what + " row " + std::to_string(i + 1),
                   [this](const Line& l, const std::string& t) { return integer(l, t); });
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = r[j];
    }
    return m;
  }

  std::vector<Z2Vec> bit_rows(std::size_t dim) {
    std::vector<Z2Vec> rows;
    for (std::size_t i = 0; i < dim; ++i) {
      auto r = row(dim, "form row " + std::to_string(i + 1), [this](const Line& l, const std::string& t) {
        if (t != "0" && t != "1") fail(l.number, "0 or 1", "'" + t + "'");
        return t == "1" ? 1 : 0;
      });
      rows.push_back(Z2Vec::from_bits(r));
    }
    return rows;
  }

  std::vector<int> values(std::size_t dim, int modulus) {
    return row(dim, "value line", [this, modulus](const Line& l, const std::string& t) {
      const long v = count(l, t);
      if (v >= modulus) fail(l.number, "a value in 0.." + std::to_string(modulus - 1), "'" + t + "'");
      return static_cast<int>(v);
    });
  }

  void finish() const {
    if (!at_end()) fail(peek().number, "end of file", "'" + peek().tokens[0] + "'");
  }

 private:
  static bool valid_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  }
  static bool valid_integer(const std::string& s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) return valid_digits(s.substr(1));
    return valid_digits(s);
  }

  std::string source_;
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

std::string matrix_text(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + m(i, j).get_str();
    out += "\n";
  }
  return out;
}

std::string bits_text(const Z2SymForm& form) {
  std::string out;
  for (std::size_t i = 0; i < form.dim(); ++i) {
    for (std::size_t j = 0; j < form.dim(); ++j) out += std::string(j ? " " : "") + (form(i, j) ? "1" : "0");
    out += "\n";
  }
  return out;
}

std::string values_text(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
  return out + "\n";
}

}  // namespace

Z2SymForm parse_z2form(std::istream& in, const std::string& source) {
  Reader r(in, source);
  std::vector<long> args;
  r.header("z2form", 1, args);
  auto rows = r.bit_rows(static_cast<std::size_t>(args[0]));
  r.finish();
  return Z2SymForm(std::move(rows));
}

Z2Quadratic parse_z2q(std::istream& in, const std::string& source) {
  Reader r(in, source);
  std::vector<long> args;
  r.header("z2q", 1, args);
  const auto dim = static_cast<std::size_t>(args[0]);
  auto rows = r.bit_rows(dim);
  auto values = r.values(dim, 2);
  r.finish();
  return Z2Quadratic(Z2SymForm(std::move(rows)), std::move(values));
}

Z4Quadratic parse_z4q(std::istream& in, const std::string& source) {
  Reader r(in, source);
  std::vector<long> args;
  r.header("z4q", 1, args);
  const auto dim = static_cast<std::size_t>(args[0]);
  auto rows = r.bit_rows(dim);
  auto values = r.values(dim, 4);
  r.finish();
  return Z4Quadratic(Z2SymForm(std::move(rows)), std::move(values));
}

IntSymForm parse_intform(std::istream& in, const std::string& source) {
  Reader r(in, source);
  std::vector<long> args;
  r.header("intform", 1, args);
  const auto dim = static_cast<std::size_t>(args[0]);
  auto m = r.int_matrix(dim, dim, "form");
  r.finish();
  return IntSymForm(std::move(m));
}

RatSymForm parse_ratform(std::istream& in, const std::string& source) {
  Reader r(in, source);
  std::vector<long> args;
  r.header("ratform", 1, args);
  const auto dim = static_cast<std::size_t>(args[0]);
  RatMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    auto row = r.row(dim, "form row " + std::to_string(i + 1),
                     [&r](const Line& l, const std::string& t) { return r.rational(l, t); });
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = row[j];
  }
  r.finish();
  return RatSymForm(std::move(m));
}

SymComplex parse_symcomplex(std::istream& in, const std::string& source) {
  Reader r(in, source);
  std::vector<long> args;
  r.header("symcomplex", 1, args);
  const int n = static_cast<int>(args[0]);

  const Line& rank_line = r.next("a line of ranks");
  std::size_t first = (rank_line.tokens[0] == "ranks") ? 1 : 0;
  if (rank_line.tokens.size() - first != static_cast<std::size_t>(n) + 1)
    r.fail(rank_line.number, std::to_string(n + 1) + " ranks", std::to_string(rank_line.tokens.size() - first));
  std::vector<std::size_t> ranks;
  for (std::size_t i = first; i < rank_line.tokens.size(); ++i)
    ranks.push_back(static_cast<std::size_t>(r.count(rank_line, rank_line.tokens[i])));
  auto rank = [&](int deg) -> std::size_t { return (deg < 0 || deg > n) ? 0 : ranks[static_cast<std::size_t>(deg)]; };

  std::vector<IntMatrix> d(ranks.size()), phi0(ranks.size()), phi1(ranks.size());
  std::map<std::pair<std::string, int>, bool> seen;
  while (!r.at_end()) {
    const Line& head = r.next("a block header");
    const std::string& kind = head.tokens[0];
    if ((kind != "d" && kind != "phi0" && kind != "phi1") || head.tokens.size() != 2)
      r.fail(head.number, "'d <r>', 'phi0 <r>' or 'phi1 <r>'", "'" + kind + "'");
    const long deg = r.count(head, head.tokens[1]);
    if (deg > n) r.fail(head.number, "a degree in 0.." + std::to_string(n), "'" + head.tokens[1] + "'");
    const int rdeg = static_cast<int>(deg);
    if (seen[{kind, rdeg}]) r.fail(head.number, "each block once", "a second '" + kind + " " + head.tokens[1] + "'");
    seen[{kind, rdeg}] = true;
    const std::string what = kind + " " + head.tokens[1];
    const auto ud = static_cast<std::size_t>(rdeg);
    if (kind == "d")
      d[ud] = r.int_matrix(rank(rdeg - 1), rank(rdeg), what);
    else if (kind == "phi0")
      phi0[ud] = r.int_matrix(rank(rdeg), rank(n - rdeg), what);
    else
      phi1[ud] = r.int_matrix(rank(rdeg), rank(n - rdeg + 1), what);
  }
  return SymComplex(n, std::move(ranks), std::move(d), std::move(phi0), std::move(phi1));
}

MonodromyData parse_monodromy(std::istream& in, const std::string& source) {
  Reader r(in, source);
  std::vector<long> args;
  r.header("monodromy", 2, args);
  const auto h = static_cast<std::size_t>(args[0]);
  const auto g = static_cast<std::size_t>(args[1]);
  std::vector<MonodromyPair> pairs;
  for (std::size_t i = 1; i <= g; ++i) {
    auto f = r.int_matrix(2 * h, 2 * h, "f" + std::to_string(i));
    auto gm = r.int_matrix(2 * h, 2 * h, "g" + std::to_string(i));
    pairs.push_back({SymplecticMatrix(std::move(f)), SymplecticMatrix(std::move(gm))});
  }
  r.finish();
  return MonodromyData(h, std::move(pairs));
}

std::string format_z2form(const Z2SymForm& form) {
  return "z2form " + std::to_string(form.dim()) + "\n" + bits_text(form);
}

std::string format_z2q(const Z2Quadratic& h) {
  return "z2q " + std::to_string(h.dim()) + "\n" + bits_text(h.form()) + values_text(h.basis_values());
}

std::string format_z4q(const Z4Quadratic& q) {
  return "z4q " + std::to_string(q.dim()) + "\n" + bits_text(q.form()) + values_text(q.basis_values());
}

std::string format_intform(const IntSymForm& form) {
  return "intform " + std::to_string(form.dim()) + "\n" + matrix_text(form.matrix());
}

std::string format_ratform(const RatSymForm& form) {
  std::string out = "ratform " + std::to_string(form.dim()) + "\n";
  for (std::size_t i = 0; i < form.dim(); ++i) {
    for (std::size_t j = 0; j < form.dim(); ++j) out += (j ? " " : "") + to_string(form(i, j));
    out += "\n";
  }
  return out;
}

std::string format_symcomplex(const SymComplex& c) {
  const int n = c.dimension();
  std::string out = "symcomplex " + std::to_string(n) + "\nranks";
  for (int r = 0; r <= n; ++r) out += " " + std::to_string(c.rank(r));
  out += "\n";
  auto block = [&out](const std::string& name, int r, const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0 || m.is_zero()) return;
    out += name + " " + std::to_string(r) + "\n" + matrix_text(m);
  };
  for (int r = 1; r <= n; ++r) block("d", r, c.d(r));
  for (int r = 0; r <= n; ++r) block("phi0", r, c.phi(0, r));
  for (int r = 0; r <= n; ++r) block("phi1", r, c.phi(1, r));
  return out;
}

std::string format_monodromy(const MonodromyData& m) {
  std::string out = "monodromy " + std::to_string(m.fibre_genus()) + " " + std::to_string(m.base_genus()) + "\n";
  for (std::size_t i = 0; i < m.pairs().size(); ++i) {
    out += "# f" + std::to_string(i + 1) + "\n" + matrix_text(m.pairs()[i].f.matrix());
    out += "# g" + std::to_string(i + 1) + "\n" + matrix_text(m.pairs()[i].g.matrix());
  }
  return out;
}

}  // namespace sigmod8
