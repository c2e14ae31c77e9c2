#pragma once

// Line-oriented text formats for every input object. `#` starts a comment
// that runs to the end of the line; blank lines are ignored.
//
//   z2form <dim>      dim rows of 0/1
//   z2q <dim>         form rows, then one line of dim values in {0,1}
//   z4q <dim>         form rows, then one line of dim values in {0,1,2,3}
//   intform <dim>     dim rows of integers
//   ratform <dim>     dim rows of rationals written p/q
//   symcomplex <n>    a line of n+1 ranks, then blocks `d <r>`, `phi0 <r>`,
//                     `phi1 <r>` each followed by the matrix rows
//   monodromy <h> <g> 2g matrices of 2h rows of 2h integers, f1 g1 f2 g2 ...

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sigmod8/enhancements.hpp"
#include "sigmod8/fibration.hpp"
#include "sigmod8/intforms.hpp"
#include "sigmod8/symcomplex.hpp"
#include "sigmod8/z2forms.hpp"

namespace sigmod8 {

/// Syntax error; what() reads "<source>:<line>: expected <token>, got <found>".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& expected, const std::string& found);

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string source_;
  std::size_t line_;
  std::string expected_;
};

Z2SymForm parse_z2form(std::istream& in, const std::string& source = "<input>");
Z2Quadratic parse_z2q(std::istream& in, const std::string& source = "<input>");
Z4Quadratic parse_z4q(std::istream& in, const std::string& source = "<input>");
IntSymForm parse_intform(std::istream& in, const std::string& source = "<input>");
RatSymForm parse_ratform(std::istream& in, const std::string& source = "<input>");
SymComplex parse_symcomplex(std::istream& in, const std::string& source = "<input>");
MonodromyData parse_monodromy(std::istream& in, const std::string& source = "<input>");

std::string format_z2form(const Z2SymForm& form);
std::string format_z2q(const Z2Quadratic& h);
std::string format_z4q(const Z4Quadratic& q);
std::string format_intform(const IntSymForm& form);
std::string format_ratform(const RatSymForm& form);
std::string format_symcomplex(const SymComplex& c);
std::string format_monodromy(const MonodromyData& m);

}  // namespace sigmod8
