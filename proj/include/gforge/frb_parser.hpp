// Text format for rule bases (.frb).
//
//   # comment
//   universe 0 1 2 3 4;
//   set low_t = 1/0 0.5/1 0/2 0/3 0/4;     membership/element pairs
//   var X0 X1 X2;
//   rule R1: if X0 is low_t then X1 is high_d;
//   rule R7: if X1 is medium_d and X2 is high_r then X5 is zero_dr;
//   init X0 = low_t, X1 = high_d;
//   target X2 = A;
//
// Statements end with ';' and may span lines. Universe elements are
// rationals written as integers or decimals, optionally negative.
#pragma once

#include "gforge/fuzzy.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gforge {

class FrbError : public std::runtime_error {
 public:
  FrbError(const std::string& msg, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct FrbFile {
  RuleBase base;
  std::map<std::string, std::string> init;                 // variable -> set name
  std::vector<std::pair<std::string, std::string>> targets;  // in file order
};

// Throws FrbError on syntax errors and on a rule base that fails validation.
FrbFile parse_frb(const std::string& text);
FrbFile load_frb(const std::string& path);

}  // namespace gforge
