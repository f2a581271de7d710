#pragma once

#include <stdexcept>
#include <string>

#include "mapfcc/instance.hpp"
#include "mapfcc/reductions.hpp"

namespace mapfcc {

// Parse failure with a 1-based input line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Instance text format (version header "mapfcc 1"):
//   mapfcc 1
//   graph <n> <m>      |  grid <W> <H>
//   <u> <v>            (m edge lines; grid form has none)
//   agents <k>
//   <start> <target>   (k lines)
//   d <int>
//   ell <int>
// '#' starts a comment anywhere; blank lines are ignored; tokens are
// whitespace-separated. Grid vertices are numbered row-major.
Instance parse_instance(const std::string& text);

// Canonical form: always "graph n m" with sorted edge lines; satisfies
// parse_instance(print_instance(i)) == i.
std::string print_instance(const Instance& inst);

// Schedule ("plan") text format (version header "mapfccplan 1"):
//   mapfccplan 1
//   agents <k>
//   makespan <mu>
//   <k vertex ids>     (mu+1 lines, one arrangement per turn)
Schedule parse_plan(const std::string& text);
std::string print_plan(const Schedule& sched);

// Multicolored-clique input format (version header "mcc <k>"):
//   mcc <k>
//   class <v> <v> ...  (k lines, 0-based H vertex ids)
//   edge <u> <v>       (any number)
// Classes must disjointly cover 0..max_id and be independent sets.
MccInstance parse_mcc(const std::string& text);
std::string print_mcc(const MccInstance& mcc);

}  // namespace mapfcc
