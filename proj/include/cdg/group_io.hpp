#pragma once

// Group files:
//   degree N
//   (0 1 2)(3 4)      one generator per line, disjoint cycles
//   # comment
// write_group produces the canonical form; parse(write(G)) reproduces the
// generator list exactly and write(parse(s)) == s for canonical s.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "perm_group.hpp"

namespace cdg {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline std::string strip_comment(const std::string& s) {
  std::string t = s.substr(0, s.find('#'));
  auto b = t.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = t.find_last_not_of(" \t\r");
  return t.substr(b, e - b + 1);
}

inline PermGroup parse_group(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> degree;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    if (!degree) {
      std::istringstream ls(s);
      std::string kw;
      long long n = -1;
      ls >> kw >> n;
      std::string rest;
      if (kw != "degree" || ls.fail() || (ls >> rest)) throw ParseError(lineno, "expected 'degree N'");
      if (n < 0 || static_cast<std::size_t>(n) > kMaxDegree) throw ParseError(lineno, "degree out of range");
      degree = static_cast<std::size_t>(n);
      continue;
    }
    try {
      gens.push_back(parse_cycles(s, *degree));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!degree) throw ParseError(lineno, "missing 'degree N' line");
  return PermGroup(*degree, std::move(gens));
}

inline std::string write_group(const PermGroup& g) {
  std::string s = "degree " + std::to_string(g.degree()) + "\n";
  for (const auto& x : g.generators()) s += x.to_cycle_string() + "\n";
  return s;
}

inline PermGroup read_group_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_group(ss.str());
}

}  // namespace cdg
