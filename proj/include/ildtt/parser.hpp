#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ildtt/signature.hpp"

namespace ildtt {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, std::size_t line, std::size_t column, std::string message,
             std::vector<std::string> expected = {});

  std::string file;
  std::size_t line;
  std::size_t column;
  std::string message;
  std::vector<std::string> expected;
};

/// Parse a whole source file. References to earlier definitions are inlined.
Module parse_module(const std::string& text, const std::string& file = "<input>");

/// Parse a standalone term or type against a signature. `scope` lists the
/// variables in scope, innermost last.
TermPtr parse_term(const std::string& text, const Signature& sig, const std::vector<Binding>& scope = {});
TypePtr parse_type(const std::string& text, const Signature& sig, const std::vector<Binding>& scope = {});

}  // namespace ildtt
