#pragma once

#include <stdexcept>
#include <string>

namespace phomfly {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by the zero fraction") {}
};

struct NotInvertible : std::domain_error {
  NotInvertible() : std::domain_error("scalar is not invertible: its norm vanishes") {}
};

struct InvalidPoint : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::string tok)
      : std::invalid_argument(what), token(std::move(tok)) {}
  std::string token;
};

struct IndexError : ParseError {
  using ParseError::ParseError;
};

struct ZeroIndexError : ParseError {
  explicit ZeroIndexError(std::string tok)
      : ParseError("generator index 0 is not allowed", std::move(tok)) {}
};

struct NoMatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IllegalConjugator : std::invalid_argument {
  IllegalConjugator() : std::invalid_argument("conjugating word must be classical") {}
};

struct IllegalDestab : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct PseudoLetterPresent : std::invalid_argument {
  PseudoLetterPresent() : std::invalid_argument("word contains pseudo letters") {}
};

struct MarkNotPseudo : std::invalid_argument {
  MarkNotPseudo() : std::invalid_argument("marked letter is not a pseudo letter") {}
};

struct StateBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace phomfly
