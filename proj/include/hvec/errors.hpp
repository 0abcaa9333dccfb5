#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hvec {

/// Invalid argument or ambient-data mismatch (CLI exit code 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured budget was exceeded (CLI exit code 2).
class ResourceError : public std::runtime_error {
 public:
  ResourceError(std::string budget, const std::string& what)
      : std::runtime_error(what), budget_(std::move(budget)) {}

  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string budget_;
};

/// A lemma check was invoked on input that does not satisfy its hypotheses.
class PreconditionError : public DomainError {
 public:
  PreconditionError(std::string clause, const std::string& what)
      : DomainError(what), clause_(std::move(clause)) {}

  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

/// Syntax error in polynomial or ideal-file text, with 1-based location.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : DomainError(std::to_string(line) + ":" + std::to_string(column) + ": " +
                    message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hvec
