#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdring {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring table fails one of the ring axioms. `witness` holds the offending
/// element triple (unused slots are zero).
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::array<std::size_t, 3> witness);
  AxiomViolation(std::string axiom, std::string detail);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::array<std::size_t, 3> witness_{};
};

class NotPrime : public Error {
 public:
  explicit NotPrime(long long value);
};

/// A size limit (order, structural, graph or enumeration cap) was hit.
class OrderCapExceeded : public Error {
 public:
  using Error::Error;
};

class GraphCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NoIdentity : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }
  /// The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

class UnboundVariable : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace zdring
