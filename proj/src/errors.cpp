#include "zdring/errors.hpp"

#include <sstream>
#include <thread>

#include "zdring/limits.hpp"

namespace zdring {

namespace {

std::string describe(const std::string& axiom, const std::array<std::size_t, 3>& w) {
  std::ostringstream out;
  out << "axiom violated: " << axiom << " at (" << w[0] << ", " << w[1] << ", " << w[2] << ")";
  return out.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::array<std::size_t, 3> witness)
    : Error(describe(axiom, witness)), axiom_(std::move(axiom)), witness_(witness) {}

AxiomViolation::AxiomViolation(std::string axiom, std::string detail)
    : Error("axiom violated: " + axiom + ": " + detail), axiom_(std::move(axiom)) {}

NotPrime::NotPrime(long long value) : Error(std::to_string(value) + " is not prime") {}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

unsigned Limits::effective_workers() const noexcept {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace zdring
