#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace qbool {

/// A mathematical precondition failed. Carries a short machine-readable kind
/// and, where one exists, a witness (e.g. the element breaking freeness).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message, nlohmann::json witness = nullptr)
      : std::runtime_error(message), kind_(std::move(kind)), witness_(std::move(witness)) {}

  const std::string& kind() const { return kind_; }
  const nlohmann::json& witness() const { return witness_; }

 private:
  std::string kind_;
  nlohmann::json witness_;
};

/// A computation would exceed a configured resource cap.
class CapExceeded : public DomainError {
 public:
  CapExceeded(const std::string& message, nlohmann::json witness = nullptr)
      : DomainError("cap_exceeded", message, std::move(witness)) {}
};

/// Input does not match its file schema.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qbool
