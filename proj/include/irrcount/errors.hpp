#pragma once

#include <stdexcept>
#include <string>

namespace irrcount {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& m) : Error("BudgetExceeded", m) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error("DomainError", m) {}
};
struct NonIntegralResult : Error {
  explicit NonIntegralResult(const std::string& m) : Error("NonIntegralResult", m) {}
};
struct ValidationFailed : Error {
  explicit ValidationFailed(const std::string& m) : Error("ValidationFailed", m) {}
};
struct ValidityError : Error {
  explicit ValidityError(const std::string& m) : Error("ValidityError", m) {}
};
struct ParseError : Error {
  ParseError(const std::string& m, std::size_t pos)
      : Error("ParseError", m + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace irrcount
