#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semilab {

// Base of every error raised by the library. Messages are meant for humans;
// the dynamic type carries the machine-readable category.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element violates its carrier's constraints, or belongs to another carrier.
class InvalidElement : public Error {
 public:
  using Error::Error;
};

// A precondition on the arguments of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Catalog lookup of an instance, inequality or kind that does not exist.
class UnknownName : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("enumeration needs " + std::to_string(required) +
              " outcomes, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

// Klass-Nowicki bounds need P(U_n >= 1) < 1.
class LambdaNotLessThanOne : public InvalidArgument {
 public:
  explicit LambdaNotLessThanOne(double lambda)
      : InvalidArgument("lambda = P(U_n >= 1) = " + std::to_string(lambda) +
                        " is not < 1"),
        lambda_(lambda) {}

  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

}  // namespace semilab
