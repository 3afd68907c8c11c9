#pragma once

#include <stdexcept>
#include <string>

namespace sumsym {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operands taken from different scalar domains.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed text input. The message names the source and location.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A matrix handed to an algorithm does not meet its hypothesis.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotNonnegative : public PreconditionError {
 public:
  NotNonnegative(std::size_t row, std::size_t col, const std::string& value)
      : PreconditionError("matrix is not nonnegative: entry (" +
                          std::to_string(row + 1) + "," +
                          std::to_string(col + 1) + ") = " + value),
        row_(row),
        col_(col) {}

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class NotSumSymmetric : public PreconditionError {
 public:
  NotSumSymmetric(std::size_t index, std::string row_sum, std::string col_sum)
      : PreconditionError("matrix is not sum-symmetric: index " +
                          std::to_string(index + 1) + " has row sum " +
                          row_sum + " but column sum " + col_sum),
        index_(index),
        row_sum_(std::move(row_sum)),
        col_sum_(std::move(col_sum)) {}

  // 0-based; the message reports it 1-based.
  std::size_t index() const { return index_; }
  const std::string& row_sum() const { return row_sum_; }
  const std::string& col_sum() const { return col_sum_; }

 private:
  std::size_t index_;
  std::string row_sum_;
  std::string col_sum_;
};

class NotDoublyBalanced : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// find_positive_cycle was handed the zero matrix.
class NoCycle : public Error {
 public:
  using Error::Error;
};

// An internal consistency check that a valid input can never trip.
class TheoremViolated : public Error {
 public:
  using Error::Error;
};

// Scenario invariants (quotas, potency order, responsiveness, ids).
class ValidationError : public Error {
 public:
  enum class Kind { kQuotaSum, kPotencyOrder, kNegativeResponsiveness, kDuplicateId, kNoTreatments };

  ValidationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class InfeasibleAllocation : public Error {
 public:
  using Error::Error;
};

// Exhaustive oracle refused to run past its configured limits.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace sumsym
