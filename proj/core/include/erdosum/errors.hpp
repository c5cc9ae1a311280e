#pragma once

#include <stdexcept>
#include <string>

namespace erdosum {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Evaluation requested at or below the s=1 pole.
struct SingularityError : Error {
  using Error::Error;
};

// A certified bracket could not reach the requested accuracy.
struct PrecisionError : Error {
  using Error::Error;
};

// Argument exceeds a documented capacity ceiling (k_max, m_max, ...).
struct CapacityError : Error {
  using Error::Error;
};

// A signed recursion produced a value that is negative beyond its error bar.
struct CancellationError : Error {
  using Error::Error;
};

// Two independent computation routes disagree beyond tolerance.
struct ConsistencyError : Error {
  using Error::Error;
};

// Sieve run would exceed the configured memory budget.
struct MemoryBudgetError : Error {
  using Error::Error;
};

}  // namespace erdosum
