#pragma once

#include <stdexcept>

namespace gadic {

// A computation that is well-posed but ran out of its configured budget
// (factorization iteration cap, BFS exploration margin too small, ...).
// Distinct from std::invalid_argument, which signals a violated precondition.
class computation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace gadic
