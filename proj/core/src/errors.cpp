#include "logcap/errors.hpp"

namespace logcap {

ConvergenceError::ConvergenceError(const std::string& what, double partial_value,
                                   double partial_error)
    : std::runtime_error(what), partial_value_(partial_value), partial_error_(partial_error) {}

}  // namespace logcap
