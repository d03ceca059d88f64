#ifndef DECOC_ERRORS_HPP
#define DECOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace decoc {

struct NonPositiveDuration : std::invalid_argument {
  explicit NonPositiveDuration(const std::string& what) : std::invalid_argument(what) {}
};

struct NegativeTerminalSpeed : std::invalid_argument {
  explicit NegativeTerminalSpeed(const std::string& what) : std::invalid_argument(what) {}
};

struct MismatchedSampling : std::invalid_argument {
  explicit MismatchedSampling(const std::string& what) : std::invalid_argument(what) {}
};

struct OffRoad : std::domain_error {
  explicit OffRoad(const std::string& what) : std::domain_error(what) {}
};

struct OffRoadState : std::domain_error {
  explicit OffRoadState(const std::string& what) : std::domain_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct UnknownAction : std::invalid_argument {
  explicit UnknownAction(const std::string& what) : std::invalid_argument(what) {}
};

struct UnvisitedAction : std::logic_error {
  explicit UnvisitedAction(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace decoc

#endif  // DECOC_ERRORS_HPP
