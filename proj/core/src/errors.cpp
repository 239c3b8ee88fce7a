#include "sec/errors.hpp"

#include <utility>

namespace sec {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                 message),
      line_(line), column_(column) {}

HypothesisError::HypothesisError(std::string hypothesis, const std::string& detail)
    : Error("hypothesis '" + hypothesis + "' violated: " + detail),
      hypothesis_(std::move(hypothesis)) {}

ExtensionError::ExtensionError(std::size_t step, std::uint32_t edge, std::uint32_t promised_bound,
                               std::uint32_t actual_conflicts, std::size_t list_size)
    : TheoremViolation("theorem violation: no admissible color at extension step " +
                       std::to_string(step) + " (edge " + std::to_string(edge) +
                       ", promised at most " + std::to_string(promised_bound) +
                       " colored conflicts, found " + std::to_string(actual_conflicts) +
                       ", list size " + std::to_string(list_size) + ")"),
      step_(step), edge_(edge), promised_bound_(promised_bound),
      actual_conflicts_(actual_conflicts), list_size_(list_size) {}

} // namespace sec
