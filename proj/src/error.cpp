#include "brann/error.hpp"

namespace brann {

std::string format_tuple(const std::vector<int>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + ")";
}

AxiomError::AxiomError(std::string axiom, std::vector<int> witness)
    : Error("axiom '" + axiom + "' violated at " + format_tuple(witness)),
      axiom_(std::move(axiom)), witness_(std::move(witness)) {}

NormalizationError::NormalizationError(std::string component, std::vector<int> witness)
    : Error("normalization violated: " + component + format_tuple(witness) + " must be 0"),
      component_(std::move(component)), witness_(std::move(witness)) {}

PathError::PathError(std::size_t step, const std::string& what)
    : Error("path step " + std::to_string(step) + ": " + what), step_(step) {}

} // namespace brann
