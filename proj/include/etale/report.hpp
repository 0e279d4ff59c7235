#pragma once

#include <string>

#include "etale/pipeline.hpp"

namespace etale {

/// Which part of a report to print; Full is the `classify` view.
enum class Section { Full, Nette, Smooth, Etale, Decompose };

std::string render_text(const ClassificationReport& report, Section section = Section::Full);
std::string render_json(const ClassificationReport& report, Section section = Section::Full);

struct DifferentialsReport {
    DifferentialPresentation presentation;
    /// Absent when the quotient is not finite-dimensional.
    std::optional<std::size_t> omega_dimension;
};

DifferentialsReport differentials(const AlgebraPresentation& presentation, std::size_t pair_budget = kDefaultPairBudget);
std::string render_text(const DifferentialsReport& report);
std::string render_json(const DifferentialsReport& report);

}  // namespace etale
