#pragma once

#include <hdt/geometry.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hdt {

/// A generated Hausdorff-under-translation instance plus the metadata that
/// binds every emitted point back to its gadget, so a failed equivalence can
/// be traced to the gadget that broke.
struct ReductionOutput {
    PointSet a;
    PointSet b;
    Rational delta;
    Norm norm;
    std::vector<std::string> provenance_a;  // index-aligned gadget tags
    std::vector<std::string> provenance_b;
    std::optional<bool> preprocessed_answer;  // set when preprocessing short-circuited
};

}  // namespace hdt
