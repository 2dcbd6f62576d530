#pragma once

#include <hdt/geometry.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace hdt {

/// A decision-problem unit: two labeled point sets, a norm tag and an
/// optional threshold.
struct Instance {
    PointSet a;
    PointSet b;
    Norm norm = Norm::l2();
    std::optional<ExactScalar> delta;
};

/// Text format:
///
///   # hdt-instance v1
///   norm=L2
///   delta=1
///   set A
///   0 0
///   1/2 3/4+1/2*r2
///   set B
///   ...
///
/// '#' starts a comment, blank lines are ignored, coordinates use the
/// ExactScalar text encoding. Exactly two sets are expected; the first is A.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);
void write_instance_file(const std::string& path, const Instance& inst);

}  // namespace hdt
