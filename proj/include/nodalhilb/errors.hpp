#ifndef NODALHILB_ERRORS_HPP
#define NODALHILB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nodalhilb
{

struct NonUnitConstantTerm : std::domain_error {
    NonUnitConstantTerm() : std::domain_error("series constant term must be 1 or -1") {}
};

struct OrderExceeded : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DegreeOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct PowerExceedsDimension : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DeltaMismatch : std::invalid_argument {
    DeltaMismatch() : std::invalid_argument("representations of different monodromy groups") {}
};

struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a computed invariant vector mixes weights.
struct NonHomogeneousKernel : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace nodalhilb

#endif
