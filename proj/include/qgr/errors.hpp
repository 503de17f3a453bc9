#ifndef QGR_ERRORS_HPP
#define QGR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgr {

// Invalid argument to a public operation (bad shape, malformed index, ...).
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A matrix of forms does not represent a point of the requested space.
struct representation_error : std::runtime_error {
    explicit representation_error(const std::string& what) : std::runtime_error(what) {}
};

// A plane given as a matrix is rank deficient.
struct degenerate_plane_error : std::runtime_error {
    explicit degenerate_plane_error(const std::string& what) : std::runtime_error(what) {}
};

// A pair of poset elements has no unique greatest lower bound.
struct lattice_violation_error : std::logic_error {
    explicit lattice_violation_error(const std::string& what) : std::logic_error(what) {}
};

// Exact certification could not be completed after the retry budget.
struct certification_unavailable_error : std::runtime_error {
    explicit certification_unavailable_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation produced a result that violates an internal invariant.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qgr

#endif
