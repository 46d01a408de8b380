#ifndef WEIL_LAB_ERRORS_HPP
#define WEIL_LAB_ERRORS_HPP

#include <stdexcept>

namespace weil_lab {

struct UnsupportedConductor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisibilityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotIntegral : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MissingCertificate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedLevel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GeneratorNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace weil_lab

#endif
