#ifndef L2HODGE_ERROR_HPP
#define L2HODGE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace l2hodge {

enum class errc {
    malformed_input,
    precondition_failed,
    inconsistent_input,
    indeterminate_from_degree,
    not_nilpotent,
    not_unipotent,
    not_quasi_unipotent,
    unknown_degree,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::malformed_input: return "MalformedInput";
        case errc::precondition_failed: return "PreconditionFailed";
        case errc::inconsistent_input: return "InconsistentInput";
        case errc::indeterminate_from_degree: return "IndeterminateFromDegree";
        case errc::not_nilpotent: return "NotNilpotent";
        case errc::not_unipotent: return "NotUnipotent";
        case errc::not_quasi_unipotent: return "NotQuasiUnipotent";
        case errc::unknown_degree: return "UnknownDegree";
    }
    return "UnknownError";
}

/// Domain error with a stable reason code; the CLI maps any Error to exit 1.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

inline void require(bool condition, errc code, const std::string& message) {
    if (!condition) throw Error(code, message);
}

} // namespace l2hodge

#endif
