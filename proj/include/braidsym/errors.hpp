#ifndef BRAIDSYM_ERRORS_HPP
#define BRAIDSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace braidsym {

// Error taxonomy. Codes mirror the C API / CLI exit-code contract:
//   0 ok, 1 verification failure, 2 usage error, 3 resource limit, 4 internal.
enum class ErrorCode : int {
    Ok = 0,
    VerifyFailed = 1,
    Usage = 2,
    ResourceLimit = 3,
    Internal = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Evaluation of a rational function at a zero of its denominator.
struct PoleError : Error {
    explicit PoleError(const std::string& w) : Error(ErrorCode::Usage, w) {}
};

// Subspace operations on spaces of different ambient dimension.
struct AmbientMismatch : Error {
    explicit AmbientMismatch(const std::string& w) : Error(ErrorCode::Usage, w) {}
};

// Tensor product of modules over different scalar flavors.
struct FlavorMismatch : Error {
    explicit FlavorMismatch(const std::string& w) : Error(ErrorCode::Usage, w) {}
};

// The two independent multiplicity computations disagree; the input is not a
// semisimple weight module (or has been corrupted).
struct InconsistentModule : Error {
    explicit InconsistentModule(const std::string& w) : Error(ErrorCode::Internal, w) {}
};

// A weight block exceeded the configured size bound.
struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& w) : Error(ErrorCode::ResourceLimit, w) {}
};

// Poisson operations mixing polynomials over different modules.
struct MixedModule : Error {
    explicit MixedModule(const std::string& w) : Error(ErrorCode::Usage, w) {}
};

// Index triple not strictly increasing.
struct IndexOrder : Error {
    explicit IndexOrder(const std::string& w) : Error(ErrorCode::Usage, w) {}
};

// Variable index outside the ring's range.
struct IndexRange : Error {
    explicit IndexRange(const std::string& w) : Error(ErrorCode::Usage, w) {}
};

// Veronese module decompositions are only available for ranks 1 and 2.
struct UnsupportedRank : Error {
    explicit UnsupportedRank(const std::string& w) : Error(ErrorCode::Usage, w) {}
};

// Bad CLI/config input.
struct UsageError : Error {
    explicit UsageError(const std::string& w) : Error(ErrorCode::Usage, w) {}
};

} // namespace braidsym

#endif
