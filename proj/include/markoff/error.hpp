#pragma once

#include <stdexcept>
#include <string>

namespace markoff {

enum class errc {
    division_by_zero,
    identity_violation,
    precondition_violation,
    not_irrational,
    not_markoff,
    not_coprime,
    not_extendable,
    range_error,
    not_recognized,
    invalid_square_cf,
    resource_limit,
    certificate_failure,
    unsupported_path,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::identity_violation: return "IdentityViolation";
    case errc::precondition_violation: return "PreconditionViolation";
    case errc::not_irrational: return "NotIrrational";
    case errc::not_markoff: return "NotMarkoff";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_extendable: return "NotExtendable";
    case errc::range_error: return "RangeError";
    case errc::not_recognized: return "NotRecognized";
    case errc::invalid_square_cf: return "InvalidSquareCF";
    case errc::resource_limit: return "ResourceLimit";
    case errc::certificate_failure: return "CertificateFailure";
    case errc::unsupported_path: return "UnsupportedPath";
    case errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

} // namespace markoff
