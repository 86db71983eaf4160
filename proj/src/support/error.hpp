#pragma once

#include <stdexcept>
#include <string>

namespace saas {

// Mirrors the status codes of the public C API (include/saas/saas.h).
enum class ErrorCode {
    InvalidArgument,
    InvalidIri,
    XmlSyntax,
    SchemaViolation,
    NotAnArchive,
    NoEnvironmentFound,
    AmbiguousReference,
    NotFound,
    RdfSyntax,
    RuleSyntax,
    UnsafeRule,
    MalformedShape,
    UnknownShapeTarget,
    ResourceLimit,
    Unserializable,
    Io,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidIri: return "InvalidIri";
        case ErrorCode::XmlSyntax: return "XmlSyntax";
        case ErrorCode::SchemaViolation: return "SchemaViolation";
        case ErrorCode::NotAnArchive: return "NotAnArchive";
        case ErrorCode::NoEnvironmentFound: return "NoEnvironmentFound";
        case ErrorCode::AmbiguousReference: return "AmbiguousReference";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::RdfSyntax: return "RdfSyntax";
        case ErrorCode::RuleSyntax: return "RuleSyntax";
        case ErrorCode::UnsafeRule: return "UnsafeRule";
        case ErrorCode::MalformedShape: return "MalformedShape";
        case ErrorCode::UnknownShapeTarget: return "UnknownShapeTarget";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::Unserializable: return "Unserializable";
        case ErrorCode::Io: return "Io";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace saas
