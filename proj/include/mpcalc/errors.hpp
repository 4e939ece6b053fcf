#pragma once

#include <stdexcept>
#include <string>

namespace mpcalc {

enum class ErrorKind {
    Schema,               // malformed input document
    Consistency,          // violated invariant; message names entity and invariant
    DanglingReference,    // unknown id
    MissingTwist,
    UnsupportedSwap,
    UnboundedConstituent,
    NotSelfDual,
    MissingFrobenius,
    NonRealProduct,       // a mu4 product that should be +-1 is not
    MissingRSEntry,
    MissingLocalization,
    UnsupportedXuCase,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // Input errors get CLI exit code 2, domain errors exit code 1.
    bool is_input_error() const {
        return kind_ == ErrorKind::Schema || kind_ == ErrorKind::DanglingReference;
    }

    const char* kind_name() const {
        switch (kind_) {
            case ErrorKind::Schema: return "SchemaError";
            case ErrorKind::Consistency: return "ConsistencyError";
            case ErrorKind::DanglingReference: return "DanglingReference";
            case ErrorKind::MissingTwist: return "MissingTwist";
            case ErrorKind::UnsupportedSwap: return "UnsupportedSwap";
            case ErrorKind::UnboundedConstituent: return "UnboundedConstituent";
            case ErrorKind::NotSelfDual: return "NotSelfDual";
            case ErrorKind::MissingFrobenius: return "MissingFrobenius";
            case ErrorKind::NonRealProduct: return "NonRealProduct";
            case ErrorKind::MissingRSEntry: return "MissingRSEntry";
            case ErrorKind::MissingLocalization: return "MissingLocalization";
            case ErrorKind::UnsupportedXuCase: return "UnsupportedXuCase";
        }
        return "Error";
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace mpcalc
