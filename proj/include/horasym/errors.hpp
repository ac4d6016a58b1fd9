#pragma once

#include <stdexcept>
#include <string>

namespace horasym {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& what = "element is not a unit") : Error(what) {}
};

struct DescriptorMismatch : Error {
    explicit DescriptorMismatch(const std::string& what = "operands live in different rings") : Error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what) : Error(what) {}
};

struct CharDividesN : Error {
    explicit CharDividesN(const std::string& what) : Error(what) {}
};

struct ZeroDiscriminant : Error {
    explicit ZeroDiscriminant(const std::string& what = "discriminant must be nonzero") : Error(what) {}
};

struct NotAField : Error {
    explicit NotAField(const std::string& what) : Error(what) {}
};

struct WrongDegree : Error {
    explicit WrongDegree(const std::string& what) : Error(what) {}
};

struct AlgebraMismatch : Error {
    explicit AlgebraMismatch(const std::string& what = "elements belong to different algebras") : Error(what) {}
};

struct ReductionUndefined : Error {
    explicit ReductionUndefined(const std::string& what) : Error(what) {}
};

struct FieldTooSmall : Error {
    explicit FieldTooSmall(const std::string& what) : Error(what) {}
};

struct UnboundIndex : Error {
    explicit UnboundIndex(const std::string& what) : Error(what) {}
};

struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

struct UnsupportedExtension : Error {
    explicit UnsupportedExtension(const std::string& what) : Error(what) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

}  // namespace horasym
