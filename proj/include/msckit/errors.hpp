#ifndef MSCKIT_ERRORS_HPP
#define MSCKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msc {

/// Base class of all msckit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Attempt to invert the zero element of a field.
struct ZeroInverse : Error {
    ZeroInverse() : Error("zero element has no inverse") {}
};

/// Root listing of the zero polynomial over an infinite field.
struct ZeroPolynomialOverInfiniteField : Error {
    ZeroPolynomialOverInfiniteField()
        : Error("zero polynomial has every element as root; field is infinite") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

struct SingularBasisChange : Error {
    SingularBasisChange() : Error("basis change matrix is singular") {}
};

/// An enumeration would exceed the configured work budget.
struct BudgetExceeded : Error {
    unsigned long long required;
    explicit BudgetExceeded(unsigned long long required_, const std::string& what)
        : Error(what), required(required_) {}
};

struct NotFiniteField : Error {
    explicit NotFiniteField(const std::string& what) : Error(what) {}
};

struct RankConditionFailed : Error {
    explicit RankConditionFailed(const std::string& what) : Error(what) {}
};

struct TraceConditionFailed : Error {
    explicit TraceConditionFailed(const std::string& what) : Error(what) {}
};

struct AugmentedRankFailed : Error {
    explicit AugmentedRankFailed(const std::string& what) : Error(what) {}
};

struct FirstRowZero : Error {
    explicit FirstRowZero(const std::string& what) : Error(what) {}
};

struct NotSimpleInput : Error {
    explicit NotSimpleInput(const std::string& what) : Error(what) {}
};

/// Input algebra fails a property hypothesis of an extension construction.
struct InputConditionFailed : Error {
    explicit InputConditionFailed(const std::string& what) : Error(what) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& what) : Error(what) {}
};

/// A parameter assignment violates a family constraint; names the predicate.
struct ConstraintViolated : Error {
    std::string predicate;
    explicit ConstraintViolated(const std::string& predicate_)
        : Error("constraint violated: " + predicate_), predicate(predicate_) {}
};

struct CharMismatch : Error {
    explicit CharMismatch(const std::string& what) : Error(what) {}
};

/// Malformed input (bad JSON, bad scalar string, non-canonical data).
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace msc

#endif  // MSCKIT_ERRORS_HPP
