#pragma once

#include <stdexcept>
#include <string>

namespace persist {

// Exit-code categories used by the CLI. Library code throws typed errors;
// only the CLI turns them into process exit codes.
//   1 parse/config, 2 budget exceeded, 4 internal verification failure.
// "Property violated" (exit 3) is a regular result, never an exception.

struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error(m) {}
};

struct UnknownNode : Error {
    explicit UnknownNode(const std::string& m) : Error(m) {}
};

struct UnsupportedGraph : Error {
    explicit UnsupportedGraph(const std::string& m) : Error(m) {}
};

struct NameCollision : Error {
    explicit NameCollision(const std::string& m) : Error(m) {}
};

struct InfeasibleSystem : Error {
    explicit InfeasibleSystem(const std::string& m) : Error(m) {}
};

// An unbounded LP cannot arise from a well-formed HPolytope; hitting this
// means the caller violated the boundedness invariant.
struct UnboundedSystem : Error {
    explicit UnboundedSystem(const std::string& m) : Error(m) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& m) : Error(m) {}
};

// Vertex enumeration ran past its work budget.
struct DimensionTooLarge : BudgetExceeded {
    explicit DimensionTooLarge(const std::string& m) : BudgetExceeded(m) {}
};

struct NotValid : Error {
    explicit NotValid(const std::string& m) : Error(m) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& m) : Error(m) {}
};

struct NotSeparable : Error {
    explicit NotSeparable(const std::string& m) : Error(m) {}
};

struct NoCore : Error {
    explicit NoCore(const std::string& m) : Error(m) {}
};

struct VerificationFailed : Error {
    explicit VerificationFailed(const std::string& m) : Error(m) {}
};

} // namespace persist
