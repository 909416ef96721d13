#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace yangmorph {

/// Location of a statement or error in the source text (1-based).
struct SourceSpan {
    int line = 0;
    int column = 0;
};

enum class Severity { Error, Warning };

/// A single finding from parsing or validation. Errors prevent
/// transformation; warnings do not.
struct Diagnostic {
    Severity severity = Severity::Error;
    std::string message;
    SourceSpan span;
    std::string rule; // identifies the violated grammar/cardinality rule

    static Diagnostic error(std::string message, SourceSpan span, std::string rule = {}) {
        return Diagnostic{Severity::Error, std::move(message), span, std::move(rule)};
    }
    static Diagnostic warning(std::string message, SourceSpan span, std::string rule = {}) {
        return Diagnostic{Severity::Warning, std::move(message), span, std::move(rule)};
    }
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags) {
        if (d.severity == Severity::Error) return true;
    }
    return false;
}

std::string format_diagnostic(const Diagnostic& d);

/// Value-or-diagnostics result. A result may carry warnings alongside a
/// value; it is only a failure when an Error diagnostic is present and no
/// value was produced.
template <typename T>
class Result {
public:
    Result(T value) : value_(std::move(value)) {}
    Result(T value, std::vector<Diagnostic> diags)
        : value_(std::move(value)), diagnostics_(std::move(diags)) {}
    Result(std::vector<Diagnostic> diags) : diagnostics_(std::move(diags)) {}
    Result(Diagnostic diag) { diagnostics_.push_back(std::move(diag)); }

    bool ok() const { return value_.has_value(); }
    explicit operator bool() const { return ok(); }

    T& value() { return *value_; }
    const T& value() const { return *value_; }
    T take() { return std::move(*value_); }

    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
    std::vector<Diagnostic>& diagnostics() { return diagnostics_; }

private:
    std::optional<T> value_;
    std::vector<Diagnostic> diagnostics_;
};

} // namespace yangmorph
