#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace wavewr {

/// Arithmetic expression over named variables, e.g. "t^2*exp(-t)".
/// Supports + - * / ^, unary minus, parentheses, the constants pi and e and
/// the functions sin cos tan exp log sqrt abs sinh cosh tanh pow min max.
class Expression {
public:
    struct Node;

    Expression() = default;
    /// Throws ValidationError with the offending column on malformed input or
    /// unknown names.
    static Expression parse(const std::string& text, const std::vector<std::string>& variables);

    double eval(std::span<const double> values) const;
    const std::string& text() const { return text_; }
    /// True when no variable is referenced.
    bool is_constant() const;

private:
    std::string text_;
    std::shared_ptr<const Node> root_;
};

/// Value of a constant expression such as "pi" or "3/5".
double eval_constant(const std::string& text);

}  // namespace wavewr
