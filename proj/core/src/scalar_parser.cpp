#include <optional>

#include "expr_parser.hpp"
#include "reflinv/cyclotomic.hpp"

namespace reflinv {

namespace {

struct ScalarTraits {
    using Value = Cyclotomic;
    Value constant(const Cyclotomic &c) const { return c; }
    std::optional<Value> variable(const std::string &) const { return std::nullopt; }
    Value divide(const Value &a, const Value &b) const { return a / b; }
    Value power(const Value &a, long e) const { return a.pow(e); }
};

} // namespace

Cyclotomic Cyclotomic::parse(const std::string &text)
{
    ScalarTraits traits;
    return detail::ExprParser<ScalarTraits>(text, traits).parse();
}

} // namespace reflinv
