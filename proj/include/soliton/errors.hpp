#ifndef SOLITON_ERRORS_HPP
#define SOLITON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace soliton {

/// Base of every error raised by the engine. Each subclass carries a stable
/// kind string used by the CLI when reporting errors.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SOLITON_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name, what) {}         \
    }

SOLITON_DEFINE_ERROR(DivisionByZero);
SOLITON_DEFINE_ERROR(PoleAtPoint);
SOLITON_DEFINE_ERROR(SingularMatrix);
SOLITON_DEFINE_ERROR(ZeroPolynomial);
SOLITON_DEFINE_ERROR(DomainError);
SOLITON_DEFINE_ERROR(AssumptionNotAsserted);
SOLITON_DEFINE_ERROR(UnsupportedDegree);
SOLITON_DEFINE_ERROR(ConfigError);
SOLITON_DEFINE_ERROR(ParseError);
SOLITON_DEFINE_ERROR(UsageError);

#undef SOLITON_DEFINE_ERROR

} // namespace soliton

#endif
