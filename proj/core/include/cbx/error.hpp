#ifndef CBX_ERROR_HPP
#define CBX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cbx {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CBX_ERROR_TYPE(Name)                                                   \
    struct Name : Error {                                                      \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

CBX_ERROR_TYPE(DivisionByZero);
CBX_ERROR_TYPE(NonLinearDenominator);
CBX_ERROR_TYPE(RepeatedPole);
CBX_ERROR_TYPE(NotDivisibleByHbar);
CBX_ERROR_TYPE(DenominatorVanishes);
CBX_ERROR_TYPE(SchemaError);
CBX_ERROR_TYPE(TruncationUnstable);
CBX_ERROR_TYPE(NonIntegralExponent);
CBX_ERROR_TYPE(NotInYPrime);
CBX_ERROR_TYPE(IndexOutOfRange);
CBX_ERROR_TYPE(NotMinuscule);
CBX_ERROR_TYPE(LoopsUnsupported);
CBX_ERROR_TYPE(Inhomogeneous);
CBX_ERROR_TYPE(RelationFailed);
CBX_ERROR_TYPE(Unsupported);

#undef CBX_ERROR_TYPE

} // namespace cbx

#endif
