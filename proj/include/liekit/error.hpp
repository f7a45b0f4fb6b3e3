#pragma once

#include <stdexcept>
#include <string>

namespace liekit {

// Bad input: malformed data, violated preconditions. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    InputError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// A configured size cap was exceeded. The CLI maps these to exit code 3.
class ResourceError : public std::runtime_error {
public:
    ResourceError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define LIEKIT_INPUT_ERROR(Name)                                                   \
    class Name : public InputError {                                               \
    public:                                                                        \
        explicit Name(const std::string& what) : InputError(#Name, what) {}        \
    }

#define LIEKIT_RESOURCE_ERROR(Name)                                                \
    class Name : public ResourceError {                                            \
    public:                                                                        \
        explicit Name(const std::string& what) : ResourceError(#Name, what) {}     \
    }

LIEKIT_INPUT_ERROR(UnsupportedType);
LIEKIT_INPUT_ERROR(Reducible);
LIEKIT_INPUT_ERROR(DimensionMismatch);
LIEKIT_INPUT_ERROR(IndexOutOfRange);
LIEKIT_INPUT_ERROR(NotDominant);
LIEKIT_INPUT_ERROR(NotMinuscule);
LIEKIT_INPUT_ERROR(BadConstantTerm);
LIEKIT_INPUT_ERROR(NotPrimitive);
LIEKIT_INPUT_ERROR(InvalidFile);
LIEKIT_INPUT_ERROR(JacobiFailure);
LIEKIT_INPUT_ERROR(NotDiagonalizable);
LIEKIT_INPUT_ERROR(SizeMismatch);
LIEKIT_INPUT_ERROR(BadInvolution);
LIEKIT_INPUT_ERROR(BadColoring);
LIEKIT_INPUT_ERROR(NotBlack);
LIEKIT_INPUT_ERROR(OuterNotTabulated);
LIEKIT_INPUT_ERROR(Unclassified);
LIEKIT_INPUT_ERROR(ParseError);
LIEKIT_INPUT_ERROR(NotPartition);

LIEKIT_RESOURCE_ERROR(OrbitTooLarge);
LIEKIT_RESOURCE_ERROR(TooLarge);
LIEKIT_RESOURCE_ERROR(TooDeep);

#undef LIEKIT_INPUT_ERROR
#undef LIEKIT_RESOURCE_ERROR

// Rejection of a candidate Cartan matrix. The reason says which axiom failed.
class NotCartan : public InputError {
public:
    enum class Reason {
        NotSquare,
        Diagonal,          // a_ii != 2
        PositiveOffDiagonal,
        ZeroPattern,       // a_ij = 0 but a_ji != 0
        NotSymmetrizable,
        Affine,            // symmetrization singular (positive semidefinite)
        Indefinite,        // symmetrization has a negative direction
    };

    NotCartan(Reason reason, const std::string& what)
        : InputError("NotCartan", reason_name(reason) + ": " + what), reason_(reason) {}

    Reason reason() const noexcept { return reason_; }

    static std::string reason_name(Reason r) {
        switch (r) {
        case Reason::NotSquare: return "not square";
        case Reason::Diagonal: return "diagonal entry not 2";
        case Reason::PositiveOffDiagonal: return "positive off-diagonal entry";
        case Reason::ZeroPattern: return "asymmetric zero pattern";
        case Reason::NotSymmetrizable: return "not symmetrizable";
        case Reason::Affine: return "affine (singular symmetrization)";
        case Reason::Indefinite: return "indefinite symmetrization";
        }
        return "unknown";
    }

private:
    Reason reason_;
};

} // namespace liekit
