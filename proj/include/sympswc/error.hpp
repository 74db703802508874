#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sympswc {

enum class ErrorKind {
    RingMismatch,
    DomainMismatch,
    CapRequired,
    CapExceeded,
    ExponentOverflow,
    NotSymmetric,
    IndexOutOfRange,
    InvalidFieldOrder,
    MalformedCharacter,
    NonIntegralMultiplicity,
    NegativeMultiplicity,
    DivisibilityViolation,
    GowSymmetryViolation,
    ParityViolation,
    RankMismatch,
    RankLimit,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library. `index` carries the offending
// position when there is one (the k of a failed m_k check, a variable slot).
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(what), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> index() const noexcept { return index_; }

   private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
};

}  // namespace sympswc
