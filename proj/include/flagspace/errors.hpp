#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

namespace flagspace {

// Error taxonomy used across the library:
//   StructuralError - operands from mismatched fields/towers/levels
//   DomainError     - value-level precondition violated
//   ResourceError   - an enumeration guard would be exceeded
//   InternalError   - a postcondition failed; indicates a bug
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct StructuralError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct ResourceError : Error {
    using Error::Error;
};
struct InternalError : Error {
    using Error::Error;
};

namespace detail {
inline std::atomic<bool> self_check_flag{false};
}

// Enables the dual-route cross validations (second irreducibility route,
// permutation check against the ratio condition, ...). Test drivers turn
// this on; it defaults to off.
inline void set_self_check(bool on) { detail::self_check_flag.store(on, std::memory_order_relaxed); }
inline bool self_check() { return detail::self_check_flag.load(std::memory_order_relaxed); }

}  // namespace flagspace
