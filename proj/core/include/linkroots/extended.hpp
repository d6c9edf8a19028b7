#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "linkroots/errors.hpp"

namespace linkroots {

/// A non-negative integer or +infinity. Used for distances, eccentricities,
/// diameters and girths, where "infinite" has its own meaning (disconnected,
/// acyclic) and must never be confused with a large finite value.
class Extended {
public:
    constexpr Extended() = default;
    constexpr Extended(std::int64_t value) : value_(value) {}

    static constexpr Extended infinite() {
        Extended e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    std::int64_t value() const {
        if (infinite_) {
            throw InvalidArgument("Extended::value() called on infinity");
        }
        return value_;
    }

    constexpr bool operator==(const Extended& other) const {
        return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
    }

    constexpr std::strong_ordering operator<=>(const Extended& other) const {
        if (infinite_ || other.infinite_) {
            return static_cast<int>(infinite_) <=> static_cast<int>(other.infinite_);
        }
        return value_ <=> other.value_;
    }

    constexpr Extended operator+(const Extended& other) const {
        if (infinite_ || other.infinite_) {
            return infinite();
        }
        return Extended(value_ + other.value_);
    }

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const Extended& e) {
    if (e.is_infinite()) {
        return os << "inf";
    }
    return os << e.value();
}

}  // namespace linkroots
