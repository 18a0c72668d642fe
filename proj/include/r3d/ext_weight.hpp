#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace r3d {

/// Non-negative weight extended with an absorbing INFEASIBLE element.
///
/// Addition saturates; INFEASIBLE compares greater than every finite value.
/// A default-constructed ExtWeight is INFEASIBLE, which is the identity for min.
class ExtWeight {
public:
    constexpr ExtWeight() = default;
    constexpr explicit ExtWeight(std::int64_t value) : value_(value), finite_(true) {}

    static constexpr ExtWeight infeasible() { return ExtWeight(); }

    constexpr bool is_finite() const { return finite_; }
    constexpr bool is_infeasible() const { return !finite_; }

    std::int64_t value() const {
        if (!finite_) throw std::logic_error("value() of an infeasible weight");
        return value_;
    }

    constexpr ExtWeight operator+(ExtWeight other) const {
        if (!finite_ || !other.finite_) return ExtWeight();
        return ExtWeight(value_ + other.value_);
    }
    constexpr ExtWeight& operator+=(ExtWeight other) { return *this = *this + other; }

    constexpr std::strong_ordering operator<=>(const ExtWeight& other) const {
        if (finite_ != other.finite_) return finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!finite_) return std::strong_ordering::equal;
        return value_ <=> other.value_;
    }
    constexpr bool operator==(const ExtWeight& other) const { return (*this <=> other) == 0; }

private:
    std::int64_t value_ = 0;
    bool finite_ = false;
};

constexpr ExtWeight min(ExtWeight a, ExtWeight b) { return b < a ? b : a; }

inline std::ostream& operator<<(std::ostream& os, ExtWeight w) {
    if (w.is_infeasible()) return os << "inf";
    return os << w.value();
}

}  // namespace r3d
