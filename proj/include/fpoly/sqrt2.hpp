#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <sstream>
#include <string>

namespace fpoly {

using Int = boost::multiprecision::cpp_int;

/// Element a + b*sqrt(2) of the ring Z[sqrt(2)].
///
/// This is the coefficient domain for all edge weights and polynomials;
/// sqrt(2) enters only through the middle-level edges of the odd orthogonal
/// chips and must cancel out of every final result.
struct Sqrt2 {
    Int a{0};
    Int b{0};

    Sqrt2() = default;
    Sqrt2(Int ia, Int ib) : a(std::move(ia)), b(std::move(ib)) {}
    explicit Sqrt2(long v) : a(v), b(0) {}

    static Sqrt2 zero() { return Sqrt2{}; }
    static Sqrt2 one() { return Sqrt2{1, 0}; }
    static Sqrt2 sqrt2() { return Sqrt2{0, 1}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_one() const { return a == 1 && b == 0; }
    /// True iff the sqrt(2) part vanishes.
    bool is_integer() const { return b == 0; }

    friend bool operator==(const Sqrt2&, const Sqrt2&) = default;

    Sqrt2 operator-() const { return {-a, -b}; }

    friend Sqrt2 operator+(const Sqrt2& x, const Sqrt2& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend Sqrt2 operator-(const Sqrt2& x, const Sqrt2& y) {
        return {x.a - y.a, x.b - y.b};
    }
    // (a1 + b1*r)(a2 + b2*r) with r^2 = 2.
    friend Sqrt2 operator*(const Sqrt2& x, const Sqrt2& y) {
        return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    Sqrt2& operator+=(const Sqrt2& y) { return *this = *this + y; }
    Sqrt2& operator*=(const Sqrt2& y) { return *this = *this * y; }

    double to_double() const {
        return static_cast<double>(a) + static_cast<double>(b) * 1.4142135623730951;
    }

    /// "2", "sqrt2", "2*sqrt2", "1 + 1*sqrt2", ...
    std::string str() const {
        std::ostringstream os;
        if (b == 0) {
            os << a;
        } else if (a == 0) {
            if (b == -1)
                os << "-sqrt2";
            else if (b == 1)
                os << "sqrt2";
            else
                os << b << "*sqrt2";
        } else {
            os << a << (b < 0 ? " - " : " + ");
            Int ab = b < 0 ? Int(-b) : b;
            os << ab << "*sqrt2";
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Sqrt2& x) {
        return os << x.str();
    }
};

inline Sqrt2 coeff_mul(const Sqrt2& x, const Sqrt2& y) { return x * y; }

}  // namespace fpoly
