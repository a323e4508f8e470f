#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arimat/numbers.hpp"

namespace arimat {

// Coefficients ascending by degree, no trailing zeros; zero polynomial is {}.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Int> coeffs);
    static UnivariatePoly constant(Int c);
    static UnivariatePoly monomial(int k, Int c = Int(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Int coeff(int k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval_int(const Int& x) const;
    Int eval_one() const; // sum of coefficients

    friend UnivariatePoly operator+(const UnivariatePoly&, const UnivariatePoly&);
    friend UnivariatePoly operator-(const UnivariatePoly&, const UnivariatePoly&);
    friend UnivariatePoly operator*(const UnivariatePoly&, const UnivariatePoly&);
    UnivariatePoly scaled(const Int& s) const;
    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

    // exact division by a monic divisor; remainder returned alongside
    static std::pair<UnivariatePoly, UnivariatePoly> divmod_monic(const UnivariatePoly& num,
                                                                  const UnivariatePoly& den);

    // "1 + t + 2*t^2", ascending powers
    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Int> c_;
};

// c_[0] is the coefficient of t^min_deg; trimmed at both ends; zero is {0, {}}.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int min_deg, std::vector<Int> coeffs);
    static LaurentPoly from_poly(const UnivariatePoly& p);
    static LaurentPoly monomial(int k, Int c = Int(1));
    static LaurentPoly constant(Int c);

    bool is_zero() const { return c_.empty(); }
    int min_degree() const { return min_; }
    int max_degree() const { return min_ + static_cast<int>(c_.size()) - 1; }
    Int coeff(int k) const;

    friend LaurentPoly operator+(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly operator-(const LaurentPoly&, const LaurentPoly&);
    friend LaurentPoly operator*(const LaurentPoly&, const LaurentPoly&);
    LaurentPoly pow(unsigned e) const;
    LaurentPoly scaled(const Int& s) const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // requires min_degree() >= 0
    UnivariatePoly to_poly() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();
    int min_ = 0;
    std::vector<Int> c_;
};

// Sparse polynomial in x, y; only nonzero coefficients stored.
class BivariatePoly {
public:
    BivariatePoly() = default;
    static BivariatePoly constant(Int c);
    static BivariatePoly monomial(int i, int j, Int c = Int(1));
    // (x-1)^a * (y-1)^b expanded
    static BivariatePoly shifted_power(int a, int b);

    bool is_zero() const { return terms_.empty(); }
    Int coeff(int i, int j) const;
    void add_term(int i, int j, const Int& c);
    const std::map<std::pair<int, int>, Int>& terms() const { return terms_; }

    friend BivariatePoly operator+(const BivariatePoly&, const BivariatePoly&);
    friend BivariatePoly operator-(const BivariatePoly&, const BivariatePoly&);
    friend BivariatePoly operator*(const BivariatePoly&, const BivariatePoly&);
    BivariatePoly scaled(const Int& s) const;
    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

    BivariatePoly swap_xy() const;
    UnivariatePoly at_x1() const; // substitute x = 1, result in y
    UnivariatePoly at_y1() const; // substitute y = 1, result in x

    // graded-lex, total degree descending; y_primary flips the tie-break so
    // dual polynomials print with y leading (e.g. "y^2 + y + x + 1")
    std::string to_string(bool y_primary = false) const;

private:
    std::map<std::pair<int, int>, Int> terms_;
};

LaurentPoly substitute_xy(const BivariatePoly& p, const LaurentPoly& xs, const LaurentPoly& ys);

// numerator / (1 - t)^pole_order, canonical: pole_order > 0 implies
// numerator(1) != 0; zero numerator implies pole_order = 0.
struct HilbertSeries {
    UnivariatePoly numerator;
    int pole_order = 0;

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
    std::vector<Int> expand(std::size_t n) const; // first n power-series coefficients
    std::string to_string() const;                // "(1 + t^2) / (1 - t)^2"
};

// Cancels (1 - t) factors; input_error if negative powers of t survive.
HilbertSeries normalize_series(const LaurentPoly& numerator, int pole_order);

// First n coefficients of num / (1-t)^pole as a power series; input_error on
// negative powers in num.
std::vector<Int> expand_series(const LaurentPoly& num, int pole, std::size_t n);

} // namespace arimat
