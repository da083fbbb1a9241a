#pragma once

#include "spadic/types.hpp"

#include <string>
#include <vector>

namespace spadic {

/// Truncated power series (or polynomial) with exact rational coefficients.
/// Coefficient i multiplies t^i; everything at or beyond truncation_order()
/// is unknown and never stored.
class SeriesPoly {
public:
    SeriesPoly() = default;
    explicit SeriesPoly(std::size_t order);
    explicit SeriesPoly(std::vector<Rational> coefficients);

    static SeriesPoly one(std::size_t order);

    std::size_t truncation_order() const noexcept { return coeffs_.size(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }

    /// Index of the highest nonzero coefficient; -1 for the zero series.
    long degree() const noexcept;

    /// Product truncated to the smaller of the two orders.
    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);

    SeriesPoly pow(unsigned long e) const;

    /// 1/f by the reciprocal recurrence; requires a nonzero constant term.
    SeriesPoly reciprocal() const;

    friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

    std::string to_string(char var = 'x') const;

private:
    std::vector<Rational> coeffs_;
};

}  // namespace spadic
