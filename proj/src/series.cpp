#include "spadic/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spadic {

SeriesPoly::SeriesPoly(std::size_t order) : coeffs_(order) {}

SeriesPoly::SeriesPoly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c.canonicalize();
}

SeriesPoly SeriesPoly::one(std::size_t order) {
    SeriesPoly s(order);
    if (order > 0) s.coeffs_[0] = 1;
    return s;
}

long SeriesPoly::degree() const noexcept {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (sgn(coeffs_[i]) != 0) return static_cast<long>(i);
    }
    return -1;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
    const std::size_t order = std::min(a.truncation_order(), b.truncation_order());
    SeriesPoly out(order);
    for (std::size_t i = 0; i < order; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; i + j < order; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

SeriesPoly SeriesPoly::pow(unsigned long e) const {
    SeriesPoly result = one(truncation_order());
    SeriesPoly base = *this;
    while (e != 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e != 0) base = base * base;
    }
    return result;
}

SeriesPoly SeriesPoly::reciprocal() const {
    if (coeffs_.empty()) return {};
    if (sgn(coeffs_[0]) == 0) {
        throw std::domain_error("reciprocal of a series with zero constant term");
    }
    const std::size_t order = coeffs_.size();
    SeriesPoly inv(order);
    const Rational c0_inv = 1 / coeffs_[0];
    inv.coeffs_[0] = c0_inv;
    for (std::size_t n = 1; n < order; ++n) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= n; ++i) acc += coeffs_[i] * inv.coeffs_[n - i];
        inv.coeffs_[n] = -acc * c0_inv;
    }
    return inv;
}

std::string SeriesPoly::to_string(char var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = mag == 1;
        if (!unit || i == 0) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace spadic
