#ifndef PSALG_POLYNOMIAL_HPP
#define PSALG_POLYNOMIAL_HPP

#include "psalg/exactalg.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace psalg {

/// Integer polynomial in x and y. No zero coefficients are stored.
class BivariatePolynomial {
public:
    using Exponents = std::pair<unsigned, unsigned>;  // (x degree, y degree)
    using Terms = std::map<Exponents, BigInt>;

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const BigInt& c);
    static BivariatePolynomial monomial(unsigned x_degree, unsigned y_degree, const BigInt& c = 1);
    static BivariatePolynomial x() { return monomial(1, 0); }
    static BivariatePolynomial y() { return monomial(0, 1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coefficient(unsigned x_degree, unsigned y_degree) const;
    unsigned x_degree() const;
    unsigned y_degree() const;

    void add_term(unsigned x_degree, unsigned y_degree, const BigInt& c);

    BivariatePolynomial& operator+=(const BivariatePolynomial& other);
    BivariatePolynomial& operator-=(const BivariatePolynomial& other);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    BivariatePolynomial pow(unsigned k) const;

    BigRational evaluate(const BigRational& x, const BigRational& y) const;

    /// Human-readable form, highest x degree first, e.g. "x^2 + x + y".
    std::string to_string() const;

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

private:
    Terms terms_;
};

/// Integer polynomial in one variable; coefficient k multiplies y^k.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<BigInt> coeffs);

    static UnivariatePolynomial monomial(std::size_t degree, const BigInt& c = 1);

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t degree() const;
    BigInt coefficient(std::size_t k) const;

    /// Index of the lowest nonzero coefficient; requires a nonzero polynomial.
    std::size_t low_degree() const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& other);
    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    UnivariatePolynomial pow(std::size_t k) const;

    BigRational evaluate(const BigRational& y) const;

    friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Dimensions of graded components; index k is the degree-k dimension.
/// Trailing zeros are trimmed.
class HilbertSeries {
public:
    HilbertSeries() = default;
    explicit HilbertSeries(std::vector<std::uint64_t> dims);

    const std::vector<std::uint64_t>& dims() const noexcept { return dims_; }
    std::size_t size() const noexcept { return dims_.size(); }
    std::uint64_t operator[](std::size_t k) const { return k < dims_.size() ? dims_[k] : 0; }
    /// Sum of all dimensions.
    BigInt total() const;

    std::string to_string() const;

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

private:
    std::vector<std::uint64_t> dims_;
};

}  // namespace psalg

#endif  // PSALG_POLYNOMIAL_HPP
