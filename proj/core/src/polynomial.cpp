#include "psalg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace psalg {

BivariatePolynomial BivariatePolynomial::constant(const BigInt& c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(unsigned x_degree, unsigned y_degree, const BigInt& c) {
    BivariatePolynomial p;
    p.add_term(x_degree, y_degree, c);
    return p;
}

BigInt BivariatePolynomial::coefficient(unsigned x_degree, unsigned y_degree) const {
    auto it = terms_.find({x_degree, y_degree});
    return it == terms_.end() ? BigInt(0) : it->second;
}

unsigned BivariatePolynomial::x_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

unsigned BivariatePolynomial::y_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

void BivariatePolynomial::add_term(unsigned x_degree, unsigned y_degree, const BigInt& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace({x_degree, y_degree}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned k) const {
    BivariatePolynomial result = constant(1), base = *this;
    while (k) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k) base = base * base;
    }
    return result;
}

BigRational BivariatePolynomial::evaluate(const BigRational& x, const BigRational& y) const {
    BigRational sum = 0;
    for (const auto& [e, c] : terms_) {
        BigRational term = c;
        for (unsigned i = 0; i < e.first; ++i) term *= x;
        for (unsigned j = 0; j < e.second; ++j) term *= y;
        sum += term;
    }
    sum.canonicalize();
    return sum;
}

std::string BivariatePolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const bool bare = e.first == 0 && e.second == 0;
        if (mag != 1 || bare) out << mag.get_str();
        if (e.first) out << "x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second) out << "y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    return out.str();
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UnivariatePolynomial UnivariatePolynomial::monomial(std::size_t degree, const BigInt& c) {
    std::vector<BigInt> coeffs(degree + 1);
    coeffs[degree] = c;
    return UnivariatePolynomial(std::move(coeffs));
}

void UnivariatePolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::size_t UnivariatePolynomial::degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

BigInt UnivariatePolynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

std::size_t UnivariatePolynomial::low_degree() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (sgn(coeffs_[k]) != 0) return k;
    throw std::domain_error("UnivariatePolynomial::low_degree: zero polynomial");
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

UnivariatePolynomial& UnivariatePolynomial::operator-=(const UnivariatePolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UnivariatePolynomial(std::move(out));
}

UnivariatePolynomial UnivariatePolynomial::pow(std::size_t k) const {
    UnivariatePolynomial result = monomial(0), base = *this;
    while (k) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k) base = base * base;
    }
    return result;
}

BigRational UnivariatePolynomial::evaluate(const BigRational& y) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + BigRational(*it);
    acc.canonicalize();
    return acc;
}

HilbertSeries::HilbertSeries(std::vector<std::uint64_t> dims) : dims_(std::move(dims)) {
    while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
}

BigInt HilbertSeries::total() const {
    BigInt sum = 0;
    for (std::uint64_t d : dims_) sum += BigInt(static_cast<unsigned long>(d));
    return sum;
}

std::string HilbertSeries::to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < dims_.size(); ++k) out += (k ? ", " : "") + std::to_string(dims_[k]);
    return out + "]";
}

}  // namespace psalg
