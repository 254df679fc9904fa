#pragma once

#include <string>
#include <vector>

#include "gpb/common.hpp"

namespace gpb {

// Polynomial in one variable q with exact integer coefficients; trailing
// zeros are trimmed so equality is structural.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) {
        trim();
    }

    static QPolynomial one() { return QPolynomial({1}); }
    static QPolynomial q_power(int d) {
        std::vector<long long> v(d + 1, 0);
        v[d] = 1;
        return QPolynomial(std::move(v));
    }
    static QPolynomial q_factorial(int n) {
        QPolynomial r = one();
        for (int k = 2; k <= n; ++k) {
            std::vector<long long> bracket(k, 1);  // 1 + q + ... + q^{k-1}
            r = r * QPolynomial(std::move(bracket));
        }
        return r;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    long long coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
    }
    const std::vector<long long>& coeffs() const { return c_; }

    void add_term(int deg, long long coeff) {
        if (deg < 0) throw invalid_argument("negative q-degree");
        if (static_cast<int>(c_.size()) <= deg) c_.resize(deg + 1, 0);
        c_[deg] += coeff;
        trim();
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    QPolynomial operator+(const QPolynomial& o) const {
        QPolynomial r = *this;
        r += o;
        return r;
    }
    QPolynomial operator*(const QPolynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<long long> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return QPolynomial(std::move(r));
    }
    QPolynomial operator*(long long s) const {
        QPolynomial r = *this;
        for (auto& c : r.c_) c *= s;
        r.trim();
        return r;
    }

    long long eval_one() const {
        long long s = 0;
        for (long long c : c_) s += c;
        return s;
    }

    bool operator==(const QPolynomial& o) const { return c_ == o.c_; }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = 0; k <= degree(); ++k) {
            if (c_[k] == 0) continue;
            if (!s.empty()) s += " + ";
            if (k == 0)
                s += std::to_string(c_[k]);
            else {
                if (c_[k] != 1) s += std::to_string(c_[k]) + "*";
                s += (k == 1) ? "q" : "q^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<long long> c_;
};

}  // namespace gpb
