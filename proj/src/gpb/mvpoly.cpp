#include "gpb/mvpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gpb {

int total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0);
}

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw internal_error("mono_div: not divisible");
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (order == TermOrder::grevlex) {
        if (da != db) return da < db;
        // Ties: the monomial with the larger exponent on the lowest-priority
        // variable (smallest index) is the smaller one.
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
    // lex with x_n > ... > x_1
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MVPolynomial MVPolynomial::monomial(int nvars, const Monomial& m, const mpq_class& c,
                                    TermOrder order) {
    if (static_cast<int>(m.size()) != nvars)
        throw invalid_argument("monomial: exponent vector of wrong length");
    MVPolynomial p(nvars, order);
    p.add_term(m, c);
    return p;
}

MVPolynomial MVPolynomial::variable(int nvars, int i, TermOrder order) {
    if (i < 1 || i > nvars) throw invalid_argument("variable index out of range");
    Monomial m(nvars, 0);
    m[i - 1] = 1;
    return monomial(nvars, m, 1, order);
}

const Monomial& MVPolynomial::leading_monomial() const {
    if (terms_.empty()) throw internal_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const mpq_class& MVPolynomial::leading_coeff() const {
    if (terms_.empty()) throw internal_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

int MVPolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

void MVPolynomial::add_term(const Monomial& m, const mpq_class& c) {
    if (static_cast<int>(m.size()) != nvars_)
        throw invalid_argument("add_term: exponent vector of wrong length");
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MVPolynomial& MVPolynomial::operator+=(const MVPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MVPolynomial& MVPolynomial::operator-=(const MVPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MVPolynomial MVPolynomial::operator+(const MVPolynomial& o) const {
    MVPolynomial r = *this;
    r += o;
    return r;
}

MVPolynomial MVPolynomial::operator-(const MVPolynomial& o) const {
    MVPolynomial r = *this;
    r -= o;
    return r;
}

MVPolynomial MVPolynomial::operator*(const MVPolynomial& o) const {
    MVPolynomial r(nvars_, order());
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
    return r;
}

MVPolynomial MVPolynomial::scaled(const mpq_class& c) const {
    MVPolynomial r(nvars_, order());
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

MVPolynomial MVPolynomial::times_term(const Monomial& m, const mpq_class& c) const {
    MVPolynomial r(nvars_, order());
    if (c == 0) return r;
    for (const auto& [mm, coeff] : terms_) r.terms_.emplace(mono_mul(mm, m), coeff * c);
    return r;
}

MVPolynomial MVPolynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading_coeff());
}

MVPolynomial MVPolynomial::permuted_variables(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != nvars_)
        throw invalid_argument("permuted_variables: wrong length");
    MVPolynomial r(nvars_, order());
    for (const auto& [m, c] : terms_) {
        Monomial moved(nvars_, 0);
        for (int i = 0; i < nvars_; ++i) moved[sigma[i] - 1] = m[i];
        r.add_term(moved, c);
    }
    return r;
}

bool MVPolynomial::operator==(const MVPolynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end() || it->second != c) return false;
    }
    return true;
}

std::string MVPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        mpq_class a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty())
            os << a.get_str();
        else if (a == 1)
            os << vars;
        else
            os << a.get_str() << "*" << vars;
    }
    return os.str();
}

MVPolynomial elementary_symmetric(int nvars, int d, const std::vector<int>& vars,
                                  TermOrder order) {
    MVPolynomial r(nvars, order);
    if (d < 0 || d > static_cast<int>(vars.size())) return r;  // zero
    if (d == 0) {
        r.add_term(Monomial(nvars, 0), 1);
        return r;
    }
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(pick.size()) == d) {
            Monomial m(nvars, 0);
            for (int v : pick) m[v - 1] = 1;
            r.add_term(m, 1);
            return;
        }
        for (std::size_t i = start; i < vars.size(); ++i) {
            pick.push_back(vars[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return r;
}

}  // namespace gpb
