#include "arimat/poly.hpp"

#include <algorithm>
#include <sstream>

#include "arimat/error.hpp"

namespace arimat {

namespace {

// Shared term renderer: coefficient then '*'-joined variable powers.
// first term prints its own sign, later terms get " + " / " - ".
void append_term(std::ostringstream& os, bool& first, const Int& coeff, const std::string& mono) {
    Int c = coeff;
    if (first) {
        if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
    } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
    }
    if (mono.empty()) {
        os << c;
        return;
    }
    if (c != 1) os << c << "*";
    os << mono;
}

std::string power_string(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    std::ostringstream os;
    os << var << "^" << e;
    return os.str();
}

} // namespace

UnivariatePoly::UnivariatePoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

void UnivariatePoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePoly UnivariatePoly::constant(Int c) { return UnivariatePoly({std::move(c)}); }

UnivariatePoly UnivariatePoly::monomial(int k, Int c) {
    std::vector<Int> v(k + 1);
    v[k] = std::move(c);
    return UnivariatePoly(std::move(v));
}

Int UnivariatePoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

Int UnivariatePoly::eval_int(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int UnivariatePoly::eval_one() const {
    Int acc = 0;
    for (const Int& c : c_) acc += c;
    return acc;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    return a + b.scaled(Int(-1));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::scaled(const Int& s) const {
    std::vector<Int> c = c_;
    for (Int& x : c) x *= s;
    return UnivariatePoly(std::move(c));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod_monic(const UnivariatePoly& num,
                                                                       const UnivariatePoly& den) {
    if (den.is_zero() || den.c_.back() != 1)
        throw std::logic_error("divmod_monic: divisor must be monic");
    std::vector<Int> rem = num.c_;
    const int dn = den.degree();
    if (num.degree() < dn) return {UnivariatePoly(), num};
    std::vector<Int> quo(num.degree() - dn + 1);
    for (int k = num.degree() - dn; k >= 0; --k) {
        Int q = rem[k + dn];
        if (q == 0) continue;
        quo[k] = q;
        for (int j = 0; j <= dn; ++j) rem[k + j] -= q * den.c_[j];
    }
    return {UnivariatePoly(std::move(quo)), UnivariatePoly(std::move(rem))};
}

std::string UnivariatePoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        append_term(os, first, c_[k], power_string(var, static_cast<int>(k)));
    }
    return os.str();
}

LaurentPoly::LaurentPoly(int min_deg, std::vector<Int> coeffs)
    : min_(min_deg), c_(std::move(coeffs)) {
    normalize();
}

void LaurentPoly::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        min_ = 0;
        return;
    }
    c_.erase(c_.begin(), c_.begin() + lead);
    min_ += static_cast<int>(lead);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

LaurentPoly LaurentPoly::from_poly(const UnivariatePoly& p) { return LaurentPoly(0, p.coeffs()); }

LaurentPoly LaurentPoly::monomial(int k, Int c) { return LaurentPoly(k, {std::move(c)}); }

LaurentPoly LaurentPoly::constant(Int c) { return LaurentPoly(0, {std::move(c)}); }

Int LaurentPoly::coeff(int k) const {
    int i = k - min_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.min_, b.min_);
    int hi = std::max(a.max_degree(), b.max_degree());
    std::vector<Int> c(hi - lo + 1);
    for (int k = lo; k <= hi; ++k) c[k - lo] = a.coeff(k) + b.coeff(k);
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + b.scaled(Int(-1));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentPoly(a.min_ + b.min_, std::move(c));
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly acc = LaurentPoly::constant(Int(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

LaurentPoly LaurentPoly::scaled(const Int& s) const {
    std::vector<Int> c = c_;
    for (Int& x : c) x *= s;
    return LaurentPoly(min_, std::move(c));
}

UnivariatePoly LaurentPoly::to_poly() const {
    if (is_zero()) return {};
    if (min_ < 0) throw input_error("laurent polynomial has negative powers");
    std::vector<Int> c(min_ + c_.size());
    std::copy(c_.begin(), c_.end(), c.begin() + min_);
    return UnivariatePoly(std::move(c));
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        int e = min_ + static_cast<int>(i);
        std::string mono;
        if (e != 0) {
            std::ostringstream ms;
            ms << var;
            if (e != 1) ms << "^" << e;
            mono = ms.str();
        }
        append_term(os, first, c_[i], mono);
    }
    return os.str();
}

BivariatePoly BivariatePoly::constant(Int c) { return monomial(0, 0, std::move(c)); }

BivariatePoly BivariatePoly::monomial(int i, int j, Int c) {
    BivariatePoly p;
    p.add_term(i, j, c);
    return p;
}

BivariatePoly BivariatePoly::shifted_power(int a, int b) {
    // binomial expansion of (x-1)^a (y-1)^b
    std::vector<Int> xa(a + 1), yb(b + 1);
    xa[0] = 1;
    for (int i = 1; i <= a; ++i) xa[i] = xa[i - 1] * Int(a - i + 1) / Int(i);
    yb[0] = 1;
    for (int j = 1; j <= b; ++j) yb[j] = yb[j - 1] * Int(b - j + 1) / Int(j);
    BivariatePoly p;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            Int c = xa[i] * yb[j];
            if ((a - i + b - j) % 2 != 0) c = -c;
            p.add_term(i, j, c);
        }
    return p;
}

Int BivariatePoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Int(0) : it->second;
}

void BivariatePoly::add_term(int i, int j, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out = a;
    for (const auto& [ij, c] : b.terms_) out.add_term(ij.first, ij.second, c);
    return out;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
    return a + b.scaled(Int(-1));
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ij, c] : a.terms_)
        for (const auto& [kl, d] : b.terms_)
            out.add_term(ij.first + kl.first, ij.second + kl.second, c * d);
    return out;
}

BivariatePoly BivariatePoly::scaled(const Int& s) const {
    BivariatePoly out;
    if (s == 0) return out;
    for (const auto& [ij, c] : terms_) out.terms_[ij] = c * s;
    return out;
}

BivariatePoly BivariatePoly::swap_xy() const {
    BivariatePoly out;
    for (const auto& [ij, c] : terms_) out.terms_[{ij.second, ij.first}] = c;
    return out;
}

UnivariatePoly BivariatePoly::at_x1() const {
    std::map<int, Int> by_j;
    for (const auto& [ij, c] : terms_) by_j[ij.second] += c;
    int deg = by_j.empty() ? 0 : by_j.rbegin()->first;
    std::vector<Int> coeffs(deg + 1);
    for (const auto& [j, c] : by_j) coeffs[j] = c;
    return UnivariatePoly(std::move(coeffs));
}

UnivariatePoly BivariatePoly::at_y1() const { return swap_xy().at_x1(); }

std::string BivariatePoly::to_string(bool y_primary) const {
    if (is_zero()) return "0";
    std::vector<std::pair<std::pair<int, int>, Int>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        int ka = y_primary ? a.first.second : a.first.first;
        int kb = y_primary ? b.first.second : b.first.first;
        return ka > kb;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : ts) {
        std::string mono = power_string("x", ij.first);
        std::string ymono = power_string("y", ij.second);
        if (!mono.empty() && !ymono.empty())
            mono += "*" + ymono;
        else if (!ymono.empty())
            mono = ymono;
        append_term(os, first, c, mono);
    }
    return os.str();
}

LaurentPoly substitute_xy(const BivariatePoly& p, const LaurentPoly& xs, const LaurentPoly& ys) {
    LaurentPoly out;
    for (const auto& [ij, c] : p.terms()) {
        LaurentPoly term = xs.pow(ij.first) * ys.pow(ij.second);
        out = out + term.scaled(c);
    }
    return out;
}

std::vector<Int> HilbertSeries::expand(std::size_t n) const {
    return expand_series(LaurentPoly::from_poly(numerator), pole_order, n);
}

std::string HilbertSeries::to_string() const {
    if (pole_order == 0) return numerator.to_string();
    std::ostringstream os;
    os << "(" << numerator.to_string() << ") / (1 - t)^" << pole_order;
    return os.str();
}

HilbertSeries normalize_series(const LaurentPoly& numerator, int pole_order) {
    if (numerator.is_zero()) return {};
    LaurentPoly num = numerator;
    const LaurentPoly one_minus_t(0, {Int(1), Int(-1)});
    while (pole_order > 0) {
        // (1-t) divides iff the value at t=1 vanishes
        Int at_one = 0;
        for (int k = num.min_degree(); k <= num.max_degree(); ++k) at_one += num.coeff(k);
        if (at_one != 0) break;
        // synthetic division by (1 - t) from the low end
        std::vector<Int> q;
        Int carry = 0;
        for (int k = num.min_degree(); k < num.max_degree(); ++k) {
            carry += num.coeff(k);
            q.push_back(carry);
        }
        num = LaurentPoly(num.min_degree(), std::move(q));
        --pole_order;
    }
    if (num.min_degree() < 0)
        throw input_error("series has uncancelled negative powers of t");
    return {num.to_poly(), pole_order};
}

std::vector<Int> expand_series(const LaurentPoly& num, int pole, std::size_t n) {
    std::vector<Int> out(n, Int(0));
    if (num.is_zero()) return out;
    if (num.min_degree() < 0) throw input_error("series has negative powers of t");
    if (pole == 0) {
        for (std::size_t k = 0; k < n; ++k) out[k] = num.coeff(static_cast<int>(k));
        return out;
    }
    // 1/(1-t)^p has coefficients C(k+p-1, p-1)
    std::vector<Int> inv(n);
    for (std::size_t k = 0; k < n; ++k) {
        Int c = 1;
        for (int i = 1; i < pole; ++i) c = c * Int(k + i) / Int(i);
        inv[k] = c;
    }
    for (int d = num.min_degree(); d <= num.max_degree(); ++d) {
        if (num.coeff(d) == 0) continue;
        for (std::size_t k = d; k < n; ++k) out[k] += num.coeff(d) * inv[k - d];
    }
    return out;
}

} // namespace arimat
