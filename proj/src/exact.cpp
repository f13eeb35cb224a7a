#include "ckops/exact.hpp"

#include <sstream>

namespace ck {

void Coefficient::canonicalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (k_ == 1 || k_ == -1) {
        if (exp_ > 0 && k_ == -1 && (exp_ & 1)) num_ = -num_;
        exp_ = 0;
        return;
    }
    Int k(k_);
    while (exp_ > 0 && mpz_divisible_p(num_.get_mpz_t(), k.get_mpz_t())) {
        num_ /= k;
        --exp_;
    }
}

long Coefficient::common_k(const Coefficient& o) const {
    long a = k_, b = o.k_;
    if (a == b) return a;
    if (exp_ == 0 && (a == 1 || a == -1)) return b;
    if (o.exp_ == 0 && (b == 1 || b == -1)) return a;
    if (exp_ == 0) return b;
    if (o.exp_ == 0) return a;
    throw domain_error("Coefficient: mixed localizations 1/" + std::to_string(a) + " and 1/" +
                       std::to_string(b));
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
    long k = common_k(o);
    Int kk(k);
    unsigned e = std::max(exp_, o.exp_);
    Int a = num_, b = o.num_;
    for (unsigned i = exp_; i < e; ++i) a *= kk;
    for (unsigned i = o.exp_; i < e; ++i) b *= kk;
    return Coefficient(a + b, e, k);
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
    long k = common_k(o);
    return Coefficient(num_ * o.num_, exp_ + o.exp_, k);
}

bool Coefficient::operator==(const Coefficient& o) const {
    if (num_ == 0 && o.num_ == 0) return true;
    long k;
    try {
        k = common_k(o);
    } catch (const domain_error&) {
        return false;
    }
    Int kk(k);
    Int a = num_, b = o.num_;
    unsigned e = std::max(exp_, o.exp_);
    for (unsigned i = exp_; i < e; ++i) a *= kk;
    for (unsigned i = o.exp_; i < e; ++i) b *= kk;
    return a == b;
}

Coefficient Coefficient::unit_inverse() const {
    // units of Z[1/k] of the form +-k^e are the only ones we ever invert
    Int k(k_ == 1 || k_ == -1 ? 1 : k_);
    Int n = num_;
    if (k_ == 1 || k_ == -1) {
        if (num_ == 1) return Coefficient(1);
        if (num_ == -1) return Coefficient(-1);
        throw inversion_error("not a unit in Z: " + str());
    }
    int sign = 1;
    if (n < 0) {
        sign = -1;
        n = -n;
    }
    unsigned e = 0;
    Int kabs(k_ < 0 ? -k_ : k_);
    while (n > 1 && mpz_divisible_p(n.get_mpz_t(), kabs.get_mpz_t())) {
        n /= kabs;
        ++e;
    }
    if (n != 1) throw inversion_error("not a unit in Z[1/" + std::to_string(k_) + "]: " + str());
    // num = sign * |k|^e / k^exp; inverse = sign' * k^exp / |k|^e
    Int newnum(1);
    for (unsigned i = 0; i < exp_; ++i) newnum *= Int(k_);
    Coefficient r(sign * newnum, e, k_);
    if (k_ < 0 && (e & 1)) r.num_ = -r.num_;  // |k|^e vs k^e sign fixup
    // verify
    if (!((*this * r) == Coefficient(1))) throw inversion_error("unit inverse failed: " + str());
    return r;
}

std::string Coefficient::str() const {
    if (exp_ == 0) return num_.get_str();
    Int d(1);
    for (unsigned i = 0; i < exp_; ++i) d *= Int(k_);
    Int n = num_;
    if (d < 0) {
        d = -d;
        n = -n;
    }
    return n.get_str() + "/" + d.get_str();
}

long LaurentPoly::min_degree() const {
    if (coeffs_.empty()) throw domain_error("degree of zero polynomial");
    return coeffs_.begin()->first;
}

long LaurentPoly::max_degree() const {
    if (coeffs_.empty()) throw domain_error("degree of zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::compose_power(long s) const {
    if (s == 0) throw domain_error("compose_power: exponent must be nonzero");
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.set(e * s, c);
    return r;
}

LaurentPoly LaurentPoly::divide_by_one_minus_u() const {
    // (1 - u) q = p; peel from the bottom degree upward.
    LaurentPoly rem(*this), q;
    const long top = is_zero() ? 0 : max_degree();
    while (!rem.is_zero()) {
        long e = rem.min_degree();
        if (e >= top) throw domain_error("not divisible by (1 - u): " + str());
        Coefficient c = rem.coeff(e);
        q.set(e, c);
        rem.set(e, Coefficient());
        rem.set(e + 1, rem.coeff(e + 1) + c);
    }
    return q;
}

std::string LaurentPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (e != 0) os << "*u^" << e;
    }
    return os.str();
}

LaurentPoly tk_polynomial(long k) {
    if (k == 0) throw domain_error("t^k: k must be nonzero");
    LaurentPoly p;
    if (k > 0) {
        for (long e = 0; e < k; ++e) p = p + LaurentPoly::monomial(e);
    } else {
        for (long e = k; e <= -1; ++e) p = p - LaurentPoly::monomial(e);
    }
    return p;
}

LaurentPoly tk_remainder(long k) {
    LaurentPoly d = tk_polynomial(k) - LaurentPoly(Coefficient(k));
    return d.divide_by_one_minus_u();
}

}  // namespace ck
