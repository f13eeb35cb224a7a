#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace ck {

using Int = mpz_class;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_domain : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct model_falsification : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inversion_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Z[1/k]: num / k^exp, with a fixed inverted integer k.
// Canonical form strips every removable factor of k; k = +-1 forces exp = 0.
class Coefficient {
  public:
    Coefficient() : num_(0), exp_(0), k_(1) {}
    Coefficient(Int n) : num_(std::move(n)), exp_(0), k_(1) {}
    Coefficient(long n) : num_(n), exp_(0), k_(1) {}
    Coefficient(Int n, unsigned e, long k) : num_(std::move(n)), exp_(e), k_(k) {
        if (k == 0) throw domain_error("Coefficient: k must be nonzero");
        canonicalize();
    }

    static Coefficient inverse_power(long k, unsigned e) { return Coefficient(1, e, k); }

    const Int& num() const { return num_; }
    unsigned exp() const { return exp_; }
    long localized_at() const { return k_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

    Coefficient operator-() const {
        Coefficient r(*this);
        r.num_ = -r.num_;
        return r;
    }
    Coefficient operator+(const Coefficient& o) const;
    Coefficient operator-(const Coefficient& o) const { return *this + (-o); }
    Coefficient operator*(const Coefficient& o) const;
    Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
    Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
    Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

    bool operator==(const Coefficient& o) const;
    bool operator!=(const Coefficient& o) const { return !(*this == o); }

    // Inverse of a unit +-k^e; anything else throws.
    Coefficient unit_inverse() const;

    // The underlying integer; throws if a genuine denominator remains.
    Int as_integer() const {
        if (exp_ != 0) throw domain_error("Coefficient: not an integer: " + str());
        return num_;
    }

    std::string str() const;

  private:
    void canonicalize();
    long common_k(const Coefficient& o) const;

    Int num_;
    unsigned exp_;  // denominator is k^exp
    long k_;
};

// Sparse Laurent polynomial, exponent -> coefficient, no stored zeros.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(Coefficient c) {
        if (!c.is_zero()) coeffs_[0] = std::move(c);
    }

    static LaurentPoly monomial(long e, Coefficient c = Coefficient(1)) {
        LaurentPoly p;
        if (!c.is_zero()) p.coeffs_[e] = std::move(c);
        return p;
    }

    const std::map<long, Coefficient>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long min_degree() const;
    long max_degree() const;
    Coefficient coeff(long e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? Coefficient() : it->second;
    }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Substitute u -> u^s (s nonzero).
    LaurentPoly compose_power(long s) const;

    // Exact division by (1 - u); throws if the division leaves a remainder.
    LaurentPoly divide_by_one_minus_u() const;

    std::string str() const;

  private:
    void set(long e, Coefficient c) {
        if (c.is_zero())
            coeffs_.erase(e);
        else
            coeffs_[e] = std::move(c);
    }
    std::map<long, Coefficient> coeffs_;
};

// t^k(u) = (1 - u^k)/(1 - u).  For k > 0 this is 1 + u + ... + u^{k-1};
// for k < 0 it is -(u^k + ... + u^{-1}).
LaurentPoly tk_polynomial(long k);

// The r of t^k(u) = k + (1-u) r(u).
LaurentPoly tk_remainder(long k);

}  // namespace ck
