// Exact scalar arithmetic: the rationals and prime fields GF(p).
//
// Every computation in this library is exact; there is no floating point
// anywhere. A "field model" is a small value type that carries the field
// parameters (nothing for Q, the modulus for GF(p)) and performs arithmetic
// on its element type. Matrices, subspaces, algebras etc. are templated on
// the field model.

#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace covalg {

using Rational = boost::multiprecision::cpp_rational;

// Runtime description of a field, as it appears in serialized inputs.
struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::uint32_t characteristic = 0;  // prime p; 0 for the rationals

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class bad_input : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// GF(p). Elements are residues in [0, p).
class PrimeField {
  public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw bad_input("PrimeField: modulus " + std::to_string(p) + " is not prime");
    }

    std::uint32_t modulus() const { return p_; }
    FieldSpec spec() const { return {FieldSpec::Kind::prime_field, p_}; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }

    Elem add(Elem a, Elem b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t(a) * b % p_); }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: division by zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    Elem parse(const std::string& s) const;
    std::string to_string(Elem a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

  private:
    std::uint32_t p_;
};

// The rationals. Elements are reduced fractions (cpp_rational normalizes).
class RationalField {
  public:
    using Elem = Rational;

    FieldSpec spec() const { return {FieldSpec::Kind::rationals, 0}; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RationalField: division by zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }

    Elem from_int(long long v) const { return Elem(v); }

    Elem parse(const std::string& s) const;
    std::string to_string(const Elem& a) const { return a.str(); }

    friend bool operator==(const RationalField&, const RationalField&) = default;
};

template <class F>
concept FieldModel = std::regular<typename F::Elem> &&
    requires(const F& f, const typename F::Elem& a, const typename F::Elem& b, const std::string& s) {
        { f.zero() } -> std::same_as<typename F::Elem>;
        { f.one() } -> std::same_as<typename F::Elem>;
        { f.is_zero(a) } -> std::same_as<bool>;
        { f.add(a, b) } -> std::same_as<typename F::Elem>;
        { f.sub(a, b) } -> std::same_as<typename F::Elem>;
        { f.neg(a) } -> std::same_as<typename F::Elem>;
        { f.mul(a, b) } -> std::same_as<typename F::Elem>;
        { f.inv(a) } -> std::same_as<typename F::Elem>;
        { f.div(a, b) } -> std::same_as<typename F::Elem>;
        { f.from_int(0LL) } -> std::same_as<typename F::Elem>;
        { f.parse(s) } -> std::same_as<typename F::Elem>;
        { f.to_string(a) } -> std::same_as<std::string>;
        { f.spec() } -> std::same_as<FieldSpec>;
        { f == f } -> std::convertible_to<bool>;
    };

}  // namespace covalg
