#pragma once

#include "hpade/number.hpp"

#include <initializer_list>
#include <type_traits>
#include <vector>

namespace hpade {

template <class T>
class Poly;

template <class T>
struct is_poly : std::false_type {};
template <class T>
struct is_poly<Poly<T>> : std::true_type {};

template <class T>
bool ring_is_zero(const T& x) {
    if constexpr (is_poly<T>::value)
        return x.is_zero();
    else
        return x == 0;
}

// Exact coefficient division: plain division in a field, recursive exact
// polynomial division otherwise.
template <class T>
T ring_div_exact(const T& a, const T& b) {
    if constexpr (is_poly<T>::value)
        return a.divide_exact(b);
    else
        return a / b;
}

// Dense univariate polynomial over an exact ring T.  coeff(k) is the
// coefficient of X^k; the representation is normalized (no trailing zeros).
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

    static Poly zero() { return Poly(); }
    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly identity() {
        if constexpr (is_poly<T>::value)
            return constant(T::constant_one());
        else
            return constant(T(1));
    }
    static Poly variable() { return identity().shifted(1); }
    static Poly constant_one() { return identity(); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t k) const {
        if (k < c_.size()) return c_[k];
        if constexpr (is_poly<T>::value)
            return T();
        else
            return T(0);
    }
    const T& leading() const { return c_.back(); }

    // multiply by X^n
    Poly shifted(std::size_t n) const {
        if (is_zero()) return *this;
        std::vector<T> out(c_.size() + n);
        for (std::size_t i = 0; i < n; ++i) out[i] = zero_coeff();
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + n] = c_[i];
        return Poly(std::move(out));
    }

    Poly operator-() const {
        std::vector<T> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
        return Poly(std::move(out));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> out(std::max(a.c_.size(), b.c_.size()), zero_coeff());
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, zero_coeff());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }

    Poly scaled(const T& s) const {
        if (ring_is_zero(s)) return Poly();
        std::vector<T> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
        return Poly(std::move(out));
    }

    // scale by a Rational even when T is itself a polynomial
    Poly scaled_q(const Rational& s) const {
        if (s == 0) return Poly();
        std::vector<T> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = scale_coeff(c_[i], s);
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> out(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            if constexpr (is_poly<T>::value)
                out[i - 1] = c_[i].scaled_q(Rational(static_cast<long>(i)));
            else
                out[i - 1] = c_[i] * T(static_cast<long>(i));
        }
        return Poly(std::move(out));
    }

    // Horner evaluation; U must absorb T under U = U*x + T.
    template <class U>
    U eval(const U& x) const {
        U acc = U(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
        return acc;
    }
    Rational eval_rational(const Rational& x) const
        requires std::is_same_v<T, Rational>
    {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Apply f to every coefficient (e.g. substitute a value into inner polys).
    template <class F>
    auto map_coeffs(F&& f) const {
        using U = std::decay_t<decltype(f(c_[0]))>;
        std::vector<U> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f(c_[i]);
        return Poly<U>(std::move(out));
    }

    // Exact division; throws if the remainder is nonzero.
    Poly divide_exact(const Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
        if (is_zero()) return Poly();
        if (degree() < d.degree())
            throw std::logic_error("divide_exact: inexact polynomial division");
        std::vector<T> rem = c_;
        std::vector<T> quot(c_.size() - d.c_.size() + 1, zero_coeff());
        for (std::size_t qi = quot.size(); qi-- > 0;) {
            const T& top = rem[qi + d.c_.size() - 1];
            if (ring_is_zero(top)) continue;
            T q = ring_div_exact(top, d.leading());
            quot[qi] = q;
            for (std::size_t k = 0; k < d.c_.size(); ++k)
                rem[qi + k] = rem[qi + k] - q * d.c_[k];
        }
        for (const T& r : rem)
            if (!ring_is_zero(r))
                throw std::logic_error("divide_exact: inexact polynomial division");
        return Poly(std::move(quot));
    }

private:
    static T zero_coeff() {
        if constexpr (is_poly<T>::value)
            return T();
        else
            return T(0);
    }
    static T scale_coeff(const T& v, const Rational& s) {
        if constexpr (is_poly<T>::value)
            return v.scaled_q(s);
        else
            return T(v * s);
    }
    void normalize() {
        while (!c_.empty() && ring_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<T> c_;
};

// Polynomial in the energy variable E over exact rationals.
using EPoly = Poly<Rational>;
// Polynomial in the width parameter a (used as a coefficient ring when the
// series is generated with symbolic a).
using APoly = Poly<Rational>;
using BiPoly = Poly<APoly>;  // outer variable E, inner variable a
using IPoly = Poly<Int>;

}  // namespace hpade
