#pragma once

// Exact arithmetic in the Eisenstein ring Z[d] (d = exp(2 pi i / 6), d^2 = d - 1)
// and the Gaussian ring Z[i], the signed-area Hermitian form on pairs, and
// canonical orbit representatives under units and SL(2,Z).

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "hyperlat/errors.hpp"

namespace hyperlat {

enum class Ring { Eisenstein, Gaussian };

namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

} // namespace checked

/// a + b*g where g is d (Eisenstein) or i (Gaussian). All operations are exact
/// and throw OverflowError instead of wrapping.
template <Ring R>
struct LatticeInt {
    std::int64_t a = 0;
    std::int64_t b = 0;

    static constexpr Ring ring = R;
    /// Number of units; also the number of grid directions at each vertex.
    static constexpr int unit_count = R == Ring::Eisenstein ? 6 : 4;

    constexpr auto operator<=>(const LatticeInt&) const = default;

    bool is_zero() const { return a == 0 && b == 0; }

    LatticeInt operator-() const { return {checked::neg(a), checked::neg(b)}; }
    LatticeInt operator+(const LatticeInt& o) const { return {checked::add(a, o.a), checked::add(b, o.b)}; }
    LatticeInt operator-(const LatticeInt& o) const { return {checked::sub(a, o.a), checked::sub(b, o.b)}; }
    LatticeInt operator*(const LatticeInt& o) const;
    LatticeInt scaled(std::int64_t k) const { return {checked::mul(a, k), checked::mul(b, k)}; }

    LatticeInt conj() const;
    std::int64_t norm() const;

    /// Twice the real part; an integer in both rings.
    std::int64_t twice_real() const;

    /// The k-th power of the generating unit (d or i), k taken modulo unit_count.
    static LatticeInt unit(int k);
    /// Exponent k with unit(k) == *this, or -1 if this is not a unit.
    int unit_exponent() const;
};

using EisensteinInt = LatticeInt<Ring::Eisenstein>;
using GaussianInt = LatticeInt<Ring::Gaussian>;

template <Ring R>
LatticeInt<R> ring_mul(const LatticeInt<R>& x, const LatticeInt<R>& y) { return x * y; }

template <Ring R>
std::int64_t ring_norm(const LatticeInt<R>& x) { return x.norm(); }

/// The unique associate u*x lying in the half-open sector [0, 2pi/unit_count).
/// Throws DomainError for x == 0.
template <Ring R>
LatticeInt<R> canonical_unit_rep(const LatticeInt<R>& x);

/// Same as canonical_unit_rep, also returning the exponent k with rep = unit(k) * x.
template <Ring R>
std::pair<LatticeInt<R>, int> canonical_unit_rep_with_witness(const LatticeInt<R>& x);

/// 2x2 integer matrix of determinant exactly 1.
class UnimodularMatrix {
public:
    UnimodularMatrix() = default;
    /// Throws DomainError unless a*d - b*c == 1.
    UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    static UnimodularMatrix identity() { return {}; }
    /// [[1,0],[1,1]]: (z1, z2) -> (z1, z1 + z2).
    static UnimodularMatrix t1() { return {1, 0, 1, 1}; }
    /// [[1,-1],[0,1]]: (z1, z2) -> (z1 - z2, z2).
    static UnimodularMatrix t2() { return {1, -1, 0, 1}; }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }

    UnimodularMatrix inverse() const { return {d_, checked::neg(b_), checked::neg(c_), a_}; }
    UnimodularMatrix operator*(const UnimodularMatrix& o) const;
    bool operator==(const UnimodularMatrix&) const = default;

    std::string to_string() const;

private:
    std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

/// A pair (z1, z2) read as the triangle with vertices 0, z1, z2.
template <Ring R>
struct LorentzPair {
    LatticeInt<R> z1;
    LatticeInt<R> z2;

    auto operator<=>(const LorentzPair&) const = default;

    LorentzPair scaled(std::int64_t k) const { return {z1.scaled(k), z2.scaled(k)}; }
    /// Both components lie in 2R, i.e. the pair belongs to 2R + 2R.
    bool in_doubled_lattice() const;
};

using EisPair = LorentzPair<Ring::Eisenstein>;
using GaussPair = LorentzPair<Ring::Gaussian>;

/// Exact value of the Hermitian form (i/4)(z1 conj(w2) - z2 conj(w1)), stored
/// as the ring element g with value = (i/4) * g.
template <Ring R>
struct FormValue {
    LatticeInt<R> g;

    bool operator==(const FormValue&) const = default;

    /// Complex conjugate of the value: conj((i/4) g) = (i/4) * (-conj(g)).
    FormValue conj() const { return {-g.conj()}; }
    bool is_real() const;
    /// Real part in quanta: 1/4 for Gaussian, sqrt(3)/4 for Eisenstein.
    /// Exact whenever is_real(); throws DomainError on a half-quantum.
    std::int64_t real_quanta() const;
};

template <Ring R>
FormValue<R> hermitian_form(const LorentzPair<R>& z, const LorentzPair<R>& w);

/// Signed area of the triangle (0, z1, z2) in quanta (see FormValue::real_quanta).
template <Ring R>
std::int64_t area_quanta(const LorentzPair<R>& z);

/// Unit squares (Gaussian) or unit equilateral triangles (Eisenstein) of
/// area form(z, z). Throws DomainError unless z lies in 2R + 2R.
template <Ring R>
std::int64_t hermitian_cell_count(const LorentzPair<R>& z);

template <Ring R>
bool is_positive(const LorentzPair<R>& z);

template <Ring R>
LorentzPair<R> unit_act(const LatticeInt<R>& u, const LorentzPair<R>& z);

template <Ring R>
LorentzPair<R> matrix_act(const UnimodularMatrix& m, const LorentzPair<R>& z);

template <Ring R>
struct ReducedPair {
    LorentzPair<R> pair;
    UnimodularMatrix matrix;
    int unit_exponent = 0; ///< pair == unit(unit_exponent) * (matrix * input)
};

/// Canonical representative of the orbit of a positive pair under units x SL(2,Z).
/// The shape tau = z2/z1 is moved into |Re tau| <= 1/2, |tau| >= 1 with
/// Re tau = -1/2 sent to +1/2 and, on |tau| = 1, Re tau >= 0; then z1 is
/// rotated into the unit sector. Throws DomainError for non-positive pairs.
template <Ring R>
ReducedPair<R> pair_reduce(const LorentzPair<R>& z);

// Text forms: Eisenstein "a+bd", Gaussian "a+bi", pairs "z1;z2". Whitespace is ignored.

template <Ring R>
LatticeInt<R> parse_lattice_int(std::string_view text);

template <Ring R>
LorentzPair<R> parse_pair(std::string_view text);

template <Ring R>
std::string to_string(const LatticeInt<R>& x);

template <Ring R>
std::string to_string(const LorentzPair<R>& z);

} // namespace hyperlat
