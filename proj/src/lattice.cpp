#include "hyperlat/lattice.hpp"

#include <charconv>
#include <regex>

namespace hyperlat {

namespace {

std::int64_t floor_div(std::int64_t num, std::int64_t den)
{
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

constexpr std::array<std::array<std::int64_t, 2>, 6> kEisUnits{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
constexpr std::array<std::array<std::int64_t, 2>, 4> kGaussUnits{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

std::int64_t parse_int(std::string_view digits, std::string_view whole)
{
    std::int64_t v = 0;
    std::string_view s = digits;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("integer out of range in lattice point '" + std::string(whole) + "'");
    return v;
}

std::string strip_spaces(std::string_view text)
{
    std::string out;
    out.reserve(text.size());
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
    return out;
}

} // namespace

template <Ring R>
LatticeInt<R> LatticeInt<R>::operator*(const LatticeInt& o) const
{
    using namespace checked;
    if constexpr (R == Ring::Eisenstein) {
        // d^2 = d - 1
        const std::int64_t bd = mul(b, o.b);
        return {sub(mul(a, o.a), bd), add(add(mul(a, o.b), mul(b, o.a)), bd)};
    } else {
        return {sub(mul(a, o.a), mul(b, o.b)), add(mul(a, o.b), mul(b, o.a))};
    }
}

template <Ring R>
LatticeInt<R> LatticeInt<R>::conj() const
{
    if constexpr (R == Ring::Eisenstein) {
        // conj(d) = 1 - d
        return {checked::add(a, b), checked::neg(b)};
    } else {
        return {a, checked::neg(b)};
    }
}

template <Ring R>
std::int64_t LatticeInt<R>::norm() const
{
    using namespace checked;
    if constexpr (R == Ring::Eisenstein)
        return add(add(mul(a, a), mul(a, b)), mul(b, b));
    else
        return add(mul(a, a), mul(b, b));
}

template <Ring R>
std::int64_t LatticeInt<R>::twice_real() const
{
    if constexpr (R == Ring::Eisenstein)
        return checked::add(checked::mul(2, a), b);
    else
        return checked::mul(2, a);
}

template <Ring R>
LatticeInt<R> LatticeInt<R>::unit(int k)
{
    k %= unit_count;
    if (k < 0) k += unit_count;
    if constexpr (R == Ring::Eisenstein)
        return {kEisUnits[k][0], kEisUnits[k][1]};
    else
        return {kGaussUnits[k][0], kGaussUnits[k][1]};
}

template <Ring R>
int LatticeInt<R>::unit_exponent() const
{
    for (int k = 0; k < unit_count; ++k)
        if (unit(k) == *this) return k;
    return -1;
}

template <Ring R>
std::pair<LatticeInt<R>, int> canonical_unit_rep_with_witness(const LatticeInt<R>& x)
{
    if (x.is_zero()) throw DomainError("canonical_unit_rep: zero has no unit orbit representative");
    for (int k = 0; k < LatticeInt<R>::unit_count; ++k) {
        const auto y = LatticeInt<R>::unit(k) * x;
        // a > 0, b >= 0 is exactly the sector [0, 2pi/unit_count) in both bases.
        if (y.a > 0 && y.b >= 0) return {y, k};
    }
    throw std::logic_error("canonical_unit_rep: no associate in the sector");
}

template <Ring R>
LatticeInt<R> canonical_unit_rep(const LatticeInt<R>& x)
{
    return canonical_unit_rep_with_witness(x).first;
}

UnimodularMatrix::UnimodularMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d)
{
    if (checked::sub(checked::mul(a, d), checked::mul(b, c)) != 1)
        throw DomainError("matrix determinant is not 1");
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& o) const
{
    using namespace checked;
    return {add(mul(a_, o.a_), mul(b_, o.c_)), add(mul(a_, o.b_), mul(b_, o.d_)),
            add(mul(c_, o.a_), mul(d_, o.c_)), add(mul(c_, o.b_), mul(d_, o.d_))};
}

std::string UnimodularMatrix::to_string() const
{
    return "[[" + std::to_string(a_) + "," + std::to_string(b_) + "],[" + std::to_string(c_) + "," +
           std::to_string(d_) + "]]";
}

template <Ring R>
bool LorentzPair<R>::in_doubled_lattice() const
{
    return z1.a % 2 == 0 && z1.b % 2 == 0 && z2.a % 2 == 0 && z2.b % 2 == 0;
}

template <Ring R>
bool FormValue<R>::is_real() const
{
    if constexpr (R == Ring::Eisenstein)
        return checked::add(checked::mul(2, g.a), g.b) == 0;
    else
        return g.a == 0;
}

template <Ring R>
std::int64_t FormValue<R>::real_quanta() const
{
    // value = (i/4) g. Gaussian: Re = -b/4. Eisenstein: Re = -b sqrt(3)/8.
    if constexpr (R == Ring::Eisenstein) {
        if (g.b % 2 != 0) throw DomainError("form value is not a whole multiple of sqrt(3)/4");
        return checked::neg(g.b / 2);
    } else {
        return checked::neg(g.b);
    }
}

template <Ring R>
FormValue<R> hermitian_form(const LorentzPair<R>& z, const LorentzPair<R>& w)
{
    return {z.z1 * w.z2.conj() - z.z2 * w.z1.conj()};
}

template <Ring R>
std::int64_t area_quanta(const LorentzPair<R>& z)
{
    return hermitian_form(z, z).real_quanta();
}

template <Ring R>
std::int64_t hermitian_cell_count(const LorentzPair<R>& z)
{
    if (!z.in_doubled_lattice())
        throw DomainError("pair " + to_string(z) + " is not in 2R + 2R");
    const std::int64_t q = area_quanta(z);
    if constexpr (R == Ring::Eisenstein)
        return q; // one quantum sqrt(3)/4 is one unit triangle
    else
        return q / 4; // one unit square is four quanta of 1/4
}

template <Ring R>
bool is_positive(const LorentzPair<R>& z)
{
    return area_quanta(z) > 0;
}

template <Ring R>
LorentzPair<R> unit_act(const LatticeInt<R>& u, const LorentzPair<R>& z)
{
    if (u.unit_exponent() < 0) throw DomainError("unit_act: " + to_string(u) + " is not a unit");
    return {u * z.z1, u * z.z2};
}

template <Ring R>
LorentzPair<R> matrix_act(const UnimodularMatrix& m, const LorentzPair<R>& z)
{
    return {z.z1.scaled(m.a()) + z.z2.scaled(m.b()), z.z1.scaled(m.c()) + z.z2.scaled(m.d())};
}

template <Ring R>
ReducedPair<R> pair_reduce(const LorentzPair<R>& z)
{
    if (!is_positive(z)) throw DomainError("pair_reduce: pair " + to_string(z) + " is not positively oriented");

    LorentzPair<R> cur = z;
    UnimodularMatrix total;
    auto apply = [&](const UnimodularMatrix& step) {
        cur = matrix_act(step, cur);
        total = step * total;
    };
    const UnimodularMatrix flip(0, 1, -1, 0); // tau -> -1/tau

    // 2 Re(z2 conj(z1)) = 2 |z1|^2 Re(tau)
    auto twice_re = [&] { return (cur.z2 * cur.z1.conj()).twice_real(); };

    for (;;) {
        const std::int64_t n1 = cur.z1.norm();
        const std::int64_t m = floor_div(checked::add(twice_re(), n1), checked::mul(2, n1));
        if (m != 0) apply(UnimodularMatrix(1, 0, checked::neg(m), 1));
        if (cur.z2.norm() < n1) {
            apply(flip);
            continue;
        }
        break;
    }
    // Re tau in [-1/2, 1/2) and |tau| >= 1; settle the boundary.
    if (twice_re() == -cur.z1.norm()) apply(UnimodularMatrix::t1());
    if (cur.z2.norm() == cur.z1.norm() && twice_re() < 0) apply(flip);

    const auto [rep, k] = canonical_unit_rep_with_witness(cur.z1);
    cur = {rep, LatticeInt<R>::unit(k) * cur.z2};
    return {cur, total, k};
}

template <Ring R>
LatticeInt<R> parse_lattice_int(std::string_view text)
{
    static const std::regex pattern(R"(^([+-]?[0-9]+)([+-][0-9]+)([a-z])$)");
    const std::string s = strip_spaces(text);
    std::smatch m;
    const char suffix = R == Ring::Eisenstein ? 'd' : 'i';
    if (!std::regex_match(s, m, pattern) || m[3].str()[0] != suffix)
        throw ParseError("expected lattice point of the form a+b" + std::string(1, suffix) + ", got '" +
                         std::string(text) + "'");
    return {parse_int(m[1].str(), text), parse_int(m[2].str(), text)};
}

template <Ring R>
LorentzPair<R> parse_pair(std::string_view text)
{
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
        throw ParseError("expected a pair 'z1;z2', got '" + std::string(text) + "'");
    return {parse_lattice_int<R>(text.substr(0, semi)), parse_lattice_int<R>(text.substr(semi + 1))};
}

template <Ring R>
std::string to_string(const LatticeInt<R>& x)
{
    std::string out = std::to_string(x.a);
    if (x.b >= 0) out += '+';
    out += std::to_string(x.b);
    out += R == Ring::Eisenstein ? 'd' : 'i';
    return out;
}

template <Ring R>
std::string to_string(const LorentzPair<R>& z)
{
    return to_string(z.z1) + ";" + to_string(z.z2);
}

#define HYPERLAT_INSTANTIATE(R)                                                                    \
    template struct LatticeInt<R>;                                                                 \
    template struct LorentzPair<R>;                                                                \
    template struct FormValue<R>;                                                                  \
    template LatticeInt<R> canonical_unit_rep(const LatticeInt<R>&);                               \
    template std::pair<LatticeInt<R>, int> canonical_unit_rep_with_witness(const LatticeInt<R>&);  \
    template FormValue<R> hermitian_form(const LorentzPair<R>&, const LorentzPair<R>&);            \
    template std::int64_t area_quanta(const LorentzPair<R>&);                                      \
    template std::int64_t hermitian_cell_count(const LorentzPair<R>&);                             \
    template bool is_positive(const LorentzPair<R>&);                                              \
    template LorentzPair<R> unit_act(const LatticeInt<R>&, const LorentzPair<R>&);                 \
    template LorentzPair<R> matrix_act(const UnimodularMatrix&, const LorentzPair<R>&);            \
    template ReducedPair<R> pair_reduce(const LorentzPair<R>&);                                    \
    template LatticeInt<R> parse_lattice_int(std::string_view);                                    \
    template LorentzPair<R> parse_pair(std::string_view);                                          \
    template std::string to_string(const LatticeInt<R>&);                                          \
    template std::string to_string(const LorentzPair<R>&);

HYPERLAT_INSTANTIATE(Ring::Eisenstein)
HYPERLAT_INSTANTIATE(Ring::Gaussian)

#undef HYPERLAT_INSTANTIATE

} // namespace hyperlat
