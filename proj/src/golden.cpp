#include "stsc/golden.hpp"

#include <cmath>

namespace stsc {

GoldenElem golden_mul(const GoldenElem& x, const GoldenElem& y) {
    // (a+b th)(c+d th) = ac + (ad+bc) th + bd th^2, th^2 = th + 1.
    const GaussInt ac = x.a * y.a;
    const GaussInt bd = x.b * y.b;
    const GaussInt ad = x.a * y.b;
    const GaussInt bc = x.b * y.a;
    return {ac + bd, ad + bc + bd};
}

GoldenElem tau(const GoldenElem& x) { return {x.a + x.b, -x.b}; }

std::complex<double> embed(const GoldenElem& x) {
    return x.a.to_complex() + x.b.to_complex() * kGoldenRatio;
}

std::complex<double> embed_conj(const GoldenElem& x) {
    return x.a.to_complex() + x.b.to_complex() * (1.0 - kGoldenRatio);
}

GaussInt relative_norm(const GoldenElem& x) {
    const GoldenElem p = golden_mul(x, tau(x));
    if (!p.b.is_zero()) throw std::logic_error("relative_norm: product left the base ring");
    return p.a;
}

double EmbedAbs2::value() const {
    return static_cast<double>(unit) + static_cast<double>(golden) * kGoldenRatio;
}

EmbedAbs2 embed_abs2(const GoldenElem& x) {
    // |a + b phi|^2 = |a|^2 + |b|^2 + (|b|^2 + 2 Re(a conj(b))) phi,
    // using phi^2 = phi + 1.
    const std::int64_t na = x.a.norm();
    const std::int64_t nb = x.b.norm();
    const std::int64_t cross = checked_mul(2, dot(x.a, x.b));
    return {checked_add(na, nb), checked_add(nb, cross)};
}

bool divisible_by_sqrt5(const GoldenElem& x) {
    // x = (2 th - 1) h  <=>  h = (2b - a)/5 + ((2a + b)/5) th.
    const GaussInt p = x.b + x.b - x.a;
    const GaussInt q = x.a + x.a + x.b;
    return p.divisible_by(5) && q.divisible_by(5);
}

GoldenElem div_sqrt5(const GoldenElem& x) {
    const GaussInt p = x.b + x.b - x.a;
    const GaussInt q = x.a + x.a + x.b;
    if (!p.divisible_by(5) || !q.divisible_by(5))
        throw std::domain_error("div_sqrt5: element not divisible by 2*theta - 1");
    return {p.div_exact(5), q.div_exact(5)};
}

}  // namespace stsc
