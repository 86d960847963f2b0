#include "cgi/laurent.hpp"

#include <sstream>

namespace cgi {

std::string to_string(const Laurent& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        const Rational ac = abs(c);
        bool printed_coeff = false;
        const bool trivial_expo =
            std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (ac != 1 || trivial_expo) {
            os << to_string(ac);
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff) os << "*";
            printed_coeff = true;
            if (e.size() == 1) os << "t";
            else os << "x" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Laurent exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw MalformedInput("Laurent exact_div by zero");
    if (a.is_zero()) return Laurent(b.vars());
    if (b.is_monomial()) {
        const auto [be, bc] = b.leading();
        Laurent::Expo shift(be.size());
        for (std::size_t i = 0; i < be.size(); ++i) shift[i] = -be[i];
        return a.shifted(shift) * (Rational(1) / bc);
    }
    // leading-term cancellation in lex order; terminates iff the quotient exists
    Laurent rem = a;
    Laurent quo(a.vars());
    const auto [be, bc] = b.leading();
    std::size_t guard = 0;
    const std::size_t guard_max = 1000000;
    while (!rem.is_zero()) {
        if (++guard > guard_max) throw Falsification("exact_div: division did not terminate");
        const auto [re, rc] = rem.leading();
        Laurent::Expo qe(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) qe[i] = re[i] - be[i];
        const Laurent qt = Laurent::monomial(a.vars(), qe, rc / bc);
        quo = quo + qt;
        rem = rem - qt * b;
    }
    return quo;
}

DivMod divmod_univar(const Laurent& a, const Laurent& b) {
    if (a.vars() != 1 || b.vars() != 1) throw UnsupportedRing("divmod_univar: r != 1");
    if (b.is_zero()) throw MalformedInput("divmod_univar by zero");
    if (a.is_zero()) return {Laurent(1), Laurent(1)};
    // align both to ordinary polynomials with nonzero constant term
    const int sa = a.lo_deg(), sb = b.lo_deg();
    const int da = a.hi_deg() - sa, db = b.hi_deg() - sb;
    std::vector<Rational> ra(static_cast<size_t>(da) + 1);
    for (int i = 0; i <= da; ++i) ra[static_cast<size_t>(i)] = a.coeff_at(i + sa);
    std::vector<Rational> rb(static_cast<size_t>(db) + 1);
    for (int i = 0; i <= db; ++i) rb[static_cast<size_t>(i)] = b.coeff_at(i + sb);

    std::vector<Rational> q(static_cast<size_t>(std::max(da - db + 1, 0)));
    for (int d = da; d >= db; --d) {
        const Rational c = ra[static_cast<size_t>(d)] / rb[static_cast<size_t>(db)];
        if (!is_zero(c)) {
            q[static_cast<size_t>(d - db)] = c;
            for (int i = 0; i <= db; ++i)
                ra[static_cast<size_t>(d - db + i)] -= c * rb[static_cast<size_t>(i)];
        }
    }
    std::vector<Rational> r(ra.begin(), ra.begin() + std::min<std::size_t>(ra.size(), static_cast<size_t>(db)));
    return {Laurent::from_coeffs(q, sa - sb), Laurent::from_coeffs(r, sa)};
}

Laurent unit_normalize_univar(const Laurent& a) {
    if (a.is_zero()) return a;
    if (a.vars() != 1) throw UnsupportedRing("unit_normalize_univar: r != 1");
    const Laurent shifted = a.shifted({-a.lo_deg()});
    return shifted * (Rational(1) / shifted.coeff_at(shifted.hi_deg()));
}

Laurent gcd_univar(const Laurent& a, const Laurent& b) {
    Laurent x = a, y = b;
    while (!y.is_zero()) {
        Laurent r = divmod_univar(x, y).rem;
        x = y;
        y = std::move(r);
    }
    return unit_normalize_univar(x);
}

}  // namespace cgi
