#include "multider/arrangement.hpp"

namespace multider {

namespace {

template <class K>
LinearForm<K> coordinate_form(int n, int i) {
    std::vector<K> c(n, K(0));
    c[i] = K(1);
    return LinearForm<K>(std::move(c));
}

template <class K>
LinearForm<K> difference_form(int n, int i, int j, K cj) {
    std::vector<K> c(n, K(0));
    c[i] = K(1);
    c[j] = -cj;
    return LinearForm<K>(std::move(c));
}

} // namespace

ArrangementQ three_lines(int p, int q, int r) {
    if (p < 0 || q < 0 || r < 0 || p + q + r < 1)
        throw DomainError("three_lines needs nonnegative multiplicities, not all zero");
    ArrangementQ a(Vars{2, false, false});
    a.add(coordinate_form<Rational>(2, 0), p);
    a.add(coordinate_form<Rational>(2, 1), q);
    a.add(difference_form<Rational>(2, 0, 1, Rational(1)), r);
    return a;
}

ArrangementQ braid_coordinate(const std::vector<int>& a, int b, bool with_coordinates) {
    int ell = static_cast<int>(a.size());
    if (ell < 2) throw DomainError("braid arrangement needs ell >= 2");
    for (int ai : a)
        if (ai < 0) throw DomainError("negative exponent parameter");
    if (b < 0) throw DomainError("negative exponent parameter");
    ArrangementQ arr(Vars{ell, false, false});
    if (with_coordinates)
        for (int i = 0; i < ell; ++i)
            arr.add(coordinate_form<Rational>(ell, i), a[i] + b + 1);
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j)
            arr.add(difference_form<Rational>(ell, i, j, Rational(1)), a[i] + a[j] + 1);
    return arr;
}

ArrangementC monomial_reflection(int r, int p, int ell, const std::vector<long>& m_i, int u) {
    if (r < 2) throw DomainError("monomial_reflection requires r >= 2");
    if (p != 1 && p != r) throw DomainError("monomial_reflection requires p in {1, r}");
    if (ell < 2) throw DomainError("monomial_reflection requires ell >= 2");
    if (static_cast<int>(m_i.size()) != ell)
        throw DomainError("m_i must have one entry per coordinate");
    if (u < 0) throw DomainError("negative multiplicity u");
    ArrangementC arr(Vars{ell, false, false}, r);
    for (int i = 0; i < ell; ++i) {
        if (m_i[i] < 0) throw DomainError("negative coordinate multiplicity");
        arr.add(coordinate_form<Cyclotomic>(ell, i), static_cast<int>(m_i[i]));
    }
    Cyclotomic zeta = Cyclotomic::zeta(r);
    for (int i = 0; i < ell; ++i)
        for (int j = i + 1; j < ell; ++j) {
            Cyclotomic zk(1);
            for (int k = 0; k < r; ++k) {
                arr.add(difference_form<Cyclotomic>(ell, i, j, zk.promoted(r)), u);
                zk *= zeta;
            }
        }
    return arr;
}

ArrangementC reflection_arrangement(int r, int p, int ell, const MultiplicityMap& m) {
    if (m.coordinate < 0 || m.reflection < 0)
        throw DomainError("negative multiplicity map");
    return monomial_reflection(r, p, ell, std::vector<long>(ell, m.coordinate),
                               static_cast<int>(m.reflection));
}

ArrangementQ catalan_B2(int m) {
    if (m < 0) throw DomainError("catalan_B2 requires m >= 0");
    ArrangementQ arr(Vars{2, false, false});
    auto add_shifted = [&](std::vector<Rational> coeffs) {
        for (int k = -m; k <= m; ++k)
            arr.add(LinearForm<Rational>(coeffs, Rational(-k)), 1);
    };
    add_shifted({Rational(1), Rational(0)});
    add_shifted({Rational(0), Rational(1)});
    add_shifted({Rational(1), Rational(1)});
    add_shifted({Rational(1), Rational(-1)});
    return arr;
}

bool product_with_line_check(const std::vector<int>& a, int b) {
    int ell = static_cast<int>(a.size());
    if (ell < 2) throw DomainError("product_with_line_check needs ell >= 2");
    PolyQ q_small = braid_coordinate(a, b, true).defining_polynomial();

    Vars big{ell + 1, false, false};
    std::vector<PolyQ> images;
    images.reserve(ell);
    for (int i = 0; i < ell; ++i)
        images.push_back(PolyQ::variable(big, i) - PolyQ::variable(big, ell));
    PolyQ lhs = q_small.substitute(images);

    std::vector<int> a_big = a;
    a_big.push_back(b);
    PolyQ rhs = braid_coordinate(a_big, 0, false).defining_polynomial();
    return lhs == rhs;
}

} // namespace multider
