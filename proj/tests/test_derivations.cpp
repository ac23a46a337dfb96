#include <doctest.h>

#include "helpers.hpp"
#include "multider/derivation.hpp"

using namespace multider;
using namespace multider::testing;

namespace {

FieldQ make_field(Vars vars, const std::vector<std::string>& comps) {
    std::vector<PolyQ> polys;
    for (const auto& s : comps) polys.push_back(parse_q(s, vars));
    return FieldQ(vars, std::move(polys));
}

} // namespace

TEST_SUITE("derivations") {

TEST_CASE("derivation action") {
    FieldQ euler = euler_field<Rational>(kV2);
    CHECK(apply(euler, q2("x1 - x2")) == q2("x1 - x2"));
    CHECK(apply(euler, q2("x1^2")) == q2("2*x1^2"));

    FieldQ f = make_field(kV2, {"x2", "0"});
    CHECK(apply(f, q2("x1^2")) == q2("2*x1*x2"));

    FieldQ d1 = make_field(kV2, {"1", "0"});
    CHECK(apply(d1, q2("x1 - 3")) == q2("1"));
}

TEST_CASE("unit sum and euler degrees") {
    FieldQ e = euler_field<Rational>(kV2);
    FieldQ u = unit_sum_field<Rational>(kV3);
    CHECK(e.homogeneous_degree() == 1);
    CHECK(u.homogeneous_degree() == 0);
    CHECK(apply(u, q3("x1 - x2")).is_zero());
}

TEST_CASE("membership") {
    FieldQ euler = euler_field<Rational>(kV2);
    MembershipReport rep = member_of(euler, three_lines(1, 1, 1));
    CHECK(rep.member);
    CHECK(rep.orders == std::vector<long>{1, 1, 1});

    // theta_{1,0,0} has components (x1^2/2 - x1 x2, -x2^2/2).
    FieldQ theta = make_field(kV2, {"1/2*x1^2 - x1*x2", "-1/2*x2^2"});
    MembershipReport rep2 = member_of(theta, three_lines(1, 2, 2));
    CHECK(rep2.member);
    CHECK(rep2.orders[0] >= 1);
    CHECK(rep2.orders[1] >= 2);
    CHECK(rep2.orders[2] >= 2);

    FieldQ d1 = make_field(kV2, {"1", "0"});
    CHECK_FALSE(member_of(d1, three_lines(1, 0, 0)).member);

    // all multiplicities zero: anything polynomial is a member
    ArrangementQ zero(kV2);
    zero.add(LinearForm<Rational>({Rational(1), Rational(0)}), 0);
    zero.add(LinearForm<Rational>({Rational(1), Rational(5)}), 0);
    CHECK(member_of(d1, zero).member);
}

TEST_CASE("membership rejects Laurent fields") {
    FieldQ laurent = make_field(kV2, {"x1^-1", "0"});
    CHECK_THROWS_AS(member_of(laurent, three_lines(1, 1, 1)), DomainError);
}

TEST_CASE("verify_basis on frozen examples") {
    FieldQ f1 = make_field(kV2, {"x1", "x2"});
    FieldQ f2 = make_field(kV2, {"x1^2", "x2^2"});
    FreenessReport rep = verify_basis({f1, f2}, three_lines(1, 1, 1));
    CHECK(rep.verdict == Verdict::basis);
    CHECK(rep.degrees == std::vector<long>{1, 2});
    CHECK(rep.degree_sum_matches);
    // det = x1 x2^2 - x1^2 x2 = -x1 x2 (x1 - x2), so det/Q = -1
    CHECK(rep.det_over_q_constant == "-1");

    FieldQ d1 = make_field(kV2, {"1", "0"});
    ArrangementQ zero(kV2);
    zero.add(LinearForm<Rational>({Rational(1), Rational(0)}), 0);
    FreenessReport dep = verify_basis({d1, d1}, zero);
    CHECK(dep.verdict == Verdict::dependent);

    FreenessReport nm = verify_basis({f1, f2}, three_lines(2, 2, 2));
    CHECK(nm.verdict == Verdict::not_member);
}

TEST_CASE("degree mismatch verdict") {
    FieldQ f1 = make_field(kV2, {"x1", "x2"});
    FieldQ f2 = make_field(kV2, {"x1^3", "x2^3"});
    // members of x1 x2 (x1-x2) but degrees 1+3 != 3
    FreenessReport rep = verify_basis({f1, f2}, three_lines(1, 1, 1));
    CHECK(rep.verdict == Verdict::degree_mismatch);
    CHECK_FALSE(rep.degree_sum_matches);
}

TEST_CASE("homogenization") {
    Vars v2z{2, false, true};
    FieldQ g = make_field(kV2, {"x1^2 - 1", "0"});
    FieldQ h = homogenize_field(g, 2);
    CHECK(h.vars == v2z);
    CHECK(h.comps[0] == parse_q("x1^2 - z^2", v2z));
    CHECK(h.comps[2].is_zero());

    FieldQ e = euler_field<Rational>(kV2);
    FieldQ he = homogenize_field(e, 1);
    CHECK(he.comps[0] == parse_q("x1", v2z));
    CHECK(he.comps[1] == parse_q("x2", v2z));
    CHECK(he.comps[2].is_zero());

    FieldQ g3 = make_field(kV2, {"x1^3 - 5*x1", "0"});
    CHECK(homogenize_field(g3, 3).comps[0] == parse_q("x1^3 - 5*x1*z^2", v2z));

    CHECK_THROWS_AS(homogenize_field(g3, 2), DomainError);
}

TEST_CASE("determinants agree across algorithms") {
    std::vector<std::vector<PolyQ>> m = {
        {q3("x1 + x2"), q3("x2^2"), q3("1")},
        {q3("x3"), q3("x1*x3 - 1"), q3("x2")},
        {q3("2*x1"), q3("0"), q3("x3^2 + x1")},
    };
    CHECK(det_bareiss(m) == det_cofactor(m));

    // zero column: determinant vanishes
    std::vector<std::vector<PolyQ>> z = {
        {q3("0"), q3("x1"), q3("x2")},
        {q3("0"), q3("x2"), q3("x3")},
        {q3("0"), q3("x3"), q3("x1")},
    };
    CHECK(det_bareiss(z).is_zero());

    // pivoting required
    std::vector<std::vector<PolyQ>> p = {
        {q3("0"), q3("x1")},
        {q3("x2"), q3("0")},
    };
    CHECK(det_bareiss(p) == -(q3("x1") * q3("x2")));
}

TEST_CASE("apply on the cone includes the z component") {
    Vars v2z{2, false, true};
    FieldQ e = euler_field<Rational>(v2z);
    CHECK(apply(e, parse_q("x1 - 2*z", v2z)) == parse_q("x1 - 2*z", v2z));
}

} // TEST_SUITE
