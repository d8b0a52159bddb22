#include "invforge/construct.hpp"

#include <algorithm>

namespace invforge {

namespace {

void require(bool ok, const std::string& identity)
{
    if (!ok) throw Error("construction check failed: " + identity);
}

Poly orbit_product_P(const FieldPtr& field, const Poly& f)
{
    Poly out = Poly::constant(field, field->one());
    for (const auto& g : enumerate_P(field)) out *= apply(g, f);
    return out;
}

Poly linear(const FieldPtr& field, Elem c2, Elem c1, Elem c0)
{
    return Poly::variable(field, Var::a2).scale(c2) + Poly::variable(field, Var::a1).scale(c1) +
           Poly::variable(field, Var::a0).scale(c0);
}

}  // namespace

Degrees expected_degrees(std::uint32_t q)
{
    const std::uint32_t big_gamma = q * (q - 1) / 2;
    return {2, q, q, big_gamma, q + big_gamma, q + 1};
}

GenSet InvariantSet::p_generators() const
{
    return GenSet({"a0", "Delta", "beta", "gamma0"}, {a0, delta, beta, gamma0()});
}

GenSet InvariantSet::sl2_generators() const
{
    return GenSet({"Delta", "J", "Gamma", "B"}, {delta, J, Gamma, B});
}

GenSet InvariantSet::hsop_generators() const
{
    return GenSet({"Delta", "J", "Gamma"}, {delta, J, Gamma});
}

InvariantSet build(const FieldPtr& field)
{
    const Field& F = *field;
    const std::uint32_t q = F.q();
    const Poly a0 = Poly::variable(field, Var::a0);
    const Poly a1 = Poly::variable(field, Var::a1);
    const Poly a2 = Poly::variable(field, Var::a2);

    InvariantSet inv{field, a0, a1 * a1 - a0 * a2, orbit_product_P(field, a1), {},
                     Poly(field), Poly(field), Poly(field)};

    for (const Elem k : F.elements()) {
        inv.gamma.push_back(orbit_product_P(field, a2 - a0.scale(k)));
    }

    inv.Gamma = Poly::constant(field, F.one());
    for (const Elem k : F.nonresidues()) inv.Gamma *= inv.gamma_k(k);
    inv.B = inv.beta;
    for (const Elem k : F.residues()) inv.B *= inv.gamma_k(k);
    inv.J = a0 * inv.gamma0();

    require(inv.beta == a1.pow(q) - a0.pow(q - 1) * a1, "beta = a1^q - a0^(q-1) a1");

    const Degrees deg = expected_degrees(q);
    auto check_degree = [&](const Poly& f, std::uint32_t d, const std::string& name) {
        require(f.is_homogeneous() && f.total_degree() == d,
                "deg " + name + " = " + std::to_string(d));
    };
    check_degree(inv.delta, deg.delta, "Delta");
    check_degree(inv.beta, deg.beta, "beta");
    for (std::size_t k = 0; k < inv.gamma.size(); ++k) {
        check_degree(inv.gamma[k], deg.gamma, "gamma_k");
    }
    check_degree(inv.Gamma, deg.Gamma, "Gamma");
    check_degree(inv.B, deg.B, "B");
    check_degree(inv.J, deg.J, "J");

    const std::uint32_t N = deg.Gamma;
    require(inv.delta.lead_monomial() == Monomial{0, 2, 0}, "LM(Delta) = a1^2");
    require(inv.beta.lead_monomial() == Monomial{0, q, 0}, "LM(beta) = a1^q");
    require(inv.gamma0().lead_monomial() == Monomial{0, 0, q}, "LM(gamma0) = a2^q");
    require(inv.J.lead_monomial() == Monomial{1, 0, q}, "LM(J) = a0 a2^q");
    require(inv.Gamma.lead_monomial() == Monomial{0, 0, N}, "LM(Gamma) = a2^(q(q-1)/2)");
    require(inv.B.lead_monomial() == Monomial{0, q, N}, "LM(B) = a1^q a2^(q(q-1)/2)");

    const std::uint32_t m = q - 1;
    require(isobaric_weight(inv.delta) == Weight{2 % m}, "Delta isobaric of weight 2");
    require(isobaric_weight(inv.beta) == Weight{1 % m}, "beta isobaric of weight 1");
    require(isobaric_weight(inv.gamma0()) == Weight{2 % m}, "gamma0 isobaric of weight 2");
    return inv;
}

bool InvarianceReport::pass() const
{
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

bool InvarianceReport::invariant_passes(const std::string& name) const
{
    return std::all_of(entries.begin(), entries.end(),
                       [&](const auto& e) { return e.invariant != name || e.pass; });
}

InvarianceReport check_invariance(const std::vector<std::pair<std::string, Poly>>& polys,
                                  const std::vector<GroupElem>& generators)
{
    InvarianceReport report;
    for (const auto& [name, f] : polys) {
        for (const auto& g : generators) {
            report.entries.push_back({name, g.label(), apply(g, f) == f});
        }
    }
    return report;
}

InvarianceReport verify_p_invariance(const InvariantSet& inv)
{
    return check_invariance(
        {{"a0", inv.a0}, {"Delta", inv.delta}, {"beta", inv.beta}, {"gamma0", inv.gamma0()}},
        enumerate_P(inv.field));
}

InvarianceReport verify_sl2_invariance(const InvariantSet& inv)
{
    return check_invariance({{"Delta", inv.delta}, {"J", inv.J}, {"Gamma", inv.Gamma}, {"B", inv.B}},
                            generators_SL2(inv.field));
}

PRelationResult verify_p_relation(const InvariantSet& inv, std::optional<Elem> k)
{
    const FieldPtr& field = inv.field;
    const std::uint32_t q = field->q();
    const Poly& gamma = k ? inv.gamma_k(*k) : inv.gamma0();
    const Poly correction = inv.delta.pow((q - 1) / 2) - inv.a0.pow(q - 1);
    const Poly zeta = inv.a0.pow(q) * gamma + inv.delta * correction * correction;
    return {inv.beta * inv.beta - zeta, substitute(zeta, Var::a1, Poly(field))};
}

PhiResult compute_phi(const InvariantSet& inv)
{
    const FieldPtr& field = inv.field;
    const std::uint32_t q = field->q();
    const Poly lhs = inv.B * inv.B - inv.delta.pow(q) * inv.Gamma * inv.Gamma;
    if (!substitute(lhs, Var::a0, Poly(field)).is_zero()) {
        throw Error("B^2 - Delta^q Gamma^2 is not zero modulo a0");
    }
    Poly quotient = exact_divide(lhs, inv.J);
    const GenSet hsop = inv.hsop_generators();
    SubductionResult sub = subduct(quotient, hsop);
    if (!sub.remainder.is_zero()) {
        throw Error("(B^2 - Delta^q Gamma^2)/J does not subduct to zero against {Delta, J, Gamma}");
    }
    Expression phi = sub.expr;
    const bool ok = inv.B * inv.B == inv.delta.pow(q) * inv.Gamma * inv.Gamma + inv.J * phi.eval(hsop);
    return {lhs, std::move(quotient), std::move(phi), std::move(sub), ok};
}

ParityDecomposition parity_decompose_invariant(const Poly& f, const InvariantSet& inv)
{
    const auto gens = generators_SL2(inv.field);
    auto invariant = [&](const Poly& h) {
        return std::all_of(gens.begin(), gens.end(), [&](const GroupElem& g) { return apply(g, h) == h; });
    };
    if (!invariant(f)) throw Error("input is not SL_2-invariant");
    auto [even, odd] = parity_split(f);
    if (!invariant(even)) throw Error("even-weight part is not invariant");
    if (!invariant(odd)) throw Error("odd-weight part is not invariant");
    Poly quotient = exact_divide(odd, inv.B);
    return {std::move(even), std::move(odd), std::move(quotient)};
}

std::size_t count_tau_factor_permutation_failures(const FieldPtr& field)
{
    const Field& F = *field;
    const GroupElem tau = GroupElem::tau(field);
    const Elem two = F.from_int(2);
    std::size_t failures = 0;
    for (const Elem c : F.elements()) {
        for (const Elem k : F.nonresidues()) {
            const Elem s = F.sub(F.mul(c, c), k);
            const Poly factor = linear(field, F.one(), F.mul(two, c), s);
            const Elem c2 = F.neg(F.div(c, s));
            const Elem k2 = F.div(k, F.mul(s, s));
            const Poly expected =
                linear(field, F.one(), F.mul(two, c2), F.sub(F.mul(c2, c2), k2)).scale(s);
            if (!(apply(tau, factor) == expected) || F.is_quadratic_residue(k2)) ++failures;
        }
    }
    return failures;
}

}  // namespace invforge
