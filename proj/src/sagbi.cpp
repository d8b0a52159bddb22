#include "invforge/sagbi.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace invforge {

GenSet::GenSet(std::vector<std::string> names, std::vector<Poly> polys)
    : names_(std::move(names)), polys_(std::move(polys))
{
    if (polys_.empty()) throw Error("generator set is empty");
    if (names_.size() != polys_.size()) throw Error("generator names and polynomials differ in number");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        if (polys_[i].is_zero()) throw Error("generator '" + names_[i] + "' is zero");
        if (polys_[i].lead_monomial().degree() == 0) {
            throw Error("generator '" + names_[i] + "' has a constant lead term");
        }
        if (!polys_[i].field()->same_as(*polys_.front().field())) {
            throw Error("generators over different fields");
        }
        if (!seen.insert(names_[i]).second) throw Error("duplicate generator name '" + names_[i] + "'");
        leads_.push_back(polys_[i].lead_monomial());
    }
}

std::uint32_t GenSet::max_degree() const
{
    std::uint32_t d = 0;
    for (const auto& g : polys_) d = std::max(d, g.total_degree());
    return d;
}

Monomial GenSet::lead_of(const Exponents& e) const
{
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i) {
        m.e0 += e[i] * leads_[i].e0;
        m.e1 += e[i] * leads_[i].e1;
        m.e2 += e[i] * leads_[i].e2;
    }
    return m;
}

Elem GenSet::lead_coeff_of(const Exponents& e) const
{
    const Field& F = *field();
    Elem c = F.one();
    for (std::size_t i = 0; i < e.size(); ++i) c = F.mul(c, F.pow(polys_[i].lead_coeff(), e[i]));
    return c;
}

std::uint32_t GenSet::degree_of(const Exponents& e) const
{
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * degree(i);
    return d;
}

PowerCache::PowerCache(const GenSet& gens) : gens_(gens), powers_(gens.size()) {}

const Poly& PowerCache::power(std::size_t i, std::uint32_t e)
{
    auto& list = powers_[i];
    if (list.empty()) list.push_back(Poly::constant(gens_.field(), gens_.field()->one()));
    while (list.size() <= e) list.push_back(list.back() * gens_.poly(i));
    return list[e];
}

Poly PowerCache::product(const Exponents& e)
{
    Poly out = Poly::constant(gens_.field(), gens_.field()->one());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 0) out = out * power(i, e[i]);
    }
    return out;
}

Expression::Expression(FieldPtr field, std::vector<std::string> vars)
    : field_(std::move(field)), vars_(std::move(vars))
{
}

void Expression::add_term(const Exponents& e, Elem c)
{
    if (e.size() != vars_.size()) throw Error("exponent vector does not match expression variables");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second = field_->add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Expression::uses_var(std::size_t i) const
{
    return std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first[i] > 0; });
}

Poly Expression::eval(const GenSet& gens) const
{
    if (gens.size() != vars_.size()) throw Error("expression and generator set differ in size");
    PowerCache cache(gens);
    Poly out(field_);
    for (const auto& [e, c] : terms_) out += cache.product(e).scale(c);
    return out;
}

std::string exponents_to_text(const Exponents& e, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string Expression::to_text() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += field_->to_string(it->second);
        const std::string mono = exponents_to_text(it->first, vars_);
        if (mono != "1") out += "*" + mono;
    }
    return out;
}

nlohmann::json Expression::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        terms.push_back({{"exponents", it->first}, {"coeff", field_->coords(it->second)}});
    }
    return {{"vars", vars_}, {"terms", terms}};
}

Expression Expression::from_json(const FieldPtr& field, const nlohmann::json& j)
{
    Expression out(field, j.at("vars").get<std::vector<std::string>>());
    for (const auto& t : j.at("terms")) {
        out.add_term(t.at("exponents").get<Exponents>(),
                     field->from_coords(t.at("coeff").get<std::vector<std::uint32_t>>()));
    }
    return out;
}

bool operator==(const Expression& a, const Expression& b)
{
    return a.field_->same_as(*b.field_) && a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

namespace {

void solve_rec(const GenSet& gens, std::size_t i, Monomial rest, Exponents& cur,
               std::vector<Exponents>& out)
{
    if (i == gens.size()) {
        if (rest.degree() == 0) out.push_back(cur);
        return;
    }
    const Monomial& l = gens.lead(i);
    std::uint32_t bound = rest.degree() / l.degree();
    if (l.e0 > 0) bound = std::min(bound, rest.e0 / l.e0);
    if (l.e1 > 0) bound = std::min(bound, rest.e1 / l.e1);
    if (l.e2 > 0) bound = std::min(bound, rest.e2 / l.e2);
    for (std::uint32_t e = 0; e <= bound; ++e) {
        cur[i] = e;
        const Monomial used{e * l.e0, e * l.e1, e * l.e2};
        solve_rec(gens, i + 1, rest / used, cur, out);
    }
    cur[i] = 0;
}

void enumerate_rec(const GenSet& gens, std::size_t i, std::uint32_t budget, Exponents& cur,
                   std::vector<Exponents>& out)
{
    if (i == gens.size()) {
        out.push_back(cur);
        return;
    }
    const std::uint32_t d = gens.degree(i);
    for (std::uint32_t e = 0; e * d <= budget; ++e) {
        cur[i] = e;
        enumerate_rec(gens, i + 1, budget - e * d, cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Exponents> solve_lead_exponents(const Monomial& target, const GenSet& gens)
{
    std::vector<Exponents> out;
    Exponents cur(gens.size(), 0);
    solve_rec(gens, 0, target, cur, out);
    return out;
}

SubductionResult subduct(const Poly& f, const GenSet& gens)
{
    if (!f.field()->same_as(*gens.field())) throw Error("subduction over a different field");
    const Field& F = *f.field();
    SubductionResult res{f, Expression(f.field(), gens.names()), 0, 0};
    PowerCache cache(gens);
    while (!res.remainder.is_zero()) {
        const Term lead = res.remainder.lead_term();
        const auto solutions = solve_lead_exponents(lead.mono, gens);
        if (solutions.empty()) break;
        res.max_solutions = std::max(res.max_solutions, solutions.size());
        const Exponents& e = solutions.front();
        const Poly prod = cache.product(e);
        const Elem c = F.div(lead.coeff, prod.lead_coeff());
        res.expr.add_term(e, c);
        res.remainder -= prod.scale(c);
        ++res.steps;
        if (!res.remainder.is_zero() && res.remainder.lead_monomial().key() >= lead.mono.key()) {
            throw Error("subduction step did not lower the lead monomial");
        }
    }
    return res;
}

std::vector<TeteATete> find_tete_a_tetes(const GenSet& gens, std::uint32_t degree_bound)
{
    if (degree_bound < gens.max_degree()) {
        throw Error("degree bound " + std::to_string(degree_bound) +
                    " is below the largest generator degree " + std::to_string(gens.max_degree()));
    }
    std::vector<Exponents> all;
    Exponents cur(gens.size(), 0);
    enumerate_rec(gens, 0, degree_bound, cur, all);

    std::map<std::uint64_t, std::vector<Exponents>> by_lead;
    for (const auto& e : all) by_lead[gens.lead_of(e).key()].push_back(e);

    const Field& F = *gens.field();
    PowerCache cache(gens);
    std::vector<TeteATete> out;
    for (auto& [key, group] : by_lead) {
        std::sort(group.begin(), group.end());
        for (std::size_t a = 0; a < group.size(); ++a) {
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                const Exponents& u = group[a];
                const Exponents& v = group[b];
                bool disjoint = true;
                for (std::size_t i = 0; i < u.size(); ++i) {
                    if (u[i] > 0 && v[i] > 0) disjoint = false;
                }
                if (!disjoint) continue;
                TeteATete t{u, v, F.div(gens.lead_coeff_of(u), gens.lead_coeff_of(v)), F.one(),
                            Poly(gens.field())};
                Poly diff = cache.product(u) - cache.product(v).scale(t.scale);
                if (!diff.is_zero()) t.normalizer = F.inv(diff.lead_coeff());
                t.witness = diff.scale(t.normalizer);
                out.push_back(std::move(t));
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const TeteATete& x, const TeteATete& y) {
        const auto dx = gens.degree_of(x.u), dy = gens.degree_of(y.u);
        if (dx != dy) return dx < dy;
        return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });
    return out;
}

SagbiReport certify_sagbi(const GenSet& gens, std::uint32_t degree_bound)
{
    SagbiReport report;
    report.degree_bound = degree_bound;
    for (auto& pair : find_tete_a_tetes(gens, degree_bound)) {
        SubductionResult sub = subduct(pair.witness, gens);
        const bool ok = sub.remainder.is_zero();
        report.pass = report.pass && ok;
        report.entries.push_back({std::move(pair), std::move(sub), ok});
    }
    return report;
}

std::string SagbiReport::to_text(const GenSet& gens) const
{
    std::ostringstream os;
    os << "tete-a-tetes certified up to degree " << degree_bound << ": " << entries.size()
       << " pair(s), " << (pass ? "all subduct to 0" : "NOT all subduct to 0") << "\n";
    for (const auto& e : entries) {
        os << "  " << exponents_to_text(e.pair.u, gens.names()) << " vs "
           << exponents_to_text(e.pair.v, gens.names()) << " (degree " << gens.degree_of(e.pair.u)
           << "): " << e.subduction.steps << " step(s), remainder "
           << (e.subduction.remainder.is_zero() ? "0" : "nonzero") << " -> "
           << (e.pass ? "PASS" : "FAIL") << "\n";
    }
    return os.str();
}

nlohmann::json SagbiReport::to_json(const GenSet& gens) const
{
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& e : entries) {
        pairs.push_back({{"u", e.pair.u},
                         {"v", e.pair.v},
                         {"degree", gens.degree_of(e.pair.u)},
                         {"steps", e.subduction.steps},
                         {"remainder", invforge::to_json(e.subduction.remainder)},
                         {"expression", e.subduction.expr.to_json()},
                         {"pass", e.pass}});
    }
    return {{"generators", gens.names()},
            {"degree_bound", degree_bound},
            {"certified_up_to_degree", degree_bound},
            {"pairs", pairs},
            {"pass", pass}};
}

Membership membership(const Poly& f, const GenSet& gens)
{
    SubductionResult sub = subduct(f, gens);
    const bool member = sub.remainder.is_zero();
    return {member, std::move(sub.expr), std::move(sub.remainder)};
}

}  // namespace invforge
