#include "invforge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "invforge/action.hpp"
#include "invforge/construct.hpp"
#include "invforge/gf.hpp"
#include "invforge/oracle.hpp"
#include "invforge/sagbi.hpp"

namespace invforge::cli {

namespace {

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

// Lazily built shared state for one verification run.
class Session {
public:
    explicit Session(FieldPtr field) : field_(std::move(field)) {}

    const FieldPtr& field() const { return field_; }
    std::uint32_t q() const { return field_->q(); }

    const InvariantSet& inv()
    {
        if (!inv_) inv_ = build(field_);
        return *inv_;
    }

    const PhiResult& phi()
    {
        if (!phi_) phi_ = compute_phi(inv());
        return *phi_;
    }

private:
    FieldPtr field_;
    std::optional<InvariantSet> inv_;
    std::optional<PhiResult> phi_;
};

using Sink = std::vector<CheckResult>;

void add(Sink& sink, std::string name, std::string anchor, bool pass, std::string detail)
{
    sink.push_back({std::move(name), std::move(anchor), pass, std::move(detail)});
}

void check_induced_action(Session& s, Sink& sink)
{
    const Field& F = *s.field();
    const Elem zero = F.zero(), one = F.one(), two = F.from_int(2);
    bool sigma_ok = true;
    for (const Elem c : F.elements()) {
        const Mat3 expected{{{one, F.mul(two, c), F.mul(c, c)}, {zero, one, c}, {zero, zero, one}}};
        sigma_ok = sigma_ok && GroupElem::sigma(s.field(), c).induced() == expected;
    }
    bool rho_ok = true;
    for (const Elem w : F.units()) {
        const Mat3 expected{{{F.mul(w, w), zero, zero}, {zero, w, zero}, {zero, zero, one}}};
        rho_ok = rho_ok && GroupElem::rho(s.field(), w).induced() == expected;
    }
    const Mat3 tau_expected{{{zero, zero, one}, {zero, F.neg(one), zero}, {one, zero, zero}}};
    const bool tau_ok = GroupElem::tau(s.field()).induced() == tau_expected;

    add(sink, "induced-action.sigma", "sigma_c acts on V* as [[1,2c,c^2],[0,1,c],[0,0,1]]", sigma_ok,
        "derived by substitution into a0 X^2 + 2 a1 XY + a2 Y^2 for all " + std::to_string(F.q()) + " c");
    add(sink, "induced-action.rho", "rho_omega acts on V* as diag(omega^2, omega, 1)", rho_ok,
        "checked for all " + std::to_string(F.q() - 1) + " units");
    add(sink, "induced-action.tau", "tau acts on V* as [[0,0,1],[0,-1,0],[1,0,0]]", tau_ok, "");
}

void check_invariance(Session& s, Sink& sink)
{
    const InvariantSet& inv = s.inv();
    const std::string q = std::to_string(s.q());

    const InvarianceReport p_report = verify_p_invariance(inv);
    for (const std::string name : {"a0", "Delta", "beta", "gamma0"}) {
        add(sink, "invariance.P." + name, "a0, Delta, beta, gamma0 are P-invariant",
            p_report.invariant_passes(name), "fixed by sigma_c for all " + q + " c");
    }
    const InvarianceReport sl_report = verify_sl2_invariance(inv);
    for (const std::string name : {"Delta", "J", "Gamma", "B"}) {
        add(sink, "invariance.SL2." + name, "J, Gamma and B (and Delta) are SL_2(F_q)-invariant",
            sl_report.invariant_passes(name), "fixed by all " + q + " sigma_c and tau");
    }
    const GroupElem tau = GroupElem::tau(s.field());
    const bool beta_moved = !(apply(tau, inv.beta) == inv.beta);
    add(sink, "invariance.negative-control", "beta is P-invariant but not SL_2-invariant", beta_moved,
        "tau(beta) != beta: " + yes_no(beta_moved));

    const std::size_t tau_failures = count_tau_factor_permutation_failures(s.field());
    add(sink, "invariance.tau-permutes-Gamma-factors",
        "tau maps each linear factor of Gamma to a scalar multiple of another, k/(c^2-k)^2 nonresidue",
        tau_failures == 0, std::to_string(tau_failures) + " failing (c, k) pairs");

    const Field& F = *s.field();
    const std::uint32_t m = s.q() - 1;
    const bool weights_ok = isobaric_weight(inv.delta) == Weight{2 % m} &&
                            isobaric_weight(inv.gamma0()) == Weight{2 % m} &&
                            isobaric_weight(inv.beta) == Weight{1 % m};
    add(sink, "invariance.weights", "Delta and gamma0 isobaric of weight 2, beta of weight 1 (mod q-1)",
        weights_ok, "");

    const std::vector<std::pair<std::string, const Poly*>> isobaric = {
        {"a0", &inv.a0},   {"Delta", &inv.delta}, {"beta", &inv.beta}, {"gamma0", &inv.gamma0()},
        {"J", &inv.J},     {"Gamma", &inv.Gamma}, {"B", &inv.B}};
    bool scaling_ok = true;
    std::string detail;
    for (const auto& [name, f] : isobaric) {
        const auto w = isobaric_weight(*f);
        if (!w) {
            scaling_ok = false;
            detail += name + " not isobaric; ";
            continue;
        }
        for (const Elem omega : F.units()) {
            if (!(apply(GroupElem::rho(s.field(), omega), *f) == f->scale(F.pow(omega, w->value)))) {
                scaling_ok = false;
                detail += name + " fails for omega=" + F.to_string(omega) + "; ";
            }
        }
        detail += name + ":" + std::to_string(w->value) + " ";
    }
    add(sink, "invariance.rho-scaling", "(f) rho_omega = omega^wt(f) f for isobaric f", scaling_ok,
        "weights " + detail + "checked for all units omega");
}

void check_p_relation(Session& s, Sink& sink)
{
    const InvariantSet& inv = s.inv();
    const PRelationResult r = verify_p_relation(inv);
    add(sink, "p-relation.identity", "beta^2 = a0^q gamma0 + Delta (Delta^((q-1)/2) - a0^(q-1))^2",
        r.residual.is_zero(), "residual has " + std::to_string(r.residual.size()) + " terms");
    add(sink, "p-relation.zeta-at-a1-zero", "zeta restricted to a1 = 0 vanishes",
        r.zeta_at_a1_zero.is_zero(), "");

    const Elem k = s.field()->one();
    const PRelationResult perturbed = verify_p_relation(inv, k);
    add(sink, "p-relation.negative-control", "the relation fails when gamma0 is replaced by gamma_1",
        !perturbed.residual.is_zero(),
        "perturbed residual has " + std::to_string(perturbed.residual.size()) + " terms");

    const std::uint32_t q = s.q();
    const bool hsop_ok = inv.a0.lead_monomial() == Monomial{1, 0, 0} &&
                         inv.delta.lead_monomial() == Monomial{0, 2, 0} &&
                         inv.gamma0().lead_monomial() == Monomial{0, 0, q};
    add(sink, "p-relation.hsop-lead-monomials", "lead monomials of a0, Delta, gamma0 are a0, a1^2, a2^q",
        hsop_ok, "");
}

void check_sl2_relation(Session& s, Sink& sink)
{
    const InvariantSet& inv = s.inv();
    const std::uint32_t q = s.q();
    const Poly lhs = inv.B * inv.B - inv.delta.pow(q) * inv.Gamma * inv.Gamma;
    const bool mod_a0 = substitute(lhs, Var::a0, Poly(s.field())).is_zero();
    add(sink, "sl2-relation.zero-mod-a0", "B^2 - Delta^q Gamma^2 is zero modulo a0", mod_a0, "");
    bool divisible = true;
    std::string detail;
    try {
        const Poly quotient = exact_divide(lhs, inv.J);
        detail = "quotient has " + std::to_string(quotient.size()) + " terms, degree " +
                 std::to_string(quotient.total_degree());
    } catch (const DivisionError& e) {
        divisible = false;
        detail = e.what();
    }
    add(sink, "sl2-relation.divisible-by-J", "J divides B^2 - Delta^q Gamma^2", divisible, detail);

    const Degrees deg = expected_degrees(q);
    const std::uint64_t product = static_cast<std::uint64_t>(deg.delta) * deg.J * deg.Gamma;
    const std::uint64_t order = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1);
    add(sink, "sl2-relation.hsop-degree-product", "deg(Delta) deg(J) deg(Gamma) = |SL_2(F_q)|",
        product == order, std::to_string(product) + " vs " + std::to_string(order));
}

void check_phi(Session& s, Sink& sink)
{
    const PhiResult& r = s.phi();
    add(sink, "phi.subducts", "B^2 = Delta^q Gamma^2 + J Phi(Delta, J, Gamma)",
        r.subduction.remainder.is_zero(),
        std::to_string(r.phi.terms().size()) + " terms in Phi, " + std::to_string(r.subduction.steps) +
            " subduction steps");
    add(sink, "phi.reconstructs", "B^2 = Delta^q Gamma^2 + J Phi(Delta, J, Gamma)", r.reconstructs,
        "re-expanded exactly");
    const bool odd_half = ((s.q() - 1) / 2) % 2 == 1;
    const bool gamma_used = r.phi.uses_var(2);
    if (odd_half) {
        add(sink, "phi.gamma-parity", "Gamma cannot appear in Phi when (q-1)/2 is odd", !gamma_used,
            "Gamma appears in Phi: " + yes_no(gamma_used));
    } else {
        add(sink, "phi.gamma-parity", "no parity constraint on Phi when (q-1)/2 is even", true,
            "Gamma appears in Phi: " + yes_no(gamma_used));
    }
}

bool single_expected_pair(const std::vector<SagbiEntry>& entries, const Exponents& u, const Exponents& v)
{
    return entries.size() == 1 && entries[0].pair.u == u && entries[0].pair.v == v;
}

void check_sagbi(Session& s, Sink& sink)
{
    const InvariantSet& inv = s.inv();
    const std::uint32_t q = s.q();
    const std::uint32_t B_deg = expected_degrees(q).B;

    const GenSet pset = inv.p_generators();
    const SagbiReport pr = certify_sagbi(pset, 2 * q);
    add(sink, "sagbi.P.single-tete-a-tete", "single non-trivial tete-a-tete beta^2 - Delta^q",
        single_expected_pair(pr.entries, {0, 0, 2, 0}, {0, q, 0, 0}),
        std::to_string(pr.entries.size()) + " pair(s) up to degree " + std::to_string(2 * q));
    add(sink, "sagbi.P.certified", "{a0, Delta, beta, gamma0} is a SAGBI basis", pr.pass,
        "certified up to degree " + std::to_string(2 * q));

    const GenSet slset = inv.sl2_generators();
    const SagbiReport sr = certify_sagbi(slset, 2 * B_deg);
    add(sink, "sagbi.SL2.single-tete-a-tete", "only non-trivial tete-a-tete is B^2 - Delta^q Gamma^2",
        single_expected_pair(sr.entries, {0, 0, 0, 2}, {q, 0, 2, 0}),
        std::to_string(sr.entries.size()) + " pair(s) up to degree " + std::to_string(2 * B_deg));
    add(sink, "sagbi.SL2.certified", "{Delta, J, Gamma, B} is a SAGBI basis", sr.pass,
        "certified up to degree " + std::to_string(2 * B_deg));

    const Poly a0sq = inv.a0 * inv.a0;
    const GenSet bad({"Delta", "Delta+a0^2"}, {inv.delta, inv.delta + a0sq});
    const SagbiReport br = certify_sagbi(bad, 4);
    add(sink, "sagbi.negative-control", "a non-SAGBI set is rejected", !br.pass,
        "{Delta, Delta + a0^2} certified: " + yes_no(br.pass));
}

void check_parity(Session& s, Sink& sink)
{
    const InvariantSet& inv = s.inv();
    const Poly one = Poly::constant(s.field(), s.field()->one());
    struct Case {
        std::string label;
        Poly f;
        Poly even;
        Poly quotient;
    };
    const std::vector<Case> cases = {
        {"B", inv.B, Poly(s.field()), one},
        {"Delta + B", inv.delta + inv.B, inv.delta, one},
        {"Delta B", inv.delta * inv.B, Poly(s.field()), inv.delta},
    };
    for (const auto& c : cases) {
        bool ok = false;
        std::string detail;
        try {
            const auto d = parity_decompose_invariant(c.f, inv);
            ok = d.even == c.even && d.odd_quotient == c.quotient;
            detail = "odd part / B = " + to_text(d.odd_quotient);
        } catch (const Error& e) {
            detail = e.what();
        }
        add(sink, "parity." + c.label,
            "even and odd weight parts are invariant; every odd-weight invariant is divisible by B", ok,
            detail);
    }
}

void check_hilbert(Session& s, Sink& sink, std::uint32_t max_degree)
{
    const std::uint32_t q = s.q();
    for (const GroupTag tag : {GroupTag::P, GroupTag::SL2}) {
        const DimTable t = compare(s.field(), tag, max_degree);
        std::size_t matched = 0;
        for (const auto& r : t.rows) matched += r.pass() ? 1 : 0;
        const std::string anchor = tag == GroupTag::P
                                       ? "F[V]^P = F[a0, Delta, gamma0] + beta F[a0, Delta, gamma0]"
                                       : "F[V]^SL_2(F_q) = A + B A with A = F[Delta, J, Gamma]";
        add(sink, "hilbert." + to_string(tag), anchor, t.pass(),
            std::to_string(matched) + "/" + std::to_string(t.rows.size()) +
                " degrees match through degree " + std::to_string(max_degree));
    }

    const auto shape = hypersurface_shape(GroupTag::SL2, q);
    std::uint64_t product = 1;
    for (const auto d : shape.hsop_degrees) product *= d;
    const std::uint64_t effective_order = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1) / 2;
    const bool implied_two = product == 2 * effective_order;
    if (max_degree >= shape.module_gen_degree) {
        const DimTable t = compare(s.field(), GroupTag::SL2, max_degree);
        const auto rank = observed_free_rank(t);
        add(sink, "hilbert.SL2-rank", "free A-module of rank 2", rank == 2 && implied_two,
            "observed numerator sums to " + std::to_string(rank) + "; degree product / |SL_2/{+-1}| = " +
                std::to_string(product / effective_order));
    } else {
        add(sink, "hilbert.SL2-rank", "free A-module of rank 2", implied_two,
            "degree product / |SL_2/{+-1}| = " + std::to_string(product / effective_order) +
                " (table ends before deg B = " + std::to_string(shape.module_gen_degree) + ")");
    }
}

void guarded(Sink& sink, const std::string& name, const std::function<void()>& body)
{
    try {
        body();
    } catch (const BudgetError&) {
        throw;
    } catch (const Error& e) {
        add(sink, name, "check raised an error", false, e.what());
    }
}

std::string format_name(Format f)
{
    return f == Format::Json ? "json" : "text";
}

nlohmann::json config_json(const RunConfig& c, std::uint32_t q, std::uint32_t max_degree)
{
    return {{"p", c.p},
            {"n", c.n},
            {"q", q},
            {"max_degree", max_degree},
            {"format", format_name(c.format)},
            {"checks", c.checks}};
}

std::uint32_t resolve_max_degree(const RunConfig& c, std::uint32_t q)
{
    return c.max_degree.value_or(default_max_degree(q));
}

void check_budget(GroupTag tag, std::uint32_t q, std::uint32_t max_degree)
{
    if (oracle_work(tag, q, max_degree) > kOracleWorkBudget) {
        throw BudgetError("oracle budget exceeded: max degree " + std::to_string(max_degree) +
                          " is too large for q=" + std::to_string(q));
    }
}

}  // namespace

bool Report::pass() const
{
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Report run_verification(const RunConfig& config)
{
    for (const auto& c : config.checks) {
        if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end()) {
            throw Error("unknown check '" + c + "'");
        }
    }
    const FieldPtr field = Field::make(config.p, config.n, config.max_q);
    const std::uint32_t max_degree = resolve_max_degree(config, field->q());
    auto selected = [&](const std::string& name) {
        return std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end();
    };
    if (selected("hilbert")) {
        check_budget(GroupTag::P, field->q(), max_degree);
        check_budget(GroupTag::SL2, field->q(), max_degree);
    }

    Session s(field);
    Report report;
    Sink& sink = report.checks;
    guarded(sink, "induced-action", [&] { check_induced_action(s, sink); });
    const std::vector<std::pair<std::string, std::function<void()>>> steps = {
        {"invariance", [&] { check_invariance(s, sink); }},
        {"p-relation", [&] { check_p_relation(s, sink); }},
        {"sl2-relation", [&] { check_sl2_relation(s, sink); }},
        {"phi", [&] { check_phi(s, sink); }},
        {"sagbi", [&] { check_sagbi(s, sink); }},
        {"parity", [&] { check_parity(s, sink); }},
        {"hilbert", [&] { check_hilbert(s, sink, max_degree); }},
    };
    for (const auto& [name, body] : steps) {
        if (selected(name)) guarded(sink, name, body);
    }
    return report;
}

std::string report_text(const RunConfig& config, const Report& report)
{
    std::ostringstream os;
    const FieldPtr field = Field::make(config.p, config.n, config.max_q);
    os << "invforge verify: " << field->describe() << "\n";
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
        passed += c.pass ? 1 : 0;
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.paper_anchor;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    os << "summary: " << passed << "/" << report.checks.size() << " assertions passed -> "
       << (report.pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

nlohmann::json report_json(const RunConfig& config, const Report& report, double elapsed_ms)
{
    const FieldPtr field = Field::make(config.p, config.n, config.max_q);
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back(
            {{"name", c.name}, {"paper_anchor", c.paper_anchor}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return {{"config", config_json(config, field->q(), resolve_max_degree(config, field->q()))},
            {"checks", checks},
            {"elapsed_ms", elapsed_ms}};
}

namespace {

void emit(const RunConfig& config, const std::string& text, std::ostream& out)
{
    if (!config.output_path) {
        out << text;
        return;
    }
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file) throw Error("cannot open output file " + *config.output_path);
    file << text;
    if (!file) throw Error("failed writing " + *config.output_path);
}

int cmd_verify(const RunConfig& config, std::ostream& out)
{
    const auto start = std::chrono::steady_clock::now();
    const Report report = run_verification(config);
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(config,
         config.format == Format::Json ? report_json(config, report, elapsed).dump(2) + "\n"
                                       : report_text(config, report),
         out);
    return report.pass() ? kExitOk : kExitFailed;
}

int cmd_phi(const RunConfig& config, std::ostream& out)
{
    const FieldPtr field = Field::make(config.p, config.n, config.max_q);
    const PhiResult r = compute_phi(build(field));
    if (!r.reconstructs) throw Error("Phi does not reconstruct the relation");
    emit(config,
         config.format == Format::Json ? r.phi.to_json().dump(2) + "\n"
                                       : "Phi(Delta, J, Gamma) = " + r.phi.to_text() + "\n",
         out);
    return kExitOk;
}

int cmd_hilbert(const RunConfig& config, const std::string& group, std::ostream& out)
{
    const FieldPtr field = Field::make(config.p, config.n, config.max_q);
    const std::uint32_t max_degree = resolve_max_degree(config, field->q());
    std::vector<GroupTag> tags;
    if (group == "P" || group == "both") tags.push_back(GroupTag::P);
    if (group == "SL2" || group == "both") tags.push_back(GroupTag::SL2);
    for (const auto tag : tags) check_budget(tag, field->q(), max_degree);

    std::vector<DimTable> tables;
    for (const auto tag : tags) tables.push_back(compare(field, tag, max_degree));
    const bool pass = std::all_of(tables.begin(), tables.end(), [](const DimTable& t) { return t.pass(); });

    std::string text;
    if (config.format == Format::Json) {
        nlohmann::json j = {{"config", config_json(config, field->q(), max_degree)},
                            {"tables", nlohmann::json::array()},
                            {"pass", pass}};
        for (const auto& t : tables) j["tables"].push_back(t.to_json());
        text = j.dump(2) + "\n";
    } else {
        for (const auto& t : tables) text += t.to_text() + "\n";
        text += std::string("result: ") + (pass ? "PASS" : "FAIL") + "\n";
    }
    emit(config, text, out);
    return pass ? kExitOk : kExitFailed;
}

int cmd_export(const RunConfig& config, std::ostream& out)
{
    const FieldPtr field = Field::make(config.p, config.n, config.max_q);
    const InvariantSet inv = build(field);
    const PhiResult phi = compute_phi(inv);
    const std::filesystem::path dir = config.output_path.value_or(".");
    std::filesystem::create_directories(dir);
    const bool json = config.format == Format::Json;
    const std::string ext = json ? ".json" : ".txt";

    const std::vector<std::pair<std::string, const Poly*>> polys = {
        {"Delta", &inv.delta}, {"beta", &inv.beta}, {"gamma0", &inv.gamma0()},
        {"Gamma", &inv.Gamma}, {"B", &inv.B},       {"J", &inv.J}};
    auto write = [&](const std::string& name, const std::string& body) {
        const auto path = dir / (name + ext);
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error("cannot open " + path.string());
        file << body;
        out << path.string() << "\n";
    };
    for (const auto& [name, f] : polys) write(name, json ? to_json(*f).dump() + "\n" : to_text(*f) + "\n");
    write("Phi", json ? phi.phi.to_json().dump() + "\n" : phi.phi.to_text() + "\n");
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"invforge: invariants of the binary quadratic form under SL_2(F_q) and its Sylow p-subgroup"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "text";
    std::string out_path;
    std::vector<std::string> checks;
    std::uint32_t max_degree = 0;
    std::vector<CLI::Option*> max_degree_opts;
    std::string group = "both";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", config.p, "odd prime characteristic")->required();
        sub->add_option("--n", config.n, "extension degree")->default_val(1);
        max_degree_opts.push_back(sub->add_option("--max-degree", max_degree, "oracle degree budget"));
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out_path, "output file (directory for export)");
    };
    CLI::App* verify = app.add_subcommand("verify", "run the verification checks");
    common(verify);
    verify->add_option("--checks", checks, "comma-separated subset of checks")->delimiter(',');
    CLI::App* phi = app.add_subcommand("phi", "print Phi with B^2 = Delta^q Gamma^2 + J Phi");
    common(phi);
    CLI::App* hilbert = app.add_subcommand("hilbert", "compare invariant dimensions with Hilbert series");
    common(hilbert);
    hilbert->add_option("--group", group, "P, SL2 or both")->check(CLI::IsMember({"P", "SL2", "both"}));
    CLI::App* exp = app.add_subcommand("export", "write every named invariant and Phi to files");
    common(exp);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    config.format = format == "json" ? Format::Json : Format::Text;
    if (!out_path.empty()) config.output_path = out_path;
    for (const auto* opt : max_degree_opts) {
        if (opt->count() > 0) config.max_degree = max_degree;
    }
    if (!checks.empty()) config.checks = checks;
    if (const char* env = std::getenv("INVFORGE_MAX_Q")) {
        try {
            config.max_q = std::stoull(env);
        } catch (const std::exception&) {
            err << "error: INVFORGE_MAX_Q must be a positive integer\n";
            return kExitConfig;
        }
        err << "WARNING: INVFORGE_MAX_Q=" << config.max_q
            << " overrides the supported bound q <= 81; larger fields are unsupported and unverified\n";
    }

    try {
        Field::make(config.p, config.n, config.max_q);
        for (const auto& c : config.checks) {
            if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end()) {
                throw Error("unknown check '" + c + "'");
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (verify->parsed()) return cmd_verify(config, out);
        if (phi->parsed()) return cmd_phi(config, out);
        if (hilbert->parsed()) return cmd_hilbert(config, group, out);
        return cmd_export(config, out);
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace invforge::cli
