#include "invforge/poly.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_map>

namespace invforge {

namespace {

// Collects (monomial, coefficient) contributions and produces a canonical
// polynomial. Uses a dense table when the exponent box is small enough.
class Accumulator {
public:
    Accumulator(const Field& field, Monomial bound, bool homogeneous)
        : field_(field), homogeneous_(homogeneous)
    {
        s1_ = static_cast<std::uint64_t>(bound.e1) + 1;
        s2_ = static_cast<std::uint64_t>(bound.e2) + 1;
        const std::uint64_t s0 = static_cast<std::uint64_t>(bound.e0) + 1;
        const std::uint64_t cells = homogeneous_ ? s0 * s1_ : s0 * s1_ * s2_;
        if (cells <= kDenseLimit) {
            dense_ = true;
            codes_.assign(cells, 0);
            touched_.assign(cells, 0);
        }
    }

    void add(const Monomial& m, Elem c)
    {
        if (c.is_zero()) return;
        if (dense_) {
            const std::uint64_t idx = homogeneous_ ? m.e0 * s1_ + m.e1
                                                   : (m.e0 * s1_ + m.e1) * s2_ + m.e2;
            if (!touched_[idx]) {
                touched_[idx] = 1;
                order_.push_back(idx);
                if (homogeneous_) degree_ = m.degree();
            }
            codes_[idx] = field_.add(Elem{codes_[idx]}, c).code();
        } else {
            auto [it, inserted] = sparse_.try_emplace(m.key(), c);
            if (!inserted) it->second = field_.add(it->second, c);
        }
    }

    std::vector<Term> take()
    {
        std::vector<Term> out;
        if (dense_) {
            out.reserve(order_.size());
            for (const std::uint64_t idx : order_) {
                if (codes_[idx] == 0) continue;
                Monomial m;
                if (homogeneous_) {
                    m.e0 = static_cast<std::uint32_t>(idx / s1_);
                    m.e1 = static_cast<std::uint32_t>(idx % s1_);
                    m.e2 = degree_ - m.e0 - m.e1;
                } else {
                    m.e2 = static_cast<std::uint32_t>(idx % s2_);
                    const std::uint64_t rest = idx / s2_;
                    m.e1 = static_cast<std::uint32_t>(rest % s1_);
                    m.e0 = static_cast<std::uint32_t>(rest / s1_);
                }
                out.push_back({m, Elem{codes_[idx]}});
            }
        } else {
            out.reserve(sparse_.size());
            for (const auto& [key, c] : sparse_) {
                if (!c.is_zero()) out.push_back({Monomial::from_key(key), c});
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const Term& a, const Term& b) { return a.mono.key() > b.mono.key(); });
        return out;
    }

private:
    static constexpr std::uint64_t kDenseLimit = 1ULL << 22;

    const Field& field_;
    bool homogeneous_;
    bool dense_ = false;
    std::uint64_t s1_ = 1;
    std::uint64_t s2_ = 1;
    std::uint32_t degree_ = 0;
    std::vector<std::uint32_t> codes_;
    std::vector<std::uint8_t> touched_;
    std::vector<std::uint64_t> order_;
    std::unordered_map<std::uint64_t, Elem> sparse_;
};

Monomial exponent_box(const std::vector<Term>& terms)
{
    Monomial box;
    for (const auto& t : terms) {
        box.e0 = std::max(box.e0, t.mono.e0);
        box.e1 = std::max(box.e1, t.mono.e1);
        box.e2 = std::max(box.e2, t.mono.e2);
    }
    return box;
}

// Product of two homogeneous polynomials on a dense (e0, e1) grid. Cell
// offsets are additive, so each term pair costs one index addition. Prime
// fields accumulate plain integers and reduce once at the end. Scanning the
// grid in index order yields descending grevlex directly.
constexpr std::uint64_t kHomogeneousGridLimit = 1ULL << 24;

// Nonzero cells of an (e0, e1) grid of codes, in descending grevlex.
std::vector<Term> grid_terms(const std::vector<std::uint32_t>& grid, std::uint64_t s1, std::uint32_t degree)
{
    std::vector<Term> out;
    for (std::uint64_t idx = 0; idx < grid.size(); ++idx) {
        if (grid[idx] == 0) continue;
        const auto e0 = static_cast<std::uint32_t>(idx / s1);
        const auto e1 = static_cast<std::uint32_t>(idx % s1);
        out.push_back({Monomial{e0, e1, degree - e0 - e1}, Elem{grid[idx]}});
    }
    return out;
}

std::optional<std::vector<Term>> multiply_homogeneous_grid(const Field& F, const std::vector<Term>& f,
                                                           const std::vector<Term>& g)
{
    const Monomial box = exponent_box(f) * exponent_box(g);
    const std::uint64_t s1 = static_cast<std::uint64_t>(box.e1) + 1;
    const std::uint64_t cells = (static_cast<std::uint64_t>(box.e0) + 1) * s1;
    if (cells > kHomogeneousGridLimit) return std::nullopt;
    const std::uint32_t degree = f.front().mono.degree() + g.front().mono.degree();

    std::vector<std::uint32_t> offsets(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) offsets[j] = static_cast<std::uint32_t>(g[j].mono.e0 * s1 + g[j].mono.e1);

    std::vector<std::uint32_t> grid(cells, 0);
    const std::uint64_t p = F.p();
    const std::uint64_t bound = (p - 1) * (p - 1) * std::min(f.size(), g.size());
    if (F.n() == 1 && bound < (1ULL << 32)) {
        for (const auto& s : f) {
            std::uint32_t* row = grid.data() + s.mono.e0 * s1 + s.mono.e1;
            const std::uint32_t cs = s.coeff.code();
            for (std::size_t j = 0; j < g.size(); ++j) row[offsets[j]] += cs * g[j].coeff.code();
        }
        for (auto& x : grid) x %= static_cast<std::uint32_t>(p);
    } else {
        for (const auto& s : f) {
            std::uint32_t* row = grid.data() + s.mono.e0 * s1 + s.mono.e1;
            for (std::size_t j = 0; j < g.size(); ++j) {
                std::uint32_t& cell = row[offsets[j]];
                cell = F.add(Elem{cell}, F.mul(s.coeff, g[j].coeff)).code();
            }
        }
    }

    return grid_terms(grid, s1, degree);
}

}  // namespace

std::strong_ordering grevlex_cmp(const Monomial& m, const Monomial& m2)
{
    return m.key() <=> m2.key();
}

Poly::Poly(FieldPtr field) : field_(std::move(field))
{
    if (!field_) throw Error("polynomial without a field");
}

Poly::Poly(FieldPtr field, std::vector<Term> sorted_terms)
    : field_(std::move(field)), terms_(std::move(sorted_terms))
{
}

Poly Poly::constant(FieldPtr field, Elem c)
{
    return monomial(std::move(field), Monomial{}, c);
}

Poly Poly::variable(FieldPtr field, Var v)
{
    Monomial m;
    if (v == Var::a0) m.e0 = 1;
    if (v == Var::a1) m.e1 = 1;
    if (v == Var::a2) m.e2 = 1;
    return monomial(std::move(field), m, Elem{1});
}

Poly Poly::monomial(FieldPtr field, const Monomial& m, Elem c)
{
    Poly out(std::move(field));
    if (!c.is_zero()) out.terms_.push_back({m, c});
    return out;
}

Poly Poly::from_terms(FieldPtr field, std::vector<Term> terms)
{
    Poly out(std::move(field));
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono.key() > b.mono.key(); });
    for (const auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
            out.terms_.back().coeff = out.field_->add(out.terms_.back().coeff, t.coeff);
            if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.terms_.push_back(t);
        }
    }
    return out;
}

const Term& Poly::lead_term() const
{
    if (terms_.empty()) throw Error("the zero polynomial has no lead term");
    return terms_.front();
}

std::uint32_t Poly::total_degree() const
{
    return terms_.empty() ? 0 : terms_.front().mono.degree();
}

bool Poly::is_homogeneous() const
{
    return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

Elem Poly::coefficient(const Monomial& m) const
{
    const auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m.key(),
        [](const Term& t, std::uint64_t key) { return t.mono.key() > key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Elem{0};
}

void Poly::check_same_field(const Poly& g) const
{
    if (field_ != g.field_ && !field_->same_as(*g.field_)) {
        throw Error("polynomials over different fields");
    }
}

Poly Poly::operator-() const
{
    Poly out(*this);
    for (auto& t : out.terms_) t.coeff = field_->neg(t.coeff);
    return out;
}

Poly Poly::scale(Elem k) const
{
    if (k.is_zero()) return Poly(field_);
    Poly out(*this);
    for (auto& t : out.terms_) t.coeff = field_->mul(t.coeff, k);
    return out;
}

Poly Poly::mul_term(const Monomial& m, Elem c) const
{
    if (c.is_zero()) return Poly(field_);
    Poly out(*this);
    for (auto& t : out.terms_) {
        t.mono = t.mono * m;
        t.coeff = field_->mul(t.coeff, c);
    }
    return out;
}

Poly Poly::add_scaled(const Poly& g, Elem k) const
{
    check_same_field(g);
    const Field& F = *field_;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto i = terms_.begin();
    auto j = g.terms_.begin();
    while (i != terms_.end() || j != g.terms_.end()) {
        if (j == g.terms_.end() || (i != terms_.end() && i->mono.key() > j->mono.key())) {
            out.push_back(*i++);
        } else if (i == terms_.end() || j->mono.key() > i->mono.key()) {
            const Elem c = F.mul(j->coeff, k);
            if (!c.is_zero()) out.push_back({j->mono, c});
            ++j;
        } else {
            const Elem c = F.add(i->coeff, F.mul(j->coeff, k));
            if (!c.is_zero()) out.push_back({i->mono, c});
            ++i;
            ++j;
        }
    }
    return Poly(field_, std::move(out));
}

Poly& Poly::operator+=(const Poly& g)
{
    *this = add_scaled(g, field_->one());
    return *this;
}

Poly& Poly::operator-=(const Poly& g)
{
    *this = add_scaled(g, field_->neg(field_->one()));
    return *this;
}

Poly& Poly::operator*=(const Poly& g)
{
    *this = *this * g;
    return *this;
}

Poly operator*(const Poly& f, const Poly& g)
{
    f.check_same_field(g);
    if (f.is_zero() || g.is_zero()) return Poly(f.field_);
    if (g.size() == 1) return f.mul_term(g.terms_[0].mono, g.terms_[0].coeff);
    if (f.size() == 1) return g.mul_term(f.terms_[0].mono, f.terms_[0].coeff);

    const Field& F = *f.field_;
    const bool homogeneous = f.is_homogeneous() && g.is_homogeneous();
    if (homogeneous && f.size() * g.size() >= 4096) {
        if (auto terms = multiply_homogeneous_grid(F, f.terms_, g.terms_)) return Poly(f.field_, std::move(*terms));
    }
    Accumulator acc(F, exponent_box(f.terms_) * exponent_box(g.terms_), homogeneous);
    for (const auto& s : f.terms_) {
        for (const auto& t : g.terms_) {
            acc.add(s.mono * t.mono, F.mul(s.coeff, t.coeff));
        }
    }
    return Poly(f.field_, acc.take());
}

bool operator==(const Poly& f, const Poly& g)
{
    return f.field_->same_as(*g.field_) && f.terms_ == g.terms_;
}

Poly Poly::pow(std::uint32_t e) const
{
    Poly result = Poly::constant(field_, field_->one());
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

Poly exact_divide(const Poly& f, const Poly& g)
{
    if (g.is_zero()) throw Error("division by the zero polynomial");
    const Field& F = *f.field();
    const Term lead = g.lead_term();
    const Elem lead_inv = F.inv(lead.coeff);
    std::vector<Term> quotient;
    Poly rem = f;
    while (!rem.is_zero()) {
        const Term& t = rem.lead_term();
        if (!lead.mono.divides(t.mono)) {
            throw DivisionError("inexact division: lead term of the remainder is not divisible", rem);
        }
        const Monomial m = t.mono / lead.mono;
        const Elem c = F.mul(t.coeff, lead_inv);
        quotient.push_back({m, c});
        rem -= g.mul_term(m, c);
    }
    return Poly::from_terms(f.field(), std::move(quotient));
}

Poly substitute_all(const Poly& f, const std::array<Poly, 3>& images)
{
    const FieldPtr& field = f.field();
    for (const auto& img : images) {
        if (!img.field()->same_as(*field)) throw Error("substitution over a different field");
    }
    if (f.is_zero()) return f;

    // Terms grouped by (e2, e1); innermost sums use cached powers of images[0].
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Term>> groups;
    std::uint32_t max0 = 0;
    for (const auto& t : f.terms()) {
        groups[{t.mono.e2, t.mono.e1}].push_back(t);
        max0 = std::max(max0, t.mono.e0);
    }
    std::vector<Poly> pow0{Poly::constant(field, field->one())};
    while (pow0.size() <= max0) pow0.push_back(pow0.back() * images[0]);

    Poly result(field);
    auto it = groups.rbegin();
    for (std::int64_t e2 = groups.rbegin()->first.first; e2 >= 0; --e2) {
        result = result * images[2];
        if (it == groups.rend() || it->first.first != e2) continue;
        Poly inner(field);
        for (std::int64_t e1 = it->first.second; e1 >= 0; --e1) {
            inner = inner * images[1];
            if (it != groups.rend() && it->first.first == e2 && it->first.second == e1) {
                for (const auto& t : it->second) inner += pow0[t.mono.e0].scale(t.coeff);
                ++it;
            }
        }
        result += inner;
    }
    return result;
}

Poly substitute(const Poly& f, Var v, const Poly& value)
{
    const FieldPtr& field = f.field();
    std::array<Poly, 3> images{Poly::variable(field, Var::a0), Poly::variable(field, Var::a1),
                               Poly::variable(field, Var::a2)};
    images[static_cast<std::size_t>(v)] = value;
    return substitute_all(f, images);
}

namespace {

std::uint32_t& exponent_ref(Monomial& m, Var v)
{
    return v == Var::a0 ? m.e0 : v == Var::a1 ? m.e1 : m.e2;
}

}  // namespace

Poly shear(const Poly& f, Var target, Var source, Elem lambda)
{
    if (target == source) throw Error("shear needs two distinct variables");
    if (f.is_zero() || lambda.is_zero()) return f;
    const Field& F = *f.field();

    std::uint32_t top = 0;
    for (const auto& t : f.terms()) top = std::max(top, t.mono.exponent(target));
    // steps[e] lists (k, C(e, k) lambda^k) for the k where that is nonzero
    std::vector<std::vector<std::pair<std::uint32_t, Elem>>> steps(top + 1);
    {
        std::vector<Elem> row{F.one()}, next;
        std::vector<Elem> lambda_pow(top + 1, F.one());
        for (std::uint32_t k = 1; k <= top; ++k) lambda_pow[k] = F.mul(lambda_pow[k - 1], lambda);
        for (std::uint32_t e = 0; e <= top; ++e) {
            for (std::uint32_t k = 0; k <= e; ++k) {
                const Elem c = F.mul(row[k], lambda_pow[k]);
                if (!c.is_zero()) steps[e].emplace_back(k, c);
            }
            next.assign(e + 2, F.one());
            for (std::uint32_t k = 1; k <= e; ++k) next[k] = F.add(row[k - 1], row[k]);
            row.swap(next);
        }
    }

    // Shears keep the total degree and the third variable's exponent. Each
    // homogeneous component is split into fibers with that exponent fixed,
    // and each fiber is sheared in a short line buffer indexed by the source
    // exponent. Terms are stored degree-descending, so components are
    // contiguous.
    const Var other = static_cast<Var>(3 - static_cast<int>(target) - static_cast<int>(source));
    const std::uint64_t p = F.p();
    const bool lazy = F.n() == 1 && (p - 1) * (p - 1) * f.size() < (1ULL << 32);
    const auto& terms = f.terms();
    std::vector<Term> out;
    std::vector<std::vector<const Term*>> fibers;
    std::vector<std::uint32_t> line;
    for (std::size_t lo = 0; lo < terms.size();) {
        const std::uint32_t degree = terms[lo].mono.degree();
        std::size_t hi = lo;
        fibers.assign(degree + 1, {});
        for (; hi < terms.size() && terms[hi].mono.degree() == degree; ++hi)
            fibers[terms[hi].mono.exponent(other)].push_back(&terms[hi]);
        line.resize(degree + 1);
        for (std::uint32_t w = 0; w <= degree; ++w) {
            if (fibers[w].empty()) continue;
            const std::uint32_t len = degree - w;
            std::fill(line.begin(), line.begin() + len + 1, 0);
            for (const Term* t : fibers[w]) {
                std::uint32_t* base = line.data() + t->mono.exponent(source);
                if (lazy) {
                    const std::uint32_t ct = t->coeff.code();
                    for (const auto& [k, c] : steps[t->mono.exponent(target)]) base[k] += ct * c.code();
                } else {
                    for (const auto& [k, c] : steps[t->mono.exponent(target)])
                        base[k] = F.add(Elem{base[k]}, F.mul(t->coeff, c)).code();
                }
            }
            for (std::uint32_t j = 0; j <= len; ++j) {
                const std::uint32_t code = lazy ? line[j] % static_cast<std::uint32_t>(p) : line[j];
                if (code == 0) continue;
                Monomial m;
                exponent_ref(m, other) = w;
                exponent_ref(m, source) = j;
                exponent_ref(m, target) = len - j;
                out.push_back({m, Elem{code}});
            }
        }
        lo = hi;
    }
    return Poly::from_terms(f.field(), std::move(out));
}

Poly scale_var(const Poly& f, Var v, Elem s)
{
    if (s.is_zero()) throw Error("scale_var needs a nonzero scalar");
    const Field& F = *f.field();
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) t.coeff = F.mul(t.coeff, F.pow(s, t.mono.exponent(v)));
    return Poly::from_terms(f.field(), std::move(terms));
}

Poly swap_vars(const Poly& f, Var x, Var y)
{
    std::vector<Term> terms = f.terms();
    for (auto& t : terms) std::swap(exponent_ref(t.mono, x), exponent_ref(t.mono, y));
    return Poly::from_terms(f.field(), std::move(terms));
}

Weight weight(const Monomial& m, const Field& field)
{
    const std::uint64_t w = static_cast<std::uint64_t>(m.e1) + 2ULL * m.e2;
    return Weight{static_cast<std::uint32_t>(w % (field.q() - 1))};
}

std::optional<Weight> isobaric_weight(const Poly& f)
{
    if (f.is_zero()) return Weight{0};
    const Weight w = weight(f.terms().front().mono, *f.field());
    for (const auto& t : f.terms()) {
        if (!(weight(t.mono, *f.field()) == w)) return std::nullopt;
    }
    return w;
}

std::pair<Poly, Poly> parity_split(const Poly& f)
{
    std::vector<Term> even, odd;
    for (const auto& t : f.terms()) {
        ((t.mono.e1 % 2 == 0) ? even : odd).push_back(t);
    }
    return {Poly::from_terms(f.field(), std::move(even)), Poly::from_terms(f.field(), std::move(odd))};
}

std::string to_text(const Poly& f)
{
    if (f.is_zero()) return "0";
    const Field& F = *f.field();
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        out += F.to_string(t.coeff);
        const std::array<std::uint32_t, 3> e{t.mono.e0, t.mono.e1, t.mono.e2};
        for (std::size_t i = 0; i < 3; ++i) {
            if (e[i] == 0) continue;
            out += "*a" + std::to_string(i);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

namespace {

std::uint32_t parse_exponent(std::string_view s)
{
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error("malformed exponent '" + std::string(s) + "'");
    }
    return v;
}

// Splits at top-level occurrences of any character in seps (outside parentheses).
// The separator character is kept at the front of each following piece.
std::vector<std::string> split_top(std::string_view s, std::string_view seps)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (const char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (depth < 0) throw Error("unbalanced parentheses in polynomial");
        if (depth == 0 && seps.find(ch) != std::string_view::npos) {
            out.push_back(cur);
            cur.assign(1, ch);
            continue;
        }
        cur += ch;
    }
    if (depth != 0) throw Error("unbalanced parentheses in polynomial");
    out.push_back(cur);
    return out;
}

}  // namespace

Poly parse_poly(const FieldPtr& field, std::string_view text)
{
    std::string s;
    for (const char ch : text) {
        if (ch != ' ' && ch != '\t' && ch != '\n') s += ch;
    }
    if (s.empty()) throw Error("empty polynomial text");
    const Field& F = *field;
    std::vector<Term> terms;
    for (std::string piece : split_top(s, "+-")) {
        bool negative = false;
        if (!piece.empty() && (piece[0] == '+' || piece[0] == '-')) {
            negative = piece[0] == '-';
            piece.erase(0, 1);
        }
        if (piece.empty()) {
            if (terms.empty() && !negative) continue;  // leading sign
            throw Error("empty term in polynomial text");
        }
        Term t{Monomial{}, F.one()};
        for (std::string factor : split_top(piece, "*")) {
            if (!factor.empty() && factor[0] == '*') factor.erase(0, 1);
            if (factor.empty()) throw Error("empty factor in polynomial text");
            if (factor[0] == 'a') {
                if (factor.size() < 2 || factor[1] < '0' || factor[1] > '2') {
                    throw Error("unknown variable '" + factor + "'");
                }
                std::uint32_t e = 1;
                if (factor.size() > 2) {
                    if (factor[2] != '^') throw Error("malformed factor '" + factor + "'");
                    e = parse_exponent(std::string_view(factor).substr(3));
                }
                if (factor[1] == '0') t.mono.e0 += e;
                if (factor[1] == '1') t.mono.e1 += e;
                if (factor[1] == '2') t.mono.e2 += e;
            } else if (factor == "0") {
                t.coeff = F.zero();
            } else if (factor[0] == '(' || std::isdigit(static_cast<unsigned char>(factor[0]))) {
                Elem c;
                if (factor[0] == '(' || F.n() > 1) {
                    c = F.parse(factor);
                } else {
                    c = F.from_int(static_cast<std::int64_t>(parse_exponent(factor)));
                }
                t.coeff = F.mul(t.coeff, c);
            } else {
                throw Error("malformed factor '" + factor + "'");
            }
        }
        if (negative) t.coeff = F.neg(t.coeff);
        terms.push_back(t);
    }
    return Poly::from_terms(field, std::move(terms));
}

nlohmann::json to_json(const Poly& f)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& t : f.terms()) {
        out.push_back({{"e0", t.mono.e0},
                       {"e1", t.mono.e1},
                       {"e2", t.mono.e2},
                       {"coeff", f.field()->coords(t.coeff)}});
    }
    return out;
}

Poly poly_from_json(const FieldPtr& field, const nlohmann::json& j)
{
    if (!j.is_array()) throw Error("polynomial JSON must be an array of terms");
    std::vector<Term> terms;
    for (const auto& rec : j) {
        Term t;
        t.mono.e0 = rec.at("e0").get<std::uint32_t>();
        t.mono.e1 = rec.at("e1").get<std::uint32_t>();
        t.mono.e2 = rec.at("e2").get<std::uint32_t>();
        const auto coords = rec.at("coeff").get<std::vector<std::uint32_t>>();
        t.coeff = field->from_coords(coords);
        terms.push_back(t);
    }
    return Poly::from_terms(field, std::move(terms));
}

}  // namespace invforge
