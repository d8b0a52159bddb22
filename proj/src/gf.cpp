#include "invforge/gf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace invforge {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over F_p.
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Coeffs digits(std::uint64_t code, std::uint32_t p, std::uint32_t len)
{
    Coeffs out(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return out;
}

std::uint32_t pack(const Coeffs& c, std::uint32_t p)
{
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
}

// Schoolbook product in F_p[x]/(modulus), used only while building tables.
Coeffs slow_mul(const Coeffs& a, const Coeffs& b, const Coeffs& modulus, std::uint32_t p)
{
    Coeffs prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    Coeffs r = poly_mod(std::move(prod), modulus, p);
    r.resize(modulus.size() - 1, 0);
    return r;
}

}  // namespace

bool is_prime(std::uint64_t v)
{
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) return false;
    }
    return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p)
{
    Coeffs f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
    if (deg == 1) return true;
    for (std::uint32_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Coeffs g = digits(code, p, d);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t n, std::uint64_t max_q)
{
    if (p == 2) throw Error("characteristic 2 unsupported");
    if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
    if (n == 0) throw Error("extension degree n must be positive");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > max_q) {
            throw Error("q = " + std::to_string(p) + "^" + std::to_string(n) +
                        " exceeds the supported bound " + std::to_string(max_q));
        }
    }

    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->n_ = n;
    f->q_ = static_cast<std::uint32_t>(q);

    if (n == 1) {
        f->modulus_ = {0, 1};
    } else {
        // Constant term is the most significant digit of the search index.
        for (std::uint64_t idx = 0; idx < q; ++idx) {
            Coeffs m(n + 1, 0);
            std::uint64_t rest = idx;
            for (std::uint32_t i = n; i-- > 0;) {
                m[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            m[n] = 1;
            if (m[0] != 0 && is_irreducible_mod_p(m, p)) {
                f->modulus_ = m;
                break;
            }
        }
        if (f->modulus_.empty()) throw Error("no irreducible modulus found");
    }

    const std::uint32_t qq = f->q_;
    f->add_.resize(static_cast<std::size_t>(qq) * qq);
    f->neg_.resize(qq);
    for (std::uint32_t a = 0; a < qq; ++a) {
        const Coeffs ca = digits(a, p, n);
        Coeffs cn(n);
        for (std::uint32_t i = 0; i < n; ++i) cn[i] = (p - ca[i]) % p;
        f->neg_[a] = pack(cn, p);
        for (std::uint32_t b = 0; b < qq; ++b) {
            const Coeffs cb = digits(b, p, n);
            Coeffs cs(n);
            for (std::uint32_t i = 0; i < n; ++i) cs[i] = (ca[i] + cb[i]) % p;
            f->add_[static_cast<std::size_t>(a) * qq + b] = pack(cs, p);
        }
    }

    // Modulus reduced to degree < n is what slow_mul expects; for n = 1 the
    // modulus x makes every element a constant.
    const Coeffs& modulus = f->modulus_;
    std::vector<std::uint32_t> powers;
    for (std::uint32_t cand = 1; cand < qq; ++cand) {
        const Coeffs g = digits(cand, p, n);
        Coeffs acc = g;
        powers.assign(1, 1);
        bool full = true;
        for (std::uint32_t k = 1; k < qq - 1; ++k) {
            const std::uint32_t code = pack(acc, p);
            if (code == 1) {
                full = false;
                break;
            }
            powers.push_back(code);
            acc = slow_mul(acc, g, modulus, p);
        }
        if (full && pack(acc, p) == 1) break;
        powers.clear();
    }
    if (powers.size() != qq - 1) throw Error("no generator of the unit group found");

    f->exp_.resize(2 * static_cast<std::size_t>(qq - 1));
    f->log_.assign(qq, 0);
    for (std::uint32_t i = 0; i < qq - 1; ++i) {
        f->exp_[i] = Elem{powers[i]};
        f->exp_[i + qq - 1] = Elem{powers[i]};
        f->log_[powers[i]] = i;
    }
    return f;
}

Elem Field::from_int(std::int64_t v) const
{
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coords(std::span<const std::uint32_t> c) const
{
    if (c.size() != n_) throw Error("coordinate vector has wrong length");
    Coeffs v(c.begin(), c.end());
    for (auto x : v) {
        if (x >= p_) throw Error("coordinate out of range");
    }
    return Elem{pack(v, p_)};
}

std::vector<std::uint32_t> Field::coords(Elem x) const
{
    return digits(x.code(), p_, n_);
}

Elem Field::inv(Elem a) const
{
    if (a.is_zero()) throw Error("division by zero in F_" + std::to_string(q_));
    return exp_[(q_ - 1 - log_[a.code()]) % (q_ - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const
{
    if (e == 0) return one();
    if (a.is_zero()) return zero();
    return exp_[(static_cast<std::uint64_t>(log_[a.code()]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t Field::log(Elem x) const
{
    if (x.is_zero()) throw Error("logarithm of zero");
    return log_[x.code()];
}

std::uint32_t Field::multiplicative_order(Elem x) const
{
    if (x.is_zero()) throw Error("zero has no multiplicative order");
    const std::uint32_t l = log_[x.code()];
    std::uint32_t a = q_ - 1, b = l;
    while (b != 0) {
        const std::uint32_t t = a % b;
        a = b;
        b = t;
    }
    return (q_ - 1) / a;
}

bool Field::is_quadratic_residue(Elem x) const
{
    if (x.is_zero()) throw Error("zero is neither a residue nor a nonresidue");
    return log_[x.code()] % 2 == 0;
}

std::vector<Elem> Field::elements() const
{
    std::vector<Elem> out;
    out.reserve(q_);
    for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(c);
    return out;
}

std::vector<Elem> Field::units() const
{
    std::vector<Elem> out;
    out.reserve(q_ - 1);
    for (std::uint32_t c = 1; c < q_; ++c) out.emplace_back(c);
    return out;
}

std::vector<Elem> Field::residues() const
{
    std::vector<Elem> out;
    for (std::uint32_t c = 1; c < q_; ++c) {
        if (is_quadratic_residue(Elem{c})) out.emplace_back(c);
    }
    return out;
}

std::vector<Elem> Field::nonresidues() const
{
    std::vector<Elem> out;
    for (std::uint32_t c = 1; c < q_; ++c) {
        if (!is_quadratic_residue(Elem{c})) out.emplace_back(c);
    }
    return out;
}

bool Field::same_as(const Field& other) const
{
    return this == &other || (p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_);
}

std::string Field::to_string(Elem x) const
{
    if (n_ == 1) return std::to_string(x.code());
    const Coeffs c = coords(x);
    std::string out = "(";
    bool first = true;
    for (std::uint32_t i = 0; i < n_; ++i) {
        if (c[i] == 0) continue;
        if (!first) out += "+";
        first = false;
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    if (first) out += "0";
    out += ")";
    return out;
}

Elem Field::parse(std::string_view text) const
{
    auto parse_uint = [](std::string_view s) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            throw Error("malformed field element '" + std::string(s) + "'");
        }
        return v;
    };
    if (text.empty()) throw Error("empty field element");
    if (text.front() != '(') {
        const std::uint32_t v = parse_uint(text);
        if (v >= p_) throw Error("field element out of range");
        return Elem{v};
    }
    if (text.back() != ')') throw Error("unbalanced field element '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    Coeffs c(n_, 0);
    while (!body.empty()) {
        const std::size_t plus = body.find('+');
        std::string_view part = body.substr(0, plus);
        body = plus == std::string_view::npos ? std::string_view{} : body.substr(plus + 1);
        std::uint32_t coeff = 1, power = 0;
        const std::size_t xpos = part.find('x');
        if (xpos == std::string_view::npos) {
            coeff = parse_uint(part);
        } else {
            if (xpos > 0) {
                if (part[xpos - 1] != '*') throw Error("malformed field element");
                coeff = parse_uint(part.substr(0, xpos - 1));
            }
            power = 1;
            std::string_view tail = part.substr(xpos + 1);
            if (!tail.empty()) {
                if (tail.front() != '^') throw Error("malformed field element");
                power = parse_uint(tail.substr(1));
            }
        }
        if (power >= n_ || coeff >= p_) throw Error("field element out of range");
        c[power] = coeff;
    }
    return Elem{pack(c, p_)};
}

std::string Field::describe() const
{
    std::ostringstream os;
    os << "F_" << q_ << " (p=" << p_ << ", n=" << n_;
    if (n_ > 1) {
        os << ", modulus ";
        bool first = true;
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            if (modulus_[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || modulus_[i] != 1) os << modulus_[i];
            if (i > 0) os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    os << ", omega=" << to_string(omega()) << ")";
    return os.str();
}

}  // namespace invforge
