#include "invforge/oracle.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <unordered_map>

namespace invforge {

std::string to_string(GroupTag tag)
{
    return tag == GroupTag::P ? "P" : "SL2";
}

std::vector<Monomial> monomials_of_degree(std::uint32_t d)
{
    std::vector<Monomial> out;
    for (std::uint32_t e0 = 0; e0 <= d; ++e0) {
        for (std::uint32_t e1 = 0; e0 + e1 <= d; ++e1) out.push_back({e0, e1, d - e0 - e1});
    }
    return out;
}

FqMatrix::FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols)
{
}

std::size_t FqMatrix::reduce(std::vector<std::size_t>& pivots, std::vector<Elem>& w) const
{
    const Field& F = *field_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t r = rank;
        while (r < rows_ && w[r * cols_ + col].is_zero()) ++r;
        if (r == rows_) continue;
        if (r != rank) {
            std::swap_ranges(w.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                             w.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_),
                             w.begin() + static_cast<std::ptrdiff_t>(rank * cols_));
        }
        Elem* prow = &w[rank * cols_];
        const Elem s = F.inv(prow[col]);
        for (std::size_t c = col; c < cols_; ++c) prow[c] = F.mul(prow[c], s);
        for (std::size_t rr = 0; rr < rows_; ++rr) {
            if (rr == rank) continue;
            Elem* row = &w[rr * cols_];
            const Elem factor = row[col];
            if (factor.is_zero()) continue;
            const Elem nf = F.neg(factor);
            for (std::size_t c = col; c < cols_; ++c) {
                if (!prow[c].is_zero()) row[c] = F.add(row[c], F.mul(nf, prow[c]));
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    return rank;
}

std::size_t FqMatrix::rank() const
{
    std::vector<Elem> work = data_;
    std::vector<std::size_t> pivots;
    return reduce(pivots, work);
}

std::vector<std::vector<Elem>> FqMatrix::nullspace() const
{
    const Field& F = *field_;
    std::vector<Elem> work = data_;
    std::vector<std::size_t> pivots;
    reduce(pivots, work);

    std::vector<bool> is_pivot(cols_, false);
    for (const auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(cols_, F.zero());
        v[free] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(work[r * cols_ + free]);
        basis.push_back(std::move(v));
    }

    for (const auto& v : basis) {
        for (std::size_t r = 0; r < rows_; ++r) {
            Elem s = F.zero();
            for (std::size_t c = 0; c < cols_; ++c) s = F.add(s, F.mul(at(r, c), v[c]));
            if (!s.is_zero()) throw Error("nullspace vector failed the M v = 0 check");
        }
    }
    return basis;
}

FqMatrix invariance_matrix(const FieldPtr& field, std::span<const GroupElem> generators, std::uint32_t d)
{
    const auto monos = monomials_of_degree(d);
    const std::size_t m = monos.size();
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index[monos[i].key()] = i;

    FqMatrix mat(field, generators.size() * m, m);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        for (std::size_t j = 0; j < m; ++j) {
            const Poly mono = Poly::monomial(field, monos[j], field->one());
            const Poly diff = apply(generators[g], mono) - mono;
            for (const auto& t : diff.terms()) mat.at(g * m + index.at(t.mono.key()), j) = t.coeff;
        }
    }
    return mat;
}

std::size_t invariant_dimension(const FieldPtr& field, std::span<const GroupElem> generators,
                                std::uint32_t d)
{
    const FqMatrix mat = invariance_matrix(field, generators, d);
    return mat.cols() - mat.rank();
}

std::vector<Poly> invariant_basis(const FieldPtr& field, std::span<const GroupElem> generators,
                                  std::uint32_t d)
{
    const auto monos = monomials_of_degree(d);
    const FqMatrix mat = invariance_matrix(field, generators, d);
    std::vector<Poly> out;
    for (const auto& v : mat.nullspace()) {
        std::vector<Term> terms;
        for (std::size_t j = 0; j < v.size(); ++j) terms.push_back({monos[j], v[j]});
        Poly f = Poly::from_terms(field, std::move(terms));
        for (const auto& g : generators) {
            if (!(apply(g, f) == f)) throw Error("oracle basis element is not invariant");
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::uint64_t> hilbert_hypersurface(std::span<const std::uint32_t> hsop_degrees,
                                                std::uint32_t module_gen_degree,
                                                std::uint32_t max_degree)
{
    std::vector<std::uint64_t> series(max_degree + 1, 0);
    series[0] = 1;
    for (const auto d : hsop_degrees) {
        if (d == 0) throw Error("hsop degrees must be positive");
        for (std::uint32_t k = d; k <= max_degree; ++k) series[k] += series[k - d];
    }
    std::vector<std::uint64_t> out = series;
    for (std::uint32_t k = module_gen_degree; k <= max_degree; ++k) out[k] += series[k - module_gen_degree];
    return out;
}

HypersurfaceShape hypersurface_shape(GroupTag tag, std::uint32_t q)
{
    if (tag == GroupTag::P) return {{1, 2, q}, q};
    const std::uint32_t n = q * (q - 1) / 2;
    return {{2, q + 1, n}, q + n};
}

std::vector<GroupElem> oracle_generators(const FieldPtr& field, GroupTag tag)
{
    return tag == GroupTag::P ? enumerate_P(field) : generators_SL2(field);
}

bool DimTable::pass() const
{
    return std::all_of(rows.begin(), rows.end(), [](const DimRow& r) { return r.pass(); });
}

std::string DimTable::to_text() const
{
    std::ostringstream os;
    os << "group " << invforge::to_string(tag) << ", q=" << q << "\n";
    os << std::setw(6) << "degree" << " | " << std::setw(8) << "observed" << " | " << std::setw(9)
       << "predicted" << " | pass\n";
    for (const auto& r : rows) {
        os << std::setw(6) << r.degree << " | " << std::setw(8) << r.observed << " | " << std::setw(9)
           << r.predicted << " | " << (r.pass() ? "yes" : "NO") << "\n";
    }
    return os.str();
}

nlohmann::json DimTable::to_json() const
{
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"degree", r.degree},
                             {"observed", r.observed},
                             {"predicted", r.predicted},
                             {"pass", r.pass()}});
    }
    return {{"group", invforge::to_string(tag)}, {"q", q}, {"rows", rows_json}, {"pass", pass()}};
}

std::uint32_t default_max_degree(std::uint32_t q)
{
    const auto shape = hypersurface_shape(GroupTag::SL2, q);
    std::uint32_t d = q + 1;
    if (q == 3) d = 2 * shape.module_gen_degree;
    if (q == 5) d = shape.module_gen_degree + q;
    // Large fields: the largest degree the SL_2 oracle can afford.
    while (d > 0 && oracle_work(GroupTag::SL2, q, d) > kOracleWorkBudget) --d;
    return d;
}

double oracle_work(GroupTag tag, std::uint32_t q, std::uint32_t degree)
{
    const double m = (static_cast<double>(degree) + 1.0) * (static_cast<double>(degree) + 2.0) / 2.0;
    const double gens = tag == GroupTag::P ? q : q + 1.0;
    return gens * m * m * m;
}

DimTable compare_at(const FieldPtr& field, GroupTag tag, std::span<const std::uint32_t> degrees)
{
    const std::uint32_t q = field->q();
    for (const auto d : degrees) {
        if (oracle_work(tag, q, d) > kOracleWorkBudget) {
            throw BudgetError("oracle budget exceeded: degree " + std::to_string(d) + " for group " +
                              to_string(tag) + " at q=" + std::to_string(q));
        }
    }
    const auto shape = hypersurface_shape(tag, q);
    const std::uint32_t top = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    const auto predicted = hilbert_hypersurface(shape.hsop_degrees, shape.module_gen_degree, top);
    const auto gens = oracle_generators(field, tag);
    DimTable table{tag, q, {}};
    for (const auto d : degrees) {
        table.rows.push_back({d, invariant_dimension(field, gens, d), predicted[d]});
    }
    return table;
}

DimTable compare(const FieldPtr& field, GroupTag tag, std::uint32_t max_degree)
{
    std::vector<std::uint32_t> degrees(max_degree + 1);
    for (std::uint32_t d = 0; d <= max_degree; ++d) degrees[d] = d;
    return compare_at(field, tag, degrees);
}

std::vector<std::int64_t> observed_numerator(const DimTable& table)
{
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        if (table.rows[i].degree != i) throw Error("numerator needs a table covering every degree from 0");
    }
    std::vector<std::int64_t> num;
    for (const auto& r : table.rows) num.push_back(static_cast<std::int64_t>(r.observed));
    for (const auto d : hypersurface_shape(table.tag, table.q).hsop_degrees) {
        for (std::size_t k = num.size(); k-- > d;) num[k] -= num[k - d];
    }
    return num;
}

std::int64_t observed_free_rank(const DimTable& table)
{
    std::int64_t sum = 0;
    for (const auto c : observed_numerator(table)) sum += c;
    return sum;
}

}  // namespace invforge
