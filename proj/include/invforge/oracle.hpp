#pragma once

// Brute-force invariant dimensions by exact linear algebra over F_q, compared
// against the Hilbert series of the hypersurface structure
// (1 + t^e) / prod_i (1 - t^{d_i}).

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "invforge/action.hpp"
#include "invforge/poly.hpp"

namespace invforge {

class BudgetError : public Error {
public:
    using Error::Error;
};

enum class GroupTag { P, SL2 };

std::string to_string(GroupTag tag);

/// Degree-d monomials in descending grevlex order.
std::vector<Monomial> monomials_of_degree(std::uint32_t d);

/// Dense matrix over F_q, row-major.
class FqMatrix {
public:
    FqMatrix(FieldPtr field, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Basis of {v : M v = 0} by Gaussian elimination on a copy. Every basis
    /// vector is checked against the original matrix before returning.
    std::vector<std::vector<Elem>> nullspace() const;
    std::size_t rank() const;

private:
    std::size_t reduce(std::vector<std::size_t>& pivots, std::vector<Elem>& work) const;

    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

/// Stacks f -> g(f) - f over the degree-d monomial basis for every generator.
FqMatrix invariance_matrix(const FieldPtr& field, std::span<const GroupElem> generators, std::uint32_t d);

std::size_t invariant_dimension(const FieldPtr& field, std::span<const GroupElem> generators,
                                std::uint32_t d);

/// Basis of the degree-d fixed space, each element re-certified invariant.
std::vector<Poly> invariant_basis(const FieldPtr& field, std::span<const GroupElem> generators,
                                  std::uint32_t d);

/// Coefficients of (1 + t^e) / prod (1 - t^{d_i}) through max_degree.
std::vector<std::uint64_t> hilbert_hypersurface(std::span<const std::uint32_t> hsop_degrees,
                                                std::uint32_t module_gen_degree,
                                                std::uint32_t max_degree);

struct HypersurfaceShape {
    std::vector<std::uint32_t> hsop_degrees;
    std::uint32_t module_gen_degree;
};

/// P: hsop {a0, Delta, gamma0}, extra generator beta.
/// SL2: hsop {Delta, J, Gamma}, extra generator B.
HypersurfaceShape hypersurface_shape(GroupTag tag, std::uint32_t q);
std::vector<GroupElem> oracle_generators(const FieldPtr& field, GroupTag tag);

struct DimRow {
    std::uint32_t degree;
    std::uint64_t observed;
    std::uint64_t predicted;
    bool pass() const { return observed == predicted; }
};

struct DimTable {
    GroupTag tag;
    std::uint32_t q;
    std::vector<DimRow> rows;

    bool pass() const;
    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// Default oracle degree for a given q, lowered until it fits kOracleWorkBudget.
std::uint32_t default_max_degree(std::uint32_t q);

/// Rough elimination cost for checking `degree` with the tag's generators.
double oracle_work(GroupTag tag, std::uint32_t q, std::uint32_t degree);
inline constexpr double kOracleWorkBudget = 2.0e9;

/// Observed vs predicted for every degree 0..max_degree. Throws BudgetError
/// when the largest elimination exceeds kOracleWorkBudget.
DimTable compare(const FieldPtr& field, GroupTag tag, std::uint32_t max_degree);
/// Same, restricted to the listed degrees.
DimTable compare_at(const FieldPtr& field, GroupTag tag, std::span<const std::uint32_t> degrees);

/// Numerator of the observed series over the hsop, truncated: sum_k N_k t^k =
/// (sum_d dim_d t^d) * prod (1 - t^{d_i}). Requires a table covering 0..max.
std::vector<std::int64_t> observed_numerator(const DimTable& table);
/// Sum of the observed numerator coefficients, i.e. the free-module rank over
/// the hsop when the table reaches past the numerator's degree.
std::int64_t observed_free_rank(const DimTable& table);

}  // namespace invforge
