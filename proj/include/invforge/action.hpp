#pragma once

// GL_2(F_q) acting on the coordinate ring F[a2, a1, a0] of the second
// symmetric power. Actions are on the right: applying g then h to f equals
// applying the product g*h.

#include <array>
#include <string>
#include <vector>

#include "invforge/gf.hpp"
#include "invforge/poly.hpp"

namespace invforge {

/// Rows and columns indexed (a2, a1, a0). Row r holds the image of the r-th
/// variable as a linear form in (a2, a1, a0).
using Mat3 = std::array<std::array<Elem, 3>, 3>;

/// Substitutes [[a, b], [c, d]] into a0 X^2 + 2 a1 XY + a2 Y^2 with
/// X = (0, 1)^T and Y = (1, 0)^T, and reads the new coefficients off the basis
/// (Y^2, 2XY, X^2). Throws Error for a singular matrix.
Mat3 derive_induced(const Field& field, Elem a, Elem b, Elem c, Elem d);

/// One elementary substitution: a shear target -> target + factor * source,
/// a scaling target -> factor * target, or a swap of target and source.
struct LinearStep {
    enum class Kind { Shear, Scale, Swap };
    Kind kind;
    Var target;
    Var source;
    Elem factor;
};

/// Writes an invertible induced matrix as a product of elementary matrices,
/// returned in the order they are to be applied.
std::vector<LinearStep> factor_linear_map(const Field& field, const Mat3& m);

class GroupElem {
public:
    GroupElem(FieldPtr field, Elem a, Elem b, Elem c, Elem d, std::string label = {});

    static GroupElem identity(const FieldPtr& field);
    /// [[1, c], [0, 1]]
    static GroupElem sigma(const FieldPtr& field, Elem c);
    /// [[w, 0], [0, 1]]
    static GroupElem rho(const FieldPtr& field, Elem w);
    /// [[0, 1], [-1, 0]]
    static GroupElem tau(const FieldPtr& field);

    const FieldPtr& field() const { return field_; }
    Elem a() const { return m_[0]; }
    Elem b() const { return m_[1]; }
    Elem c() const { return m_[2]; }
    Elem d() const { return m_[3]; }
    Elem det() const;
    const Mat3& induced() const { return induced_; }
    const std::string& label() const { return label_; }

    /// Images of a0, a1, a2 as linear forms.
    const std::array<Poly, 3>& images() const { return images_; }
    const std::vector<LinearStep>& steps() const { return steps_; }

    friend bool operator==(const GroupElem& g, const GroupElem& h) { return g.m_ == h.m_; }

private:
    FieldPtr field_;
    std::array<Elem, 4> m_;
    Mat3 induced_;
    std::array<Poly, 3> images_;
    std::vector<LinearStep> steps_;
    std::string label_;
};

/// Matrix product g * h.
GroupElem compose(const GroupElem& g, const GroupElem& h);
Mat3 mat3_mul(const Field& field, const Mat3& x, const Mat3& y);
Elem mat3_det(const Field& field, const Mat3& x);

/// Applies g through its elementary factorization.
Poly apply(const GroupElem& g, const Poly& f);
/// Applies g by one simultaneous substitution of the image linear forms.
Poly apply_by_substitution(const GroupElem& g, const Poly& f);

/// Largest q for which the full SL_2(F_q) may be enumerated.
inline constexpr std::uint32_t kMaxEnumerationQ = 9;

std::vector<GroupElem> enumerate_P(const FieldPtr& field);
std::vector<GroupElem> enumerate_SL2(const FieldPtr& field);
/// All sigma_c followed by tau.
std::vector<GroupElem> generators_SL2(const FieldPtr& field);

}  // namespace invforge
