#include "invforge/action.hpp"

namespace invforge {

namespace {

// Binary quadratic form u X^2 + v XY + w Y^2 with coefficients in F[a2, a1, a0],
// each coefficient a row vector over (a2, a1, a0).
using Linear = std::array<Elem, 3>;

struct Quadratic {
    Linear xx, xy, yy;
};

Linear lin_axpy(const Field& F, const Linear& acc, Elem k, const Linear& v)
{
    Linear out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = F.add(acc[i], F.mul(k, v[i]));
    return out;
}

}  // namespace

Mat3 derive_induced(const Field& F, Elem a, Elem b, Elem c, Elem d)
{
    if (F.sub(F.mul(a, d), F.mul(b, c)).is_zero()) throw Error("singular matrix");

    // m X = b Y + d X and m Y = a Y + c X, so X' = d X + b Y, Y' = c X + a Y.
    const Elem zero = F.zero();
    const Elem one = F.one();
    const Elem two = F.from_int(2);
    const Linear var_a2{one, zero, zero};
    const Linear var_a1{zero, one, zero};
    const Linear var_a0{zero, zero, one};
    const Linear none{zero, zero, zero};

    // Squares and products of X' = (x_X, x_Y), Y' = (y_X, y_Y) as (XX, XY, YY) scalars.
    struct Form {
        Elem xx, xy, yy;
    };
    auto product = [&](Elem p_x, Elem p_y, Elem r_x, Elem r_y) {
        return Form{F.mul(p_x, r_x), F.add(F.mul(p_x, r_y), F.mul(p_y, r_x)), F.mul(p_y, r_y)};
    };
    const Form xsq = product(d, b, d, b);
    const Form xy = product(d, b, c, a);
    const Form ysq = product(c, a, c, a);

    // a0 X'^2 + 2 a1 X'Y' + a2 Y'^2
    Quadratic form{none, none, none};
    auto accumulate = [&](const Form& f, Elem scalar, const Linear& var) {
        form.xx = lin_axpy(F, form.xx, F.mul(scalar, f.xx), var);
        form.xy = lin_axpy(F, form.xy, F.mul(scalar, f.xy), var);
        form.yy = lin_axpy(F, form.yy, F.mul(scalar, f.yy), var);
    };
    accumulate(xsq, one, var_a0);
    accumulate(xy, two, var_a1);
    accumulate(ysq, one, var_a2);

    // Basis (Y^2, 2XY, X^2) gives a2' = [YY], a1' = [XY] / 2, a0' = [XX].
    const Elem half = F.inv(two);
    Mat3 out;
    out[0] = form.yy;
    for (std::size_t i = 0; i < 3; ++i) out[1][i] = F.mul(half, form.xy[i]);
    out[2] = form.xx;
    return out;
}

GroupElem::GroupElem(FieldPtr field, Elem a, Elem b, Elem c, Elem d, std::string label)
    : field_(std::move(field)),
      m_{a, b, c, d},
      induced_(derive_induced(*field_, a, b, c, d)),
      images_{Poly(field_), Poly(field_), Poly(field_)},
      steps_(factor_linear_map(*field_, induced_)),
      label_(std::move(label))
{
    const std::array<Var, 3> order{Var::a2, Var::a1, Var::a0};
    for (std::size_t row = 0; row < 3; ++row) {
        Poly img(field_);
        for (std::size_t col = 0; col < 3; ++col) {
            img += Poly::variable(field_, order[col]).scale(induced_[row][col]);
        }
        images_[static_cast<std::size_t>(order[row])] = img;
    }
    if (label_.empty()) {
        const Field& F = *field_;
        label_ = "[[" + F.to_string(a) + "," + F.to_string(b) + "],[" + F.to_string(c) + "," +
                 F.to_string(d) + "]]";
    }
}

GroupElem GroupElem::identity(const FieldPtr& field)
{
    return GroupElem(field, field->one(), field->zero(), field->zero(), field->one(), "identity");
}

GroupElem GroupElem::sigma(const FieldPtr& field, Elem c)
{
    return GroupElem(field, field->one(), c, field->zero(), field->one(),
                     "sigma(" + field->to_string(c) + ")");
}

GroupElem GroupElem::rho(const FieldPtr& field, Elem w)
{
    return GroupElem(field, w, field->zero(), field->zero(), field->one(),
                     "rho(" + field->to_string(w) + ")");
}

GroupElem GroupElem::tau(const FieldPtr& field)
{
    return GroupElem(field, field->zero(), field->one(), field->neg(field->one()), field->zero(),
                     "tau");
}

Elem GroupElem::det() const
{
    const Field& F = *field_;
    return F.sub(F.mul(m_[0], m_[3]), F.mul(m_[1], m_[2]));
}

GroupElem compose(const GroupElem& g, const GroupElem& h)
{
    const Field& F = *g.field();
    auto dot = [&](Elem x1, Elem y1, Elem x2, Elem y2) {
        return F.add(F.mul(x1, x2), F.mul(y1, y2));
    };
    return GroupElem(g.field(), dot(g.a(), g.b(), h.a(), h.c()), dot(g.a(), g.b(), h.b(), h.d()),
                     dot(g.c(), g.d(), h.a(), h.c()), dot(g.c(), g.d(), h.b(), h.d()));
}

Mat3 mat3_mul(const Field& F, const Mat3& x, const Mat3& y)
{
    Mat3 out;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Elem s = F.zero();
            for (std::size_t k = 0; k < 3; ++k) s = F.add(s, F.mul(x[i][k], y[k][j]));
            out[i][j] = s;
        }
    }
    return out;
}

Elem mat3_det(const Field& F, const Mat3& x)
{
    auto minor = [&](std::size_t r1, std::size_t r2, std::size_t c1, std::size_t c2) {
        return F.sub(F.mul(x[r1][c1], x[r2][c2]), F.mul(x[r1][c2], x[r2][c1]));
    };
    Elem out = F.mul(x[0][0], minor(1, 2, 1, 2));
    out = F.sub(out, F.mul(x[0][1], minor(1, 2, 0, 2)));
    out = F.add(out, F.mul(x[0][2], minor(1, 2, 0, 1)));
    return out;
}

std::vector<LinearStep> factor_linear_map(const Field& F, const Mat3& m)
{
    // Gauss-Jordan: R_k ... R_1 m = I, hence m = R_1^-1 ... R_k^-1 and the
    // substitution for R_1^-1 is applied first. Row r belongs to variable a_{2-r}.
    auto var = [](std::size_t row) { return static_cast<Var>(2 - row); };
    Mat3 a = m;
    std::vector<LinearStep> steps;
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t r = col;
        while (r < 3 && a[r][col].is_zero()) ++r;
        if (r == 3) throw Error("singular induced matrix");
        if (r != col) {
            std::swap(a[r], a[col]);
            steps.push_back({LinearStep::Kind::Swap, var(col), var(r), F.one()});
        }
        const Elem s = a[col][col];
        if (s != F.one()) {
            const Elem inv = F.inv(s);
            for (auto& x : a[col]) x = F.mul(x, inv);
            steps.push_back({LinearStep::Kind::Scale, var(col), var(col), s});
        }
        for (std::size_t rr = 0; rr < 3; ++rr) {
            if (rr == col || a[rr][col].is_zero()) continue;
            const Elem factor = a[rr][col];
            for (std::size_t c = 0; c < 3; ++c) a[rr][c] = F.sub(a[rr][c], F.mul(factor, a[col][c]));
            steps.push_back({LinearStep::Kind::Shear, var(rr), var(col), factor});
        }
    }
    return steps;
}

Poly apply(const GroupElem& g, const Poly& f)
{
    Poly out = f;
    for (const auto& step : g.steps()) {
        switch (step.kind) {
        case LinearStep::Kind::Shear:
            out = shear(out, step.target, step.source, step.factor);
            break;
        case LinearStep::Kind::Scale:
            out = scale_var(out, step.target, step.factor);
            break;
        case LinearStep::Kind::Swap:
            out = swap_vars(out, step.target, step.source);
            break;
        }
    }
    return out;
}

Poly apply_by_substitution(const GroupElem& g, const Poly& f)
{
    return substitute_all(f, g.images());
}

std::vector<GroupElem> enumerate_P(const FieldPtr& field)
{
    std::vector<GroupElem> out;
    for (const Elem c : field->elements()) out.push_back(GroupElem::sigma(field, c));
    return out;
}

std::vector<GroupElem> enumerate_SL2(const FieldPtr& field)
{
    if (field->q() > kMaxEnumerationQ) {
        throw Error("full SL_2 enumeration is limited to q <= " + std::to_string(kMaxEnumerationQ));
    }
    const Field& F = *field;
    std::vector<GroupElem> out;
    const auto elems = F.elements();
    for (const Elem a : elems) {
        for (const Elem b : elems) {
            for (const Elem c : elems) {
                for (const Elem d : elems) {
                    if (F.sub(F.mul(a, d), F.mul(b, c)) == F.one()) {
                        out.emplace_back(field, a, b, c, d);
                    }
                }
            }
        }
    }
    return out;
}

std::vector<GroupElem> generators_SL2(const FieldPtr& field)
{
    std::vector<GroupElem> out = enumerate_P(field);
    out.push_back(GroupElem::tau(field));
    return out;
}

}  // namespace invforge
