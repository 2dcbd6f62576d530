#include <hdt/reduction_3sum.hpp>

#include <stdexcept>

namespace hdt {

namespace {

Rational scaled_eps(const Reduction3SumParams& params, long factor) {
    return params.epsilon * Rational(factor);
}

void require_on_axis(const PointSet& s, const char* who) {
    for (const auto& p : s.points)
        if (!p.y.is_zero())
            throw std::invalid_argument(std::string(who) + ": gadget points must lie on the x-axis");
}

}  // namespace

Reduction3SumParams Reduction3SumParams::make(const Conv3SumInstance& inst) {
    inst.validate();
    Reduction3SumParams params;
    params.n = inst.n();
    params.max_value = inst.max_value;
    mpz_class den(4);
    den *= static_cast<long>(inst.max_value);
    den *= static_cast<unsigned long>(params.n);
    den *= static_cast<unsigned long>(params.n);
    params.rho = Rational(mpz_class(1), den);
    params.epsilon = params.rho.pow(4);
    params.epsilon_15 = params.rho.pow(6);
    Rational n_sq(static_cast<long>(params.n * params.n));
    params.delta = Rational(1) + Rational(4) * n_sq * params.epsilon.pow(2);
    return params;
}

GadgetPair low_level_gadget(const Conv3SumInstance& inst, const Reduction3SumParams& params) {
    inst.validate();
    if (inst.n() != params.n)
        throw std::invalid_argument("low_level_gadget: instance size does not match params");
    GadgetPair g;
    g.a.label = "A_low";
    g.b.label = "B_low";
    for (std::size_t i = 0; i < params.n; ++i) {
        Rational base = scaled_eps(params, static_cast<long>(2 * i)) +
                        params.epsilon_15 * Rational(inst.x[i]);
        g.a.points.emplace_back(ExactScalar(base), ExactScalar(Rational(0)));
        g.a.points.emplace_back(ExactScalar(base + params.epsilon), ExactScalar(Rational(0)));
        Rational fill = params.epsilon * (Rational(static_cast<long>(2 * i)) + Rational(3, 2));
        g.a.points.emplace_back(ExactScalar(fill), ExactScalar(Rational(0)));
    }
    g.b.points.emplace_back(ExactScalar(Rational(-1)), ExactScalar(Rational(0)));
    g.b.points.emplace_back(ExactScalar(Rational(1) + params.epsilon), ExactScalar(Rational(0)));
    return g;
}

PointSet rotate90(const PointSet& s) {
    PointSet out;
    out.label = s.label;
    out.points.reserve(s.points.size());
    for (const auto& p : s.points) out.points.emplace_back(-p.y, p.x);
    return out;
}

GadgetPair diagonal_transform(const PointSet& a_low, const PointSet& b_low,
                              const Reduction3SumParams& params) {
    require_on_axis(a_low, "diagonal_transform");
    require_on_axis(b_low, "diagonal_transform");

    GadgetPair g;
    g.a.label = a_low.label;
    g.b.label = b_low.label;

    // A side: scale by 1/sqrt(2) then rotate by pi/4; combined, (x, 0)
    // lands at (x/2, x/2) with rational coordinates.
    ExactScalar half{Rational(1, 2)};
    for (const auto& p : a_low.points) {
        ExactScalar c = p.x * half;
        g.a.points.emplace_back(c, c);
    }

    // B side: scale so the point gap becomes 2 + eps/sqrt(2), anchored at
    // the left point: x -> -1 + s (x + 1) with s = (2 + eps/sqrt(2))/(2 + eps),
    // then rotate. Anchoring keeps the left point at diagonal distance
    // exactly 1 from the origin; a scale about the origin would shift the
    // feasibility window by an eps-order offset and break the stripe
    // alignment.
    ExactScalar scale = ExactScalar(Rational(2), params.epsilon * Rational(1, 2)) /
                        ExactScalar(Rational(2) + params.epsilon);
    ExactScalar inv_sqrt2{Rational(0), Rational(1, 2)};  // 1/sqrt(2)
    for (const auto& p : b_low.points) {
        ExactScalar c = (scale * (p.x + ExactScalar(1)) - ExactScalar(1)) * inv_sqrt2;
        g.b.points.emplace_back(c, c);
    }
    return g;
}

GadgetPair translation_gadget_3sum(const Reduction3SumParams& params) {
    Rational inner = Rational(-1) + scaled_eps(params, static_cast<long>(2 * params.n - 1));
    GadgetPair g;
    g.a.label = "A_trans";
    g.b.label = "B_trans";
    // Diagonal backstop at distance 1 - (2n-1)eps/sqrt(2) from the origin
    // along the negative diagonal. It caps tau_x + tau_y at about
    // (2n-1)eps, which keeps the diagonal gadget's projected translation
    // inside that gadget's span; the individual caps on tau_x and tau_y
    // follow from this together with the lower bounds. Without the sum cap
    // the diagonal stripe constraint disengages for large tau_x + tau_y.
    ExactScalar backstop{scaled_eps(params, static_cast<long>(2 * params.n - 1)) * Rational(1, 2),
                         Rational(-1, 2)};
    g.a.points.emplace_back(backstop, backstop);                                  // diagonal
    g.a.points.emplace_back(ExactScalar(Rational(1)), ExactScalar(Rational(0)));  // right
    g.a.points.emplace_back(ExactScalar(Rational(0)), ExactScalar(inner));        // bottom
    g.a.points.emplace_back(ExactScalar(Rational(0)), ExactScalar(Rational(1)));  // top
    g.b.points.emplace_back(ExactScalar(Rational(0)), ExactScalar(Rational(0)));
    return g;
}

ReductionOutput reduce_conv3sum(const Conv3SumInstance& inst) {
    Reduction3SumParams params = Reduction3SumParams::make(inst);

    GadgetPair column = low_level_gadget(inst, params);
    GadgetPair row{rotate90(column.a), rotate90(column.b)};
    GadgetPair diagonal = diagonal_transform(column.a, column.b, params);
    GadgetPair trans = translation_gadget_3sum(params);

    ReductionOutput out;
    out.norm = Norm::l2();
    out.delta = params.delta;
    out.a.label = "A";
    out.b.label = "B";

    auto append = [&](PointSet& dst, std::vector<std::string>& tags, const PointSet& src,
                      long x_offset, const std::string& gadget,
                      const std::vector<std::string>& roles) {
        Point shift{ExactScalar(Rational(x_offset)), ExactScalar(Rational(0))};
        PointSet moved = translate(src, shift);
        for (std::size_t k = 0; k < moved.points.size(); ++k) {
            dst.points.push_back(moved.points[k]);
            tags.push_back(gadget + ":" + roles[k % roles.size()] +
                           (roles.size() < moved.points.size()
                                ? "(" + std::to_string(k / roles.size()) + ")"
                                : ""));
        }
    };

    const std::vector<std::string> a_roles{"number1", "number2", "filling"};
    const std::vector<std::string> b_roles{"anchorL", "anchorR"};
    const std::vector<std::string> t_roles{"diagonal", "right", "bottom", "top"};
    const std::vector<std::string> c_roles{"center"};

    append(out.a, out.provenance_a, column.a, 0, "ColumnGadget", a_roles);
    append(out.a, out.provenance_a, row.a, 10, "RowGadget", a_roles);
    append(out.a, out.provenance_a, diagonal.a, 20, "DiagonalGadget", a_roles);
    append(out.a, out.provenance_a, trans.a, 30, "TranslationGadget", t_roles);

    append(out.b, out.provenance_b, column.b, 0, "ColumnGadget", b_roles);
    append(out.b, out.provenance_b, row.b, 10, "RowGadget", b_roles);
    append(out.b, out.provenance_b, diagonal.b, 20, "DiagonalGadget", b_roles);
    append(out.b, out.provenance_b, trans.b, 30, "TranslationGadget", c_roles);
    return out;
}

Point witness_translation(std::size_t i, std::size_t j, const Conv3SumInstance& inst,
                          const Reduction3SumParams& params) {
    if (i + j >= inst.n())
        throw std::out_of_range("witness_translation: require i + j < n");
    Rational tx = scaled_eps(params, static_cast<long>(2 * i)) +
                  params.epsilon_15 * Rational(inst.x[i]);
    Rational ty = scaled_eps(params, static_cast<long>(2 * j)) +
                  params.epsilon_15 * Rational(inst.x[j]);
    return {ExactScalar(tx), ExactScalar(ty)};
}

}  // namespace hdt
