#include <hdt/reduction_ov.hpp>

#include <algorithm>
#include <stdexcept>

namespace hdt {

namespace {

Rational reciprocal_of(unsigned long factor, std::size_t m, std::size_t n, std::size_t d) {
    mpz_class den(factor);
    den *= static_cast<unsigned long>(m);
    den *= static_cast<unsigned long>(n);
    den *= static_cast<unsigned long>(d);
    return Rational(mpz_class(1), den);
}

bool all_zeros(const std::vector<std::uint8_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return b == 0; });
}

bool all_ones(const std::vector<std::uint8_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return b == 1; });
}

Point shift_for(std::size_t i, const OvReductionParams& params, bool left) {
    // Row offset of the i-th (1-based) vector gadget of A.
    Rational y = params.epsilon * Rational(static_cast<long>(2 * params.d * i));
    Rational half_eps = params.epsilon * Rational(1, 2);
    Rational x = left ? -(Rational(1) + half_eps) : (Rational(1) + half_eps);
    return {ExactScalar(x), ExactScalar(y)};
}

}  // namespace

OvReductionParams OvReductionParams::for_norm(const Norm& norm, std::size_t m, std::size_t n,
                                              std::size_t d) {
    if (m == 0 || n == 0 || d == 0)
        throw std::invalid_argument("OvReductionParams: m, n, d must be >= 1");
    OvReductionParams params;
    params.norm = norm;
    params.m = m;
    params.n = n;
    params.d = d;
    if (norm.kind == Norm::Kind::L1 || norm.kind == Norm::Kind::Linf) {
        params.p = 1;
        params.epsilon = reciprocal_of(20, m, n, d);
    } else {
        params.p = norm.p;
        params.epsilon = reciprocal_of(40ul * static_cast<unsigned long>(norm.p), m, n, d);
    }
    params.spacing = params.epsilon.pow(static_cast<unsigned>(2 * params.p));
    return params;
}

OvReductionParams OvReductionParams::with_epsilon(const Norm& norm, std::size_t m, std::size_t n,
                                                  std::size_t d, Rational epsilon) {
    OvReductionParams params = for_norm(norm, m, n, d);
    if (epsilon.sign() <= 0)
        throw std::invalid_argument("OvReductionParams: epsilon must be positive");
    params.epsilon = std::move(epsilon);
    params.spacing = params.epsilon.pow(static_cast<unsigned>(2 * params.p));
    return params;
}

PointSet vector_gadget(const std::vector<std::uint8_t>& v, const OvReductionParams& params) {
    if (v.size() != params.d)
        throw std::invalid_argument("vector_gadget: vector dimension does not match params");
    PointSet out;
    out.points.reserve(v.size());
    for (std::size_t i = 1; i <= v.size(); ++i) {
        if (v[i - 1] > 1) throw std::invalid_argument("vector_gadget: entries must be 0/1");
        Rational x = (v[i - 1] == 0) ? params.spacing : Rational(0);
        Rational y = params.epsilon * Rational(static_cast<long>(i));
        out.points.emplace_back(ExactScalar(x), ExactScalar(y));
    }
    return out;
}

PointSet mirrored_vector_gadget(const std::vector<std::uint8_t>& v,
                                const OvReductionParams& params) {
    std::vector<std::uint8_t> flipped(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) flipped[i] = v[i] ? 0 : 1;
    return vector_gadget(flipped, params);
}

PointSet translation_gadget_ov(const OvReductionParams& params) {
    std::vector<std::uint8_t> zeros(params.d, 0), ones(params.d, 1);
    Rational n_eps = params.epsilon * Rational(static_cast<long>(params.n));
    Point left_shift{ExactScalar(n_eps - Rational(2)), ExactScalar(Rational(0))};
    Point right_shift{ExactScalar(Rational(2) + Rational(2) * params.epsilon),
                      ExactScalar(Rational(0))};
    PointSet out = translate(mirrored_vector_gadget(ones, params), left_shift);
    PointSet right = translate(mirrored_vector_gadget(zeros, params), right_shift);
    out.points.insert(out.points.end(), right.points.begin(), right.points.end());
    return out;
}

PointSet undirected_gadget() {
    PointSet out;
    out.points.emplace_back(ExactScalar(Rational(-1, 2)), ExactScalar(Rational(0)));
    out.points.emplace_back(ExactScalar(Rational(1, 2)), ExactScalar(Rational(0)));
    return out;
}

OvPreprocessResult preprocess_ov(const OvInstance& inst) {
    inst.validate();
    auto contains_zero = [](const std::vector<std::vector<std::uint8_t>>& side) {
        return std::any_of(side.begin(), side.end(), all_zeros);
    };
    if ((contains_zero(inst.x) && !inst.y.empty()) || (contains_zero(inst.y) && !inst.x.empty()))
        return {inst, true};

    OvPreprocessResult res;
    for (const auto& v : inst.x)
        if (!all_ones(v)) res.instance.x.push_back(v);
    for (const auto& v : inst.y)
        if (!all_ones(v)) res.instance.y.push_back(v);
    if (res.instance.x.empty() || res.instance.y.empty()) {
        res.instance = inst;
        res.forced_answer = false;
    }
    return res;
}

Point l1_to_linf_point(const Point& p) { return {p.x - p.y, p.x + p.y}; }

PointSet l1_to_linf(const PointSet& s) {
    PointSet out;
    out.label = s.label;
    out.points.reserve(s.points.size());
    for (const auto& p : s.points) out.points.push_back(l1_to_linf_point(p));
    return out;
}

ReductionOutput reduce_ov(const OvInstance& inst, const OvReductionParams& params) {
    inst.validate();
    if (inst.m() != params.m || inst.n() != params.n || inst.d() != params.d)
        throw std::invalid_argument("reduce_ov: instance sizes do not match params");
    for (const auto* side : {&inst.x, &inst.y})
        for (const auto& v : *side)
            if (all_zeros(v) || all_ones(v))
                throw std::invalid_argument(
                    "reduce_ov: instance not preprocessed (vector without both a 0 and a 1)");

    ReductionOutput out;
    out.norm = params.norm;
    out.delta = Rational(1);
    out.a.label = "A";
    out.b.label = "B";

    auto append = [](PointSet& dst, std::vector<std::string>& tags, const PointSet& src,
                     const std::string& tag) {
        for (const auto& p : src.points) {
            dst.points.push_back(p);
            tags.push_back(tag);
        }
    };

    std::vector<std::uint8_t> ones(params.d, 1);
    for (std::size_t i = 1; i <= params.m; ++i)
        append(out.a, out.provenance_a,
               translate(vector_gadget(inst.x[i - 1], params), shift_for(i, params, true)),
               "VectorGadgetLeft(" + std::to_string(i) + ")");
    for (std::size_t i = 1; i <= params.m; ++i)
        append(out.a, out.provenance_a,
               translate(vector_gadget(ones, params), shift_for(i, params, false)),
               "VectorGadgetRightDummy(" + std::to_string(i) + ")");

    for (std::size_t j = 1; j <= params.n; ++j) {
        Point shift{ExactScalar(params.epsilon * Rational(static_cast<long>(j))),
                    ExactScalar(Rational(0))};
        append(out.b, out.provenance_b,
               translate(mirrored_vector_gadget(inst.y[j - 1], params), shift),
               "VectorGadgetB(" + std::to_string(j) + ")");
    }
    append(out.b, out.provenance_b, translation_gadget_ov(params), "TranslationGadget");
    append(out.b, out.provenance_b, undirected_gadget(), "UndirectedGadget");

    if (params.norm.kind == Norm::Kind::Linf) {
        out.a = l1_to_linf(out.a);
        out.b = l1_to_linf(out.b);
        out.a.label = "A";
        out.b.label = "B";
    }
    return out;
}

ReductionOutput reduce_ov(const OvInstance& inst, const Norm& norm) {
    return reduce_ov(inst, OvReductionParams::for_norm(norm, inst.m(), inst.n(), inst.d()));
}

}  // namespace hdt
