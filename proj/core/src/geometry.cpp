#include <hdt/geometry.hpp>

#include <stdexcept>

namespace hdt {

Norm Norm::lp(int p) {
    if (p < 1) throw std::invalid_argument("Norm: p must be >= 1");
    if (p == 1) return l1();
    if (p == 2) return l2();
    return {Kind::Lp, p};
}

Norm Norm::parse(std::string_view text) {
    std::string t(text);
    for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "l1") return l1();
    if (t == "l2") return l2();
    if (t == "linf" || t == "loo") return linf();
    if (t.rfind("lp:", 0) == 0) {
        int p = 0;
        try {
            p = std::stoi(t.substr(3));
        } catch (const std::exception&) {
            throw std::invalid_argument("Norm: cannot parse '" + std::string(text) + "'");
        }
        return lp(p);
    }
    throw std::invalid_argument("Norm: cannot parse '" + std::string(text) + "'");
}

std::string Norm::str() const {
    switch (kind) {
        case Kind::L1: return "L1";
        case Kind::L2: return "L2";
        case Kind::Linf: return "Linf";
        case Kind::Lp: return "Lp:" + std::to_string(p);
    }
    return "L2";
}

ExactScalar threshold_key(const Norm& norm, const ExactScalar& delta) {
    int e = norm.key_exponent();
    return e == 1 ? delta : delta.pow(static_cast<unsigned>(e));
}

bool DistanceKey::leq_threshold(const ExactScalar& delta) const {
    if (delta.sign() < 0) return false;
    return magnitude <= threshold_key(norm, delta);
}

DistanceKey distance_key(const Point& p, const Point& q, const Norm& norm) {
    ExactScalar dx = (p.x - q.x).abs();
    ExactScalar dy = (p.y - q.y).abs();
    switch (norm.kind) {
        case Norm::Kind::L1:
            return {norm, dx + dy};
        case Norm::Kind::Linf:
            return {norm, dx < dy ? dy : dx};
        case Norm::Kind::L2:
            return {norm, dx * dx + dy * dy};
        case Norm::Kind::Lp: {
            unsigned e = static_cast<unsigned>(norm.p);
            return {norm, dx.pow(e) + dy.pow(e)};
        }
    }
    throw std::logic_error("distance_key: bad norm");
}

PointSet translate(const PointSet& s, const Point& tau) {
    PointSet out;
    out.label = s.label;
    out.points.reserve(s.points.size());
    for (const auto& p : s.points) out.points.push_back(p + tau);
    return out;
}

DirectedHausdorff directed_hausdorff(const PointSet& a, const PointSet& b, const Norm& norm) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("directed_hausdorff: point sets must be nonempty");

    DirectedHausdorff best;
    bool have_best = false;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        DistanceKey inner = distance_key(a.points[i], b.points[0], norm);
        std::size_t inner_j = 0;
        for (std::size_t j = 1; j < b.points.size(); ++j) {
            DistanceKey k = distance_key(a.points[i], b.points[j], norm);
            if (k < inner) {
                inner = k;
                inner_j = j;
            }
        }
        if (!have_best || best.key < inner) {
            best = {inner, i, inner_j};
            have_best = true;
        }
    }
    return best;
}

DistanceKey undirected_hausdorff(const PointSet& a, const PointSet& b, const Norm& norm) {
    DistanceKey ab = directed_hausdorff(a, b, norm).key;
    DistanceKey ba = directed_hausdorff(b, a, norm).key;
    return ab < ba ? ba : ab;
}

}  // namespace hdt
