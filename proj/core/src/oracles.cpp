#include <hdt/oracles.hpp>

#include <algorithm>
#include <stdexcept>

namespace hdt {

void OvInstance::validate() const {
    if (x.empty() || y.empty()) throw std::invalid_argument("OvInstance: X and Y must be nonempty");
    std::size_t dim = x.front().size();
    if (dim == 0) throw std::invalid_argument("OvInstance: dimension must be >= 1");
    for (const auto* side : {&x, &y})
        for (const auto& v : *side) {
            if (v.size() != dim) throw std::invalid_argument("OvInstance: inconsistent dimensions");
            for (auto bit : v)
                if (bit > 1) throw std::invalid_argument("OvInstance: entries must be 0/1");
        }
}

void Conv3SumInstance::validate() const {
    if (x.empty()) throw std::invalid_argument("Conv3SumInstance: sequence must be nonempty");
    for (auto v : x)
        if (v < 1 || v > max_value)
            throw std::invalid_argument("Conv3SumInstance: entries must lie in [1, M]");
}

Conv3SumInstance Conv3SumInstance::from_sequence(std::vector<long long> xs) {
    Conv3SumInstance inst;
    inst.x = std::move(xs);
    inst.max_value = 1;
    for (auto v : inst.x) inst.max_value = std::max(inst.max_value, v);
    inst.validate();
    return inst;
}

void ThreeSumInstance::validate() const {
    if (x.empty() || x.size() != y.size() || y.size() != z.size())
        throw std::invalid_argument("ThreeSumInstance: sets must be nonempty and equal-size");
    for (const auto* side : {&x, &y, &z})
        for (auto v : *side)
            if (v < 1) throw std::invalid_argument("ThreeSumInstance: integers must be positive");
}

OvAnswer ov_brute(const OvInstance& inst) {
    inst.validate();
    for (std::size_t i = 0; i < inst.x.size(); ++i)
        for (std::size_t j = 0; j < inst.y.size(); ++j) {
            bool orthogonal = true;
            for (std::size_t k = 0; k < inst.x[i].size(); ++k)
                if (inst.x[i][k] && inst.y[j][k]) {
                    orthogonal = false;
                    break;
                }
            if (orthogonal) return {true, std::make_pair(i, j)};
        }
    return {};
}

ThreeSumAnswer threesum_brute(const ThreeSumInstance& inst) {
    inst.validate();
    std::vector<std::pair<long long, std::size_t>> zs;
    zs.reserve(inst.z.size());
    for (std::size_t k = 0; k < inst.z.size(); ++k) zs.emplace_back(inst.z[k], k);
    std::sort(zs.begin(), zs.end());
    for (std::size_t i = 0; i < inst.x.size(); ++i)
        for (std::size_t j = 0; j < inst.y.size(); ++j) {
            long long want = inst.x[i] + inst.y[j];
            auto it = std::lower_bound(zs.begin(), zs.end(), std::make_pair(want, std::size_t{0}));
            if (it != zs.end() && it->first == want)
                return {true, std::array<std::size_t, 3>{i, j, it->second}};
        }
    return {};
}

Conv3SumAnswer conv3sum_brute(const Conv3SumInstance& inst) {
    inst.validate();
    std::size_t n = inst.x.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            if (inst.x[i] + inst.x[j] == inst.x[i + j]) return {true, std::make_pair(i, j)};
    return {};
}

}  // namespace hdt
