#include <hdt/instance_io.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hdt {

namespace {

std::string strip(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

}  // namespace

Instance read_instance(std::istream& in) {
    Instance inst;
    std::vector<PointSet> sets;
    PointSet* current = nullptr;
    std::string raw;
    std::size_t lineno = 0;

    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("instance line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty()) continue;

        if (line.rfind("norm=", 0) == 0) {
            inst.norm = Norm::parse(line.substr(5));
            continue;
        }
        if (line.rfind("delta=", 0) == 0) {
            inst.delta = ExactScalar::parse(line.substr(6));
            continue;
        }
        if (line.rfind("set", 0) == 0 && (line.size() == 3 || line[3] == ' ' || line[3] == '\t')) {
            sets.emplace_back();
            current = &sets.back();
            current->label = strip(line.substr(3));
            continue;
        }
        if (current == nullptr) fail("point before any 'set' header");
        std::istringstream ls(line);
        std::string xs, ys, extra;
        if (!(ls >> xs >> ys)) fail("expected two coordinates");
        if (ls >> extra) fail("trailing tokens after coordinates");
        current->points.emplace_back(ExactScalar::parse(xs), ExactScalar::parse(ys));
    }

    if (sets.size() != 2)
        throw std::invalid_argument("instance: expected exactly two point sets, got " +
                                    std::to_string(sets.size()));
    inst.a = std::move(sets[0]);
    inst.b = std::move(sets[1]);
    if (inst.a.label.empty()) inst.a.label = "A";
    if (inst.b.label.empty()) inst.b.label = "B";
    return inst;
}

Instance read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return read_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
    out << "# hdt-instance v1\n";
    out << "norm=" << inst.norm.str() << "\n";
    if (inst.delta) out << "delta=" << inst.delta->str() << "\n";
    for (const PointSet* s : {&inst.a, &inst.b}) {
        out << "set " << (s->label.empty() ? "S" : s->label) << "\n";
        for (const auto& p : s->points) out << p.x.str() << " " << p.y.str() << "\n";
    }
}

void write_instance_file(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open instance file for writing: " + path);
    write_instance(out, inst);
}

}  // namespace hdt
