#include "h1/rel_structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace h1 {

void RelStructure::add_relation(const std::string& name, int arity,
                                std::vector<std::vector<int>> tuples) {
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    relations.push_back({name, arity, std::move(tuples)});
}

void RelStructure::validate() const {
    for (const auto& r : relations) {
        for (const auto& t : r.tuples) {
            if (static_cast<int>(t.size()) != r.arity)
                throw std::invalid_argument("relation " + r.name + ": tuple arity mismatch");
            for (int a : t)
                if (a < 0 || a >= domain_size)
                    throw std::invalid_argument("relation " + r.name + ": entry out of domain");
        }
    }
}

RelStructure graph_to_template(const Graph& g) {
    RelStructure b;
    b.domain_size = g.vertex_count();
    std::vector<std::vector<int>> tuples;
    for (const auto& [u, v] : g.edges()) {
        tuples.push_back({u, v});
        if (u != v) tuples.push_back({v, u});
    }
    b.add_relation("E", 2, std::move(tuples));
    return b;
}

RelStructure one_element_template() {
    RelStructure b;
    b.domain_size = 1;
    b.add_relation("E", 2, {{0, 0}});
    return b;
}

RelStructure nae_template() {
    RelStructure b;
    b.domain_size = 2;
    std::vector<std::vector<int>> tuples;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                if (!(x == y && y == z)) tuples.push_back({x, y, z});
    b.add_relation("NAE", 3, std::move(tuples));
    return b;
}

RelStructure ordered_template() {
    RelStructure b;
    b.domain_size = 2;
    b.add_relation("leq", 2, {{0, 0}, {0, 1}, {1, 1}});
    b.add_relation("zero", 1, {{0}});
    b.add_relation("one", 1, {{1}});
    return b;
}

RelStructure blowup_encode(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("blowup_encode: arity must be >= 1");
    if (g.has_loop())
        throw std::invalid_argument("blowup_encode: loops are not encodable");
    RelStructure s;
    s.domain_size = n * g.vertex_count();
    auto block = [n](int x) {
        std::vector<int> b(n);
        for (int i = 0; i < n; ++i) b[i] = x * n + i;
        return b;
    };
    std::vector<std::vector<int>> tuples;
    for (const auto& [x, y] : g.edges()) {
        std::vector<int> xb = block(x), yb = block(y);
        std::vector<int> xy = xb, yx = yb;
        xy.insert(xy.end(), yb.begin(), yb.end());
        yx.insert(yx.end(), xb.begin(), xb.end());
        tuples.push_back(std::move(xy));
        tuples.push_back(std::move(yx));
    }
    s.add_relation("R", 2 * n, std::move(tuples));
    return s;
}

} // namespace h1
