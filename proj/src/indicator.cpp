#include "h1/indicator.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "h1/hom.hpp"

namespace h1 {

namespace {

long long checked_pow(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap || r < 0) return cap + 1;
    }
    return r;
}

// Odometer over k indices in 0..radix-1; returns false after the last one.
bool next_odometer(std::vector<int>& idx, int radix) {
    for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
        if (++idx[i] < radix) return true;
        idx[i] = 0;
    }
    return false;
}

} // namespace

bool is_polymorphism(const RelStructure& b, const FunctionTable& f) {
    if (f.domain_size != b.domain_size) return false;
    if (static_cast<long long>(f.table.size()) !=
        checked_pow(b.domain_size, f.arity, 1LL << 62))
        return false;
    for (int v : f.table)
        if (v < 0 || v >= b.domain_size) return false;
    std::vector<int> input(f.arity);
    for (const auto& rel : b.relations) {
        if (rel.tuples.empty()) continue;
        std::vector<int> choice(f.arity, 0);
        do {
            std::vector<int> image(rel.arity);
            for (int i = 0; i < rel.arity; ++i) {
                for (int j = 0; j < f.arity; ++j) input[j] = rel.tuples[choice[j]][i];
                image[i] = f.eval(input);
            }
            if (!std::binary_search(rel.tuples.begin(), rel.tuples.end(), image))
                return false;
        } while (next_odometer(choice, static_cast<int>(rel.tuples.size())));
    }
    return true;
}

namespace {

// Appends the polymorphism constraints for one symbol: for every relation R
// of arity k and every choice of arity(f) tuples from R, the k variables
// given by the columns of the choice matrix jointly lie in R.
void append_polymorphism_constraints(const RelStructure& b, int arity,
                                     long long var_offset, CspInstance& inst,
                                     std::set<std::vector<int>>& seen,
                                     long long& work, long long max_work) {
    for (const auto& rel : b.relations) {
        const long long m = static_cast<long long>(rel.tuples.size());
        if (m == 0) {
            // an empty relation admits no polymorphism images: the
            // constraint is unsatisfiable only if some tuple must land in
            // it, which never happens, so it contributes nothing
            continue;
        }
        std::vector<int> choice(arity, 0);
        do {
            if (++work > max_work)
                throw resource_limit_error(
                    "indicator constraint generation exceeds cap (estimated > " +
                    std::to_string(max_work) + " choices)");
            std::vector<int> scope(rel.arity);
            std::vector<int> input(arity);
            for (int i = 0; i < rel.arity; ++i) {
                for (int j = 0; j < arity; ++j) input[j] = rel.tuples[choice[j]][i];
                scope[i] = static_cast<int>(var_offset + tuple_index(input, b.domain_size));
            }
            if (seen.insert(scope).second)
                inst.constraints.push_back({scope, rel.tuples});
        } while (next_odometer(choice, static_cast<int>(m)));
    }
}

} // namespace

CspInstance indicator_instance(const RelStructure& b, const HeightOneCondition& c,
                               const IndicatorLimits& limits) {
    b.validate();
    c.validate();
    if (b.domain_size < 1) throw std::invalid_argument("indicator: empty domain");

    // variable layout: one block per symbol, mixed-radix tuple order
    std::vector<long long> offset(c.symbols.size() + 1, 0);
    for (std::size_t s = 0; s < c.symbols.size(); ++s) {
        long long block = checked_pow(b.domain_size, c.symbols[s].arity, limits.max_vars);
        offset[s + 1] = offset[s] + block;
        if (offset[s + 1] > limits.max_vars)
            throw resource_limit_error(
                "indicator instance needs more than " + std::to_string(limits.max_vars) +
                " variables (estimated " + std::to_string(offset[s + 1]) + "+)");
    }

    CspInstance inst;
    inst.var_count = static_cast<int>(offset.back());
    inst.domain_size = b.domain_size;

    // equality constraints from the identities
    for (const auto& id : c.identities) {
        std::vector<int> assign(id.var_count, 0);
        std::vector<int> lin(c.symbols[id.lhs.symbol].arity);
        std::vector<int> rin(c.symbols[id.rhs.symbol].arity);
        do {
            for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = assign[id.lhs.args[i]];
            for (std::size_t i = 0; i < rin.size(); ++i) rin[i] = assign[id.rhs.args[i]];
            int lv = static_cast<int>(offset[id.lhs.symbol] + tuple_index(lin, b.domain_size));
            int rv = static_cast<int>(offset[id.rhs.symbol] + tuple_index(rin, b.domain_size));
            if (lv != rv) inst.equalities.push_back({lv, rv});
        } while (next_odometer(assign, b.domain_size));
    }

    long long work = 0;
    for (std::size_t s = 0; s < c.symbols.size(); ++s) {
        std::set<std::vector<int>> seen;
        append_polymorphism_constraints(b, c.symbols[s].arity, offset[s], inst, seen,
                                        work, limits.max_work);
    }
    return inst;
}

SatisfiesResult satisfies(const RelStructure& b, const HeightOneCondition& c,
                          const IndicatorLimits& limits) {
    CspInstance inst = indicator_instance(b, c, limits);
    Certificate cert = solve(inst);
    SatisfiesResult res;
    res.instance_digest = cert.instance_digest;
    res.sat = cert.is_sat();
    if (!res.sat) return res;

    long long pos = 0;
    for (const auto& sym : c.symbols) {
        FunctionTable t;
        t.arity = sym.arity;
        t.domain_size = b.domain_size;
        long long block = checked_pow(b.domain_size, sym.arity, limits.max_vars);
        t.table.assign(cert.payload.begin() + pos, cert.payload.begin() + pos + block);
        res.tables.push_back(std::move(t));
        pos += block;
    }
    return res;
}

bool check_tables(const RelStructure& b, const HeightOneCondition& c,
                  const std::vector<FunctionTable>& tables) {
    if (tables.size() != c.symbols.size()) return false;
    for (std::size_t s = 0; s < tables.size(); ++s) {
        if (tables[s].arity != c.symbols[s].arity) return false;
        if (!is_polymorphism(b, tables[s])) return false;
    }
    for (const auto& id : c.identities) {
        std::vector<int> assign(id.var_count, 0);
        std::vector<int> lin(tables[id.lhs.symbol].arity);
        std::vector<int> rin(tables[id.rhs.symbol].arity);
        do {
            for (std::size_t i = 0; i < lin.size(); ++i) lin[i] = assign[id.lhs.args[i]];
            for (std::size_t i = 0; i < rin.size(); ++i) rin[i] = assign[id.rhs.args[i]];
            if (tables[id.lhs.symbol].eval(lin) != tables[id.rhs.symbol].eval(rin))
                return false;
        } while (next_odometer(assign, b.domain_size));
    }
    return true;
}

Graph FGraph::skeleton() const {
    Graph g(static_cast<int>(vertices.size()));
    for (const auto& e : edges) g.add_edge(e.a, e.b);
    return g;
}

namespace {

const std::vector<int> kDiag1 = {0, 1, 0, 2, 1, 2}; // (x,y,x,z,y,z)
const std::vector<int> kDiag2 = {1, 0, 2, 0, 2, 1}; // (y,x,z,x,z,y)

} // namespace

bool check_fgraph_edge(const RelStructure& b, const FunctionTable& f1,
                       const FunctionTable& f2, const FunctionTable& witness) {
    if (witness.arity != 6 || !is_polymorphism(b, witness)) return false;
    const int d = b.domain_size;
    std::vector<int> xyz(3), in(6);
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            for (int z = 0; z < d; ++z) {
                xyz = {x, y, z};
                for (int i = 0; i < 6; ++i) in[i] = xyz[kDiag1[i]];
                if (witness.eval(in) != f1.eval(xyz)) return false;
                for (int i = 0; i < 6; ++i) in[i] = xyz[kDiag2[i]];
                if (witness.eval(in) != f2.eval(xyz)) return false;
            }
    return true;
}

FGraph build_f_graph(const RelStructure& b, const IndicatorLimits& limits) {
    b.validate();
    const int d = b.domain_size;
    if (d < 1) throw std::invalid_argument("build_f_graph: empty domain");
    if (d > limits.fgraph_domain_cap) {
        long long tables = checked_pow(d, static_cast<int>(checked_pow(d, 3, 1 << 20)),
                                       1LL << 62);
        throw resource_limit_error(
            "build_f_graph: domain " + std::to_string(d) + " exceeds cap " +
            std::to_string(limits.fgraph_domain_cap) + " (about " +
            std::to_string(tables) + " candidate tables)");
    }

    FGraph f;
    f.domain_size = d;

    // all ternary members of Pol(b), in table-lexicographic order
    const long long cube = checked_pow(d, 3, 1 << 20);
    std::vector<int> table(cube, 0);
    while (true) {
        FunctionTable cand{3, d, table};
        if (is_polymorphism(b, cand)) f.vertices.push_back(std::move(cand));
        if (!next_odometer(table, d)) break;
    }

    // shared skeleton of the edge CSP: the 6-ary polymorphism constraints
    const long long sixth = checked_pow(d, 6, 1LL << 40);
    CspInstance base;
    base.var_count = static_cast<int>(sixth);
    base.domain_size = d;
    {
        std::set<std::vector<int>> seen;
        long long work = 0;
        append_polymorphism_constraints(b, 6, 0, base, seen, work, limits.max_work);
    }

    const int nv = static_cast<int>(f.vertices.size());
    std::vector<int> xyz(3), in(6);
    for (int i = 0; i < nv; ++i) {
        for (int j = i; j < nv; ++j) {
            // pin both diagonal patterns; a clash (only possible where the
            // patterns name the same input tuple) means no edge
            std::vector<int> pin(sixth, -1);
            bool feasible = true;
            for (long long t = 0; t < cube && feasible; ++t) {
                xyz = tuple_of_index(t, d, 3);
                for (int p = 0; p < 6; ++p) in[p] = xyz[kDiag1[p]];
                long long v1 = tuple_index(in, d);
                int val1 = f.vertices[i].table[t];
                if (pin[v1] >= 0 && pin[v1] != val1) feasible = false;
                pin[v1] = val1;
                for (int p = 0; p < 6; ++p) in[p] = xyz[kDiag2[p]];
                long long v2 = tuple_index(in, d);
                int val2 = f.vertices[j].table[t];
                if (pin[v2] >= 0 && pin[v2] != val2) feasible = false;
                pin[v2] = val2;
            }
            if (!feasible) continue;

            CspInstance inst = base;
            for (long long v = 0; v < sixth; ++v)
                if (pin[v] >= 0)
                    inst.constraints.push_back({{static_cast<int>(v)}, {{pin[v]}}});
            Certificate cert = solve(inst);
            if (cert.is_sat()) {
                FunctionTable w{6, d, cert.payload};
                f.edges.push_back({i, j, std::move(w)});
            }
        }
    }
    return f;
}

std::optional<std::vector<int>> minion_hom_to_p(const RelStructure& b,
                                                const IndicatorLimits& limits) {
    FGraph f = build_f_graph(b, limits);
    return three_color(f.skeleton());
}

QnuCheckResult qnu_quotient_check(const Graph& g, const Graph& h, int n,
                                  const IndicatorLimits& limits) {
    if (!g.is_connected() || g.has_loop())
        throw std::invalid_argument("qnu_quotient_check: pattern must be connected and loopless");
    long long space = checked_pow(h.vertex_count(), n, limits.max_tuple_space);
    if (space > limits.max_tuple_space)
        throw resource_limit_error("qnu_quotient_check: |V(h)|^n exceeds " +
                                   std::to_string(limits.max_tuple_space));
    QnuCheckResult res;
    auto [q, cm] = qnu_quotient(h, n);
    res.quotient = std::move(q);
    res.classes = std::move(cm);
    auto hom = find_hom(g, res.quotient);
    res.hom_exists = hom.has_value();
    if (hom) res.hom = *hom;
    return res;
}

} // namespace h1
