#include "h1/conditions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "h1/hom.hpp"

#include "json.hpp"

namespace h1 {

namespace {

bool name_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

} // namespace

int HeightOneCondition::symbol_index(const std::string& name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("condition: unknown symbol " + name);
}

void HeightOneCondition::validate() const {
    for (const auto& id : identities) {
        for (const Term* t : {&id.lhs, &id.rhs}) {
            if (t->symbol < 0 || t->symbol >= static_cast<int>(symbols.size()))
                throw std::invalid_argument("condition: identity references unknown symbol");
            if (static_cast<int>(t->args.size()) != symbols[t->symbol].arity)
                throw std::invalid_argument("condition: argument count does not match arity");
            for (int a : t->args)
                if (a < 0 || a >= id.var_count)
                    throw std::invalid_argument("condition: argument index out of range");
        }
    }
}

void HeightOneCondition::normalize() {
    std::vector<int> order(symbols.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return name_less(symbols[a].name, symbols[b].name);
    });
    std::vector<int> newpos(symbols.size());
    std::vector<Symbol> sorted;
    for (std::size_t i = 0; i < order.size(); ++i) {
        newpos[order[i]] = static_cast<int>(i);
        sorted.push_back(symbols[order[i]]);
    }
    symbols = std::move(sorted);
    for (auto& id : identities) {
        id.lhs.symbol = newpos[id.lhs.symbol];
        id.rhs.symbol = newpos[id.rhs.symbol];
    }
    auto key = [](const Identity& id) {
        return std::make_tuple(id.lhs.symbol, id.lhs.args, id.rhs.symbol, id.rhs.args,
                               id.var_count);
    };
    std::sort(identities.begin(), identities.end(),
              [&](const Identity& a, const Identity& b) { return key(a) < key(b); });
    identities.erase(std::unique(identities.begin(), identities.end()), identities.end());
}

HeightOneCondition sigma_of_graph(const Graph& g) {
    HeightOneCondition c;
    for (int v = 0; v < g.vertex_count(); ++v)
        c.symbols.push_back({"f" + std::to_string(v), 3});
    const std::vector<int> p1 = {0, 1, 0, 2, 1, 2}; // (x,y,x,z,y,z)
    const std::vector<int> p2 = {1, 0, 2, 0, 2, 1}; // (y,x,z,x,z,y)
    for (const auto& [u, v] : g.edges()) {
        int ge = static_cast<int>(c.symbols.size());
        c.symbols.push_back({"g" + std::to_string(u) + "_" + std::to_string(v), 6});
        c.identities.push_back({3, {u, {0, 1, 2}}, {ge, p1}});
        c.identities.push_back({3, {v, {0, 1, 2}}, {ge, p2}});
    }
    c.normalize();
    return c;
}

HeightOneCondition sigma_qnu(int n) {
    if (n < 2) throw std::invalid_argument("sigma_qnu: arity must be >= 2");
    HeightOneCondition c;
    c.symbols.push_back({"f", n});
    // terms over variables x=0, y=1: y in slot i, then the constant term
    auto term = [&](int slot) {
        std::vector<int> args(n, 0);
        if (slot >= 0) args[slot] = 1;
        return args;
    };
    for (int i = 0; i + 1 < n; ++i)
        c.identities.push_back({2, {0, term(i)}, {0, term(i + 1)}});
    c.identities.push_back({2, {0, term(n - 1)}, {0, term(-1)}});
    c.normalize();
    return c;
}

HeightOneCondition siggers_condition() {
    HeightOneCondition c;
    c.symbols.push_back({"s", 6});
    c.identities.push_back({3, {0, {0, 1, 0, 2, 1, 2}}, {0, {1, 0, 2, 0, 2, 1}}});
    return c;
}

bool check_projection_witness(const HeightOneCondition& c, const ProjectionWitness& w) {
    if (w.size() != c.symbols.size()) return false;
    for (std::size_t s = 0; s < w.size(); ++s)
        if (w[s] < 0 || w[s] >= c.symbols[s].arity) return false;
    for (const auto& id : c.identities)
        if (id.lhs.args[w[id.lhs.symbol]] != id.rhs.args[w[id.rhs.symbol]]) return false;
    return true;
}

namespace {

constexpr int kMaxLabelCoverArity = 64;

// Candidate coordinate sets as bitmasks, pruned to arc consistency over the
// identity constraints.
struct LabelCover {
    const HeightOneCondition& cond;
    std::vector<std::uint64_t> candidates;
    // per identity: admissible coordinate pairs (lhs coord, rhs coord)
    std::vector<std::vector<std::pair<int, int>>> pairs;

    explicit LabelCover(const HeightOneCondition& c) : cond(c) {
        for (const auto& s : c.symbols) {
            if (s.arity > kMaxLabelCoverArity)
                throw std::length_error("is_trivial: symbol arity exceeds 64");
            candidates.push_back(s.arity == 64 ? ~0ULL : (1ULL << s.arity) - 1);
        }
        for (const auto& id : c.identities) {
            std::vector<std::pair<int, int>> ps;
            int la = c.symbols[id.lhs.symbol].arity;
            int ra = c.symbols[id.rhs.symbol].arity;
            for (int i = 0; i < la; ++i)
                for (int j = 0; j < ra; ++j)
                    if (id.lhs.args[i] == id.rhs.args[j]) ps.push_back({i, j});
            pairs.push_back(std::move(ps));
        }
    }

    bool revise_all(std::vector<std::uint64_t>& cand) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 0; k < cond.identities.size(); ++k) {
                const auto& id = cond.identities[k];
                int ls = id.lhs.symbol, rs = id.rhs.symbol;
                std::uint64_t lmask = 0, rmask = 0;
                for (const auto& [i, j] : pairs[k]) {
                    bool li = cand[ls] >> i & 1;
                    bool rj = cand[rs] >> j & 1;
                    if (ls == rs) {
                        // same symbol on both sides: coordinate must work
                        // against itself, admissible pairs are diagonal
                        if (i == j && li) lmask |= 1ULL << i;
                    } else {
                        if (rj) lmask |= 1ULL << i;
                        if (li) rmask |= 1ULL << j;
                    }
                }
                if (ls == rs) {
                    if ((cand[ls] & lmask) != cand[ls]) {
                        cand[ls] &= lmask;
                        changed = true;
                    }
                    if (cand[ls] == 0) return false;
                    continue;
                }
                if ((cand[ls] & lmask) != cand[ls]) {
                    cand[ls] &= lmask;
                    changed = true;
                }
                if ((cand[rs] & rmask) != cand[rs]) {
                    cand[rs] &= rmask;
                    changed = true;
                }
                if (cand[ls] == 0 || cand[rs] == 0) return false;
            }
        }
        return true;
    }

    bool search(std::vector<std::uint64_t>& cand, std::size_t next) const {
        for (std::size_t s = next; s < cand.size(); ++s) {
            if (__builtin_popcountll(cand[s]) == 1) continue;
            std::uint64_t options = cand[s];
            while (options) {
                int coord = __builtin_ctzll(options);
                options &= options - 1;
                auto saved = cand;
                cand[s] = 1ULL << coord;
                if (revise_all(cand) && search(cand, s + 1)) return true;
                cand = saved;
            }
            return false;
        }
        return true;
    }
};

} // namespace

std::optional<ProjectionWitness> is_trivial(const HeightOneCondition& c) {
    c.validate();
    if (c.symbols.empty()) return ProjectionWitness{};
    LabelCover lc(c);
    auto cand = lc.candidates;
    if (!lc.revise_all(cand) || !lc.search(cand, 0)) return std::nullopt;
    ProjectionWitness w(c.symbols.size());
    for (std::size_t s = 0; s < w.size(); ++s) w[s] = __builtin_ctzll(cand[s]);
    if (!check_projection_witness(c, w))
        throw std::logic_error("is_trivial: produced witness failed replay");
    return w;
}

HeightOneCondition combine(const HeightOneCondition& a, const HeightOneCondition& b) {
    a.validate();
    b.validate();
    HeightOneCondition d;
    std::map<std::pair<int, int>, int> pair_index;
    for (std::size_t i = 0; i < a.symbols.size(); ++i)
        for (std::size_t j = 0; j < b.symbols.size(); ++j) {
            pair_index[{static_cast<int>(i), static_cast<int>(j)}] =
                static_cast<int>(d.symbols.size());
            d.symbols.push_back({"(" + a.symbols[i].name + "," + b.symbols[j].name + ")",
                                 a.symbols[i].arity + b.symbols[j].arity});
        }

    // identities of a, padded with a shared fresh block on b's coordinates
    for (const auto& id : a.identities) {
        for (std::size_t j = 0; j < b.symbols.size(); ++j) {
            int m = b.symbols[j].arity;
            Identity out;
            out.var_count = id.var_count + m;
            out.lhs.symbol = pair_index[{id.lhs.symbol, static_cast<int>(j)}];
            out.rhs.symbol = pair_index[{id.rhs.symbol, static_cast<int>(j)}];
            out.lhs.args = id.lhs.args;
            out.rhs.args = id.rhs.args;
            for (int k = 0; k < m; ++k) {
                out.lhs.args.push_back(id.var_count + k);
                out.rhs.args.push_back(id.var_count + k);
            }
            d.identities.push_back(std::move(out));
        }
    }
    // identities of b, padded with a shared fresh block on a's coordinates
    for (const auto& id : b.identities) {
        for (std::size_t i = 0; i < a.symbols.size(); ++i) {
            int n = a.symbols[i].arity;
            Identity out;
            out.var_count = id.var_count + n;
            out.lhs.symbol = pair_index[{static_cast<int>(i), id.lhs.symbol}];
            out.rhs.symbol = pair_index[{static_cast<int>(i), id.rhs.symbol}];
            for (int k = 0; k < n; ++k) {
                out.lhs.args.push_back(id.var_count + k);
                out.rhs.args.push_back(id.var_count + k);
            }
            for (int arg : id.lhs.args) out.lhs.args.push_back(arg);
            for (int arg : id.rhs.args) out.rhs.args.push_back(arg);
            d.identities.push_back(std::move(out));
        }
    }
    d.normalize();
    return d;
}

std::optional<std::vector<int>> implies_via_hom(const Graph& g, const Graph& h) {
    return find_hom(g, h);
}

std::string condition_to_json(const HeightOneCondition& c) {
    nlohmann::ordered_json j;
    j["symbols"] = nlohmann::ordered_json::array();
    for (const auto& s : c.symbols)
        j["symbols"].push_back({{"name", s.name}, {"arity", s.arity}});
    j["identities"] = nlohmann::ordered_json::array();
    for (const auto& id : c.identities) {
        nlohmann::ordered_json ji;
        ji["vars"] = id.var_count;
        ji["lhs"] = {{"symbol", c.symbols[id.lhs.symbol].name}, {"args", id.lhs.args}};
        ji["rhs"] = {{"symbol", c.symbols[id.rhs.symbol].name}, {"args", id.rhs.args}};
        j["identities"].push_back(std::move(ji));
    }
    return j.dump(2);
}

HeightOneCondition condition_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("condition: bad JSON: ") + e.what());
    }
    HeightOneCondition c;
    for (const auto& s : j.at("symbols"))
        c.symbols.push_back({s.at("name").get<std::string>(), s.at("arity").get<int>()});
    for (const auto& ji : j.at("identities")) {
        Identity id;
        id.var_count = ji.at("vars").get<int>();
        id.lhs.symbol = c.symbol_index(ji.at("lhs").at("symbol").get<std::string>());
        id.lhs.args = ji.at("lhs").at("args").get<std::vector<int>>();
        id.rhs.symbol = c.symbol_index(ji.at("rhs").at("symbol").get<std::string>());
        id.rhs.args = ji.at("rhs").at("args").get<std::vector<int>>();
        c.identities.push_back(std::move(id));
    }
    c.validate();
    return c;
}

} // namespace h1
