#include "h1/csp.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>

namespace h1 {

void CspInstance::validate() const {
    if (var_count < 0 || domain_size < 0)
        throw std::invalid_argument("csp: negative size");
    for (const auto& c : constraints) {
        for (int v : c.scope)
            if (v < 0 || v >= var_count)
                throw std::invalid_argument("csp: scope index out of range");
        for (const auto& t : c.allowed) {
            if (t.size() != c.scope.size())
                throw std::invalid_argument("csp: tuple length does not match scope");
            for (int a : t)
                if (a < 0 || a >= domain_size)
                    throw std::invalid_argument("csp: tuple entry out of domain");
        }
    }
    for (const auto& [a, b] : equalities)
        if (a < 0 || a >= var_count || b < 0 || b >= var_count)
            throw std::invalid_argument("csp: equality variable out of range");
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(std::uint64_t d) {
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = hex[d & 15];
        d >>= 4;
    }
    return s;
}

std::uint64_t digest_instance(const CspInstance& inst) {
    std::string s = "csp v" + std::to_string(inst.var_count) + " d" +
                    std::to_string(inst.domain_size);
    for (const auto& c : inst.constraints) {
        s += ";c";
        for (int v : c.scope) s += " " + std::to_string(v);
        s += "|";
        for (const auto& t : c.allowed) {
            for (int a : t) s += " " + std::to_string(a);
            s += ",";
        }
    }
    for (const auto& [a, b] : inst.equalities)
        s += ";e " + std::to_string(a) + "=" + std::to_string(b);
    return fnv1a64(s);
}

bool check_assignment(const CspInstance& inst, const std::vector<int>& payload) {
    if (static_cast<int>(payload.size()) != inst.var_count) return false;
    for (int v : payload)
        if (v < 0 || v >= inst.domain_size) return false;
    for (const auto& [a, b] : inst.equalities)
        if (payload[a] != payload[b]) return false;
    for (const auto& c : inst.constraints) {
        bool ok = false;
        for (const auto& t : c.allowed) {
            bool match = true;
            for (std::size_t i = 0; i < c.scope.size() && match; ++i)
                match = payload[c.scope[i]] == t[i];
            if (match) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

// GAC engine over dynamic bitset domains with per-value support lists and
// residue caching. Trail-based undo keeps backtracking cheap.
class Engine {
public:
    Engine(int vars, int domain) : nvars_(vars), domain_(domain) {
        blocks_ = (domain + 63) / 64;
        dom_.assign(static_cast<std::size_t>(nvars_) * blocks_, 0);
        size_.assign(nvars_, domain);
        for (int v = 0; v < nvars_; ++v)
            for (int d = 0; d < domain; ++d)
                dom_[static_cast<std::size_t>(v) * blocks_ + d / 64] |= 1ULL << (d % 64);
        var_constraints_.resize(nvars_);
    }

    void add_constraint(std::vector<int> scope, std::vector<std::vector<int>> allowed) {
        int ci = static_cast<int>(scopes_.size());
        scopes_.push_back(std::move(scope));
        tuples_.push_back(std::move(allowed));
        const auto& sc = scopes_[ci];
        const auto& tp = tuples_[ci];
        supports_.emplace_back();
        residue_.emplace_back();
        binary_.emplace_back();
        // binary constraints over distinct variables propagate through
        // per-value bitmasks; everything else uses support-list scanning
        if (sc.size() == 2 && sc[0] != sc[1]) {
            auto& masks = binary_[ci];
            masks[0].assign(static_cast<std::size_t>(domain_) * blocks_, 0);
            masks[1].assign(static_cast<std::size_t>(domain_) * blocks_, 0);
            for (const auto& t : tp) {
                // masks[p][a] = values of the other variable compatible with a
                masks[0][static_cast<std::size_t>(t[0]) * blocks_ + t[1] / 64] |=
                    1ULL << (t[1] % 64);
                masks[1][static_cast<std::size_t>(t[1]) * blocks_ + t[0] / 64] |=
                    1ULL << (t[0] % 64);
            }
        } else {
            supports_[ci].resize(sc.size());
            residue_[ci].resize(sc.size());
            for (std::size_t p = 0; p < sc.size(); ++p) {
                supports_[ci][p].assign(domain_, {});
                residue_[ci][p].assign(domain_, -1);
                for (int ti = 0; ti < static_cast<int>(tp.size()); ++ti)
                    supports_[ci][p][tp[ti][p]].push_back(ti);
            }
        }
        std::vector<int> seen;
        for (int v : sc) {
            if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
                var_constraints_[v].push_back(ci);
                seen.push_back(v);
            }
        }
    }

    bool has(int var, int val) const {
        return dom_[static_cast<std::size_t>(var) * blocks_ + val / 64] >> (val % 64) & 1;
    }

    int domain_size_of(int var) const { return size_[var]; }

    int first_value(int var) const {
        for (int b = 0; b < blocks_; ++b) {
            std::uint64_t w = dom_[static_cast<std::size_t>(var) * blocks_ + b];
            if (w) return b * 64 + __builtin_ctzll(w);
        }
        return -1;
    }

    // Removes one value; returns false on wipeout.
    bool remove(int var, int val) {
        dom_[static_cast<std::size_t>(var) * blocks_ + val / 64] &= ~(1ULL << (val % 64));
        --size_[var];
        trail_.push_back({var, val});
        if (size_[var] == 0) return false;
        for (int ci : var_constraints_[var]) enqueue(ci);
        return true;
    }

    bool assign(int var, int val) {
        for (int d = 0; d < domain_; ++d)
            if (d != val && has(var, d))
                if (!remove(var, d)) return false;
        return true;
    }

    std::size_t mark() const { return trail_.size(); }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            auto [var, val] = trail_.back();
            trail_.pop_back();
            dom_[static_cast<std::size_t>(var) * blocks_ + val / 64] |= 1ULL << (val % 64);
            ++size_[var];
        }
    }

    void enqueue(int ci) {
        if (!in_queue_.empty() && !in_queue_[ci]) {
            in_queue_[ci] = true;
            queue_.push_back(ci);
        }
    }

    void enqueue_all() {
        in_queue_.assign(scopes_.size(), false);
        queue_.clear();
        for (int ci = 0; ci < static_cast<int>(scopes_.size()); ++ci) {
            in_queue_[ci] = true;
            queue_.push_back(ci);
        }
    }

    bool tuple_alive(int ci, int ti) const {
        const auto& sc = scopes_[ci];
        const auto& t = tuples_[ci][ti];
        for (std::size_t j = 0; j < sc.size(); ++j)
            if (!has(sc[j], t[j])) return false;
        return true;
    }

    // prunes dom(scope[pos]) to the union of the masks supported by the
    // other side's remaining values; exact arc consistency for binary scopes
    bool revise_binary(int ci, int pos) {
        const auto& sc = scopes_[ci];
        const int var = sc[pos], other = sc[1 - pos];
        const auto& masks = binary_[ci][1 - pos];
        scratch_.assign(blocks_, 0);
        const std::uint64_t* od = &dom_[static_cast<std::size_t>(other) * blocks_];
        for (int b = 0; b < blocks_; ++b) {
            std::uint64_t w = od[b];
            while (w) {
                int val = b * 64 + __builtin_ctzll(w);
                w &= w - 1;
                const std::uint64_t* m = &masks[static_cast<std::size_t>(val) * blocks_];
                for (int k = 0; k < blocks_; ++k) scratch_[k] |= m[k];
            }
        }
        std::uint64_t* vd = &dom_[static_cast<std::size_t>(var) * blocks_];
        for (int b = 0; b < blocks_; ++b) {
            std::uint64_t lost = vd[b] & ~scratch_[b];
            while (lost) {
                int val = b * 64 + __builtin_ctzll(lost);
                lost &= lost - 1;
                if (!remove(var, val)) return false;
            }
        }
        return true;
    }

    bool revise_scan(int ci, int pos) {
        const int var = scopes_[ci][pos];
        for (int val = 0; val < domain_; ++val) {
            if (!has(var, val)) continue;
            int r = residue_[ci][pos][val];
            if (r >= 0 && tuple_alive(ci, r)) continue;
            bool found = false;
            for (int ti : supports_[ci][pos][val]) {
                if (tuple_alive(ci, ti)) {
                    residue_[ci][pos][val] = ti;
                    found = true;
                    break;
                }
            }
            if (!found && !remove(var, val)) return false;
        }
        return true;
    }

    bool propagate() {
        while (!queue_.empty()) {
            int ci = queue_.front();
            queue_.pop_front();
            in_queue_[ci] = false;
            const bool binary = !binary_[ci][0].empty();
            for (std::size_t p = 0; p < scopes_[ci].size(); ++p) {
                bool ok = binary ? revise_binary(ci, static_cast<int>(p))
                                 : revise_scan(ci, static_cast<int>(p));
                if (!ok) {
                    queue_.clear();
                    std::fill(in_queue_.begin(), in_queue_.end(), false);
                    return false;
                }
            }
        }
        return true;
    }

    int pick_mrv() const {
        int best = -1, best_size = 0;
        for (int v = 0; v < nvars_; ++v) {
            int s = size_[v];
            if (s >= 2 && (best < 0 || s < best_size)) {
                best = v;
                best_size = s;
                if (s == 2) break; // cannot do better than 2; keeps index order
            }
        }
        return best;
    }

    bool search() {
        int var = pick_mrv();
        if (var < 0) return true;
        for (int val = 0; val < domain_; ++val) {
            if (!has(var, val)) continue;
            std::size_t m = mark();
            if (assign(var, val) && propagate() && search()) return true;
            undo(m);
        }
        return false;
    }

    std::vector<int> extract() const {
        std::vector<int> out(nvars_);
        for (int v = 0; v < nvars_; ++v) out[v] = first_value(v);
        return out;
    }

private:
    int nvars_, domain_, blocks_;
    std::vector<std::uint64_t> dom_;
    std::vector<int> size_;
    std::vector<std::vector<int>> scopes_;
    std::vector<std::vector<std::vector<int>>> tuples_;
    std::vector<std::vector<std::vector<std::vector<int>>>> supports_;
    std::vector<std::vector<std::vector<int>>> residue_;
    std::vector<std::array<std::vector<std::uint64_t>, 2>> binary_;
    std::vector<std::uint64_t> scratch_;
    std::vector<std::vector<int>> var_constraints_;
    std::deque<int> queue_;
    std::vector<bool> in_queue_;
    std::vector<std::pair<int, int>> trail_;
};

} // namespace

Certificate solve(const CspInstance& inst, const SolveOptions& opts) {
    inst.validate();
    Certificate cert;
    cert.instance_digest = digest_instance(inst);

    if (inst.var_count == 0) {
        bool sat = true;
        for (const auto& c : inst.constraints)
            if (c.allowed.empty()) sat = false;
        cert.kind = sat ? CertKind::assignment : CertKind::exhausted;
        return cert;
    }
    if (inst.domain_size == 0) {
        cert.kind = CertKind::exhausted;
        return cert;
    }

    // Equality preprocessing: variables collapse to their union-find root.
    UnionFind uf(inst.var_count);
    std::vector<std::pair<int, int>> residual_eqs;
    if (opts.merge_equalities) {
        for (const auto& [a, b] : inst.equalities) uf.unite(a, b);
    } else {
        residual_eqs = inst.equalities;
    }
    std::vector<int> rep(inst.var_count), var_of_rep;
    std::vector<int> rep_id(inst.var_count, -1);
    for (int v = 0; v < inst.var_count; ++v) rep[v] = uf.find(v);
    for (int v = 0; v < inst.var_count; ++v)
        if (rep[v] == v) {
            rep_id[v] = static_cast<int>(var_of_rep.size());
            var_of_rep.push_back(v);
        }

    Engine engine(static_cast<int>(var_of_rep.size()), inst.domain_size);

    // Rewrite constraints onto representatives; tuples that disagree on
    // merged positions are structurally dead and dropped up front.
    std::map<std::pair<std::vector<int>, std::vector<std::vector<int>>>, bool> dedup;
    auto add = [&](std::vector<int> scope, const std::vector<std::vector<int>>& allowed) {
        std::vector<std::vector<int>> live;
        for (const auto& t : allowed) {
            bool ok = true;
            for (std::size_t i = 0; i < scope.size() && ok; ++i)
                for (std::size_t j = i + 1; j < scope.size() && ok; ++j)
                    if (scope[i] == scope[j] && t[i] != t[j]) ok = false;
            if (ok) live.push_back(t);
        }
        std::sort(live.begin(), live.end());
        live.erase(std::unique(live.begin(), live.end()), live.end());
        auto key = std::make_pair(scope, live);
        if (dedup.emplace(std::move(key), true).second)
            engine.add_constraint(std::move(scope), std::move(live));
    };

    for (const auto& c : inst.constraints) {
        std::vector<int> scope(c.scope.size());
        for (std::size_t i = 0; i < c.scope.size(); ++i)
            scope[i] = rep_id[rep[c.scope[i]]];
        add(std::move(scope), c.allowed);
    }
    for (const auto& [a, b] : residual_eqs) {
        std::vector<std::vector<int>> diag;
        for (int d = 0; d < inst.domain_size; ++d) diag.push_back({d, d});
        add({rep_id[rep[a]], rep_id[rep[b]]}, diag);
    }

    engine.enqueue_all();
    if (!engine.propagate() || !engine.search()) {
        cert.kind = CertKind::exhausted;
        return cert;
    }

    cert.kind = CertKind::assignment;
    cert.payload.resize(inst.var_count);
    std::vector<int> rep_values = engine.extract();
    for (int v = 0; v < inst.var_count; ++v)
        cert.payload[v] = rep_values[rep_id[rep[v]]];
    return cert;
}

} // namespace h1
