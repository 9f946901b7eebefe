#ifndef H1_CSP_HPP
#define H1_CSP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace h1 {

struct CspConstraint {
    std::vector<int> scope;                  // variable indices
    std::vector<std::vector<int>> allowed;   // tuples over the domain
};

struct CspInstance {
    int var_count = 0;
    int domain_size = 0;
    std::vector<CspConstraint> constraints;
    std::vector<std::pair<int, int>> equalities;

    void validate() const; // throws on malformed scopes or tuples
};

enum class CertKind { assignment, homomorphism, coloring, exhausted };

// A solver answer. Assignment certificates carry a total map and replay
// against the instance through check_assignment; exhausted certificates
// carry only the digest of the instance they refute.
struct Certificate {
    CertKind kind = CertKind::exhausted;
    std::vector<int> payload;
    std::uint64_t instance_digest = 0;

    bool is_sat() const { return kind != CertKind::exhausted; }
};

struct SolveOptions {
    bool merge_equalities = true; // union-find preprocessing
};

// Complete backtracking search with generalized arc consistency.
// Deterministic: minimum-remaining-domain variable order with index
// tie-break, values tried in ascending order.
Certificate solve(const CspInstance& inst, const SolveOptions& opts = {});

// Independent replay check; shares no code with the solver's propagation.
bool check_assignment(const CspInstance& inst, const std::vector<int>& payload);

std::uint64_t digest_instance(const CspInstance& inst);
std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(std::uint64_t d);

} // namespace h1

#endif
