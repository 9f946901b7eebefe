#ifndef H1_CERTIFICATE_HPP
#define H1_CERTIFICATE_HPP

#include <string>

#include "json.hpp"

#include "h1/chains.hpp"
#include "h1/conditions.hpp"
#include "h1/graph.hpp"
#include "h1/indicator.hpp"

namespace h1 {

inline constexpr const char* kToolVersion = "h1kit 0.1.0";

// JSON views of the domain values (0-based throughout, unlike the 1-based
// text file formats).
nlohmann::ordered_json graph_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
nlohmann::ordered_json condition_json_obj(const HeightOneCondition& c);
HeightOneCondition condition_from_json_obj(const nlohmann::json& j);
nlohmann::ordered_json table_json(const FunctionTable& t);
FunctionTable table_from_json(const nlohmann::json& j);
nlohmann::ordered_json gadget_json(const Gadget& g);
Gadget gadget_from_json(const nlohmann::json& j);
nlohmann::ordered_json fgraph_json(const FGraph& f);

std::string file_digest(const std::string& content);

struct VerifyOutcome {
    bool pass = false;
    std::string detail;
};

// Replays the witness of an envelope produced by the command-line tool.
// Positive answers re-validate through the independent checkers; negative
// (exhausted) answers re-run the decision procedure.
VerifyOutcome verify_envelope(const nlohmann::json& envelope);

} // namespace h1

#endif
