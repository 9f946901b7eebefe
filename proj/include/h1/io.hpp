#ifndef H1_IO_HPP
#define H1_IO_HPP

#include <stdexcept>
#include <string>

#include "h1/graph.hpp"
#include "h1/rel_structure.hpp"

namespace h1 {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Graph text format (1-based vertices, DIMACS convention):
//   p graph <n> <m>
//   e <u> <v>          (m lines; loops as "e v v")
Graph read_graph(const std::string& text);
std::string write_graph(const Graph& g);

// Relational structure format:
//   p struct <domain> <k>
//   r <name> <arity> <count>
//   t <a1> ... <a_arity>   (count lines per relation, 1-based)
RelStructure read_struct(const std::string& text);
std::string write_struct(const RelStructure& s);

// Accepts either format: a graph file becomes a template through the
// both-orientations expansion, a struct file is read as written.
RelStructure read_template(const std::string& text);

// Gadget fixture: the graph format followed by
//   m <x> <x'> <y> <y'>
//   d <u> <v>
struct GadgetFile {
    Graph graph;
    int x = 0, xp = 0, y = 0, yp = 0;
    std::pair<int, int> d;
};
GadgetFile read_gadget(const std::string& text);
std::string write_gadget(const GadgetFile& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace h1

#endif
