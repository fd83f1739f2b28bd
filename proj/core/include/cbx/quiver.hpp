#ifndef CBX_QUIVER_HPP
#define CBX_QUIVER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cbx/rat.hpp"
#include "cbx/series.hpp"
#include "cbx/vartable.hpp"

namespace cbx {

// Integer cocharacter data: one tuple per vertex, length a_i.
struct Coweight {
    std::vector<std::vector<long>> entries;

    static Coweight zero(const std::vector<int>& dims);
    bool is_dominant() const; // non-increasing within each vertex
    Coweight dominant_representative() const;
    bool operator==(const Coweight& o) const { return entries == o.entries; }
    bool operator<(const Coweight& o) const { return entries < o.entries; }
    std::string str() const;
};

struct RootSystemSpec {
    char series; // 'A'..'G'
    int rank;
};

struct FoldSpec {
    std::vector<std::vector<std::string>> cycles; // vertex labels
};

// Quiver with dimension/flavor vectors; induces the variable table and the
// gauge-group combinatorics.
struct QuiverTheory {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> arrows; // (source, target) vertex indices; loops allowed
    std::vector<int> dim;
    std::vector<int> flavor;
    std::optional<RootSystemSpec> root_system;
    std::optional<FoldSpec> fold;

    int nvertices() const { return static_cast<int>(vertices.size()); }
    int vertex_index(const std::string& label) const;
    int nmass() const;
    bool has_loops() const;
    int loops_at(int v) const;

    // deterministic шvariable table: masses grouped by vertex order
    VarTable make_table() const;

    static QuiverTheory jordan(int a, int l);
    static QuiverTheory a_chain(const std::vector<int>& dims, const std::vector<int>& flavors);
};

// parse the configuration document (structured object notation)
QuiverTheory parse_theory(const std::string& text);
QuiverTheory parse_theory_file(const std::string& path);

// conformal dimension (half-integer, exact)
Rat delta_degree(const QuiverTheory& q, const Coweight& lam);

// classical dressing factor P(t; lambda) of the residual gauge group
Series dressing_factor(const QuiverTheory& q, const Coweight& lam, int order);

// enumerate dominant coweights with entries in [-box, box]
std::vector<Coweight> dominant_coweights_in_box(const std::vector<int>& dims, int box);

} // namespace cbx

#endif
