#ifndef CBX_CLASSICAL_HPP
#define CBX_CLASSICAL_HPP

#include <string>
#include <vector>

#include "cbx/quiver.hpp"
#include "cbx/report.hpp"
#include "cbx/series.hpp"
#include "cbx/shiftalg.hpp"

namespace cbx {

// Graded coordinate ring presented by generators, degrees and one binomial
// relation; graded dimensions by exact monomial counting.
class ClassicalRing {
public:
    struct Generator {
        std::string name;
        int degree;
    };

    // C[x,y,w]/(xy - w^l) with deg x = deg y = l, deg w = 2
    static ClassicalRing surface(int l);

    const std::vector<Generator>& generators() const { return gens_; }
    const std::string& relation() const { return relation_; }

    Series graded_dimension(int order) const;
    // graded dimension of Sym^a via the cycle index of the symmetric group
    Series sym_power_dimension(int a, int order) const;

private:
    std::vector<Generator> gens_;
    std::string relation_;
    int l_ = 0;
};

// Xi coordinate map: y_{i,r} -> u_{i,r} * prod over outgoing arrows of
// prod_s (w_{in,s} - w_{i,r})
DiffOp xi_map(const QuiverTheory& q, const VarTable* vt, int vertex, int r);

enum class ZastavaCase { Disconnected, Connected, SameVertex };
ZastavaCase zastava_case_from_name(const std::string& name);

// rank-2 zastava presentation checks at hbar = 0
VerificationReport zastava_rank2_check(ZastavaCase c);

// Sym^a of the surface ring vs the Jordan-theory monopole series
VerificationReport surface_sym_check(int a, int l, int order);

// tabulates the Poisson brackets of all generator pairs and asserts
// {w_{i,r}, u_{j,s}} = -delta delta u_{j,s}
VerificationReport poisson_table(const QuiverTheory& q, const VarTable* vt);

} // namespace cbx

#endif
