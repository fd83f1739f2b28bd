#ifndef CBX_MONOPOLE_HPP
#define CBX_MONOPOLE_HPP

#include <optional>
#include <vector>

#include "cbx/quiver.hpp"
#include "cbx/series.hpp"

namespace cbx {

// Monopole-formula Hilbert series: sum over dominant coweights with entries
// in [-box, box], computed twice (box and box+1) and required to agree.
Series hilbert_series(const QuiverTheory& q, int order, int box);

// Folded quiver data: base theory, automorphism sigma as vertex cycles.
class FoldedTheory {
public:
    FoldedTheory(QuiverTheory base, std::vector<std::vector<int>> cycles);
    static FoldedTheory from_theory(const QuiverTheory& q); // uses q.fold (identity if absent)
    static FoldedTheory identity(const QuiverTheory& q);

    const QuiverTheory& base() const { return base_; }
    const QuiverTheory& folded() const { return folded_; }
    bool is_identity() const;
    bool experimental() const { return experimental_; } // cyclic unfolding (affine A)

    // folded nonsymmetric Cartan matrix C_Q
    const std::vector<std::vector<long>>& folded_cartan() const { return cartan_; }

    int cycle_of(int base_vertex) const { return cycle_index_[static_cast<size_t>(base_vertex)]; }
    const std::vector<std::vector<int>>& cycles() const { return cycles_; }

    struct EdgeOrbit {
        int out_class;
        int in_class;
        int out_mult; // how often each out-copy occurs in the orbit
        int in_mult;
    };
    const std::vector<EdgeOrbit>& edge_orbits() const { return orbits_; }

    // twisted conformal dimension of a folded dominant coweight (2*Delta)
    long twisted_two_delta(const Coweight& theta) const;

    // the bijection psi: Y'hat -> Y+ (componentwise sum over each cycle);
    // throws NotInYPrime when the chain condition fails
    Coweight psi(const Coweight& unfolded) const;
    bool in_y_prime(const Coweight& unfolded) const;
    // inverse of psi on dominant folded coweights (canonical decomposition)
    Coweight psi_inverse(const Coweight& folded) const;

private:
    QuiverTheory base_;
    QuiverTheory folded_;
    std::vector<std::vector<int>> cycles_; // every base vertex in exactly one cycle
    std::vector<int> cycle_index_;         // base vertex -> cycle
    std::vector<std::vector<long>> cartan_;
    std::vector<EdgeOrbit> orbits_;
    bool experimental_ = false;
};

// twisted monopole formula over dominant folded coweights
Series twisted_hilbert_series(const FoldedTheory& f, int order, int box);

// grading-shift comparison (Remark-style formulas); nu in Z^I
// zastava variant: deg_r = deg_h - nu . sqrt(det N) + (1/2) nu . C . alpha
Rat degree_shift(const QuiverTheory& q, const std::vector<long>& nu, const Rat& deg_h);
// slice variant: deg_r = deg_h - nu . sqrt(det N_hor) + (1/2) nu . C . alpha
Rat degree_shift_slice(const QuiverTheory& q, const std::vector<long>& nu, const Rat& deg_h);
// sqrt(det N) as a half-integral character (per-vertex coefficients)
std::vector<Rat> sqrt_det_matter(const QuiverTheory& q, bool arrows, bool flavors);
// quiver Cartan matrix 2I - (adjacency with loops counted twice)
std::vector<std::vector<long>> quiver_cartan(const QuiverTheory& q);

} // namespace cbx

#endif
