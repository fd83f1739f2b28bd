#ifndef CBX_YANGIAN_HPP
#define CBX_YANGIAN_HPP

#include <string>
#include <vector>

#include "cbx/quiver.hpp"
#include "cbx/report.hpp"
#include "cbx/shiftalg.hpp"

namespace cbx {

enum class GkloGen { A, E, F, H };
enum class Relation { HH, HE, HF, EE, FF, EF, SerreE, SerreF };

Relation relation_from_name(const std::string& name);
std::string relation_name(Relation r);
GkloGen gklo_gen_from_name(const std::string& name);

// shift coweight pairings induced by the theory
struct ShiftData {
    std::vector<long> mu1; // <mu_1, alpha_i^vee>
    std::vector<long> mu2; // <mu_2, alpha_i^vee>
    std::vector<long> mu;  // <mu, alpha_i^vee>

    static ShiftData of(const QuiverTheory& q);
};

// GKLO image with the spectral parameter placed in the given slot
// (defaults to the first spectral slot)
DiffOp gklo_image(const QuiverTheory& q, const VarTable* vt, GkloGen gen, int vertex);
DiffOp gklo_image_at(const QuiverTheory& q, const VarTable* vt, GkloGen gen, int vertex, int var);

// z^{-p} coefficient of a spectral operator (polynomial part removed first)
DiffOp series_coeff(const DiffOp& x, const VarTable* vt, int p);

// exact verification of one defining relation between vertices i, j
VerificationReport check_relation(const QuiverTheory& q, const VarTable* vt, Relation rel, int i, int j);

// run the whole suite (every applicable ordered pair)
std::vector<VerificationReport> check_all_relations(const QuiverTheory& q, const VarTable* vt);
std::vector<VerificationReport> check_all_relations(const QuiverTheory& q, const VarTable* vt, Relation rel);

// homogeneity degree of the image of X_i^{(p)}; must match the filtration
// degree, else throws Inhomogeneous
long rees_check(const QuiverTheory& q, const VarTable* vt, GkloGen gen, int vertex, int p);

} // namespace cbx

#endif
