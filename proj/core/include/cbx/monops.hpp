#ifndef CBX_MONOPS_HPP
#define CBX_MONOPS_HPP

#include "cbx/quiver.hpp"
#include "cbx/rootdatum.hpp"
#include "cbx/shiftalg.hpp"
#include "cbx/symfunc.hpp"

namespace cbx {

// Minuscule monopole operators of quiver gauge theories (fundamental
// coweight classes with matter Euler factors and -hbar/2 twists).
DiffOp quiver_E(const QuiverTheory& q, const VarTable* vt, int vertex, int n, const SymFunc& f);
DiffOp quiver_F(const QuiverTheory& q, const VarTable* vt, int vertex, int n, const SymFunc& f);

enum class JordanKind { E, F };

// Rational Macdonald operators of the Jordan quiver (t-absorbed form,
// sign (-1)^{n(a-n)} already absorbed)
DiffOp jordan_op(int a, int l, const VarTable* vt, int n, const SymFunc& f, JordanKind kind);

// General minuscule monopole operator for a root datum.  N_weights are the
// matter weights as degree-one polynomials over the table (gauge part pairs
// with the orbit element; hbar/t parts ride along); a weight with pairing
// p < 0 contributes factors prod_{j=1..|p|} (chi - j*hbar).  f is a
// W_lambda-invariant polynomial in the gauge coordinates.
DiffOp minuscule_general(const RootDatum& rd, const VarTable* vt, const RootDatum::Vec& lambda,
                         const MPoly& f, const std::vector<RatFunc>& N_weights);

// Quasi-minuscule (adjoint matter) monopole operator
DiffOp quasi_minuscule(const RootDatum& rd, const VarTable* vt, const MPoly& f);

// wf for an orbit word: substitute every gauge coordinate by its transform
MPoly weyl_transform_poly(const RootDatum& rd, const VarTable* vt, const std::vector<int>& word,
                          const MPoly& f);

ShiftMono coweight_shift(const VarTable* vt, const RootDatum::Vec& cw);

// matter weights of the quiver representation (arrows + flavors), each with
// its +hbar/2 twist, over the theory's table
std::vector<RatFunc> quiver_matter_weights(const QuiverTheory& q, const VarTable* vt);

// adjoint matter weights (roots, +hbar/2 twist, +t) for a root datum
std::vector<RatFunc> adjoint_matter_weights(const RootDatum& rd, const VarTable* vt);

} // namespace cbx

#endif
