#ifndef CBX_ROOTDATUM_HPP
#define CBX_ROOTDATUM_HPP

#include <string>
#include <vector>

#include "cbx/error.hpp"

namespace cbx {

// Root datum over an explicit integral realization: linear forms on the
// Cartan are integer coefficient vectors over `ambient` coordinate slots,
// coweights are integer vectors shifting those coordinates.  Simple types use
// root coordinates (w_i = alpha_i); products of general linear groups use the
// natural w_{i,r} coordinates.
class RootDatum {
public:
    using Vec = std::vector<long>;

    static RootDatum simple(char series, int rank);
    static RootDatum gl_product(const std::vector<int>& dims);

    int rank() const { return static_cast<int>(simple_roots_.size()); }
    int ambient() const { return ambient_; }
    bool is_gl_product() const { return gl_; }
    const std::vector<int>& gl_dims() const { return gl_dims_; }

    const Vec& simple_root(int i) const { return simple_roots_[static_cast<size_t>(i)]; }
    const Vec& simple_coroot(int i) const { return simple_coroots_[static_cast<size_t>(i)]; }
    // Cartan matrix C[i][j] = <alpha_i, alpha_j^vee>
    const std::vector<Vec>& cartan() const { return cartan_; }

    static long pair(const Vec& form, const Vec& coweight);

    Vec reflect_coweight(int i, const Vec& cw) const;
    Vec reflect_form(int i, const Vec& form) const;

    // all roots, paired with their coroots (as coweight vectors)
    struct Root {
        Vec form;
        Vec coroot;
    };
    const std::vector<Root>& roots() const { return roots_; }

    bool is_dominant(const Vec& cw) const;
    bool is_minuscule(const Vec& cw) const;

    // highest root (dominant, maximal height) and its coroot as a coweight
    const Root& highest_root() const;

    struct OrbitElement {
        Vec cw;
        std::vector<int> word; // reduced-ish word of simple reflections, applied left to right
    };
    // full Weyl orbit of a dominant coweight, each element once
    std::vector<OrbitElement> weyl_orbit(const Vec& dominant_cw) const;

    // apply a reflection word to a form vector (word applied left to right)
    Vec apply_word_form(const std::vector<int>& word, Vec form) const;
    Vec apply_word_coweight(const std::vector<int>& word, Vec cw) const;

    unsigned long long weyl_order() const;
    // order of the stabilizer of a dominant coweight (parabolic subgroup)
    unsigned long long stabilizer_order(const Vec& dominant_cw) const;

private:
    bool gl_ = false;
    std::vector<int> gl_dims_;
    int ambient_ = 0;
    char series_ = 'A';
    std::vector<Vec> simple_roots_;
    std::vector<Vec> simple_coroots_;
    std::vector<Vec> cartan_;
    std::vector<Root> roots_;
    int highest_ = -1;

    void finish(); // computes cartan_, roots_, highest_
};

} // namespace cbx

#endif
