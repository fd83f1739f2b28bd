#include "cbx/rootdatum.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cbx {

namespace {

std::vector<std::vector<long>> cartan_matrix(char series, int rank)
{
    auto C = std::vector<std::vector<long>>(static_cast<size_t>(rank),
                                            std::vector<long>(static_cast<size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) C[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
    auto link = [&](int i, int j, long cij, long cji) {
        C[static_cast<size_t>(i)][static_cast<size_t>(j)] = cij;
        C[static_cast<size_t>(j)][static_cast<size_t>(i)] = cji;
    };
    switch (series) {
    case 'A':
        for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1, -1);
        break;
    case 'B': // alpha_rank short: <alpha_{r-1}, alpha_r^vee> = -2
        if (rank < 2) throw Unsupported("B requires rank >= 2");
        for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1, -1);
        link(rank - 2, rank - 1, -2, -1);
        break;
    case 'C': // alpha_rank long
        if (rank < 2) throw Unsupported("C requires rank >= 2");
        for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1, -1);
        link(rank - 2, rank - 1, -1, -2);
        break;
    case 'D':
        if (rank < 3) throw Unsupported("D requires rank >= 3");
        for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1, -1);
        link(rank - 3, rank - 1, -1, -1);
        break;
    case 'E':
        if (rank < 6 || rank > 8) throw Unsupported("E requires rank 6..8");
        // chain 1-2-3-4-5(-6)(-7), branch node 2 (0-indexed) to the last label
        for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1, -1);
        link(2, rank - 1, -1, -1);
        break;
    case 'F':
        if (rank != 4) throw Unsupported("F requires rank 4");
        link(0, 1, -1, -1);
        link(1, 2, -2, -1); // alpha_3, alpha_4 short
        link(2, 3, -1, -1);
        break;
    case 'G':
        if (rank != 2) throw Unsupported("G requires rank 2");
        link(0, 1, -1, -3); // alpha_1 long, alpha_2 short
        break;
    default:
        throw Unsupported(std::string("unknown series '") + series + "'");
    }
    return C;
}

} // namespace

RootDatum RootDatum::simple(char series, int rank)
{
    RootDatum rd;
    rd.series_ = series;
    rd.ambient_ = rank;
    auto C = cartan_matrix(series, rank);
    for (int i = 0; i < rank; ++i) {
        Vec root(static_cast<size_t>(rank), 0);
        root[static_cast<size_t>(i)] = 1; // alpha_i in root coordinates
        rd.simple_roots_.push_back(std::move(root));
        Vec coroot(static_cast<size_t>(rank), 0);
        for (int j = 0; j < rank; ++j) coroot[static_cast<size_t>(j)] = C[static_cast<size_t>(j)][static_cast<size_t>(i)];
        rd.simple_coroots_.push_back(std::move(coroot));
    }
    rd.finish();
    return rd;
}

RootDatum RootDatum::gl_product(const std::vector<int>& dims)
{
    RootDatum rd;
    rd.gl_ = true;
    rd.gl_dims_ = dims;
    int n = 0;
    for (int d : dims) n += d;
    rd.ambient_ = n;
    int off = 0;
    for (int d : dims) {
        for (int r = 0; r + 1 < d; ++r) {
            Vec root(static_cast<size_t>(n), 0);
            root[static_cast<size_t>(off + r)] = 1;
            root[static_cast<size_t>(off + r + 1)] = -1;
            rd.simple_roots_.push_back(root);
            rd.simple_coroots_.push_back(root); // self-dual in these coordinates
        }
        off += d;
    }
    rd.finish();
    return rd;
}

long RootDatum::pair(const Vec& form, const Vec& coweight)
{
    long s = 0;
    for (size_t i = 0; i < form.size(); ++i) s += form[i] * coweight[i];
    return s;
}

void RootDatum::finish()
{
    cartan_.assign(simple_roots_.size(), Vec(simple_roots_.size(), 0));
    for (size_t i = 0; i < simple_roots_.size(); ++i)
        for (size_t j = 0; j < simple_roots_.size(); ++j)
            cartan_[i][j] = pair(simple_roots_[i], simple_coroots_[j]);
    // reflection closure on (root, coroot) pairs
    std::set<Vec> seen;
    std::vector<Root> queue;
    for (size_t i = 0; i < simple_roots_.size(); ++i) {
        queue.push_back({simple_roots_[i], simple_coroots_[i]});
        seen.insert(simple_roots_[i]);
    }
    for (size_t q = 0; q < queue.size(); ++q) {
        Root cur = queue[q];
        for (int j = 0; j < rank(); ++j) {
            Root nxt{reflect_form(j, cur.form), reflect_coweight(j, cur.coroot)};
            if (seen.insert(nxt.form).second) queue.push_back(nxt);
        }
    }
    // include negatives (closure from simple roots already finds them, but be safe)
    size_t base = queue.size();
    for (size_t q = 0; q < base; ++q) {
        Root neg;
        neg.form = queue[q].form;
        neg.coroot = queue[q].coroot;
        for (auto& x : neg.form) x = -x;
        for (auto& x : neg.coroot) x = -x;
        if (seen.insert(neg.form).second) queue.push_back(neg);
    }
    roots_ = std::move(queue);
    // highest root: dominant one of maximal height
    long best = -1;
    for (size_t k = 0; k < roots_.size(); ++k) {
        bool dom = true;
        for (size_t j = 0; j < simple_coroots_.size() && dom; ++j)
            if (pair(roots_[k].form, simple_coroots_[j]) < 0) dom = false;
        if (!dom) continue;
        long h = 0;
        for (long x : roots_[k].form) h += std::abs(x);
        if (h > best) {
            best = h;
            highest_ = static_cast<int>(k);
        }
    }
}

RootDatum::Vec RootDatum::reflect_coweight(int i, const Vec& cw) const
{
    long p = pair(simple_roots_[static_cast<size_t>(i)], cw);
    Vec r = cw;
    const Vec& co = simple_coroots_[static_cast<size_t>(i)];
    for (size_t k = 0; k < r.size(); ++k) r[k] -= p * co[k];
    return r;
}

RootDatum::Vec RootDatum::reflect_form(int i, const Vec& form) const
{
    long p = pair(form, simple_coroots_[static_cast<size_t>(i)]);
    Vec r = form;
    const Vec& al = simple_roots_[static_cast<size_t>(i)];
    for (size_t k = 0; k < r.size(); ++k) r[k] -= p * al[k];
    return r;
}

bool RootDatum::is_dominant(const Vec& cw) const
{
    for (size_t i = 0; i < simple_roots_.size(); ++i)
        if (pair(simple_roots_[i], cw) < 0) return false;
    return true;
}

bool RootDatum::is_minuscule(const Vec& cw) const
{
    for (const auto& r : roots_) {
        long p = pair(r.form, cw);
        if (p < -1 || p > 1) return false;
    }
    return true;
}

const RootDatum::Root& RootDatum::highest_root() const
{
    if (highest_ < 0) throw Unsupported("no roots");
    return roots_[static_cast<size_t>(highest_)];
}

std::vector<RootDatum::OrbitElement> RootDatum::weyl_orbit(const Vec& dominant_cw) const
{
    if (!is_dominant(dominant_cw)) throw Unsupported("weyl_orbit expects a dominant coweight");
    std::vector<OrbitElement> out;
    std::set<Vec> seen;
    out.push_back({dominant_cw, {}});
    seen.insert(dominant_cw);
    for (size_t q = 0; q < out.size(); ++q) {
        OrbitElement cur = out[q]; // copy: out may reallocate
        for (int j = 0; j < rank(); ++j) {
            Vec nxt = reflect_coweight(j, cur.cw);
            if (seen.insert(nxt).second) {
                auto word = cur.word;
                word.push_back(j);
                out.push_back({std::move(nxt), std::move(word)});
            }
        }
    }
    return out;
}

RootDatum::Vec RootDatum::apply_word_form(const std::vector<int>& word, Vec form) const
{
    // word recorded as successive reflections applied to the dominant element
    for (int j : word) form = reflect_form(j, form);
    return form;
}

RootDatum::Vec RootDatum::apply_word_coweight(const std::vector<int>& word, Vec cw) const
{
    for (int j : word) cw = reflect_coweight(j, cw);
    return cw;
}

unsigned long long RootDatum::weyl_order() const
{
    auto fact = [](int n) {
        unsigned long long f = 1;
        for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
        return f;
    };
    if (gl_) {
        unsigned long long o = 1;
        for (int d : gl_dims_) o *= fact(d);
        return o;
    }
    int n = rank();
    switch (series_) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (1ull << n) * fact(n);
    case 'D': return (1ull << (n - 1)) * fact(n);
    case 'G': return 12;
    case 'F': return 1152;
    case 'E':
        if (n == 6) return 51840ull;
        if (n == 7) return 2903040ull;
        return 696729600ull;
    default: throw Unsupported("weyl_order");
    }
}

unsigned long long RootDatum::stabilizer_order(const Vec& dominant_cw) const
{
    if (!is_dominant(dominant_cw)) throw Unsupported("stabilizer_order expects a dominant coweight");
    std::vector<int> J;
    for (int j = 0; j < rank(); ++j)
        if (pair(simple_roots_[static_cast<size_t>(j)], dominant_cw) == 0) J.push_back(j);
    if (J.empty()) return 1;
    // enumerate the parabolic subgroup by its faithful action on the root set
    std::vector<Vec> state0;
    for (const auto& r : roots_) state0.push_back(r.form);
    std::set<std::vector<Vec>> group;
    std::vector<std::vector<Vec>> q{state0};
    group.insert(state0);
    for (size_t k = 0; k < q.size(); ++k) {
        for (int j : J) {
            std::vector<Vec> nxt = q[k];
            for (auto& f : nxt) f = reflect_form(j, f);
            if (group.insert(nxt).second) q.push_back(nxt);
        }
    }
    return group.size();
}

} // namespace cbx
