#include "cbx/monopole.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cbx/error.hpp"

namespace cbx {

namespace {

// per-vertex dominant tuples with entries in [-box, box]
std::vector<std::vector<long>> dominant_tuples(int dim, int box)
{
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(cur.size()) == dim) {
            out.push_back(cur);
            return;
        }
        long hi = cur.empty() ? box : cur.back();
        for (long v = hi; v >= -box; --v) {
            cur.push_back(v);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

long abs_cross(const std::vector<long>& a, const std::vector<long>& b, long mult_a = 1, long mult_b = 1)
{
    long s = 0;
    for (long x : a)
        for (long y : b) s += std::abs(mult_a * x - mult_b * y);
    return s;
}

long internal_pairs(const std::vector<long>& t)
{
    long s = 0;
    for (size_t r = 0; r < t.size(); ++r)
        for (size_t q = r + 1; q < t.size(); ++q) s += std::abs(t[r] - t[q]);
    return s;
}

long abs_sum(const std::vector<long>& t)
{
    long s = 0;
    for (long x : t) s += std::abs(x);
    return s;
}

// dressing factor of a single sorted tuple, memoized by multiplicity profile
struct DressingCache {
    int order;
    std::map<std::vector<int>, Series> memo;
    const Series& get(const std::vector<long>& tuple)
    {
        std::vector<int> profile;
        size_t r = 0;
        while (r < tuple.size()) {
            size_t s = r;
            while (s < tuple.size() && tuple[s] == tuple[r]) ++s;
            profile.push_back(static_cast<int>(s - r));
            r = s;
        }
        std::sort(profile.begin(), profile.end());
        auto it = memo.find(profile);
        if (it != memo.end()) return it->second;
        Series p = Series::one(order);
        for (int m : profile)
            for (int d = 1; d <= m; ++d) p.mul_geom(2 * d);
        return memo.emplace(std::move(profile), std::move(p)).first->second;
    }
};

// generic monopole sum driver: per-combination 2*Delta from vertex-internal
// precomputation plus cross-edge terms
Series monopole_sum(const std::vector<int>& dims, int order, const std::vector<int>& boxes,
                    const std::function<long(const std::vector<const std::vector<long>*>&)>& cross_two_delta,
                    const std::function<long(int, const std::vector<long>&)>& internal_two_delta)
{
    size_t nv = dims.size();
    std::vector<std::vector<std::vector<long>>> tuples;
    std::vector<std::vector<long>> internal;
    for (size_t v = 0; v < nv; ++v) {
        tuples.push_back(dominant_tuples(dims[v], boxes[v]));
        std::vector<long> d2;
        d2.reserve(tuples[v].size());
        for (const auto& t : tuples[v]) d2.push_back(internal_two_delta(static_cast<int>(v), t));
        internal.push_back(std::move(d2));
    }
    DressingCache cache{order, {}};
    Series acc(order);
    std::vector<size_t> idx(nv, 0);
    std::vector<const std::vector<long>*> cur(nv);
    while (true) {
        long two = 0;
        for (size_t v = 0; v < nv; ++v) {
            cur[v] = &tuples[v][idx[v]];
            two += internal[v][idx[v]];
        }
        two += cross_two_delta(cur);
        if (two < 0)
            throw TruncationUnstable("negative conformal dimension: theory is not good or ugly");
        if (two <= order) {
            Series p = Series::one(order - static_cast<int>(two));
            for (size_t v = 0; v < nv; ++v) p = p * cache.get(*cur[v]).truncated(order - static_cast<int>(two));
            for (auto [e, c] : p.items()) acc.add(e + static_cast<int>(two), c);
        }
        size_t v = 0;
        while (v < nv) {
            if (++idx[v] < tuples[v].size()) break;
            idx[v] = 0;
            ++v;
        }
        if (v == nv) break;
    }
    return acc;
}

} // namespace

Series hilbert_series(const QuiverTheory& q, int order, int box)
{
    if (order < 0 || box < 1) throw IndexOutOfRange("hilbert_series needs order >= 0, box >= 1");
    auto internal = [&](int v, const std::vector<long>& t) {
        long two = -2 * internal_pairs(t);
        two += static_cast<long>(q.loops_at(v)) * 2 * internal_pairs(t); // loop edges
        two += q.flavor[static_cast<size_t>(v)] * abs_sum(t);
        return two;
    };
    auto cross = [&](const std::vector<const std::vector<long>*>& cur) {
        long two = 0;
        for (auto [s, t] : q.arrows)
            if (s != t) two += abs_cross(*cur[static_cast<size_t>(s)], *cur[static_cast<size_t>(t)]);
        return two;
    };
    std::vector<int> b0(static_cast<size_t>(q.nvertices()), box);
    std::vector<int> b1(static_cast<size_t>(q.nvertices()), box + 1);
    Series a = monopole_sum(q.dim, order, b0, cross, internal);
    Series b = monopole_sum(q.dim, order, b1, cross, internal);
    if (a != b)
        throw TruncationUnstable("box " + std::to_string(box) + " and " + std::to_string(box + 1) +
                                 " disagree: theory bad or box too small");
    return a;
}

FoldedTheory::FoldedTheory(QuiverTheory base, std::vector<std::vector<int>> cycles)
    : base_(std::move(base))
{
    int nv = base_.nvertices();
    cycle_index_.assign(static_cast<size_t>(nv), -1);
    for (auto& c : cycles) {
        for (int v : c) {
            if (v < 0 || v >= nv) throw SchemaError("fold cycle names an unknown vertex");
            if (cycle_index_[static_cast<size_t>(v)] != -1)
                throw SchemaError("fold cycles overlap at vertex " + base_.vertices[static_cast<size_t>(v)]);
            cycle_index_[static_cast<size_t>(v)] = 0; // mark
        }
    }
    // singletons for fixed vertices, preserving base vertex order of first members
    std::vector<std::vector<int>> all;
    std::vector<bool> placed(static_cast<size_t>(nv), false);
    for (auto& c : cycles)
        for (int v : c) placed[static_cast<size_t>(v)] = true;
    std::vector<bool> used(cycles.size(), false);
    for (int v = 0; v < nv; ++v) {
        if (!placed[static_cast<size_t>(v)]) {
            all.push_back({v});
        } else {
            for (size_t k = 0; k < cycles.size(); ++k)
                if (!used[k] && cycles[k].front() == v) {
                    all.push_back(cycles[k]);
                    used[k] = true;
                }
        }
    }
    for (size_t k = 0; k < cycles.size(); ++k)
        if (!used[k]) all.push_back(cycles[k]); // first member not minimal in order
    cycles_ = std::move(all);
    for (size_t k = 0; k < cycles_.size(); ++k)
        for (int v : cycles_[k]) cycle_index_[static_cast<size_t>(v)] = static_cast<int>(k);

    // sigma: successor within each cycle
    std::vector<int> sigma(static_cast<size_t>(nv));
    for (const auto& c : cycles_)
        for (size_t m = 0; m < c.size(); ++m) sigma[static_cast<size_t>(c[m])] = c[(m + 1) % c.size()];

    // validate: sigma is a quiver automorphism preserving dims/flavors/arrows
    for (int v = 0; v < nv; ++v) {
        int w = sigma[static_cast<size_t>(v)];
        if (base_.dim[static_cast<size_t>(v)] != base_.dim[static_cast<size_t>(w)])
            throw SchemaError("fold does not preserve dimensions at " + base_.vertices[static_cast<size_t>(v)]);
        if (base_.flavor[static_cast<size_t>(v)] != base_.flavor[static_cast<size_t>(w)])
            throw SchemaError("fold does not preserve flavors at " + base_.vertices[static_cast<size_t>(v)]);
    }
    std::multiset<std::pair<int, int>> arrow_set(base_.arrows.begin(), base_.arrows.end());
    for (auto [s, t] : base_.arrows) {
        std::pair<int, int> img{sigma[static_cast<size_t>(s)], sigma[static_cast<size_t>(t)]};
        if (arrow_set.find(img) == arrow_set.end())
            throw SchemaError("fold orientation is not sigma-invariant");
    }

    // edge orbits under sigma
    std::set<std::pair<int, int>> seen;
    for (auto [s, t] : base_.arrows) {
        if (seen.count({s, t})) continue;
        int L = 0;
        int cs = cycle_index_[static_cast<size_t>(s)], ct = cycle_index_[static_cast<size_t>(t)];
        std::pair<int, int> e{s, t};
        do {
            seen.insert(e);
            ++L;
            e = {sigma[static_cast<size_t>(e.first)], sigma[static_cast<size_t>(e.second)]};
        } while (e != std::make_pair(s, t));
        int dB = static_cast<int>(cycles_[static_cast<size_t>(cs)].size());
        int dC = static_cast<int>(cycles_[static_cast<size_t>(ct)].size());
        EdgeOrbit o{cs, ct, L / dB, L / dC};
        if (o.out_mult > 1 && o.in_mult > 1)
            throw Unsupported("edge orbit with multiplicity on both endpoints");
        orbits_.push_back(o);
    }

    // folded theory
    folded_ = QuiverTheory{};
    for (const auto& c : cycles_) {
        folded_.vertices.push_back(base_.vertices[static_cast<size_t>(c.front())]);
        folded_.dim.push_back(base_.dim[static_cast<size_t>(c.front())]);
        folded_.flavor.push_back(base_.flavor[static_cast<size_t>(c.front())]);
    }
    for (const auto& o : orbits_) folded_.arrows.emplace_back(o.out_class, o.in_class);

    // folded Cartan: diagonal 2, off-diagonal minus the neighbor count of one
    // representative in the other class (both orientations)
    size_t nc = cycles_.size();
    cartan_.assign(nc, std::vector<long>(nc, 0));
    for (size_t k = 0; k < nc; ++k) cartan_[k][k] = 2;
    for (auto [s, t] : base_.arrows) {
        if (s == t) continue;
        size_t cs = static_cast<size_t>(cycle_index_[static_cast<size_t>(s)]);
        size_t ct = static_cast<size_t>(cycle_index_[static_cast<size_t>(t)]);
        if (cs == ct) continue;
        if (s == cycles_[cs].front()) cartan_[cs][ct] -= 1;
        if (t == cycles_[ct].front()) cartan_[ct][cs] -= 1;
    }

    // cyclic unfolding (a cycle in the underlying graph) is accepted but flagged
    // experimental: the proof needs the extra flavor C^x there
    int edges = 0;
    for (auto [s, t] : base_.arrows)
        if (s != t) ++edges;
    if (edges >= nv && nv > 1) experimental_ = true;
}

FoldedTheory FoldedTheory::from_theory(const QuiverTheory& q)
{
    std::vector<std::vector<int>> cycles;
    if (q.fold)
        for (const auto& c : q.fold->cycles) {
            std::vector<int> idx;
            for (const auto& label : c) idx.push_back(q.vertex_index(label));
            cycles.push_back(std::move(idx));
        }
    return FoldedTheory(q, std::move(cycles));
}

FoldedTheory FoldedTheory::identity(const QuiverTheory& q) { return FoldedTheory(q, {}); }

bool FoldedTheory::is_identity() const
{
    for (const auto& c : cycles_)
        if (c.size() > 1) return false;
    return true;
}

long FoldedTheory::twisted_two_delta(const Coweight& theta) const
{
    if (theta.entries.size() != cycles_.size())
        throw IndexOutOfRange("folded coweight has wrong number of classes");
    long two = 0;
    for (size_t k = 0; k < cycles_.size(); ++k)
        two -= 2 * internal_pairs(theta.entries[k]);
    for (const auto& o : orbits_) {
        const auto& a = theta.entries[static_cast<size_t>(o.out_class)];
        const auto& b = theta.entries[static_cast<size_t>(o.in_class)];
        two += abs_cross(a, b, o.out_mult, o.in_mult);
    }
    for (size_t k = 0; k < cycles_.size(); ++k)
        two += folded_.flavor[k] * abs_sum(theta.entries[k]);
    return two;
}

bool FoldedTheory::in_y_prime(const Coweight& unfolded) const
{
    if (!unfolded.is_dominant()) return false;
    for (const auto& c : cycles_) {
        if (c.size() == 1) continue;
        size_t dim = unfolded.entries[static_cast<size_t>(c.front())].size();
        for (size_t r = 0; r < dim; ++r) {
            for (size_t m = 0; m + 1 < c.size(); ++m)
                if (unfolded.entries[static_cast<size_t>(c[m])][r] <
                    unfolded.entries[static_cast<size_t>(c[m + 1])][r])
                    return false;
            if (unfolded.entries[static_cast<size_t>(c.back())][r] <
                unfolded.entries[static_cast<size_t>(c.front())][r] - 1)
                return false;
        }
    }
    return true;
}

Coweight FoldedTheory::psi(const Coweight& unfolded) const
{
    if (static_cast<int>(unfolded.entries.size()) != base_.nvertices())
        throw IndexOutOfRange("unfolded coweight has wrong number of vertices");
    if (!in_y_prime(unfolded)) throw NotInYPrime("chain condition fails: " + unfolded.str());
    Coweight out;
    for (const auto& c : cycles_) {
        std::vector<long> sum(unfolded.entries[static_cast<size_t>(c.front())].size(), 0);
        for (int v : c)
            for (size_t r = 0; r < sum.size(); ++r) sum[r] += unfolded.entries[static_cast<size_t>(v)][r];
        out.entries.push_back(std::move(sum));
    }
    return out;
}

Coweight FoldedTheory::psi_inverse(const Coweight& folded) const
{
    if (folded.entries.size() != cycles_.size())
        throw IndexOutOfRange("folded coweight has wrong number of classes");
    Coweight out;
    out.entries.resize(static_cast<size_t>(base_.nvertices()));
    for (size_t k = 0; k < cycles_.size(); ++k) {
        long d = static_cast<long>(cycles_[k].size());
        for (size_t m = 0; m < cycles_[k].size(); ++m) {
            std::vector<long> part;
            for (long s : folded.entries[k]) {
                long q = s >= 0 ? s / d : -((-s + d - 1) / d); // floor(s/d)
                long rem = s - q * d;                          // 0..d-1
                part.push_back(q + (static_cast<long>(m) < rem ? 1 : 0));
            }
            out.entries[static_cast<size_t>(cycles_[k][m])] = std::move(part);
        }
    }
    return out;
}

Series twisted_hilbert_series(const FoldedTheory& f, int order, int box)
{
    if (order < 0 || box < 1) throw IndexOutOfRange("twisted_hilbert_series needs order >= 0, box >= 1");
    const auto& q = f.folded();
    auto internal = [&](int v, const std::vector<long>& t) {
        long two = -2 * internal_pairs(t);
        two += q.flavor[static_cast<size_t>(v)] * abs_sum(t);
        return two;
    };
    auto cross = [&](const std::vector<const std::vector<long>*>& cur) {
        long two = 0;
        for (const auto& o : f.edge_orbits())
            two += abs_cross(*cur[static_cast<size_t>(o.out_class)], *cur[static_cast<size_t>(o.in_class)],
                             o.out_mult, o.in_mult);
        return two;
    };
    // a folded class of cycle length d gathers d unfolded entries, so its
    // entry box scales by d
    auto boxes_for = [&](int b) {
        std::vector<int> boxes;
        for (const auto& c : f.cycles()) boxes.push_back(b * static_cast<int>(c.size()));
        return boxes;
    };
    Series a = monopole_sum(q.dim, order, boxes_for(box), cross, internal);
    Series b = monopole_sum(q.dim, order, boxes_for(box + 1), cross, internal);
    if (a != b)
        throw TruncationUnstable("box " + std::to_string(box) + " and " + std::to_string(box + 1) +
                                 " disagree in twisted sum");
    return a;
}

std::vector<Rat> sqrt_det_matter(const QuiverTheory& q, bool arrows, bool flavors)
{
    std::vector<Rat> c(static_cast<size_t>(q.nvertices()), Rat(0));
    if (arrows)
        for (auto [s, t] : q.arrows) {
            // det Hom(V_s, V_t) = det(V_t)^{a_s} * det(V_s)^{-a_t}
            c[static_cast<size_t>(t)] += Rat(q.dim[static_cast<size_t>(s)], 2);
            c[static_cast<size_t>(s)] -= Rat(q.dim[static_cast<size_t>(t)], 2);
        }
    if (flavors)
        for (int v = 0; v < q.nvertices(); ++v)
            c[static_cast<size_t>(v)] += Rat(q.flavor[static_cast<size_t>(v)], 2);
    return c;
}

std::vector<std::vector<long>> quiver_cartan(const QuiverTheory& q)
{
    size_t n = static_cast<size_t>(q.nvertices());
    std::vector<std::vector<long>> C(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i) C[i][i] = 2;
    for (auto [s, t] : q.arrows) {
        C[static_cast<size_t>(s)][static_cast<size_t>(t)] -= 1;
        C[static_cast<size_t>(t)][static_cast<size_t>(s)] -= 1;
    }
    return C;
}

namespace {

Rat shift_common(const QuiverTheory& q, const std::vector<long>& nu, const Rat& deg_h,
                 const std::vector<Rat>& sqrt_det)
{
    if (nu.size() != static_cast<size_t>(q.nvertices()))
        throw IndexOutOfRange("nu has wrong length");
    Rat r = deg_h;
    for (size_t i = 0; i < nu.size(); ++i) r -= Rat(nu[i]) * sqrt_det[i];
    auto C = quiver_cartan(q);
    for (size_t i = 0; i < nu.size(); ++i)
        for (size_t j = 0; j < nu.size(); ++j)
            r += Rat(nu[i] * C[i][j] * q.dim[j], 2);
    return r;
}

} // namespace

Rat degree_shift(const QuiverTheory& q, const std::vector<long>& nu, const Rat& deg_h)
{
    return shift_common(q, nu, deg_h, sqrt_det_matter(q, true, true));
}

Rat degree_shift_slice(const QuiverTheory& q, const std::vector<long>& nu, const Rat& deg_h)
{
    return shift_common(q, nu, deg_h, sqrt_det_matter(q, true, false));
}

} // namespace cbx
