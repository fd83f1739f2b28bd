#include "cbx/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "cbx/error.hpp"

namespace cbx {

Coweight Coweight::zero(const std::vector<int>& dims)
{
    Coweight c;
    for (int d : dims) c.entries.emplace_back(static_cast<size_t>(d), 0);
    return c;
}

bool Coweight::is_dominant() const
{
    for (const auto& v : entries)
        for (size_t r = 1; r < v.size(); ++r)
            if (v[r - 1] < v[r]) return false;
    return true;
}

Coweight Coweight::dominant_representative() const
{
    Coweight c = *this;
    for (auto& v : c.entries) std::sort(v.begin(), v.end(), std::greater<long>());
    return c;
}

std::string Coweight::str() const
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << "; ";
        for (size_t r = 0; r < entries[i].size(); ++r) {
            if (r) os << ",";
            os << entries[i][r];
        }
    }
    os << ")";
    return os.str();
}

int QuiverTheory::vertex_index(const std::string& label) const
{
    for (int i = 0; i < nvertices(); ++i)
        if (vertices[static_cast<size_t>(i)] == label) return i;
    throw SchemaError("unknown vertex label '" + label + "'");
}

int QuiverTheory::nmass() const
{
    int n = 0;
    for (int l : flavor) n += l;
    return n;
}

bool QuiverTheory::has_loops() const
{
    for (auto [s, t] : arrows)
        if (s == t) return true;
    return false;
}

int QuiverTheory::loops_at(int v) const
{
    int n = 0;
    for (auto [s, t] : arrows)
        if (s == v && t == v) ++n;
    return n;
}

VarTable QuiverTheory::make_table() const
{
    std::vector<int> mass_vertex;
    for (int v = 0; v < nvertices(); ++v)
        for (int k = 0; k < flavor[static_cast<size_t>(v)]; ++k) mass_vertex.push_back(v);
    return VarTable(dim, mass_vertex, vertices);
}

QuiverTheory QuiverTheory::jordan(int a, int l)
{
    QuiverTheory q;
    q.vertices = {"1"};
    q.arrows = {{0, 0}};
    q.dim = {a};
    q.flavor = {l};
    return q;
}

QuiverTheory QuiverTheory::a_chain(const std::vector<int>& dims, const std::vector<int>& flavors)
{
    QuiverTheory q;
    for (size_t i = 0; i < dims.size(); ++i) q.vertices.push_back(std::to_string(i + 1));
    for (size_t i = 0; i + 1 < dims.size(); ++i)
        q.arrows.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1);
    q.dim = dims;
    q.flavor = flavors;
    q.flavor.resize(dims.size(), 0);
    q.root_system = RootSystemSpec{'A', static_cast<int>(dims.size())};
    return q;
}

QuiverTheory parse_theory(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("configuration is not valid JSON: ") + e.what());
    }
    QuiverTheory q;
    if (!j.is_object()) throw SchemaError("top level must be an object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw SchemaError("field 'vertices' (list of strings) is required");
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw SchemaError("field 'vertices': entries must be strings");
        q.vertices.push_back(v.get<std::string>());
    }
    if (q.vertices.empty()) throw SchemaError("field 'vertices' must be nonempty");
    {
        auto sorted = q.vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw SchemaError("field 'vertices': duplicate label");
    }
    if (!j.contains("dim") || !j["dim"].is_object())
        throw SchemaError("field 'dim' (map vertex -> integer) is required");
    q.dim.assign(q.vertices.size(), 0);
    for (const auto& [key, val] : j["dim"].items()) {
        if (!val.is_number_integer() || val.get<int>() < 0)
            throw SchemaError("field 'dim." + key + "': nonnegative integer required");
        q.dim[static_cast<size_t>(q.vertex_index(key))] = val.get<int>();
    }
    q.flavor.assign(q.vertices.size(), 0);
    if (j.contains("flavor")) {
        if (!j["flavor"].is_object()) throw SchemaError("field 'flavor' must be a map");
        for (const auto& [key, val] : j["flavor"].items()) {
            if (!val.is_number_integer() || val.get<int>() < 0)
                throw SchemaError("field 'flavor." + key + "': nonnegative integer required");
            q.flavor[static_cast<size_t>(q.vertex_index(key))] = val.get<int>();
        }
    }
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array()) throw SchemaError("field 'arrows' must be a list");
        for (const auto& a : j["arrows"]) {
            if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
                throw SchemaError("field 'arrows': entries must be 2-element vertex-label lists");
            q.arrows.emplace_back(q.vertex_index(a[0].get<std::string>()),
                                  q.vertex_index(a[1].get<std::string>()));
        }
    }
    if (j.contains("root_system")) {
        const auto& rs = j["root_system"];
        if (!rs.is_object() || !rs.contains("series") || !rs.contains("rank"))
            throw SchemaError("field 'root_system' needs 'series' and 'rank'");
        std::string s = rs["series"].get<std::string>();
        if (s.size() != 1 || std::string("ADEBCFG").find(s[0]) == std::string::npos)
            throw SchemaError("field 'root_system.series' must be one of A,D,E,B,C,F,G");
        int rank = rs["rank"].get<int>();
        if (rank < 1) throw SchemaError("field 'root_system.rank' must be positive");
        q.root_system = RootSystemSpec{s[0], rank};
    }
    if (j.contains("fold")) {
        const auto& f = j["fold"];
        if (!f.is_object() || !f.contains("cycles") || !f["cycles"].is_array())
            throw SchemaError("field 'fold' must be an object with a 'cycles' list");
        FoldSpec spec;
        for (const auto& cyc : f["cycles"]) {
            if (!cyc.is_array()) throw SchemaError("field 'fold.cycles': entries must be lists");
            std::vector<std::string> labels;
            for (const auto& l : cyc) {
                if (!l.is_string()) throw SchemaError("field 'fold.cycles': labels must be strings");
                q.vertex_index(l.get<std::string>());
                labels.push_back(l.get<std::string>());
            }
            if (labels.size() < 2) throw SchemaError("field 'fold.cycles': cycles need length >= 2");
            spec.cycles.push_back(std::move(labels));
        }
        q.fold = std::move(spec);
    }
    return q;
}

QuiverTheory parse_theory_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open theory file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_theory(ss.str());
}

Rat delta_degree(const QuiverTheory& q, const Coweight& lam)
{
    if (static_cast<int>(lam.entries.size()) != q.nvertices())
        throw IndexOutOfRange("coweight has wrong number of vertices");
    for (int v = 0; v < q.nvertices(); ++v)
        if (static_cast<int>(lam.entries[static_cast<size_t>(v)].size()) != q.dim[static_cast<size_t>(v)])
            throw IndexOutOfRange("coweight tuple length mismatch at vertex " + q.vertices[static_cast<size_t>(v)]);
    long twice = 0; // accumulate 2*Delta to stay integral
    for (int v = 0; v < q.nvertices(); ++v) {
        const auto& t = lam.entries[static_cast<size_t>(v)];
        for (size_t r = 0; r < t.size(); ++r)
            for (size_t s = r + 1; s < t.size(); ++s) twice -= 2 * std::abs(t[r] - t[s]);
    }
    for (auto [src, dst] : q.arrows) {
        const auto& a = lam.entries[static_cast<size_t>(src)];
        const auto& b = lam.entries[static_cast<size_t>(dst)];
        for (long x : a)
            for (long y : b) twice += std::abs(x - y);
    }
    for (int v = 0; v < q.nvertices(); ++v)
        for (long x : lam.entries[static_cast<size_t>(v)])
            twice += q.flavor[static_cast<size_t>(v)] * std::abs(x);
    return Rat(twice, 2);
}

Series dressing_factor(const QuiverTheory& q, const Coweight& lam, int order)
{
    Series p = Series::one(order);
    for (size_t v = 0; v < lam.entries.size(); ++v) {
        auto t = lam.entries[v];
        std::sort(t.begin(), t.end());
        size_t r = 0;
        while (r < t.size()) {
            size_t s = r;
            while (s < t.size() && t[s] == t[r]) ++s;
            int mult = static_cast<int>(s - r);
            for (int d = 1; d <= mult; ++d) p.mul_geom(2 * d);
            r = s;
        }
    }
    return p;
}

namespace {

void enumerate_dominant(int dim, int box, std::vector<long>& cur,
                        const std::function<void(const std::vector<long>&)>& emit)
{
    if (static_cast<int>(cur.size()) == dim) {
        emit(cur);
        return;
    }
    long hi = cur.empty() ? box : cur.back();
    for (long v = hi; v >= -box; --v) {
        cur.push_back(v);
        enumerate_dominant(dim, box, cur, emit);
        cur.pop_back();
    }
}

} // namespace

std::vector<Coweight> dominant_coweights_in_box(const std::vector<int>& dims, int box)
{
    std::vector<std::vector<std::vector<long>>> per_vertex;
    for (int d : dims) {
        std::vector<std::vector<long>> tuples;
        std::vector<long> cur;
        enumerate_dominant(d, box, cur, [&](const std::vector<long>& t) { tuples.push_back(t); });
        per_vertex.push_back(std::move(tuples));
    }
    std::vector<Coweight> out;
    std::vector<size_t> idx(dims.size(), 0);
    while (true) {
        Coweight c;
        for (size_t v = 0; v < dims.size(); ++v) c.entries.push_back(per_vertex[v][idx[v]]);
        out.push_back(std::move(c));
        size_t v = 0;
        while (v < dims.size()) {
            if (++idx[v] < per_vertex[v].size()) break;
            idx[v] = 0;
            ++v;
        }
        if (v == dims.size()) break;
    }
    return out;
}

} // namespace cbx
