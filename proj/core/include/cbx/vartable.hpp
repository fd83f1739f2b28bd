#ifndef CBX_VARTABLE_HPP
#define CBX_VARTABLE_HPP

#include <memory>
#include <string>
#include <vector>

#include "cbx/error.hpp"

namespace cbx {

enum class SlotKind { Hbar, TFlavor, Mass, Gauge, Spectral };

// Fixed, totally ordered table of variable slots shared by every value in one
// computation.  Layout: [hbar][t][z_1..z_N][w_{vertex,r} grouped by vertex]
// [three spectral slots Z, Y, Z2].
class VarTable {
public:
    struct Slot {
        SlotKind kind;
        std::string name;
        int vertex = -1; // Gauge: vertex index; Mass: assigned vertex
        int index = -1;  // Gauge: r within vertex; Mass: k; Spectral: 0..2
    };

    VarTable(std::vector<int> gauge_dims, std::vector<int> mass_vertex,
             std::vector<std::string> vertex_labels = {})
        : dims_(std::move(gauge_dims))
    {
        if (vertex_labels.empty())
            for (size_t v = 0; v < dims_.size(); ++v)
                vertex_labels.push_back(std::to_string(v + 1));
        slots_.push_back({SlotKind::Hbar, "h"});
        slots_.push_back({SlotKind::TFlavor, "t"});
        nmass_ = static_cast<int>(mass_vertex.size());
        for (int k = 0; k < nmass_; ++k)
            slots_.push_back({SlotKind::Mass, "z" + std::to_string(k + 1),
                              mass_vertex[static_cast<size_t>(k)], k});
        gauge_offset_.resize(dims_.size());
        int off = 2 + nmass_;
        for (size_t v = 0; v < dims_.size(); ++v) {
            gauge_offset_[v] = off;
            for (int r = 0; r < dims_[v]; ++r)
                slots_.push_back({SlotKind::Gauge,
                                  "w" + vertex_labels[v] + "_" + std::to_string(r + 1),
                                  static_cast<int>(v), r});
            off += dims_[v];
        }
        ngauge_ = off - (2 + nmass_);
        slots_.push_back({SlotKind::Spectral, "Z", -1, 0});
        slots_.push_back({SlotKind::Spectral, "Y", -1, 1});
        slots_.push_back({SlotKind::Spectral, "Z2", -1, 2});
    }

    static VarTable make(std::vector<int> gauge_dims, int nmass, int mass_vertex = 0)
    {
        return VarTable(std::move(gauge_dims),
                        std::vector<int>(static_cast<size_t>(nmass), mass_vertex));
    }

    int nslots() const { return static_cast<int>(slots_.size()); }
    int hbar() const { return 0; }
    int tflavor() const { return 1; }
    int nmass() const { return nmass_; }
    int mass(int k) const
    {
        if (k < 0 || k >= nmass_) throw IndexOutOfRange("mass slot " + std::to_string(k));
        return 2 + k;
    }
    int nvertices() const { return static_cast<int>(dims_.size()); }
    int dim(int v) const { return dims_[static_cast<size_t>(v)]; }
    int ngauge() const { return ngauge_; }
    int gauge_begin() const { return 2 + nmass_; }
    int gauge(int v, int r) const
    {
        if (v < 0 || v >= nvertices() || r < 0 || r >= dims_[static_cast<size_t>(v)])
            throw IndexOutOfRange("gauge slot (" + std::to_string(v) + "," + std::to_string(r) + ")");
        return gauge_offset_[static_cast<size_t>(v)] + r;
    }
    int spectral(int j) const
    {
        if (j < 0 || j > 2) throw IndexOutOfRange("spectral slot " + std::to_string(j));
        return nslots() - 3 + j;
    }
    bool is_gauge(int s) const { return slots_[static_cast<size_t>(s)].kind == SlotKind::Gauge; }
    bool is_spectral(int s) const { return slots_[static_cast<size_t>(s)].kind == SlotKind::Spectral; }
    const Slot& slot(int s) const { return slots_[static_cast<size_t>(s)]; }
    const std::string& name(int s) const { return slots_[static_cast<size_t>(s)].name; }

private:
    std::vector<int> dims_;
    std::vector<Slot> slots_;
    std::vector<int> gauge_offset_;
    int nmass_ = 0;
    int ngauge_ = 0;
};

} // namespace cbx

#endif
