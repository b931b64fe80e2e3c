// Discrete periodic fields: scalar, vector and symmetric-tensor samples on a
// TorusGrid. Values are real, row-major over the grid, component-major for
// higher ranks. Fields behave as plain values; all operations elsewhere in the
// library are pure functions of them.
#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cit/grid.hpp"

namespace cit {

struct ScalarField {
    TorusGrid grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(const TorusGrid& g, double fill = 0.0)
        : grid(g), v(g.point_count, fill) {}

    std::size_t size() const { return v.size(); }
    double& operator[](std::size_t i) { return v[i]; }
    double operator[](std::size_t i) const { return v[i]; }

    double mean() const {
        double s = 0.0;
        for (double x : v) s += x;
        return s / static_cast<double>(v.size());
    }
    void release() { std::vector<double>().swap(v); }
};

struct VectorField {
    TorusGrid grid;
    std::vector<ScalarField> comp;  // d components

    VectorField() = default;
    explicit VectorField(const TorusGrid& g) : grid(g) {
        comp.reserve(g.d);
        for (int a = 0; a < g.d; ++a) comp.emplace_back(g);
    }
    ScalarField& operator[](int a) { return comp[a]; }
    const ScalarField& operator[](int a) const { return comp[a]; }
    void release() {
        for (auto& c : comp) c.release();
    }
};

// Symmetric d x d tensor field; stores the d(d+1)/2 independent components.
// Component order: (0,0),(0,1),...,(0,d-1),(1,1),...,(d-1,d-1).
struct SymTensorField {
    TorusGrid grid;
    bool traceless = false;
    std::vector<ScalarField> comp;

    SymTensorField() = default;
    explicit SymTensorField(const TorusGrid& g, bool traceless_flag = false)
        : grid(g), traceless(traceless_flag) {
        const int n = g.d * (g.d + 1) / 2;
        comp.reserve(n);
        for (int a = 0; a < n; ++a) comp.emplace_back(g);
    }

    static int pair_index(int d, int i, int j) {
        if (i > j) std::swap(i, j);
        return i * d - i * (i - 1) / 2 + (j - i);
    }
    ScalarField& at(int i, int j) { return comp[pair_index(grid.d, i, j)]; }
    const ScalarField& at(int i, int j) const { return comp[pair_index(grid.d, i, j)]; }
    int ncomp() const { return static_cast<int>(comp.size()); }
    void release() {
        for (auto& c : comp) c.release();
    }
};

inline void check_same_grid(const TorusGrid& a, const TorusGrid& b, const char* who) {
    if (a != b) throw std::invalid_argument(std::string(who) + ": grid mismatch");
}

// max |f| over all components of any field-like list of scalars
inline double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::fabs(x));
    return m;
}
inline double max_abs(const VectorField& f) {
    double m = 0.0;
    for (const auto& c : f.comp) m = std::max(m, max_abs(c));
    return m;
}
inline double max_abs(const SymTensorField& f) {
    double m = 0.0;
    for (const auto& c : f.comp) m = std::max(m, max_abs(c));
    return m;
}

}  // namespace cit
