#pragma once

#include <Eigen/Core>

#include "clscnd/instance.hpp"
#include "clscnd/linear_model.hpp"

namespace clscnd {

// Deterministic variable numbering shared by the model builder, the solution
// extractor and the tests. Opens come first (P, W, C, D), then the six flow
// blocks (X, Y, Z, RM, RC, DS), each row-major with the mode index innermost.
struct ModelLayout {
    EchelonSizes sz;
    int p0 = 0, w0 = 0, c0 = 0, d0 = 0;
    int x0 = 0, y0 = 0, z0 = 0, rm0 = 0, rc0 = 0, ds0 = 0;
    int total = 0;

    static ModelLayout from(const EchelonSizes& sizes);

    int P(int i) const { return p0 + i; }
    int W(int j) const { return w0 + j; }
    int C(int r) const { return c0 + r; }
    int D(int s) const { return d0 + s; }
    int X(int i, int j, int t) const { return x0 + (i * sz.dist_centers + j) * sz.modes + t; }
    int Y(int j, int k, int t) const { return y0 + (j * sz.customers + k) * sz.modes + t; }
    int Z(int k, int j, int t) const { return z0 + (k * sz.dist_centers + j) * sz.modes + t; }
    int RM(int j, int i, int t) const { return rm0 + (j * sz.plants + i) * sz.modes + t; }
    int RC(int j, int r, int t) const { return rc0 + (j * sz.recycles + r) * sz.modes + t; }
    int DS(int j, int s, int t) const { return ds0 + (j * sz.disposals + s) * sz.modes + t; }

    int num_binaries() const { return x0; }
};

// Translates an instance into its mixed-integer linear model: binary opens,
// nonnegative flows, the three minimized objectives and constraint families
// (1)-(12). Family (13) is carried by the flow lower bounds and family (14)
// by the binary flags.
LinearModel build_model(const Instance& inst);

// Maps a model-variable assignment back to a Solution; opens are rounded to
// the nearest integer and the objectives field is filled by evaluation.
Solution extract_solution(const Instance& inst, const Eigen::VectorXd& values);

// Inverse of extract_solution: flattens a Solution into model-variable order.
Eigen::VectorXd solution_values(const Instance& inst, const Solution& sol);

}  // namespace clscnd
