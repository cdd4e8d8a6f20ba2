#include "clscnd/feasibility.hpp"

#include <cmath>
#include <string>

namespace clscnd {

namespace {

// Total flow leaving each row node, summed over modes and column nodes.
Eigen::VectorXd out_of_rows(const ModeMatrices& flow) {
    Eigen::VectorXd total = Eigen::VectorXd::Zero(flow.empty() ? 0 : flow[0].rows());
    for (const auto& m : flow) total += m.rowwise().sum();
    return total;
}

// Total flow entering each column node, summed over modes and row nodes.
Eigen::VectorXd into_cols(const ModeMatrices& flow) {
    Eigen::VectorXd total = Eigen::VectorXd::Zero(flow.empty() ? 0 : flow[0].cols());
    for (const auto& m : flow) total += m.colwise().sum().transpose();
    return total;
}

std::string idx(int a) { return "[" + std::to_string(a) + "]"; }

class ReportBuilder {
  public:
    explicit ReportBuilder(double tol) : tol_(tol) {}

    // Requires lhs >= rhs; records `family` with the shortfall otherwise.
    void at_least(int family, int entity, const std::string& label, double lhs, double rhs) {
        if (lhs < rhs - tol_) add(family, entity, label, rhs - lhs);
    }

    // Requires lhs <= rhs; records `family` with the excess otherwise.
    void at_most(int family, int entity, const std::string& label, double lhs, double rhs) {
        if (lhs > rhs + tol_) add(family, entity, label, lhs - rhs);
    }

    FeasibilityReport take() {
        report_.feasible = report_.violations.empty();
        return std::move(report_);
    }

    void add(int family, int entity, const std::string& label, double residual) {
        report_.violations.push_back({family, entity, residual, label});
    }

    double tol() const { return tol_; }

  private:
    double tol_;
    FeasibilityReport report_;
};

}  // namespace

FeasibilityReport check_feasibility(const Instance& inst, const Solution& sol, double tol) {
    check_dimensions(inst, sol);
    const auto& z = inst.sizes;
    ReportBuilder rb(tol);

    const Eigen::VectorXd x_out = out_of_rows(sol.flow_plant_dc);      // per plant
    const Eigen::VectorXd x_in = into_cols(sol.flow_plant_dc);         // per center
    const Eigen::VectorXd y_out = out_of_rows(sol.flow_dc_customer);   // per center
    const Eigen::VectorXd y_in = into_cols(sol.flow_dc_customer);      // per customer
    const Eigen::VectorXd z_out = out_of_rows(sol.flow_customer_dc);   // per customer
    const Eigen::VectorXd z_in = into_cols(sol.flow_customer_dc);      // per center
    const Eigen::VectorXd rm_out = out_of_rows(sol.flow_dc_plant);     // per center
    const Eigen::VectorXd rm_in = into_cols(sol.flow_dc_plant);        // per plant
    const Eigen::VectorXd rc_out = out_of_rows(sol.flow_dc_recycle);   // per center
    const Eigen::VectorXd rc_in = into_cols(sol.flow_dc_recycle);      // per recycler
    const Eigen::VectorXd ds_out = out_of_rows(sol.flow_dc_disposal);  // per center
    const Eigen::VectorXd ds_in = into_cols(sol.flow_dc_disposal);     // per disposal

    const double alpha = inst.return_fraction;
    const double beta = inst.reuse_fraction;
    const double delta = inst.recycle_fraction;

    for (int k = 0; k < z.customers; ++k)
        rb.at_least(1, k, "demand at customer " + idx(k), y_in[k], inst.demand[k]);

    for (int j = 0; j < z.dist_centers; ++j)
        rb.at_least(2, j, "forward balance at center " + idx(j), x_in[j], y_out[j]);

    for (int i = 0; i < z.plants; ++i)
        rb.at_most(3, i, "manufacturing capacity at plant " + idx(i), x_out[i],
                   inst.cap_manufacturing[i] * sol.open_plant[i]);

    for (int j = 0; j < z.dist_centers; ++j)
        rb.at_most(4, j, "forward capacity at center " + idx(j), y_out[j],
                   inst.cap_dc_forward[j] * sol.open_dc[j]);

    for (int k = 0; k < z.customers; ++k)
        rb.at_least(5, k, "returns collected from customer " + idx(k), z_out[k],
                    alpha * inst.demand[k]);

    for (int j = 0; j < z.dist_centers; ++j)
        rb.at_most(6, j, "inspection capacity at center " + idx(j), z_in[j],
                   inst.cap_dc_reverse[j] * sol.open_dc[j]);

    for (int j = 0; j < z.dist_centers; ++j)
        rb.at_least(7, j, "remanufacturing share from center " + idx(j), rm_out[j],
                    beta * z_in[j]);

    for (int i = 0; i < z.plants; ++i)
        rb.at_most(8, i, "remanufacturing capacity at plant " + idx(i), rm_in[i],
                   inst.cap_remanufacturing[i] * sol.open_plant[i]);

    for (int j = 0; j < z.dist_centers; ++j)
        rb.at_least(9, j, "recycling share from center " + idx(j), rc_out[j], delta * z_in[j]);

    for (int r = 0; r < z.recycles; ++r)
        rb.at_most(10, r, "recycling capacity at site " + idx(r), rc_in[r],
                   inst.cap_recycle[r] * sol.open_recycle[r]);

    for (int j = 0; j < z.dist_centers; ++j)
        rb.at_least(11, j, "disposal share from center " + idx(j), ds_out[j],
                    (1.0 - beta - delta) * z_in[j]);

    for (int s = 0; s < z.disposals; ++s)
        rb.at_most(12, s, "disposal capacity at site " + idx(s), ds_in[s],
                   inst.cap_disposal[s] * sol.open_disposal[s]);

    // family 13: flow nonnegativity, with a flat entity index over all
    // flow entries in declaration order
    int flat = 0;
    auto check_nonneg = [&](const ModeMatrices& flow, const char* symbol) {
        for (std::size_t t = 0; t < flow.size(); ++t)
            for (int a = 0; a < flow[t].rows(); ++a)
                for (int b = 0; b < flow[t].cols(); ++b) {
                    const double v = flow[t](a, b);
                    if (v < -tol)
                        rb.add(13, flat,
                               std::string(symbol) + idx(a) + idx(b) + idx(static_cast<int>(t)) +
                                   " negative",
                               -v);
                    ++flat;
                }
    };
    check_nonneg(sol.flow_plant_dc, "X");
    check_nonneg(sol.flow_dc_customer, "Y");
    check_nonneg(sol.flow_customer_dc, "Z");
    check_nonneg(sol.flow_dc_plant, "RM");
    check_nonneg(sol.flow_dc_recycle, "RC");
    check_nonneg(sol.flow_dc_disposal, "DS");

    // family 14: opens binary, flat entity index over all opens in order
    flat = 0;
    auto check_binary = [&](const Eigen::VectorXi& open, const char* symbol) {
        for (int a = 0; a < open.size(); ++a) {
            if (open[a] != 0 && open[a] != 1)
                rb.add(14, flat, std::string(symbol) + idx(a) + " not binary",
                       std::min(std::abs(double(open[a])), std::abs(double(open[a]) - 1.0)));
            ++flat;
        }
    };
    check_binary(sol.open_plant, "P");
    check_binary(sol.open_dc, "W");
    check_binary(sol.open_recycle, "C");
    check_binary(sol.open_disposal, "D");

    return rb.take();
}

}  // namespace clscnd
