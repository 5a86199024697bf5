#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wseq/common.hpp"
#include "wseq/sequence.hpp"

namespace wseq {

// Evaluation is done in y = log t: phi(y) = omega(e^y).
class WeightFunction {
public:
    enum class Kind { ClosedForm, Table, Associated };

    struct Impl {
        virtual ~Impl() = default;
        virtual double phi(double y) const = 0;
    };

    WeightFunction() = default;
    WeightFunction(Kind kind, std::string family, json params, std::shared_ptr<const Impl> impl,
                   double y_horizon, bool omega4);

    double phi(double y) const { return impl_->phi(y); }
    double operator()(double t) const;

    Kind kind() const { return kind_; }
    std::string kind_name() const;
    const std::string& family() const { return family_; }
    const json& params() const { return params_; }
    // Largest y at which phi is defined by the underlying data.
    double y_horizon() const { return y_horizon_; }
    // Convexity of y -> phi(y) was established (analytically or by check_omega4).
    bool omega4_verified() const { return omega4_; }
    bool valid() const { return bool(impl_); }

    // Smallest y with phi(y) >= level; DomainError when unreachable.
    double y_at_level(double level) const;

private:
    Kind kind_ = Kind::ClosedForm;
    std::string family_;
    json params_ = json::object();
    std::shared_ptr<const Impl> impl_;
    double y_horizon_ = 0.0;
    bool omega4_ = false;
};

// Normalized power weight max(0, t^rho - 1).
WeightFunction power_weight(double rho);
// max(0, log t)^s.
WeightFunction logpower_weight(double s);
// Arbitrary closed form given through phi(y); horizon is where phi exceeds 1e12 (capped).
WeightFunction closed_form_weight(std::string family, json params, std::function<double(double)> phi,
                                  bool convex_in_log);
// Linear interpolation in (log t, omega); (omega_4) is decided by check_omega4 at construction.
WeightFunction table_weight(const std::vector<double>& t_grid, const std::vector<double>& values,
                            std::string family = "table", json params = json::object());
// omega_M, counting route when M is log-convex, direct supremum otherwise.
WeightFunction associated_weight(const WeightSequence& M);
// c * omega
WeightFunction scaled_weight(const WeightFunction& w, double c);

// y grid of n points on [a, b].
std::vector<double> linspace(double a, double b, int n);

ConditionVerdict check_omega1(const WeightFunction& w, const Config& cfg = default_config());
ConditionVerdict check_omega3(const WeightFunction& w, const Config& cfg = default_config());
ConditionVerdict check_omega4(const WeightFunction& w, const Config& cfg = default_config());
ConditionVerdict check_omega6(const WeightFunction& w, const Config& cfg = default_config());
ConditionVerdict sim_equivalent(const WeightFunction& s, const WeightFunction& t,
                                const Config& cfg = default_config());

// Midpoint convexity of phi on a y grid; returns index of the first violation or -1.
int first_convexity_violation(const std::vector<double>& ys, const std::vector<double>& phis);

}  // namespace wseq
