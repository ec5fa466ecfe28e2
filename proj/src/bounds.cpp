#include "stardense/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace stardense::bounds {

namespace {

void check_gamma(double gamma, const char* who) {
    if (!(gamma >= 0.0) || !(gamma <= 1.0))
        throw std::invalid_argument(std::string(who) + ": gamma must lie in [0, 1]");
}

template <class S>
void resolve(BoundReportT<S>& report) {
    if constexpr (std::is_same_v<S, Rational>) {
        if (report.clique_branch == report.anticlique_branch) {
            report.winner = Winner::Tie;
            report.bound = report.clique_branch;
        } else if (report.clique_branch > report.anticlique_branch) {
            report.winner = Winner::Clique;
            report.bound = report.clique_branch;
        } else {
            report.winner = Winner::Anticlique;
            report.bound = report.anticlique_branch;
        }
    } else {
        report.bound = std::max(report.clique_branch, report.anticlique_branch);
        const double gap = report.clique_branch - report.anticlique_branch;
        if (std::fabs(gap) <= kTieTol)
            report.winner = Winner::Tie;
        else
            report.winner = gap > 0 ? Winner::Clique : Winner::Anticlique;
    }
}

}  // namespace

const char* winner_name(Winner w) {
    switch (w) {
        case Winner::Clique: return "clique";
        case Winner::Anticlique: return "anticlique";
        default: return "tie";
    }
}

BoundReport star_bound(int k, double gamma) {
    if (k < 1) throw std::invalid_argument("star_bound: k must be >= 1");
    check_gamma(gamma, "star_bound");
    BoundReport report;
    report.gamma = gamma;
    const double s = std::sqrt(gamma);
    const double eta = 1 - std::sqrt(1 - gamma);
    report.eta = eta;
    report.clique_branch = ipow(s, static_cast<unsigned>(k + 1));
    report.anticlique_branch = eta + (1 - eta) * ipow(eta, static_cast<unsigned>(k));
    resolve(report);
    return report;
}

BoundReport f_bound(const FunctionOracle& f, double gamma) {
    check_gamma(gamma, "f_bound");
    BoundReport report;
    report.gamma = gamma;
    const double s = std::sqrt(gamma);
    const double eta = 1 - std::sqrt(1 - gamma);
    report.eta = eta;
    report.clique_branch = (1 - s) * f.value(0.0) + s * f.value(s);
    report.anticlique_branch = (1 - eta) * f.value(eta) + eta * f.value(1.0);
    resolve(report);
    return report;
}

BoundReportQ f_bound_exact(const FunctionOracle& f, const Rational& gamma) {
    if (gamma < 0 || gamma > 1)
        throw std::invalid_argument("f_bound_exact: gamma must lie in [0, 1]");
    if (!f.exact()) throw std::invalid_argument("f_bound_exact: oracle has no exact evaluation");
    const auto s = exact_sqrt(gamma);
    const auto c = exact_sqrt(1 - gamma);
    if (!s || !c)
        throw std::domain_error(
            "f_bound_exact: gamma and 1 - gamma must be perfect rational squares");
    BoundReportQ report;
    report.gamma = gamma;
    const Rational eta = 1 - *c;
    report.eta = eta;
    report.clique_branch = (1 - *s) * f.value_q(Rational(0)) + *s * f.value_q(*s);
    report.anticlique_branch = (1 - eta) * f.value_q(eta) + eta * f.value_q(Rational(1));
    resolve(report);
    return report;
}

GoodnessT<double> is_good(const graphons::StepGraphon& w, const FunctionOracle& f) {
    GoodnessT<double> result;
    result.report = f_bound(f, graphons::edge_density(w));
    result.slack = result.report.bound - graphons::f_functional(w, f);
    result.holds = result.slack >= -1e-9;
    return result;
}

GoodnessT<Rational> is_good(const graphons::StepGraphonQ& w, const FunctionOracle& f) {
    GoodnessT<Rational> result;
    result.report = f_bound_exact(f, graphons::edge_density(w));
    result.slack = result.report.bound - graphons::f_functional(w, f);
    result.holds = result.slack >= Rational(-1, 1000000000);
    return result;
}

}  // namespace stardense::bounds
