#pragma once

// Step graphons: symmetric kernels on [0,1]^2 that are constant on the
// cells of a finite partition.  A graphon is (alpha, beta) with part
// measures alpha_i > 0 summing to 1 and a symmetric value matrix
// beta_ij in [0,1].  Everything here is templated on the scalar so the
// same formulas run in double precision or in exact rationals.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "stardense/function_oracle.hpp"
#include "stardense/numeric.hpp"

namespace stardense::graphons {

namespace detail {

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, Rational>;

inline constexpr double kTol = 1e-12;  // admission slack for double inputs

template <class S>
bool within(const S& a, const S& b) {
    if constexpr (is_exact_v<S>)
        return a == b;
    else
        return std::fabs(a - b) <= kTol;
}

}  // namespace detail

template <class S>
class StepGraphonT {
public:
    // Validates, symmetrizes within tolerance, and silently drops parts of
    // measure exactly zero (with their beta rows/columns).
    StepGraphonT(std::vector<S> alpha, std::vector<std::vector<S>> beta)
        : alpha_(std::move(alpha)), beta_(std::move(beta)) {
        if (alpha_.empty()) throw std::invalid_argument("StepGraphon: no parts");
        if (beta_.size() != alpha_.size())
            throw std::invalid_argument("StepGraphon: beta size does not match parts");
        for (const auto& row : beta_)
            if (row.size() != alpha_.size())
                throw std::invalid_argument("StepGraphon: beta is not square");

        S total = S(0);
        for (const S& a : alpha_) {
            if (a < S(0)) throw std::invalid_argument("StepGraphon: negative part measure");
            total += a;
        }
        if (!detail::within(total, S(1)))
            throw std::invalid_argument("StepGraphon: part measures must sum to 1");

        const std::size_t n = alpha_.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                if (!detail::within(beta_[i][j], beta_[j][i]))
                    throw std::invalid_argument("StepGraphon: beta is not symmetric");
                S value = beta_[i][j];
                if constexpr (!detail::is_exact_v<S>) {
                    if (value < -detail::kTol || value > 1 + detail::kTol)
                        throw std::invalid_argument("StepGraphon: beta outside [0, 1]");
                    value = std::min(1.0, std::max(0.0, value));
                } else {
                    if (value < 0 || value > 1)
                        throw std::invalid_argument("StepGraphon: beta outside [0, 1]");
                }
                beta_[i][j] = beta_[j][i] = value;
            }
        }

        // Drop zero-measure parts in place.
        std::vector<S> kept_alpha;
        std::vector<std::size_t> kept_index;
        for (std::size_t i = 0; i < n; ++i) {
            if (alpha_[i] == S(0)) continue;
            kept_alpha.push_back(alpha_[i]);
            kept_index.push_back(i);
        }
        if (kept_alpha.empty())
            throw std::invalid_argument("StepGraphon: all parts have measure zero");
        if (kept_alpha.size() != n) {
            std::vector<std::vector<S>> kept_beta(kept_index.size(),
                                                  std::vector<S>(kept_index.size()));
            for (std::size_t i = 0; i < kept_index.size(); ++i)
                for (std::size_t j = 0; j < kept_index.size(); ++j)
                    kept_beta[i][j] = beta_[kept_index[i]][kept_index[j]];
            alpha_ = std::move(kept_alpha);
            beta_ = std::move(kept_beta);
        }
    }

    int parts() const { return static_cast<int>(alpha_.size()); }
    const std::vector<S>& alpha() const { return alpha_; }
    const std::vector<std::vector<S>>& beta() const { return beta_; }

    // Degree of part i: the measure-weighted row sum of beta.
    std::vector<S> part_degrees() const {
        std::vector<S> d(alpha_.size(), S(0));
        for (std::size_t i = 0; i < alpha_.size(); ++i)
            for (std::size_t j = 0; j < alpha_.size(); ++j) d[i] += alpha_[j] * beta_[i][j];
        return d;
    }

private:
    std::vector<S> alpha_;
    std::vector<std::vector<S>> beta_;
};

using StepGraphon = StepGraphonT<double>;
using StepGraphonQ = StepGraphonT<Rational>;

// Edge density: the double integral of the kernel.
template <class S>
S edge_density(const StepGraphonT<S>& w) {
    S total = S(0);
    const auto& a = w.alpha();
    const auto& b = w.beta();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) total += a[i] * a[j] * b[i][j];
    return total;
}

// Homomorphism density of the k-star: integral of degree^k.
template <class S>
S star_density(const StepGraphonT<S>& w, int k) {
    if (k < 0) throw std::invalid_argument("star_density: k must be >= 0");
    const auto d = w.part_degrees();
    S total = S(0);
    for (std::size_t i = 0; i < d.size(); ++i)
        total += w.alpha()[i] * ipow(d[i], static_cast<unsigned>(k));
    return total;
}

// Integral of F(degree); rational mode requires an exact oracle.
double f_functional(const StepGraphon& w, const FunctionOracle& f);
Rational f_functional(const StepGraphonQ& w, const FunctionOracle& f);

// Pointwise 1 - beta.
template <class S>
StepGraphonT<S> complement(const StepGraphonT<S>& w) {
    auto beta = w.beta();
    for (auto& row : beta)
        for (auto& value : row) value = S(1) - value;
    return StepGraphonT<S>(w.alpha(), std::move(beta));
}

enum class ExtremalKind { Clique, Anticlique };
enum class CornerKind { Zero, One };

// The two bound-attaining families at edge density gamma: a clique block of
// side sqrt(gamma), or everything joined to a hub of measure
// eta = 1 - sqrt(1 - gamma).
StepGraphon extremal_graphon(ExtremalKind kind, double gamma);

// Exact counterpart; gamma (for the clique) or 1 - gamma (for the
// anticlique) must be a perfect rational square.
StepGraphonQ extremal_graphon_exact(ExtremalKind kind, const Rational& gamma);

// Insert a part of measure lambda seeing nothing (Zero) or everything
// (One); existing part measures scale by 1 - lambda.
template <class S>
StepGraphonT<S> corner(const StepGraphonT<S>& w, const S& lambda, CornerKind kind) {
    if (lambda < S(0) || !(lambda < S(1)))
        throw std::invalid_argument("corner: lambda must lie in [0, 1)");
    const std::size_t n = w.alpha().size();
    std::vector<S> alpha;
    std::vector<std::vector<S>> beta(n + 1, std::vector<S>(n + 1));
    const S fill = kind == CornerKind::Zero ? S(0) : S(1);
    if (kind == CornerKind::Zero) {
        // New part first.
        alpha.push_back(lambda);
        for (const S& a : w.alpha()) alpha.push_back((S(1) - lambda) * a);
        for (std::size_t j = 0; j <= n; ++j) beta[0][j] = beta[j][0] = fill;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) beta[i + 1][j + 1] = w.beta()[i][j];
    } else {
        // New part last.
        for (const S& a : w.alpha()) alpha.push_back((S(1) - lambda) * a);
        alpha.push_back(lambda);
        for (std::size_t j = 0; j <= n; ++j) beta[n][j] = beta[j][n] = fill;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) beta[i][j] = w.beta()[i][j];
    }
    return StepGraphonT<S>(std::move(alpha), std::move(beta));
}

// Three-part staircase: parts (y, z, 1-y-z) with the first part joined to
// the first two.  Edge density y^2 + 2yz.
template <class S>
StepGraphonT<S> l_shaped(const S& y, const S& z) {
    if (!(y > S(0)) || z < S(0) || y + z > S(1))
        throw std::invalid_argument("l_shaped: need y > 0, z >= 0, y + z <= 1");
    std::vector<S> alpha{y, z, S(1) - y - z};
    std::vector<std::vector<S>> beta{{S(1), S(1), S(0)}, {S(1), S(0), S(0)}, {S(0), S(0), S(0)}};
    return StepGraphonT<S>(std::move(alpha), std::move(beta));
}

// Reproducible random graphon: part measures and a symmetric value matrix
// are drawn from a counter-based stream, then the values are blended
// toward all-zeros or all-ones so the edge density lands on gamma.
StepGraphon random_step_graphon(int parts, double gamma, std::uint64_t seed);

// JSON round trip: {"alpha": [...], "beta": [[...]]}.  Doubles serialize as
// numbers; rationals as "p/q" strings.
std::string graphon_to_json(const StepGraphon& w);
std::string graphon_to_json(const StepGraphonQ& w);
StepGraphon graphon_from_json(const std::string& text);
StepGraphonQ graphon_q_from_json(const std::string& text);

// Forget exactness.
StepGraphon to_double(const StepGraphonQ& w);

}  // namespace stardense::graphons
