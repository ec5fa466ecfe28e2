#include "stardense/step_graphon.hpp"

#include <cmath>

#include "json.hpp"

namespace stardense::graphons {

double f_functional(const StepGraphon& w, const FunctionOracle& f) {
    const auto d = w.part_degrees();
    double total = 0;
    for (std::size_t i = 0; i < d.size(); ++i) total += w.alpha()[i] * f.value(d[i]);
    return total;
}

Rational f_functional(const StepGraphonQ& w, const FunctionOracle& f) {
    if (!f.exact())
        throw std::invalid_argument("f_functional: oracle has no exact evaluation");
    const auto d = w.part_degrees();
    Rational total = 0;
    for (std::size_t i = 0; i < d.size(); ++i) total += w.alpha()[i] * f.value_q(d[i]);
    return total;
}

StepGraphon extremal_graphon(ExtremalKind kind, double gamma) {
    if (!(gamma >= 0.0) || !(gamma <= 1.0))
        throw std::invalid_argument("extremal_graphon: gamma must lie in [0, 1]");
    if (kind == ExtremalKind::Clique) {
        const double s = std::sqrt(gamma);
        return StepGraphon({s, 1 - s}, {{1, 0}, {0, 0}});
    }
    const double c = std::sqrt(1 - gamma);  // 1 - eta
    return StepGraphon({c, 1 - c}, {{0, 1}, {1, 1}});
}

StepGraphonQ extremal_graphon_exact(ExtremalKind kind, const Rational& gamma) {
    if (gamma < 0 || gamma > 1)
        throw std::invalid_argument("extremal_graphon_exact: gamma must lie in [0, 1]");
    if (kind == ExtremalKind::Clique) {
        const auto s = exact_sqrt(gamma);
        if (!s) throw std::domain_error("extremal_graphon_exact: gamma is not a perfect square");
        return StepGraphonQ({*s, 1 - *s}, {{1, 0}, {0, 0}});
    }
    const auto c = exact_sqrt(1 - gamma);
    if (!c) throw std::domain_error("extremal_graphon_exact: 1 - gamma is not a perfect square");
    return StepGraphonQ({*c, 1 - *c}, {{0, 1}, {1, 1}});
}

StepGraphon random_step_graphon(int parts, double gamma, std::uint64_t seed) {
    if (parts < 1) throw std::invalid_argument("random_step_graphon: parts must be >= 1");
    if (!(gamma >= 0.0) || !(gamma <= 1.0))
        throw std::invalid_argument("random_step_graphon: gamma must lie in [0, 1]");
    SplitMix64 rng(seed);

    std::vector<double> alpha(parts);
    double total = 0;
    for (double& a : alpha) {
        do {
            a = rng.next_unit();
        } while (a == 0.0);
        total += a;
    }
    for (double& a : alpha) a /= total;

    std::vector<std::vector<double>> beta(parts, std::vector<double>(parts));
    for (int i = 0; i < parts; ++i)
        for (int j = i; j < parts; ++j) beta[i][j] = beta[j][i] = rng.next_unit();

    // Blend the raw matrix toward all-ones or all-zeros so the density hits
    // gamma; mass = (sum alpha)^2 absorbs normalization round-off.
    double raw = 0, mass = 0;
    for (int i = 0; i < parts; ++i)
        for (int j = 0; j < parts; ++j) {
            raw += alpha[i] * alpha[j] * beta[i][j];
            mass += alpha[i] * alpha[j];
        }
    if (raw <= gamma) {
        if (mass - raw > 0) {
            const double w = (gamma - raw) / (mass - raw);
            for (auto& row : beta)
                for (double& value : row) value = std::min(1.0, value + w * (1 - value));
        }
    } else {
        const double c = gamma / raw;
        for (auto& row : beta)
            for (double& value : row) value *= c;
    }
    return StepGraphon(std::move(alpha), std::move(beta));
}

StepGraphon to_double(const StepGraphonQ& w) {
    std::vector<double> alpha;
    for (const auto& a : w.alpha()) alpha.push_back(stardense::to_double(a));
    std::vector<std::vector<double>> beta;
    for (const auto& row : w.beta()) {
        beta.emplace_back();
        for (const auto& value : row) beta.back().push_back(stardense::to_double(value));
    }
    return StepGraphon(std::move(alpha), std::move(beta));
}

namespace {

using nlohmann::json;

json to_json_value(double x) { return x; }
json to_json_value(const Rational& x) { return format_rational(x); }

template <class S>
json graphon_to_json_impl(const StepGraphonT<S>& w) {
    json alpha = json::array();
    for (const auto& a : w.alpha()) alpha.push_back(to_json_value(a));
    json beta = json::array();
    for (const auto& row : w.beta()) {
        json beta_row = json::array();
        for (const auto& value : row) beta_row.push_back(to_json_value(value));
        beta.push_back(std::move(beta_row));
    }
    return json{{"alpha", std::move(alpha)}, {"beta", std::move(beta)}};
}

double scalar_from_json_d(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return stardense::to_double(parse_rational(v.get<std::string>()));
    throw std::invalid_argument("graphon_from_json: expected number or fraction string");
}

Rational scalar_from_json_q(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw std::invalid_argument(
        "graphon_from_json: exact mode needs integers or fraction strings");
}

template <class S, class Reader>
StepGraphonT<S> graphon_from_json_impl(const std::string& text, Reader read) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("graphon_from_json: bad JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("alpha") || !doc.contains("beta"))
        throw std::invalid_argument("graphon_from_json: need an object with alpha and beta");
    std::vector<S> alpha;
    for (const auto& v : doc.at("alpha")) alpha.push_back(read(v));
    std::vector<std::vector<S>> beta;
    for (const auto& row : doc.at("beta")) {
        beta.emplace_back();
        for (const auto& v : row) beta.back().push_back(read(v));
    }
    return StepGraphonT<S>(std::move(alpha), std::move(beta));
}

}  // namespace

std::string graphon_to_json(const StepGraphon& w) { return graphon_to_json_impl(w).dump(); }
std::string graphon_to_json(const StepGraphonQ& w) { return graphon_to_json_impl(w).dump(); }

StepGraphon graphon_from_json(const std::string& text) {
    return graphon_from_json_impl<double>(text, scalar_from_json_d);
}

StepGraphonQ graphon_q_from_json(const std::string& text) {
    return graphon_from_json_impl<Rational>(text, scalar_from_json_q);
}

}  // namespace stardense::graphons
