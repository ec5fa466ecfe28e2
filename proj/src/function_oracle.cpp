#include "stardense/function_oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stardense {

class FunctionOracle::Impl {
public:
    virtual ~Impl() = default;
    virtual double value(double x) const = 0;
    virtual double deriv1(double x) const = 0;
    virtual double deriv2(double x) const = 0;
    virtual bool has_deriv3() const { return false; }
    virtual double deriv3(double) const {
        throw std::logic_error("FunctionOracle: no third derivative declared");
    }
    virtual bool exact() const { return false; }
    virtual Rational value_q(const Rational&) const {
        throw std::logic_error("FunctionOracle: no exact evaluation available");
    }
    virtual Rational deriv1_q(const Rational&) const {
        throw std::logic_error("FunctionOracle: no exact evaluation available");
    }
    virtual Rational deriv2_q(const Rational&) const {
        throw std::logic_error("FunctionOracle: no exact evaluation available");
    }
    virtual bool declared_convex() const = 0;
    virtual std::string description() const = 0;
};

namespace {

using Impl = FunctionOracle::Impl;

class PowerImpl final : public Impl {
public:
    explicit PowerImpl(int k) : k_(k) {
        if (k < 1) throw std::invalid_argument("FunctionOracle::power: k must be >= 1");
    }

    double value(double x) const override { return ipow(x, k_); }
    double deriv1(double x) const override { return coeff(1) * guarded_pow(x, k_ - 1); }
    double deriv2(double x) const override { return coeff(2) * guarded_pow(x, k_ - 2); }
    bool has_deriv3() const override { return true; }
    double deriv3(double x) const override { return coeff(3) * guarded_pow(x, k_ - 3); }
    bool exact() const override { return true; }
    Rational value_q(const Rational& x) const override { return ipow(x, k_); }
    Rational deriv1_q(const Rational& x) const override {
        return k_ >= 1 ? Rational(k_) * ipow(x, k_ - 1) : Rational(0);
    }
    Rational deriv2_q(const Rational& x) const override {
        return k_ >= 2 ? Rational(k_) * (k_ - 1) * ipow(x, k_ - 2) : Rational(0);
    }
    bool declared_convex() const override { return true; }
    std::string description() const override { return "power:" + std::to_string(k_); }

private:
    double coeff(int order) const {
        double c = 1;
        for (int i = 0; i < order; ++i) c *= k_ - i;
        return c < 0 ? 0 : c;  // falling factorial hits zero before negative k_
    }
    static double guarded_pow(double x, int e) { return e < 0 ? 0.0 : ipow(x, e); }

    int k_;
};

class PiecewiseImpl final : public Impl {
public:
    explicit PiecewiseImpl(std::vector<std::pair<Rational, Rational>> points)
        : points_(std::move(points)) {
        if (points_.size() < 2)
            throw std::invalid_argument("piecewise_linear: need at least two points");
        if (points_.front().first != 0 || points_.back().first != 1)
            throw std::invalid_argument("piecewise_linear: breakpoints must cover [0, 1]");
        for (std::size_t i = 1; i < points_.size(); ++i)
            if (points_[i].first <= points_[i - 1].first)
                throw std::invalid_argument("piecewise_linear: x must be strictly increasing");
        convex_ = true;
        for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
            slopes_.push_back((points_[i + 1].second - points_[i].second) /
                              (points_[i + 1].first - points_[i].first));
            if (i > 0 && slopes_[i] < slopes_[i - 1]) convex_ = false;
        }
        for (const auto& [x, y] : points_) {
            xs_d_.push_back(to_double(x));
            ys_d_.push_back(to_double(y));
        }
        for (const auto& s : slopes_) slopes_d_.push_back(to_double(s));
    }

    double value(double x) const override {
        const std::size_t i = segment(x);
        return ys_d_[i] + slopes_d_[i] * (clamp(x) - xs_d_[i]);
    }
    double deriv1(double x) const override { return slopes_d_[segment(x)]; }
    double deriv2(double) const override { return 0.0; }
    bool exact() const override { return true; }
    Rational value_q(const Rational& x) const override {
        const std::size_t i = segment_q(x);
        return points_[i].second + slopes_[i] * (x - points_[i].first);
    }
    Rational deriv1_q(const Rational& x) const override { return slopes_[segment_q(x)]; }
    Rational deriv2_q(const Rational&) const override { return 0; }
    bool declared_convex() const override { return convex_; }
    std::string description() const override {
        std::ostringstream out;
        out << "pwl:";
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (i) out << ";";
            out << format_rational(points_[i].first) << "," << format_rational(points_[i].second);
        }
        return out.str();
    }

private:
    static double clamp(double x) {
        if (x < -1e-9 || x > 1 + 1e-9)
            throw std::domain_error("piecewise_linear: argument outside [0, 1]");
        return std::min(1.0, std::max(0.0, x));
    }
    // Segment index whose half-open interval [x_i, x_{i+1}) holds x; the
    // last segment also owns x = 1.
    std::size_t segment(double x) const {
        const double c = clamp(x);
        std::size_t i = std::upper_bound(xs_d_.begin(), xs_d_.end(), c) - xs_d_.begin();
        if (i > 0) --i;
        return std::min(i, slopes_.size() - 1);
    }
    std::size_t segment_q(const Rational& x) const {
        if (x < 0 || x > 1) throw std::domain_error("piecewise_linear: argument outside [0, 1]");
        std::size_t i = 0;
        while (i + 1 < slopes_.size() && x >= points_[i + 1].first) ++i;
        return i;
    }

    std::vector<std::pair<Rational, Rational>> points_;
    std::vector<Rational> slopes_;
    std::vector<double> xs_d_, ys_d_, slopes_d_;
    bool convex_;
};

class CustomImpl final : public Impl {
public:
    CustomImpl(std::string name, std::function<double(double)> value,
               std::function<double(double)> deriv1, std::function<double(double)> deriv2,
               bool convex, std::function<double(double)> deriv3)
        : name_(std::move(name)),
          value_(std::move(value)),
          deriv1_(std::move(deriv1)),
          deriv2_(std::move(deriv2)),
          deriv3_(std::move(deriv3)),
          convex_(convex) {
        if (!value_ || !deriv1_ || !deriv2_)
            throw std::invalid_argument("FunctionOracle::custom: missing callback");
    }

    double value(double x) const override { return value_(x); }
    double deriv1(double x) const override { return deriv1_(x); }
    double deriv2(double x) const override { return deriv2_(x); }
    bool has_deriv3() const override { return static_cast<bool>(deriv3_); }
    double deriv3(double x) const override {
        if (!deriv3_) throw std::logic_error("FunctionOracle: no third derivative declared");
        return deriv3_(x);
    }
    bool declared_convex() const override { return convex_; }
    std::string description() const override { return "custom:" + name_; }

private:
    std::string name_;
    std::function<double(double)> value_, deriv1_, deriv2_, deriv3_;
    bool convex_;
};

// F(x) + a + b x
class ShiftImpl final : public Impl {
public:
    ShiftImpl(std::shared_ptr<const Impl> parent, Rational a, Rational b)
        : parent_(std::move(parent)),
          a_(std::move(a)),
          b_(std::move(b)),
          a_d_(to_double(a_)),
          b_d_(to_double(b_)) {}

    double value(double x) const override { return parent_->value(x) + a_d_ + b_d_ * x; }
    double deriv1(double x) const override { return parent_->deriv1(x) + b_d_; }
    double deriv2(double x) const override { return parent_->deriv2(x); }
    bool has_deriv3() const override { return parent_->has_deriv3(); }
    double deriv3(double x) const override { return parent_->deriv3(x); }
    bool exact() const override { return parent_->exact(); }
    Rational value_q(const Rational& x) const override {
        return parent_->value_q(x) + a_ + b_ * x;
    }
    Rational deriv1_q(const Rational& x) const override { return parent_->deriv1_q(x) + b_; }
    Rational deriv2_q(const Rational& x) const override { return parent_->deriv2_q(x); }
    bool declared_convex() const override { return parent_->declared_convex(); }
    std::string description() const override {
        return "shift(" + parent_->description() + "," + format_rational(a_) + "," +
               format_rational(b_) + ")";
    }

private:
    std::shared_ptr<const Impl> parent_;
    Rational a_, b_;
    double a_d_, b_d_;
};

// F(1 - x)
class ReflectImpl final : public Impl {
public:
    explicit ReflectImpl(std::shared_ptr<const Impl> parent) : parent_(std::move(parent)) {}

    double value(double x) const override { return parent_->value(1.0 - x); }
    double deriv1(double x) const override { return -parent_->deriv1(1.0 - x); }
    double deriv2(double x) const override { return parent_->deriv2(1.0 - x); }
    bool has_deriv3() const override { return parent_->has_deriv3(); }
    double deriv3(double x) const override { return -parent_->deriv3(1.0 - x); }
    bool exact() const override { return parent_->exact(); }
    Rational value_q(const Rational& x) const override { return parent_->value_q(1 - x); }
    Rational deriv1_q(const Rational& x) const override { return -parent_->deriv1_q(1 - x); }
    Rational deriv2_q(const Rational& x) const override { return parent_->deriv2_q(1 - x); }
    bool declared_convex() const override { return parent_->declared_convex(); }
    std::string description() const override { return "reflect(" + parent_->description() + ")"; }

private:
    std::shared_ptr<const Impl> parent_;
};

// F(r + (s - r) x)
class RescaleImpl final : public Impl {
public:
    RescaleImpl(std::shared_ptr<const Impl> parent, Rational r, Rational s)
        : parent_(std::move(parent)), r_(std::move(r)), s_(std::move(s)) {
        if (r_ < 0 || r_ > 1 || s_ < 0 || s_ > 1)
            throw std::invalid_argument("FunctionOracle::rescaled: endpoints must lie in [0, 1]");
        r_d_ = to_double(r_);
        span_d_ = to_double(s_ - r_);
    }

    double value(double x) const override { return parent_->value(r_d_ + span_d_ * x); }
    double deriv1(double x) const override {
        return span_d_ * parent_->deriv1(r_d_ + span_d_ * x);
    }
    double deriv2(double x) const override {
        return span_d_ * span_d_ * parent_->deriv2(r_d_ + span_d_ * x);
    }
    bool has_deriv3() const override { return parent_->has_deriv3(); }
    double deriv3(double x) const override {
        return span_d_ * span_d_ * span_d_ * parent_->deriv3(r_d_ + span_d_ * x);
    }
    bool exact() const override { return parent_->exact(); }
    Rational value_q(const Rational& x) const override {
        return parent_->value_q(r_ + (s_ - r_) * x);
    }
    Rational deriv1_q(const Rational& x) const override {
        return (s_ - r_) * parent_->deriv1_q(r_ + (s_ - r_) * x);
    }
    Rational deriv2_q(const Rational& x) const override {
        return (s_ - r_) * (s_ - r_) * parent_->deriv2_q(r_ + (s_ - r_) * x);
    }
    bool declared_convex() const override { return parent_->declared_convex(); }
    std::string description() const override {
        return "rescale(" + parent_->description() + "," + format_rational(r_) + "," +
               format_rational(s_) + ")";
    }

private:
    std::shared_ptr<const Impl> parent_;
    Rational r_, s_;
    double r_d_ = 0, span_d_ = 0;
};

}  // namespace

double FunctionOracle::value(double x) const { return impl_->value(x); }
double FunctionOracle::deriv1(double x) const { return impl_->deriv1(x); }
double FunctionOracle::deriv2(double x) const { return impl_->deriv2(x); }
bool FunctionOracle::has_deriv3() const { return impl_->has_deriv3(); }
double FunctionOracle::deriv3(double x) const { return impl_->deriv3(x); }
bool FunctionOracle::exact() const { return impl_->exact(); }
Rational FunctionOracle::value_q(const Rational& x) const { return impl_->value_q(x); }
Rational FunctionOracle::deriv1_q(const Rational& x) const { return impl_->deriv1_q(x); }
Rational FunctionOracle::deriv2_q(const Rational& x) const { return impl_->deriv2_q(x); }
bool FunctionOracle::declared_convex() const { return impl_->declared_convex(); }
std::string FunctionOracle::description() const { return impl_->description(); }

FunctionOracle FunctionOracle::power(int k) {
    return FunctionOracle(std::make_shared<PowerImpl>(k));
}

FunctionOracle FunctionOracle::piecewise_linear(
    std::vector<std::pair<Rational, Rational>> points) {
    return FunctionOracle(std::make_shared<PiecewiseImpl>(std::move(points)));
}

FunctionOracle FunctionOracle::custom(std::string name, std::function<double(double)> value,
                                      std::function<double(double)> deriv1,
                                      std::function<double(double)> deriv2, bool convex,
                                      std::function<double(double)> deriv3) {
    return FunctionOracle(std::make_shared<CustomImpl>(std::move(name), std::move(value),
                                                       std::move(deriv1), std::move(deriv2),
                                                       convex, std::move(deriv3)));
}

FunctionOracle FunctionOracle::shifted(const Rational& a, const Rational& b) const {
    return FunctionOracle(std::make_shared<ShiftImpl>(impl_, a, b));
}

FunctionOracle FunctionOracle::reflected() const {
    return FunctionOracle(std::make_shared<ReflectImpl>(impl_));
}

FunctionOracle FunctionOracle::rescaled(const Rational& r, const Rational& s) const {
    return FunctionOracle(std::make_shared<RescaleImpl>(impl_, r, s));
}

FunctionOracle parse_function_spec(const std::string& spec) {
    if (spec.rfind("power:", 0) == 0) {
        const std::string arg = spec.substr(6);
        std::size_t used = 0;
        int k = 0;
        try {
            k = std::stoi(arg, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_function_spec: bad power exponent '" + arg + "'");
        }
        if (used != arg.size())
            throw std::invalid_argument("parse_function_spec: bad power exponent '" + arg + "'");
        return FunctionOracle::power(k);
    }
    if (spec.rfind("pwl:", 0) == 0) {
        std::vector<std::pair<Rational, Rational>> points;
        std::stringstream body(spec.substr(4));
        std::string pair_text;
        while (std::getline(body, pair_text, ';')) {
            const auto comma = pair_text.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("parse_function_spec: expected 'x,y' in '" +
                                            pair_text + "'");
            points.emplace_back(parse_rational(pair_text.substr(0, comma)),
                                parse_rational(pair_text.substr(comma + 1)));
        }
        return FunctionOracle::piecewise_linear(std::move(points));
    }
    throw std::invalid_argument("parse_function_spec: expected 'power:k' or 'pwl:...', got '" +
                                spec + "'");
}

}  // namespace stardense
