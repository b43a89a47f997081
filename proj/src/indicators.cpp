#include "perfmatrix/indicators.hpp"

#include "perfmatrix/errors.hpp"

#include <cmath>

namespace perfmatrix {

namespace {

double squared_over(Count value, Count total)
{
    if (total == 0)
        return 0.0;
    const double v = static_cast<double>(value);
    return (v * v) / static_cast<double>(total);
}

double share(Count part, Count total)
{
    return total == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(total);
}

void check_triple(const char* label, double a, double b, double c, bool allow_zero)
{
    for (double w : {a, b, c}) {
        if (!(w >= 0.0 && w <= 1.0))
            throw ValidationError(std::string(label) + " weight outside [0, 1]");
    }
    if (allow_zero && a == 0.0 && b == 0.0 && c == 0.0)
        return;
    if (std::abs(a + b + c - 1.0) > 1e-12)
        throw ValidationError(std::string(label) + " weights do not sum to 1");
}

} // namespace

void validate(const WeightScheme& w, bool allow_zero_citation_triple)
{
    check_triple("publication", w.xc, w.xt, w.xz, false);
    check_triple("citation", w.yc, w.yt, w.ye, allow_zero_citation_triple);
}

std::string_view to_string(TraceSign s) noexcept
{
    return s == TraceSign::positive ? "positive" : "nonpositive";
}

WeightScheme weights(const Partition& part)
{
    WeightScheme w;
    w.xc = share(part.Pc, part.P);
    w.xt = share(part.Pt, part.P);
    w.xz = share(part.Pz, part.P);
    w.yc = share(part.Cc, part.C);
    w.yt = share(part.Ct, part.C);
    w.ye = share(part.Ce, part.C);
    return w;
}

AcademicVectors vectors(const Partition& part)
{
    AcademicVectors v;
    v.X = {squared_over(part.Pc, part.P), squared_over(part.Pt, part.P), squared_over(part.Pz, part.P)};
    v.Y = {squared_over(part.Cc, part.C), squared_over(part.Ct, part.C), squared_over(part.Ce, part.C)};
    for (std::size_t i = 0; i < 3; ++i)
        v.Z[i] = v.Y[i] - v.X[i];
    return v;
}

PerformanceMatrix performance_matrix(const Partition& part)
{
    const AcademicVectors v = vectors(part);
    PerformanceMatrix m;
    m.X = v.X;
    m.Y = v.Y;
    m.Z = v.Z;
    m.T = m.X[0] + m.Y[1] + m.Z[2];
    return m;
}

double trace_fn(Count Pc, Count Ct, Count Ce, Count Pz, Count P, Count C)
{
    // Same association as X1 + Y2 + Z3 so both routes round identically.
    return squared_over(Pc, P) + squared_over(Ct, C) + (squared_over(Ce, C) - squared_over(Pz, P));
}

double i3_generic(std::span<const double> values, std::span<const double> weights)
{
    if (values.size() != weights.size())
        throw LengthMismatch("i3: " + std::to_string(values.size()) + " values but "
                             + std::to_string(weights.size()) + " weights");
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (weights[i] < 0.0)
            throw ValidationError("i3: negative weight at position " + std::to_string(i + 1));
        sum += weights[i] * values[i];
    }
    return sum;
}

IndicatorBundle indicator_bundle(const Partition& part)
{
    const PerformanceMatrix m = performance_matrix(part);
    IndicatorBundle b;
    b.h = part.Pc;
    b.I3X = m.X[0] + m.X[1] + m.X[2];
    b.I3Y = m.Y[0] + m.Y[1] + m.Y[2];
    b.T = m.T;
    b.sign = m.T > 0.0 ? TraceSign::positive : TraceSign::nonpositive;
    return b;
}

std::string_view to_string(Indicator id) noexcept
{
    switch (id) {
    case Indicator::T: return "T";
    case Indicator::h: return "h";
    case Indicator::I3X: return "I3X";
    case Indicator::I3Y: return "I3Y";
    case Indicator::X1: return "X1";
    case Indicator::X2: return "X2";
    case Indicator::X3: return "X3";
    case Indicator::Y1: return "Y1";
    case Indicator::Y2: return "Y2";
    case Indicator::Y3: return "Y3";
    case Indicator::Z1: return "Z1";
    case Indicator::Z2: return "Z2";
    case Indicator::Z3: return "Z3";
    }
    return "?";
}

Indicator parse_indicator(std::string_view id)
{
    for (Indicator ind : kAllIndicators) {
        if (to_string(ind) == id)
            return ind;
    }
    throw UnknownIndicator("unknown indicator '" + std::string(id)
                           + "' (expected T, h, I3X, I3Y or X1..Z3)");
}

double indicator_value(Indicator id, const PerformanceMatrix& m, const IndicatorBundle& b) noexcept
{
    switch (id) {
    case Indicator::T: return m.T;
    case Indicator::h: return static_cast<double>(b.h);
    case Indicator::I3X: return b.I3X;
    case Indicator::I3Y: return b.I3Y;
    case Indicator::X1: return m.X[0];
    case Indicator::X2: return m.X[1];
    case Indicator::X3: return m.X[2];
    case Indicator::Y1: return m.Y[0];
    case Indicator::Y2: return m.Y[1];
    case Indicator::Y3: return m.Y[2];
    case Indicator::Z1: return m.Z[0];
    case Indicator::Z2: return m.Z[1];
    case Indicator::Z3: return m.Z[2];
    }
    return 0.0;
}

} // namespace perfmatrix
