#pragma once

// Academic vectors X, Y, Z, the performance matrix built from them, its
// trace, and the I3-style weighted class indicators.

#include "perfmatrix/metrics.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>

namespace perfmatrix {

/// Class shares of a partition. Citation weights are all zero when C = 0.
struct WeightScheme {
    double xc = 0, xt = 0, xz = 0;
    double yc = 0, yt = 0, ye = 0;
};

/// Throws ValidationError unless each triple sums to 1 (within 1e-12) and
/// every weight lies in [0, 1]. `allow_zero_citation_triple` accepts an
/// all-zero (yc, yt, ye), the C = 0 convention.
void validate(const WeightScheme& w, bool allow_zero_citation_triple = true);

using Vec3 = std::array<double, 3>;

struct AcademicVectors {
    Vec3 X{};  ///< (Pc^2, Pt^2, Pz^2) / P
    Vec3 Y{};  ///< (Cc^2, Ct^2, Ce^2) / C, zero when C = 0
    Vec3 Z{};  ///< Y - X
};

/// Rows X, Y, Z and the trace T = X1 + Y2 + Z3.
struct PerformanceMatrix {
    Vec3 X{};
    Vec3 Y{};
    Vec3 Z{};
    double T = 0;

    const Vec3& row(int i) const { return i == 0 ? X : (i == 1 ? Y : Z); }
    double at(int row_index, int col) const { return row(row_index)[static_cast<std::size_t>(col)]; }
};

enum class TraceSign { positive, nonpositive };

std::string_view to_string(TraceSign s) noexcept;

struct IndicatorBundle {
    Count h = 0;
    double I3X = 0;
    double I3Y = 0;
    double T = 0;
    TraceSign sign = TraceSign::nonpositive;
};

WeightScheme weights(const Partition& part);

AcademicVectors vectors(const Partition& part);

PerformanceMatrix performance_matrix(const Partition& part);

/// T as a function of (Pc, Ct, Ce, Pz) with P and C held as parameters:
/// Pc^2/P + Ct^2/C + Ce^2/C - Pz^2/P. The citation terms vanish when C = 0.
double trace_fn(Count Pc, Count Ct, Count Ce, Count Pz, Count P, Count C);

/// Weighted class aggregate sum(w_i * v_i). Weights are not required to sum
/// to one. Throws LengthMismatch on unequal lengths, ValidationError on a
/// negative weight.
double i3_generic(std::span<const double> values, std::span<const double> weights);

IndicatorBundle indicator_bundle(const Partition& part);

/// Every sortable / displayable quantity of an evaluated entity.
enum class Indicator { T, h, I3X, I3Y, X1, X2, X3, Y1, Y2, Y3, Z1, Z2, Z3 };

inline constexpr std::array<Indicator, 13> kAllIndicators = {
    Indicator::T,  Indicator::h,  Indicator::I3X, Indicator::I3Y, Indicator::X1,
    Indicator::X2, Indicator::X3, Indicator::Y1,  Indicator::Y2,  Indicator::Y3,
    Indicator::Z1, Indicator::Z2, Indicator::Z3};

/// The nine matrix cells in row-major order followed by T.
inline constexpr std::array<Indicator, 10> kMatrixCells = {
    Indicator::X1, Indicator::X2, Indicator::X3, Indicator::Y1, Indicator::Y2,
    Indicator::Y3, Indicator::Z1, Indicator::Z2, Indicator::Z3, Indicator::T};

std::string_view to_string(Indicator id) noexcept;

/// Throws UnknownIndicator for anything outside T|h|I3X|I3Y|X1..Z3.
Indicator parse_indicator(std::string_view id);

double indicator_value(Indicator id, const PerformanceMatrix& m, const IndicatorBundle& b) noexcept;

} // namespace perfmatrix
