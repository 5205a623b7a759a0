#pragma once

#include <span>
#include <string>

#include "ginter/circle_slice.hpp"
#include "ginter/curve_trace.hpp"
#include "ginter/descent.hpp"
#include "ginter/line_slice.hpp"
#include "ginter/oracle.hpp"

namespace ginter {

// JSON output schema, version 1. Key order is fixed and doubles are printed
// in shortest round-trip form, so outputs for identical inputs are
// byte-identical. Undefined min_gap (no alpha/beta pairs) serializes as null.
inline constexpr int kSchemaVersion = 1;

std::string to_json(const CircleSection& sec, int indent = 2);
std::string to_json(const LineSection& sec, int indent = 2);
std::string to_json(const RootReport& rep, int indent = 2);
std::string roots_to_json(std::span<const RootReport> reports, int indent = 2);
std::string to_json(const CurveSet& cs, double r_star, bool has_boundary, double boundary,
                    int indent = 2);
std::string to_json(const RootMatch& match, int indent = 2);

/// One root per row: re,im,residual,method,iterations.
std::string roots_to_csv(std::span<const RootReport> reports);
/// One vertex per row: kind,polyline_id,x,y.
std::string curves_to_csv(const CurveSet& cs);

}  // namespace ginter
