#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "expectile/alpha.hpp"
#include "expectile/analytic.hpp"
#include "expectile/empirical.hpp"
#include "expectile/errors.hpp"

namespace expectile::cli {

/// The input file could not be read.
class InputUnavailable : public Error {
 public:
  using Error::Error;
};

using Source = std::variant<EmpiricalDistribution, AnalyticDistribution>;

const DistributionOracle& as_oracle(const Source& source);

/// Numbers separated by newlines and/or commas. A first line that does not
/// parse as numbers is taken as a header and skipped; anything else that
/// does not parse raises ParseError with its 1-based line number.
EmpiricalDistribution parse_sample_text(std::string_view text);

/// Throws InputUnavailable, ParseError, EmptySample or NonFiniteDatum.
EmpiricalDistribution read_sample_file(const std::string& path);

/// "normal:MU,SIGMA", "uniform:A,B" or "point:C". Throws InvalidSpec.
AnalyticDistribution parse_distribution_spec(std::string_view spec);

/// Decimal number or a ratio "P/Q" of two decimals. Returns false on
/// malformed input.
bool parse_real(std::string_view text, double& out);

/// Comma-separated alpha levels. Throws InvalidAlpha or InvalidParameter.
std::vector<AlphaLevel> parse_alpha_list(std::string_view text);

}  // namespace expectile::cli
