#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace expectile::cli {

/// 15 significant digits, shortest form ("2", "2.35555555555556").
std::string format_number(double v);

/// Rounds to 15 significant digits so JSON output carries the same digits
/// as CSV output.
double round_significant(double v);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

std::string csv_row(const std::vector<std::string>& fields);

}  // namespace expectile::cli
