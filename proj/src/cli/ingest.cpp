#include "expectile/cli/ingest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace expectile::cli {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

bool parse_decimal(std::string_view text, double& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

// Parses every comma-separated token of a line; blank tokens are ignored.
bool parse_line(std::string_view line, std::vector<double>& out) {
  std::vector<double> parsed;
  while (true) {
    const auto comma = line.find(',');
    const std::string_view token = trim(line.substr(0, comma));
    if (!token.empty()) {
      double v = 0.0;
      if (!parse_decimal(token, v)) return false;
      parsed.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  out.insert(out.end(), parsed.begin(), parsed.end());
  return true;
}

}  // namespace

const DistributionOracle& as_oracle(const Source& source) {
  return std::visit(
      [](const auto& d) -> const DistributionOracle& { return d; }, source);
}

EmpiricalDistribution parse_sample_text(std::string_view text) {
  constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (text.substr(0, kBom.size()) == kBom) text.remove_prefix(kBom.size());

  std::vector<double> data;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    ++line_no;
    if (!parse_line(line, data) && line_no != 1) {
      throw ParseError(line_no, "not a number: '" +
                                    std::string(trim(line)) + "'");
    }
  }
  return EmpiricalDistribution::from_data(std::move(data));
}

EmpiricalDistribution read_sample_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputUnavailable("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sample_text(buffer.str());
}

AnalyticDistribution parse_distribution_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidSpec("distribution spec needs the form FAMILY:PARAMS");
  }
  const std::string_view family = trim(spec.substr(0, colon));
  std::vector<double> params;
  if (!parse_line(spec.substr(colon + 1), params)) {
    throw InvalidSpec("malformed parameters in '" + std::string(spec) + "'");
  }
  const auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw InvalidSpec("'" + std::string(family) + "' takes " +
                        std::to_string(n) + " parameter(s)");
    }
  };
  try {
    if (family == "normal") {
      expect(2);
      return AnalyticDistribution::normal(params[0], params[1]);
    }
    if (family == "uniform") {
      expect(2);
      return AnalyticDistribution::uniform(params[0], params[1]);
    }
    if (family == "point") {
      expect(1);
      return AnalyticDistribution::point_mass(params[0]);
    }
  } catch (const InvalidParameter& e) {
    throw InvalidSpec(e.what());
  }
  throw InvalidSpec("unknown distribution family '" + std::string(family) + "'");
}

bool parse_real(std::string_view text, double& out) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text, out);
  double num = 0.0;
  double den = 0.0;
  if (!parse_decimal(text.substr(0, slash), num) ||
      !parse_decimal(text.substr(slash + 1), den) || den == 0.0) {
    return false;
  }
  out = num / den;
  return true;
}

std::vector<AlphaLevel> parse_alpha_list(std::string_view text) {
  std::vector<AlphaLevel> alphas;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    double v = 0.0;
    if (!parse_real(token, v)) {
      throw InvalidParameter("malformed alpha '" + std::string(token) + "'");
    }
    alphas.emplace_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return alphas;
}

}  // namespace expectile::cli
