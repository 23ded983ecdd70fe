#include "render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "mfnps/errors.hpp"

namespace mfnps::cli {

using nlohmann::json;

namespace {

constexpr int kSignificantDigits = 16;

std::string cell_text(const EnergySolution& s) {
  return s.converged() ? format_value(*s.energy) : "NC";
}

json value_json(const EnergySolution& s) {
  return s.converged() ? json(rendered(*s.energy)) : json(nullptr);
}

json parameters_json(const SchemeSpec& scheme) {
  json params = json::object();
  const auto names = parameter_names(scheme);
  for (std::size_t i = 0; i < names.size(); ++i) {
    params[names[i]] = rendered(scheme.parameters[i]);
  }
  return params;
}

json solution_json(const EnergySolution& s) {
  return json{{"scheme", s.scheme.descriptor()},
              {"lambda", s.scheme.lambda},
              {"n", s.state_n},
              {"K", s.order_K},
              {"value", value_json(s)},
              {"status", to_string(s.status)},
              {"iterations", s.iterations},
              {"residual", s.final_residual},
              {"parameters", parameters_json(s.scheme)}};
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string format_plain(double value) {
  std::ostringstream os;
  os.precision(6);
  os << value;
  return os.str();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::Table;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw InputError("unknown output format '" + name +
                   "' (expected table, csv or json)");
}

std::string format_value(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, kSignificantDigits);
  return std::string(buf, res.ptr);
}

double rendered(double value) {
  const std::string text = format_value(value);
  double out = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

std::string render_energy(const EnergySolution& s, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json:
      os << solution_json(s).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      os << "scheme,lambda,n,K,value,status,iterations,residual\n"
         << s.scheme.descriptor() << ',' << format_value(s.scheme.lambda) << ','
         << s.state_n << ',' << s.order_K << ',' << cell_text(s) << ','
         << to_string(s.status) << ',' << s.iterations << ','
         << format_value(s.final_residual) << '\n';
      break;
    case OutputFormat::Table: {
      os << "scheme      " << s.scheme.descriptor() << '\n'
         << "lambda      " << format_value(s.scheme.lambda) << '\n'
         << "state       " << s.state_n << '\n'
         << "order       " << s.order_K << '\n';
      const auto names = parameter_names(s.scheme);
      for (std::size_t i = 0; i < names.size(); ++i) {
        os << names[i] << std::string(12 - std::min<std::size_t>(names[i].size(), 11), ' ')
           << format_value(s.scheme.parameters[i]) << '\n';
      }
      os << "energy      " << cell_text(s) << '\n'
         << "status      " << to_string(s.status) << '\n'
         << "iterations  " << s.iterations << '\n'
         << "residual    " << format_plain(s.final_residual) << '\n';
      break;
    }
  }
  return os.str();
}

std::string render_table(const ComputedTable& t, OutputFormat format) {
  const auto& layout = t.layout;
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      json rows = json::array();
      for (std::size_t r = 0; r < t.cells.size(); ++r) {
        json values = json::array();
        json statuses = json::array();
        for (const auto& cell : t.cells[r]) {
          values.push_back(value_json(cell));
          statuses.push_back(to_string(cell.status));
        }
        rows.push_back({{"key", layout.row_values[r]},
                        {"values", values},
                        {"status", statuses}});
      }
      const json doc{{"id", layout.id},
                     {"title", layout.title},
                     {"row_header", layout.row_header},
                     {"columns", layout.columns},
                     {"rows", rows}};
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "row_key";
      for (const auto& c : layout.columns) os << ',' << c;
      os << '\n';
      for (std::size_t r = 0; r < t.cells.size(); ++r) {
        os << layout.row_values[r];
        for (const auto& cell : t.cells[r]) os << ',' << cell_text(cell);
        os << '\n';
      }
      break;
    case OutputFormat::Table: {
      constexpr std::size_t kWidth = 20;
      os << "Table " << layout.id << ": " << layout.title << '\n'
         << pad(layout.row_header, 4);
      for (const auto& c : layout.columns) os << pad(c, kWidth);
      os << '\n';
      for (std::size_t r = 0; r < t.cells.size(); ++r) {
        os << pad(std::to_string(layout.row_values[r]), 4);
        for (const auto& cell : t.cells[r]) os << pad(cell_text(cell), kWidth);
        os << '\n';
      }
      os << "NC = no convergence\n";
      break;
    }
  }
  return os.str();
}

std::string render_oracle(const OracleResult& result, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      json levels = json::array();
      for (std::size_t i = 0; i < result.eigenvalues.size(); ++i) {
        levels.push_back({{"n", i},
                          {"value", rendered(result.eigenvalues[i])},
                          {"truncation_estimate", result.truncation_estimate[i]}});
      }
      os << json{{"lambda", result.lambda},
                 {"dimension", result.dimension},
                 {"levels", levels}}
                .dump(2)
         << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "n,value,truncation_estimate\n";
      for (std::size_t i = 0; i < result.eigenvalues.size(); ++i) {
        os << i << ',' << format_value(result.eigenvalues[i]) << ','
           << format_value(result.truncation_estimate[i]) << '\n';
      }
      break;
    case OutputFormat::Table:
      os << "lambda " << format_value(result.lambda) << ", basis dimension "
         << result.dimension << '\n'
         << pad("n", 4) << pad("energy", 22) << pad("truncation", 14) << '\n';
      for (std::size_t i = 0; i < result.eigenvalues.size(); ++i) {
        os << pad(std::to_string(i), 4) << pad(format_value(result.eigenvalues[i]), 22)
           << pad(format_plain(result.truncation_estimate[i]), 14) << '\n';
      }
      break;
  }
  return os.str();
}

std::string render_compare(const Comparison& cmp, OutputFormat format) {
  const auto& s = cmp.series;
  std::optional<double> abs_diff;
  std::optional<double> rel_diff;
  std::optional<int> digits;
  if (s.converged()) {
    abs_diff = std::abs(*s.energy - cmp.oracle);
    rel_diff = *abs_diff / std::max(std::abs(cmp.oracle), 1e-300);
    digits = shared_significant_digits(*s.energy, cmp.oracle);
  }
  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      json doc = solution_json(s);
      doc["oracle"] = rendered(cmp.oracle);
      doc["abs_diff"] = abs_diff ? json(*abs_diff) : json(nullptr);
      doc["rel_diff"] = rel_diff ? json(*rel_diff) : json(nullptr);
      doc["digits_agreed"] = digits ? json(*digits) : json(nullptr);
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "scheme,lambda,n,K,value,oracle,abs_diff,rel_diff,digits_agreed\n"
         << s.scheme.descriptor() << ',' << format_value(s.scheme.lambda) << ','
         << s.state_n << ',' << s.order_K << ',' << cell_text(s) << ','
         << format_value(cmp.oracle) << ','
         << (abs_diff ? format_value(*abs_diff) : "NC") << ','
         << (rel_diff ? format_value(*rel_diff) : "NC") << ','
         << (digits ? std::to_string(*digits) : "NC") << '\n';
      break;
    case OutputFormat::Table:
      os << "series      " << cell_text(s) << "  (" << s.scheme.descriptor()
         << ", K=" << s.order_K << ", " << to_string(s.status) << ")\n"
         << "oracle      " << format_value(cmp.oracle) << '\n'
         << "abs diff    " << (abs_diff ? format_plain(*abs_diff) : "NC") << '\n'
         << "rel diff    " << (rel_diff ? format_plain(*rel_diff) : "NC") << '\n'
         << "digits      " << (digits ? std::to_string(*digits) : "NC") << '\n';
      break;
  }
  return os.str();
}

int exit_code(const EnergySolution& solution) {
  return solution.converged() ? kExitConverged : kExitNoConvergence;
}

}  // namespace mfnps::cli
