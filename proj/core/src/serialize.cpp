#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qcspec/error.hpp"
#include "qcspec/report.hpp"

namespace qcspec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string format12(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

nlohmann::ordered_json to_json(const Value& v) {
  return std::visit(overloaded{
                        [](std::monostate) { return nlohmann::ordered_json(nullptr); },
                        [](double d) {
                          if (!std::isfinite(d)) return nlohmann::ordered_json(format12(d));
                          return nlohmann::ordered_json(round12(d));
                        },
                        [](long long i) { return nlohmann::ordered_json(i); },
                        [](bool b) { return nlohmann::ordered_json(b); },
                        [](const std::string& s) { return nlohmann::ordered_json(s); },
                    },
                    v);
}

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const Field& f : r) obj[f.key] = to_json(f.value);
  return obj;
}

std::string to_text(const Value& v) {
  return std::visit(overloaded{
                        [](std::monostate) { return std::string(); },
                        [](double d) { return format12(d); },
                        [](long long i) { return std::to_string(i); },
                        [](bool b) { return std::string(b ? "true" : "false"); },
                        [](const std::string& s) { return s; },
                    },
                    v);
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_table(const std::vector<Record>& rows, const Record& header_source) {
  std::ostringstream os;
  for (std::size_t i = 0; i < header_source.size(); ++i)
    os << (i ? "," : "") << csv_cell(header_source[i].key);
  os << '\n';
  for (const Record& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(to_text(r[i].value));
    os << '\n';
  }
  return os.str();
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  return std::stod(format12(v));
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "md") return OutputFormat::Markdown;
  throw Error(ErrorKind::InvalidInput, "unknown output format '" + name + "' (json|csv|md)");
}

std::string render_record(const std::string& command, const Record& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      obj["command"] = command;
      for (const Field& f : record) obj[f.key] = to_json(f.value);
      return obj.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      return csv_table({record}, record);
    case OutputFormat::Markdown: {
      std::ostringstream os;
      os << "| key | value |\n|---|---|\n";
      os << "| command | " << md_cell(command) << " |\n";
      for (const Field& f : record) os << "| " << md_cell(f.key) << " | " << md_cell(to_text(f.value)) << " |\n";
      return os.str();
    }
  }
  return {};
}

std::string render_table(const std::string& command, const std::vector<Record>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      obj["command"] = command;
      obj["rows"] = nlohmann::ordered_json::array();
      for (const Record& r : rows) obj["rows"].push_back(to_json(r));
      return obj.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      if (rows.empty()) return {};
      return csv_table(rows, rows.front());
    case OutputFormat::Markdown: {
      if (rows.empty()) return {};
      std::ostringstream os;
      os << '|';
      for (const Field& f : rows.front()) os << ' ' << md_cell(f.key) << " |";
      os << "\n|";
      for (std::size_t i = 0; i < rows.front().size(); ++i) os << "---|";
      os << '\n';
      for (const Record& r : rows) {
        os << '|';
        for (const Field& f : r) os << ' ' << md_cell(to_text(f.value)) << " |";
        os << '\n';
      }
      return os.str();
    }
  }
  return {};
}

}  // namespace qcspec
