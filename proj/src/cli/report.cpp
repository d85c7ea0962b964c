#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "hyperres/cli.hpp"

namespace hyperres::cli {

nlohmann::ordered_json to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = c.command;
  j["field"] = c.field;
  j["seed"] = c.seed;
  j["trials"] = c.trials ? nlohmann::ordered_json(*c.trials) : nlohmann::ordered_json(nullptr);
  j["format"] = c.format;
  j["exploratory"] = c.exploratory;
  j["vars"] = c.vars;
  j["ideal"] = c.ideal;
  j["toric"] = c.toric;
  j["random_gens"] = c.random_gens;
  j["forms"] = c.forms;
  j["random_forms"] = c.random_forms;
  j["structured"] = c.structured;
  j["variant"] = c.variant;
  j["zero_form"] = c.zero_form;
  j["degree"] = c.degree;
  j["max_vars"] = c.max_vars;
  j["max_gen_degree"] = c.max_gen_degree;
  j["max_degree"] = c.max_degree;
  j["stronger"] = c.stronger;
  j["hf"] = c.hf;
  j["nvars"] = c.nvars;
  j["horizon"] = c.horizon;
  j["power"] = c.power;
  j["num_elements"] = c.num_elements;
  j["max_trials"] = c.max_trials;
  j["characteristic_bound"] = c.characteristic_bound;
  return j;
}

std::string render_json(const Report& report) { return report.document.dump(2) + "\n"; }

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
  os << '\n';
}

}  // namespace

std::string render_csv(const Report& report) {
  std::ostringstream os;
  csv_line(os, report.csv_header);
  for (const auto& row : report.csv_rows) csv_line(os, row);
  return os.str();
}

void write_report(const Report& report, const ExperimentConfig& config) {
  std::string text;
  if (config.format == "json")
    text = render_json(report);
  else if (config.format == "csv")
    text = render_csv(report);
  else
    throw std::invalid_argument("unknown report format '" + config.format + "'");

  if (config.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(config.out);
  if (!file) throw std::runtime_error("cannot open '" + config.out + "' for writing");
  file << text;
}

nlohmann::ordered_json without_timing(const nlohmann::ordered_json& document) {
  if (document.is_object()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [key, value] : document.items())
      if (key != "elapsed_ms") out[key] = without_timing(value);
    return out;
  }
  if (document.is_array()) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& value : document) out.push_back(without_timing(value));
    return out;
  }
  return document;
}

}  // namespace hyperres::cli
