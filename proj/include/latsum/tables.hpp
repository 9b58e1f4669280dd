#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latsum/numeric.hpp"

namespace latsum {

enum class OutputFormat { CSV, JSON, TEXT };

struct TableCell {
  int p = 0;
  int q = 0;
  std::string family;  // closed-form tables: ix or half
  std::string r;       // closed-form tables: singular value index
  Real value;
  std::string value_text;  // 6 significant digits, "0" for exact zeros
  std::string method;
  Real delta;  // distance to the printed reference, relative for decimals
  bool has_reference = false;
  std::optional<std::string> exact_form;
  std::string provenance;
};

struct Table {
  std::string name;
  std::string title;
  bool closed_form = false;
  std::vector<TableCell> cells;
};

// printed reference cell
struct ReferenceCell {
  int p = 0;
  int q = 0;
  std::string family;
  std::string r;
  std::string text;
};

const std::vector<std::string>& table_names();
bool is_table_name(const std::string& name);

// LATSUM_DATA_DIR from the environment, else the source tree default
std::string data_dir();

std::vector<ReferenceCell> load_reference(const std::string& name);
std::vector<ReferenceCell> load_reference(const std::string& name, const std::string& dir);

// cells in row-major order; computed on `threads` workers (0 = hardware)
Table generate_table(const std::string& name, unsigned threads = 0);

std::string format_table(const Table& t, OutputFormat fmt);

struct RegressionReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// compares value_text and exact_form against <dir>/golden/table<name>.csv
RegressionReport compare_golden(const Table& t);
RegressionReport compare_golden(const Table& t, const std::string& golden_file);
void write_golden(const Table& t, const std::string& golden_file);
std::string golden_path(const std::string& name);

}  // namespace latsum
