#include "latsum/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "latsum/closed_form.hpp"
#include "latsum/errors.hpp"
#include "latsum/lattice.hpp"
#include "latsum/singular.hpp"
#include "latsum/trig_series.hpp"

#ifndef LATSUM_DATA_DIR
#define LATSUM_DATA_DIR "data"
#endif

namespace latsum {

namespace {

struct TableInfo {
  const char* name;
  const char* title;
  bool closed_form;
};

const TableInfo kTables[] = {
    {"1", "S_q^(p), hexagonal lattice", false},
    {"1a", "S_q^(p), square lattice", false},
    {"3", "S_(p+2)^(p)/pi, hexagonal lattice", false},
    {"3b", "S_(p+2)^(p)/pi, square lattice", false},
    {"4", "S_(p+2)^(p)(i sqrt(r))", true},
    {"4a", "S_(p+2)^(p)(i/sqrt(r))", true},
    {"6", "S_(p+2)^(p)((1+i sqrt(r))/2)", true},
    {"10a", "S_q^(p)(i)", true},
    {"10b", "S_q^(p)((1+i sqrt(3))/2)", true},
};

const TableInfo& info(const std::string& name) {
  for (const auto& t : kTables)
    if (name == t.name) return t;
  throw PreconditionError("unknown table '" + name + "'");
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    rows.push_back(split_csv_line(line));
  }
  return rows;
}

std::string six(const Real& v) { return v.to_string(6); }

// workers pull cell indices; each cell writes only its own slot
template <class F>
void parallel_cells(size_t n, unsigned threads, F&& work) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, std::max<size_t>(n, 1)));
  long bits = working_bits();
  std::vector<std::exception_ptr> errors(threads);
  auto body = [&](unsigned t) {
    PrecisionGuard g(bits);
    try {
      for (size_t i = t; i < n; i += threads) work(i);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Real reference_value(const std::string& text) { return ClosedForm::parse(text).eval(); }

void numeric_table(Table& t, unsigned threads) {
  const bool hex = t.name == "1" || t.name == "3";
  const bool diag = t.name == "3" || t.name == "3b";
  LatticeSpec lat = hex ? make_hexagonal() : make_square();
  std::vector<ReferenceCell> ref = load_reference(t.name);
  if (diag) {
    for (auto& c : ref) c.q = c.p + 2;
  }
  int max_q = 0, max_p = 0;
  for (const auto& c : ref) {
    max_q = std::max(max_q, c.q);
    max_p = std::max(max_p, c.p);
  }
  EpsDerivativeTable eps = make_eps_table(lat.tau, max_q, max_p);
  t.cells.resize(ref.size());
  parallel_cells(ref.size(), threads, [&](size_t i) {
    const ReferenceCell& rc = ref[i];
    TableCell& cell = t.cells[i];
    cell.p = rc.p;
    cell.q = rc.q;
    cell.method = method_name(Method::TRIG_SERIES);
    SumIndex idx{rc.p, rc.q};
    bool zero = (idx.r() >= 3 && symmetry_vanishes(idx, lat)) || idx.r() % 2;
    Real v = zero ? Real(0) : sum_fast(idx, lat, eps).value.re;
    if (diag) v /= Real::pi();
    cell.value = v;
    cell.value_text = zero ? "0" : six(v);
    Real r = reference_value(rc.text);
    cell.has_reference = true;
    cell.delta = r.is_zero() ? abs(v) : abs(v - r) / abs(r);
    std::ostringstream prov;
    prov << "S_" << rc.q << "^(" << rc.p << ") " << lat.name << (zero ? ", vanishes by symmetry" : "");
    cell.provenance = prov.str();
  });
}

void closed_table(Table& t, unsigned threads) {
  std::vector<ReferenceCell> ref = load_reference(t.name);
  // warm the derivative cache serially so workers mostly read it
  for (const auto& rc : ref) assemble_sum({rc.p, rc.q}, rc.family == "half" ? Family::HALF : Family::IX);
  t.cells.resize(ref.size());
  parallel_cells(ref.size(), threads, [&](size_t i) {
    const ReferenceCell& rc = ref[i];
    TableCell& cell = t.cells[i];
    cell.p = rc.p;
    cell.q = rc.q;
    cell.family = rc.family;
    cell.r = rc.r;
    cell.method = method_name(Method::SYMBOLIC_ELLIPTIC);
    Family fam = rc.family == "half" ? Family::HALF : Family::IX;
    SumIndex idx{rc.p, rc.q};
    SymExpr form = assemble_sum(idx, fam);
    ExactSum ex = exact_sum(idx, fam, mpq_class(rc.r, 10));
    Real tol = Real::ldexp(abs(ex.value) + Real(1), 32 - working_bits());
    bool zero = abs(ex.value) <= tol;
    cell.value = zero ? Real(0) : ex.value;
    cell.value_text = zero ? "0" : six(ex.value);
    cell.exact_form = form.to_string();
    cell.provenance = ex.provenance;
    Real r = reference_value(rc.text);
    cell.has_reference = true;
    cell.delta = abs(cell.value - r);
  });
}

}  // namespace

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& t : kTables) v.emplace_back(t.name);
    return v;
  }();
  return names;
}

bool is_table_name(const std::string& name) {
  const auto& n = table_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::string data_dir() {
  if (const char* env = std::getenv("LATSUM_DATA_DIR")) return env;
  return LATSUM_DATA_DIR;
}

std::vector<ReferenceCell> load_reference(const std::string& name, const std::string& dir) {
  const TableInfo& ti = info(name);
  std::vector<ReferenceCell> out;
  for (const auto& row : read_csv(dir + "/reference/table" + name + ".csv")) {
    ReferenceCell c;
    if (ti.closed_form) {
      if (row.size() != 5) throw PreconditionError("malformed reference row in table " + name);
      c.p = std::stoi(row[0]);
      c.q = std::stoi(row[1]);
      c.family = row[2];
      c.r = row[3];
      c.text = row[4];
    } else if (row.size() == 2) {
      c.p = std::stoi(row[0]);
      c.q = c.p + 2;
      c.text = row[1];
    } else if (row.size() == 3) {
      c.p = std::stoi(row[0]);
      c.q = std::stoi(row[1]);
      c.text = row[2];
    } else {
      throw PreconditionError("malformed reference row in table " + name);
    }
    out.push_back(c);
  }
  // row-major: q outer for grids, p outer for everything else
  if (name == "1" || name == "1a")
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return std::tie(a.q, a.p) < std::tie(b.q, b.p); });
  return out;
}

std::vector<ReferenceCell> load_reference(const std::string& name) { return load_reference(name, data_dir()); }

Table generate_table(const std::string& name, unsigned threads) {
  const TableInfo& ti = info(name);
  Table t;
  t.name = ti.name;
  t.title = ti.title;
  t.closed_form = ti.closed_form;
  if (ti.closed_form)
    closed_table(t, threads);
  else
    numeric_table(t, threads);
  return t;
}

std::string format_table(const Table& t, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::CSV: {
      os << "p,q,value,method,delta";
      if (t.closed_form) os << ",family,r,exact_form,provenance";
      os << "\n";
      for (const auto& c : t.cells) {
        os << c.p << ',' << c.q << ',' << c.value_text << ',' << c.method << ',' << c.delta.to_string(3);
        if (t.closed_form)
          os << ',' << c.family << ',' << c.r << ',' << csv_field(c.exact_form.value_or("")) << ','
             << csv_field(c.provenance);
        os << "\n";
      }
      break;
    }
    case OutputFormat::JSON: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& c : t.cells) {
        nlohmann::ordered_json j;
        j["p"] = c.p;
        j["q"] = c.q;
        if (t.closed_form) {
          j["family"] = c.family;
          j["r"] = c.r;
        }
        j["value"] = c.value_text;
        j["digits"] = c.value.to_string(30);
        j["method"] = c.method;
        j["delta"] = c.delta.to_string(3);
        if (c.exact_form) j["exact_form"] = *c.exact_form;
        j["provenance"] = c.provenance;
        arr.push_back(j);
      }
      os << arr.dump(1) << "\n";
      break;
    }
    case OutputFormat::TEXT: {
      os << "Table " << t.name << ": " << t.title << "\n";
      for (const auto& c : t.cells) {
        os << std::left << std::setw(4) << c.p << std::setw(4) << c.q;
        if (t.closed_form) os << std::setw(6) << c.family << std::setw(5) << c.r;
        os << std::setw(14) << c.value_text << "delta " << c.delta.to_string(3) << "\n";
      }
      break;
    }
  }
  return os.str();
}

std::string golden_path(const std::string& name) { return data_dir() + "/golden/table" + name + ".csv"; }

void write_golden(const Table& t, const std::string& golden_file) {
  std::ofstream out(golden_file);
  if (!out) throw PreconditionError("cannot write " + golden_file);
  out << "p,q,family,r,value,exact_form\n";
  for (const auto& c : t.cells)
    out << c.p << ',' << c.q << ',' << c.family << ',' << c.r << ',' << c.value_text << ','
        << csv_field(c.exact_form.value_or("")) << "\n";
}

RegressionReport compare_golden(const Table& t, const std::string& golden_file) {
  RegressionReport rep;
  std::map<std::string, std::vector<std::string>> want;
  for (auto& row : read_csv(golden_file)) {
    if (row.size() != 6) {
      rep.failures.push_back("malformed golden row");
      continue;
    }
    want[row[0] + "," + row[1] + "," + row[2] + "," + row[3]] = row;
  }
  for (const auto& c : t.cells) {
    std::string key = std::to_string(c.p) + "," + std::to_string(c.q) + "," + c.family + "," + c.r;
    auto it = want.find(key);
    ++rep.checked;
    if (it == want.end()) {
      rep.failures.push_back(key + ": missing from golden file");
      continue;
    }
    if (it->second[4] != c.value_text)
      rep.failures.push_back(key + ": value " + c.value_text + " != golden " + it->second[4]);
    if (it->second[5] != c.exact_form.value_or(""))
      rep.failures.push_back(key + ": exact form differs from golden");
    want.erase(it);
  }
  for (const auto& kv : want) rep.failures.push_back(kv.first + ": not generated");
  return rep;
}

RegressionReport compare_golden(const Table& t) { return compare_golden(t, golden_path(t.name)); }

}  // namespace latsum
