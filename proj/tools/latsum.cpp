#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "latsum/latsum.hpp"

using namespace latsum;

namespace {

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::CSV;
  if (s == "json") return OutputFormat::JSON;
  return OutputFormat::TEXT;
}

struct MethodResult {
  Method method;
  bool ok = false;
  SumValue value;
  std::string note;
};

int cmd_sum(int p, int q, const std::string& lattice, const std::string& method, int digits, const std::string& fmt) {
  LatticeSpec lat = parse_lattice(lattice);
  SumIndex idx{p, q};
  if (p < 0 || q - p < 2) throw PreconditionError("need p >= 0 and q - p >= 2");
  std::vector<Method> methods;
  if (method == "all")
    methods = {Method::EISENSTEIN_ORACLE, Method::TRIG_SERIES, Method::RECURRENCE, Method::SYMBOLIC_ELLIPTIC};
  else
    methods = {parse_method(method)};

  std::vector<MethodResult> results;
  for (Method m : methods) {
    MethodResult r{m};
    try {
      r.value = compute_sum(idx, lat, m);
      r.ok = true;
    } catch (const PreconditionError& e) {
      if (methods.size() == 1) throw;
      r.note = e.what();
    }
    results.push_back(r);
  }
  // deltas against fast when it ran
  const MethodResult* ref = nullptr;
  for (const auto& r : results)
    if (r.ok && (!ref || r.method == Method::TRIG_SERIES)) ref = &r;
  Real pi = Real::pi();

  auto delta = [&](const MethodResult& r) { return abs(r.value.value - ref->value.value).to_string(3); };
  if (fmt == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      nlohmann::ordered_json j;
      j["p"] = p;
      j["q"] = q;
      j["lattice"] = lat.name;
      j["method"] = method_name(r.method);
      if (r.ok) {
        j["value"] = r.value.value.re.to_string(digits);
        j["imag"] = r.value.value.im.to_string(6);
        j["precision_estimate"] = r.value.precision_estimate.to_string(3);
        j["delta"] = delta(r);
      } else {
        j["error"] = r.note;
      }
      arr.push_back(j);
    }
    std::cout << arr.dump(1) << "\n";
  } else if (fmt == "csv") {
    std::cout << "p,q,value,method,delta\n";
    for (const auto& r : results) {
      if (!r.ok) continue;
      std::cout << p << ',' << q << ',' << r.value.value.re.to_string(digits) << ',' << method_name(r.method) << ','
                << delta(r) << "\n";
    }
  } else {
    std::cout << "S_" << q << "^(" << p << ") on " << lat.name << "\n";
    for (const auto& r : results) {
      std::cout << "  " << std::left << std::setw(11) << method_name(r.method);
      if (!r.ok) {
        std::cout << "n/a (" << r.note << ")\n";
        continue;
      }
      std::cout << r.value.value.re.to_string(digits);
      if (!r.value.value.im.is_zero() && abs(r.value.value.im) > r.value.precision_estimate)
        std::cout << " + " << r.value.value.im.to_string(12) << "i";
      std::cout << "  est " << r.value.precision_estimate.to_string(3) << "  delta " << delta(r) << "\n";
    }
    if (ref) std::cout << "  value/pi   " << (ref->value.value.re / pi).to_string(digits) << "\n";
  }
  return 0;
}

int cmd_table(const std::string& name, const std::string& fmt, unsigned threads, bool write, bool check) {
  if (!is_table_name(name)) throw PreconditionError("unknown table '" + name + "'");
  Table t = generate_table(name, threads);
  std::cout << format_table(t, parse_format(fmt));
  if (write) {
    write_golden(t, golden_path(name));
    std::cerr << "wrote " << golden_path(name) << "\n";
    return 0;
  }
  if (!check) return 0;
  RegressionReport rep = compare_golden(t);
  for (const auto& f : rep.failures) std::cerr << "regression: " << f << "\n";
  std::cerr << "golden " << golden_path(name) << ": " << rep.checked << " cells, " << rep.failures.size()
            << " failures\n";
  return rep.ok() ? 0 : 1;
}

std::vector<Complex> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::vector<Complex> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string re, im, extra;
    if (!(ls >> re)) continue;
    if (!(ls >> im) || (ls >> extra))
      throw PreconditionError(path + ":" + std::to_string(lineno) + ": expected 're im'");
    pts.emplace_back(ClosedForm::parse(re).eval(), ClosedForm::parse(im).eval());
  }
  if (pts.empty()) throw PreconditionError(path + ": no points");
  return pts;
}

int cmd_isotropy(const std::string& path, const std::string& lattice, int digits, const std::string& tol_text) {
  std::vector<Complex> pts = read_points(path);
  LatticeSpec lat = parse_lattice(lattice);
  Real e2 = isotropy_e2(pts, lat);
  Real dev = abs(e2 - Real::pi());
  Real tol(tol_text);
  bool pass = dev <= tol;
  std::cout << "points = " << pts.size() << "\n";
  std::cout << "e2 = " << e2.to_string(digits) << "\n";
  std::cout << "|e2 - pi| = " << dev.to_string(6) << "\n";
  std::cout << "e2 = " << e2.to_string(6) << ", " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice sums S_q^(p) of doubly periodic lattices"};
  app.require_subcommand(1);
  int digits = 50;

  auto* sum = app.add_subcommand("sum", "evaluate one lattice sum");
  int p = 0, q = 2;
  std::string lattice = "square", method = "fast", fmt = "text";
  sum->add_option("--p", p, "conjugate power")->required();
  sum->add_option("--q", q, "power")->required();
  sum->add_option("--lattice", lattice, "square|hex|rect:<x>|rhombic:<x>|tau:<re>,<im>");
  sum->add_option("--method", method)->check(CLI::IsMember({"oracle", "fast", "recurrence", "symbolic", "all"}));
  sum->add_option("--format", fmt)->check(CLI::IsMember({"csv", "json", "text"}));
  sum->add_option("--digits", digits, "significant digits")->check(CLI::Range(10, 2000));

  auto* table = app.add_subcommand("table", "regenerate a table and check it against the golden file");
  std::string name;
  std::string tfmt = "text";
  unsigned threads = 0;
  bool write = false, no_check = false;
  table->add_option("name", name)->required()->check(CLI::IsMember(table_names()));
  table->add_option("--format", tfmt)->check(CLI::IsMember({"csv", "json", "text"}));
  table->add_option("--threads", threads, "worker threads, 0 for all cores");
  table->add_option("--digits", digits, "significant digits")->check(CLI::Range(10, 2000));
  table->add_flag("--write-golden", write, "overwrite the golden file");
  table->add_flag("--no-check", no_check, "skip the golden comparison");

  auto* iso = app.add_subcommand("isotropy", "isotropy metric e2 of a point set");
  std::string points, iso_lattice = "square", tol = "1e-30";
  iso->add_option("points", points, "file with one 're im' pair per line")->required();
  iso->add_option("--lattice", iso_lattice);
  iso->add_option("--tol", tol, "pass threshold for |e2 - pi|");
  iso->add_option("--digits", digits, "significant digits")->check(CLI::Range(10, 2000));

  CLI11_PARSE(app, argc, argv);

  try {
    PrecisionGuard guard(PrecisionContext{digits, 10});
    if (*sum) return cmd_sum(p, q, lattice, method, digits, fmt);
    if (*table) return cmd_table(name, tfmt, threads, write, !no_check);
    if (*iso) return cmd_isotropy(points, iso_lattice, digits, tol);
  } catch (const std::exception& e) {
    std::cerr << "latsum: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
