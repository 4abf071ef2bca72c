// Command-line front end: compute symmetry-class series, emit the area and
// half-perimeter tables, run the brute-force oracle, and cross-verify the
// two against each other.
//
// Exit codes: 0 success, 1 verification mismatch, 2 configuration error,
// 3 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hexpoly/verify.hpp"

namespace {

using namespace hexpoly;

int thread_count(int cli_value) {
  if (const char* env = std::getenv("HEXPOLY_THREADS"))
    return std::max(1, std::atoi(env));
  if (cli_value > 0) return cli_value;
  return static_cast<int>(std::thread::hardware_concurrency());
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

const Series& select_class(const FixBundle& b, const Series& orbits,
                           const Series& asym, const std::string& label) {
  if (label == "id") return b.total;
  if (label == "h") return b.fix_h;
  if (label == "v") return b.fix_v;
  if (label == "r") return b.fix_r;
  if (label == "r2") return b.fix_r2;
  if (label == "r3") return b.fix_r3;
  if (label == "D6") return b.d6;
  if (label == "F31") return b.f31;
  if (label == "H31") return b.h31;
  if (label == "D2") return b.d23;
  if (label == "orbits") return orbits;
  if (label == "asym") return asym;
  throw CLI::ValidationError("unknown class label: " + label);
}

std::string series_csv(const Series& f) {
  std::map<std::pair<int, int>, Int> cells;
  for (const auto& [m, c] : f.terms()) cells[{m.q(), m.t()}] += c;
  std::ostringstream os;
  os << "q_deg,t_deg,coef\n";
  for (const auto& [key, c] : cells)
    if (c != 0) os << key.first << ',' << key.second << ',' << c.str() << '\n';
  return os.str();
}

nlohmann::json series_json(const Series& f, const std::string& label) {
  std::map<std::pair<int, int>, Int> cells;
  for (const auto& [m, c] : f.terms()) cells[{m.q(), m.t()}] += c;
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : cells)
    if (c != 0)
      terms.push_back(
          {{"q", key.first}, {"t", key.second}, {"coef", c.str()}});
  return {{"class", label}, {"terms", terms}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetry classes of convex hexagonal polyominoes"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("-j,--threads", threads,
                 "worker threads (default: hardware; env HEXPOLY_THREADS "
                 "overrides)");

  std::string stat = "area", format = "text", output, klass = "id";
  int max_value = 12, max_area = 10, max_hp = 12;

  CLI::App* cmd_table = app.add_subcommand("table", "emit a symmetry table");
  cmd_table->add_option("--stat", stat, "area or half-perimeter")
      ->check(CLI::IsMember({"area", "half-perimeter"}));
  cmd_table->add_option("--max", max_value, "largest statistic value")
      ->check(CLI::PositiveNumber);
  cmd_table->add_option("--format", format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd_table->add_option("-o,--output", output, "output path (default stdout)");

  CLI::App* cmd_series =
      app.add_subcommand("series", "emit one class's (q,t) coefficients");
  cmd_series->add_option("--class", klass, "symmetry class label")
      ->check(CLI::IsMember({"id", "h", "v", "r", "r2", "r3", "orbits", "D6",
                             "F31", "H31", "D2", "asym"}));
  cmd_series->add_option("--max-area", max_value, "q-degree window")
      ->check(CLI::PositiveNumber);
  cmd_series->add_option("--format", format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd_series->add_option("-o,--output", output, "output path");

  CLI::App* cmd_oracle =
      app.add_subcommand("oracle", "emit the brute-force census table");
  cmd_oracle->add_option("--stat", stat, "area or half-perimeter")
      ->check(CLI::IsMember({"area", "half-perimeter"}));
  cmd_oracle->add_option("--max", max_value, "largest statistic value")
      ->check(CLI::PositiveNumber);
  cmd_oracle->add_option("--format", format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  cmd_oracle->add_option("-o,--output", output, "output path");
  bool dump_shapes = false;
  cmd_oracle->add_flag("--dump-shapes", dump_shapes,
                       "emit one polyomino per line instead of the table");

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "compare series tables against the oracle cell by cell");
  cmd_verify->add_option("--max-area", max_area, "area rows to check")
      ->check(CLI::PositiveNumber);
  cmd_verify
      ->add_option("--max-halfperim", max_hp, "half-perimeter rows to check")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--report", output, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  int workers = thread_count(threads);
  try {
    if (cmd_table->parsed()) {
      Statistic st =
          stat == "area" ? Statistic::area : Statistic::half_perimeter;
      SymmetryTable t = build_table(st, max_value, workers);
      if (format == "csv")
        write_out(output, table_csv(t));
      else if (format == "json")
        write_out(output, table_json(t).dump(2) + "\n");
      else
        write_out(output, table_text(t));
    } else if (cmd_series->parsed()) {
      FixBundle b =
          compute_fix_bundle(table_request(Statistic::area, max_value),
                             workers);
      Series orbits = burnside_orbits(b);
      Series asym = asymmetric_direct(b);
      const Series& f = select_class(b, orbits, asym, klass);
      if (format == "json")
        write_out(output, series_json(f, klass).dump(2) + "\n");
      else
        write_out(output, series_csv(f));
    } else if (cmd_oracle->parsed()) {
      Statistic st =
          stat == "area" ? Statistic::area : Statistic::half_perimeter;
      if (dump_shapes) {
        std::ostringstream os;
        std::vector<std::string> lines;
        int max_area_gen = st == Statistic::area
                               ? max_value
                               : area_cap_for_half_perimeter(max_value);
        int max_hp_gen = st == Statistic::area ? 2 * max_value + 1 : max_value;
        enumerate_convex(max_area_gen, max_hp_gen,
                         [&](const ColumnShape& s) {
                           lines.push_back(dump_polyomino(s.cells()));
                         });
        std::sort(lines.begin(), lines.end());
        for (const auto& l : lines) os << l << '\n';
        write_out(output, os.str());
      } else {
        SymmetryTable t = oracle_table(st, max_value, workers);
        if (format == "csv")
          write_out(output, table_csv(t));
        else if (format == "json")
          write_out(output, table_json(t).dump(2) + "\n");
        else
          write_out(output, table_text(t));
      }
    } else if (cmd_verify->parsed()) {
      VerifyResult r = verify_against_oracle(max_area, max_hp, workers);
      if (!output.empty()) write_out(output, verify_json(r).dump(2) + "\n");
      int mismatches = 0;
      for (const CellCheck& c : r.cells)
        if (!c.ok) {
          ++mismatches;
          std::cerr << "mismatch: " << c.stat << " " << c.value << " column "
                    << c.column << " expected " << c.expected << " got "
                    << c.got << "\n";
        }
      std::cout << "compared " << r.cells.size() << " cells, " << mismatches
                << " mismatches\n";
      return r.ok ? 0 : 1;
    }
  } catch (const hexpoly::series_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
