#include "wsn/harness/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wsn::harness {

std::string format_energy(double joules) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", joules);
  return buf;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

std::string format_pct(const std::optional<double>& v) {
  if (!v) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", *v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text, const std::string& expected_header) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != expected_header) {
    throw std::runtime_error("unexpected CSV header: '" + line + "'");
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(split(line, ','));
  }
  return rows;
}

}  // namespace

std::string runs_csv(const std::vector<RunReport>& reports) {
  std::string out = std::string(kRunsHeader) + "\n";
  for (const auto& r : reports) {
    out += r.run_id + "," + r.scenario + "," + r.protocol + "," + std::to_string(r.payload_bytes) + "," +
           format_real(r.freq_hz) + "," + std::to_string(r.nodes) + "," + format_real(r.sim_duration_s) + "," +
           std::to_string(std::llround(r.wall_ms())) + "," +
           (r.peak_rss_bytes ? std::to_string(*r.peak_rss_bytes) : std::string("NA")) + "," +
           format_pct(r.cpu_avg_pct) + "," + format_pct(r.cpu_max_pct) + "," + std::to_string(r.events) + "," +
           std::to_string(r.seed) + "\n";
  }
  return out;
}

std::string energy_csv(const std::vector<RunReport>& reports) {
  std::string out = std::string(kEnergyHeader) + "\n";
  for (const auto& r : reports) {
    for (const auto& row : r.energy_rows) {
      out += r.run_id + "," + std::to_string(row.node) + "," + r.model + "," + row.category + "," +
             std::to_string(row.interval) + "," + format_energy(row.joules) + "\n";
    }
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit_csv(const std::vector<RunReport>& reports, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw std::runtime_error("cannot create output directory '" + dir.string() + "'");
  }
  write_file(dir / "runs.csv", runs_csv(reports));
  write_file(dir / "energy.csv", energy_csv(reports));
}

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_linear needs >= 2 paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LinearFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += e * e;
  }
  fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

std::string render_report(const std::string& runs_text, const std::string& energy_text) {
  const auto runs = parse_csv(runs_text, kRunsHeader);
  std::ostringstream out;
  out << "Runs\n====\n\n";
  out << std::left << std::setw(28) << "run_id" << std::setw(16) << "protocol" << std::right << std::setw(8)
      << "payload" << std::setw(8) << "freq" << std::setw(7) << "nodes" << std::setw(12) << "sim_s"
      << std::setw(10) << "wall_ms" << std::setw(14) << "peak_rss" << std::setw(8) << "cpu%" << std::setw(14)
      << "events" << "\n";
  for (const auto& r : runs) {
    if (r.size() != 13) throw std::runtime_error("malformed runs.csv row");
    out << std::left << std::setw(28) << r[0] << std::setw(16) << r[2] << std::right << std::setw(8) << r[3]
        << std::setw(8) << r[4] << std::setw(7) << r[5] << std::setw(12) << r[6] << std::setw(10) << r[7]
        << std::setw(14) << r[8] << std::setw(8) << r[9] << std::setw(14) << r[11] << "\n";
  }

  // Scaling block: one line per run, ordered as in runs.csv.
  out << "\n# gnuplot: scaling (nodes wall_ms events cpu_avg_pct peak_rss_bytes)\n";
  std::vector<double> ev, wall;
  for (const auto& r : runs) {
    out << r[5] << " " << r[7] << " " << r[11] << " " << r[9] << " " << r[8] << "\n";
    ev.push_back(std::stod(r[11]));
    wall.push_back(std::stod(r[7]));
  }
  if (runs.size() >= 2) {
    const LinearFit fit = fit_linear(ev, wall);
    out << "# linear fit wall_ms = " << format_real(fit.slope) << " * events + " << format_real(fit.intercept)
        << "  (R^2 = " << format_real(fit.r_squared) << ")\n";
  }

  if (!energy_text.empty()) {
    const auto rows = parse_csv(energy_text, kEnergyHeader);
    // run -> node -> (sum, intervals seen) ; category totals per run
    struct Acc {
      double sum = 0.0;
      std::uint64_t max_interval = 0;
    };
    std::map<std::string, std::map<std::string, Acc>> per_node;
    std::map<std::string, std::map<std::string, double>> per_category;
    std::vector<std::string> order;
    for (const auto& r : rows) {
      if (r.size() != 6) throw std::runtime_error("malformed energy.csv row");
      if (per_node.find(r[0]) == per_node.end()) order.push_back(r[0]);
      Acc& a = per_node[r[0]][r[1]];
      a.sum += std::stod(r[5]);
      a.max_interval = std::max<std::uint64_t>(a.max_interval, std::stoull(r[4]));
      per_category[r[0]][r[3]] += std::stod(r[5]);
    }
    out << "\nEnergy per interval (mean over intervals, J)\n"
           "============================================\n\n";
    for (const auto& run : order) {
      out << run << "\n";
      for (const auto& [node, acc] : per_node[run]) {
        out << "  node " << std::setw(4) << node << "  " << format_energy(acc.sum / (acc.max_interval + 1.0))
            << "\n";
      }
      for (const auto& [cat, total] : per_category[run]) {
        out << "  total[" << cat << "] " << format_energy(total) << "\n";
      }
    }
    out << "\n# gnuplot: energy (run_index node mean_interval_energy_j)\n";
    std::size_t index = 0;
    for (const auto& run : order) {
      for (const auto& [node, acc] : per_node[run]) {
        out << index << " " << node << " " << format_energy(acc.sum / (acc.max_interval + 1.0)) << "\n";
      }
      ++index;
    }
  }
  return out.str();
}

void emit_report(const std::vector<RunReport>& reports, const std::filesystem::path& path) {
  write_file(path, render_report(runs_csv(reports), energy_csv(reports)));
}

std::string report_from_directory(const std::filesystem::path& dir) {
  const auto runs = dir / "runs.csv";
  if (!std::filesystem::exists(runs)) throw std::runtime_error("no runs.csv in '" + dir.string() + "'");
  const auto energy = dir / "energy.csv";
  return render_report(read_file(runs), std::filesystem::exists(energy) ? read_file(energy) : std::string());
}

}  // namespace wsn::harness
