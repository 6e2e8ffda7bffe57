#include "lark/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lark {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Dataset read_xy_csv(const std::string& path, const std::string& x_col,
                    const std::string& y_col) {
  std::ifstream in(path);
  if (!in) throw CsvError("cannot open " + path, 0);
  std::string line;
  if (!std::getline(in, line)) throw CsvError("empty file", 1);
  const auto header = split_csv_line(line);
  int xi = -1, yi = -1;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    if (header[i] == x_col) xi = i;
    if (header[i] == y_col) yi = i;
  }
  if (xi < 0 || yi < 0)
    throw CsvError("missing column '" + (xi < 0 ? x_col : y_col) + "' in header", 1);
  Dataset d;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (static_cast<int>(cells.size()) <= std::max(xi, yi))
      throw CsvError("too few columns", lineno);
    try {
      std::size_t used = 0;
      const double x = std::stod(cells[xi], &used);
      if (used != cells[xi].size()) throw std::invalid_argument("trailing");
      const double y = std::stod(cells[yi], &used);
      if (used != cells[yi].size()) throw std::invalid_argument("trailing");
      d.xs.push_back(x);
      d.ys.push_back(y);
    } catch (const std::exception&) {
      throw CsvError("non-numeric value", lineno);
    }
  }
  if (d.n() == 0) throw CsvError("no data rows", lineno);
  return d;
}

void write_draws_jsonl(const std::string& path, const std::vector<LarkState>& draws) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& s : draws) {
    nlohmann::json j;
    j["gamma"] = s.gamma;
    j["eta"] = s.eta;
    j["sigma2"] = s.sigma2;
    j["rho"] = s.rho;
    auto& pts = j["points"] = nlohmann::json::array();
    for (const auto& p : s.points)
      pts.push_back({p.beta, p.omega.chi, p.omega.lambda});
    out << j.dump() << "\n";
  }
}

std::vector<LarkState> read_draws_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<LarkState> draws;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    LarkState s;
    s.gamma = j.at("gamma").get<double>();
    s.eta = j.at("eta").get<double>();
    s.sigma2 = j.at("sigma2").get<double>();
    s.rho = j.at("rho").get<double>();
    for (const auto& p : j.at("points")) {
      SupportPoint sp;
      sp.beta = p.at(0).get<double>();
      sp.omega.chi = p.at(1).get<double>();
      sp.omega.lambda = p.at(2).get<double>();
      s.points.push_back(sp);
    }
    draws.push_back(std::move(s));
  }
  return draws;
}

void write_summary_csv(const std::string& path, const std::vector<double>& grid,
                       const std::vector<double>& mean, const std::vector<double>& lo,
                       const std::vector<double>& hi, double plo, double phi) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot write " + path);
  std::fprintf(f, "x,mean,q%g,q%g\n", 100.0 * plo, 100.0 * phi);
  for (std::size_t i = 0; i < grid.size(); ++i)
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", grid[i], mean[i], lo[i], hi[i]);
  std::fclose(f);
}

}  // namespace lark
