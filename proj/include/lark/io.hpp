#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lark/mcmc.hpp"

namespace lark {

struct CsvError : std::runtime_error {
  int line;
  CsvError(const std::string& msg, int ln) : std::runtime_error(msg), line(ln) {}
};

// Comma-separated, header row required, '.' decimal. Throws CsvError with the
// offending line number; an empty data section is line 1.
Dataset read_xy_csv(const std::string& path, const std::string& x_col,
                    const std::string& y_col);

// One state per line: {"gamma":..,"eta":..,"sigma2":..,"rho":..,"points":[[beta,chi,lambda],..]}
void write_draws_jsonl(const std::string& path, const std::vector<LarkState>& draws);
std::vector<LarkState> read_draws_jsonl(const std::string& path);

void write_summary_csv(const std::string& path, const std::vector<double>& grid,
                       const std::vector<double>& mean, const std::vector<double>& lo,
                       const std::vector<double>& hi, double plo, double phi);

}  // namespace lark
