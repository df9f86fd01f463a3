#ifndef EULERSPIN_CORE_TIMESERIES_HPP
#define EULERSPIN_CORE_TIMESERIES_HPP

#include <cstdio>
#include <string>
#include <vector>

namespace eulerspin {

// Column-labeled numeric records. Both integrators emit one of these; the
// CSV rendering (17 significant digits, lowercase scientific) is the frozen
// serialization contract.
struct TimeSeries {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string header() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      out += columns[i];
    }
    return out;
  }

  std::string csv() const {
    std::string out = header();
    out += '\n';
    char buf[32];
    for (const std::vector<double>& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        std::snprintf(buf, sizeof buf, "%.16e", row[i]);
        out += buf;
      }
      out += '\n';
    }
    return out;
  }
};

}  // namespace eulerspin

#endif
