#pragma once

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dsslm/error.hpp"
#include "dsslm/harness.hpp"
#include "dsslm/profile_io.hpp"

// CCDF CSV: header `gamma_db,ccdf,trials,scheme`, one row per threshold in
// ascending order, probabilities with 6 significant digits.

namespace dsslm {

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline void write_ccdf_csv(std::ostream& os, const CcdfCurve& curve) {
  os << "gamma_db,ccdf,trials,scheme\n";
  for (std::size_t i = 0; i < curve.gamma_db.size(); ++i) {
    os << format_number(curve.gamma_db[i]) << ',' << format_number(curve.prob[i]) << ','
       << curve.trials << ',' << curve.scheme << '\n';
  }
}

inline std::string format_ccdf_csv(const CcdfCurve& curve) {
  std::ostringstream os;
  write_ccdf_csv(os, curve);
  return os.str();
}

// Reads a CCDF CSV back. Exceedance counts are reconstructed from the
// rounded probabilities.
inline CcdfCurve read_ccdf_csv(std::istream& is) {
  std::string raw;
  std::size_t line = 0;
  CcdfCurve curve;
  if (!std::getline(is, raw) || detail::trim_cr(raw) != "gamma_db,ccdf,trials,scheme") {
    throw ParseError(1, "expected header 'gamma_db,ccdf,trials,scheme'");
  }
  line = 1;
  while (std::getline(is, raw)) {
    ++line;
    const auto text = detail::trim_cr(raw);
    if (text.empty()) continue;
    const auto f = detail::split(text, ',');
    if (f.size() != 4) throw ParseError(line, "expected 4 fields");
    try {
      curve.gamma_db.push_back(std::stod(std::string(f[0])));
      curve.prob.push_back(std::stod(std::string(f[1])));
    } catch (const std::exception&) {
      throw ParseError(line, "bad number");
    }
    curve.trials = detail::parse_int<std::size_t>(f[2], line, "trial count");
    curve.scheme = std::string(f[3]);
  }
  curve.exceed.reserve(curve.prob.size());
  for (double p : curve.prob) {
    curve.exceed.push_back(static_cast<std::size_t>(p * static_cast<double>(curve.trials) + 0.5));
  }
  return curve;
}

inline CcdfCurve load_ccdf_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_ccdf_csv(in);
}

inline void save_ccdf_csv(const std::string& path, const CcdfCurve& curve) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write '" + path + "'");
  write_ccdf_csv(out, curve);
}

// gnuplot script plotting the given CSV files on a log-scale CCDF axis.
inline std::string gnuplot_script(const std::vector<std::string>& csv_files,
                                  const std::vector<std::string>& titles,
                                  const std::string& title, const std::string& output_png) {
  std::ostringstream os;
  os << "# gnuplot script; run: gnuplot <this file>\n"
     << "set datafile separator ','\n"
     << "set terminal pngcairo size 800,600\n"
     << "set output '" << output_png << "'\n"
     << "set title '" << title << "'\n"
     << "set xlabel 'PAPR threshold gamma (dB)'\n"
     << "set ylabel 'CCDF  Pr(PAPR > gamma)'\n"
     << "set logscale y\n"
     << "set format y '10^{%L}'\n"
     << "set yrange [1e-5:1]\n"
     << "set grid\n"
     << "set key bottom left\n"
     << "plot ";
  for (std::size_t i = 0; i < csv_files.size(); ++i) {
    if (i) os << ", \\\n     ";
    os << "'" << csv_files[i] << "' every ::1 using 1:($2 > 0 ? $2 : 1/0) with lines title '"
       << (i < titles.size() ? titles[i] : csv_files[i]) << "'";
  }
  os << '\n';
  return os.str();
}

}  // namespace dsslm
