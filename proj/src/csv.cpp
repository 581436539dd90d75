#include "barbell/csv.hpp"

#include <charconv>
#include <fstream>

namespace barbell {

std::string format_number(double value, int significant_digits) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value,
                    std::chars_format::general, significant_digits);
  return std::string(buffer, result.ptr);
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::IoError, "cannot open " + path.string() +
                                        " for writing");
  }
  return out;
}

}  // namespace

void emit_csv(const TimeSeries& series, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "t,p_a,p_b,p_c,p_d,p_e,p_clique\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out << format_number(series.times[i]);
    for (int k = 0; k < 5; ++k) out << ',' << format_number(series.aggregate[k][i]);
    out << ',' << format_number(series.clique[i]) << '\n';
  }
  if (!out) {
    throw Error(ErrorCode::IoError, "write failed for " + path.string());
  }
}

void emit_per_vertex_csv(const TimeSeries& series,
                         const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "t,pv_a,pv_b,pv_c,pv_d,pv_e\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out << format_number(series.times[i]);
    for (int k = 0; k < 5; ++k)
      out << ',' << format_number(series.per_vertex[k][i]);
    out << '\n';
  }
  if (!out) {
    throw Error(ErrorCode::IoError, "write failed for " + path.string());
  }
}

}  // namespace barbell
