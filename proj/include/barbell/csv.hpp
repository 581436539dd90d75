#ifndef BARBELL_CSV_HPP
#define BARBELL_CSV_HPP

#include <filesystem>
#include <string>

#include "barbell/propagator.hpp"

namespace barbell {

/// Formats a double with the given number of significant digits,
/// locale-independent and byte-deterministic.
std::string format_number(double value, int significant_digits = 12);

/// Writes `t,p_a,p_b,p_c,p_d,p_e,p_clique` rows (aggregate per-type
/// probabilities, 12 significant digits, LF line endings, UTF-8).
void emit_csv(const TimeSeries& series, const std::filesystem::path& path);

/// Companion table of per-vertex probabilities, header
/// `t,pv_a,pv_b,pv_c,pv_d,pv_e`.
void emit_per_vertex_csv(const TimeSeries& series,
                         const std::filesystem::path& path);

}  // namespace barbell

#endif  // BARBELL_CSV_HPP
