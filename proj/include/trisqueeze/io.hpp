#pragma once

// Serialization shared by the CLI: JSON documents and CSV tables.

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "trisqueeze/fock_oracle.hpp"
#include "trisqueeze/moments.hpp"
#include "trisqueeze/quasiprob.hpp"

namespace trisqueeze::io {

/// printf "%.17g": round-trips every double.
std::string format_double(double v);

/// Comma-separated table with '\n' line endings.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);

 private:
  std::ostream& out_;
};

nlohmann::ordered_json to_json(const Params& params);
nlohmann::ordered_json to_json(const Coeffs& coeffs);
nlohmann::ordered_json to_json(const MomentTable& table);
nlohmann::ordered_json to_json(const WignerAux& aux);
nlohmann::ordered_json to_json(const TruncationReport& report);
nlohmann::ordered_json to_json(const InputState& state);

/// Grid metadata plus row-major values (x outer, y inner).
nlohmann::ordered_json to_json(const QuasiprobGrid& grid);
/// Columns x, y, w; x outer, y inner.
void write_csv(std::ostream& out, const QuasiprobGrid& grid);

/// Two-space indented JSON terminated by '\n'.
void write_json(std::ostream& out, const nlohmann::ordered_json& doc);

}  // namespace trisqueeze::io
