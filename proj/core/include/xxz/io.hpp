#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "xxz/transfer.hpp"

namespace xxz {

inline constexpr int kSchemaVersion = 1;

/// Fixed 15-significant-digit formatting; locale independent.
std::string format_real(double v);

/// Minimal CSV builder. Output starts with '#'-prefixed lines carrying the
/// schema version and the resolved config (as one-line JSON).
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  /// Complex columns are registered as name_re, name_im.
  static std::vector<std::string> complex_columns(const std::string& name);

  CsvTable& add_row(std::vector<std::string> cells);
  std::size_t rows() const noexcept { return rows_.size(); }
  const std::vector<std::string>& columns() const noexcept { return columns_; }

  std::string render(std::string_view kind, std::string_view config_json) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// Appends Re/Im cells.
void push_complex(std::vector<std::string>& cells, cplx z);

void write_text_file(const std::filesystem::path& path, std::string_view content);

// Binary transfer-operator artifact:
//   8-byte magic "XXZQLOP1", uint64 LE header length, UTF-8 JSON header
//   {schema, kind, l, m, n, phi:{re,im}, s:{re,im}, flux, dim},
//   then dim*dim complex doubles (re, im), row-major, little-endian.
void write_transfer_artifact(const std::filesystem::path& path, const TransferOperator& t);
/// Throws InvalidArgument on malformed files or schema mismatch.
TransferOperator read_transfer_artifact(const std::filesystem::path& path);

/// Deterministic file name for a cached operator.
std::string artifact_file_name(TransferKind kind, const Anisotropy& a, cplx phi, cplx s, double flux, int n);

/// Loads from cache_dir when present, otherwise builds and stores.
/// An empty cache_dir disables caching.
TransferOperator cached_transfer(const std::filesystem::path& cache_dir, TransferKind kind, const Anisotropy& a,
                                 cplx phi, cplx s, double flux, int n);

}  // namespace xxz
