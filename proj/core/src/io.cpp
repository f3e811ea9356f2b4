#include "xxz/io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

constexpr std::array<char, 8> kMagic{'X', 'X', 'Z', 'Q', 'L', 'O', 'P', '1'};

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

std::uint64_t to_le(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::big) {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r = (r << 8) | ((v >> (8 * i)) & 0xffu);
    return r;
  }
  return v;
}

void put_u64(std::ostream& os, std::uint64_t v) {
  v = to_le(v);
  os.write(reinterpret_cast<const char*>(&v), 8);
}

std::uint64_t get_u64(std::istream& is) {
  std::uint64_t v = 0;
  is.read(reinterpret_cast<char*>(&v), 8);
  return to_le(v);
}

nlohmann::json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }
cplx from_cjson(const nlohmann::json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string format_real(double v) {
  if (v == 0.0) return "0";  // folds -0
  std::array<char, 40> buf{};
  std::snprintf(buf.data(), buf.size(), "%.15g", v);
  return buf.data();
}

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw InvalidArgument("CsvTable: no columns");
}

std::vector<std::string> CsvTable::complex_columns(const std::string& name) { return {name + "_re", name + "_im"}; }

CsvTable& CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size())
    throw InvalidArgument("CsvTable: row has " + std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(columns_.size()));
  rows_.push_back(std::move(cells));
  return *this;
}

std::string CsvTable::render(std::string_view kind, std::string_view config_json) const {
  std::ostringstream os;
  os << "# schema_version: " << kSchemaVersion << '\n';
  os << "# kind: " << kind << '\n';
  os << "# config: " << config_json << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << csv_escape(columns_[i]);
  os << '\n';
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_escape(r[i]);
    os << '\n';
  }
  return os.str();
}

void push_complex(std::vector<std::string>& cells, cplx z) {
  cells.push_back(format_real(z.real()));
  cells.push_back(format_real(z.imag()));
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw InvalidArgument("cannot open " + path.string() + " for writing");
  os.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!os) throw InvalidArgument("write failed: " + path.string());
}

void write_transfer_artifact(const std::filesystem::path& path, const TransferOperator& t) {
  const Matrix& m = t.op.matrix();
  const nlohmann::json header = {
      {"schema", kSchemaVersion},   {"kind", std::string(kind_name(t.kind))},
      {"l", t.params.l()},          {"m", t.params.m()},
      {"n", t.op.sites()},          {"phi", cjson(t.phi)},
      {"s", cjson(t.s)},            {"flux", t.flux},
      {"dim", static_cast<std::int64_t>(m.rows())}};
  const std::string h = header.dump();

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  // write then rename, so a concurrent reader never sees a partial file
  std::filesystem::path tmp = path;
  tmp += ".part";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw InvalidArgument("cannot open " + tmp.string() + " for writing");
    os.write(kMagic.data(), kMagic.size());
    put_u64(os, h.size());
    os.write(h.data(), static_cast<std::streamsize>(h.size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (double part : {m(i, j).real(), m(i, j).imag()}) put_u64(os, std::bit_cast<std::uint64_t>(part));
    if (!os) throw InvalidArgument("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

TransferOperator read_transfer_artifact(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw InvalidArgument("cannot open " + path.string());
  std::array<char, 8> magic{};
  is.read(magic.data(), magic.size());
  if (!is || magic != kMagic) throw InvalidArgument(path.string() + ": not a transfer-operator artifact");
  const std::uint64_t hlen = get_u64(is);
  if (!is || hlen > (1u << 20)) throw InvalidArgument(path.string() + ": bad header length");
  std::string h(hlen, '\0');
  is.read(h.data(), static_cast<std::streamsize>(hlen));

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(h);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path.string() + ": header is not JSON: " + e.what());
  }
  try {
    if (header.at("schema").get<int>() != kSchemaVersion)
      throw InvalidArgument(path.string() + ": schema version mismatch");
    const int n = header.at("n").get<int>();
    require_sites(n, 1);
    const auto dim = header.at("dim").get<std::int64_t>();
    if (dim != (std::int64_t{1} << n)) throw InvalidArgument(path.string() + ": dim does not match n");
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) {
        const double re = std::bit_cast<double>(get_u64(is));
        const double im = std::bit_cast<double>(get_u64(is));
        m(i, j) = {re, im};
      }
    if (!is) throw InvalidArgument(path.string() + ": truncated payload");
    return TransferOperator{parse_kind(header.at("kind").get<std::string>()),
                            Anisotropy(header.at("l").get<int>(), header.at("m").get<int>()),
                            from_cjson(header.at("phi")),
                            from_cjson(header.at("s")),
                            header.at("flux").get<double>(),
                            Operator(n, std::move(m))};
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path.string() + ": malformed header: " + e.what());
  }
}

std::string artifact_file_name(TransferKind kind, const Anisotropy& a, cplx phi, cplx s, double flux, int n) {
  // %a is exact, so distinct parameters never collide
  std::array<char, 256> buf{};
  std::snprintf(buf.data(), buf.size(), "%s_l%d_m%d_n%d_phi%a_%a_s%a_%a_f%a.xop", std::string(kind_name(kind)).c_str(),
                a.l(), a.m(), n, phi.real(), phi.imag(), s.real(), s.imag(), flux);
  return buf.data();
}

TransferOperator cached_transfer(const std::filesystem::path& cache_dir, TransferKind kind, const Anisotropy& a,
                                 cplx phi, cplx s, double flux, int n) {
  if (cache_dir.empty()) return build_transfer(kind, a, phi, s, flux, n);
  const std::filesystem::path p = cache_dir / artifact_file_name(kind, a, phi, s, flux, n);
  if (std::filesystem::exists(p)) return read_transfer_artifact(p);
  TransferOperator t = build_transfer(kind, a, phi, s, flux, n);
  write_transfer_artifact(p, t);
  return t;
}

}  // namespace xxz
