#include <sstream>

#include "vinberg/error.hpp"
#include "vinberg_cli/cli.hpp"

namespace vinberg::cli {

Json to_json(const Scalar& s) {
  if (s.is_integer() && s.fits_int64()) return s.to_int64();
  return s.str();
}

Json to_json(const Matrix& a) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Scalar scalar_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Scalar(static_cast<long long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const ValidationError&) {
    }
  }
  throw ValidationError("field '" + field + "': expected an integer or a \"p/q\" string");
}

Matrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw ValidationError("field '" + field + "': expected an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  if (rows > 0) {
    if (!j[0].is_array()) throw ValidationError("field '" + field + "': expected an array of rows");
    cols = j[0].size();
  }
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw ValidationError("field '" + field + "': rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = scalar_from_json(j[r][c], field);
  }
  return out;
}

namespace {

void render_text(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_text(value, prefix.empty() ? key : prefix + "." + key, os);
    return;
  }
  os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

}  // namespace

std::string render(const Json& report, const std::string& format) {
  if (format == "text") {
    std::ostringstream os;
    render_text(report, "", os);
    return os.str();
  }
  return report.dump(2) + "\n";
}

}  // namespace vinberg::cli
