#include "seclr/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace seclr {

namespace {

// Splits file content into records of fields, honoring quoted fields (which
// may contain delimiters, escaped quotes and newlines).
std::vector<std::vector<std::string>> parse_records(const std::string& text,
                                                    char delim) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_started_quoted = false;
  std::size_t line = 1;

  auto end_field = [&]() {
    fields.push_back(std::move(field));
    field.clear();
    field_started_quoted = false;
  };
  auto end_record = [&]() {
    end_field();
    records.push_back(std::move(fields));
    fields.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty() && !field_started_quoted) {
      in_quotes = true;
      field_started_quoted = true;
    } else if (c == delim) {
      end_field();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_record();
      ++line;
    } else {
      field.push_back(c);
    }
  }
  require(!in_quotes, Errc::parse_error,
          "unterminated quoted field at end of input (line " +
              std::to_string(line) + ")");
  if (!field.empty() || !fields.empty()) end_record();
  return records;
}

double parse_double(const std::string& s, std::size_t row, std::size_t col) {
  errno = 0;
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  require(end == begin + s.size() && !s.empty() && errno != ERANGE,
          Errc::parse_error,
          "row " + std::to_string(row) + ", column " + std::to_string(col + 1) +
              ": not a number: '" + s + "'");
  return v;
}

}  // namespace

LocalDataset load_csv(const TabularSource& src) {
  std::ifstream in(src.path, std::ios::binary);
  require(in.good(), Errc::io_error, "cannot open " + src.path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::vector<std::vector<std::string>> records =
      parse_records(buf.str(), src.delimiter);
  require(!records.empty(), Errc::parse_error, src.path + ": missing header");

  const std::vector<std::string>& header = records.front();
  auto column_of = [&](const std::string& name) -> std::size_t {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (header[c] == name) return c;
    }
    fail(Errc::missing_column, src.path + ": no column named '" + name + "'");
  };

  std::size_t y_col = column_of(src.response);
  std::vector<std::size_t> x_cols;
  if (src.covariates.empty()) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c != y_col) x_cols.push_back(c);
    }
  } else {
    for (const std::string& name : src.covariates) {
      std::size_t c = column_of(name);
      require(c != y_col, Errc::invalid_spec,
              "response column listed among covariates");
      x_cols.push_back(c);
    }
  }
  require(!x_cols.empty(), Errc::invalid_spec, src.path + ": no covariates");

  std::size_t n = records.size() - 1;
  require(n >= 1, Errc::parse_error, src.path + ": no data rows");

  LocalDataset ds;
  ds.institution_id = src.path;
  ds.X.resize(static_cast<Eigen::Index>(n),
              static_cast<Eigen::Index>(x_cols.size() + 1));
  ds.X.col(0).setOnes();
  ds.y.resize(static_cast<Eigen::Index>(n));

  for (std::size_t r = 0; r < n; ++r) {
    const std::vector<std::string>& rec = records[r + 1];
    require(rec.size() == header.size(), Errc::parse_error,
            src.path + ": row " + std::to_string(r + 2) + " has " +
                std::to_string(rec.size()) + " fields, header has " +
                std::to_string(header.size()));
    const std::string& ytok = rec[y_col];
    double yv;
    if (auto it = src.response_mapping.find(ytok);
        it != src.response_mapping.end()) {
      yv = it->second;
    } else {
      require(src.response_mapping.empty(), Errc::non_binary_response,
              src.path + ": row " + std::to_string(r + 2) +
                  ": response '" + ytok + "' not in the supplied mapping");
      yv = parse_double(ytok, r + 2, y_col);
    }
    require(yv == 0.0 || yv == 1.0, Errc::non_binary_response,
            src.path + ": row " + std::to_string(r + 2) + ": response '" +
                ytok + "' is not 0/1");
    ds.y(static_cast<Eigen::Index>(r)) = yv;
    for (std::size_t k = 0; k < x_cols.size(); ++k) {
      ds.X(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k + 1)) =
          parse_double(rec[x_cols[k]], r + 2, x_cols[k]);
    }
  }
  return ds;
}

void write_csv(const LocalDataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), Errc::io_error, "cannot write " + path);
  out << "y";
  for (Eigen::Index k = 1; k < ds.X.cols(); ++k) {
    out << ",x" << k;
  }
  out << "\n";
  char buf[64];
  for (Eigen::Index i = 0; i < ds.rows(); ++i) {
    out << (ds.y(i) == 1.0 ? "1" : "0");
    for (Eigen::Index k = 1; k < ds.X.cols(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", ds.X(i, k));
      out << ',' << buf;
    }
    out << "\n";
  }
  require(out.good(), Errc::io_error, "write failed for " + path);
}

}  // namespace seclr
