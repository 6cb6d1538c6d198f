#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dcsplit/linalg.hpp"

namespace dcsplit {

struct ParseError : Error {
  using Error::Error;
};
struct MissingColumnError : Error {
  using Error::Error;
};
struct SingleClassError : Error {
  using Error::Error;
};

// Feature matrix plus +-1 labels. provenance records every transform applied
// so emitted tables can state how their data was produced.
struct Dataset {
  Matrix X;
  std::vector<int> y;  // strictly +1 / -1
  std::vector<std::string> feature_names;
  std::vector<std::string> provenance;

  std::size_t size() const { return X.rows; }

  Dataset select_rows(const std::vector<std::size_t>& idx) const {
    Dataset out;
    out.X = Matrix(idx.size(), X.cols);
    out.y.resize(idx.size());
    out.feature_names = feature_names;
    out.provenance = provenance;
    for (std::size_t r = 0; r < idx.size(); ++r) {
      for (std::size_t j = 0; j < X.cols; ++j) out.X(r, j) = X(idx[r], j);
      out.y[r] = y[idx[r]];
    }
    return out;
  }
};

struct SplitSpec {
  double test_fraction = 0.3;  // any value in (0,1)
  RngSeed seed;
  bool shuffle = true;
};

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_cell(const std::string& raw, std::size_t row,
                         const std::string& col) {
  const std::string s = trim(raw);
  if (s.empty())
    throw ParseError("row " + std::to_string(row) + ", column '" + col +
                     "': empty cell");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v))
    throw ParseError("row " + std::to_string(row) + ", column '" + col +
                     "': cannot parse '" + s + "' as a finite number");
  return v;
}

}  // namespace detail

// Comma-separated, first row header, decimal-point reals. Rows whose label
// cell equals positive_label_value map to +1, everything else to -1.
inline Dataset load_csv(const std::string& path,
                        const std::string& label_column,
                        double positive_label_value) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) throw ParseError("'" + path + "' is empty");
  const auto header = detail::split_csv_line(line);
  std::size_t label_idx = header.size();
  std::vector<std::string> names;
  for (std::size_t j = 0; j < header.size(); ++j) {
    const std::string h = detail::trim(header[j]);
    if (h == label_column)
      label_idx = j;
    else
      names.push_back(h);
  }
  if (label_idx == header.size())
    throw MissingColumnError("label column '" + label_column +
                             "' not found in '" + path + "'");

  std::vector<double> values;
  std::vector<int> labels;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (detail::trim(line).empty()) continue;
    const auto cells = detail::split_csv_line(line);
    if (cells.size() != header.size())
      throw ParseError("row " + std::to_string(row) + ": expected " +
                       std::to_string(header.size()) + " cells, got " +
                       std::to_string(cells.size()));
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const double v = detail::parse_cell(cells[j], row, detail::trim(header[j]));
      if (j == label_idx)
        labels.push_back(v == positive_label_value ? 1 : -1);
      else
        values.push_back(v);
    }
  }
  if (labels.empty()) throw ParseError("'" + path + "' has no data rows");

  Dataset d;
  d.feature_names = names;
  d.y = std::move(labels);
  d.X = Matrix(d.y.size(), names.size());
  d.X.a = std::move(values);
  d.provenance.push_back("load_csv(" + path + ", label=" + label_column +
                         ", positive=" + std::to_string(positive_label_value) +
                         " -> +1, rest -> -1)");
  return d;
}

// Per-feature z-score using train statistics only (population std, divide by
// n). Zero-variance features map to 0 in both sets.
inline std::pair<Dataset, Dataset> standardize(const Dataset& train,
                                               const Dataset& test) {
  if (train.size() == 0) throw InvalidConfigError("standardize: empty train");
  if (test.size() > 0 && test.X.cols != train.X.cols)
    throw InvalidConfigError("standardize: feature count mismatch");
  const std::size_t d = train.X.cols;
  const double n = static_cast<double>(train.size());
  Vector mean(d, 0.0), std_dev(d, 0.0);
  for (std::size_t i = 0; i < train.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) mean[j] += train.X(i, j);
  for (std::size_t j = 0; j < d; ++j) mean[j] /= n;
  for (std::size_t i = 0; i < train.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double c = train.X(i, j) - mean[j];
      std_dev[j] += c * c;
    }
  for (std::size_t j = 0; j < d; ++j) std_dev[j] = std::sqrt(std_dev[j] / n);

  const auto apply = [&](const Dataset& in) {
    Dataset out = in;
    for (std::size_t i = 0; i < in.size(); ++i)
      for (std::size_t j = 0; j < d; ++j)
        out.X(i, j) = std_dev[j] > 0.0 ? (in.X(i, j) - mean[j]) / std_dev[j]
                                       : 0.0;
    out.provenance.push_back("standardize(train-stats, population-std)");
    return out;
  };
  return {apply(train), apply(test)};
}

// Balances a binary dataset: keeps every minority row and a seeded
// without-replacement sample of the majority class of the same size.
// Surviving rows keep their original order.
inline Dataset undersample_majority(const Dataset& data, RngSeed seed) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < data.size(); ++i)
    (data.y[i] == 1 ? pos : neg).push_back(i);
  if (pos.empty() || neg.empty())
    throw SingleClassError("undersample_majority: both classes required");

  const bool pos_is_minority = pos.size() <= neg.size();
  std::vector<std::size_t>& minority = pos_is_minority ? pos : neg;
  std::vector<std::size_t>& majority = pos_is_minority ? neg : pos;

  Rng rng(seed);
  // Partial Fisher-Yates: the first k entries become the sample.
  const std::size_t k = minority.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.uniform_index(majority.size() - i);
    std::swap(majority[i], majority[j]);
  }
  std::vector<std::size_t> keep(minority.begin(), minority.end());
  keep.insert(keep.end(), majority.begin(), majority.begin() + k);
  std::sort(keep.begin(), keep.end());

  Dataset out = data.select_rows(keep);
  out.provenance.push_back("undersample_majority(seed=" +
                           std::to_string(seed.value) + ", kept " +
                           std::to_string(k) + " per class)");
  return out;
}

// Seeded shuffle, then the first round-half-up(n * fraction) rows form the
// test set.
inline std::pair<Dataset, Dataset> train_test_split(const Dataset& data,
                                                    const SplitSpec& spec) {
  const std::size_t n = data.size();
  if (n < 2) throw InvalidConfigError("train_test_split: need at least 2 rows");
  if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0))
    throw InvalidConfigError("train_test_split: fraction must be in (0,1)");

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (spec.shuffle) {
    Rng rng(spec.seed);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const std::size_t j = i + rng.uniform_index(n - i);
      std::swap(idx[i], idx[j]);
    }
  }
  const std::size_t test_size = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * spec.test_fraction + 0.5));
  const std::vector<std::size_t> test_idx(idx.begin(), idx.begin() + test_size);
  const std::vector<std::size_t> train_idx(idx.begin() + test_size, idx.end());

  Dataset test = data.select_rows(test_idx);
  Dataset train = data.select_rows(train_idx);
  const std::string note = "train_test_split(fraction=" +
                           std::to_string(spec.test_fraction) +
                           ", seed=" + std::to_string(spec.seed.value) + ")";
  test.provenance.push_back(note + " [test]");
  train.provenance.push_back(note + " [train]");
  return {train, test};
}

}  // namespace dcsplit
