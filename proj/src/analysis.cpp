#include "pufkit/analysis.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "pufkit/errors.hpp"
#include "pufkit/kernels.hpp"

namespace pufkit {

namespace {

bool parallel_disabled() {
  const char* v = std::getenv("PUFKIT_NO_PARALLEL");
  return v != nullptr && std::strcmp(v, "0") != 0;
}

void append_fraction(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  out += buf;
}

HDReport distance_over_range(const Trace& a, const Trace& b, bool exclude_prefix) {
  const std::size_t first = exclude_prefix ? a.geometry().forced_zero_bits() : 0;
  const std::size_t last = a.bits().size();
  HDReport report;
  report.excluded_prefix = exclude_prefix;
  report.compared_bits = last - first;
  report.distance =
      kernels::xor_popcount_range(a.bits().words(), b.bits().words(), first, last);
  return report;
}

}  // namespace

HDReport hamming_distance(const Trace& a, const Trace& b, bool exclude_prefix) {
  if (!(a.geometry() == b.geometry()) || a.bits().size() != b.bits().size())
    throw Error("hamming distance requires equal geometries: " + a.id().label() + " vs " +
                b.id().label());
  return distance_over_range(a, b, exclude_prefix);
}

std::vector<std::pair<std::uint32_t, HDReport>> within_class(const TraceSet& ts,
                                                             bool exclude_prefix) {
  const Trace* reference = ts.find(0);
  if (reference == nullptr) throw Error("no enrollment reference (measurement 0) in " +
                                        ts.device_id() + "/" + ts.region_id());
  if (ts.size() < 2) throw Error("within-class comparison needs at least 2 traces");

  std::vector<std::pair<std::uint32_t, HDReport>> reports;
  reports.reserve(ts.size() - 1);
  for (const Trace& t : ts.traces()) {
    if (t.id().measurement_index == 0) continue;
    reports.emplace_back(t.id().measurement_index,
                         distance_over_range(t, *reference, exclude_prefix));
  }
  return reports;
}

HDMatrix between_class(std::span<const Trace> traces, bool exclude_prefix) {
  if (traces.size() < 2) throw Error("between-class comparison needs at least 2 traces");
  const RegionGeometry& geometry = traces[0].geometry();
  for (const Trace& t : traces)
    if (!(t.geometry() == geometry))
      throw Error("between-class comparison mixes geometries: " + traces[0].id().label() +
                  " vs " + t.id().label());

  const std::size_t n = traces.size();
  HDMatrix m;
  m.labels.reserve(n);
  for (const Trace& t : traces) m.labels.push_back(t.id());
  m.values.assign(n * n, 0.0);

  // All unordered pairs, flattened so threads can grab disjoint chunks.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  const auto compute = [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    const double f = distance_over_range(traces[i], traces[j], exclude_prefix).fractional();
    m.values[i * n + j] = f;
    m.values[j * n + i] = f;
  };

  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (parallel_disabled() || workers == 1 || pairs.size() < 64) {
    for (std::size_t p = 0; p < pairs.size(); ++p) compute(p);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t p = next.fetch_add(1); p < pairs.size(); p = next.fetch_add(1))
          compute(p);
      });
    }
    for (std::thread& t : pool) t.join();
  }
  return m;
}

std::string HDMatrix::to_csv() const {
  const std::size_t n = labels.size();
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) out += ',';
    out += labels[i].label();
  }
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out += ',';
      append_fraction(out, at(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string within_class_csv(std::span<const std::pair<std::uint32_t, HDReport>> reports) {
  std::string out = "measurement_index,compared_bits,distance,fractional\n";
  for (const auto& [index, report] : reports) {
    out += std::to_string(index);
    out += ',';
    out += std::to_string(report.compared_bits);
    out += ',';
    out += std::to_string(report.distance);
    out += ',';
    append_fraction(out, report.fractional());
    out += '\n';
  }
  return out;
}

double bias(const CellStatistics& cs, std::size_t skip_prefix_cells) {
  if (cs.n_measurements < 1) throw Error("no measurements");
  if (skip_prefix_cells >= cs.cell_count()) throw Error("no cells left after prefix skip");
  double sum = 0.0;
  for (std::size_t i = skip_prefix_cells; i < cs.cell_count(); ++i)
    sum += static_cast<double>(cs.ones_count[i]);
  return sum / (static_cast<double>(cs.cell_count() - skip_prefix_cells) *
                static_cast<double>(cs.n_measurements));
}

double min_entropy_per_bit(const CellStatistics& cs, std::size_t skip_prefix_cells) {
  if (cs.n_measurements < 2)
    throw Error("min-entropy estimation needs at least 2 measurements");
  if (skip_prefix_cells >= cs.cell_count()) throw Error("no cells left after prefix skip");
  const double clamp = 1.0 / (2.0 * cs.n_measurements);
  double sum = 0.0;
  for (std::size_t i = skip_prefix_cells; i < cs.cell_count(); ++i) {
    double f = cs.ones_fraction(i);
    f = std::min(std::max(f, clamp), 1.0 - clamp);
    sum += -std::log2(std::max(f, 1.0 - f));
  }
  return sum / static_cast<double>(cs.cell_count() - skip_prefix_cells);
}

}  // namespace pufkit
