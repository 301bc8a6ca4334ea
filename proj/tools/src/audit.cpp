#include "ellint_tools/audit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "ellint/errors.hpp"
#include "ellint/reference.hpp"
#include "ellint_tools/io.hpp"
#include "json.hpp"

namespace ellint::tools {

namespace {

enum class State { sound, violated, skipped };

struct Outcome {
  State state = State::skipped;
  bool positive = false;
  double margin = 0.0;
};

std::vector<double> grid(double step) {
  std::vector<double> out;
  for (int i = 1;; ++i) {
    const double v = i * step;
    if (v >= 1.0 - 1e-12) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace

long AuditReport::total_violations() const noexcept {
  long n = 0;
  for (const auto& c : counts) n += c.violated;
  return n;
}

AuditReport run_audit(const AuditSpec& spec) {
  if (!(spec.step > 0.0 && spec.step <= 0.5)) {
    throw std::invalid_argument("audit: step must lie in (0, 0.5]");
  }
  if (spec.order_min > spec.order_max) {
    throw std::invalid_argument("audit: empty order range");
  }
  const auto axis = grid(spec.step);
  const std::size_t n = axis.size();
  const std::size_t orders = spec.order_max - spec.order_min + 1;
  const std::size_t per_point = spec.methods.size() * orders;
  std::vector<Outcome> outcomes(n * n * per_point);

  auto work = [&](std::size_t point) {
    const EvalPoint p(axis[point / n], axis[point % n]);
    const double f = reference_f(p);
    const double allowance = spec.tol * std::max(1.0, std::abs(f));
    Quality q;
    q.abs_tol = std::max(q.abs_tol, spec.tol);
    for (std::size_t m = 0; m < spec.methods.size(); ++m) {
      for (std::size_t o = 0; o < orders; ++o) {
        Outcome& out = outcomes[point * per_point + m * orders + o];
        try {
          const auto e = evaluate(p, spec.methods[m],
                                  spec.order_min + static_cast<unsigned>(o), q);
          if (!std::isfinite(e.err_lo) || !std::isfinite(e.err_hi)) continue;
          const double err = f - e.value;
          out.margin = std::min(err - e.err_lo, e.err_hi - err);
          out.state = out.margin >= -allowance ? State::sound : State::violated;
          out.positive = err > allowance;
        } catch (const std::domain_error&) {
          out.state = State::skipped;
        } catch (const ConvergenceError&) {
          out.state = State::violated;
          out.margin = -std::numeric_limits<double>::infinity();
        }
      }
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned threads = spec.threads == 0 ? hw : spec.threads;
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n * n; i = next++) work(i);
    });
  }
  for (auto& t : pool) t.join();

  AuditReport report;
  report.spec = spec;
  report.grid_points = static_cast<long>(n * n);
  for (std::size_t m = 0; m < spec.methods.size(); ++m) {
    for (std::size_t o = 0; o < orders; ++o) {
      AuditCounts c;
      c.method = spec.methods[m];
      c.order = spec.order_min + static_cast<unsigned>(o);
      c.worst_margin = std::numeric_limits<double>::infinity();
      for (std::size_t point = 0; point < n * n; ++point) {
        const Outcome& out = outcomes[point * per_point + m * orders + o];
        ++c.total;
        switch (out.state) {
          case State::sound:
            ++c.sound;
            break;
          case State::violated:
            ++c.violated;
            break;
          case State::skipped:
            ++c.skipped;
            continue;
        }
        if (out.positive) ++c.positive_remainder;
        if (out.margin < c.worst_margin) {
          c.worst_margin = out.margin;
          c.worst_lambda = axis[point / n];
          c.worst_k = axis[point % n];
        }
      }
      report.counts.push_back(c);
    }
  }
  return report;
}

void write_audit_text(std::ostream& os, const AuditReport& r) {
  os << "grid step " << r.spec.step << ", " << r.grid_points
     << " interior points\n";
  for (const auto& c : r.counts) {
    os << to_string(c.method) << " N=" << c.order << ": sound " << c.sound
       << ", violated " << c.violated << ", skipped " << c.skipped
       << ", positive remainder " << c.positive_remainder;
    if (c.sound + c.violated > 0) {
      os << ", worst margin " << format_number(c.worst_margin) << " at ("
         << c.worst_lambda << ", " << c.worst_k << ")";
    }
    os << '\n';
  }
}

void write_audit_csv(std::ostream& os, const AuditReport& r) {
  os << "method,order,total,sound,violated,skipped,positive_remainder,"
        "worst_margin,worst_lambda,worst_k\n";
  for (const auto& c : r.counts) {
    os << to_string(c.method) << ',' << c.order << ',' << c.total << ','
       << c.sound << ',' << c.violated << ',' << c.skipped << ','
       << c.positive_remainder << ',' << format_number(c.worst_margin) << ','
       << format_number(c.worst_lambda) << ',' << format_number(c.worst_k)
       << '\n';
  }
}

void write_audit_json(std::ostream& os, const AuditReport& r) {
  auto out = nlohmann::json::array();
  for (const auto& c : r.counts) {
    out.push_back({{"method", std::string(to_string(c.method))},
                   {"order", c.order},
                   {"step", r.spec.step},
                   {"total", c.total},
                   {"sound", c.sound},
                   {"violated", c.violated},
                   {"skipped", c.skipped},
                   {"positive_remainder", c.positive_remainder},
                   {"worst_margin", c.worst_margin},
                   {"worst_lambda", c.worst_lambda},
                   {"worst_k", c.worst_k}});
  }
  os << out.dump(2) << '\n';
}

}  // namespace ellint::tools
