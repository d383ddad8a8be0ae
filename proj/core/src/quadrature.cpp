#include "gdec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gdec {

namespace {

// Gauss(7)/Kronrod(15) abscissae on [0,1] half-interval and weights
// (QUADPACK constants). Even entries are the Gauss subset.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double integral;
  double error;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b,
                   long& evals) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  evals += 15;

  double kron = kWk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    kron += kWk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  kron *= h;
  gauss *= h;
  return {kron, std::abs(kron - gauss)};
}

constexpr int kMaxDepth = 52;
constexpr long kMaxPanels = 4'000'000;

struct Panel {
  double a, b;
  int depth;
  PanelEstimate est;
};

}  // namespace

QuadratureResult integrate_1d(const std::function<double(double)>& f,
                              double a, double b, double rel_tol,
                              double max_frequency) {
  if (!(rel_tol >= 1e-13))
    throw std::domain_error("integrate_1d: rel_tol must be >= 1e-13");
  if (a == b) return {0.0, 0.0, 0, true};

  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }

  // Oscillation guard: initial panels at most half the shortest period wide.
  long n0 = 1;
  if (max_frequency > 0.0) {
    const double cap = std::numbers::pi / max_frequency;
    n0 = std::max<long>(1, static_cast<long>(std::ceil((b - a) / cap)));
    n0 = std::min<long>(n0, kMaxPanels / 2);
  }

  QuadratureResult res;
  std::vector<Panel> stack;
  stack.reserve(static_cast<size_t>(n0) + 64);
  double first_pass = 0.0, first_pass_abs = 0.0;
  for (long i = n0 - 1; i >= 0; --i) {
    const double pa = a + (b - a) * static_cast<double>(i) / n0;
    const double pb = a + (b - a) * static_cast<double>(i + 1) / n0;
    const PanelEstimate est = gk15(f, pa, pb, res.evaluations);
    first_pass += est.integral;
    first_pass_abs += std::abs(est.integral);
    stack.push_back({pa, pb, 0, est});
  }

  const double scale = std::max(std::abs(first_pass), 1e-3 * first_pass_abs);
  const double tol_abs = std::max(rel_tol * scale, 1e-300);
  const double total_width = b - a;

  long panels_done = 0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double budget = tol_abs * ((p.b - p.a) / total_width);
    if (p.est.error <= budget || p.depth >= kMaxDepth ||
        ++panels_done > kMaxPanels) {
      if (p.est.error > budget) res.converged = false;
      res.value += p.est.integral;
      res.abs_error_estimate += p.est.error;
      continue;
    }
    const double mid = 0.5 * (p.a + p.b);
    const PanelEstimate right = gk15(f, mid, p.b, res.evaluations);
    const PanelEstimate left = gk15(f, p.a, mid, res.evaluations);
    stack.push_back({mid, p.b, p.depth + 1, right});
    stack.push_back({p.a, mid, p.depth + 1, left});
  }

  if (!std::isfinite(res.value)) res.converged = false;
  res.value *= sign;
  return res;
}

namespace {

PanelEstimate gk2d(const std::function<double(double, double)>& f,
                   const Rect& r, long& evals) {
  const double cx = 0.5 * (r.ax + r.bx), hx = 0.5 * (r.bx - r.ax);
  const double cy = 0.5 * (r.ay + r.by), hy = 0.5 * (r.by - r.ay);
  double xs[15], fv[15][15];
  for (int i = 0; i < 7; ++i) {
    xs[i] = -kXgk[i];
    xs[14 - i] = kXgk[i];
  }
  xs[7] = 0.0;
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j)
      fv[i][j] = f(cx + hx * xs[i], cy + hy * xs[j]);
  evals += 225;

  const auto wk = [](int i) { return kWk[i < 8 ? i : 14 - i]; };
  double kron = 0.0;
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j) kron += wk(i) * wk(j) * fv[i][j];
  kron *= hx * hy;

  // Gauss subset: odd K indices plus the center.
  const int gidx[7] = {1, 3, 5, 7, 9, 11, 13};
  const auto wg = [](int i) { return kWg[i < 4 ? i : 6 - i]; };
  double gauss = 0.0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      gauss += wg(i) * wg(j) * fv[gidx[i]][gidx[j]];
  gauss *= hx * hy;

  return {kron, std::abs(kron - gauss)};
}

struct Panel2 {
  Rect r;
  int depth;
  PanelEstimate est;
};

}  // namespace

QuadratureResult integrate_2d(const std::function<double(double, double)>& f,
                              const Rect& r, double rel_tol,
                              double max_frequency) {
  if (!(rel_tol >= 1e-13))
    throw std::domain_error("integrate_2d: rel_tol must be >= 1e-13");
  if (r.ax >= r.bx || r.ay >= r.by)
    throw std::domain_error("integrate_2d: degenerate or reversed rectangle");

  long nx = 1, ny = 1;
  if (max_frequency > 0.0) {
    const double cap = std::numbers::pi / max_frequency;
    nx = std::max<long>(1, static_cast<long>(std::ceil((r.bx - r.ax) / cap)));
    ny = std::max<long>(1, static_cast<long>(std::ceil((r.by - r.ay) / cap)));
    nx = std::min<long>(nx, 2048);
    ny = std::min<long>(ny, 2048);
  }

  QuadratureResult res;
  std::vector<Panel2> stack;
  double first_pass = 0.0, first_pass_abs = 0.0;
  for (long i = nx - 1; i >= 0; --i) {
    for (long j = ny - 1; j >= 0; --j) {
      Rect sub{r.ax + (r.bx - r.ax) * static_cast<double>(i) / nx,
               r.ax + (r.bx - r.ax) * static_cast<double>(i + 1) / nx,
               r.ay + (r.by - r.ay) * static_cast<double>(j) / ny,
               r.ay + (r.by - r.ay) * static_cast<double>(j + 1) / ny};
      const PanelEstimate est = gk2d(f, sub, res.evaluations);
      first_pass += est.integral;
      first_pass_abs += std::abs(est.integral);
      stack.push_back({sub, 0, est});
    }
  }

  const double scale = std::max(std::abs(first_pass), 1e-3 * first_pass_abs);
  const double tol_abs = std::max(rel_tol * scale, 1e-300);
  const double total_area = (r.bx - r.ax) * (r.by - r.ay);

  long panels_done = 0;
  while (!stack.empty()) {
    const Panel2 p = stack.back();
    stack.pop_back();
    const double area = (p.r.bx - p.r.ax) * (p.r.by - p.r.ay);
    const double budget = tol_abs * (area / total_area);
    if (p.est.error <= budget || p.depth >= kMaxDepth ||
        ++panels_done > kMaxPanels / 64) {
      if (p.est.error > budget) res.converged = false;
      res.value += p.est.integral;
      res.abs_error_estimate += p.est.error;
      continue;
    }
    const Rect& q = p.r;
    Rect c1, c2;
    if (q.bx - q.ax >= q.by - q.ay) {
      const double mid = 0.5 * (q.ax + q.bx);
      c1 = {mid, q.bx, q.ay, q.by};
      c2 = {q.ax, mid, q.ay, q.by};
    } else {
      const double mid = 0.5 * (q.ay + q.by);
      c1 = {q.ax, q.bx, mid, q.by};
      c2 = {q.ax, q.bx, q.ay, mid};
    }
    const PanelEstimate e1 = gk2d(f, c1, res.evaluations);
    const PanelEstimate e2 = gk2d(f, c2, res.evaluations);
    stack.push_back({c1, p.depth + 1, e1});
    stack.push_back({c2, p.depth + 1, e2});
  }

  if (!std::isfinite(res.value)) res.converged = false;
  return res;
}

QuadratureResult integrate_2d_piecewise(
    const std::function<double(double, double)>& f,
    std::span<const Rect> subdomains, double rel_tol, double max_frequency) {
  QuadratureResult total;
  for (const Rect& r : subdomains) {
    const QuadratureResult part = integrate_2d(f, r, rel_tol, max_frequency);
    total.value += part.value;
    total.abs_error_estimate += part.abs_error_estimate;
    total.evaluations += part.evaluations;
    total.converged = total.converged && part.converged;
  }
  return total;
}

double find_root_bracketed(const std::function<double(double)>& g, double lo,
                           double hi, double tol) {
  if (!(lo < hi))
    throw std::invalid_argument("find_root_bracketed: lo must be < hi");
  double glo = g(lo), ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if (glo * ghi > 0.0)
    throw std::invalid_argument("find_root_bracketed: no sign change on bracket");

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket exhausted in precision
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if (glo * gm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      glo = gm;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<GaussNode> gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
  std::vector<GaussNode> nodes(static_cast<size_t>(n));
  const int half = (n + 1) / 2;
  for (int k = 0; k < half; ++k) {
    // Newton iteration from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<size_t>(k)] = {-x, w};
    nodes[static_cast<size_t>(n - 1 - k)] = {x, w};
  }
  if (n % 2 == 1) nodes[static_cast<size_t>(n / 2)].x = 0.0;
  return nodes;
}

}  // namespace gdec
