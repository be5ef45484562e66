#include "zdl/zeros.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "zdl/gamma.hpp"
#include "zdl/zeta.hpp"

namespace zdl {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;
constexpr long double kLogPiL = 1.144729885849400174143427351353058712L;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Generated by tools/gen_riemann_siegel_coeffs.py; powers of z = 2p - 1.
constexpr std::array<double, 47> kC0 = {
    3.8268343236508977173e-1, 0.0, 4.3724046807752044936e-1,
    0.0, 1.3237657548034352332e-1, 0.0,
    -1.3605026047674188655e-2, 0.0, -1.3567621970103580888e-2,
    0.0, -1.6237253231444652829e-3, 0.0,
    2.9705353733379690783e-4, 0.0, 7.943300879521469588e-5,
    0.0, 4.6556124614504505037e-7, 0.0,
    -1.4327251630955105754e-6, 0.0, -1.0354847112312946075e-7,
    0.0, 1.2357927083861738056e-8, 0.0,
    1.7881083857954904986e-9, 0.0, -3.3914143899270359069e-11,
    0.0, -1.6326633902565905101e-11, 0.0,
    -3.7851093185412203829e-13, 0.0, 9.3274232592017248457e-14,
    0.0, 5.2218430159781368553e-15, 0.0,
    -3.3506730727442637895e-16, 0.0, -3.4124265228117264941e-17,
    0.0, 5.7512033414323991603e-19, 0.0,
    1.4895301363211505455e-19, 0.0, 1.2565372717021416853e-21,
    0.0, -4.721295250143425669e-22,
};
constexpr std::array<double, 48> kC1 = {
    0.0, -2.682510262837534703e-2, 0.0,
    1.378477342635185305e-2, 0.0, 3.8491250482235082229e-2,
    0.0, 9.871066299062076472e-3, 0.0,
    -3.3107597608584043329e-3, 0.0, -1.4647808577954150825e-3,
    0.0, -1.3207940624876963675e-5, 0.0,
    5.9227487018471413232e-5, 0.0, 5.9802425853734485877e-6,
    0.0, -9.6413224561698263527e-7, 0.0,
    -1.833473372271441176e-7, 0.0, 4.4670875627178335996e-9,
    0.0, 2.7096350821772743217e-9, 0.0,
    7.7852886543158510463e-11, 0.0, -2.3437626010893688532e-11,
    0.0, -1.5830172789987521642e-12, 0.0,
    1.2119941573723791247e-13, 0.0, 1.4583781161108307018e-14,
    0.0, -2.8786305258131917505e-16, 0.0,
    -8.6628629021237241225e-17, 0.0, -8.4307227271370412716e-19,
    0.0, 3.6308072230973462002e-19, 0.0,
    1.1626698212838296719e-20, 0.0, -1.0975486711527531816e-21,
};
constexpr std::array<double, 51> kC2 = {
    5.1885428302931684938e-3, 0.0, 3.0946583880634746033e-4,
    0.0, -1.1335941078229373382e-2, 0.0,
    2.2330457419581447721e-3, 0.0, 5.1966374088623302051e-3,
    0.0, 3.4399144076208336695e-4, 0.0,
    -5.9106484274705828217e-4, 0.0, -1.0229972547935857454e-4,
    0.0, 2.0888392216992755408e-5, 0.0,
    5.9276654930965359579e-6, 0.0, -1.6423838362436275978e-7,
    0.0, -1.5161199700940682862e-7, 0.0,
    -5.9078036982066679629e-9, 0.0, 2.0911514859478188978e-9,
    0.0, 1.7815649583292351054e-10, 0.0,
    -1.6164072455353830753e-11, 0.0, -2.3806962496667615707e-12,
    0.0, 5.3982652955425949182e-14, 0.0,
    1.9750142196969515273e-14, 0.0, 2.3332868732882634831e-16,
    0.0, -1.1187517610048080208e-16, 0.0,
    -4.1640094888837671885e-18, 0.0, 4.4460811092918830289e-19,
    0.0, 2.8546114783637144546e-20, 0.0,
    -1.1913231430037894305e-21, 0.0, -1.2981634360736498947e-22,
};
constexpr std::array<double, 52> kC3 = {
    0.0, -1.3397160907194569043e-3, 0.0,
    3.7442151363793937047e-3, 0.0, -1.330317891932146812e-3,
    0.0, -2.2654660765471787115e-3, 0.0,
    9.5484999985067304151e-4, 0.0, 6.0100384589636039121e-4,
    0.0, -1.0128858286776621953e-4, 0.0,
    -6.8657334492998256425e-5, 0.0, 5.9853667915385981593e-7,
    0.0, 3.331659851239947129e-6, 0.0,
    2.1919289102435081057e-7, 0.0, -7.8908842456814944106e-8,
    0.0, -9.4146850812952621517e-9, 0.0,
    9.5701162108834803019e-10, 0.0, 1.8763137453470662797e-10,
    0.0, -4.4378376793233993275e-12, 0.0,
    -2.2426738505617353248e-12, 0.0, -3.6276868657352436894e-14,
    0.0, 1.7639809550821581608e-14, 0.0,
    7.9607652467867777573e-16, 0.0, -9.4196514905896907639e-17,
    0.0, -7.1331038545696578246e-18, 0.0,
    3.2899105845546243212e-19, 0.0, 4.1807303748984592914e-20,
    0.0, -5.5505420716463337898e-22, 0.0,
    -1.7870441906260123859e-22,
};
constexpr std::array<double, 53> kC4 = {
    4.6483389361763381854e-4, 0.0, -1.005660736534047076e-3,
    0.0, 2.4044856573725793022e-4, 0.0,
    1.0283086149702321878e-3, 0.0, -7.6578610717556441866e-4,
    0.0, -2.0365286803084817621e-4, 0.0,
    2.3212290491068727895e-4, 0.0, 3.2602144243865197608e-5,
    0.0, -2.557906251794952514e-5, 0.0,
    -4.107464438915744754e-6, 0.0, 1.1781113640371293881e-6,
    0.0, 2.4456561422484578542e-7, 0.0,
    -2.391582476734432243e-8, 0.0, -7.5052142070357552885e-9,
    0.0, 1.3312279416258428193e-10, 0.0,
    1.3440626754225619719e-10, 0.0, 3.5137700424304859287e-12,
    0.0, -1.5191544533703919336e-12, 0.0,
    -8.9154176814470873055e-14, 0.0, 1.1195891165228535773e-14,
    0.0, 1.0516013329914814964e-15, 0.0,
    -5.1786552736466836615e-17, 0.0, -8.0658748619165660515e-18,
    0.0, 1.060820453056396595e-19, 0.0,
    4.4336806742994087278e-20, 0.0, 4.3200511470350152435e-22,
    0.0, -1.8230389229596893305e-22,
};

template <std::size_t L>
double horner(const std::array<double, L>& c, double z) {
  double r = 0.0;
  for (std::size_t i = L; i-- > 0;) r = r * z + c[i];
  return r;
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

long double riemann_siegel_theta_ext(double t) {
  const ComplexL lg = log_gamma_ext(ComplexL(0.25L, static_cast<long double>(t) / 2.0L));
  return lg.imag() - static_cast<long double>(t) / 2.0L * kLogPiL;
}

double riemann_siegel_theta(double t) { return static_cast<double>(riemann_siegel_theta_ext(t)); }

namespace {

// (Re, Im) of e^{i theta} zeta(1/2 + it).
std::pair<double, double> rotated_zeta(double t) {
  require(std::isfinite(t), ErrorKind::input_domain, "hardy_Z: non-finite t");
  require(t >= 2.0, ErrorKind::domain, "hardy_Z: requires t >= 2");
  const long double th = std::remainder(riemann_siegel_theta_ext(t), 2.0L * kPiL);
  const double c = static_cast<double>(std::cos(th));
  const double s = static_cast<double>(std::sin(th));
  const Complex z = zeta_reference(Complex(0.5, t));
  return {c * z.real() - s * z.imag(), s * z.real() + c * z.imag()};
}

}  // namespace

double hardy_Z(double t) {
  const auto [re, im] = rotated_zeta(t);
  require(std::abs(im) < 1e-8, ErrorKind::numerical,
          "hardy_Z: imaginary residue " + fmt(im) + " exceeds 1e-8 at t = " + fmt(t));
  return re;
}

double hardy_Z_residue(double t) { return rotated_zeta(t).second; }

double hardy_Z_rs(double t, int terms) {
  require(std::isfinite(t), ErrorKind::input_domain, "hardy_Z_rs: non-finite t");
  require(t >= 2.0 * std::numbers::pi, ErrorKind::domain, "hardy_Z_rs: requires t >= 2 pi");
  require(terms >= 0 && terms <= 5, ErrorKind::input_domain,
          "hardy_Z_rs: terms must be in 0..5");
  const double tau = std::sqrt(t / (2.0 * std::numbers::pi));
  const auto N = static_cast<std::int64_t>(std::floor(tau));
  const long double th = std::remainder(riemann_siegel_theta_ext(t), 2.0L * kPiL);
  const double thd = static_cast<double>(th);
  const auto logs = split_log_table(N);
  double sum = 0.0;
  for (std::int64_t n = 1; n <= N; ++n) {
    const SplitLog& l = (*logs)[static_cast<std::size_t>(n)];
    sum += std::cos(thd - reduced_phase(t, l)) / std::sqrt(static_cast<double>(n));
  }
  sum *= 2.0;
  const double p = tau - static_cast<double>(N);
  const double z = 2.0 * p - 1.0;
  const double a = 1.0 / tau;
  double corr = 0.0;
  double ap = 1.0;
  const std::array<double, 5> cj = {horner(kC0, z), horner(kC1, z), horner(kC2, z),
                                    horner(kC3, z), horner(kC4, z)};
  for (int j = 0; j < terms; ++j) {
    corr += cj[static_cast<std::size_t>(j)] * ap;
    ap *= a;
  }
  const double sgn = (N - 1) % 2 == 0 ? 1.0 : -1.0;
  return sum + sgn * std::sqrt(a) * corr;
}

double hardy_Z_fast(double t) {
  return t >= kRiemannSiegelFrom ? hardy_Z_rs(t) : hardy_Z(t);
}

std::int64_t ZeroTable::count_upto(double t) const {
  const auto it = std::upper_bound(records.begin(), records.end(), t,
                                   [](double x, const ZeroRecord& r) { return x < r.gamma; });
  return static_cast<std::int64_t>(it - records.begin());
}

double zero_count_main_term(double t) {
  return static_cast<double>(riemann_siegel_theta_ext(t) / kPiL) + 1.0;
}

void validate_completeness(const ZeroTable& table) {
  const auto& r = table.records;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double main = zero_count_main_term(r[i].gamma);
    const double before = static_cast<double>(i);
    const double after = static_cast<double>(i + 1);
    if (std::abs(before - main) > kCountTolerance || std::abs(after - main) > kCountTolerance) {
      const double lo = i == 0 ? 0.0 : r[i - 1].gamma;
      fail(ErrorKind::incomplete,
           "zero table incomplete on (" + fmt(lo) + ", " + fmt(r[i].gamma) + "]: count " +
               std::to_string(i + 1) + " vs main term " + fmt(main) + " (tolerance 3)");
    }
  }
  if (table.t_max > 0.0) {
    const double main = zero_count_main_term(table.t_max);
    const auto n = static_cast<double>(table.count_upto(table.t_max));
    if (std::abs(n - main) > kCountTolerance) {
      const double lo = r.empty() ? 0.0 : r.back().gamma;
      fail(ErrorKind::incomplete,
           "zero table incomplete on (" + fmt(lo) + ", " + fmt(table.t_max) + "]: count " +
               fmt(n) + " vs main term " + fmt(main) + " (tolerance 3)");
    }
  }
}

namespace {

double bisect(double a, double b, double fa) {
  while (b - a > kBisectTol) {
    const double m = 0.5 * (a + b);
    const double fm = hardy_Z_fast(m);
    if (fm == 0.0) return m;
    if (sign_of(fm) == sign_of(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

ZeroTable find_zeros(double T) {
  require(std::isfinite(T), ErrorKind::input_domain, "find_zeros: non-finite T");
  require(T >= 10.0 && T <= 1e6, ErrorKind::domain, "find_zeros: requires 10 <= T <= 1e6");
  const double t0 = 10.0;
  const auto K = static_cast<std::int64_t>(std::floor((T - t0) / kScanStep)) + 1;
  std::vector<double> ts(static_cast<std::size_t>(K));
  for (std::int64_t k = 0; k < K; ++k) ts[static_cast<std::size_t>(k)] = t0 + static_cast<double>(k) * kScanStep;
  if (ts.back() < T) ts.push_back(T);
  const auto n = static_cast<std::int64_t>(ts.size());
  std::vector<double> z(ts.size());
  split_log_table(static_cast<std::int64_t>(std::sqrt(T)) + 2);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) z[static_cast<std::size_t>(k)] = hardy_Z_fast(ts[static_cast<std::size_t>(k)]);

  // Brackets from sign changes, plus close pairs hiding between samples:
  // a local minimum of |Z| with no sign change is rescanned finely.
  std::vector<std::pair<double, double>> brackets;
  for (std::int64_t k = 0; k + 1 < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (z[i] == 0.0) {
      brackets.push_back({ts[i], ts[i]});
      continue;
    }
    if (sign_of(z[i]) * sign_of(z[i + 1]) < 0) brackets.push_back({ts[i], ts[i + 1]});
    if (k >= 1 && sign_of(z[i - 1]) == sign_of(z[i]) && sign_of(z[i]) == sign_of(z[i + 1]) &&
        std::abs(z[i]) < std::abs(z[i - 1]) && std::abs(z[i]) <= std::abs(z[i + 1])) {
      constexpr int kSub = 200;
      const double a = ts[i - 1];
      const double h = (ts[i + 1] - a) / kSub;
      double fa = z[i - 1];
      for (int j = 1; j <= kSub; ++j) {
        const double tb = j == kSub ? ts[i + 1] : a + j * h;
        const double fb = j == kSub ? z[i + 1] : hardy_Z_fast(tb);
        if (sign_of(fa) * sign_of(fb) < 0) brackets.push_back({a + (j - 1) * h, tb});
        fa = fb;
      }
    }
  }
  if (z.back() == 0.0) brackets.push_back({ts.back(), ts.back()});
  std::sort(brackets.begin(), brackets.end());

  std::vector<double> gammas(brackets.size());
  const auto nb = static_cast<std::int64_t>(brackets.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t b = 0; b < nb; ++b) {
    const auto [a, c] = brackets[static_cast<std::size_t>(b)];
    gammas[static_cast<std::size_t>(b)] = a == c ? a : bisect(a, c, hardy_Z_fast(a));
  }
  std::sort(gammas.begin(), gammas.end());
  gammas.erase(std::unique(gammas.begin(), gammas.end(),
                           [](double x, double y) { return std::abs(x - y) < 1e-7; }),
               gammas.end());

  ZeroTable table;
  table.t_max = T;
  for (double g : gammas) {
    const double v = hardy_Z_fast(g);
    require(std::abs(v) < 1e-6, ErrorKind::numerical,
            "find_zeros: |Z| = " + fmt(v) + " at refined zero " + fmt(g));
    table.records.push_back({g, ZeroSource::computed});
  }
  validate_completeness(table);
  return table;
}

ZeroTable parse_zeros(const std::string& text) {
  ZeroTable table;
  std::istringstream in(text);
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string tok = line.substr(b, e - b + 1);
    double g = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), g);
    require(res.ec == std::errc() && res.ptr == tok.data() + tok.size() && std::isfinite(g),
            ErrorKind::parse,
            "zero table: cannot parse ordinate at line " + std::to_string(lineno));
    require(g > 0.0, ErrorKind::order_violation,
            "zero table: nonpositive ordinate at line " + std::to_string(lineno));
    require(table.records.empty() || g > table.records.back().gamma,
            ErrorKind::order_violation,
            "zero table: ordinates not strictly ascending at line " + std::to_string(lineno));
    table.records.push_back({g, ZeroSource::ingested});
  }
  table.t_max = table.records.empty() ? 0.0 : table.records.back().gamma;
  validate_completeness(table);
  return table;
}

ZeroTable ingest_zeros(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(static_cast<bool>(f), ErrorKind::io, "zero table: cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_zeros(ss.str());
}

ZeroCount count_N(const ZeroTable& table, double sigma, double T) {
  require(std::isfinite(sigma) && std::isfinite(T), ErrorKind::input_domain,
          "count_N: non-finite argument");
  require(T <= table.t_max, ErrorKind::horizon,
          "count_N: T = " + fmt(T) + " beyond table horizon " + fmt(table.t_max));
  ZeroCount c;
  c.value = sigma <= 0.5 ? 2 * table.count_upto(T) : 0;
  c.note =
      "RH-verified desk regime: every zero with |gamma| <= " + fmt(table.t_max) +
      " taken on Re s = 1/2 and simple; +-gamma both counted";
  return c;
}

std::int64_t box_count(const ZeroTable& table, double U) {
  require(std::isfinite(U), ErrorKind::input_domain, "box_count: non-finite U");
  require(std::max(std::abs(U), std::abs(U + 1.0)) <= table.t_max, ErrorKind::horizon,
          "box_count: box [" + fmt(U) + ", " + fmt(U + 1.0) + "] beyond table horizon " +
              fmt(table.t_max));
  std::int64_t n = 0;
  for (const auto& r : table.records) {
    if (r.gamma >= U && r.gamma <= U + 1.0) ++n;
    if (-r.gamma >= U && -r.gamma <= U + 1.0) ++n;
  }
  return n;
}

double partial_fraction_residual(const ZeroTable& table, double sigma1, double u) {
  require(std::isfinite(sigma1) && std::isfinite(u), ErrorKind::input_domain,
          "partial_fraction_residual: non-finite argument");
  require(sigma1 >= -1.0 && sigma1 <= 2.0, ErrorKind::domain,
          "partial_fraction_residual: requires sigma1 in [-1, 2]");
  require(std::abs(u) >= 2.0, ErrorKind::domain,
          "partial_fraction_residual: requires |u| >= 2");
  require(std::abs(u) <= table.t_max - 1.0, ErrorKind::horizon,
          "partial_fraction_residual: |u| beyond table horizon minus 1");
  const Complex s(sigma1, u);
  Complex sum{};
  for (const auto& r : table.records) {
    for (double g : {r.gamma, -r.gamma}) {
      const Complex rho(0.5, g);
      const double d = std::abs(s - rho);
      require(d > 1e-3, ErrorKind::conditioning,
              "partial_fraction_residual: distance " + fmt(d) + " to zero at gamma = " + fmt(g));
      if (std::abs(g - u) <= 1.0) sum += 1.0 / (s - rho);
    }
  }
  return std::abs(log_deriv_zeta(s) - sum);
}

std::optional<NearbyZero> nearby_zero(const ZeroTable& table, double sigma, double t,
                                      double T) {
  require(std::isfinite(sigma) && std::isfinite(t) && std::isfinite(T),
          ErrorKind::input_domain, "nearby_zero: non-finite argument");
  require(T > std::exp(1.0), ErrorKind::domain, "nearby_zero: requires T > e");
  require(T <= table.t_max, ErrorKind::horizon,
          "nearby_zero: T = " + fmt(T) + " beyond table horizon " + fmt(table.t_max));
  require(sigma >= 0.5 && sigma <= 1.0, ErrorKind::domain,
          "nearby_zero: requires sigma in [1/2, 1]");
  require(std::abs(t) <= T, ErrorKind::domain, "nearby_zero: requires |t| <= T");
  const double L = std::log(T);
  const double width = 1.0 / std::sqrt(std::log(L));
  if (0.5 < sigma - width) return std::nullopt;
  const double h = L * L / 4.0;
  std::optional<NearbyZero> best;
  for (const auto& r : table.records) {
    for (double g : {r.gamma, -r.gamma}) {
      const double d = std::abs(g - t);
      if (d <= h && (!best || d < best->distance)) best = NearbyZero{g, d};
    }
  }
  return best;
}

}  // namespace zdl
